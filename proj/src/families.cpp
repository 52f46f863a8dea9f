#include "steinobd/families.hpp"

#include <memory>

#include "steinobd/checked.hpp"
#include "steinobd/error.hpp"

namespace steinobd {

char variant_letter(Variant v) { return v == Variant::A ? 'A' : 'B'; }

namespace {

// Longest zigzag run we are willing to write out as a front word.
constexpr int64_t kMaxRotation = 1'000'000;

} // namespace

void validate(const FamilyParams& q) {
  if (q.m0 < 2) throw ParamError("m0 must be >= 2 (got " + std::to_string(q.m0) + ")");
  if (q.m1 < 1) throw ParamError("m1 must be >= 1 (got " + std::to_string(q.m1) + ")");
  if (q.m2 < 1) throw ParamError("m2 must be >= 1 (got " + std::to_string(q.m2) + ")");
  if (q.p < 1) throw ParamError("p must be >= 1 (got " + std::to_string(q.p) + ")");
  if (q.n < 0) throw ParamError("n must be >= 0 (got " + std::to_string(q.n) + ")");
  if (q.variant == Variant::A && q.m1 % 2 == 0)
    throw ParamError("variant A needs m1 odd (got " + std::to_string(q.m1) + ")");
  if (page_rotation(q) > kMaxRotation)
    throw ParamError("rotation number " + std::to_string(page_rotation(q)) +
                     " exceeds the supported front size");
}

std::vector<std::string> warnings(const FamilyParams& q) {
  std::vector<std::string> out;
  if (q.variant == Variant::B && q.m1 == 1)
    out.emplace_back("m1=1 degenerate: rotation divisor is m0-2 for every p");
  return out;
}

std::string describe(const FamilyParams& q) {
  return "variant=" + std::string(1, variant_letter(q.variant)) + " p=" + std::to_string(q.p) +
         " m=" + std::to_string(q.m0) + "," + std::to_string(q.m1) + "," + std::to_string(q.m2) +
         " n=" + std::to_string(q.n);
}

int64_t page_rotation(const FamilyParams& q) {
  const int64_t base = checked::sub(q.m0, 2);
  if (q.variant == Variant::A) return base;
  return checked::add(checked::mul(q.p, checked::sub(q.m1, 1)), base);
}

SteinHandlebody generate_page(const FamilyParams& params) {
  validate(params);
  const int64_t rot = page_rotation(params);
  auto front = std::make_shared<const OrientedFront>(OrientedFront::trace(
      concat(unknot_front(), stabilized_unknot_front(static_cast<int>(rot)))));
  std::vector<SteinHandle> handles;
  handles.emplace_back(-1, 0, HandleSource{front, 0, {}});
  handles.emplace_back(-1 - rot, rot, HandleSource{front, 1, {}});
  return SteinHandlebody(std::move(handles));
}

SteinHandlebody generate_Yn(int64_t n) {
  if (n < 1) throw ParamError("Y_n needs n >= 1 (got " + std::to_string(n) + ")");
  if (n > kMaxRotation) throw ParamError("Y_n size exceeds the supported front size");
  // One split front with n unknot components.
  std::vector<FrontEvent> events;
  events.reserve(2 * static_cast<std::size_t>(n));
  for (int64_t k = 0; k < n; ++k) {
    events.push_back({EventKind::LeftCusp, 1});
    events.push_back({EventKind::RightCusp, 1});
  }
  auto front = std::make_shared<const OrientedFront>(
      OrientedFront::trace(FrontDiagram(std::move(events))));
  std::vector<SteinHandle> handles;
  handles.reserve(static_cast<std::size_t>(n));
  for (int64_t k = 0; k < n; ++k)
    handles.emplace_back(-1, 0, HandleSource{front, static_cast<int>(k), {}});
  return SteinHandlebody(std::move(handles));
}

SteinHandlebody generate_sum(const FamilyParams& params) {
  if (params.n < 1) throw ParamError("boundary sum needs n >= 1 (got " + std::to_string(params.n) + ")");
  return boundary_connected_sum(generate_page(params), generate_Yn(params.n));
}

SteinHandlebody generate(const FamilyParams& params) {
  return params.n == 0 ? generate_page(params) : generate_sum(params);
}

} // namespace steinobd
