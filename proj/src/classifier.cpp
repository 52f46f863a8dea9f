#include "steinobd/classifier.hpp"

#include "steinobd/error.hpp"

namespace steinobd {

const char* diffeo_name(Diffeo d) { return d == Diffeo::ConnSumS2xS3 ? "S2xS3" : "S2xtS3"; }

ContactLabel::ContactLabel(int64_t r, int64_t n) : r_(r), n_(n) {
  if (r < 0) throw ValidationError("rotation divisor must be >= 0");
  if (n < 1) throw ValidationError("b2 must be >= 1");
}

std::string ContactLabel::name() const {
  return "zeta_{" + std::to_string(r_) + "," + std::to_string(n_) + "}";
}

std::string ContactLabel::manifold() const {
  return "#" + std::to_string(n_) + " " + diffeo_name(diffeo());
}

ContactLabel supported_contact(const OpenBook5& ob) {
  return ContactLabel(rotation_divisor(ob.page), static_cast<int64_t>(ob.page.b2()));
}

bool contactomorphic(const OpenBook5& a, const OpenBook5& b) {
  return supported_contact(a) == supported_contact(b);
}

std::string difference(const OpenBook5& a, const OpenBook5& b) {
  const auto la = supported_contact(a), lb = supported_contact(b);
  if (la.n() != lb.n())
    return "b2 " + std::to_string(la.n()) + " != " + std::to_string(lb.n());
  if (la.r() != lb.r())
    return "rotation divisor " + std::to_string(la.r()) + " != " + std::to_string(lb.r());
  return {};
}

ContactLabel classify_family(const FamilyParams& params) {
  return supported_contact(OpenBook5{generate(params)});
}

ContactLabel closed_form_label(const FamilyParams& params) {
  validate(params);
  return ContactLabel(page_rotation(params), params.n + 2);
}

UnimodularMatrix witness_automorphism(const OpenBook5& a, const OpenBook5& b) {
  if (auto why = difference(a, b); !why.empty())
    throw MismatchError("open books are not contactomorphic: " + why);
  return automorphism_mapping(c1_cochain(a.page), c1_cochain(b.page));
}

} // namespace steinobd
