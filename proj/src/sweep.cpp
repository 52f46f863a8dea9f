#include "steinobd/sweep.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "steinobd/error.hpp"

namespace steinobd {

namespace {

SweepRow classify_one(const FamilyParams& params) {
  auto page = generate(params);
  auto c1 = c1_cochain(page);
  auto label = supported_contact(OpenBook5{std::move(page)});
  return {params, std::move(c1), label};
}

} // namespace

std::vector<SweepRow> classify_batch_serial(std::span<const FamilyParams> batch) {
  std::vector<SweepRow> rows;
  rows.reserve(batch.size());
  for (const auto& params : batch) rows.push_back(classify_one(params));
  return rows;
}

std::vector<SweepRow> classify_batch(std::span<const FamilyParams> batch) {
  const auto count = static_cast<std::ptrdiff_t>(batch.size());
  std::vector<std::optional<SweepRow>> slots(batch.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      slots[i] = classify_one(batch[i]);
    } catch (...) {
#pragma omp critical(steinobd_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

std::vector<FamilyParams> p_range(const FamilyParams& base, int64_t p_lo, int64_t p_hi) {
  if (p_lo < 1) throw ParamError("p must be >= 1 (got " + std::to_string(p_lo) + ")");
  if (p_hi < p_lo)
    throw ParamError("empty p range " + std::to_string(p_lo) + ".." + std::to_string(p_hi));
  std::vector<FamilyParams> out;
  out.reserve(static_cast<std::size_t>(p_hi - p_lo + 1));
  for (int64_t p = p_lo; p <= p_hi; ++p) {
    auto q = base;
    q.p = p;
    out.push_back(q);
  }
  return out;
}

LabelPattern label_pattern(std::span<const SweepRow> rows) {
  if (rows.size() <= 1) return LabelPattern::AllEqual;
  bool all_equal = std::all_of(rows.begin(), rows.end(),
                               [&](const SweepRow& r) { return r.label == rows.front().label; });
  if (all_equal) return LabelPattern::AllEqual;
  std::vector<ContactLabel> labels;
  labels.reserve(rows.size());
  for (const auto& r : rows) labels.push_back(r.label);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) == labels.end())
    return LabelPattern::PairwiseDistinct;
  return LabelPattern::Mixed;
}

const char* pattern_name(LabelPattern p) {
  switch (p) {
  case LabelPattern::AllEqual:
    return "all equal";
  case LabelPattern::PairwiseDistinct:
    return "pairwise distinct";
  case LabelPattern::Mixed:
    return "mixed";
  }
  return "?";
}

} // namespace steinobd
