#pragma once

// Batch classification of family members. classify_batch runs the members
// in an OpenMP parallel loop; classify_batch_serial is the reference used by
// the tests and the benchmark. Output order always follows input order.

#include <cstdint>
#include <span>
#include <vector>

#include "steinobd/classifier.hpp"
#include "steinobd/families.hpp"

namespace steinobd {

struct SweepRow {
  FamilyParams params;
  IntVector c1;
  ContactLabel label;
};

std::vector<SweepRow> classify_batch(std::span<const FamilyParams> batch);
std::vector<SweepRow> classify_batch_serial(std::span<const FamilyParams> batch);

// base with p = p_lo..p_hi (inclusive).
std::vector<FamilyParams> p_range(const FamilyParams& base, int64_t p_lo, int64_t p_hi);

enum class LabelPattern { AllEqual, PairwiseDistinct, Mixed };

LabelPattern label_pattern(std::span<const SweepRow> rows);
const char* pattern_name(LabelPattern p);

} // namespace steinobd
