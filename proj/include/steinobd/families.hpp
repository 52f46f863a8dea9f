#pragma once

// Parametric Stein handlebodies X_p^(m), Y_n and their boundary sums.
//
// Two Stein structures are modelled on the same smooth X_p^(m):
//   variant A: attaching circles with rotation numbers 0 and m0 - 2
//              (requires m1 odd);
//   variant B: rotation numbers 0 and p(m1 - 1) + m0 - 2.
// Each attaching circle is realized as a stabilized Legendrian unknot with
// the required rotation number; the contact boundary of the open book only
// sees (rot vector, b2), so these carry the same classification data as the
// original diagrams. m2 never enters an invariant and is kept for reports.

#include <cstdint>
#include <string>
#include <vector>

#include "steinobd/handlebody.hpp"

namespace steinobd {

enum class Variant { A, B };

char variant_letter(Variant v);

struct FamilyParams {
  Variant variant = Variant::A;
  int64_t m0 = 2;
  int64_t m1 = 1;
  int64_t m2 = 1;
  int64_t p = 1;
  int64_t n = 0; // size of the Y_n summand, 0 for the bare page

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Throws ParamError naming the violated constraint.
void validate(const FamilyParams& params);

// Human-readable warnings (currently only the m1 = 1 degenerate case of B).
std::vector<std::string> warnings(const FamilyParams& params);

// "variant=A p=7 m=5,3,1 n=0"
std::string describe(const FamilyParams& params);

// Second rotation number of the page: m0 - 2 (A) or p(m1 - 1) + m0 - 2 (B).
int64_t page_rotation(const FamilyParams& params);

// b2 = 2 page; both handles sourced from one shared two-component front.
SteinHandlebody generate_page(const FamilyParams& params);

// n standard unknots (tb -1, rot 0), pairwise unlinked.
SteinHandlebody generate_Yn(int64_t n);

// generate_page(params) boundary-summed with generate_Yn(params.n); n >= 1.
SteinHandlebody generate_sum(const FamilyParams& params);

// generate_page for n == 0, generate_sum otherwise.
SteinHandlebody generate(const FamilyParams& params);

} // namespace steinobd
