#pragma once

// Contact 5-manifolds supported by open books (X, id) whose page X is a
// Stein handlebody without 1-handles.
//
// Such a contact manifold is determined by (r, n) where r is the rotation
// divisor of X and n = b2(X): the first Chern class of the page is the
// rotation vector in Hom(H_2, Z), and two such classes are related by an
// automorphism of Z^n exactly when their divisibilities agree. The label
// zeta_{r,n} lives on #n S2xS3 for even r and on #n S2x~S3 for odd r.

#include <cstdint>
#include <string>

#include "steinobd/families.hpp"
#include "steinobd/handlebody.hpp"
#include "steinobd/lattice.hpp"

namespace steinobd {

// The monodromy is always the identity; nothing else is representable.
struct OpenBook5 {
  SteinHandlebody page;
};

enum class Diffeo { ConnSumS2xS3, ConnSumS2xtS3 };

// "S2xS3" or "S2xtS3".
const char* diffeo_name(Diffeo d);

class ContactLabel {
public:
  // Throws ValidationError for r < 0 or n < 1.
  ContactLabel(int64_t r, int64_t n);

  int64_t r() const { return r_; }
  int64_t n() const { return n_; }
  Diffeo diffeo() const { return r_ % 2 == 0 ? Diffeo::ConnSumS2xS3 : Diffeo::ConnSumS2xtS3; }

  // "zeta_{3,2}"
  std::string name() const;
  // "#2 S2xtS3"
  std::string manifold() const;

  friend bool operator==(const ContactLabel& a, const ContactLabel& b) {
    return a.r_ == b.r_ && a.n_ == b.n_;
  }
  friend auto operator<=>(const ContactLabel& a, const ContactLabel& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

private:
  int64_t r_;
  int64_t n_;
};

ContactLabel supported_contact(const OpenBook5& ob);

bool contactomorphic(const OpenBook5& a, const OpenBook5& b);

// Why two open books are not contactomorphic, e.g. "rotation divisor 2 != 4";
// empty when they are.
std::string difference(const OpenBook5& a, const OpenBook5& b);

// Classify the generated family member.
ContactLabel classify_family(const FamilyParams& params);

// Label predicted directly from the parameters, without building handles.
ContactLabel closed_form_label(const FamilyParams& params);

// Unimodular A with A * c1(a) == c1(b). Throws MismatchError when the open
// books are not contactomorphic.
UnimodularMatrix witness_automorphism(const OpenBook5& a, const OpenBook5& b);

} // namespace steinobd
