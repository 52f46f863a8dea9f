#pragma once

// Stein domains built from one 0-handle and 2-handles attached along
// Legendrian knots in the standard contact S^3 with framing tb - 1.
// There are no 1-handles, so H_2 is free with one generator per handle.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steinobd/front.hpp"
#include "steinobd/lattice.hpp"

namespace steinobd {

struct HandleSource {
  std::shared_ptr<const OrientedFront> front;
  int component = 0;
  std::string path; // empty for in-memory fronts
};

class SteinHandle {
public:
  SteinHandle(int64_t tb, int64_t rot);

  // tb and rot are recomputed from the front.
  explicit SteinHandle(HandleSource source);

  // Throws ValidationError if (tb, rot) disagree with the front.
  SteinHandle(int64_t tb, int64_t rot, HandleSource source);

  int64_t tb() const { return tb_; }
  int64_t rot() const { return rot_; }
  int64_t framing() const { return tb_ - 1; }
  const std::optional<HandleSource>& source() const { return source_; }

private:
  int64_t tb_;
  int64_t rot_;
  std::optional<HandleSource> source_;
};

// tb <= -1, |rot| <= -tb - 1, rot = tb + 1 (mod 2).
bool realizable_by_unknot(int64_t tb, int64_t rot);

using LinkingMatrix = std::vector<std::vector<int64_t>>;

class SteinHandlebody {
public:
  // Throws ValidationError for an empty handle list or a linking matrix that
  // is not n x n symmetric.
  explicit SteinHandlebody(std::vector<SteinHandle> handles,
                           std::optional<LinkingMatrix> linking = std::nullopt);

  const std::vector<SteinHandle>& handles() const { return handles_; }
  std::size_t b2() const { return handles_.size(); }
  const std::optional<LinkingMatrix>& explicit_linking() const { return linking_; }

  // Explicit linking if given; otherwise derived when every handle has a
  // front source (same front: linking number, different fronts: split, 0).
  std::optional<LinkingMatrix> linking() const;

private:
  std::vector<SteinHandle> handles_;
  std::optional<LinkingMatrix> linking_;
};

// Rotation numbers in handle order; the first Chern class evaluated on the
// handle basis of H_2.
IntVector c1_cochain(const SteinHandlebody& x);

// gcd of the rotation numbers, 0 when they all vanish.
int64_t rotation_divisor(const SteinHandlebody& x);

SteinHandlebody boundary_connected_sum(const SteinHandlebody& a, const SteinHandlebody& b);

// Diagonal: framings. Off-diagonal: linking numbers. Throws ValidationError
// when no linking data is available.
IntMatrix intersection_form(const SteinHandlebody& x);

// n stabilized unknots with the same rotation-number parity as r and
// rotation divisor r: (r, ..., r) for odd r, (r, 0, ..., 0) for even r.
// Each handle has tb = -1 - |rot| and carries its own front.
SteinHandlebody canonical_model(int64_t r, int64_t n);

// ---------------------------------------------------------------------------
// Handlebody text format:
//
//   handle tb=<int> rot=<int>
//   handle front=<path> component=<int>
//   handle tb=<int> rot=<int> front=<path> component=<int>
//   link <i> <j> <int>
//
// '#' starts a comment. Front paths are relative to base_dir; handles naming
// the same path share one front. Indices are 0-based.

SteinHandlebody parse_handlebody(std::string_view text, const std::string& base_dir = ".");
SteinHandlebody load_handlebody_file(const std::string& path);

} // namespace steinobd
