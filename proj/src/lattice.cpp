#include "steinobd/lattice.hpp"

#include <sstream>
#include <utility>

#include "steinobd/checked.hpp"
#include "steinobd/error.hpp"

namespace steinobd {

namespace ck = checked;

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

IntVector concat(const IntVector& a, const IntVector& b) {
  auto out = a.values();
  out.insert(out.end(), b.values().begin(), b.values().end());
  return IntVector(std::move(out));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix shape mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = ck::add(out(i, j), ck::mul(aik, b(k, j)));
    }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw ValidationError("matrix/vector shape mismatch in product");
  std::vector<int64_t> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = ck::add(out[i], ck::mul(a(i, k), v[k]));
  return IntVector(std::move(out));
}

int64_t determinant(const IntMatrix& m) {
  if (!m.square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(a(i, j)) * a(k, k) -
                       static_cast<__int128>(a(i, k)) * a(k, j);
        // Exact by Sylvester's identity.
        a(i, j) = ck::narrow(num / prev);
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : ck::neg(a(n - 1, n - 1));
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() == 0) throw ValidationError("unimodular matrix must be square");
  det_ = determinant(m_);
  if (det_ != 1 && det_ != -1)
    throw ValidationError("matrix is not unimodular (det = " + std::to_string(det_) + ")");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) {
  return UnimodularMatrix(IntMatrix::identity(n), 1, Trusted{});
}

UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
  return UnimodularMatrix(a.m_ * b.m_, a.det_ * b.det_, UnimodularMatrix::Trusted{});
}

namespace {

// rows (r, s) <- [[p, q], [u, w]] * rows (r, s), on every column.
void combine_rows(IntMatrix& m, std::size_t r, std::size_t s, int64_t p, int64_t q, int64_t u,
                  int64_t w) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const int64_t x = m(r, j), y = m(s, j);
    m(r, j) = ck::add(ck::mul(p, x), ck::mul(q, y));
    m(s, j) = ck::add(ck::mul(u, x), ck::mul(w, y));
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = ck::neg(m(r, j));
}

} // namespace

UnimodularMatrix UnimodularMatrix::inverse() const {
  const std::size_t n = size();
  // Euclidean row reduction of [U | I]; the left block must end as I.
  IntMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m_(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c + 1; r < n; ++r) {
      const int64_t a = aug(c, c), b = aug(r, c);
      if (b == 0) continue;
      const auto eg = extended_gcd(a, b);
      combine_rows(aug, c, r, eg.x, eg.y, ck::neg(b / eg.g), a / eg.g);
    }
    if (aug(c, c) == -1) negate_row(aug, c);
    if (aug(c, c) != 1) throw ValidationError("inverse of a singular matrix");
  }
  for (std::size_t c = n; c-- > 0;)
    for (std::size_t r = 0; r < c; ++r) {
      const int64_t f = aug(r, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) aug(r, j) = ck::sub(aug(r, j), ck::mul(f, aug(c, j)));
    }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return UnimodularMatrix(std::move(inv), det_, Trusted{});
}

// ---------------------------------------------------------------------------

ExtendedGcd extended_gcd(int64_t a, int64_t b) {
  int64_t old_r = a, r = b;
  int64_t old_s = 1, s = 0;
  int64_t old_t = 0, t = 1;
  while (r != 0) {
    const int64_t q = old_r / r;
    old_r = ck::sub(old_r, ck::mul(q, r));
    std::swap(old_r, r);
    old_s = ck::sub(old_s, ck::mul(q, s));
    std::swap(old_s, s);
    old_t = ck::sub(old_t, ck::mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {ck::neg(old_r), ck::neg(old_s), ck::neg(old_t)};
  return {old_r, old_s, old_t};
}

int64_t gcd_nonneg(std::span<const int64_t> v) {
  int64_t g = 0;
  for (int64_t x : v) {
    int64_t a = ck::abs(x);
    while (a != 0) {
      g %= a;
      std::swap(g, a);
    }
  }
  return g;
}

GcdReduction reduce_to_gcd(const IntVector& v) {
  const std::size_t n = v.size();
  if (n == 0) throw ValidationError("reduce_to_gcd needs a vector of length >= 1");
  // Column 0 carries v, columns 1..n carry the transform.
  IntMatrix work(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    work(i, 0) = v[i];
    work(i, i + 1) = 1;
  }
  for (std::size_t j = 1; j < n; ++j) {
    const int64_t a = work(0, 0), b = work(j, 0);
    if (b == 0) continue;
    // [[x, y], [-b/g, a/g]] has determinant (x*a + y*b)/g = 1.
    const auto eg = extended_gcd(a, b);
    combine_rows(work, 0, j, eg.x, eg.y, ck::neg(b / eg.g), a / eg.g);
  }
  if (work(0, 0) < 0) negate_row(work, 0);

  IntMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) u(i, k) = work(i, k + 1);
  return {UnimodularMatrix(std::move(u)), work(0, 0)};
}

UnimodularMatrix automorphism_mapping(const IntVector& v, const IntVector& w) {
  if (v.size() != w.size())
    throw MismatchError("vector lengths differ: " + std::to_string(v.size()) +
                        " != " + std::to_string(w.size()));
  const auto rv = reduce_to_gcd(v);
  const auto rw = reduce_to_gcd(w);
  if (rv.gcd != rw.gcd)
    throw MismatchError("gcds differ: " + std::to_string(rv.gcd) + " != " + std::to_string(rw.gcd));
  // rw^-1 * rv sends v -> (g, 0, ..., 0) -> w.
  return rw.transform.inverse() * rv.transform;
}

} // namespace steinobd
