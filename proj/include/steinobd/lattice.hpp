#pragma once

// Exact integer vectors and matrices over Z. All arithmetic is checked and
// throws OverflowError instead of wrapping.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace steinobd {

class IntVector {
public:
  IntVector() = default;
  explicit IntVector(std::vector<int64_t> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<int64_t> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int64_t> entries() const { return entries_; }
  const std::vector<int64_t>& values() const { return entries_; }

  friend bool operator==(const IntVector&, const IntVector&) = default;

private:
  std::vector<int64_t> entries_;
};

std::string to_string(const IntVector& v);

IntVector concat(const IntVector& a, const IntVector& b);

// Dense row-major square or rectangular integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

// Fraction-free (Bareiss) determinant.
int64_t determinant(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

// Square integer matrix with determinant +1 or -1.
class UnimodularMatrix {
public:
  // Throws ValidationError unless m is square with |det m| = 1.
  explicit UnimodularMatrix(IntMatrix m);

  static UnimodularMatrix identity(std::size_t n);

  const IntMatrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  int64_t det() const { return det_; }

  UnimodularMatrix inverse() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b);
  friend IntVector operator*(const UnimodularMatrix& a, const IntVector& v) { return a.m_ * v; }
  friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    return a.m_ == b.m_;
  }

private:
  struct Trusted {};
  UnimodularMatrix(IntMatrix m, int64_t det, Trusted) : m_(std::move(m)), det_(det) {}

  IntMatrix m_;
  int64_t det_ = 1;
};

struct ExtendedGcd {
  int64_t g; // >= 0
  int64_t x;
  int64_t y; // x*a + y*b == g
};

ExtendedGcd extended_gcd(int64_t a, int64_t b);

// gcd of |entries|; 0 iff every entry is 0 (including the empty vector).
int64_t gcd_nonneg(std::span<const int64_t> v);
inline int64_t gcd_nonneg(const IntVector& v) { return gcd_nonneg(v.entries()); }

struct GcdReduction {
  UnimodularMatrix transform; // transform * v == (gcd, 0, ..., 0)
  int64_t gcd;
};

GcdReduction reduce_to_gcd(const IntVector& v);

// A with A*v == w and |det A| == 1. Throws MismatchError when the lengths or
// gcds differ.
UnimodularMatrix automorphism_mapping(const IntVector& v, const IntVector& w);

} // namespace steinobd
