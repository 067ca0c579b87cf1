#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace cimset {

// Exact rationals backed by GMP; always kept in canonical reduced form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const Rational& q);
// Accepts "p", "p/q" and plain decimals such as "0.25".
Rational parse_rational(const std::string& text);
// Exact value of a finite double.
Rational from_double(double x);

}  // namespace cimset
