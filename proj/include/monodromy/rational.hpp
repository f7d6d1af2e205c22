#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace monodromy {

/// Exact arbitrary-precision rational. All combinatorial data (multiplicities,
/// discrepancies, ample coefficients) is carried in this type.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// Converts an integral rational to int64; throws std::domain_error when the
/// value is not integral or does not fit.
std::int64_t to_int64(const Rational& r);

std::int64_t lcm_of_denominators(const std::vector<Rational>& values);

/// Dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> multiply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Solves A x = rhs by Gaussian elimination with exact pivoting. Throws
/// std::domain_error when A is singular.
std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& rhs);

/// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1, computed from
/// the pivots of elimination without row exchanges. Once a minor vanishes the
/// remaining minors are computed directly as determinants.
std::vector<Rational> leading_principal_minors(const RationalMatrix& a);

Rational determinant(RationalMatrix a);

}  // namespace monodromy
