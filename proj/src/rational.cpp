#include "monodromy/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace monodromy {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw std::invalid_argument("empty rational");
  std::string s(text.substr(first, last - first + 1));
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_den() == 1;
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("value " + to_string(r) + " is not an integer");
  Integer n = r.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("value " + to_string(r) + " out of range");
  return static_cast<std::int64_t>(n.get_si());
}

std::int64_t lcm_of_denominators(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    Rational c = v;
    c.canonicalize();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (!l.fits_slong_p()) throw std::domain_error("denominator lcm out of range");
  return l.get_si();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in multiply");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0) out[r] += a * x[c];
    }
  }
  return out;
}

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n) throw std::invalid_argument("solve_exact: shape mismatch");

  RationalMatrix m(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n) = rhs[r];
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != k) {
      for (std::size_t c = k; c <= n; ++c) std::swap(m(k, c), m(pivot, c));
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      Rational factor = m(r, k) / m(k, k);
      for (std::size_t c = k; c <= n; ++c) m(r, c) -= factor * m(k, c);
    }
  }

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = m(i, n);
    for (std::size_t c = i + 1; c < n; ++c) acc -= m(i, c) * x[c];
    x[i] = acc / m(i, i);
    x[i].canonicalize();
  }
  return x;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant of non-square matrix");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      Rational factor = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  det.canonicalize();
  return det;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("minors of non-square matrix");
  std::vector<Rational> minors;
  minors.reserve(n);

  // Without row exchanges the k-th pivot is minor_k / minor_{k-1}.
  RationalMatrix m = a;
  Rational running = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    if (m(k, k) == 0) break;
    running *= m(k, k);
    running.canonicalize();
    minors.push_back(running);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      Rational factor = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  for (; k < n; ++k) {
    RationalMatrix sub(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
      for (std::size_t c = 0; c <= k; ++c) sub(r, c) = a(r, c);
    }
    minors.push_back(determinant(std::move(sub)));
  }
  return minors;
}

}  // namespace monodromy
