#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace almostchar {

using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" with q > 0, always including the denominator.
std::string rational_string(const Rational& r);

/*
  Exact Laurent polynomial in x = u^{1/2} with rational coefficients.

  Terms are kept sorted by exponent (counted in units of u^{1/2}, so exponent
  2 is u) with no zero coefficient, which makes structural equality the ring
  equality. Values are immutable once built apart from the compound
  assignment operators.
*/
class HalfLaurent {
 public:
  using Term = std::pair<int, Rational>;

  HalfLaurent() = default;
  HalfLaurent(int c);  // NOLINT: constants convert implicitly
  HalfLaurent(const Rational& c);  // NOLINT

  /// Merges duplicate exponents and drops zeros.
  static HalfLaurent from_terms(std::vector<Term> terms);
  static HalfLaurent monomial(int halfexp, const Rational& coeff = 1);

  static HalfLaurent u() { return monomial(2); }
  static HalfLaurent u_half() { return monomial(1); }
  /// U = u^{1/2} - u^{-1/2}
  static HalfLaurent U();

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  int min_halfexp() const;
  int max_halfexp() const;
  /// Coefficient of x^halfexp (zero if absent).
  Rational coeff(int halfexp) const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);
  HalfLaurent& operator*=(const Rational& c);
  /// Adds c * x^shift * o without building the temporary product.
  HalfLaurent& add_scaled(const HalfLaurent& o, const Rational& c, int shift = 0);

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator*(HalfLaurent a, const Rational& c) { return a *= c; }
  friend HalfLaurent operator*(const Rational& c, HalfLaurent a) { return a *= c; }
  HalfLaurent operator-() const;

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

  HalfLaurent pow(unsigned e) const;

  /// Ring involution x -> -x^{-1}.
  HalfLaurent bar() const;
  /// Substitution u^{1/2} = 1.
  Rational eval_one() const;

  /// Human-readable form, e.g. "-u + 2 - u^-1/2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

struct DivisionResult {
  HalfLaurent quotient;
  HalfLaurent remainder;
};

/// Long division in Q[x, x^{-1}] after normalizing both operands to
/// polynomials with nonzero constant term. Divisor must be nonzero.
DivisionResult divide(const HalfLaurent& num, const HalfLaurent& den);

/// Throws DivisionError unless den divides num exactly.
HalfLaurent exact_divide(const HalfLaurent& num, const HalfLaurent& den);

}  // namespace almostchar
