#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace toric {

// Single-variable Laurent polynomial with exact int64 coefficients.
// Arithmetic throws std::overflow_error rather than wrapping.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  LaurentPolynomial(Coefficient constant);  // NOLINT: implicit from integers reads naturally

  static LaurentPolynomial monomial(Coefficient c, int exponent);

  const std::map<int, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned k) const;

  // Multiplies by t^k.
  LaurentPolynomial shifted(int k) const;

  // t -> t^-1
  LaurentPolynomial inverted_variable() const;

  // t -> t^(num/den); every exponent times num must be divisible by den.
  LaurentPolynomial substitute_power(int num, int den) const;

  // Exact quotient in Z[t, t^-1], or nullopt when the divisor does not divide.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

 private:
  void add_term(int exponent, Coefficient c);

  std::map<int, Coefficient> terms_;
};

// Descending order, conventional signs: "t^2 - t + 1".
// Exponents are divided by `denominator` for display ("t^(1/2)" when 2).
std::string format_pretty(const LaurentPolynomial& p, std::string_view var = "t", int denominator = 1);

// Ascending order of c*t^k terms joined by " + ": "1*t^0 + -1*t^1 + 1*t^2".
std::string format_canonical(const LaurentPolynomial& p, std::string_view var = "t", int denominator = 1);

}  // namespace toric
