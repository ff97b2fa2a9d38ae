#include "toric/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

using Coefficient = LaurentPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

int checked_exp(long long e) {
  if (e > (1 << 28) || e < -(1 << 28)) throw std::overflow_error("Laurent exponent overflow");
  return static_cast<int>(e);
}

std::string exponent_text(int e, int denominator) {
  if (denominator == 1 || e % denominator == 0) {
    int v = e / denominator;
    return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v);
  }
  return "(" + std::to_string(e) + "/" + std::to_string(denominator) + ")";
}

std::string power_text(std::string_view var, int e, int denominator) {
  std::string s(var);
  if (e == denominator) return s;
  return s + "^" + exponent_text(e, denominator);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(Coefficient constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPolynomial LaurentPolynomial::monomial(Coefficient c, int exponent) {
  LaurentPolynomial p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (auto [e, c] : terms_) r.terms_[e] = checked_mul(c, -1);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (auto [ea, ca] : a.terms_) {
    for (auto [eb, cb] : b.terms_) {
      r.add_term(checked_exp(static_cast<long long>(ea) + eb), checked_mul(ca, cb));
    }
  }
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r;
  for (auto [e, c] : terms_) r.terms_[checked_exp(static_cast<long long>(e) + k)] = c;
  return r;
}

LaurentPolynomial LaurentPolynomial::inverted_variable() const {
  LaurentPolynomial r;
  for (auto [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute_power(int num, int den) const {
  if (den == 0) throw std::invalid_argument("zero denominator in exponent substitution");
  LaurentPolynomial r;
  for (auto [e, c] : terms_) {
    long long scaled = static_cast<long long>(e) * num;
    if (scaled % den != 0) {
      throw std::domain_error("exponent " + std::to_string(e) + " times " + std::to_string(num) +
                              " is not divisible by " + std::to_string(den));
    }
    r.add_term(checked_exp(scaled / den), c);
  }
  return r;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return LaurentPolynomial{};
  const int shift = min_exponent() - divisor.min_exponent();
  LaurentPolynomial rem = shifted(-min_exponent());
  const LaurentPolynomial d = divisor.shifted(-divisor.min_exponent());
  const int d_deg = d.max_exponent();
  const Coefficient lead = d.coefficient(d_deg);
  LaurentPolynomial quotient;
  while (!rem.is_zero() && rem.max_exponent() >= d_deg) {
    const int e = rem.max_exponent();
    const Coefficient c = rem.coefficient(e);
    if (c % lead != 0) return std::nullopt;
    LaurentPolynomial term = monomial(c / lead, e - d_deg);
    quotient += term;
    rem -= term * d;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient.shifted(shift);
}

std::string format_pretty(const LaurentPolynomial& p, std::string_view var, int denominator) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [e, c] = *it;
    const bool negative = c < 0;
    const Coefficient mag = negative ? -c : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << power_text(var, e, denominator);
    }
  }
  return out.str();
}

std::string format_canonical(const LaurentPolynomial& p, std::string_view var, int denominator) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [e, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c << '*' << var << '^' << exponent_text(e, denominator);
  }
  return out.str();
}

}  // namespace toric
