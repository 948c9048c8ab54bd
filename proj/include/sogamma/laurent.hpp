#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "sogamma/rational.hpp"

namespace sogamma {

/// Element of Q[x, x^-1]. Terms are kept sorted by exponent and never store
/// a zero coefficient; the zero polynomial has no terms.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& coeff, int power);
  static LaurentPoly x(int power = 1) { return monomial(Rational(1), power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(int power) const;
  std::optional<int> min_power() const;
  std::optional<int> max_power() const;

  /// Adds c * x^p in place, dropping the term if it cancels.
  void add_term(const Rational& coeff, int power);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  /// Multiplies by x^s.
  LaurentPoly shifted(int s) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form such as "6x^-1 + 4"; "0" for zero.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  Terms terms_;
};

}  // namespace sogamma
