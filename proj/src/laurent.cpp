#include "sogamma/laurent.hpp"

namespace sogamma {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int power) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(power, coeff);
  return p;
}

Rational LaurentPoly::coeff(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentPoly::min_power() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_power() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(const Rational& coeff, int power) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(c, p);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(-c, p);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add_term(ca * cb, pa + pb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly out;
  for (const auto& [p, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), p + s, c);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (p == 0) {
      out += mag.str();
      continue;
    }
    if (!unit) out += mag.str();
    out += "x";
    if (p != 1) out += "^" + std::to_string(p);
  }
  return out;
}

}  // namespace sogamma
