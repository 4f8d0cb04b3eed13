#include <algorithm>
#include <sstream>

#include "rootnum/combinatorics.hpp"
#include "rootnum/errors.hpp"

namespace rootnum {

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(HalfInt exponent, BigInt coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_exponents(const std::vector<HalfInt>& exponents) {
  LaurentPoly p;
  for (auto e : exponents) p.add_term(e, 1);
  return p;
}

void LaurentPoly::add_term(HalfInt exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coeff(HalfInt exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::mass() const {
  BigInt s = 0;
  for (auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](auto& t) { return t.second > 0; });
}

bool LaurentPoly::is_symmetric() const { return mirrored() == *this; }

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.add_term(-e, c);
  return r;
}

std::vector<HalfInt> LaurentPoly::exponents() const {
  if (!all_coefficients_nonnegative()) {
    throw InvalidInput("exponent multiset needs nonnegative coefficients");
  }
  std::vector<HalfInt> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto n = static_cast<std::int64_t>(it->second);
    for (std::int64_t i = 0; i < n; ++i) out.push_back(it->first);
  }
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second << "*X^" << it->first.to_string();
  }
  return os.str();
}

}  // namespace rootnum
