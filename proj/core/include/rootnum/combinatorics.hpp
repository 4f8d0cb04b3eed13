#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rootnum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t integer) : doubled_(2 * integer) {}  // NOLINT

  static constexpr HalfInt from_doubled(std::int64_t d) {
    HalfInt h;
    h.doubled_ = d;
    return h;
  }
  // Accepts "3", "-2", "3/2", "-1/2".
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integral() const { return doubled_ % 2 == 0; }
  std::int64_t floor() const;
  std::int64_t ceil() const;
  // Valid only when is_integral().
  std::int64_t integer() const;
  Rational to_rational() const { return Rational(doubled_, 2); }
  std::string to_string() const;

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }
  constexpr HalfInt operator*(std::int64_t s) const { return from_doubled(doubled_ * s); }
  HalfInt& operator+=(HalfInt o) {
    doubled_ += o.doubled_;
    return *this;
  }
  HalfInt& operator-=(HalfInt o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  std::int64_t doubled_ = 0;
};

// C(n, k); zero when k < 0 or k > n, including all n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// sum_{i=0}^{b+1} (-1)^i C(b+1, i) i^k, with 0^0 = 1.
BigInt euler_alternating_sum(std::int64_t b, std::int64_t k);

BigInt ipow(const BigInt& base, std::uint64_t exp);

// Solves sum_{i<=j} a(i) T(j - i) = delta_{j,0} for j = 0..K given
// T(0) = 1. Returns a(0..K).
std::vector<BigInt> solve_unitriangular(const std::vector<BigInt>& trace);

// Finite sum of integer multiples of X^h, h in (1/2)Z. Zero coefficients
// are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<HalfInt, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);
  static LaurentPoly monomial(HalfInt exponent, BigInt coeff = 1);
  // One X^h for each entry, counted with multiplicity.
  static LaurentPoly from_exponents(const std::vector<HalfInt>& exponents);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(HalfInt exponent) const;
  // Value at X = 1.
  BigInt mass() const;
  bool all_coefficients_nonnegative() const;
  bool is_symmetric() const;
  LaurentPoly mirrored() const;
  // Exponents repeated by multiplicity, sorted decreasingly. Requires
  // nonnegative coefficients.
  std::vector<HalfInt> exponents() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const = default;

  std::string to_string() const;

 private:
  void add_term(HalfInt exponent, const BigInt& coeff);
  Terms terms_;
};

}  // namespace rootnum
