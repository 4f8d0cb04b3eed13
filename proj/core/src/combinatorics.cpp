#include "rootnum/combinatorics.hpp"

#include <charconv>

#include "rootnum/errors.hpp"

namespace rootnum {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput("not a half-integer: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfInt(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 1) return HalfInt(num);
  if (den != 2) throw InvalidInput("not a half-integer: '" + std::string(text) + "'");
  return from_doubled(num);
}

std::int64_t HalfInt::floor() const {
  return doubled_ >= 0 ? doubled_ / 2 : -((-doubled_ + 1) / 2);
}

std::int64_t HalfInt::ceil() const { return -(-*this).floor(); }

std::int64_t HalfInt::integer() const {
  if (!is_integral()) throw InvalidInput("half-integer " + to_string() + " is not integral");
  return doubled_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integral()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

BigInt euler_alternating_sum(std::int64_t b, std::int64_t k) {
  if (b < -1 || k < 0) throw InvalidInput("euler_alternating_sum needs b >= -1 and k >= 0");
  BigInt s = 0;
  for (std::int64_t i = 0; i <= b + 1; ++i) {
    BigInt term = binomial(b + 1, i) * ipow(BigInt(i), static_cast<std::uint64_t>(k));
    if (i % 2) s -= term;
    else s += term;
  }
  return s;
}

std::vector<BigInt> solve_unitriangular(const std::vector<BigInt>& trace) {
  if (trace.empty()) throw InvalidInput("empty trace profile");
  if (trace[0] != 1) throw InvalidInput("trace profile must have T(0) = 1");
  std::vector<BigInt> a(trace.size());
  a[0] = 1;
  for (std::size_t j = 1; j < trace.size(); ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < j; ++i) s += a[i] * trace[j - i];
    a[j] = -s;
  }
  return a;
}

}  // namespace rootnum
