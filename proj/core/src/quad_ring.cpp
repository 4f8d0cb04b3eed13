#include "rootnum/quad_ring.hpp"

#include <array>

#include "rootnum/errors.hpp"

namespace rootnum {

namespace {

struct PresetEntry {
  const char* name;
  std::int64_t p;
  Splitting splitting;
  std::int64_t trace;
  std::int64_t norm;
};

// w^2 = trace * w - norm
constexpr std::array<PresetEntry, 16> kPresets{{
    {"split3", 3, Splitting::split, 1, 0},
    {"split5", 5, Splitting::split, 1, 0},
    {"split7", 7, Splitting::split, 1, 0},
    {"inert2", 2, Splitting::inert, -1, 1},   // w^2 + w + 1
    {"inert3", 3, Splitting::inert, 0, 1},    // w^2 = -1
    {"inert5", 5, Splitting::inert, 0, -2},   // w^2 = 2
    {"inert7", 7, Splitting::inert, 0, 1},    // w^2 = -1
    {"tame3", 3, Splitting::tame_ramified, 0, -3},
    {"tame3m", 3, Splitting::tame_ramified, 0, 3},
    {"tame5", 5, Splitting::tame_ramified, 0, -5},
    {"q2i", 2, Splitting::wild_ramified, 2, 2},        // w = 1 + i
    {"q2sqrt3", 2, Splitting::wild_ramified, 2, -2},   // w = 1 + sqrt(3)
    {"q2sqrt2", 2, Splitting::wild_ramified, 0, -2},
    {"q2sqrtm2", 2, Splitting::wild_ramified, 0, 2},
    {"q2sqrt10", 2, Splitting::wild_ramified, 0, -10},
    {"q2sqrtm10", 2, Splitting::wild_ramified, 0, 10},
}};

std::int64_t ipow64(std::int64_t p, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > (std::int64_t(1) << 40) / p) throw BudgetExceeded("truncated ring too large");
    r *= p;
  }
  return r;
}

std::int64_t vp(std::int64_t x, std::int64_t p) {
  if (x == 0) return 1 << 20;
  std::int64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

QuadPresentation preset(std::string_view name) {
  for (auto& e : kPresets) {
    if (name == e.name) return {e.name, e.p, e.splitting, e.trace, e.norm};
  }
  throw InvalidInput("unknown local field preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (auto& e : kPresets) out.emplace_back(e.name);
  return out;
}

TruncatedQuadRing TruncatedQuadRing::build(const QuadPresentation& pres, int m) {
  const std::int64_t p = pres.p;
  if (!is_prime(p)) throw InvalidInput("ring presentation needs a prime p");
  if (m < 1) throw InvalidInput("truncation level must be >= 1");
  const std::int64_t t = pres.trace, n = pres.norm;
  switch (pres.splitting) {
    case Splitting::split:
      if (t != 1 || n != 0) throw InvalidInput("split rings use the idempotent model w^2 = w");
      break;
    case Splitting::inert:
      for (std::int64_t x = 0; x < p; ++x) {
        if (mod(x * x - t * x + n, p) == 0) {
          throw InvalidInput("inert presentation has a root mod p");
        }
      }
      break;
    case Splitting::tame_ramified:
    case Splitting::wild_ramified:
      if ((p == 2) != (pres.splitting == Splitting::wild_ramified)) {
        throw InvalidInput("quadratic ramification is wild exactly when p = 2");
      }
      if (mod(t, p) != 0 || mod(n, p) != 0 || mod(n, p * p) == 0) {
        throw InvalidInput("ramified presentation must be Eisenstein");
      }
      break;
  }
  TruncatedQuadRing r;
  r.pres_ = pres;
  r.m_ = m;
  auto [ea, eb] = r.level_exponents(m);
  r.mod_a_ = ipow64(p, ea);
  r.mod_b_ = ipow64(p, eb);
  // w - conj(w) = -t + 2w
  if (r.ramified()) {
    r.d_exp_ = static_cast<int>(std::min(2 * vp(-t, p), 2 * vp(2, p) + 1));
  } else {
    r.d_exp_ = static_cast<int>(std::min(vp(-t, p), vp(2, p)));
  }
  return r;
}

std::pair<std::int64_t, std::int64_t> TruncatedQuadRing::level_exponents(int k) const {
  if (ramified()) return {(k + 1) / 2, k / 2};
  return {k, k};
}

std::pair<std::int64_t, std::int64_t> TruncatedQuadRing::level_steps(int k) const {
  if (k < 0 || k > m_) throw InvalidInput("level outside truncation");
  auto [ea, eb] = level_exponents(k);
  return {ipow64(p(), ea), ipow64(p(), eb)};
}

std::uint64_t TruncatedQuadRing::level_size(int k) const {
  auto [sa, sb] = level_steps(k);
  return static_cast<std::uint64_t>(mod_a_ / sa) * static_cast<std::uint64_t>(mod_b_ / sb);
}

TruncatedQuadRing::Elem TruncatedQuadRing::make(std::int64_t a, std::int64_t b) const {
  return {mod(a, mod_a_), mod(b, mod_b_)};
}

TruncatedQuadRing::Elem TruncatedQuadRing::uniformizer() const {
  return ramified() ? generator() : scalar(p());
}

TruncatedQuadRing::Elem TruncatedQuadRing::mul(Elem x, Elem y) const {
  using i128 = __int128;
  const i128 t = pres_.trace, n = pres_.norm;
  i128 bb = static_cast<i128>(x.b) * y.b;
  i128 a = static_cast<i128>(x.a) * y.a - n * bb;
  i128 b = static_cast<i128>(x.a) * y.b + static_cast<i128>(y.a) * x.b + t * bb;
  auto ra = static_cast<std::int64_t>(a % mod_a_);
  auto rb = static_cast<std::int64_t>(b % mod_b_);
  return make(ra, rb);
}

TruncatedQuadRing::Elem TruncatedQuadRing::scale(Elem x, std::int64_t s) const {
  s = mod(s, mod_a_);
  using i128 = __int128;
  return make(static_cast<std::int64_t>(static_cast<i128>(x.a) * s % mod_a_),
              static_cast<std::int64_t>(static_cast<i128>(x.b) * s % mod_b_));
}

TruncatedQuadRing::Elem TruncatedQuadRing::pow(Elem x, std::uint64_t n) const {
  Elem r = one();
  while (n) {
    if (n & 1) r = mul(r, x);
    n >>= 1;
    if (n) x = mul(x, x);
  }
  return r;
}

std::int64_t TruncatedQuadRing::norm(Elem x) const {
  using i128 = __int128;
  i128 v = static_cast<i128>(x.a) * x.a + static_cast<i128>(x.a) * x.b * pres_.trace +
           static_cast<i128>(x.b) * x.b * pres_.norm;
  return mod(static_cast<std::int64_t>(v % mod_a_), mod_a_);
}

bool TruncatedQuadRing::is_unit(Elem x) const { return norm(x) % p() != 0; }

std::int64_t TruncatedQuadRing::scalar_inverse(std::int64_t s) const {
  std::int64_t a = mod(s, mod_a_), n = mod_a_;
  std::int64_t x0 = 1, x1 = 0;
  std::int64_t r0 = a, r1 = n;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  if (r0 != 1) throw InvalidInput("scalar is not a unit");
  return mod(x0, mod_a_);
}

TruncatedQuadRing::Elem TruncatedQuadRing::inverse(Elem x) const {
  if (!is_unit(x)) throw InvalidInput("element is not a unit");
  return scale(conj(x), scalar_inverse(norm(x)));
}

bool TruncatedQuadRing::in_level(Elem x, int k) const {
  auto [sa, sb] = level_steps(k);
  return x.a % sa == 0 && x.b % sb == 0;
}

int TruncatedQuadRing::valuation(Elem x) const {
  int k = 0;
  while (k < m_ && in_level(x, k + 1)) ++k;
  return k;
}

std::uint64_t TruncatedQuadRing::residue_count() const {
  auto q = static_cast<std::uint64_t>(p());
  return ramified() ? q : q * q;
}

std::uint64_t TruncatedQuadRing::residue_index(Elem x) const {
  auto q = static_cast<std::uint64_t>(p());
  auto a = static_cast<std::uint64_t>(x.a) % q;
  if (ramified()) return a;
  return a + q * (static_cast<std::uint64_t>(x.b) % q);
}

TruncatedQuadRing::Elem TruncatedQuadRing::residue_lift(std::uint64_t r) const {
  auto q = static_cast<std::uint64_t>(p());
  if (ramified()) return make(static_cast<std::int64_t>(r), 0);
  return make(static_cast<std::int64_t>(r % q), static_cast<std::int64_t>(r / q));
}

}  // namespace rootnum
