#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rootnum/place.hpp"

namespace rootnum {

// O_E = Z_p[w] with w^2 = trace * w - norm. Ramified presentations use an
// Eisenstein polynomial, so w is a uniformizer; split presentations use the
// idempotent w = (1, 0) of Z_p x Z_p.
struct QuadPresentation {
  std::string label;
  std::int64_t p = 0;
  Splitting splitting = Splitting::split;
  std::int64_t trace = 0;
  std::int64_t norm = 0;
};

QuadPresentation preset(std::string_view name);
std::vector<std::string> preset_names();

// O_E / p_w^m (for unramified E, p_w^m means p^m O_E). In the basis (1, w)
// every p_w^k is a box p^A Z_p + p^B Z_p w, so residues are pairs
// (a mod p^A, b mod p^B).
class TruncatedQuadRing {
 public:
  struct Elem {
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool operator==(const Elem&) const = default;
  };

  static TruncatedQuadRing build(const QuadPresentation& pres, int m);

  const QuadPresentation& presentation() const { return pres_; }
  std::int64_t p() const { return pres_.p; }
  int m() const { return m_; }
  Splitting splitting() const { return pres_.splitting; }
  bool ramified() const { return is_ramified(pres_.splitting); }
  int e() const { return ramified() ? 2 : 1; }
  // Exponent of the different, v_w(w - conj(w)).
  int different_exponent() const { return d_exp_; }
  // O_F / (p_w^m cap O_F) = Z / p^A.
  std::int64_t scalar_modulus() const { return mod_a_; }

  std::uint64_t size() const { return static_cast<std::uint64_t>(mod_a_) * mod_b_; }
  std::uint64_t index(Elem x) const {
    return static_cast<std::uint64_t>(x.a) + static_cast<std::uint64_t>(mod_a_) * x.b;
  }
  Elem elem(std::uint64_t idx) const {
    return {static_cast<std::int64_t>(idx % mod_a_), static_cast<std::int64_t>(idx / mod_a_)};
  }

  Elem make(std::int64_t a, std::int64_t b) const;
  Elem one() const { return make(1, 0); }
  Elem scalar(std::int64_t a) const { return make(a, 0); }
  Elem generator() const { return make(0, 1); }
  Elem uniformizer() const;

  Elem add(Elem x, Elem y) const { return make(x.a + y.a, x.b + y.b); }
  Elem sub(Elem x, Elem y) const { return make(x.a - y.a, x.b - y.b); }
  Elem neg(Elem x) const { return make(-x.a, -x.b); }
  Elem mul(Elem x, Elem y) const;
  Elem scale(Elem x, std::int64_t s) const;
  Elem conj(Elem x) const { return make(x.a + x.b * pres_.trace, -x.b); }
  Elem pow(Elem x, std::uint64_t n) const;
  // x * conj(x), as a residue mod scalar_modulus().
  std::int64_t norm(Elem x) const;
  bool is_unit(Elem x) const;
  Elem inverse(Elem x) const;
  std::int64_t scalar_inverse(std::int64_t s) const;

  // Membership in p_w^k for 0 <= k <= m.
  bool in_level(Elem x, int k) const;
  // Largest k <= m with x in p_w^k.
  int valuation(Elem x) const;
  // Residue modulo p_w (modulo p for split rings), as an index into
  // residue_count().
  std::uint64_t residue_index(Elem x) const;
  std::uint64_t residue_count() const;
  Elem residue_lift(std::uint64_t r) const;

  // Calls f(z) for every z in p_w^k.
  template <class F>
  void for_each_in_level(int k, F&& f) const {
    auto [sa, sb] = level_steps(k);
    for (std::int64_t b = 0; b < mod_b_; b += sb)
      for (std::int64_t a = 0; a < mod_a_; a += sa) f(Elem{a, b});
  }
  std::uint64_t level_size(int k) const;
  // (p^A, p^B) with p_w^k = p^A Z_p + p^B Z_p w.
  std::pair<std::int64_t, std::int64_t> level_steps(int k) const;

 private:
  std::pair<std::int64_t, std::int64_t> level_exponents(int k) const;

  QuadPresentation pres_;
  int m_ = 0;
  std::int64_t mod_a_ = 1;
  std::int64_t mod_b_ = 1;
  int d_exp_ = 0;
};

}  // namespace rootnum
