#include "rootnum/shapes.hpp"

#include <map>

#include "rootnum/errors.hpp"

namespace rootnum {

LaurentPoly lambda_bracket_d(const LaurentPoly& lambda, int d) {
  if (d < 1) throw InvalidInput("d must be >= 1");
  LaurentPoly sl2;
  for (int l = 1; l <= d; ++l) sl2 += LaurentPoly::monomial(HalfInt::from_doubled(d + 1 - 2 * l));
  return lambda * sl2;
}

IntegralityReport classify_integral(DualityCase dc, const LaurentPoly& lambda, int N) {
  IntegralityReport r;
  if (lambda.mass() != N) {
    r.reason = "rank of lambda is not N";
    return r;
  }
  if (!lambda.all_coefficients_nonnegative()) {
    r.reason = "negative multiplicity";
    return r;
  }
  bool all_int = true, all_half = true;
  BigInt max_off = 0;
  for (auto& [e, c] : lambda.terms()) {
    (e.is_integral() ? all_half : all_int) = false;
    if (e != HalfInt(0) && c > max_off) max_off = c;
  }
  BigInt c0 = lambda.coeff(HalfInt(0));
  bool zero_allowed_two = dc == DualityCase::self_dual && N % 2 == 0;
  r.regular = max_off <= 1 && c0 <= (zero_allowed_two ? 2 : 1);

  if (dc == DualityCase::conjugate) {
    bool want_half = N % 2 == 1;
    if (want_half ? !all_half : !all_int) {
      r.reason = want_half ? "odd N needs half-integral exponents" : "even N needs integral exponents";
      return r;
    }
    if (max_off > 1 || c0 > 1) {
      r.reason = "multiplicity above 1";
      return r;
    }
    r.integral = true;
    r.family = GroupFamily::U_plus;
    return r;
  }

  if (!lambda.is_symmetric()) {
    r.reason = "not symmetric under X -> X^{-1}";
    return r;
  }
  if (all_half) {
    if (max_off > 1) {
      r.reason = "multiplicity above 1";
      return r;
    }
    r.integral = true;
    r.family = GroupFamily::SO_odd;
    return r;
  }
  if (!all_int) {
    r.reason = "mixes integral and half-integral exponents";
    return r;
  }
  if (max_off > 1) {
    r.reason = "multiplicity above 1";
    return r;
  }
  if (c0 == 1) {
    r.integral = true;
    r.family = GroupFamily::Sp;
  } else if (c0 == 0 || c0 == 2) {
    r.integral = true;
    r.family = GroupFamily::SO_even;
  } else {
    r.reason = "constant coefficient must be 0, 1 or 2";
  }
  return r;
}

int Shape::rank() const {
  int n = 0;
  for (auto& s : summands) n += s.T * s.d;
  return n;
}

LaurentPoly Shape::infchar() const {
  LaurentPoly total;
  for (auto& s : summands) total += lambda_bracket_d(s.lambda, s.d);
  return total;
}

std::optional<SimpleGroup> simple_shape_group(int T, bool half_integral, const EtaLabel& eta) {
  if (T < 1) throw InvalidInput("rank must be >= 1");
  if (T % 2) {
    if (half_integral) throw InvalidInput("odd rank cannot be half-integral and self-dual");
    return SimpleGroup{GroupFamily::Sp, T - 1, eta};
  }
  if (half_integral) {
    if (!eta.empty()) return std::nullopt;
    return SimpleGroup{GroupFamily::SO_odd, T + 1, {}};
  }
  return SimpleGroup{GroupFamily::SO_even, T, eta};
}

namespace {

struct PieceTotals {
  int n_sym = 0;
  int n_orth = 0;
  EtaLabel eta;
};

std::optional<GroupDescriptor> selfdual_group(const PieceTotals& t) {
  GroupDescriptor g;
  if (t.n_sym > 0) g.factors.push_back({GroupFamily::SO_odd, t.n_sym + 1, {}});
  if (t.n_orth > 0) {
    SimpleGroup f = t.n_orth % 2 ? SimpleGroup{GroupFamily::Sp, t.n_orth - 1, t.eta}
                                 : SimpleGroup{GroupFamily::SO_even, t.n_orth, t.eta};
    if (!f.is_trivial()) g.factors.push_back(f);
  }
  return g;
}

// tau[d] has the type of tau for d odd and the opposite type for d even,
// matching the integrality of lambda[d].
void add_piece(PieceTotals& t, int T, int d, bool tau_symplectic, const EtaLabel& eta) {
  bool piece_symplectic = tau_symplectic != (d % 2 == 0);
  if (piece_symplectic) {
    t.n_sym += T * d;
  } else {
    t.n_orth += T * d;
    if (d % 2) t.eta = eta_product(t.eta, eta);
  }
}

}  // namespace

std::optional<GroupDescriptor> assign_group(const Shape& shape, DualityCase dc) {
  if (shape.summands.empty()) throw InvalidInput("empty shape");
  if (dc == DualityCase::conjugate) {
    int n_plus = 0, n_minus = 0;
    for (auto& s : shape.summands) {
      auto rep = classify_integral(dc, s.lambda, s.T);
      if (!rep.integral) throw InvalidInput("summand lambda not integral: " + rep.reason);
      if (s.sign != 1 && s.sign != -1) throw InvalidInput("summand sign must be +1 or -1");
      int piece = s.d % 2 ? s.sign : -s.sign;
      (piece > 0 ? n_plus : n_minus) += s.T * s.d;
    }
    GroupDescriptor g;
    if (n_plus) g.factors.push_back({GroupFamily::U_plus, n_plus, {}});
    if (n_minus) g.factors.push_back({GroupFamily::U_minus, n_minus, {}});
    return g;
  }
  PieceTotals t;
  for (auto& s : shape.summands) {
    if (s.d < 1) throw InvalidInput("d must be >= 1");
    auto rep = classify_integral(dc, s.lambda, s.T);
    if (!rep.integral) throw InvalidInput("summand lambda not integral: " + rep.reason);
    bool half = rep.family == GroupFamily::SO_odd;
    if (!simple_shape_group(s.T, half, s.eta)) return std::nullopt;
    add_piece(t, s.T, s.d, half, s.eta);
  }
  return selfdual_group(t);
}

bool so_even_discrete_series(int n, const std::vector<bool>& eta_trivial_at_infinity) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  for (bool t : eta_trivial_at_infinity)
    if (t != (n % 2 == 0)) return false;
  return true;
}

GroupDescriptor box_group(const Box& box) {
  PieceTotals t;
  for (auto& b : box) {
    if (b.T < 1 || b.d < 1) throw InvalidInput("box entries need T, d >= 1");
    if (b.symplectic && b.T % 2) throw InvalidInput("symplectic summands have even rank");
    add_piece(t, b.T, b.d, b.symplectic, b.eta);
  }
  return *selfdual_group(t);
}

namespace {

using Multiset = std::map<HalfInt, int>;

struct Search {
  const Box& box;
  std::vector<std::vector<HalfInt>> shifts;
  std::vector<LaurentPoly> current;
  DimBoxResult* result;
  std::vector<SimpleGroup> groups;
  bool have_groups = false;

  void consider() {
    BigInt dims = 1;
    Rational pairs = 1;
    std::vector<SimpleGroup> gs;
    for (std::size_t i = 0; i < box.size(); ++i) {
      auto rep = classify_integral(DualityCase::self_dual, current[i], box[i].T);
      if (!rep.integral || !rep.regular) return;
      if ((rep.family == GroupFamily::SO_odd) != box[i].symplectic) return;
      auto g = simple_shape_group(box[i].T, box[i].symplectic, box[i].eta);
      if (!g) return;
      try {
        dims *= weyl_dim(*g, current[i]);
        pairs *= weyl_pairing_product(*g, current[i]);
      } catch (const InvalidInput&) {
        return;
      }
      gs.push_back(*g);
    }
    ++result->decompositions;
    if (!have_groups) {
      groups = gs;
      have_groups = true;
    }
    if (dims > result->value) {
      result->value = dims;
      result->best = current;
    }
    if (pairs > result->pairing_value) result->pairing_value = pairs;
  }

  void summand(std::size_t i, Multiset& rest) {
    if (i == box.size()) {
      for (auto& [e, c] : rest)
        if (c) return;
      consider();
      return;
    }
    std::vector<HalfInt> cand;
    for (auto& [x0, c] : rest) {
      if (c == 0) continue;
      // x0 = x + largest shift
      HalfInt x = x0 - shifts[i].front();
      if (x.is_integral() == box[i].symplectic) continue;
      cand.push_back(x);
    }
    std::vector<HalfInt> chosen;
    choose(i, rest, cand, 0, chosen);
  }

  void choose(std::size_t i, Multiset& rest, const std::vector<HalfInt>& cand, std::size_t from,
              std::vector<HalfInt>& chosen) {
    if (static_cast<int>(chosen.size()) == box[i].T) {
      current[i] = LaurentPoly::from_exponents(chosen);
      summand(i + 1, rest);
      return;
    }
    for (std::size_t c = from; c < cand.size(); ++c) {
      bool ok = true;
      for (auto s : shifts[i]) {
        auto it = rest.find(cand[c] + s);
        if (it == rest.end() || it->second == 0) ok = false;
      }
      if (!ok) continue;
      for (auto s : shifts[i]) --rest[cand[c] + s];
      chosen.push_back(cand[c]);
      choose(i, rest, cand, c, chosen);
      chosen.pop_back();
      for (auto s : shifts[i]) ++rest[cand[c] + s];
    }
  }
};

}  // namespace

DimBoxResult dim_box(const GroupDescriptor& g, const Box& box, const LaurentPoly& lambda) {
  if (box.empty()) throw InvalidInput("empty box");
  if (!(box_group(box) == g)) {
    throw InvalidInput("box belongs to " + box_group(box).name() + ", not " + g.name());
  }
  DimBoxResult result;
  int total = 0;
  for (auto& b : box) total += b.T * b.d;
  if (lambda.mass() != total || !lambda.all_coefficients_nonnegative()) {
    throw InvalidInput("lambda does not have the rank of the box");
  }
  Search s{box, {}, std::vector<LaurentPoly>(box.size()), &result, {}, false};
  for (auto& b : box) {
    std::vector<HalfInt> sh;
    for (int l = 1; l <= b.d; ++l) sh.push_back(HalfInt::from_doubled(b.d + 1 - 2 * l));
    s.shifts.push_back(sh);
  }
  Multiset rest;
  for (auto& [e, c] : lambda.terms()) rest[e] = static_cast<int>(c);
  s.summand(0, rest);
  for (auto& f : s.groups)
    if (!f.is_trivial()) result.local_group.factors.push_back(f);
  if (!s.have_groups) {
    for (auto& b : box) {
      auto f = simple_shape_group(b.T, b.symplectic, b.eta);
      if (f && !f->is_trivial()) result.local_group.factors.push_back(*f);
    }
  }
  return result;
}

DimBoundCheck dim_bound_check(const GroupDescriptor& g, const Box& box, const LaurentPoly& lambda,
                              bool normalised) {
  DimBoundCheck c;
  auto r = dim_box(g, box, lambda);
  c.exponent = r.local_group.positive_roots() - g.positive_roots();
  Rational main = normalised ? Rational(weyl_dim(g, lambda)) : weyl_pairing_product(g, lambda);
  Rational m = m_norm(g, lambda).value_or(Rational(1));
  if (m <= 0) throw InvalidInput("lambda is singular for " + g.name());
  Rational scale = 1;
  for (int i = 0; i < (c.exponent < 0 ? -c.exponent : c.exponent); ++i) scale *= m;
  c.lhs = normalised ? Rational(r.value) : r.pairing_value;
  c.rhs = c.exponent < 0 ? Rational(main / scale) : Rational(main * scale);
  c.holds = c.lhs <= c.rhs;
  return c;
}

}  // namespace rootnum
