#include "rootnum/epsilon_transfer.hpp"

#include "rootnum/errors.hpp"

namespace rootnum {

CoefficientSchedule coefficient_schedule(TraceCase c, int N, int k) {
  if (N < 1 || k < 0) throw InvalidInput("coefficient_schedule needs N >= 1 and k >= 0");
  auto a = solve_unitriangular(trace_profile(c, N, k));
  CoefficientSchedule s;
  s.trace_case = c;
  s.N = N;
  s.k = k;
  for (int i = 0; i <= k; ++i)
    if (a[static_cast<std::size_t>(i)] != 0) s.shifts[i] = a[static_cast<std::size_t>(i)];
  return s;
}

namespace {

// coefficient of x^i in (1 - x^2)^h
BigInt even_part(int h, int i) {
  if (i < 0 || i % 2) return 0;
  BigInt c = binomial(h, i / 2);
  return (i / 2) % 2 ? BigInt(-c) : c;
}

}  // namespace

BigInt coefficient_closed_form(TraceCase c, int N, int i) {
  if (N < 1) throw InvalidInput("N must be >= 1");
  if (i < 0) return 0;
  if (c == TraceCase::conj_split) {
    BigInt b = binomial(N, i);
    return i % 2 ? BigInt(-b) : b;
  }
  if (N % 2 == 0) return even_part(N / 2, i);
  int h = (N - 1) / 2;
  return even_part(h, i) - even_part(h, i - 1);
}

BigInt selfdual_transfer_at_identity(int N, const Conductor& c) {
  if (N < 2 || N % 2) throw InvalidInput("self-dual transfer needs N even");
  if (!c.is_integral()) throw InvalidInput("self-dual conductor must be integral");
  BigInt v = 1;
  for (auto& [place, k] : c.exponents()) {
    std::int64_t e = k.integer();
    if (e % 2 || e > N) return 0;
    BigInt b = binomial(N / 2, e / 2);
    v *= (e / 2) % 2 ? BigInt(-b) : b;
  }
  return v;
}

std::string CentralTransferProfile::describe() const {
  std::string s;
  switch (support) {
    case SupportKind::empty: return "identically zero";
    case SupportKind::unit_congruent_one:
      s = "gamma in O^x, gamma = 1 mod p^" + std::to_string(level);
      break;
    case SupportKind::minus_in_phi_image:
      s = "-gamma in phi(1 + p_w^" + std::to_string(level) + ")";
      break;
    case SupportKind::congruent_minus_one_d:
      s = "gamma = -1 mod D";
      break;
  }
  return s + (sign > 0 ? ", positive" : ", negative");
}

CentralTransferProfile conj_local_profile(const PlaceData& v, int k) {
  if (k < 0) throw InvalidInput("local exponent must be >= 0");
  v.validate();
  CentralTransferProfile prof;
  prof.level = k;
  switch (v.splitting) {
    case Splitting::split:
      prof.support = SupportKind::unit_congruent_one;
      prof.sign = 1;
      break;
    case Splitting::inert:
      prof.support = SupportKind::minus_in_phi_image;
      prof.sign = k % 2 ? -1 : 1;
      break;
    case Splitting::tame_ramified:
    case Splitting::wild_ramified:
      if (k > 0) {
        prof.support = SupportKind::empty;
        prof.sign = 0;
      } else {
        prof.support = SupportKind::congruent_minus_one_d;
        prof.sign = 1;
      }
      break;
  }
  return prof;
}

bool profile_support_contains(const CentralTransferProfile& prof, const TruncatedQuadRing& R,
                              TruncatedQuadRing::Elem gamma) {
  auto norm_one = [&](TruncatedQuadRing::Elem x) { return R.mul(x, R.conj(x)) == R.one(); };
  switch (prof.support) {
    case SupportKind::empty: return false;
    case SupportKind::unit_congruent_one:
      return R.is_unit(gamma) && R.in_level(R.sub(gamma, R.one()), prof.level);
    case SupportKind::minus_in_phi_image: {
      // unramified: phi(1 + p^k) is the norm-one part of 1 + p^k
      auto mg = R.neg(gamma);
      return norm_one(mg) && R.in_level(R.sub(mg, R.one()), prof.level);
    }
    case SupportKind::congruent_minus_one_d:
      return norm_one(gamma) && R.in_level(R.add(gamma, R.one()), R.different_exponent());
  }
  return false;
}

std::optional<bool> OmegaPattern::trivial_on(const Conductor& n) const {
  for (auto& [d, t] : subgroups)
    if (d == n) return t;
  return std::nullopt;
}

namespace {

void proper_divisors(const Conductor& n, std::vector<Conductor>& out) {
  std::vector<std::pair<std::string, std::int64_t>> exps;
  for (auto& [v, k] : n.exponents()) exps.emplace_back(v, k.integer());
  std::vector<std::int64_t> cur(exps.size(), 0);
  while (true) {
    Conductor d;
    bool proper = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      d.set(exps[i].first, HalfInt(cur[i]));
      if (cur[i] < exps[i].second) proper = true;
    }
    if (proper) out.push_back(d);
    std::size_t i = 0;
    while (i < exps.size() && cur[i] == exps[i].second) cur[i++] = 0;
    if (i == exps.size()) return;
    ++cur[i];
  }
}

}  // namespace

LambdaSignReport lambda_sign(DualityCase dc, int N, const Conductor& c,
                             const std::vector<PlaceData>& places, const OmegaPattern& omega) {
  if (N < 2 || N % 2) throw OutOfScope("main-term sign is only available for N even");
  validate_conductor(c, places);
  LambdaSignReport rep;

  if (dc == DualityCase::self_dual) {
    if (!c.is_integral()) throw InvalidInput("self-dual conductor must be integral");
    rep.n_ur = c;
    int sign = 1;
    for (auto& [v, k] : c.exponents()) {
      std::int64_t e = k.integer();
      if (e % 2) {
        rep.vanishes = true;
        rep.reasons.push_back("odd exponent at " + v);
      } else if (e > N) {
        rep.vanishes = true;
        rep.reasons.push_back("exponent at " + v + " exceeds N");
      } else {
        int s = (e / 2) % 2 ? -1 : 1;
        rep.factors.push_back({v, k, s});
        sign *= s;
      }
    }
    if (!rep.vanishes) rep.sign = sign;
    return rep;
  }

  int sign = 1;
  for (auto& [id, k] : c.exponents()) {
    const PlaceData& v = find_place(places, id);
    if (is_ramified(v.splitting)) {
      if (!k.is_integral()) {
        rep.vanishes = true;
        rep.reasons.push_back("half-integral exponent at ramified place " + id);
        continue;
      }
      if (k.doubled() > N) {
        rep.vanishes = true;
        rep.reasons.push_back("exponent at ramified place " + id + " exceeds N/2");
        continue;
      }
    } else {
      rep.n_ur.set(id, k);
    }
    int s = k.integer() % 2 ? -1 : 1;
    rep.factors.push_back({id, k, s});
    sign *= s;
  }
  if (rep.vanishes) {
    rep.factors.clear();
    return rep;
  }

  std::vector<Conductor> divisors;
  proper_divisors(rep.n_ur, divisors);
  std::optional<bool> top = omega.trivial_on(rep.n_ur);
  rep.sign = sign;
  bool proven = top == true;
  std::string top_state = !top ? "unknown" : (*top ? "yes" : "no");
  rep.omega_constraints.push_back("omega trivial on (1 + (" + rep.n_ur.to_string() +
                                  ") D) cap O_E^x: " + top_state);
  if (top == false) {
    // (1 + n_ur D) sits inside every (1 + n' D), n' | n_ur
    rep.reasons.push_back("omega is nontrivial on (1 + n_ur D); this omega contributes nothing");
  }
  for (auto& d : divisors) {
    std::optional<bool> t = omega.trivial_on(d);
    std::string state = !t ? "unknown" : (*t ? "no" : "yes");
    rep.omega_constraints.push_back("omega nontrivial on (1 + (" + d.to_string() +
                                    ") D) cap O_E^x: " + state);
    if (t != false) proven = false;
  }
  rep.conjectural = !proven;
  return rep;
}

PositivityReport c_positivity(DualityCase dc, int N, const Conductor& c,
                              const std::vector<PlaceData>& places, bool omega_infty_trivial,
                              const std::map<std::string, int>& omega_prime_conductors) {
  PositivityReport rep;
  validate_conductor(c, places);
  if (dc == DualityCase::self_dual) {
    if (!c.is_integral()) throw InvalidInput("self-dual conductor must be integral");
    rep.holds = true;
    for (auto& [v, cv] : omega_prime_conductors) {
      if (c.exponent(v) < HalfInt(cv)) {
        rep.holds = false;
        rep.reasons.push_back("v(n) below the conductor of omega' at " + v);
      }
    }
    if (!omega_infty_trivial && c.empty()) {
      rep.holds = false;
      rep.reasons.push_back("n = 1 with nontrivial omega at infinity");
    }
    if (rep.holds) rep.reasons.push_back("v(n) >= c(omega'_v) at every place");
    return rep;
  }
  if (N < 4 || N % 2) {
    rep.reasons.push_back("needs N >= 4 even");
    return rep;
  }
  auto valid = valid_conductor(c, places, N, ValidityMode::valid);
  if (valid.holds) {
    rep.holds = true;
    rep.reasons.push_back("conductor is valid");
    return rep;
  }
  for (auto& r : valid.reasons) rep.reasons.push_back("valid: " + r);
  if (omega_infty_trivial) {
    auto zero = valid_conductor(c, places, N, ValidityMode::zero_valid);
    if (zero.holds) {
      rep.holds = true;
      rep.reasons.push_back("conductor is 0-valid and omega at infinity is trivial");
      return rep;
    }
    for (auto& r : zero.reasons) rep.reasons.push_back("0-valid: " + r);
  }
  return rep;
}

}  // namespace rootnum
