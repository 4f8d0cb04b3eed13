#include "rootnum/prediction.hpp"

#include "rootnum/errors.hpp"

namespace rootnum {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::conjectural_no: return "conjectural-no";
    case Verdict::blocked: return "blocked";
  }
  return "?";
}

namespace {

// epsilon(1/2, I_w) = i^{w+1} for each pair of exponents +-w/2. Exponent 0
// is taken with trivial sign character. nullopt when the product is not real.
std::optional<int> archimedean_epsilon(const std::vector<LaurentPoly>& infchar) {
  std::int64_t power = 0;
  for (auto& lam : infchar) {
    for (auto& [e, c] : lam.terms()) {
      if (e <= HalfInt(0)) continue;
      std::int64_t w = e.doubled();
      power += (w + 1) * static_cast<std::int64_t>(c);
    }
  }
  power %= 4;
  if (power % 2) return std::nullopt;
  return power == 0 ? 1 : -1;
}

void check_infchar(const Scenario& s) {
  for (auto& lam : s.infchar) {
    auto rep = classify_integral(s.duality, lam, s.N);
    if (!rep.integral || !rep.regular) {
      throw InvalidInput("infinitesimal character is not regular integral: " +
                         (rep.reason.empty() ? std::string("multiplicity too large") : rep.reason));
    }
  }
}

PredictionReport predict_self_dual(const Scenario& s) {
  PredictionReport r;
  r.duality = s.duality;
  r.N = s.N;
  r.conductor = s.conductor;
  if (!s.conductor.is_integral()) throw InvalidInput("self-dual conductor must be integral");
  if (!s.infchar.empty()) {
    r.epsilon_infinity = archimedean_epsilon(s.infchar);
    if (!r.epsilon_infinity) r.notes.push_back("epsilon_infinity is not real under the convention");
  }

  r.positivity = c_positivity(DualityCase::self_dual, s.N, s.conductor, s.places,
                              s.omega_infty_trivial, s.omega_prime_conductors);
  if (!r.positivity.holds) r.notes.push_back("positivity hypothesis fails; the family may be empty");
  auto lam = lambda_sign(DualityCase::self_dual, s.N, s.conductor, s.places);
  r.main_term = lam;
  if (lam.vanishes) {
    r.equidistributes = Verdict::yes;
    r.conditions.push_back({"some v(n) is odd or exceeds N, so the transfer at the identity vanishes",
                            "selfdual-equidistribution"});
    return r;
  }
  r.equidistributes = Verdict::no;
  r.bias_sign = lam.sign;
  r.bias_factors = lam.factors;
  r.conditions.push_back({"every v(n) is even and at most N", "selfdual-bias"});
  r.conditions.push_back({"bias sign is prod_v (-1)^{v(n)/2} relative to epsilon_infinity",
                          "selfdual-bias"});
  if (r.epsilon_infinity) {
    r.notes.push_back("absolute bias sign " + std::to_string(*r.epsilon_infinity * *lam.sign) +
                      " under the stated archimedean convention");
  }
  return r;
}

PredictionReport predict_conjugate(const Scenario& s) {
  PredictionReport r;
  r.duality = s.duality;
  r.N = s.N;
  r.conductor = s.conductor;

  r.positivity = c_positivity(DualityCase::conjugate, s.N, s.conductor, s.places,
                              s.omega_infty_trivial);
  if (!r.positivity.holds) {
    r.equidistributes = Verdict::blocked;
    r.conditions.push_back({s.omega_infty_trivial
                                ? "conductor is neither valid nor 0-valid"
                                : "conductor is not valid (omega at infinity nontrivial)",
                            "conjugate-positivity"});
    return r;
  }
  r.conditions.push_back({r.positivity.reasons.back(), "conjugate-positivity"});
  auto lam = lambda_sign(DualityCase::conjugate, s.N, s.conductor, s.places, s.omega);
  r.main_term = lam;
  if (lam.vanishes) {
    r.equidistributes = Verdict::yes;
    r.conditions.push_back(
        {"a ramified place has half-integral exponent or exponent above N/2",
         "conjugate-equidistribution"});
    return r;
  }
  r.equidistributes = Verdict::conjectural_no;
  r.bias_sign = lam.sign;
  r.bias_factors = lam.factors;
  r.conditions.push_back({"every ramified exponent is integral and at most N/2",
                          "conjugate-main-term"});
  r.conditions.push_back({lam.conjectural
                              ? "nonvanishing of the main term rests on the character-sum conjecture"
                              : "omega pattern makes the main term provably nonzero",
                          "conjugate-main-term"});
  r.notes.push_back("non-equidistribution is not proven in the conjugate self-dual case");
  return r;
}

}  // namespace

PredictionReport predict(const Scenario& s) {
  if (s.N < 1) throw InvalidInput("N must be >= 1");
  if (s.N % 2) throw OutOfScope("odd N is outside the method (no family with nontrivial root number)");
  for (auto& v : s.places) v.validate();
  validate_conductor(s.conductor, s.places);
  check_infchar(s);
  PredictionReport r =
      s.duality == DualityCase::self_dual ? predict_self_dual(s) : predict_conjugate(s);
  r.notes.push_back("prediction holds for any full weighting; the weighting is not modelled");
  r.notes.push_back("tau'(G) and the error exponents are kept symbolic");
  return r;
}

}  // namespace rootnum
