#include <algorithm>

#include "rootnum/errors.hpp"
#include "rootnum/groups.hpp"

namespace rootnum {

EtaLabel eta_product(const EtaLabel& a, const EtaLabel& b) {
  EtaLabel out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.begin()));
  return out;
}

std::string eta_to_string(const EtaLabel& eta) {
  if (eta.empty()) return "1";
  std::string s;
  for (auto& x : eta) s += (s.empty() ? "" : "*") + x;
  return s;
}

int SimpleGroup::rank() const {
  switch (family) {
    case GroupFamily::Sp:
    case GroupFamily::SO_even: return n / 2;
    case GroupFamily::SO_odd: return (n - 1) / 2;
    default: return n;
  }
}

int SimpleGroup::dual_dimension() const {
  switch (family) {
    case GroupFamily::Sp: return n + 1;
    case GroupFamily::SO_odd: return n - 1;
    default: return n;
  }
}

int SimpleGroup::positive_roots() const {
  int r = rank();
  switch (family) {
    case GroupFamily::Sp:
    case GroupFamily::SO_odd: return r * r;
    case GroupFamily::SO_even: return r * (r - 1);
    default: return n * (n - 1) / 2;
  }
}

bool SimpleGroup::is_trivial() const {
  switch (family) {
    case GroupFamily::Sp:
    case GroupFamily::SO_even: return n == 0;
    case GroupFamily::SO_odd: return n == 1;
    default: return n == 0;
  }
}

std::string SimpleGroup::name() const {
  std::string eta_part = eta.empty() ? "" : "^{" + eta_to_string(eta) + "}";
  switch (family) {
    case GroupFamily::Sp: return "Sp" + eta_part + "_" + std::to_string(n);
    case GroupFamily::SO_odd: return "SO_" + std::to_string(n);
    case GroupFamily::SO_even: return "SO" + eta_part + "_" + std::to_string(n);
    case GroupFamily::U_plus: return "U_" + std::to_string(n) + "^+";
    case GroupFamily::U_minus: return "U_" + std::to_string(n) + "^-";
  }
  return "?";
}

int GroupDescriptor::positive_roots() const {
  int s = 0;
  for (auto& f : factors) s += f.positive_roots();
  return s;
}

std::string GroupDescriptor::name() const {
  if (factors.empty()) return "1";
  std::string s;
  for (auto& f : factors) s += (s.empty() ? "" : " x ") + f.name();
  return s;
}

namespace {

Rational rat(HalfInt h) { return Rational(h.doubled(), 2); }

// Dominant coordinates of lambda for g.
std::vector<Rational> coordinates(const SimpleGroup& g, const LaurentPoly& lambda) {
  if (!lambda.all_coefficients_nonnegative()) {
    throw InvalidInput("infinitesimal character must have nonnegative multiplicities");
  }
  if (lambda.mass() != g.dual_dimension()) {
    throw InvalidInput("infinitesimal character has rank " + lambda.mass().str() + ", " +
                       g.name() + " needs " + std::to_string(g.dual_dimension()));
  }
  auto ex = lambda.exponents();  // decreasing
  std::vector<Rational> out;
  if (g.family == GroupFamily::U_plus || g.family == GroupFamily::U_minus) {
    for (auto e : ex) out.push_back(rat(e));
    return out;
  }
  int r = g.rank();
  std::vector<HalfInt> mu(ex.begin(), ex.begin() + r);
  std::vector<HalfInt> full;
  for (auto x : mu) {
    full.push_back(x);
    full.push_back(-x);
  }
  if (g.family == GroupFamily::Sp) full.push_back(HalfInt(0));
  if (!(LaurentPoly::from_exponents(full) == lambda)) {
    throw InvalidInput("infinitesimal character is not of the form required by " + g.name());
  }
  for (auto x : mu) out.push_back(rat(x));
  return out;
}

std::vector<Rational> pairings_from_coordinates(const SimpleGroup& g,
                                                const std::vector<Rational>& x) {
  std::vector<Rational> out;
  const std::size_t n = x.size();
  if (g.family == GroupFamily::U_plus || g.family == GroupFamily::U_minus) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.push_back(x[i] - x[j]);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(x[i] - x[j]);
      out.push_back(x[i] + x[j]);
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.family == GroupFamily::Sp) out.push_back(x[i]);
    else if (g.family == GroupFamily::SO_odd) out.push_back(2 * x[i]);
  }
  return out;
}

}  // namespace

LaurentPoly rho_infchar(const SimpleGroup& g) {
  std::vector<HalfInt> ex;
  int r = g.rank();
  switch (g.family) {
    case GroupFamily::Sp:
      for (int i = 1; i <= r; ++i) {
        ex.push_back(HalfInt(i));
        ex.push_back(HalfInt(-i));
      }
      ex.push_back(HalfInt(0));
      break;
    case GroupFamily::SO_odd:
      for (int i = 0; i < r; ++i) {
        ex.push_back(HalfInt::from_doubled(2 * i + 1));
        ex.push_back(HalfInt::from_doubled(-(2 * i + 1)));
      }
      break;
    case GroupFamily::SO_even:
      for (int i = 0; i < r; ++i) {
        ex.push_back(HalfInt(i));
        ex.push_back(HalfInt(-i));
      }
      break;
    default:
      for (int i = 0; i < g.n; ++i) ex.push_back(HalfInt::from_doubled(g.n - 1 - 2 * i));
      break;
  }
  return LaurentPoly::from_exponents(ex);
}

std::vector<Rational> coroot_pairings(const SimpleGroup& g, const LaurentPoly& lambda) {
  return pairings_from_coordinates(g, coordinates(g, lambda));
}

Rational weyl_pairing_product(const SimpleGroup& g, const LaurentPoly& lambda) {
  Rational p = 1;
  for (auto& x : coroot_pairings(g, lambda)) p *= x;
  return p;
}

BigInt weyl_dim(const SimpleGroup& g, const LaurentPoly& lambda) {
  auto num = coroot_pairings(g, lambda);
  auto den = coroot_pairings(g, rho_infchar(g));
  Rational d = 1;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) throw InvalidInput("singular infinitesimal character for " + g.name());
    d *= num[i] / den[i];
  }
  if (d < 0) d = -d;
  if (boost::multiprecision::denominator(d) != 1) {
    throw InvalidInput("infinitesimal character is not integral for " + g.name());
  }
  return boost::multiprecision::numerator(d);
}

std::optional<Rational> m_norm(const SimpleGroup& g, const LaurentPoly& lambda) {
  auto p = coroot_pairings(g, lambda);
  if (p.empty()) return std::nullopt;
  return *std::min_element(p.begin(), p.end());
}

std::vector<LaurentPoly> split_infchar(const GroupDescriptor& g, const LaurentPoly& lambda) {
  if (g.factors.size() == 1) return {lambda};
  if (g.factors.empty()) {
    if (!lambda.is_zero()) throw InvalidInput("trivial group takes an empty infinitesimal character");
    return {};
  }
  if (g.factors.size() != 2) throw InvalidInput("at most two factors supported");
  LaurentPoly half, whole;
  for (auto& [e, c] : lambda.terms()) {
    (e.is_integral() ? whole : half) += LaurentPoly::monomial(e, c);
  }
  std::vector<LaurentPoly> out;
  for (auto& f : g.factors) {
    if (f.family == GroupFamily::U_plus || f.family == GroupFamily::U_minus) {
      throw InvalidInput("cannot split an infinitesimal character between unitary factors");
    }
    out.push_back(f.family == GroupFamily::SO_odd ? half : whole);
  }
  return out;
}

BigInt weyl_dim(const GroupDescriptor& g, const LaurentPoly& lambda) {
  auto parts = split_infchar(g, lambda);
  BigInt d = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) d *= weyl_dim(g.factors[i], parts[i]);
  return d;
}

Rational weyl_pairing_product(const GroupDescriptor& g, const LaurentPoly& lambda) {
  auto parts = split_infchar(g, lambda);
  Rational d = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) d *= weyl_pairing_product(g.factors[i], parts[i]);
  return d;
}

std::optional<Rational> m_norm(const GroupDescriptor& g, const LaurentPoly& lambda) {
  auto parts = split_infchar(g, lambda);
  std::optional<Rational> m;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto mi = m_norm(g.factors[i], parts[i]);
    if (mi && (!m || *mi < *m)) m = mi;
  }
  return m;
}

}  // namespace rootnum
