#include "rootnum/place.hpp"

#include <sstream>

#include "rootnum/errors.hpp"

namespace rootnum {

std::string_view to_string(Splitting s) {
  switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::tame_ramified: return "tame_ramified";
    case Splitting::wild_ramified: return "wild_ramified";
  }
  return "?";
}

Splitting parse_splitting(std::string_view text) {
  if (text == "split") return Splitting::split;
  if (text == "inert") return Splitting::inert;
  if (text == "tame_ramified" || text == "tame") return Splitting::tame_ramified;
  if (text == "wild_ramified" || text == "wild") return Splitting::wild_ramified;
  throw InvalidInput("unknown splitting type '" + std::string(text) + "'");
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void PlaceData::validate() const {
  auto fail = [&](const std::string& why) {
    throw InvalidInput("place '" + id + "': " + why);
  };
  if (id.empty()) throw InvalidInput("place with empty id");
  if (!is_prime(p)) fail("p must be prime");
  if (f < 1) fail("residue degree f must be >= 1");
  if (b < -2) fail("b must be >= -2");
  switch (splitting) {
    case Splitting::split:
    case Splitting::inert:
      if (j != HalfInt::from_doubled(1)) fail("unramified places have j = 1/2");
      if (d_exp != 0) fail("unramified places have d_exp = 0");
      break;
    case Splitting::tame_ramified:
      if (p == 2) fail("tame ramification needs p odd");
      if (j != HalfInt(1)) fail("tame places have j = 1");
      if (d_exp != 1) fail("tame places have d_exp = 1");
      break;
    case Splitting::wild_ramified:
      if (p != 2) fail("wild quadratic ramification needs p = 2");
      if (!j.is_integral() || j < HalfInt(1)) fail("wild places have integral j >= 1");
      if (d_exp < 2) fail("wild places have d_exp >= 2");
      break;
  }
}

const PlaceData& find_place(const std::vector<PlaceData>& places, std::string_view id) {
  for (auto& v : places)
    if (v.id == id) return v;
  throw InvalidInput("unknown place '" + std::string(id) + "'");
}

void Conductor::set(const std::string& place, HalfInt exp) {
  if (exp < HalfInt(0)) throw InvalidInput("negative conductor exponent at '" + place + "'");
  if (exp == HalfInt(0)) exps_.erase(place);
  else exps_[place] = exp;
}

HalfInt Conductor::exponent(std::string_view place) const {
  auto it = exps_.find(place);
  return it == exps_.end() ? HalfInt(0) : it->second;
}

bool Conductor::is_integral() const {
  for (auto& [v, k] : exps_)
    if (!k.is_integral()) return false;
  return true;
}

HalfInt Conductor::total() const {
  HalfInt s;
  for (auto& [v, k] : exps_) s += k;
  return s;
}

std::string Conductor::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, k] : exps_) {
    if (!first) os << " * ";
    first = false;
    os << v << "^" << k.to_string();
  }
  return os.str();
}

void validate_conductor(const Conductor& c, const std::vector<PlaceData>& places) {
  for (auto& [id, k] : c.exponents()) {
    const PlaceData& v = find_place(places, id);
    if (!k.is_integral() && !is_ramified(v.splitting)) {
      throw InvalidInput("half-integral exponent " + k.to_string() + " at unramified place '" +
                         id + "'");
    }
  }
}

std::int64_t local_exponent(const Conductor& c, const PlaceData& v) {
  HalfInt k = c.exponent(v.id);
  if (is_ramified(v.splitting)) return k.doubled();
  if (!k.is_integral()) {
    throw InvalidInput("half-integral exponent at unramified place '" + v.id + "'");
  }
  return k.integer();
}

namespace {

// max{floor(k - (j - 1/2)), 0}
std::int64_t shifted_exponent(HalfInt k, const PlaceData& v) {
  std::int64_t s = (k - (v.j - HalfInt::from_doubled(1))).floor();
  return s > 0 ? s : 0;
}

// Counts declared places meeting the one-place and two-place thresholds
// b + 2/e and b + 1/e. `value` gives the quantity compared at each place.
template <class F>
bool threshold_condition(const std::vector<PlaceData>& places, F value,
                         std::vector<std::string>* reasons) {
  int strong = 0, weak = 0;
  for (auto& v : places) {
    HalfInt x = value(v);
    HalfInt b(v.b);
    HalfInt one_over_e = HalfInt::from_doubled(v.e() == 2 ? 1 : 2);
    if (x >= b + one_over_e * 2) {
      ++strong;
      if (reasons) reasons->push_back("place " + v.id + " meets b + 2/e");
    }
    if (x >= b + one_over_e) ++weak;
  }
  if (strong >= 1) return true;
  if (weak >= 2) {
    if (reasons) reasons->push_back("two places meet b + 1/e");
    return true;
  }
  if (reasons) reasons->push_back("no place meets b + 2/e and fewer than two meet b + 1/e");
  return false;
}

}  // namespace

ValidityReport valid_conductor(const Conductor& c, const std::vector<PlaceData>& places, int N,
                               ValidityMode mode) {
  if (N <= 0 || N % 2) throw InvalidInput("valid_conductor needs N even and positive");
  for (auto& v : places) v.validate();
  validate_conductor(c, places);
  ValidityReport rep;
  rep.holds = true;
  for (auto& v : places) {
    if (v.splitting != Splitting::wild_ramified) continue;
    HalfInt k = c.exponent(v.id);
    bool small = 2 * k.doubled() <= N;  // k <= N/4
    HalfInt bound = mode == ValidityMode::valid ? v.j * 2 - HalfInt(1) : v.j * 4 - HalfInt(2);
    if (!small && !(k > bound)) {
      rep.holds = false;
      rep.reasons.push_back("wild place " + v.id + ": N/4 < k_v = " + k.to_string() +
                            " <= " + bound.to_string());
    }
  }
  if (mode == ValidityMode::valid) {
    bool ok = threshold_condition(
        places, [&](const PlaceData& v) { return HalfInt(shifted_exponent(c.exponent(v.id), v)); },
        &rep.reasons);
    rep.holds = rep.holds && ok;
  }
  return rep;
}

Conductor shifted_conductor(const Conductor& c, const std::vector<PlaceData>& places) {
  Conductor out;
  for (auto& [id, k] : c.exponents()) {
    out.set(id, HalfInt(shifted_exponent(k, find_place(places, id))));
  }
  return out;
}

bool cchar_globalization_check(const Conductor& c, const std::vector<PlaceData>& places) {
  validate_conductor(c, places);
  if (!c.is_integral()) return false;
  return threshold_condition(
      places, [&](const PlaceData& v) { return c.exponent(v.id); }, nullptr);
}

}  // namespace rootnum
