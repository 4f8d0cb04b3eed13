#include "rootnum/scenario_io.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rootnum/errors.hpp"

namespace rootnum {

namespace {

using json = nlohmann::ordered_json;

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                std::string_view what) {
  if (!obj.is_object()) throw InvalidInput(std::string(what) + " must be an object");
  for (auto& [k, v] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw InvalidInput("unknown key '" + k + "' in " + std::string(what));
  }
}

HalfInt half_from_json(const json& v, std::string_view what) {
  if (v.is_number_integer()) return HalfInt(v.get<std::int64_t>());
  if (v.is_string()) return HalfInt::parse(v.get<std::string>());
  throw InvalidInput(std::string(what) + " must be an integer or a string like \"3/2\"");
}

template <class T>
T get_int(const json& obj, const char* key, std::string_view what) {
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw InvalidInput(std::string(key) + " in " + std::string(what) + " must be an integer");
  return v.get<T>();
}

PlaceData place_from_json(const json& o) {
  check_keys(o, {"id", "p", "f", "splitting", "j", "b", "d_exp"}, "place");
  if (!o.contains("id") || !o["id"].is_string()) throw InvalidInput("place needs a string id");
  if (!o.contains("p")) throw InvalidInput("place needs p");
  PlaceData v;
  v.id = o["id"].get<std::string>();
  v.p = get_int<std::int64_t>(o, "p", "place");
  if (o.contains("f")) v.f = get_int<int>(o, "f", "place");
  if (o.contains("splitting")) {
    if (!o["splitting"].is_string()) throw InvalidInput("splitting must be a string");
    v.splitting = parse_splitting(o["splitting"].get<std::string>());
  }
  switch (v.splitting) {
    case Splitting::split:
    case Splitting::inert:
      v.j = HalfInt::from_doubled(1);
      v.d_exp = 0;
      break;
    case Splitting::tame_ramified:
      v.j = HalfInt(1);
      v.d_exp = 1;
      break;
    case Splitting::wild_ramified:
      if (!o.contains("j") || !o.contains("d_exp"))
        throw InvalidInput("wild place '" + v.id + "' needs explicit j and d_exp");
      break;
  }
  if (o.contains("j")) v.j = half_from_json(o["j"], "j");
  if (o.contains("b")) v.b = get_int<int>(o, "b", "place");
  if (o.contains("d_exp")) v.d_exp = get_int<int>(o, "d_exp", "place");
  v.validate();
  return v;
}

Conductor conductor_from_json(const json& arr) {
  if (!arr.is_array()) throw InvalidInput("conductor must be an array");
  Conductor c;
  std::set<std::string> seen;
  for (auto& e : arr) {
    check_keys(e, {"place", "exp"}, "conductor entry");
    if (!e.contains("place") || !e["place"].is_string() || !e.contains("exp"))
      throw InvalidInput("conductor entry needs place and exp");
    std::string id = e["place"].get<std::string>();
    if (!seen.insert(id).second) throw InvalidInput("place '" + id + "' repeated in conductor");
    HalfInt k = half_from_json(e["exp"], "exp");
    if (k < HalfInt(0)) throw InvalidInput("negative conductor exponent");
    c.set(id, k);
  }
  return c;
}

json conductor_json(const Conductor& c) {
  json arr = json::array();
  for (auto& [v, k] : c.exponents()) arr.push_back({{"place", v}, {"exp", k.to_string()}});
  return arr;
}

LaurentPoly infchar_from_json(const json& arr) {
  if (!arr.is_array()) throw InvalidInput("infchar entry must be an array of exponents");
  std::vector<HalfInt> exps;
  for (auto& e : arr) exps.push_back(half_from_json(e, "infchar exponent"));
  return LaurentPoly::from_exponents(exps);
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json report_json(const PredictionReport& r) {
  json out;
  out["case"] = r.duality == DualityCase::self_dual ? "self_dual" : "conjugate_self_dual";
  out["N"] = r.N;
  out["conductor"] = conductor_json(r.conductor);
  out["equidistributes"] = std::string(to_string(r.equidistributes));
  out["bias_sign"] = opt_int(r.bias_sign);
  json factors = json::array();
  for (auto& f : r.bias_factors)
    factors.push_back({{"place", f.place}, {"exp", f.exp.to_string()}, {"sign", f.sign}});
  out["bias_factors"] = factors;
  json arch;
  arch["epsilon_infinity"] = opt_int(r.epsilon_infinity);
  arch["convention"] = "epsilon(1/2, I_w) = i^(w+1); convention-dependent";
  arch["bias_sign_is_relative_to_epsilon_infinity"] = true;
  out["archimedean"] = arch;
  out["c_positivity"] = {{"holds", r.positivity.holds}, {"reasons", r.positivity.reasons}};
  if (r.main_term) {
    const auto& m = *r.main_term;
    json mt;
    mt["vanishes"] = m.vanishes;
    mt["sign"] = opt_int(m.sign);
    mt["conjectural"] = m.conjectural;
    mt["n_ur"] = conductor_json(m.n_ur);
    mt["omega_constraints"] = m.omega_constraints;
    mt["reasons"] = m.reasons;
    out["main_term"] = mt;
  } else {
    out["main_term"] = nullptr;
  }
  json conds = json::array();
  for (auto& c : r.conditions) conds.push_back({{"clause", c.clause}, {"tag", c.tag}});
  out["conditions"] = conds;
  out["notes"] = r.notes;
  return out;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json doc = parse_text(json_text);
  check_keys(doc,
             {"case", "N", "places", "conductor", "infchar", "omega_infinity", "omega_pattern",
              "omega_prime_conductors"},
             "scenario");
  for (const char* key : {"case", "N", "places", "conductor"})
    if (!doc.contains(key)) throw InvalidInput(std::string("scenario needs '") + key + "'");
  Scenario s;
  try {
    if (!doc["case"].is_string()) throw InvalidInput("case must be a string");
    std::string c = doc["case"].get<std::string>();
    if (c == "self_dual")
      s.duality = DualityCase::self_dual;
    else if (c == "conjugate_self_dual")
      s.duality = DualityCase::conjugate;
    else
      throw InvalidInput("case must be self_dual or conjugate_self_dual");
    s.N = get_int<int>(doc, "N", "scenario");
    if (!doc["places"].is_array()) throw InvalidInput("places must be an array");
    std::set<std::string> ids;
    for (auto& p : doc["places"]) {
      s.places.push_back(place_from_json(p));
      if (!ids.insert(s.places.back().id).second)
        throw InvalidInput("duplicate place id '" + s.places.back().id + "'");
    }
    std::sort(s.places.begin(), s.places.end(),
              [](const PlaceData& a, const PlaceData& b) { return a.id < b.id; });
    s.conductor = conductor_from_json(doc["conductor"]);
    if (doc.contains("infchar")) {
      if (!doc["infchar"].is_array()) throw InvalidInput("infchar must be an array");
      for (auto& lam : doc["infchar"]) s.infchar.push_back(infchar_from_json(lam));
    }
    if (doc.contains("omega_infinity")) {
      const json& w = doc["omega_infinity"];
      if (w == "trivial")
        s.omega_infty_trivial = true;
      else if (w == "nontrivial")
        s.omega_infty_trivial = false;
      else
        throw InvalidInput("omega_infinity must be trivial or nontrivial");
    }
    if (doc.contains("omega_pattern")) {
      if (!doc["omega_pattern"].is_array()) throw InvalidInput("omega_pattern must be an array");
      for (auto& e : doc["omega_pattern"]) {
        check_keys(e, {"divisor", "trivial"}, "omega_pattern entry");
        if (!e.contains("divisor") || !e.contains("trivial") || !e["trivial"].is_boolean())
          throw InvalidInput("omega_pattern entry needs divisor and boolean trivial");
        Conductor d = conductor_from_json(e["divisor"]);
        validate_conductor(d, s.places);
        s.omega.subgroups.emplace_back(d, e["trivial"].get<bool>());
      }
    }
    if (doc.contains("omega_prime_conductors")) {
      const json& m = doc["omega_prime_conductors"];
      if (!m.is_object()) throw InvalidInput("omega_prime_conductors must be an object");
      for (auto& [k, v] : m.items()) {
        find_place(s.places, k);
        if (!v.is_number_integer() || v.get<int>() < 0)
          throw InvalidInput("omega_prime_conductors values must be nonnegative integers");
        s.omega_prime_conductors[k] = v.get<int>();
      }
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad scenario: ") + e.what());
  }
  validate_conductor(s.conductor, s.places);
  return s;
}

std::string report_to_json(const PredictionReport& r) { return report_json(r).dump(2) + "\n"; }

std::string report_to_text(const PredictionReport& r) {
  std::ostringstream os;
  os << "case: " << (r.duality == DualityCase::self_dual ? "self-dual" : "conjugate self-dual")
     << "\nN: " << r.N << "\nconductor: " << r.conductor.to_string()
     << "\nequidistributes: " << to_string(r.equidistributes) << "\n";
  if (r.bias_sign) {
    os << "bias sign (relative to epsilon_infinity): " << (*r.bias_sign > 0 ? "+1" : "-1") << "\n";
    for (auto& f : r.bias_factors)
      os << "  " << f.place << "^" << f.exp.to_string() << ": " << (f.sign > 0 ? "+1" : "-1")
         << "\n";
  }
  if (r.epsilon_infinity) os << "epsilon_infinity: " << *r.epsilon_infinity << " (convention-dependent)\n";
  os << "positivity: " << (r.positivity.holds ? "holds" : "fails") << "\n";
  for (auto& s : r.positivity.reasons) os << "  " << s << "\n";
  if (r.main_term) {
    for (auto& s : r.main_term->omega_constraints) os << "  " << s << "\n";
  }
  os << "conditions:\n";
  for (auto& c : r.conditions) os << "  [" << c.tag << "] " << c.clause << "\n";
  for (auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string error_to_json(std::string_view kind, std::string_view message) {
  json out;
  out["error"] = {{"kind", std::string(kind)}, {"message", std::string(message)}};
  return out.dump(2) + "\n";
}

std::string schedule_to_json(const CoefficientSchedule& s) {
  json shifts = json::object();
  for (auto& [i, a] : s.shifts) {
    // coefficients fit in int64 for the supported ranges; fall back to strings
    if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max())
      shifts[std::to_string(i)] = static_cast<std::int64_t>(a);
    else
      shifts[std::to_string(i)] = a.str();
  }
  json out;
  out["shifts"] = shifts;
  return out.dump() + "\n";
}

std::string schedule_to_text(const CoefficientSchedule& s) {
  std::ostringstream os;
  os << "case " << to_string(s.trace_case) << ", N = " << s.N << ", k = " << s.k << "\n";
  for (auto& [i, a] : s.shifts) os << "  a(" << s.k << ", " << i << ") = " << a.str() << "\n";
  return os.str();
}

Conductor parse_conductor_json(std::string_view json_text) {
  try {
    return conductor_from_json(parse_text(json_text));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad conductor: ") + e.what());
  }
}

std::string conductor_to_json(const Conductor& c) { return conductor_json(c).dump() + "\n"; }

}  // namespace rootnum
