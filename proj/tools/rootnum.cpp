#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootnum/epsilon_transfer.hpp"
#include "rootnum/errors.hpp"
#include "rootnum/groups.hpp"
#include "rootnum/local_field.hpp"
#include "rootnum/oldforms.hpp"
#include "rootnum/prediction.hpp"
#include "rootnum/scenario_io.hpp"

using namespace rootnum;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<HalfInt> parse_exponent_list(const std::string& text) {
  std::vector<HalfInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(HalfInt::parse(item));
  }
  return out;
}

// "v1:2,v2:3/2"
Conductor parse_inline_conductor(const std::string& text) {
  Conductor c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidInput("conductor entries look like place:exp");
    c.set(item.substr(0, colon), HalfInt::parse(item.substr(colon + 1)));
  }
  return c;
}

TruncatedQuadRing::Elem parse_elem(const TruncatedQuadRing& R, const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidInput("element looks like a,b (meaning a + b w)");
  return R.make(std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1)));
}

GroupFamily parse_family(const std::string& s) {
  if (s == "Sp") return GroupFamily::Sp;
  if (s == "SO_odd") return GroupFamily::SO_odd;
  if (s == "SO_even") return GroupFamily::SO_even;
  if (s == "U" || s == "U_plus") return GroupFamily::U_plus;
  if (s == "U_minus") return GroupFamily::U_minus;
  throw InvalidInput("family must be Sp, SO_odd, SO_even, U_plus or U_minus");
}

std::string rat_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

TruncatedQuadRing default_ring(const QuadPresentation& pres) {
  auto probe = TruncatedQuadRing::build(pres, 1);
  return TruncatedQuadRing::build(pres, 2 * (probe.different_exponent() + 2));
}

void emit(const json& j, const std::string& text, const std::string& format) {
  if (format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rootnum: root-number equidistribution calculators"};
  app.require_subcommand(1);
  std::string format = "text";

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "coefficients a_N(k, i) of the new-part test function");
  std::string c_case = "selfdual";
  int c_N = 2, c_k = 0;
  bool c_closed = false;
  coeffs->add_option("--case", c_case, "selfdual | conj_nonsplit | conj_split");
  coeffs->add_option("--N", c_N)->required();
  coeffs->add_option("--k", c_k)->required();
  coeffs->add_flag("--closed-form", c_closed, "print the closed form instead of solving");
  coeffs->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // oldforms
  auto* old = app.add_subcommand("oldforms", "twisted traces on oldforms");
  std::string o_case = "selfdual";
  int o_N = 2, o_k = 0;
  bool o_brute = false;
  old->add_option("--case", o_case, "selfdual | conj_nonsplit | conj_split");
  old->add_option("--N", o_N)->required();
  old->add_option("--k", o_k)->required();
  old->add_flag("--brute", o_brute, "count fixed points by enumeration");
  old->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // epsilon
  auto* eps = app.add_subcommand("epsilon", "central transfer values and main-term signs");
  std::string e_op = "transfer", e_scenario, e_conductor, e_preset;
  int e_N = 2, e_k = 0;
  eps->add_option("--op", e_op, "transfer | lambda | positivity | profile")
      ->check(CLI::IsMember({"transfer", "lambda", "positivity", "profile"}));
  eps->add_option("--scenario", e_scenario, "scenario JSON file");
  eps->add_option("--N", e_N);
  eps->add_option("--conductor", e_conductor, "inline conductor, e.g. v:2,w:4");
  eps->add_option("--preset", e_preset, "local ring preset (profile)");
  eps->add_option("--k", e_k, "local exponent (profile)");
  eps->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // localfield
  auto* lf = app.add_subcommand("localfield", "residue-ring computations for E_w / F_v");
  std::string l_preset, l_op = "j", l_y;
  int l_m = 0, l_k = 0, l_N = 3;
  lf->add_option("--preset", l_preset)->required();
  lf->add_option("--op", l_op, "j | phi | witness | different | units")
      ->check(CLI::IsMember({"j", "phi", "witness", "different", "units"}));
  lf->add_option("--m", l_m, "truncation level (default from the different)");
  lf->add_option("--k", l_k, "level for phi");
  lf->add_option("--N", l_N, "matrix size for witness");
  lf->add_option("--y", l_y, "norm-one element a,b for witness");
  lf->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // dims
  auto* dims = app.add_subcommand("dims", "Weyl dimensions and norms");
  std::string d_family = "Sp", d_lambda, d_op = "dim";
  int d_n = 2;
  dims->add_option("--family", d_family, "Sp | SO_odd | SO_even | U_plus | U_minus");
  dims->add_option("--n", d_n, "matrix size of G");
  dims->add_option("--lambda", d_lambda, "comma-separated exponents (default rho)");
  dims->add_option("--op", d_op, "dim | pairing | m | rho")
      ->check(CLI::IsMember({"dim", "pairing", "m", "rho"}));
  dims->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // predict
  auto* pred = app.add_subcommand("predict", "equidistribution prediction for a scenario");
  std::string p_scenario;
  pred->add_option("--scenario", p_scenario, "scenario JSON file")->required();
  pred->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  auto fail = [&](std::string_view kind, const std::exception& e, int code) {
    if (format == "json")
      std::cout << error_to_json(kind, e.what());
    else
      std::cerr << kind << ": " << e.what() << "\n";
    return code;
  };

  try {
    if (*coeffs) {
      TraceCase tc = parse_trace_case(c_case);
      CoefficientSchedule s;
      if (c_closed) {
        s.trace_case = tc;
        s.N = c_N;
        s.k = c_k;
        for (int i = 0; i <= c_k; ++i) {
          BigInt a = coefficient_closed_form(tc, c_N, i);
          if (a != 0) s.shifts[i] = a;
        }
      } else {
        s = coefficient_schedule(tc, c_N, c_k);
      }
      std::cout << (format == "json" ? schedule_to_json(s) : schedule_to_text(s));
    } else if (*old) {
      TraceCase tc = parse_trace_case(o_case);
      BigInt t = o_brute ? involution_fixed_points(tc, o_N, o_k) : closed_form_trace(tc, o_N, o_k);
      json j;
      j["case"] = std::string(to_string(tc));
      j["N"] = o_N;
      j["k"] = o_k;
      j["dimension"] = oldform_dimension(o_N, o_k).str();
      j["trace"] = t.str();
      emit(j, "trace " + t.str() + "\n", format);
    } else if (*eps) {
      Scenario sc;
      if (!e_scenario.empty()) sc = parse_scenario(read_file(e_scenario));
      if (!e_conductor.empty()) sc.conductor = parse_inline_conductor(e_conductor);
      if (eps->count("--N") || e_scenario.empty()) sc.N = e_N;
      json j;
      std::ostringstream text;
      if (e_op == "transfer") {
        BigInt t = selfdual_transfer_at_identity(sc.N, sc.conductor);
        j["N"] = sc.N;
        j["conductor"] = json::parse(conductor_to_json(sc.conductor));
        j["transfer"] = t.str();
        text << t.str() << "\n";
      } else if (e_op == "lambda") {
        auto r = lambda_sign(sc.duality, sc.N, sc.conductor, sc.places, sc.omega);
        j["vanishes"] = r.vanishes;
        j["sign"] = r.sign ? json(*r.sign) : json(nullptr);
        j["conjectural"] = r.conjectural;
        j["omega_constraints"] = r.omega_constraints;
        j["reasons"] = r.reasons;
        text << (r.vanishes ? "vanishes" : "sign " + std::to_string(*r.sign)) << "\n";
        for (auto& s : r.reasons) text << "  " << s << "\n";
        for (auto& s : r.omega_constraints) text << "  " << s << "\n";
      } else if (e_op == "positivity") {
        auto r = c_positivity(sc.duality, sc.N, sc.conductor, sc.places, sc.omega_infty_trivial,
                              sc.omega_prime_conductors);
        j["holds"] = r.holds;
        j["reasons"] = r.reasons;
        text << (r.holds ? "holds" : "fails") << "\n";
        for (auto& s : r.reasons) text << "  " << s << "\n";
      } else {
        if (e_preset.empty()) throw InvalidInput("profile needs --preset");
        auto R = default_ring(preset(e_preset));
        PlaceData v = place_from_ring(R, e_preset);
        auto prof = conj_local_profile(v, e_k);
        j["preset"] = e_preset;
        j["k"] = e_k;
        j["support"] = prof.describe();
        j["sign"] = prof.sign;
        text << prof.describe() << ", sign " << prof.sign << "\n";
      }
      emit(j, text.str(), format);
    } else if (*lf) {
      QuadPresentation pres = preset(l_preset);
      auto R = l_m > 0 ? TruncatedQuadRing::build(pres, l_m) : default_ring(pres);
      int m = R.m();
      json j;
      j["preset"] = l_preset;
      j["m"] = m;
      std::string text;
      if (l_op == "j") {
        HalfInt jv = compute_j_invariant(R);
        j["j"] = jv.to_string();
        text = jv.to_string() + "\n";
      } else if (l_op == "different") {
        j["different"] = R.different_exponent();
        text = std::to_string(R.different_exponent()) + "\n";
      } else if (l_op == "units") {
        auto units = norm_one_units(R);
        j["norm_one_units"] = units.size();
        text = std::to_string(units.size()) + "\n";
      } else if (l_op == "phi") {
        auto img = norm_one_image_phi(R, l_k);
        auto level = restrict_to_level(R, norm_one_units(R), l_k);
        j["k"] = l_k;
        j["image_size"] = img.size();
        j["norm_one_level_size"] = level.size();
        j["equal"] = img == level;
        text = std::to_string(img.size()) + " of " + std::to_string(level.size()) + "\n";
      } else {
        if (l_y.empty()) throw InvalidInput("witness needs --y a,b");
        auto y = parse_elem(R, l_y);
        bool predicted = twisted_fixed_predicate(R, l_N, y);
        auto w = matrix_witness_search(R, l_N, y);
        j["N"] = l_N;
        j["found"] = w.has_value();
        j["predicate"] = predicted;
        if (w) {
          json mat = json::array();
          for (auto& e : *w) mat.push_back({e.a, e.b});
          j["matrix"] = mat;
        }
        text = std::string(w ? "found" : "none") + " (predicate " + (predicted ? "true" : "false") +
               ")\n";
      }
      emit(j, text, format);
    } else if (*dims) {
      SimpleGroup g{parse_family(d_family), d_n, {}};
      LaurentPoly lam = d_lambda.empty() ? rho_infchar(g)
                                         : LaurentPoly::from_exponents(parse_exponent_list(d_lambda));
      json j;
      j["group"] = g.name();
      j["lambda"] = lam.to_string();
      std::string text;
      if (d_op == "dim") {
        BigInt d = weyl_dim(g, lam);
        j["dim"] = d.str();
        text = d.str() + "\n";
      } else if (d_op == "pairing") {
        std::string v = rat_string(weyl_pairing_product(g, lam));
        j["pairing_product"] = v;
        text = v + "\n";
      } else if (d_op == "m") {
        auto v = m_norm(g, lam);
        j["m"] = v ? json(rat_string(*v)) : json(nullptr);
        text = (v ? rat_string(*v) : std::string("none")) + "\n";
      } else {
        text = rho_infchar(g).to_string() + "\n";
        j["rho"] = rho_infchar(g).to_string();
      }
      emit(j, text, format);
    } else if (*pred) {
      Scenario sc = parse_scenario(read_file(p_scenario));
      auto r = predict(sc);
      std::cout << (format == "json" ? report_to_json(r) : report_to_text(r));
    }
  } catch (const OutOfScope& e) {
    return fail("OutOfScope", e, kExitInput);
  } catch (const InvalidInput& e) {
    return fail("InvalidInput", e, kExitInput);
  } catch (const BudgetExceeded& e) {
    return fail("BudgetExceeded", e, kExitInconclusive);
  } catch (const Inconclusive& e) {
    return fail("Inconclusive", e, kExitInconclusive);
  } catch (const std::invalid_argument& e) {
    return fail("InvalidInput", e, kExitInput);
  } catch (const std::out_of_range& e) {
    return fail("InvalidInput", e, kExitInput);
  }
  return 0;
}
