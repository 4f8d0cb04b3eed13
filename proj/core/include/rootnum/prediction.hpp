#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootnum/epsilon_transfer.hpp"
#include "rootnum/shapes.hpp"

namespace rootnum {

struct Scenario {
  DualityCase duality = DualityCase::self_dual;
  int N = 0;
  std::vector<PlaceData> places;
  Conductor conductor;
  // One infinitesimal character per archimedean place; may be empty.
  std::vector<LaurentPoly> infchar;
  // Triviality of the central character at infinity (conjugate case).
  bool omega_infty_trivial = false;
  OmegaPattern omega;
  std::map<std::string, int> omega_prime_conductors;
};

enum class Verdict { yes, no, conjectural_no, blocked };

std::string_view to_string(Verdict v);

struct Condition {
  std::string clause;
  std::string tag;
};

struct PredictionReport {
  DualityCase duality = DualityCase::self_dual;
  int N = 0;
  Conductor conductor;
  Verdict equidistributes = Verdict::blocked;
  std::optional<int> bias_sign;
  std::vector<PlaceSign> bias_factors;
  // Product of epsilon(1/2, I_w) = i^{w+1} over the archimedean places.
  std::optional<int> epsilon_infinity;
  PositivityReport positivity;
  std::optional<LambdaSignReport> main_term;
  std::vector<Condition> conditions;
  std::vector<std::string> notes;
};

// Root-number equidistribution prediction for the family cut out by the
// scenario. Throws OutOfScope for odd N.
PredictionReport predict(const Scenario& s);

}  // namespace rootnum
