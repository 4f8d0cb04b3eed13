#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootnum/local_field.hpp"
#include "rootnum/oldforms.hpp"
#include "rootnum/place.hpp"

namespace rootnum {

// E_k = sum_i a(k, i) f_{k-i}: the test function whose twisted trace
// isolates the new part at level k. Only nonzero a(k, i) are kept.
struct CoefficientSchedule {
  TraceCase trace_case = TraceCase::self_dual;
  int N = 0;
  int k = 0;
  std::map<int, BigInt> shifts;
};

// Solves the convolution-inverse system against the closed-form trace
// profile.
CoefficientSchedule coefficient_schedule(TraceCase c, int N, int k);

// Coefficient of x^i in the inverse of the trace generating function:
// (1-x^2)^{N/2}, (1-x)(1-x^2)^{(N-1)/2} or (1-x)^N.
BigInt coefficient_closed_form(TraceCase c, int N, int i);

// Transfer of E_n to the endoscopic group at the identity, up to one
// positive global constant: prod_v (-1)^{v(n)/2} C(N/2, v(n)/2), or 0 when
// some v(n) is odd or exceeds N.
BigInt selfdual_transfer_at_identity(int N, const Conductor& c);

enum class SupportKind {
  empty,
  unit_congruent_one,     // gamma in O^x, gamma = 1 mod p^k
  minus_in_phi_image,     // -gamma in phi(1 + p_w^k)
  congruent_minus_one_d,  // gamma = -1 mod D
};

// Support and sign of the transfer of the level-k local test function to
// the central unitary endoscopic group.
struct CentralTransferProfile {
  SupportKind support = SupportKind::empty;
  int level = 0;
  int sign = 0;
  bool vanishes() const { return support == SupportKind::empty; }
  std::string describe() const;
};

// k is the local exponent (of p_w at ramified places).
CentralTransferProfile conj_local_profile(const PlaceData& v, int k);

// Evaluates the support of a profile at gamma by its closed form.
bool profile_support_contains(const CentralTransferProfile& prof, const TruncatedQuadRing& R,
                              TruncatedQuadRing::Elem gamma);

enum class DualityCase { self_dual, conjugate };

// Known triviality of omega on the subgroups (1 + n' D) cap O_E^x.
struct OmegaPattern {
  std::vector<std::pair<Conductor, bool>> subgroups;
  std::optional<bool> trivial_on(const Conductor& n) const;
};

struct PlaceSign {
  std::string place;
  HalfInt exp;
  int sign = 1;
};

struct LambdaSignReport {
  bool vanishes = false;
  std::optional<int> sign;
  // True when nonvanishing of the main term rests on the unproved
  // character-sum conjecture.
  bool conjectural = false;
  Conductor n_ur;
  std::vector<std::string> omega_constraints;
  std::vector<PlaceSign> factors;
  std::vector<std::string> reasons;
};

LambdaSignReport lambda_sign(DualityCase dc, int N, const Conductor& c,
                             const std::vector<PlaceData>& places,
                             const OmegaPattern& omega = {});

struct PositivityReport {
  bool holds = false;
  std::vector<std::string> reasons;
};

// Sufficient conditions for a positive main term.
// omega_prime_conductors: conductor exponent of omega'_v per place
// (self-dual case; absent places count as 0).
PositivityReport c_positivity(DualityCase dc, int N, const Conductor& c,
                              const std::vector<PlaceData>& places, bool omega_infty_trivial,
                              const std::map<std::string, int>& omega_prime_conductors = {});

}  // namespace rootnum
