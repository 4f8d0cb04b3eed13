#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootnum/place.hpp"
#include "rootnum/segments.hpp"

namespace rootnum {

// Whether E_w^x carries a conjugate self-dual character of sign kappa and
// conductor p_w^k. v must be non-split; k is the local exponent.
bool character_existence_conj(const PlaceData& v, int k, int kappa);

// A local building block of a conjugate self-dual representation of
// GL_N(E_w), with its conductor k and central-character conductor l.
struct ConjBlock {
  enum class Kind { principal_series_2, principal_series_4, steinberg, trivial };
  Kind kind = Kind::trivial;
  int rank = 2;
  int k = 0;
  int l = 0;
  std::string tag() const;
};

struct ConjRecipe {
  std::vector<ConjBlock> blocks;
  int k() const;
  int l() const;
  int rank() const;
  std::string tag() const;
};

// Pairs (k, l) of conductor and central-character conductor realisable at
// v for GL_N in the conjugate self-dual case, N >= 4 even.
class AchievablePairs {
 public:
  AchievablePairs(PlaceData v, int N);

  const PlaceData& place() const { return v_; }
  int N() const { return N_; }
  // The two stated families: l as large as allowed, and l = 0.
  bool in_max_family(int k, int l) const;
  bool in_zero_family(int k, int l) const;
  bool achievable(int k, int l) const { return in_max_family(k, l) || in_zero_family(k, l); }
  // The central-character conductor used by the first family.
  int max_family_l(int k) const;
  // Searches for a recipe: at most one principal series, any number of
  // rank-2 Steinbergs, trivial padding, total rank <= N.
  std::optional<ConjRecipe> construct(int k, int l) const;
  std::vector<std::string> rules() const;

 private:
  std::vector<ConjBlock> principal_series_options(int kmax) const;

  PlaceData v_;
  int N_;
};

AchievablePairs achievable_pairs_conj(const PlaceData& v, int N);

// Endoscopic target for the self-dual existence problem.
//   symplectic:  N even, parameter into Sp_N (G = SO_{N+1})
//   orthogonal:  parameter into O_N with determinant eta
//                (G = Sp^eta_{N-1} for N odd, SO^eta_N for N even)
enum class SelfDualTarget { symplectic, orthogonal };

struct SelfDualWitness {
  int N = 0;
  int k = 0;
  QuadChar eta;
  SelfDualTarget target = SelfDualTarget::orthogonal;
  int root_number = 1;
  std::string recipe;
  SegmentData segment;
};

// Builds pi = chi_1 + ... + sigma_m + ... + chi_1^{-1} with conductor k
// and central character eta, optionally with a prescribed root number.
// Returns nullopt when the recipe cannot realise the request.
std::optional<SelfDualWitness> construct_selfdual_witness(int N, int k, QuadChar eta,
                                                          SelfDualTarget target,
                                                          std::optional<int> root_number = {});

}  // namespace rootnum
