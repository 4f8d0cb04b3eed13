#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rootnum/combinatorics.hpp"

namespace rootnum {

// Quadratic character recorded by generator labels; the product is the
// symmetric difference, the empty set is the trivial character.
using EtaLabel = std::set<std::string>;

EtaLabel eta_product(const EtaLabel& a, const EtaLabel& b);
std::string eta_to_string(const EtaLabel& eta);

enum class GroupFamily { Sp, SO_odd, SO_even, U_plus, U_minus };

// Simple factor of an endoscopic group, indexed by matrix size: Sp_n,
// SO_n, U_n.
struct SimpleGroup {
  GroupFamily family = GroupFamily::Sp;
  int n = 0;
  EtaLabel eta;

  int rank() const;
  // Size of the dual group's standard representation.
  int dual_dimension() const;
  // Number of positive roots, (dim G - rank G) / 2.
  int positive_roots() const;
  bool is_trivial() const;
  std::string name() const;
  bool operator==(const SimpleGroup&) const = default;
};

struct GroupDescriptor {
  std::vector<SimpleGroup> factors;
  int positive_roots() const;
  std::string name() const;
  bool operator==(const GroupDescriptor&) const = default;
};

// Pairings <alpha^vee, lambda> over the positive coroots of g, with lambda
// given by its exponent multiset in the standard representation of the
// dual group. Throws if lambda does not have the right shape for g.
std::vector<Rational> coroot_pairings(const SimpleGroup& g, const LaurentPoly& lambda);

// prod <alpha^vee, lambda> (no normalisation).
Rational weyl_pairing_product(const SimpleGroup& g, const LaurentPoly& lambda);

// Weyl dimension, normalised so that lambda = rho gives 1. Throws on
// singular lambda.
BigInt weyl_dim(const SimpleGroup& g, const LaurentPoly& lambda);

// min over positive coroots of <alpha^vee, lambda>; nullopt if g has no
// roots.
std::optional<Rational> m_norm(const SimpleGroup& g, const LaurentPoly& lambda);

// rho_G as an exponent multiset.
LaurentPoly rho_infchar(const SimpleGroup& g);

// Splits lambda between the factors of G: the half-integral part goes to
// the SO_odd factor, the integral part to the other one.
std::vector<LaurentPoly> split_infchar(const GroupDescriptor& g, const LaurentPoly& lambda);

BigInt weyl_dim(const GroupDescriptor& g, const LaurentPoly& lambda);
Rational weyl_pairing_product(const GroupDescriptor& g, const LaurentPoly& lambda);
std::optional<Rational> m_norm(const GroupDescriptor& g, const LaurentPoly& lambda);

}  // namespace rootnum
