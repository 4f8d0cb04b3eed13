#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootnum/epsilon_transfer.hpp"
#include "rootnum/groups.hpp"

namespace rootnum {

// lambda * sum_{l=1}^{d} X^{(d+1)/2 - l}: the infinitesimal character of
// tau[d] when tau has lambda.
LaurentPoly lambda_bracket_d(const LaurentPoly& lambda, int d);

struct IntegralityReport {
  bool integral = false;
  bool regular = false;
  // Group of the simple shape (N, 1, lambda) when integral.
  std::optional<GroupFamily> family;
  std::string reason;
};

// Matches lambda against the integrality patterns for rank N.
IntegralityReport classify_integral(DualityCase dc, const LaurentPoly& lambda, int N);

// One summand tau[d] of a shape: tau of rank T with infinitesimal
// character lambda and central character eta (self-dual case) or sign
// (conjugate case).
struct ShapeSummand {
  int T = 1;
  int d = 1;
  LaurentPoly lambda;
  EtaLabel eta;
  int sign = 1;
};

struct Shape {
  std::vector<ShapeSummand> summands;
  int rank() const;
  LaurentPoly infchar() const;
};

// Endoscopic group carrying the parameters of this shape, or nullopt if
// none exists.
std::optional<GroupDescriptor> assign_group(const Shape& shape, DualityCase dc);

// Group of the simple shape (T, 1, lambda, eta), self-dual case.
std::optional<SimpleGroup> simple_shape_group(int T, bool half_integral, const EtaLabel& eta);

// Discrete series at infinity for SO^eta_{2n}: at each real place eta is
// trivial exactly when n is even. Entry v says whether eta is trivial on
// Gal(F_v).
bool so_even_discrete_series(int n, const std::vector<bool>& eta_trivial_at_infinity);

// Unrefined shape data for one summand: rank, Arthur SL_2 size, and the
// type of tau (symplectic means half-integral lambda_i).
struct BoxSummand {
  int T = 1;
  int d = 1;
  bool symplectic = false;
  EtaLabel eta;
};

using Box = std::vector<BoxSummand>;

GroupDescriptor box_group(const Box& box);

struct DimBoxResult {
  // max over decompositions of prod dim lambda_i on G(tau_i); 0 if none
  BigInt value = 0;
  // the same maximum with unnormalised pairing products
  Rational pairing_value = 0;
  std::vector<LaurentPoly> best;
  std::size_t decompositions = 0;
  // prod_i G(tau_i)
  GroupDescriptor local_group;
};

// Self-dual case: decompositions lambda = sum lambda_i[d_i] with lambda_i
// integral and regular for G(tau_i).
DimBoxResult dim_box(const GroupDescriptor& g, const Box& box, const LaurentPoly& lambda);

struct DimBoundCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
  int exponent = 0;  // P_{G_F} - P_G
};

// dim_box <= dim lambda * m(lambda)^{P_{G_F} - P_G}, evaluated with
// unnormalised pairing products (normalised = false) or with the
// rho-normalised Weyl dimensions (normalised = true).
DimBoundCheck dim_bound_check(const GroupDescriptor& g, const Box& box, const LaurentPoly& lambda,
                              bool normalised = false);

}  // namespace rootnum
