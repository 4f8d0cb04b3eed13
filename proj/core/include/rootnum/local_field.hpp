#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rootnum/quad_ring.hpp"

namespace rootnum {

// Sorted ring indices (TruncatedQuadRing::index).
using ElementSet = std::vector<std::uint64_t>;

// Image of phi(x) = x / conj(x) on 1 + p_w^k, or on all units when k = 0.
// Requires 0 <= k < m - d_exp.
ElementSet norm_one_image_phi(const TruncatedQuadRing& R, int k);

// Reductions of the norm-one units of O_E. Uses that every norm-one
// element is z / conj(z) for some z in E^x.
ElementSet norm_one_units(const TruncatedQuadRing& R);

// Units whose norm is 1 modulo p_w^m cap O_F. Contains norm_one_units(R);
// equal to it when E/F is unramified.
ElementSet naive_norm_one_units(const TruncatedQuadRing& R);

// Members of `set` lying in 1 + p_w^k.
ElementSet restrict_to_level(const TruncatedQuadRing& R, const ElementSet& set, int k);

// Residues mod scalar_modulus() hit by norms of units.
std::vector<bool> unit_norm_residues(const TruncatedQuadRing& R);

// max{1/2, min{j : 1 + p_v^j is contained in N(E^x)}}, certified by
// exhaustive norm enumeration. Throws Inconclusive when the truncation is
// too shallow to certify.
HalfInt compute_j_invariant(const TruncatedQuadRing& R);

// PlaceData for the place the ring models, with j computed. b is left at
// its default since it depends on global data.
PlaceData place_from_ring(const TruncatedQuadRing& R, std::string id);

// Row-major N x N matrix over R.
using RingMatrix = std::vector<TruncatedQuadRing::Elem>;

RingMatrix antidiagonal_w(const TruncatedQuadRing& R, int N);
RingMatrix mat_mul(const TruncatedQuadRing& R, int N, const RingMatrix& A, const RingMatrix& B);
TruncatedQuadRing::Elem mat_det(const TruncatedQuadRing& R, int N, const RingMatrix& A);

// w_N conj(A)^T w_N^{-1} == y A.
bool is_twisted_fixed(const TruncatedQuadRing& R, int N, const RingMatrix& A,
                      TruncatedQuadRing::Elem y);

inline constexpr std::uint64_t kWitnessBudget = 400'000'000;

// Searches GL_N(R) for A with w_N conj(A)^T w_N^{-1} = y A, N odd and at
// most 5. Returns nullopt when the exhaustive search finds none.
std::optional<RingMatrix> matrix_witness_search(const TruncatedQuadRing& R, int N,
                                                TruncatedQuadRing::Elem y,
                                                std::uint64_t budget = kWitnessBudget);

// Closed-form criterion for such an A, for norm-one y and N odd:
// unramified always; tame iff y^N != -1 mod p_w; wild iff y^N is not
// 1 mod p_w or y is in 1 + D.
bool twisted_fixed_predicate(const TruncatedQuadRing& R, int N, TruncatedQuadRing::Elem y);

}  // namespace rootnum
