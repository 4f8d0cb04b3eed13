#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rootnum/combinatorics.hpp"

namespace rootnum {

// Which twisted trace is taken on the oldforms of level k:
//   self_dual     - GL_N, dualizing involution
//   conj_nonsplit - GL_N(E_w), E_w a field
//   conj_split    - GL_N(F_v) x GL_N(F_v) with the factor swap
enum class TraceCase { self_dual, conj_nonsplit, conj_split };

std::string_view to_string(TraceCase c);
TraceCase parse_trace_case(std::string_view text);

inline constexpr std::uint64_t kOldformBudget = 10'000'000;

// dim of the K_1(p^k)-oldforms: C(k + N - 1, N - 1).
BigInt oldform_dimension(int N, int k);

// Basis tuple (a_1, ..., a_{N-1}), a_i >= 0, sum <= k.
using OldformTuple = std::vector<int>;

// (a_1..a_{N-1}) -> (a_{N-2}, ..., a_1, k - sum a_i).
OldformTuple dualize_tuple(const OldformTuple& a, int k);

// Enumerates the basis and counts fixed points of the involution.
BigInt involution_fixed_points(TraceCase c, int N, int k,
                               std::uint64_t budget = kOldformBudget);

// The same counts in closed form.
BigInt closed_form_trace(TraceCase c, int N, int k);

// T(0..K) for the given case.
std::vector<BigInt> trace_profile(TraceCase c, int N, int K);

}  // namespace rootnum
