#include "rootnum/oldforms.hpp"

#include <algorithm>
#include <numeric>

#include "rootnum/errors.hpp"

namespace rootnum {

std::string_view to_string(TraceCase c) {
  switch (c) {
    case TraceCase::self_dual: return "selfdual";
    case TraceCase::conj_nonsplit: return "conj_nonsplit";
    case TraceCase::conj_split: return "conj_split";
  }
  return "?";
}

TraceCase parse_trace_case(std::string_view text) {
  if (text == "selfdual" || text == "self_dual") return TraceCase::self_dual;
  if (text == "conj_nonsplit") return TraceCase::conj_nonsplit;
  if (text == "conj_split") return TraceCase::conj_split;
  throw InvalidInput("unknown trace case '" + std::string(text) + "'");
}

namespace {

void check_args(int N, int k) {
  if (N < 1) throw InvalidInput("N must be >= 1");
  if (k < 0) throw InvalidInput("k must be >= 0");
}

// Visits every tuple of length n with nonnegative entries summing to <= k.
template <class F>
void for_each_tuple(int n, int k, F&& f) {
  OldformTuple a(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    f(a);
    return;
  }
  int sum = 0;
  while (true) {
    f(a);
    // odometer step keeping sum <= k
    int i = n - 1;
    while (i >= 0) {
      if (sum < k) {
        ++a[static_cast<std::size_t>(i)];
        ++sum;
        break;
      }
      sum -= a[static_cast<std::size_t>(i)];
      a[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace

BigInt oldform_dimension(int N, int k) {
  check_args(N, k);
  return binomial(k + N - 1, N - 1);
}

OldformTuple dualize_tuple(const OldformTuple& a, int k) {
  OldformTuple out;
  out.reserve(a.size());
  int d = std::accumulate(a.begin(), a.end(), 0);
  if (a.empty()) return out;
  for (std::size_t i = a.size() - 1; i-- > 0;) out.push_back(a[i]);
  out.push_back(k - d);
  return out;
}

BigInt involution_fixed_points(TraceCase c, int N, int k, std::uint64_t budget) {
  check_args(N, k);
  if (oldform_dimension(N, k) > budget) {
    throw BudgetExceeded("oldform basis larger than enumeration budget");
  }
  std::uint64_t count = 0;
  const int n = N - 1;
  if (c == TraceCase::conj_split) {
    // Pairs (A, B) -> (dual(B), dual(A)). The second coordinate forces
    // B = dual(A); that B must be a basis tuple and dual(B) must return A.
    for_each_tuple(n, k, [&](const OldformTuple& A) {
      OldformTuple B = dualize_tuple(A, k);
      int sb = std::accumulate(B.begin(), B.end(), 0);
      bool in_basis = sb <= k && std::all_of(B.begin(), B.end(), [](int x) { return x >= 0; });
      if (in_basis && dualize_tuple(B, k) == A) ++count;
    });
  } else {
    for_each_tuple(n, k, [&](const OldformTuple& A) {
      if (dualize_tuple(A, k) == A) ++count;
    });
  }
  return count;
}

BigInt closed_form_trace(TraceCase c, int N, int k) {
  check_args(N, k);
  if (c == TraceCase::conj_split) return binomial(k + N - 1, N - 1);
  if (N % 2 == 0) {
    if (k % 2) return 0;
    return binomial(k / 2 + N / 2 - 1, N / 2 - 1);
  }
  int h = (N - 1) / 2;
  return binomial(k / 2 + h, h);  // k/2 rounds down for odd k
}

std::vector<BigInt> trace_profile(TraceCase c, int N, int K) {
  std::vector<BigInt> t;
  t.reserve(static_cast<std::size_t>(K + 1));
  for (int k = 0; k <= K; ++k) t.push_back(closed_form_trace(c, N, k));
  return t;
}

}  // namespace rootnum
