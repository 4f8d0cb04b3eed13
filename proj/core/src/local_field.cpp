#include "rootnum/local_field.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>

#include "parallel.hpp"
#include "rootnum/errors.hpp"

namespace rootnum {

namespace {

using Elem = TruncatedQuadRing::Elem;

class AtomicBitset {
 public:
  explicit AtomicBitset(std::uint64_t n) : words_((n + 63) / 64) {}
  void set(std::uint64_t i) {
    words_[i / 64].fetch_or(std::uint64_t(1) << (i % 64), std::memory_order_relaxed);
  }
  ElementSet to_set() const {
    ElementSet out;
    for (std::uint64_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w].load(std::memory_order_relaxed);
      while (bits) {
        int b = __builtin_ctzll(bits);
        out.push_back(w * 64 + static_cast<std::uint64_t>(b));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::atomic<std::uint64_t>> words_;
};

std::vector<std::int64_t> scalar_inverse_table(const TruncatedQuadRing& R) {
  std::int64_t n = R.scalar_modulus();
  std::vector<std::int64_t> inv(static_cast<std::size_t>(n), 0);
  for (std::int64_t s = 1; s < n; ++s) {
    if (s % R.p() != 0) inv[static_cast<std::size_t>(s)] = R.scalar_inverse(s);
  }
  return inv;
}

// Calls f(x) for one x in each O_F^x-orbit of 1 + p_w^k (of the units
// when k = 0), possibly from several threads at once. Dividing by the
// coefficient of 1 leaves 1 + b w; units with that coefficient in p are
// b (a' + w) with a' in p.
template <class F>
void for_each_phi_orbit(const TruncatedQuadRing& R, int k, F&& f) {
  const std::int64_t sb = R.level_steps(k).second;
  const std::int64_t mod_b = static_cast<std::int64_t>(R.size() / R.scalar_modulus());
  const std::uint64_t nb = static_cast<std::uint64_t>(mod_b / sb);
  const std::uint64_t na = k == 0 ? static_cast<std::uint64_t>(R.scalar_modulus() / R.p()) : 0;
  const std::uint64_t count = nb + na;
  const std::uint64_t chunks = std::min<std::uint64_t>(count, 64);
  detail::parallel_for(chunks, [&](std::uint64_t c) {
    std::uint64_t lo = count * c / chunks, hi = count * (c + 1) / chunks;
    for (std::uint64_t r = lo; r < hi; ++r) {
      Elem x = r < nb ? R.make(1, static_cast<std::int64_t>(r) * sb)
                      : R.make(static_cast<std::int64_t>(r - nb) * R.p(), 1);
      if (!R.is_unit(x)) continue;
      f(x);
    }
  });
}

ElementSet phi_image_impl(const TruncatedQuadRing& R, int k,
                          const std::vector<std::int64_t>& inv) {
  AtomicBitset hit(R.size());
  for_each_phi_orbit(R, k, [&](Elem x) {
    // x / conj(x) = x^2 / N(x)
    Elem y = R.scale(R.mul(x, x), inv[static_cast<std::size_t>(R.norm(x))]);
    hit.set(R.index(y));
  });
  return hit.to_set();
}

}  // namespace

ElementSet norm_one_image_phi(const TruncatedQuadRing& R, int k) {
  if (k < 0) throw InvalidInput("norm_one_image_phi needs k >= 0");
  if (k >= R.m() - R.different_exponent()) {
    throw Inconclusive("truncation m = " + std::to_string(R.m()) + " too shallow for k = " +
                       std::to_string(k) + " with d_exp = " +
                       std::to_string(R.different_exponent()));
  }
  return phi_image_impl(R, k, scalar_inverse_table(R));
}

ElementSet norm_one_units(const TruncatedQuadRing& R) {
  if (R.m() <= R.different_exponent()) {
    throw Inconclusive("truncation does not exceed the different exponent");
  }
  auto inv = scalar_inverse_table(R);
  ElementSet base = phi_image_impl(R, 0, inv);
  if (!R.ramified()) return base;
  // w / conj(w) = w^2 / n = (t/p)(n/p)^{-1} w - 1
  const auto& pres = R.presentation();
  std::int64_t tp = pres.trace / pres.p, np = pres.norm / pres.p;
  Elem pi = R.add(R.scale(R.generator(), tp * R.scalar_inverse(np)), R.scalar(-1));
  ElementSet out = base;
  for (auto idx : base) out.push_back(R.index(R.mul(pi, R.elem(idx))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet naive_norm_one_units(const TruncatedQuadRing& R) {
  ElementSet out;
  for (std::uint64_t i = 0; i < R.size(); ++i) {
    Elem x = R.elem(i);
    if (R.norm(x) == 1 % R.scalar_modulus()) out.push_back(i);
  }
  return out;
}

ElementSet restrict_to_level(const TruncatedQuadRing& R, const ElementSet& set, int k) {
  ElementSet out;
  for (auto idx : set) {
    if (R.in_level(R.sub(R.elem(idx), R.one()), k)) out.push_back(idx);
  }
  return out;
}

std::vector<bool> unit_norm_residues(const TruncatedQuadRing& R) {
  std::vector<bool> hit(static_cast<std::size_t>(R.scalar_modulus()), false);
  std::mutex mu;
  std::uint64_t rows = R.size() / static_cast<std::uint64_t>(R.scalar_modulus());
  detail::parallel_for(rows, [&](std::uint64_t b) {
    std::vector<bool> local(hit.size(), false);
    for (std::int64_t a = 0; a < R.scalar_modulus(); ++a) {
      Elem x = R.make(a, static_cast<std::int64_t>(b));
      if (R.is_unit(x)) local[static_cast<std::size_t>(R.norm(x))] = true;
    }
    std::lock_guard<std::mutex> lock(mu);
    for (std::size_t i = 0; i < hit.size(); ++i)
      if (local[i]) hit[i] = true;
  });
  return hit;
}

HalfInt compute_j_invariant(const TruncatedQuadRing& R) {
  // The unit norm group contains 1 + p^{d_exp}, so norms modulo p^A with
  // A >= d_exp decide every containment 1 + p^j in N(E^x).
  std::int64_t A = 0;
  for (std::int64_t q = R.scalar_modulus(); q > 1; q /= R.p()) ++A;
  if (A < std::max<std::int64_t>(1, R.different_exponent())) {
    throw Inconclusive("truncation m = " + std::to_string(R.m()) +
                       " too shallow to certify the norm-group depth");
  }
  auto hit = unit_norm_residues(R);
  std::int64_t pj = 1;
  for (std::int64_t j = 0; j <= A; ++j, pj *= R.p()) {
    bool all = true;
    for (std::int64_t u = 1; u < R.scalar_modulus() && all; u += pj) {
      if (u % R.p() == 0) continue;
      if (!hit[static_cast<std::size_t>(u)]) all = false;
    }
    if (all) return j == 0 ? HalfInt::from_doubled(1) : HalfInt(j);
  }
  throw Inconclusive("no norm-group depth found within the truncation");
}

PlaceData place_from_ring(const TruncatedQuadRing& R, std::string id) {
  PlaceData v;
  v.id = std::move(id);
  v.p = R.p();
  v.f = 1;
  v.splitting = R.splitting();
  v.d_exp = R.different_exponent();
  v.j = compute_j_invariant(R);
  v.validate();
  return v;
}

RingMatrix antidiagonal_w(const TruncatedQuadRing& R, int N) {
  RingMatrix w(static_cast<std::size_t>(N * N), R.scalar(0));
  for (int i = 0; i < N; ++i) {
    w[static_cast<std::size_t>(i * N + (N - 1 - i))] = R.scalar((N - 1 - i) % 2 ? -1 : 1);
  }
  return w;
}

RingMatrix mat_mul(const TruncatedQuadRing& R, int N, const RingMatrix& A, const RingMatrix& B) {
  RingMatrix C(static_cast<std::size_t>(N * N), R.scalar(0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Elem s = R.scalar(0);
      for (int l = 0; l < N; ++l) {
        s = R.add(s, R.mul(A[static_cast<std::size_t>(i * N + l)],
                           B[static_cast<std::size_t>(l * N + j)]));
      }
      C[static_cast<std::size_t>(i * N + j)] = s;
    }
  return C;
}

Elem mat_det(const TruncatedQuadRing& R, int N, const RingMatrix& A) {
  std::vector<int> perm(static_cast<std::size_t>(N));
  std::iota(perm.begin(), perm.end(), 0);
  Elem det = R.scalar(0);
  do {
    int inversions = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Elem term = R.one();
    for (int i = 0; i < N; ++i) {
      term = R.mul(term, A[static_cast<std::size_t>(i * N + perm[static_cast<std::size_t>(i)])]);
    }
    det = inversions % 2 ? R.sub(det, term) : R.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool is_twisted_fixed(const TruncatedQuadRing& R, int N, const RingMatrix& A, Elem y) {
  RingMatrix ct(A.size());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      ct[static_cast<std::size_t>(i * N + j)] = R.conj(A[static_cast<std::size_t>(j * N + i)]);
  RingMatrix w = antidiagonal_w(R, N);
  RingMatrix winv = w;
  if (N % 2 == 0)
    for (auto& x : winv) x = R.neg(x);
  RingMatrix lhs = mat_mul(R, N, mat_mul(R, N, w, ct), winv);
  for (std::size_t i = 0; i < A.size(); ++i)
    if (!(lhs[i] == R.mul(y, A[i]))) return false;
  return true;
}

std::optional<RingMatrix> matrix_witness_search(const TruncatedQuadRing& R, int N, Elem y,
                                                std::uint64_t budget) {
  if (N < 1 || N % 2 == 0) throw InvalidInput("matrix_witness_search needs N odd");
  if (N > 5) throw BudgetExceeded("matrix_witness_search supports N <= 5");
  if (!(R.mul(y, R.conj(y)) == R.one())) throw InvalidInput("y must have norm one");

  // With B = w_N A the condition reads conj(B)^T = y B: diagonal entries
  // solve conj(b) = y b, entries below the diagonal are determined by those
  // above it. Invertibility only depends on residues mod p_w.
  std::vector<std::uint64_t> diag_res;
  std::vector<Elem> diag_rep(R.residue_count());
  std::vector<bool> seen(R.residue_count(), false);
  for (std::uint64_t i = 0; i < R.size(); ++i) {
    Elem b = R.elem(i);
    if (R.conj(b) == R.mul(y, b)) {
      auto r = R.residue_index(b);
      if (!seen[r]) {
        seen[r] = true;
        diag_rep[r] = b;
        diag_res.push_back(r);
      }
    }
  }
  std::sort(diag_res.begin(), diag_res.end());
  const std::uint64_t nd = diag_res.size();
  const std::uint64_t nr = R.residue_count();
  const int upper = N * (N - 1) / 2;

  long double total = 1;
  for (int i = 0; i < N; ++i) total *= static_cast<long double>(nd);
  for (int i = 0; i < upper; ++i) total *= static_cast<long double>(nr);
  if (total > static_cast<long double>(budget)) {
    throw BudgetExceeded("witness search space exceeds budget");
  }
  std::uint64_t inner = 1;
  for (int i = 1; i < N; ++i) inner *= nd;
  for (int i = 0; i < upper; ++i) inner *= nr;

  const Elem ybar = R.conj(y);
  std::vector<std::optional<RingMatrix>> found(nd);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

  // Slices by the first diagonal residue; the smallest successful slice
  // wins so the answer does not depend on scheduling.
  detail::parallel_for(nd, [&](std::uint64_t slice) {
    RingMatrix B(static_cast<std::size_t>(N * N));
    for (std::uint64_t code = 0; code < inner; ++code) {
      if (slice > best.load(std::memory_order_relaxed)) return;
      std::uint64_t c = code;
      B[0] = diag_rep[diag_res[slice]];
      for (int i = 1; i < N; ++i) {
        B[static_cast<std::size_t>(i * N + i)] = diag_rep[diag_res[c % nd]];
        c /= nd;
      }
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
          Elem u = R.residue_lift(c % nr);
          c /= nr;
          B[static_cast<std::size_t>(i * N + j)] = u;
          B[static_cast<std::size_t>(j * N + i)] = R.mul(ybar, R.conj(u));
        }
      if (R.is_unit(mat_det(R, N, B))) {
        found[slice] = B;
        std::uint64_t cur = best.load();
        while (slice < cur && !best.compare_exchange_weak(cur, slice)) {
        }
        return;
      }
    }
  });
  std::uint64_t s = best.load();
  if (s == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;

  // A = w^{-1} B, and w^{-1} = w for N odd.
  RingMatrix A = mat_mul(R, N, antidiagonal_w(R, N), *found[s]);
  if (!is_twisted_fixed(R, N, A, y)) {
    throw Inconclusive("witness failed verification at this truncation");
  }
  return A;
}

bool twisted_fixed_predicate(const TruncatedQuadRing& R, int N, Elem y) {
  if (N < 1 || N % 2 == 0) throw InvalidInput("predicate needs N odd");
  Elem yN = R.pow(y, static_cast<std::uint64_t>(N));
  switch (R.splitting()) {
    case Splitting::split:
    case Splitting::inert:
      return true;
    case Splitting::tame_ramified:
      return !R.in_level(R.add(yN, R.one()), 1);
    case Splitting::wild_ramified:
      return !R.in_level(R.sub(yN, R.one()), 1) ||
             R.in_level(R.sub(y, R.one()), R.different_exponent());
  }
  return false;
}

}  // namespace rootnum
