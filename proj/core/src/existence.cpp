#include "rootnum/existence.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "rootnum/errors.hpp"

namespace rootnum {

bool character_existence_conj(const PlaceData& v, int k, int kappa) {
  v.validate();
  if (v.splitting == Splitting::split) {
    throw InvalidInput("character existence is posed at non-split places");
  }
  if (k < 0) throw InvalidInput("conductor exponent must be >= 0");
  if (kappa != 1 && kappa != -1) throw InvalidInput("kappa must be +1 or -1");
  if (!is_ramified(v.splitting)) return true;
  if (kappa == 1) return k % 2 == 0;
  std::int64_t k0 = 2 * v.j.integer() - 1;
  return k == k0 || (k > k0 && k % 2 == 0);
}

std::string ConjBlock::tag() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::principal_series_2: os << "ps2"; break;
    case Kind::principal_series_4: os << "ps4"; break;
    case Kind::steinberg: os << "steinberg"; break;
    case Kind::trivial: os << "trivial"; break;
  }
  if (kind == Kind::trivial) os << "[rank " << rank << "]";
  else if (kind != Kind::steinberg) os << "(k=" << k << ",l=" << l << ")";
  return os.str();
}

int ConjRecipe::k() const {
  int s = 0;
  for (auto& b : blocks) s += b.k;
  return s;
}

int ConjRecipe::l() const {
  int s = 0;
  for (auto& b : blocks) s += b.l;
  return s;
}

int ConjRecipe::rank() const {
  int s = 0;
  for (auto& b : blocks) s += b.rank;
  return s;
}

std::string ConjRecipe::tag() const {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += " + ";
    s += blocks[i].tag();
  }
  return s;
}

AchievablePairs::AchievablePairs(PlaceData v, int N) : v_(std::move(v)), N_(N) {
  v_.validate();
  if (v_.splitting == Splitting::split) {
    if (N_ < 3) throw InvalidInput("split existence needs N >= 3");
  } else if (N_ < 4 || N_ % 2) {
    throw InvalidInput("conjugate existence at non-split places needs N >= 4 even");
  }
}

int AchievablePairs::max_family_l(int k) const {
  int j2m1 = static_cast<int>(v_.j.doubled()) - 1;
  int x = std::max(k - j2m1, 0);
  if (v_.e() == 2 && x % 2) --x;
  return x;
}

bool AchievablePairs::in_max_family(int k, int l) const {
  if (k < 0 || l < 0 || l > k) return false;
  if (v_.splitting == Splitting::split) return true;
  if (l != max_family_l(k)) return false;
  if (v_.splitting != Splitting::wild_ramified) return true;
  auto j = v_.j.integer();
  return 2 * k <= N_ || k > 4 * j - 2;
}

bool AchievablePairs::in_zero_family(int k, int l) const {
  if (k < 0 || l != 0) return false;
  if (v_.splitting != Splitting::wild_ramified) return true;
  auto j = v_.j.integer();
  return 2 * k <= N_ || k >= 8 * j - 4;
}

std::vector<ConjBlock> AchievablePairs::principal_series_options(int kmax) const {
  using K = ConjBlock::Kind;
  std::vector<ConjBlock> out;
  // chi_0 nu_1 x chi_0^{-1} nu_2 with nu_i conjugate orthogonal of conductor
  // k_i and nu_1 nu_2 of conductor l; chi_0 has conductor 2j - 1.
  bool ram = is_ramified(v_.splitting);
  int j2m1 = static_cast<int>(v_.j.doubled()) - 1;
  auto orth_ok = [&](int c) { return !ram || c % 2 == 0; };
  auto add = [&](int rank, int k, int l) {
    if (k > kmax || k < 1) return;
    K kind = rank == 2 ? K::principal_series_2 : K::principal_series_4;
    for (auto& b : out)
      if (b.kind == kind && b.k == k && b.l == l) return;
    out.push_back({kind, rank, k, l});
  };
  for (int k1 = 0; 2 * k1 <= kmax; ++k1) {
    if (!orth_ok(k1)) continue;
    // k_1 = k_2 >= l
    for (int l = 0; l <= k1; ++l)
      if (orth_ok(l)) add(2, std::max(2 * k1, 2 * j2m1), l);
  }
  for (int l = 1; l <= kmax; ++l) {
    if (!orth_ok(l)) continue;
    // k_1 = l > k_2
    for (int k2 = 0; k2 < l; ++k2)
      if (orth_ok(k2)) add(2, std::max(l, j2m1) + std::max(k2, j2m1), l);
  }
  if (ram && N_ >= 4) {
    for (int k = 4 * j2m1; k <= kmax; ++k) add(4, k, 0);
  }
  std::stable_sort(out.begin(), out.end(), [](const ConjBlock& a, const ConjBlock& b) {
    return std::tie(a.k, a.l, a.rank) < std::tie(b.k, b.l, b.rank);
  });
  return out;
}

std::optional<ConjRecipe> AchievablePairs::construct(int k, int l) const {
  using K = ConjBlock::Kind;
  if (k < 0 || l < 0 || l > k) return std::nullopt;
  if (v_.splitting == Splitting::split) {
    // pi_0 x pi_0^vee with pi_0 a principal series of GL_N(F_v)
    return ConjRecipe{{ConjBlock{K::principal_series_2, N_, k, l}}};
  }
  auto finish = [&](std::vector<ConjBlock> blocks, int used) -> std::optional<ConjRecipe> {
    if (used > N_) return std::nullopt;
    if (used < N_) blocks.push_back({K::trivial, N_ - used, 0, 0});
    return ConjRecipe{std::move(blocks)};
  };
  auto options = principal_series_options(k);
  std::stable_sort(options.begin(), options.end(),
                   [](const ConjBlock& a, const ConjBlock& b) { return a.k > b.k; });
  for (auto& ps : options) {
    if (ps.l != l) continue;
    int steinbergs = k - ps.k;
    std::vector<ConjBlock> blocks{ps};
    for (int i = 0; i < steinbergs; ++i) blocks.push_back({K::steinberg, 2, 1, 0});
    if (auto r = finish(blocks, ps.rank + 2 * steinbergs)) return r;
  }
  if (l == 0) {
    std::vector<ConjBlock> blocks;
    for (int i = 0; i < k; ++i) blocks.push_back({K::steinberg, 2, 1, 0});
    if (auto r = finish(blocks, 2 * k)) return r;
  }
  return std::nullopt;
}

std::vector<std::string> AchievablePairs::rules() const {
  if (v_.splitting == Splitting::split) return {"split place: every 0 <= l <= k"};
  std::vector<std::string> r;
  std::string lrule = v_.e() == 1 ? "l = max{k - (2j - 1), 0}"
                                  : "l = largest even <= max{k - (2j - 1), 0}";
  switch (v_.splitting) {
    case Splitting::inert:
    case Splitting::tame_ramified:
      r.push_back(lrule + ", every k");
      r.push_back("l = 0, every k");
      break;
    case Splitting::wild_ramified:
      r.push_back(lrule + ", k <= N/2 or k > 4j - 2");
      r.push_back("l = 0, k <= N/2 or k >= 8j - 4");
      break;
    default:
      break;
  }
  return r;
}

AchievablePairs achievable_pairs_conj(const PlaceData& v, int N) { return {v, N}; }

namespace {

struct SigmaOption {
  int conductor = 0;
  std::vector<Supercuspidal> blocks;
  bool has_steinberg = false;
  int root = 1;
  bool root_free = false;
  std::string name;
};

Supercuspidal unramified_char(std::optional<int> partner = {}, QuadChar central = {}) {
  Supercuspidal s;
  s.partner = partner;
  s.central = central;
  return s;
}

Supercuspidal ramified_block(int rank, int conductor, int root, std::optional<int> partner,
                             QuadChar central = {}) {
  Supercuspidal s;
  s.rank = rank;
  s.conductor = conductor;
  s.root_number = root;
  s.ramified = true;
  s.partner = partner;
  s.central = central;
  return s;
}

// A self-dual quadratic character as a rank-1 block.
Supercuspidal quad_block(QuadChar q) {
  if (q.conductor() == 0) return unramified_char({}, q);
  return ramified_block(1, q.conductor(), 1, {}, q);
}

const QuadChar kV4[4] = {{false, false}, {true, false}, {false, true}, {true, true}};

std::vector<SigmaOption> sigma_options(int N, int kmax, QuadChar eta, SelfDualTarget target,
                                       int& tag) {
  std::vector<SigmaOption> out;
  if (N % 2) {
    SigmaOption o;
    o.conductor = eta.conductor();
    o.blocks.push_back(quad_block(eta));
    o.name = "sigma_1 = eta";
    out.push_back(o);
    return out;
  }
  // sigma_2, following the GL_2 existence table
  for (int c = 0; c <= kmax; ++c) {
    if (eta.is_trivial() && c % 2 == 0) {
      SigmaOption o;
      o.conductor = c;
      int t = tag++;
      if (c == 0) {
        o.blocks = {unramified_char(t), unramified_char(t)};
        o.name = "unramified chi + chi^-1";
      } else {
        o.blocks = {ramified_block(1, c / 2, 1, t), ramified_block(1, c / 2, 1, t)};
        o.root_free = true;
        o.name = "chi + chi^-1, c(chi) = " + std::to_string(c / 2);
      }
      out.push_back(o);
    }
    if (target == SelfDualTarget::symplectic) {
      if (c == 1) {
        SigmaOption o;
        o.conductor = 1;
        o.has_steinberg = true;
        o.root = -1;
        o.name = "Steinberg";
        out.push_back(o);
      } else if (c % 2 && c >= 3) {
        SigmaOption o;
        o.conductor = c;
        o.blocks = {ramified_block(2, c, 1, {})};
        o.root_free = true;
        o.name = "symplectic supercuspidal";
        out.push_back(o);
      }
      continue;
    }
    if (eta.is_trivial()) continue;
    if (c <= 2) {
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          if (!(kV4[i] * kV4[j] == eta) || kV4[i].conductor() + kV4[j].conductor() != c) continue;
          SigmaOption o;
          o.conductor = c;
          o.blocks = {quad_block(kV4[i]), quad_block(kV4[j])};
          o.name = "chi_1 + chi_2 quadratic, chi_1 chi_2 = eta";
          out.push_back(o);
        }
    }
    if (c >= 2) {
      SigmaOption o;
      o.conductor = c;
      o.blocks = {ramified_block(2, c, 1, {}, eta)};
      o.root_free = true;
      o.name = "orthogonal supercuspidal";
      out.push_back(o);
    }
  }
  return out;
}

}  // namespace

std::optional<SelfDualWitness> construct_selfdual_witness(int N, int k, QuadChar eta,
                                                          SelfDualTarget target,
                                                          std::optional<int> root_number) {
  if (N < 1) throw InvalidInput("N must be >= 1");
  if (k < 0) throw InvalidInput("conductor must be >= 0");
  if (root_number && *root_number != 1 && *root_number != -1) {
    throw InvalidInput("root number must be +1 or -1");
  }
  if (target == SelfDualTarget::symplectic) {
    if (N % 2) throw InvalidInput("symplectic parameters need N even");
    if (!eta.is_trivial()) throw InvalidInput("symplectic parameters have trivial determinant");
  }
  if (k < eta.conductor()) return std::nullopt;
  if (root_number == -1 && k == 0) return std::nullopt;

  int tag = 0;
  const int m = N % 2 ? 1 : 2;
  const int pairs = (N - m) / 2;
  for (auto& sigma : sigma_options(N, k, eta, target, tag)) {
    int rest = k - sigma.conductor;
    if (rest < 0) continue;
    if (pairs == 0 && rest != 0) continue;
    if (rest % 2) continue;
    bool pair_free = rest > 0;
    int sigma_root = sigma.root;
    int pair_sign = 1;
    if (root_number) {
      if (pair_free) pair_sign = *root_number * sigma_root;
      else if (sigma.root_free) sigma_root = *root_number;
      else if (sigma_root != *root_number) continue;
    }

    SelfDualWitness w;
    w.N = N;
    w.k = k;
    w.eta = eta;
    w.target = target;
    w.segment.N = N;
    std::ostringstream recipe;
    for (int i = 0; i < pairs; ++i) {
      int t = tag++;
      if (i == 0 && pair_free) {
        w.segment.blocks.emplace_back(ramified_block(1, rest / 2, pair_sign, t));
        w.segment.blocks.emplace_back(ramified_block(1, rest / 2, 1, t));
        recipe << "chi_1 + chi_1^-1 with c = " << rest / 2 << ", chi_1(-1) = " << pair_sign
               << "; ";
      } else {
        w.segment.blocks.emplace_back(unramified_char(t));
        w.segment.blocks.emplace_back(unramified_char(t));
      }
    }
    if (pairs > (pair_free ? 1 : 0)) {
      recipe << pairs - (pair_free ? 1 : 0) << " unramified pair(s); ";
    }
    bool first = true;
    for (auto b : sigma.blocks) {
      if (first && sigma.root_free) b.root_number = sigma_root;
      first = false;
      w.segment.blocks.emplace_back(b);
    }
    if (sigma.has_steinberg) w.segment.blocks.emplace_back(Steinberg{2});
    recipe << "sigma_" << m << ": " << sigma.name;
    w.recipe = recipe.str();
    w.root_number = segment_root_number(w.segment);
    return w;
  }
  return std::nullopt;
}

}  // namespace rootnum
