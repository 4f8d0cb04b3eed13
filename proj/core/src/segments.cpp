#include "rootnum/segments.hpp"

#include <map>

#include "rootnum/errors.hpp"

namespace rootnum {

QuadChar QuadChar::parse(const std::string& text) {
  if (text == "1" || text == "trivial") return {};
  if (text == "u") return {true, false};
  if (text == "r") return {false, true};
  if (text == "ru") return {true, true};
  throw InvalidInput("unknown quadratic character '" + text + "' (use 1, u, r, ru)");
}

std::string QuadChar::to_string() const {
  if (is_trivial()) return "1";
  return std::string(unramified ? "u" : "") + (ramified ? "r" : "");
}

namespace {

void validate_block(const Supercuspidal& b) {
  if (b.rank < 1) throw InvalidInput("supercuspidal rank must be >= 1");
  if (b.root_number != 1 && b.root_number != -1) {
    throw InvalidInput("root numbers must be +1 or -1");
  }
  if (!b.ramified) {
    if (b.rank != 1 || b.conductor != 0 || b.root_number != 1) {
      throw InvalidInput("unramified supercuspidals are unramified characters");
    }
  } else if (b.conductor < 1) {
    throw InvalidInput("ramified supercuspidals have conductor >= 1");
  }
}

void validate_pairs(const std::vector<const Supercuspidal*>& blocks) {
  std::map<int, std::vector<const Supercuspidal*>> tags;
  for (auto* b : blocks)
    if (b->partner) tags[*b->partner].push_back(b);
  for (auto& [tag, members] : tags) {
    if (members.size() != 2) {
      throw InvalidInput("partner tag " + std::to_string(tag) + " must occur exactly twice");
    }
    if (members[0]->rank != members[1]->rank || members[0]->conductor != members[1]->conductor ||
        members[0]->ramified != members[1]->ramified) {
      throw InvalidInput("dual partners must share rank and conductor");
    }
  }
}

}  // namespace

void SegmentData::validate() const {
  int total = 0;
  std::vector<const Supercuspidal*> sc;
  for (auto& b : blocks) {
    if (auto* s = std::get_if<Supercuspidal>(&b)) {
      validate_block(*s);
      sc.push_back(s);
      total += s->rank;
    } else {
      int t = std::get<Steinberg>(b).size;
      if (t < 2) throw InvalidInput("Steinberg segments have size >= 2");
      total += t;
    }
  }
  validate_pairs(sc);
  if (total != N) throw InvalidInput("block ranks do not sum to N");
}

int segment_conductor(const SegmentData& s) {
  s.validate();
  int u = 0, u0 = 0, c = 0;
  for (auto& b : s.blocks) {
    if (auto* sc = std::get_if<Supercuspidal>(&b)) {
      if (sc->ramified) {
        c += sc->conductor;
      } else {
        ++u;
        ++u0;
      }
    } else {
      u += std::get<Steinberg>(b).size;
      ++u0;
    }
  }
  return u - u0 + c;
}

int segment_root_number(const SegmentData& s) {
  s.validate();
  int eps = 1;
  for (auto& b : s.blocks) {
    if (auto* sc = std::get_if<Supercuspidal>(&b)) {
      eps *= sc->root_number;
    } else if ((std::get<Steinberg>(b).size - 1) % 2) {
      eps = -eps;
    }
  }
  return eps;
}

QuadChar segment_central_character(const SegmentData& s) {
  s.validate();
  QuadChar w;
  for (auto& b : s.blocks)
    if (auto* sc = std::get_if<Supercuspidal>(&b); sc && !sc->partner) w = w * sc->central;
  return w;
}

int BernsteinComponent::rank() const {
  int r = unramified_count;
  for (auto& b : ramified) r += b.rank;
  return r;
}

void BernsteinComponent::validate() const {
  if (unramified_count < 0) throw InvalidInput("negative unramified count");
  std::vector<const Supercuspidal*> sc;
  for (auto& b : ramified) {
    if (!b.ramified) throw InvalidInput("component lists only ramified constituents");
    validate_block(b);
    sc.push_back(&b);
  }
  validate_pairs(sc);
}

BernsteinComponent component_of(const SegmentData& s) {
  s.validate();
  BernsteinComponent t;
  for (auto& b : s.blocks) {
    if (auto* sc = std::get_if<Supercuspidal>(&b)) {
      if (sc->ramified) t.ramified.push_back(*sc);
      else ++t.unramified_count;
    } else {
      t.unramified_count += std::get<Steinberg>(b).size;
    }
  }
  return t;
}

std::optional<int> bernstein_constant(const BernsteinComponent& theta, int k) {
  theta.validate();
  int base = 0, eps = 1;
  for (auto& b : theta.ramified) {
    base += b.conductor;
    eps *= b.root_number;
  }
  // u - u0 ranges over 0..u-1 as the unramified constituents are grouped
  int spread = theta.unramified_count > 0 ? theta.unramified_count - 1 : 0;
  if (k < base || k > base + spread) return std::nullopt;
  return (k - base) % 2 ? -eps : eps;
}

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SegmentData> enumerate_witnesses(const BernsteinComponent& theta) {
  theta.validate();
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(theta.unramified_count, theta.unramified_count, cur, parts);
  std::vector<SegmentData> out;
  for (auto& p : parts) {
    SegmentData s;
    s.N = theta.rank();
    for (auto& b : theta.ramified) s.blocks.emplace_back(b);
    for (int part : p) {
      if (part == 1) s.blocks.emplace_back(Supercuspidal{});
      else s.blocks.emplace_back(Steinberg{part});
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rootnum
