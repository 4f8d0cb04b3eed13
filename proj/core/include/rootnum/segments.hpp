#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rootnum {

// Quadratic character of F_v^x for odd residue characteristic, as an
// element of F_v^x / (F_v^x)^2 = {1, u, r, ru}: u is the unramified one,
// r a fixed ramified one.
struct QuadChar {
  bool unramified = false;
  bool ramified = false;

  static QuadChar trivial() { return {}; }
  static QuadChar parse(const std::string& text);
  bool is_trivial() const { return !unramified && !ramified; }
  int conductor() const { return ramified ? 1 : 0; }
  QuadChar operator*(QuadChar o) const {
    return {unramified != o.unramified, ramified != o.ramified};
  }
  bool operator==(const QuadChar&) const = default;
  std::string to_string() const;
};

// Supercuspidal representation of GL_rank, treated axiomatically through
// its conductor and root number. Unramified ones are unramified characters
// (rank 1, conductor 0, root number 1). Blocks sharing a partner tag form a
// dual pair rho, rho^vee; blocks without a tag are self-dual.
struct Supercuspidal {
  int rank = 1;
  int conductor = 0;
  int root_number = 1;
  bool ramified = false;
  std::optional<int> partner;
  // Central character, used only for self-dual blocks.
  QuadChar central;
};

// Segment St(size) of unramified constituents.
struct Steinberg {
  int size = 2;
};

using Block = std::variant<Supercuspidal, Steinberg>;

struct SegmentData {
  int N = 0;
  std::vector<Block> blocks;
  void validate() const;
};

// c(pi) = u - u0 + sum of c(rho_i): u unramified supercuspidal
// constituents, u0 segments made of them.
int segment_conductor(const SegmentData& s);

// Product of the root numbers of the segments.
int segment_root_number(const SegmentData& s);

QuadChar segment_central_character(const SegmentData& s);

// Supercuspidal support: the ramified constituents together with the
// number of unramified ones.
struct BernsteinComponent {
  std::vector<Supercuspidal> ramified;
  int unramified_count = 0;
  int rank() const;
  void validate() const;
};

BernsteinComponent component_of(const SegmentData& s);

// Root number shared by every member of the component with conductor k,
// or nullopt when no member has conductor k.
std::optional<int> bernstein_constant(const BernsteinComponent& theta, int k);

// Every self-dual member obtained by grouping the unramified constituents
// into Steinberg segments.
std::vector<SegmentData> enumerate_witnesses(const BernsteinComponent& theta);

}  // namespace rootnum
