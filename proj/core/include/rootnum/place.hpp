#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rootnum/combinatorics.hpp"

namespace rootnum {

// Behaviour of a finite place v of F in the quadratic extension E.
enum class Splitting { split, inert, tame_ramified, wild_ramified };

std::string_view to_string(Splitting s);
Splitting parse_splitting(std::string_view text);
inline bool is_ramified(Splitting s) {
  return s == Splitting::tame_ramified || s == Splitting::wild_ramified;
}

struct PlaceData {
  std::string id;
  std::int64_t p = 0;
  int f = 1;
  Splitting splitting = Splitting::split;
  // Norm-group depth; 1/2 exactly when v is unramified.
  HalfInt j = HalfInt::from_doubled(1);
  // Depth at which the roots of unity of E_w stop meeting 1 + p_w^b D.
  int b = -2;
  // Exponent of the different of E_w / F_v.
  int d_exp = 0;

  int e() const { return is_ramified(splitting) ? 2 : 1; }
  // Default truncation level for finite ring computations.
  int default_truncation() const { return 2 * (d_exp + 2); }
  void validate() const;
};

bool is_prime(std::int64_t p);

const PlaceData& find_place(const std::vector<PlaceData>& places, std::string_view id);

// Ideal of O_F as a finite product of prime powers. Exponents are
// half-integers; a half-integral exponent means a power of p_w at a
// ramified place. Zero exponents are not stored.
class Conductor {
 public:
  Conductor() = default;
  void set(const std::string& place, HalfInt exp);
  HalfInt exponent(std::string_view place) const;
  const std::map<std::string, HalfInt, std::less<>>& exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }
  bool is_integral() const;
  HalfInt total() const;
  std::string to_string() const;
  bool operator==(const Conductor&) const = default;

 private:
  std::map<std::string, HalfInt, std::less<>> exps_;
};

// Checks that every place in c is declared and that half-integral
// exponents occur only at ramified places.
void validate_conductor(const Conductor& c, const std::vector<PlaceData>& places);

// Local conductor exponent: v(n) at unramified places, 2 v(n) (the
// exponent of p_w) at ramified ones.
std::int64_t local_exponent(const Conductor& c, const PlaceData& v);

enum class ValidityMode { valid, zero_valid };

struct ValidityReport {
  bool holds = false;
  std::vector<std::string> reasons;
};

// Conductor conditions under which the conjugate self-dual transfer can be
// made positive. Quantifies over the declared places.
ValidityReport valid_conductor(const Conductor& c, const std::vector<PlaceData>& places, int N,
                               ValidityMode mode);

// Exponents max{floor(k_v - (j_v - 1/2)), 0}.
Conductor shifted_conductor(const Conductor& c, const std::vector<PlaceData>& places);

// Sufficient condition for a conjugate-orthogonal Hecke character of
// conductor exactly c: c integral, and one declared place with
// k_v >= b_v + 2/e_v or two with k_v >= b_v + 1/e_v.
bool cchar_globalization_check(const Conductor& c, const std::vector<PlaceData>& places);

}  // namespace rootnum
