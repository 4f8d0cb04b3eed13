#include <doctest.h>

#include <random>

#include "../support/tableaux.hpp"
#include "rootnum/errors.hpp"
#include "rootnum/groups.hpp"
#include "rootnum/shapes.hpp"

using namespace rootnum;

namespace {

LaurentPoly exps(std::initializer_list<int> doubled) {
  std::vector<HalfInt> v;
  for (int d : doubled) v.push_back(HalfInt::from_doubled(d));
  return LaurentPoly::from_exponents(v);
}

// rho + highest weight mu, as the exponent multiset of the dual standard
// representation.
LaurentPoly shifted(const SimpleGroup& g, const std::vector<int>& mu) {
  auto rho = rho_infchar(g).exponents();
  std::vector<HalfInt> top(rho.begin(), rho.begin() + g.rank());
  std::vector<HalfInt> ex;
  if (g.family == GroupFamily::U_plus) {
    for (std::size_t i = 0; i < rho.size(); ++i)
      ex.push_back(rho[i] + HalfInt(i < mu.size() ? mu[i] : 0));
    return LaurentPoly::from_exponents(ex);
  }
  for (std::size_t i = 0; i < top.size(); ++i) {
    HalfInt x = top[i] + HalfInt(i < mu.size() ? mu[i] : 0);
    ex.push_back(x);
    ex.push_back(-x);
  }
  if (g.family == GroupFamily::Sp) ex.push_back(HalfInt(0));
  return LaurentPoly::from_exponents(ex);
}

void partitions(int n, int parts, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= std::min(n, max_part); ++x) {
    cur.push_back(x);
    partitions(n, parts, x, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> weights(int parts, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions(bound, parts, bound, cur, out);
  return out;
}

oracle::Partition trim(const std::vector<int>& mu) {
  oracle::Partition p;
  for (int x : mu)
    if (x > 0) p.push_back(x);
  return p;
}

}  // namespace

TEST_SUITE("shapes") {

TEST_CASE("lambda bracket d") {
  auto half = exps({1, -1});
  CHECK(lambda_bracket_d(half, 1) == half);
  CHECK(lambda_bracket_d(exps({0}), 2) == half);
  CHECK(lambda_bracket_d(exps({2, -2}), 3).to_string() ==
        "1*X^2 + 1*X^1 + 2*X^0 + 1*X^-1 + 1*X^-2");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int t = 0; t < 50; ++t) {
    int x = e(rng), y = e(rng);
    auto lam = exps({x, -x, y, -y});
    for (int d = 1; d <= 4; ++d) {
      auto ld = lambda_bracket_d(lam, d);
      CHECK(ld.mass() == 4 * d);
      CHECK(ld.is_symmetric());
    }
  }
}

TEST_CASE("classify integral") {
  auto r = classify_integral(DualityCase::self_dual, exps({3, 1, -1, -3}), 4);
  CHECK(r.integral);
  CHECK(r.regular);
  CHECK(r.family == GroupFamily::SO_odd);
  CHECK(!classify_integral(DualityCase::self_dual, exps({2, 0, 0, -2}) + exps({2, -2}), 6)
             .integral);
  CHECK(classify_integral(DualityCase::conjugate, exps({2, -2}), 2).integral);
  CHECK(!classify_integral(DualityCase::conjugate, exps({1, -1}), 2).integral);
  CHECK(classify_integral(DualityCase::conjugate, exps({1, -1, 3}), 3).integral);
  CHECK(classify_integral(DualityCase::self_dual, exps({2, 0, -2}), 3).family == GroupFamily::Sp);
  auto so = classify_integral(DualityCase::self_dual, exps({2, 0, 0, -2}), 4);
  CHECK(so.family == GroupFamily::SO_even);
  CHECK(so.regular);
  CHECK(!classify_integral(DualityCase::self_dual, exps({2, 1, -2}), 3).integral);
  CHECK(!classify_integral(DualityCase::self_dual, exps({2, -2}), 3).integral);
}

TEST_CASE("integrality parity of lambda[d]") {
  // integral lambda of odd rank T becomes half-integral after an even d
  for (int d = 1; d <= 4; ++d) {
    auto base = exps({8, 0, -8});
    auto r = classify_integral(DualityCase::self_dual, lambda_bracket_d(base, d), 3 * d);
    CHECK(r.integral);
    CHECK((r.family == GroupFamily::SO_odd) == (d % 2 == 0));
    auto half = exps({13, 5, -5, -13});
    auto h = classify_integral(DualityCase::self_dual, lambda_bracket_d(half, d), 4 * d);
    CHECK(h.integral);
    CHECK((h.family == GroupFamily::SO_odd) == (d % 2 == 1));
  }
}

TEST_CASE("simple shapes and group assignment") {
  EtaLabel eta{"a"};
  Shape s{{{4, 1, exps({3, 1, -1, -3}), {}, 1}}};
  auto g = assign_group(s, DualityCase::self_dual);
  REQUIRE(g);
  CHECK(g->name() == "SO_5");
  Shape odd{{{3, 1, exps({2, 0, -2}), eta, 1}}};
  CHECK(assign_group(odd, DualityCase::self_dual)->name() == "Sp^{a}_2");
  Shape bad{{{4, 1, exps({3, 1, -1, -3}), eta, 1}}};
  CHECK(!assign_group(bad, DualityCase::self_dual));
  Shape even{{{4, 1, exps({2, 0, 0, -2}), eta, 1}}};
  CHECK(assign_group(even, DualityCase::self_dual)->name() == "SO^{a}_4");
  // tau[2] of an orthogonal tau is symplectic
  Shape two{{{3, 2, exps({2, 0, -2}), eta, 1}}};
  CHECK(assign_group(two, DualityCase::self_dual)->name() == "SO_7");
  Shape mixed{{{2, 1, exps({1, -1}), {}, 1}, {3, 1, exps({4, 0, -4}), {}, 1}}};
  CHECK(assign_group(mixed, DualityCase::self_dual)->name() == "SO_3 x Sp_2");
  Shape conj{{{2, 1, exps({2, -2}), {}, 1}, {1, 2, exps({1}), {}, 1}}};
  CHECK(assign_group(conj, DualityCase::conjugate)->name() == "U_2^+ x U_2^-");
}

TEST_CASE("discrete series at infinity for even orthogonal groups") {
  CHECK(so_even_discrete_series(2, {true, true}));
  CHECK(!so_even_discrete_series(2, {true, false}));
  CHECK(so_even_discrete_series(3, {false}));
  CHECK(!so_even_discrete_series(3, {true}));
}

TEST_CASE("weyl dimension of rho is one") {
  for (int n = 2; n <= 10; n += 2) {
    CHECK(weyl_dim(SimpleGroup{GroupFamily::Sp, n, {}}, rho_infchar({GroupFamily::Sp, n, {}})) == 1);
    CHECK(weyl_dim(SimpleGroup{GroupFamily::SO_even, n, {}},
                   rho_infchar({GroupFamily::SO_even, n, {}})) == 1);
  }
  for (int n = 3; n <= 11; n += 2)
    CHECK(weyl_dim(SimpleGroup{GroupFamily::SO_odd, n, {}},
                   rho_infchar({GroupFamily::SO_odd, n, {}})) == 1);
  for (int n = 1; n <= 6; ++n)
    CHECK(weyl_dim(SimpleGroup{GroupFamily::U_plus, n, {}},
                   rho_infchar({GroupFamily::U_plus, n, {}})) == 1);
}

TEST_CASE("weyl dimensions against tableau counts") {
  for (int n = 1; n <= 4; ++n) {
    SimpleGroup u{GroupFamily::U_plus, n, {}};
    for (auto& mu : weights(n, 3))
      CHECK(weyl_dim(u, shifted(u, mu)) == oracle::ssyt_count(trim(mu), n));
  }
  for (int r = 1; r <= 3; ++r) {
    SimpleGroup sp{GroupFamily::Sp, 2 * r, {}};
    for (auto& mu : weights(r, 3))
      CHECK(weyl_dim(sp, shifted(sp, mu)) == oracle::king_symplectic_count(trim(mu), r));
  }
}

TEST_CASE("orthogonal dimensions against exterior powers") {
  for (int r = 2; r <= 4; ++r) {
    SimpleGroup b{GroupFamily::SO_odd, 2 * r + 1, {}};
    for (int k = 1; k < r; ++k) {
      std::vector<int> mu(k, 1);
      CHECK(weyl_dim(b, shifted(b, mu)) == oracle::choose(2 * r + 1, k));
    }
    CHECK(weyl_dim(b, shifted(b, std::vector<int>(r, 1))) == oracle::choose(2 * r + 1, r));
    SimpleGroup d{GroupFamily::SO_even, 2 * r, {}};
    for (int k = 1; k < r - 1; ++k) {
      std::vector<int> mu(k, 1);
      CHECK(weyl_dim(d, shifted(d, mu)) == oracle::choose(2 * r, k));
    }
  }
  CHECK(weyl_dim(SimpleGroup{GroupFamily::Sp, 4, {}}, exps({6, 2, 0, -2, -6})) == 4);
  CHECK(weyl_dim(SimpleGroup{GroupFamily::SO_odd, 5, {}}, exps({5, 1, -1, -5})) == 5);
}

TEST_CASE("norms and root counts") {
  SimpleGroup sp4{GroupFamily::Sp, 4, {}};
  CHECK(sp4.positive_roots() == 4);
  for (int n = 1; n <= 6; ++n) CHECK(SimpleGroup{GroupFamily::U_plus, n, {}}.positive_roots() == n * (n - 1) / 2);
  for (int n = 4; n <= 8; n += 2) {
    SimpleGroup d{GroupFamily::SO_even, n, {}};
    CHECK(m_norm(d, rho_infchar(d)) == Rational(1));
  }
  SimpleGroup u3{GroupFamily::U_plus, 3, {}};
  CHECK(m_norm(u3, rho_infchar(u3)) == Rational(1));
  CHECK(!m_norm(SimpleGroup{GroupFamily::U_plus, 1, {}}, exps({0})));
  CHECK(SimpleGroup{GroupFamily::SO_odd, 5, {}}.positive_roots() == 4);
  CHECK(SimpleGroup{GroupFamily::SO_even, 6, {}}.positive_roots() == 6);
}

TEST_CASE("dim box examples") {
  Box single{{4, 1, true, {}}};
  auto g = box_group(single);
  CHECK(g.name() == "SO_5");
  auto lam = exps({7, 1, -1, -7});
  auto r = dim_box(g, single, lam);
  CHECK(r.value == weyl_dim(g, lam));

  Box toral{{1, 2, false, {}}};
  auto gt = box_group(toral);
  CHECK(gt.name() == "SO_3");
  CHECK(dim_box(gt, toral, exps({1, -1})).value == 1);
  CHECK(dim_box(gt, toral, exps({3, -3})).value == 0);
  CHECK_THROWS_AS(dim_bound_check(gt, toral, exps({0, 0})), InvalidInput);

  Box two{{2, 1, true, {}}, {2, 1, true, {}}};
  auto g2 = box_group(two);
  CHECK(g2.name() == "SO_5");
  auto rho = rho_infchar(g2.factors[0]);
  auto res = dim_box(g2, two, rho);
  CHECK(res.value == 3);
  CHECK(res.local_group.name() == "SO_3 x SO_3");
  // unnormalised pairings: 3 <= 6; rho-normalised dims: 3 > 1
  auto un = dim_bound_check(g2, two, rho, false);
  CHECK(un.holds);
  CHECK(un.lhs == 3);
  CHECK(un.rhs == 6);
  auto norm = dim_bound_check(g2, two, rho, true);
  CHECK(!norm.holds);
  CHECK(norm.exponent == -2);
}

}  // TEST_SUITE
