#include <doctest.h>

#include <cmath>
#include <random>

#include "l2lab/catalog.hpp"
#include "l2lab/error.hpp"
#include "l2lab/homology.hpp"
#include "l2lab/sparse.hpp"
#include "l2lab/torsion.hpp"

using namespace l2lab;

namespace {

SparseIntMatrix dense(const std::vector<std::vector<std::int64_t>>& rows) {
  SparseIntMatrix A;
  A.rows = rows.size();
  A.cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c]) A.add(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), rows[r][c]);
  A.normalize();
  return A;
}

std::vector<mpz_class> mpz(const std::vector<long>& xs) {
  std::vector<mpz_class> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

mpq_class frac(long a, unsigned long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

/// One vertex, one loop per divisor, and a square per loop wrapping it d
/// times: H_1 = ⊕ Z/d, H_0 = Z, H_2 = 0.
CubeComplex torsion_fixture(const std::vector<std::int64_t>& divisors, std::uint64_t index = 1) {
  CubeComplex X;
  const auto k = divisors.size();
  X.counts = {1, k, k};
  X.boundary.resize(3);
  X.boundary[0].cols = 1;
  X.boundary[1].rows = 1;
  X.boundary[1].cols = k;
  X.boundary[2].rows = k;
  X.boundary[2].cols = k;
  for (std::size_t i = 0; i < k; ++i) X.boundary[2].add(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), divisors[i]);
  X.boundary[2].normalize();
  X.index = index;
  X.description = "torsion fixture";
  return X;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("Smith normal form") {
    CHECK(smith_invariant_factors(dense({{2, 0}, {0, 3}})) == mpz({1, 6}));
    CHECK(smith_invariant_factors(dense({{4, 0}, {0, 6}})) == mpz({2, 12}));
    CHECK(smith_invariant_factors(dense({{0, 0}, {0, 0}})).empty());
    CHECK(smith_invariant_factors(dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == mpz({2, 6, 12}));
  }

  TEST_CASE("modular, rational and Bareiss ranks agree") {
    std::mt19937 rng(5);
    for (int it = 0; it < 60; ++it) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
      for (auto& row : rows)
        for (auto& x : row) x = (rng() % 3 == 0) ? static_cast<std::int64_t>(rng() % 7) - 3 : 0;
      const auto A = dense(rows);
      const auto q = rank_bareiss(A);
      CHECK(rank_rational(A) == q);
      CHECK(smith_invariant_factors(A).size() == q);
      CHECK(rank_mod_p(A, 2) <= q);
    }
    CHECK(rank_mod_p(dense({{2}}), 2) == 0);
    CHECK(rank_mod_p(dense({{2}}), 3) == 1);
  }

  TEST_CASE("injected torsion is found and satisfies universal coefficients") {
    const auto H = integral_homology(torsion_fixture({3}));
    CHECK(H.betti_Q == std::vector<std::size_t>{1, 0, 0});
    CHECK(H.torsion[1] == mpz({3}));
    CHECK(H.betti_Fp.at(3) == std::vector<std::size_t>{1, 1, 1});
    CHECK(H.betti_Fp.at(2) == std::vector<std::size_t>{1, 0, 0});
    CHECK(H.universal_coefficients_hold());

    const auto H2 = integral_homology(torsion_fixture({4, 6}));
    CHECK(H2.torsion[1] == mpz({2, 12}));
    CHECK(H2.torsion_count(1, 2) == 2);
    CHECK(H2.torsion_count(1, 3) == 1);
    CHECK(H2.betti_Fp.at(2) == std::vector<std::size_t>{1, 2, 2});
    CHECK(H2.betti_Fp.at(3) == std::vector<std::size_t>{1, 1, 1});
    CHECK(H2.logtor[1] == doctest::Approx(std::log(24.0)));
    CHECK(H2.universal_coefficients_hold());
  }

  TEST_CASE("surfaces are torsion-free") {
    for (int m : {4, 5, 6}) {
      const auto H = integral_homology(davis_pl(special_complex("polygon", m)));
      for (const auto& t : H.torsion) CHECK(t.empty());
      CHECK(H.universal_coefficients_hold());
    }
  }

  TEST_CASE("growth towers match the surface oracle") {
    // A degree-d cover of the genus-5 surface P_{C5} has χ = -8d, so b_1 = 2 + 8d.
    const auto g = growth_series(davis_pl(special_complex("polygon", 5)), {{1}, {2}, {3}}, 3);
    REQUIRE(g.rows.size() == 3);
    std::uint64_t d = 3;
    for (const auto& r : g.rows) {
      CHECK(r.degree == d);
      CHECK(r.betti_Q[1] == frac(static_cast<long>(2 + 8 * d), 32 * d));
      CHECK(r.betti_Fp[1] == r.betti_Q[1]);
      d *= 3;
    }
    CHECK(g.rows[0].betti_Q[1] > g.rows[1].betti_Q[1]);
    CHECK(g.rows[1].betti_Q[1] > g.rows[2].betti_Q[1]);
    // Torus covers are tori.
    const auto t = growth_series(davis_pl(special_complex("polygon", 4)), {{1}, {2}}, 3);
    CHECK(t.rows[0].betti_Q[1] == frac(2, 48));
    CHECK(t.rows[1].betti_Q[1] == frac(2, 144));
    CHECK_THROWS_AS(growth_series(davis_pl(special_complex("polygon", 4)), {{2}, {1}}, 3), Error);
  }
}

TEST_SUITE("calculus") {
  TEST_CASE("torsion bookkeeping") {
    const auto torus = davis_pl(special_complex("polygon", 4));
    const auto g = growth_series(torus, {{1}, {2}}, 3);
    std::vector<std::pair<std::uint64_t, HomologySummary>> chain;
    for (const auto& r : g.rows) chain.emplace_back(r.index, r.summary);
    const auto rep = torsion_bookkeeping(chain, 1, 3);
    CHECK(!rep.any_torsion);
    CHECK(rep.verdict == "no torsion growth");
    for (const auto& l : rep.levels)
      for (auto t : l.t) CHECK(t == 0);

    const auto s = growth_series(davis_pl(special_complex("polygon", 5)), {{1}, {2}}, 2);
    chain.clear();
    for (const auto& r : s.rows) chain.emplace_back(r.index, r.summary);
    CHECK(torsion_bookkeeping(chain, 1, 2).verdict == "no torsion growth");

    // Fixtures with prescribed divisors: t_1(3) = 1, 2, 4 at indices 1, 2, 4.
    chain.clear();
    chain.emplace_back(1, integral_homology(torsion_fixture({3})));
    chain.emplace_back(2, integral_homology(torsion_fixture({3, 9})));
    chain.emplace_back(4, integral_homology(torsion_fixture({3, 3, 6, 9})));
    const auto inj = torsion_bookkeeping(chain, 0, 3);
    CHECK(inj.levels[0].t == std::vector<std::size_t>{0, 1, 0});
    CHECK(inj.levels[1].t == std::vector<std::size_t>{0, 2, 0});
    CHECK(inj.levels[2].t == std::vector<std::size_t>{0, 4, 0});
    CHECK(inj.levels[2].t_normalized[1] == 1);
    CHECK(inj.levels[2].betti_Fp_normalized[1] == 1);
    CHECK(inj.hypothesis_observed);  // b_1(F_3) = 4 > 0 = b_1(Q)
    CHECK(inj.torsion_observed);
    CHECK(inj.any_torsion);

    auto bad = chain;
    bad[1].first = 3;
    CHECK_THROWS_AS(torsion_bookkeeping(bad, 0, 3), Error);
    CHECK_THROWS_AS(torsion_bookkeeping({}, 0, 3), Error);
    CHECK_THROWS_AS(torsion_bookkeeping(chain, 0, 11), Error);
  }
}
