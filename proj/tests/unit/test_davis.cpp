#include <doctest.h>

#include "l2lab/catalog.hpp"
#include "l2lab/davis.hpp"
#include "l2lab/error.hpp"
#include "l2lab/homology.hpp"

using namespace l2lab;

namespace {

std::vector<mpz_class> as_mpz(const std::vector<std::size_t>& v) {
  std::vector<mpz_class> out;
  for (auto x : v) out.emplace_back(std::to_string(x));
  return out;
}

mpq_class two_pow(std::size_t n) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, n);
  return mpq_class(z);
}

}  // namespace

TEST_SUITE("davis") {
  TEST_CASE("chamber cells are Σ_σ binom(|σ|, k)") {
    CHECK(chamber(special_complex("S0")).counts() == std::vector<std::size_t>{3, 2});
    const auto C = chamber(special_complex("polygon", 4));
    CHECK(C.counts() == std::vector<std::size_t>{9, 12, 4});
    CHECK(C.euler() == 1);
    CHECK(chamber(special_complex("octahedron", 3)).euler() == 1);
  }

  TEST_CASE("small P_L are the expected surfaces") {
    const auto circle = davis_pl(special_complex("S0"));
    CHECK(circle.counts == std::vector<std::size_t>{4, 4});
    CHECK(betti(circle) == std::vector<std::size_t>{1, 1});

    const auto torus = davis_pl(special_complex("polygon", 4));
    CHECK(torus.counts == std::vector<std::size_t>{16, 32, 16});
    CHECK(torus.index == 16);
    CHECK(betti(torus) == std::vector<std::size_t>{1, 2, 1});

    const auto genus5 = davis_pl(special_complex("polygon", 5));
    CHECK(genus5.euler() == -8);
    CHECK(betti(genus5) == std::vector<std::size_t>{1, 10, 1});

    const auto square = davis_pl(SimplicialComplex::from_maximal({{"a", "b"}}));
    CHECK(square.counts == std::vector<std::size_t>{4, 4, 1});
    CHECK(betti(square) == std::vector<std::size_t>{1, 0, 0});
  }

  TEST_CASE("fine and coarse structures agree on homology") {
    for (const auto& L : {special_complex("S0"), special_complex("polygon", 4), special_complex("polygon", 5),
                          special_complex("octahedron", 3)}) {
      const auto q = canonical_quotient(L);
      const auto fine = basic_construction(q);
      const auto coarse = davis_cubulation(q);
      fine.check_boundary_squares_zero();
      coarse.check_boundary_squares_zero();
      CHECK(betti(fine) == betti(coarse));
      CHECK(fine.euler() == coarse.euler());
      std::vector<mpz_class> counts;
      for (auto c : fine.counts) counts.emplace_back(std::to_string(c));
      CHECK(counts == basic_construction_counts(L, q.group().order()));
      CHECK(as_mpz(coarse.counts) == cubulation_counts(L, q.group().order()));
    }
  }

  TEST_CASE("χ(P_L) = 2^|L^0| euler_l2(L) across the catalog") {
    for (const auto& name : catalog_names()) {
      std::vector<int> params = {-1};
      if (catalog_takes_parameter(name)) params = {3, 4};
      for (int p : params) {
        const auto L = special_complex(name, p);
        const auto n = L.num_vertices();
        const auto counts = cubulation_counts(L, std::size_t{1} << n);
        mpz_class chi = 0;
        for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 ? -1 : 1) * counts[k];
        CHECK_MESSAGE(mpq_class(chi) == two_pow(n) * euler_l2(L), name << " " << p);
        if (n <= 8) CHECK(davis_pl(L).euler() == chi.get_si());
      }
    }
  }

  TEST_CASE("quotients are validated") {
    const auto e = SimplicialComplex::from_maximal({{"a", "b"}});
    const auto S3 = FiniteGroup::from_permutations({{1, 0, 2}, {0, 2, 1}});
    CHECK(S3.order() == 6);
    CHECK_THROWS_AS(FiniteQuotient(e, S3), Error);
    // C4 onto (Z/2)^2, opposite vertices identified: a torus with 4 squares.
    const auto C4 = special_complex("polygon", 4);
    const auto V4 = FiniteGroup::from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}, {1, 0, 3, 2}, {2, 3, 0, 1}});
    const auto X = davis_cubulation(FiniteQuotient(C4, V4));
    CHECK(X.counts == std::vector<std::size_t>{4, 8, 4});
    CHECK(betti(X) == std::vector<std::size_t>{1, 2, 1});
  }

  TEST_CASE("abelian covers") {
    const auto torus = davis_pl(special_complex("polygon", 4));
    CHECK(first_betti_integral(torus) == 2);
    const auto T3 = abelian_p_cover(torus, 3, {1});
    CHECK(T3.index == 48);
    CHECK(betti(T3) == std::vector<std::size_t>{1, 2, 1});
    const auto circle = davis_pl(special_complex("S0"));
    CHECK(betti(abelian_p_cover(circle, 3, {2})) == std::vector<std::size_t>{1, 1});
    CHECK_THROWS_AS(abelian_p_cover(circle, 3, {1, 1}), Error);
    CHECK_THROWS_AS(davis_pl(special_complex("polygon", 5), 10), Error);
  }
}
