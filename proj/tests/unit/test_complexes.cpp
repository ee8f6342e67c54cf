#include <doctest.h>

#include <random>

#include "l2lab/catalog.hpp"
#include "l2lab/davis.hpp"
#include "l2lab/error.hpp"
#include "l2lab/isomorphism.hpp"
#include "l2lab/labels.hpp"
#include "l2lab/subdivision.hpp"

using namespace l2lab;

namespace {

std::vector<std::size_t> fv(const SimplicialComplex& L) {
  auto c = f_vector(L).counts;
  return {c.begin() + 1, c.end()};
}

}  // namespace

TEST_SUITE("complexes") {
  TEST_CASE("explicit builds have the expected f-vectors") {
    const auto C4 = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    CHECK(fv(C4) == std::vector<std::size_t>{4, 4});
    CHECK(C4.is_flag());
    const auto D3 = SimplicialComplex::from_maximal({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
    CHECK(fv(D3) == std::vector<std::size_t>{4, 6, 4});
    CHECK(!D3.is_flag());
    CHECK(fv(SimplicialComplex::from_maximal({{"a"}})) == std::vector<std::size_t>{1});
    CHECK(SimplicialComplex{}.dimension() == -1);
  }

  TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(SimplicialComplex::from_maximal({{"a", "a"}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal({{}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal({{"a", "b"}, {"b", "a"}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal({{"[a"}}), Error);
  }

  TEST_CASE("links and stars") {
    const auto D3 = special_complex("boundary-simplex", 3);
    CHECK(link(D3, {"0"}) == simplex_boundary({"1", "2", "3"}));
    CHECK(fv(star(D3, {"0"})) == std::vector<std::size_t>{4, 6, 3});
    CHECK(link(D3, {}) == D3);
    const auto O3 = special_complex("octahedron", 3);
    for (const auto& v : O3.vertices()) CHECK(is_isomorphic(link(O3, {v}), special_complex("polygon", 4)));
    for (const auto& e : O3.faces_of_dimension(1)) CHECK(link(O3, e).num_vertices() == 2);
  }

  TEST_CASE("joins, cones and suspensions") {
    const auto S0 = special_complex("S0");
    const auto C4 = join(S0, S0);
    CHECK(is_isomorphic(C4, special_complex("polygon", 4)));
    CHECK(C4.num_vertices() == 4);
    CHECK(fv(special_complex("octahedron", 3)) == std::vector<std::size_t>{6, 12, 8});
    CHECK(fv(cone(special_complex("polygon", 5))) == std::vector<std::size_t>{6, 10, 5});
    CHECK(fv(suspension(special_complex("polygon", 5))) == std::vector<std::size_t>{7, 15, 10});
    CHECK(fv(special_complex("three-join", 2)) == std::vector<std::size_t>{6, 9});
    CHECK(is_isomorphic(special_complex("three-join", 2), special_complex("K33")));
  }

  TEST_CASE("euler_l2 is multiplicative under joins") {
    const std::vector<SimplicialComplex> cs = {special_complex("S0"), special_complex("polygon", 5),
                                               special_complex("point"), special_complex("simplex", 2),
                                               special_complex("petersen")};
    for (const auto& a : cs)
      for (const auto& b : cs) CHECK(euler_l2(join(a, b)) == euler_l2(a) * euler_l2(b));
    // Σ (-1/2)^|σ| by hand: 1 - 5/2 + 5/4 = -1/4.
    CHECK(euler_l2(special_complex("polygon", 5)) == mpq_class(-1, 4));
    CHECK(euler_l2(special_complex("simplex", 2)) == mpq_class(1, 8));
  }

  TEST_CASE("flagness agrees with clique enumeration on random graphs") {
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
      std::vector<std::vector<VertexId>> edges;
      const int n = 3 + static_cast<int>(rng() % 5);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (rng() % 2) edges.push_back({std::to_string(a), std::to_string(b)});
      if (edges.empty()) continue;
      const auto G = SimplicialComplex::from_maximal(edges);
      bool triangle = false;
      for (const auto& u : G.vertices())
        for (const auto& v : G.neighbors(u))
          for (const auto& w : G.neighbors(v))
            if (w != u && G.adjacent(u, w)) triangle = true;
      CHECK(G.is_flag() == !triangle);
    }
  }

  TEST_CASE("full subcomplexes and simplex removal") {
    const auto O3 = special_complex("octahedron", 3);
    const auto F = full_subcomplex(O3, {O3.vertices()[0], O3.vertices()[1], O3.vertices()[2]});
    CHECK(is_full_subcomplex(F, O3));
    const auto e = O3.faces_of_dimension(1).front();
    const auto R = remove_simplices(O3, {e});
    CHECK(!R.contains(e));
    CHECK(R.faces_of_dimension(2).size() == 6);
    CHECK(connected_components(special_complex("S0")).size() == 2);
  }

  TEST_CASE("isomorphism search") {
    CHECK(is_isomorphic(special_complex("hexagon"), special_complex("polygon", 6)));
    CHECK(!is_isomorphic(special_complex("polygon", 5), special_complex("polygon", 6)));
    const auto phi = find_isomorphism(special_complex("K33"), special_complex("three-join", 2));
    REQUIRE(phi.has_value());
    CHECK(is_isomorphism(special_complex("K33"), special_complex("three-join", 2), *phi));
    CHECK(!find_isomorphism(special_complex("petersen"), special_complex("cube-1-skeleton")));
  }

  TEST_CASE("catalog") {
    CHECK_THROWS_AS(special_complex("nonsense"), Error);
    CHECK_THROWS_AS(special_complex("polygon"), Error);
    CHECK(fv(special_complex("petersen")) == std::vector<std::size_t>{10, 15});
    CHECK(fv(special_complex("cube-1-skeleton")) == std::vector<std::size_t>{8, 12});
    CHECK(fv(special_complex("bary-boundary-simplex", 3)) == std::vector<std::size_t>{14, 36, 24});
    CHECK(catalog_sphere_dimension("octahedron", 4) == 3);
    CHECK(!catalog_sphere_dimension("petersen"));
  }

  TEST_CASE("labels") {
    CHECK(barycenter_label({"0", "1"}) == "[0,1]");
    CHECK(flatten_label("[[0,1],2]") == std::vector<std::string>{"0", "1", "2"});
    CHECK(is_well_formed_label("[0,1]"));
    CHECK(!is_well_formed_label("[0,1"));
  }
}
