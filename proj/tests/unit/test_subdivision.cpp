#include <doctest.h>

#include <random>

#include "l2lab/catalog.hpp"
#include "l2lab/error.hpp"
#include "l2lab/isomorphism.hpp"
#include "l2lab/script.hpp"
#include "l2lab/subdivision.hpp"
#include "support.hpp"

using namespace l2lab;

namespace {

std::vector<std::size_t> fv(const SimplicialComplex& L) {
  auto c = f_vector(L).counts;
  return {c.begin() + 1, c.end()};
}

SimplicialComplex edge(const char* a, const char* b) { return SimplicialComplex::from_maximal({{a, b}}); }

}  // namespace

TEST_SUITE("subdivision") {
  TEST_CASE("edge subdivision counts") {
    const auto C5 = sub_edge(special_complex("polygon", 4), {"0", "1"});
    CHECK(fv(C5) == std::vector<std::size_t>{5, 5});
    CHECK(is_isomorphic(C5, special_complex("polygon", 5)));
    // One new vertex, |Lk e| + 1 new edges, 2 |Lk e| new triangles minus the |Lk e| removed.
    CHECK(fv(sub_edge(special_complex("boundary-simplex", 3), {"0", "1"})) == std::vector<std::size_t>{5, 9, 6});
    const auto O3 = special_complex("octahedron", 3);
    const auto S = sub_edge(O3, O3.faces_of_dimension(1).front());
    CHECK(fv(S) == std::vector<std::size_t>{7, 15, 10});
    CHECK(S.is_flag());
    CHECK_THROWS_AS(sub_edge(O3, {"nope", "no"}), Error);
  }

  TEST_CASE("four-case link description matches direct links") {
    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
      const auto L = testing::random_flag_complex(rng, 6, 0.6);
      for (const auto& e : L.faces_of_dimension(1)) {
        const auto S = sub_edge(L, e);
        CHECK(S.is_flag());
        for (const auto& s : S.faces()) CHECK(link_in_subdivision(L, e, s) == link(S, s));
      }
    }
  }

  TEST_CASE("relative barycentric subdivisions") {
    const auto D2 = special_complex("boundary-simplex", 2);
    CHECK(is_isomorphic(relative_barycentric(D2, {}), special_complex("hexagon")));
    CHECK(fv(relative_barycentric(special_complex("boundary-simplex", 3), {})) == std::vector<std::size_t>{14, 36, 24});
    const auto T = special_complex("simplex", 2);
    const auto K = edge("0", "1");
    const auto B = relative_barycentric(T, K);
    CHECK(B.is_flag());
    CHECK(is_subcomplex(K, B));
    CHECK(euler_characteristic(B) == 1);
    // K itself is untouched: b(L, L) = L.
    CHECK(relative_barycentric(T, T) == T);
    for (const auto& v : B.vertices()) CHECK(link_in_relative_barycentric(T, K, v) == link(B, {v}));
  }

  TEST_CASE("octahedron scripts") {
    const auto s2 = script_octahedron(2, {});
    CHECK(s2.steps.size() == 2);
    CHECK(verify_script(s2).passed());
    CHECK(is_isomorphic(apply_script(s2), special_complex("hexagon")));
    const auto s3 = script_octahedron(3, {});
    CHECK(s3.steps.size() == 8);
    CHECK(verify_script(s3).passed());
    CHECK(fv(apply_script(s3)) == std::vector<std::size_t>{14, 36, 24});
    CHECK(verify_script(script_octahedron(3, edge("0", "1"))).passed());
  }

  TEST_CASE("relative and two-subcomplex scripts") {
    const auto D3 = special_complex("boundary-simplex", 3);
    CHECK(verify_script(script_relative(special_complex("polygon", 4), {})).passed());
    CHECK(verify_script(script_relative(D3, {})).passed());
    const auto St = SimplicialComplex::from_maximal({{"0", "1"}, {"0", "2"}, {"0", "3"}});
    CHECK(verify_script(script_relative(D3, St)).passed());
    const auto fig = script_twosubs(special_complex("simplex", 2), edge("0", "1"), {});
    CHECK(fig.steps.size() == 1);
    CHECK(verify_script(fig).passed());
  }

  TEST_CASE("tampered scripts are rejected") {
    auto s = script_octahedron(3, {});
    auto missing = s;
    missing.steps.front() = {"0", "nowhere"};
    CHECK_THROWS_AS(apply_script(missing), Error);
    const auto r = verify_script(missing);
    CHECK(!r.passed());
    REQUIRE(r.failed_step.has_value());
    CHECK(*r.failed_step == 0);
    auto truncated = s;
    truncated.steps.pop_back();
    CHECK(!verify_script(truncated).passed());
  }
}
