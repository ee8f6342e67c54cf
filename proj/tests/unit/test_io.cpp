#include <doctest.h>

#include "l2lab/catalog.hpp"
#include "l2lab/davis.hpp"
#include "l2lab/error.hpp"
#include "l2lab/group.hpp"
#include "l2lab/homology.hpp"
#include "l2lab/io.hpp"
#include "l2lab/script.hpp"

using namespace l2lab;

TEST_SUITE("io") {
  TEST_CASE("complex JSON") {
    const auto L = special_complex("petersen");
    CHECK(complex_from_json(complex_to_json(L)) == L);
    CHECK(complex_from_json(json{{"catalog", "polygon"}, {"param", 5}}) == special_complex("polygon", 5));
    const auto iso = complex_from_json(json::parse(R"({"vertices":["a","b","z"],"maximal_simplices":[["a","b"]]})"));
    CHECK(iso.num_vertices() == 3);
    CHECK(iso.has_vertex("z"));
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"vertices":["a"],"maximal_simplices":[["a","b"]]})")), Error);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"maximal_simplices":[["a","a"]]})")), Error);
    CHECK(fvector_to_json(f_vector(special_complex("octahedron", 3))) == json({6, 12, 8}));
  }

  TEST_CASE("script JSON accepts both step forms") {
    const auto s = script_octahedron(2, {});
    const auto j = script_to_json(s);
    CHECK(j["steps"][0].contains("edge"));
    const auto back = script_from_json(j);
    CHECK(back.steps == s.steps);
    CHECK(verify_script(back).passed());
    auto pairs = j;
    for (auto& st : pairs["steps"]) st = st["edge"];
    CHECK(script_from_json(pairs).steps == s.steps);
    pairs["claimed_target"] = nullptr;
    CHECK(!script_from_json(pairs).claimed_target.has_value());
  }

  TEST_CASE("cube complex JSON") {
    const auto X = davis_pl(special_complex("polygon", 4));
    const auto Y = cube_complex_from_json(json::parse(cube_complex_to_json(X).dump()));
    CHECK(Y.counts == X.counts);
    CHECK(Y.index == X.index);
    CHECK(betti(Y) == betti(X));
    auto broken = cube_complex_to_json(X);
    broken["boundary"][1]["entries"][0][2] = 5;
    CHECK_THROWS(cube_complex_from_json(broken));
  }

  TEST_CASE("homology JSON") {
    const auto H = integral_homology(davis_pl(special_complex("polygon", 5)));
    const auto back = homology_from_json(homology_to_json(H));
    CHECK(back.betti_Q == H.betti_Q);
    CHECK(back.betti_Fp == H.betti_Fp);
    CHECK(back.torsion == H.torsion);
  }

  TEST_CASE("quotients from JSON") {
    const auto C4 = special_complex("polygon", 4);
    const auto q = quotient_from_json(C4, json::parse(R"({"permutations":[[1,0,3,2],[2,3,0,1],[1,0,3,2],[2,3,0,1]]})"));
    CHECK(q.group().order() == 4);
    CHECK_THROWS_AS(quotient_from_json(C4, json::parse(R"({"permutations":[[1,2,0],[0,1,2],[0,1,2],[0,1,2]]})")), Error);
  }
}
