#include <doctest.h>

#include <random>

#include "l2lab/catalog.hpp"
#include "l2lab/davis.hpp"
#include "l2lab/decisions.hpp"
#include "l2lab/error.hpp"
#include "l2lab/homology.hpp"
#include "l2lab/isomorphism.hpp"
#include "l2lab/subdivision.hpp"
#include "support.hpp"

using namespace l2lab;

namespace {

std::vector<std::string> degrees(const BettiKnowledge& k) {
  std::vector<std::string> out;
  for (const auto& d : k.degrees) out.push_back(to_string(d));
  return out;
}

using Strs = std::vector<std::string>;

BettiKnowledge derived(const SimplicialComplex& L, int ch = 0) {
  const auto r = derive(L, ch);
  const auto v = verify(r.certificate);
  CHECK(v.ok);
  return r.certificate.conclusion();
}

}  // namespace

TEST_SUITE("calculus") {
  TEST_CASE("fact algebra") {
    const auto half = DegreeFact::exact(mpq_class(1, 2));
    CHECK(DegreeFact::exact(0).is_zero());
    CHECK(DegreeFact::upper(0).is_zero());
    CHECK(to_string(add(half, DegreeFact::upper(1))) == "<=3/2");
    CHECK(to_string(multiply(DegreeFact::zero(), DegreeFact::unknown())) == "0");
    CHECK(to_string(multiply(half, half)) == "1/4");
    CHECK(entails(half, DegreeFact::upper(1)));
    CHECK(!entails(DegreeFact::upper(1), half));
    CHECK(!meet(half, DegreeFact::zero()).has_value());
    CHECK(meet(DegreeFact::upper(1), half) == half);
    CHECK(to_string(scale(half, 2)) == "1");
  }

  TEST_CASE("Künneth convolution") {
    BettiKnowledge pt{0, {DegreeFact::exact(mpq_class(1, 2)), DegreeFact::zero()}};
    const auto two = convolve(pt, pt, 1);
    CHECK(degrees(two) == Strs{"1/4", "0", "0"});
    BettiKnowledge c5{0, {DegreeFact::zero(), DegreeFact::exact(mpq_class(1, 4)), DegreeFact::zero()}};
    CHECK(degrees(convolve(c5, c5, 3)) == Strs{"0", "0", "1/16", "0", "0"});
    CHECK(alternating_sum(c5) == mpq_class(-1, 4));
  }

  TEST_CASE("derive reproduces the base cases") {
    CHECK(degrees(derived(SimplicialComplex{})) == Strs{"1"});
    CHECK(degrees(derived(special_complex("simplex", 2))) == Strs{"1/8", "0", "0", "0"});
    CHECK(degrees(derived(special_complex("S0"))) == Strs{"0", "0"});
    CHECK(degrees(derived(special_complex("polygon", 4))) == Strs{"0", "0", "0"});
    CHECK(degrees(derived(special_complex("octahedron", 3))) == Strs{"0", "0", "0", "0"});
    CHECK(degrees(derived(cone(special_complex("polygon", 5)))) == Strs{"0", "1/8", "0", "0"});
    CHECK(degrees(derived(special_complex("K33"))) == Strs{"0", "0", "1/4"});
    CHECK(degrees(derived(special_complex("three-join", 3))) == Strs{"0", "0", "0", "1/8"});
  }

  TEST_CASE("graphs and pinning") {
    CHECK(degrees(derived(special_complex("polygon", 5))) == Strs{"0", "1/4", "0"});
    CHECK(degrees(derived(special_complex("hexagon"))) == Strs{"0", "1/2", "0"});
    CHECK(degrees(derived(special_complex("petersen"))) == Strs{"0", "1/4", "0"});
    CHECK(degrees(derived(special_complex("cube-1-skeleton"))) == Strs{"0", "0", "0"});
    const auto r = derive(special_complex("bary-boundary-simplex", 2), 0);
    CHECK(r.complete);
    CHECK(r.certificate.count_rule("R-euler") >= 1);
    CHECK(degrees(r.certificate.conclusion()) == Strs{"0", "1/2", "0"});
  }

  TEST_CASE("b∂Δ^3 vanishes in every characteristic") {
    for (int ch : {0, 2, 3, 5}) {
      const auto r = derive(special_complex("bary-boundary-simplex", 3), ch);
      CHECK(r.complete);
      CHECK(r.certificate.conclusion().all_zero());
      CHECK(r.certificate.count_rule("R-iterated") == 1);
      CHECK(verify(r.certificate).ok);
    }
  }

  TEST_CASE("exact claims respect cover upper bounds") {
    const auto L = special_complex("polygon", 5);
    const auto k = derived(L);
    const auto g = growth_series(davis_pl(L), {{1}, {2}, {3}}, 3);
    for (const auto& row : g.rows)
      for (int i = 0; i < 3; ++i)
        if (k.at(i).determined()) CHECK(row.betti_Q[static_cast<std::size_t>(i)] >= k.at(i).value);
  }

  TEST_CASE("joins convolve") {
    const std::vector<SimplicialComplex> cs = {special_complex("S0"), special_complex("polygon", 5),
                                               special_complex("point"), special_complex("K33")};
    for (const auto& a : cs)
      for (const auto& b : cs) {
        const auto J = join(a, b);
        const auto ka = derived(a), kb = derived(b);
        if (!ka.fully_determined() || !kb.fully_determined()) continue;
        CHECK(derived(J) == convolve(ka, kb, J.dimension()));
      }
  }

  TEST_CASE("subdividing an edge matches deleting it") {
    for (const auto& L : {special_complex("polygon", 4), special_complex("hexagon"), special_complex("octahedron", 3)}) {
      const auto e = L.faces_of_dimension(1).front();
      CHECK(derived(sub_edge(L, e)) == derived(remove_simplices(L, {e})));
    }
  }

  TEST_CASE("duality checks its sphere tag") {
    const auto C5 = special_complex("polygon", 5);
    auto c = derive(C5, 0).certificate;
    const auto root = c.root;
    auto add_duality = [&](Certificate cert, const SimplicialComplex& L, nlohmann::json prov) {
      cert.nodes.push_back({cert.nodes.size(), "R-duality", L, cert.conclusion(), {root},
                            {{"sphere_dimension", 1}, {"provenance", prov}}});
      cert.root = cert.nodes.size() - 1;
      return verify(cert);
    };
    const auto cat = add_duality(c, C5, {{"kind", "catalog"}, {"name", "polygon"}, {"param", 5}});
    CHECK(cat.ok);
    CHECK(cat.assumptions.empty());
    const auto assumed = add_duality(c, C5, {{"kind", "assumed"}});
    CHECK(assumed.ok);
    CHECK(assumed.assumptions.size() == 1);
    CHECK(!add_duality(c, C5, {{"kind", "catalog"}, {"name", "polygon"}, {"param", 6}}).ok);
  }

  TEST_CASE("forged certificates fail verification") {
    auto cube = trivalent_decision(special_complex("cube-1-skeleton")).certificate.value();
    for (auto& n : cube.nodes)
      if (n.rule == "R-edge-remove") {
        n.conclusion.degrees[1] = DegreeFact::exact(1);
        break;
      }
    const auto v = verify(cube);
    CHECK(!v.ok);
    REQUIRE(!v.failures.empty());
    CHECK(v.failures.front().rule == "R-edge-remove");

    const auto C5 = special_complex("polygon", 5);
    Certificate forged;
    forged.nodes.push_back({0, "R-none", C5, unknown_knowledge(1, 0), {}, {{"reason", "test"}}});
    auto pinned = unknown_knowledge(1, 0);
    pinned.degrees[1] = DegreeFact::exact(mpq_class(1, 4));
    forged.nodes.push_back({1, "R-euler", C5, pinned, {0}, {{"degree", 1}}});
    forged.root = 1;
    CHECK(!verify(forged).ok);

    auto wrong_premise = derive(special_complex("hexagon"), 0).certificate;
    wrong_premise.nodes.back().premises = {wrong_premise.nodes.back().id};
    CHECK(!verify(wrong_premise).ok);
  }

  TEST_CASE("trivalent decision") {
    const auto cube = trivalent_decision(special_complex("cube-1-skeleton"));
    REQUIRE(cube.certificate.has_value());
    CHECK(cube.certificate->count_rule("R-edge-remove") == 6);
    for (const auto& n : cube.certificate->nodes)
      if (n.rule == "R-edge-remove") CHECK(cube.certificate->nodes[n.premises[1]].complex.num_vertices() == 2);
    CHECK(cube.certificate->conclusion().at(2).is_zero());
    CHECK(verify(*cube.certificate).ok);

    const auto k33 = trivalent_decision(special_complex("K33"));
    REQUIRE(k33.k33_witness.has_value());
    CHECK(is_isomorphism(special_complex("K33"), special_complex("K33"), *k33.k33_witness));

    const auto pet = trivalent_decision(special_complex("petersen"));
    REQUIRE(pet.certificate.has_value());
    CHECK(verify(*pet.certificate).ok);

    CHECK_THROWS_AS(trivalent_decision(special_complex("octahedron", 3)), Error);
    CHECK_THROWS_AS(trivalent_decision(special_complex("S0")), Error);
    CHECK_THROWS_AS(trivalent_decision(join(special_complex("point"), special_complex("polygon", 5))), Error);
  }

  TEST_CASE("random cubic graphs") {
    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
      const auto G = testing::random_cubic_graph(rng, 6 + 2 * static_cast<int>(rng() % 4));
      const auto r = trivalent_decision(G);
      const bool iso = is_isomorphic(G, special_complex("K33"));
      CHECK(r.k33_witness.has_value() == iso);
      if (r.certificate) CHECK(verify(*r.certificate).ok);
    }
  }

  TEST_CASE("minimally branching decision") {
    const auto w = minimally_branching_decision(special_complex("three-join", 3));
    REQUIRE(w.three_join_witness.has_value());
    CHECK(is_isomorphism(special_complex("three-join", 3), special_complex("three-join", 3), *w.three_join_witness));
    const auto o = minimally_branching_decision(special_complex("octahedron", 3));
    REQUIRE(o.certificate.has_value());
    CHECK(o.n == 3);
    CHECK(o.certificate->conclusion().at(3).is_zero());
    const auto k = minimally_branching_decision(special_complex("K33"));
    CHECK(k.three_join_witness.has_value());
    const auto cube = minimally_branching_decision(special_complex("cube-1-skeleton"));
    CHECK(cube.certificate.has_value());
    // An edge in four triangles.
    const auto fan = SimplicialComplex::from_maximal({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}, {"a", "b", "f"}});
    CHECK_THROWS_AS(minimally_branching_decision(fan), Error);
  }

  TEST_CASE("certificates survive serialization") {
    for (const auto& L : {special_complex("bary-boundary-simplex", 3), special_complex("petersen"),
                          special_complex("bary-boundary-simplex", 2)}) {
      const auto c = derive(L, 0).certificate;
      const auto back = certificate_from_json(nlohmann::json::parse(certificate_to_json(c).dump()));
      CHECK(back.nodes.size() == c.nodes.size());
      CHECK(back.conclusion() == c.conclusion());
      CHECK(verify(back).ok);
    }
  }
}
