#include "l2lab/decisions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "l2lab/catalog.hpp"
#include "l2lab/error.hpp"

namespace l2lab {

namespace {

std::vector<VertexId> without(const std::vector<VertexId>& vs, const std::vector<VertexId>& drop) {
  std::vector<VertexId> out;
  for (const auto& v : vs)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

bool connected_nonempty(const SimplicialComplex& K) { return !K.empty() && connected_components(K).size() == 1; }

// Breadth-first order from `start` (excluded) inside K.
std::vector<VertexId> bfs_order(const SimplicialComplex& K, const VertexId& start) {
  std::vector<VertexId> out;
  std::set<VertexId> seen{start};
  std::queue<VertexId> q;
  q.push(start);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (const auto& y : K.neighbors(x))
      if (seen.insert(y).second) {
        out.push_back(y);
        q.push(y);
      }
  }
  return out;
}

std::map<VertexId, std::size_t> distances_from(const SimplicialComplex& G, const VertexId& s) {
  std::map<VertexId, std::size_t> d{{s, 0}};
  std::queue<VertexId> q;
  q.push(s);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (const auto& y : G.neighbors(x))
      if (!d.count(y)) {
        d[y] = d[x] + 1;
        q.push(y);
      }
  }
  return d;
}

bool star_separates(const SimplicialComplex& G, const VertexId& u) {
  auto drop = G.neighbors(u);
  drop.push_back(u);
  return !connected_nonempty(full_subcomplex(G, without(G.vertices(), drop)));
}

std::optional<std::pair<VertexId, VertexId>> choose_pair(const SimplicialComplex& G, std::string& how) {
  const auto& V = G.vertices();
  auto good = [&](const VertexId& u, const VertexId& v) {
    return !G.adjacent(u, v) && !star_separates(G, u) && !star_separates(G, v);
  };
  // A full suspension of three points: twins x, y with base {a, b, c}.
  for (std::size_t i = 0; i < V.size(); ++i)
    for (std::size_t j = i + 1; j < V.size(); ++j) {
      if (G.adjacent(V[i], V[j])) continue;
      auto nx = G.neighbors(V[i]);
      if (nx.size() == 3 && nx == G.neighbors(V[j])) {
        if (good(nx[0], nx[1])) {
          how = "suspension";
          return std::make_pair(nx[0], nx[1]);
        }
        goto search;
      }
    }
  {
    std::size_t best = 0;
    std::optional<std::pair<VertexId, VertexId>> pick;
    for (std::size_t i = 0; i < V.size(); ++i) {
      auto d = distances_from(G, V[i]);
      for (std::size_t j = i + 1; j < V.size(); ++j)
        if (d.at(V[j]) > best) {
          best = d.at(V[j]);
          pick = std::make_pair(V[i], V[j]);
        }
    }
    if (pick && good(pick->first, pick->second)) {
      how = "max-distance";
      return pick;
    }
  }
search:
  for (std::size_t i = 0; i < V.size(); ++i)
    for (std::size_t j = i + 1; j < V.size(); ++j)
      if (good(V[i], V[j])) {
        how = "search";
        return std::make_pair(V[i], V[j]);
      }
  return std::nullopt;
}

std::optional<std::size_t> try_split(CertificateBuilder& b, const SimplicialComplex& G, const VertexId& a,
                                     const VertexId& c, std::optional<VertexMap>* k33, std::string* how) {
  auto comps = connected_components(full_subcomplex(G, without(G.vertices(), {a, c})));
  if (comps.size() < 2) return std::nullopt;
  auto first = comps[0];
  auto with_cut = first;
  with_cut.push_back(a);
  with_cut.push_back(c);
  const auto L1 = full_subcomplex(G, with_cut);
  const auto L2 = full_subcomplex(G, without(G.vertices(), first));
  auto n1 = graph_b2_node(b, L1, k33, how);
  auto n2 = n1 ? graph_b2_node(b, L2, k33, how) : std::nullopt;
  if (!n1 || !n2) return std::nullopt;
  return b.add("R-mv-split", G, {*n1, *n2, b.derive(full_subcomplex(G, {a, c}))});
}

std::size_t edge_count(const SimplicialComplex& G) { return G.faces_of_dimension(1).size(); }

}  // namespace

std::optional<std::size_t> graph_b2_node(CertificateBuilder& b, const SimplicialComplex& G,
                                         std::optional<VertexMap>* k33, std::string* pair_choice) {
  if (G.empty()) return b.derive(G);
  if (G.dimension() > 1 || !G.is_flag()) return std::nullopt;
  for (const auto& v : G.vertices()) {
    if (G.neighbors(v).size() > 2) continue;
    auto rest = graph_b2_node(b, full_subcomplex(G, without(G.vertices(), {v})), k33, pair_choice);
    if (!rest) return std::nullopt;
    return b.add("R-vertex-remove", G, {*rest, b.derive(link(G, {v}))}, {{"vertex", v}, {"direction", "up"}});
  }
  for (const auto& v : G.vertices())
    if (G.neighbors(v).size() > 3) return std::nullopt;

  const auto cc = connected_components(G);
  if (cc.size() >= 2) {
    std::vector<VertexId> rest;
    for (std::size_t c = 1; c < cc.size(); ++c) rest.insert(rest.end(), cc[c].begin(), cc[c].end());
    auto n1 = graph_b2_node(b, full_subcomplex(G, cc[0]), k33, pair_choice);
    auto n2 = n1 ? graph_b2_node(b, full_subcomplex(G, rest), k33, pair_choice) : std::nullopt;
    if (!n1 || !n2) return std::nullopt;
    return b.add("R-mv-split", G, {*n1, *n2, b.derive(SimplicialComplex{})});
  }

  if (G.num_vertices() == 6 && edge_count(G) == 9) {
    if (auto phi = find_isomorphism(G, special_complex("K33"))) {
      if (k33) *k33 = phi;
      return std::nullopt;
    }
  }

  for (const auto& e : G.faces_of_dimension(1))
    if (auto id = try_split(b, G, e[0], e[1], k33, pair_choice)) return id;
  const auto& V = G.vertices();
  for (std::size_t i = 0; i < V.size(); ++i)
    for (std::size_t j = i + 1; j < V.size(); ++j)
      if (!G.adjacent(V[i], V[j]))
        if (auto id = try_split(b, G, V[i], V[j], k33, pair_choice)) return id;

  std::string how;
  auto uv = choose_pair(G, how);
  if (!uv) return std::nullopt;
  if (pair_choice) *pair_choice = how;
  const auto [u, v] = *uv;
  auto current = join(full_subcomplex(G, without(V, {u, v})), SimplicialComplex::from_maximal({{u}, {v}}));
  auto id = b.add("R-suspension", current, {}, {{"north", u}, {"south", v}});
  for (const auto& [x, y] : {std::make_pair(u, v), std::make_pair(v, u)}) {
    auto drop = G.neighbors(x);
    drop.push_back(x);
    for (const auto& w : bfs_order(full_subcomplex(G, without(V, drop)), y)) {
      const Simplex e = make_simplex({x, w});
      const auto lid = b.derive(link(current, e));
      current = remove_simplices(current, {e});
      id = b.add("R-edge-remove", current, {id, lid}, {{"edge", e}});
    }
  }
  if (current != G) throw std::logic_error("edge removals did not end at the input graph");
  if (!b.knowledge(id).at(2).is_zero()) throw std::logic_error("an edge link had more than two points");
  return id;
}

TrivalentResult trivalent_decision(const SimplicialComplex& G, int characteristic) {
  if (G.dimension() > 1) fail(ErrorCode::NotTrivalentEligible, "input has simplices of dimension 2 or more");
  if (!G.is_flag()) fail(ErrorCode::NotTrivalentEligible, "graph has a 3-cycle, so it is not flag");
  if (!connected_nonempty(G)) fail(ErrorCode::NotTrivalentEligible, "graph is empty or disconnected");
  for (const auto& v : G.vertices())
    if (G.neighbors(v).size() > 3)
      fail(ErrorCode::NotTrivalentEligible, "vertex " + v + " has degree " + std::to_string(G.neighbors(v).size()));
  CertificateBuilder b(characteristic);
  TrivalentResult r;
  std::optional<VertexMap> witness;
  auto id = graph_b2_node(b, G, &witness, &r.pair_choice);
  if (id)
    r.certificate = b.finish(*id);
  else if (witness)
    r.k33_witness = std::move(witness);
  else
    throw std::logic_error("trivalent decision produced neither certificate nor witness");
  return r;
}

namespace {

void check_minimally_branching(const SimplicialComplex& L) {
  if (L.empty()) fail(ErrorCode::HypothesisViolated, "complex is empty");
  if (!L.is_flag()) fail(ErrorCode::HypothesisViolated, "complex is not flag");
  const int d = L.dimension();
  for (const auto& s : L.faces_of_dimension(d - 1)) {
    std::size_t tops = 0;
    for (const auto& t : L.faces_of_dimension(d))
      if (is_face_of(s, t)) ++tops;
    if (tops > 3)
      fail(ErrorCode::HypothesisViolated, "simplex " + to_string(s) + " lies in " + std::to_string(tops) + " top simplices");
  }
  if (!connected_nonempty(L)) fail(ErrorCode::HypothesisViolated, "complex is disconnected");
  for (int k = 0; k < d - 1; ++k)
    for (const auto& s : L.faces_of_dimension(k))
      if (!connected_nonempty(link(L, s)))
        fail(ErrorCode::HypothesisViolated, "link of " + to_string(s) + " is not connected");
}

bool satisfies_minimally_branching(const SimplicialComplex& L) {
  try {
    check_minimally_branching(L);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::optional<std::size_t> mb_node(CertificateBuilder& b, const SimplicialComplex& L, std::optional<VertexMap>* witness);

// A node with b_m(K) = 0, if one is found.
std::optional<std::size_t> vanishing_node(CertificateBuilder& b, const SimplicialComplex& K, int m) {
  if (K.dimension() == m - 1 && satisfies_minimally_branching(K)) return mb_node(b, K, nullptr);
  const auto id = b.derive(K);
  if (b.knowledge(id).at(m).is_zero()) return id;
  return std::nullopt;
}

std::optional<std::size_t> mb_node(CertificateBuilder& b, const SimplicialComplex& L, std::optional<VertexMap>* witness) {
  const int d = L.dimension();
  const int n = d + 1;
  auto three_join = [&](int k) { return find_isomorphism(L, special_complex("three-join", k)); };
  if (d == 1) {
    std::optional<VertexMap> k33;
    auto id = graph_b2_node(b, L, &k33);
    if (!id && k33 && witness) *witness = three_join(2);
    return id;
  }
  const auto id = b.derive(L);
  if (b.knowledge(id).at(n).is_zero()) return id;
  if (d <= 0) {
    if (witness && L.num_vertices() == 3) *witness = three_join(1);
    return std::nullopt;
  }
  bool links_are_joins = true;
  for (const auto& v : L.vertices()) {
    auto lk = link(L, {v});
    if (lk.num_vertices() != static_cast<std::size_t>(3 * d) || !is_isomorphic(lk, special_complex("three-join", d))) {
      links_are_joins = false;
      break;
    }
  }
  if (links_are_joins && connected_nonempty(L)) {
    auto phi = three_join(n);
    if (!phi) throw std::logic_error("vertex links are 3^{*n-1} but the complex is not 3^{*n}");
    if (witness) *witness = phi;
    return std::nullopt;
  }
  struct Removal {
    VertexId vertex;
    SimplicialComplex before;
    std::size_t link_node;
  };
  std::vector<Removal> removals;
  auto current = L;
  while (!current.empty()) {
    bool progressed = false;
    for (const auto& w : current.vertices()) {
      auto lid = vanishing_node(b, link(current, {w}), n - 1);
      if (!lid) continue;
      removals.push_back({w, current, *lid});
      current = full_subcomplex(current, without(current.vertices(), {w}));
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
  auto cid = b.derive(current);
  for (auto it = removals.rbegin(); it != removals.rend(); ++it)
    cid = b.add("R-vertex-remove", it->before, {cid, it->link_node}, {{"vertex", it->vertex}, {"direction", "up"}});
  if (!b.knowledge(cid).at(n).is_zero()) return std::nullopt;
  return cid;
}

}  // namespace

MinimallyBranchingResult minimally_branching_decision(const SimplicialComplex& L, int characteristic) {
  check_minimally_branching(L);
  CertificateBuilder b(characteristic);
  MinimallyBranchingResult r;
  r.n = L.dimension() + 1;
  std::optional<VertexMap> witness;
  auto id = mb_node(b, L, &witness);
  if (id)
    r.certificate = b.finish(*id);
  else if (witness)
    r.three_join_witness = std::move(witness);
  else
    r.note = "no vertex with a vanishing link was found; the procedure is stuck";
  return r;
}

}  // namespace l2lab
