#include "l2lab/certificate.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "l2lab/catalog.hpp"
#include "l2lab/davis.hpp"
#include "l2lab/decisions.hpp"
#include "l2lab/error.hpp"
#include "l2lab/io.hpp"
#include "l2lab/isomorphism.hpp"
#include "l2lab/script.hpp"
#include "l2lab/subdivision.hpp"

namespace l2lab {

namespace {

using Premises = std::vector<const CertNode*>;

bool is_simplex(const SimplicialComplex& L) {
  const std::size_t n = L.num_vertices();
  if (n == 0 || n > 24) return false;
  return L.num_faces() == (std::size_t{1} << n) - 1;
}

std::vector<VertexId> without(const std::vector<VertexId>& vs, const std::vector<VertexId>& drop) {
  std::vector<VertexId> out;
  for (const auto& v : vs)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

SimplicialComplex two_points(const VertexId& a, const VertexId& b) {
  return SimplicialComplex::from_maximal({{a}, {b}});
}

std::string canonical_key(const SimplicialComplex& L) {
  std::string key;
  for (const auto& v : L.vertices()) key += v + ",";
  key += "|";
  for (const auto& s : L.faces()) {
    if (s.size() < 2) continue;
    for (const auto& v : s) key += v + ",";
    key += ";";
  }
  return key;
}

// Components of the complement of the 1-skeleton; two or more means L may be a join.
std::vector<std::vector<VertexId>> complement_components(const SimplicialComplex& L) {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (const auto& s : L.vertices()) {
    if (seen.count(s)) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> q;
    q.push(s);
    seen.insert(s);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      comp.push_back(x);
      for (const auto& y : L.vertices())
        if (y != x && !L.adjacent(x, y) && seen.insert(y).second) q.push(y);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::pair<VertexId, VertexId>> find_suspension(const SimplicialComplex& L) {
  const auto& V = L.vertices();
  std::vector<VertexId> poles;
  for (const auto& v : V)
    if (L.neighbors(v).size() + 2 == V.size()) poles.push_back(v);
  for (std::size_t i = 0; i < poles.size(); ++i)
    for (std::size_t j = i + 1; j < poles.size(); ++j) {
      if (L.adjacent(poles[i], poles[j])) continue;
      auto rest = full_subcomplex(L, without(V, {poles[i], poles[j]}));
      if (join(rest, two_points(poles[i], poles[j])) == L) return std::make_pair(poles[i], poles[j]);
    }
  return std::nullopt;
}

std::vector<Simplex> odd_simplices_with_empty(const SimplicialComplex& L) {
  std::vector<Simplex> out{Simplex{}};
  for (const auto& s : L.faces())
    if (s.size() % 2 == 0) out.push_back(s);
  return out;
}

// Paper schedule for b(M, K): odd barycenters by decreasing dimension, then
// even ones by increasing dimension.
std::vector<VertexId> removal_schedule(const SimplicialComplex& M, const SimplicialComplex& K) {
  std::vector<Simplex> odd, even;
  for (const auto& s : M.faces()) {
    if (K.contains(s)) continue;
    ((s.size() % 2 == 0) ? odd : even).push_back(s);
  }
  std::stable_sort(odd.begin(), odd.end(), [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<VertexId> out;
  for (const auto& s : odd) out.push_back(barycenter_label(s));
  for (const auto& s : even) out.push_back(barycenter_label(s));
  return out;
}

// (M, K) with L = b(M, K), read off barycenter labels.
std::optional<std::pair<SimplicialComplex, SimplicialComplex>> read_relative_barycentric(const SimplicialComplex& L) {
  bool any_barycenter = false;
  std::vector<Simplex> supports;
  for (const auto& v : L.vertices()) {
    if (!label_children(v).empty()) any_barycenter = true;
    supports.push_back(flatten_label(v));
  }
  if (!any_barycenter) return std::nullopt;
  auto M = SimplicialComplex::from_simplices(supports);
  std::set<VertexId> present(L.vertices().begin(), L.vertices().end());
  std::vector<Simplex> in_k;
  for (const auto& s : M.faces())
    if (s.size() >= 2 && !present.count(barycenter_label(s))) in_k.push_back(s);
  auto K = SimplicialComplex::from_simplices(in_k);
  try {
    if (relative_barycentric(M, K) != L) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::make_pair(std::move(M), std::move(K));
}

DegreeFact fact_from_json(const json& j) {
  const auto status = j.at("status").get<std::string>();
  if (status == "zero") return DegreeFact::zero();
  if (status == "unknown") return DegreeFact::unknown();
  mpq_class q(j.at("value").get<std::string>());
  q.canonicalize();
  if (q < 0) fail(ErrorCode::MalformedInput, "negative Betti value");
  if (status == "exact") return DegreeFact::exact(q);
  if (status == "upper") return DegreeFact::upper(q);
  fail(ErrorCode::MalformedInput, "unknown status '" + status + "'");
}

json fact_to_json(const DegreeFact& f) {
  json j = {{"status", status_name(f.status)}};
  if (f.status == Status::Exact || f.status == Status::Upper) j["value"] = f.value.get_str();
  return j;
}

Simplex simplex_from_json(const json& j) { return make_simplex(j.get<std::vector<VertexId>>()); }

struct RuleError {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw RuleError{what};
}

void arity(const Premises& p, std::size_t n) {
  require(p.size() == n, "expected " + std::to_string(n) + " premise(s), got " + std::to_string(p.size()));
}

BettiKnowledge evaluate(const std::string& rule, const SimplicialComplex& L, int ch, const Premises& P,
                        const json& side) {
  const int dim = L.dimension();
  BettiKnowledge out = unknown_knowledge(dim, ch);
  const auto degrees = static_cast<int>(out.degrees.size());
  auto set = [&](int i, const DegreeFact& f) { out.degrees[static_cast<std::size_t>(i)] = f; };

  if (rule == "R-simplex") {
    arity(P, 0);
    require(L.empty() || is_simplex(L), "complex is not a simplex");
    mpq_class b0(1);
    b0 /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(L.num_vertices()));
    for (int i = 0; i < degrees; ++i) set(i, i == 0 ? DegreeFact::exact(b0) : DegreeFact::zero());
    return out;
  }
  if (rule == "R-b0-infinite") {
    arity(P, 0);
    require(!L.empty() && !is_simplex(L), "W_L is finite");
    set(0, DegreeFact::zero());
    return out;
  }
  if (rule == "R-none") {
    arity(P, 0);
    return out;
  }
  if (rule == "R-suspension") {
    arity(P, 0);
    const auto n = side.at("north").get<VertexId>();
    const auto s = side.at("south").get<VertexId>();
    require(n != s && L.has_vertex(n) && L.has_vertex(s) && !L.adjacent(n, s), "poles must be distinct non-adjacent vertices");
    auto rest = full_subcomplex(L, without(L.vertices(), {n, s}));
    require(join(rest, two_points(n, s)) == L, "complex is not the suspension of the rest");
    for (int i = 0; i < degrees; ++i) set(i, DegreeFact::zero());
    return out;
  }
  if (rule == "R-cone") {
    arity(P, 1);
    const auto apex = side.at("apex").get<VertexId>();
    const auto& K = P[0]->complex;
    require(!K.has_vertex(apex), "apex already in the base");
    require(cone(K, apex) == L, "complex is not the cone on the premise");
    for (int i = 0; i < degrees; ++i) set(i, scale(P[0]->conclusion.at(i), mpq_class(1, 2)));
    return out;
  }
  if (rule == "R-join") {
    arity(P, 2);
    const auto& A = P[0]->complex;
    const auto& B = P[1]->complex;
    for (const auto& v : A.vertices()) require(!B.has_vertex(v), "join factors share vertex " + v);
    require(join(A, B) == L, "complex is not the join of the premises");
    return convolve(P[0]->conclusion, P[1]->conclusion, dim);
  }
  if (rule == "R-vertex-remove") {
    arity(P, 2);
    const auto v = side.at("vertex").get<VertexId>();
    const auto dir = side.at("direction").get<std::string>();
    const auto& lk = P[1]->conclusion;
    if (dir == "up") {
      require(L.is_flag(), "complex is not flag");
      require(L.has_vertex(v), "vertex not in complex");
      require(P[0]->complex == full_subcomplex(L, without(L.vertices(), {v})), "first premise is not L - v");
      require(P[1]->complex == link(L, {v}), "second premise is not Lk v");
      for (int i = 0; i < degrees; ++i)
        if (lk.at(i).is_zero() && lk.at(i - 1).is_zero()) set(i, P[0]->conclusion.at(i));
      return out;
    }
    require(dir == "down", "direction must be 'up' or 'down'");
    const auto& M = P[0]->complex;
    require(M.is_flag(), "premise complex is not flag");
    require(M.has_vertex(v), "vertex not in premise complex");
    require(L == full_subcomplex(M, without(M.vertices(), {v})), "complex is not premise - v");
    require(P[1]->complex == link(M, {v}), "second premise is not Lk v");
    for (int i = 0; i < degrees; ++i) {
      if (!lk.at(i).is_zero()) continue;
      const auto f = P[0]->conclusion.at(i);
      set(i, lk.at(i - 1).is_zero() ? f : as_upper_bound(f));
    }
    return out;
  }
  if (rule == "R-edge-remove") {
    arity(P, 2);
    const auto e = simplex_from_json(side.at("edge"));
    const auto& M = P[0]->complex;
    require(e.size() == 2 && M.contains(e), "side edge is not an edge of the premise");
    require(M.is_flag(), "premise complex is not flag");
    require(L == remove_simplices(M, {e}), "complex is not premise - e");
    require(P[1]->complex == link(M, e), "second premise is not Lk e");
    const auto& lk = P[1]->conclusion;
    for (int i = 0; i < degrees; ++i)
      if (lk.at(i - 1).is_zero()) set(i, as_upper_bound(P[0]->conclusion.at(i)));
    return out;
  }
  if (rule == "R-sub-equiv") {
    arity(P, 1);
    const auto M = complex_from_json(side.at("original"));
    const auto e = simplex_from_json(side.at("edge"));
    require(M.is_flag(), "original complex is not flag");
    require(e.size() == 2 && M.contains(e), "side edge is not an edge of the original");
    const auto S = sub_edge(M, e);
    const auto R = remove_simplices(M, {e});
    require((L == S && P[0]->complex == R) || (L == R && P[0]->complex == S),
            "complexes are not Sub_e(L) and L - e");
    for (int i = 0; i < degrees; ++i) set(i, P[0]->conclusion.at(i));
    return out;
  }
  if (rule == "R-iterated") {
    SubdivisionScript script;
    script.source = complex_from_json(side.at("source"));
    for (const auto& st : side.at("steps")) script.steps.push_back({st.at(0).get<VertexId>(), st.at(1).get<VertexId>()});
    require(script.source.is_flag(), "source is not flag");
    require(apply_script(script) == L, "script does not replay to the complex");
    const auto variant = side.at("variant").get<std::string>();
    const int n = side.value("n", 0);
    require(variant == "acyclic" || variant == "concentration" || variant == "greater", "unknown variant");
    const auto odd = odd_simplices_with_empty(script.source);
    std::vector<Simplex> listed;
    for (const auto& s : side.at("odd_simplices")) listed.push_back(simplex_from_json(s));
    require(listed == odd, "odd simplices listed incorrectly");
    arity(P, odd.size());
    for (std::size_t t = 0; t < odd.size(); ++t) {
      require(P[t]->complex == link(script.source, odd[t]), "premise " + std::to_string(t) + " is not Lk " + to_string(odd[t]));
      const int k = static_cast<int>(odd[t].size()) / 2;
      const auto& kn = P[t]->conclusion;
      for (int i = 0; i < static_cast<int>(kn.degrees.size()); ++i) {
        const bool needed = variant == "acyclic" || (variant == "concentration" && i != n - k) ||
                            (variant == "greater" && i > n - k);
        require(!needed || kn.at(i).is_zero(),
                "Lk " + to_string(odd[t]) + " lacks b_" + std::to_string(i) + " = 0");
      }
    }
    for (int i = 0; i < degrees; ++i) {
      const bool zero = variant == "acyclic" || (variant == "concentration" && i != n) ||
                        (variant == "greater" && i > n);
      if (zero) set(i, DegreeFact::zero());
    }
    return out;
  }
  if (rule == "R-relative-barycentric") {
    arity(P, 1);
    const auto M = complex_from_json(side.at("ambient"));
    const auto K = complex_from_json(side.at("sub"));
    const int n = side.at("n").get<int>();
    require(is_subcomplex(K, M), "sub is not a subcomplex of ambient");
    require(K.is_flag(), "sub is not flag");
    require(M.dimension() <= 2 * n - 1, "ambient dimension exceeds 2n - 1");
    require(relative_barycentric(M, K) == L, "complex is not b(ambient, sub)");
    require(P[0]->complex == K, "premise is not the subcomplex");
    require(side.at("schedule").get<std::vector<VertexId>>() == removal_schedule(M, K), "removal schedule differs");
    for (int i = n + 1; i < degrees; ++i) set(i, P[0]->conclusion.at(i));
    return out;
  }
  if (rule == "R-duality") {
    arity(P, 1);
    require(P[0]->complex == L, "premise is about another complex");
    require(L.is_flag(), "complex is not flag");
    const int d = side.at("sphere_dimension").get<int>();
    const auto& prov = side.at("provenance");
    const auto kind = prov.at("kind").get<std::string>();
    if (kind == "catalog") {
      const auto name = prov.at("name").get<std::string>();
      const int param = prov.value("param", -1);
      require(special_complex(name, param) == L, "complex is not catalog " + name);
      require(catalog_sphere_dimension(name, param) == d, "catalog sphere dimension differs");
    } else {
      require(kind == "assumed", "unknown provenance");
    }
    require(d == dim, "sphere dimension must equal dim L");
    const int N = d + 1;
    for (int i = 0; i < degrees; ++i) {
      auto m = meet(P[0]->conclusion.at(i), P[0]->conclusion.at(N - i));
      require(m.has_value(), "duality contradicts premise in degree " + std::to_string(i));
      set(i, *m);
    }
    return out;
  }
  if (rule == "R-euler") {
    arity(P, 1);
    require(P[0]->complex == L, "premise is about another complex");
    const auto open = P[0]->conclusion.undetermined();
    require(open.size() == 1, "Euler pinning needs exactly one undetermined degree, found " + std::to_string(open.size()));
    const int j = open[0];
    require(side.at("degree").get<int>() == j, "side degree differs from the undetermined one");
    mpq_class rest = 0;
    for (int i = 0; i < degrees; ++i) {
      if (i == j) continue;
      if (i % 2 == 0) rest += P[0]->conclusion.at(i).value; else rest -= P[0]->conclusion.at(i).value;
    }
    mpq_class value = euler_l2(L) - rest;
    if (j % 2 == 1) value = -value;
    require(value >= 0, "pinned value " + value.get_str() + " is negative");
    const auto prior = P[0]->conclusion.at(j);
    require(!prior.bounded() || value <= prior.value, "pinned value exceeds the premise bound");
    out = P[0]->conclusion;
    set(j, DegreeFact::exact(value));
    return out;
  }
  if (rule == "R-mv-split") {
    arity(P, 3);
    const auto& L1 = P[0]->complex;
    const auto& L2 = P[1]->complex;
    const auto& A = P[2]->complex;
    require(L.is_flag(), "complex is not flag");
    require(full_subcomplex(L, L1.vertices()) == L1 && full_subcomplex(L, L2.vertices()) == L2,
            "pieces are not full subcomplexes");
    std::vector<VertexId> common;
    std::set_intersection(L1.vertices().begin(), L1.vertices().end(), L2.vertices().begin(), L2.vertices().end(),
                          std::back_inserter(common));
    require(A == full_subcomplex(L, common), "third premise is not the intersection");
    for (const auto& s : L.faces()) require(L1.contains(s) || L2.contains(s), "simplex " + to_string(s) + " in neither piece");
    const auto& a = P[2]->conclusion;
    for (int i = 0; i < degrees; ++i) {
      const auto sum = add(P[0]->conclusion.at(i), P[1]->conclusion.at(i));
      if (a.at(i).is_zero() && a.at(i - 1).is_zero())
        set(i, sum);
      else
        set(i, as_upper_bound(add(sum, a.at(i - 1))));
    }
    return out;
  }
  if (rule == "R-iso") {
    arity(P, 1);
    VertexMap phi;
    for (const auto& [k, v] : side.at("map").items()) phi[k] = v.get<VertexId>();
    require(is_isomorphism(P[0]->complex, L, phi), "map is not an isomorphism onto the complex");
    for (int i = 0; i < degrees; ++i) set(i, P[0]->conclusion.at(i));
    return out;
  }
  if (rule == "R-combine") {
    require(!P.empty(), "combine needs premises");
    for (const auto* p : P) {
      require(p->complex == L, "premise is about another complex");
      for (int i = 0; i < degrees; ++i) {
        auto m = meet(out.at(i), p->conclusion.at(i));
        require(m.has_value(), "premises conflict in degree " + std::to_string(i));
        set(i, *m);
      }
    }
    return out;
  }
  throw RuleError{"unknown rule '" + rule + "'"};
}

}  // namespace

std::size_t Certificate::count_rule(const std::string& rule) const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [&](const CertNode& n) { return n.rule == rule; }));
}

std::vector<std::string> rule_names() {
  return {"R-simplex", "R-b0-infinite", "R-suspension", "R-cone",       "R-join",
          "R-vertex-remove", "R-edge-remove", "R-sub-equiv", "R-iterated", "R-relative-barycentric",
          "R-duality", "R-euler",       "R-mv-split",   "R-iso",        "R-combine",
          "R-none"};
}

std::optional<SphereTag> catalog_sphere_tag(const SimplicialComplex& L) {
  const std::size_t n = L.num_vertices();
  std::vector<std::pair<std::string, int>> candidates = {{"S0", -1}, {"hexagon", -1}};
  if (n >= 3) candidates.push_back({"polygon", static_cast<int>(n)});
  if (n >= 2) candidates.push_back({"boundary-simplex", static_cast<int>(n) - 1});
  if (n % 2 == 0 && n >= 2) candidates.push_back({"octahedron", static_cast<int>(n / 2)});
  for (int k = 1; k < 20; ++k)
    if ((std::size_t{1} << (k + 1)) - 2 == n) candidates.push_back({"bary-boundary-simplex", k});
  for (const auto& [name, param] : candidates) {
    if (catalog_sphere_dimension(name, param) != L.dimension()) continue;
    try {
      if (special_complex(name, param) != L) continue;
    } catch (const Error&) {
      continue;
    }
    json prov = {{"kind", "catalog"}, {"name", name}};
    if (param >= 0) prov["param"] = param;
    return SphereTag{*catalog_sphere_dimension(name, param), prov};
  }
  return std::nullopt;
}

RuleOutcome evaluate_rule(const std::string& rule, const SimplicialComplex& complex, int characteristic,
                          const Premises& premises, const json& side) {
  RuleOutcome out;
  try {
    for (const auto* p : premises)
      if (p->conclusion.characteristic != characteristic) throw RuleError{"premise has another characteristic"};
    auto k = evaluate(rule, complex, characteristic, premises, side);
    if (auto s = alternating_sum(k); s && *s != euler_l2(complex))
      throw RuleError{"determined values violate the Euler identity"};
    out.knowledge = std::move(k);
  } catch (const RuleError& e) {
    out.error = e.what;
  } catch (const Error& e) {
    out.error = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const json::exception& e) {
    out.error = std::string("malformed side record: ") + e.what();
  }
  return out;
}

VerificationReport verify(const Certificate& cert) {
  VerificationReport r;
  auto bad = [&](const CertNode& n, std::string why) {
    r.ok = false;
    r.failures.push_back({n.id, n.rule, std::move(why)});
  };
  if (cert.nodes.empty() || cert.root >= cert.nodes.size()) {
    r.ok = false;
    r.failures.push_back({0, "", "certificate has no root"});
    return r;
  }
  const int ch = cert.root_node().conclusion.characteristic;
  for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
    const auto& n = cert.nodes[i];
    ++r.nodes_checked;
    if (n.id != i) {
      bad(n, "node id out of sequence");
      continue;
    }
    if (n.conclusion.characteristic != ch) {
      bad(n, "characteristic differs from the root");
      continue;
    }
    if (n.conclusion.degrees.size() != static_cast<std::size_t>(n.complex.dimension() + 2)) {
      bad(n, "conclusion must list degrees 0..dim+1");
      continue;
    }
    Premises prem;
    bool ok = true;
    for (auto p : n.premises) {
      if (p >= i) {
        bad(n, "premise " + std::to_string(p) + " does not precede the node");
        ok = false;
        break;
      }
      prem.push_back(&cert.nodes[p]);
    }
    if (!ok) continue;
    auto outcome = evaluate_rule(n.rule, n.complex, ch, prem, n.side);
    if (!outcome.knowledge) {
      bad(n, outcome.error);
      continue;
    }
    for (std::size_t d = 0; d < n.conclusion.degrees.size(); ++d)
      if (!entails(outcome.knowledge->degrees[d], n.conclusion.degrees[d])) {
        bad(n, "degree " + std::to_string(d) + " claims " + to_string(n.conclusion.degrees[d]) + " but the rule gives " +
                   to_string(outcome.knowledge->degrees[d]));
        break;
      }
    if (n.rule == "R-duality" && n.side.contains("provenance") && n.side["provenance"].value("kind", "") == "assumed")
      r.assumptions.push_back("node " + std::to_string(n.id) + ": complex assumed to triangulate S^" +
                              std::to_string(n.side.value("sphere_dimension", -1)));
  }
  return r;
}

CertificateBuilder::CertificateBuilder(int characteristic, DeriveOptions opts)
    : characteristic_(characteristic), opts_(std::move(opts)) {}

std::size_t CertificateBuilder::add(const std::string& rule, const SimplicialComplex& L,
                                    std::vector<std::size_t> premises, json side) {
  Premises prem;
  for (auto p : premises) prem.push_back(&nodes_.at(p));
  auto outcome = evaluate_rule(rule, L, characteristic_, prem, side);
  if (!outcome.knowledge) throw std::logic_error("rule " + rule + " does not apply: " + outcome.error);
  CertNode n;
  n.id = nodes_.size();
  n.rule = rule;
  n.complex = L;
  n.conclusion = std::move(*outcome.knowledge);
  n.premises = std::move(premises);
  n.side = std::move(side);
  nodes_.push_back(std::move(n));
  return nodes_.back().id;
}

std::size_t CertificateBuilder::derive(const SimplicialComplex& L) {
  const auto key = canonical_key(L);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const auto id = derive_uncached(L);
  memo_[key] = id;
  return id;
}

std::optional<std::size_t> CertificateBuilder::try_octahedron(const SimplicialComplex& L) {
  auto mk = read_relative_barycentric(L);
  if (!mk) return std::nullopt;
  const auto& [M, K] = *mk;
  const int n = static_cast<int>(M.num_vertices()) - 1;
  if (n < 2 || !K.is_flag() || simplex_boundary(M.vertices()) != M) return std::nullopt;
  for (int i = 0; i <= n; ++i)
    if (M.vertices()[static_cast<std::size_t>(i)] != std::to_string(i)) return std::nullopt;
  if (n > 9) return std::nullopt;  // labels "0".."n" sort numerically only below 10
  SubdivisionScript script;
  try {
    script = script_octahedron(n, K);
  } catch (const Error&) {
    return std::nullopt;
  }
  const auto target = apply_script(script);
  const auto odd = odd_simplices_with_empty(script.source);
  const std::string variant = (n % 2 == 1) ? "acyclic" : "concentration";
  const int conc = n / 2;
  std::vector<std::size_t> premises;
  json listed = json::array();
  for (const auto& s : odd) {
    const auto id = derive(link(script.source, s));
    const int k = static_cast<int>(s.size()) / 2;
    const auto& kn = knowledge(id);
    for (int i = 0; i < static_cast<int>(kn.degrees.size()); ++i) {
      const bool needed = variant == "acyclic" || i != conc - k;
      if (needed && !kn.at(i).is_zero()) return std::nullopt;
    }
    premises.push_back(id);
    listed.push_back(s);
  }
  json steps = json::array();
  for (const auto& st : script.steps) steps.push_back({st.u, st.v});
  json side = {{"source", complex_to_json(script.source)}, {"steps", std::move(steps)}, {"variant", variant},
               {"n", conc}, {"odd_simplices", std::move(listed)}};
  auto it = add("R-iterated", target, std::move(premises), std::move(side));
  if (target == L) return it;
  json map = json::object();
  for (const auto& v : target.vertices()) map[v] = barycenter_label(flatten_label(v));
  return add("R-iso", L, {it}, {{"map", std::move(map)}});
}

std::optional<std::size_t> CertificateBuilder::try_relative_barycentric(const SimplicialComplex& L) {
  auto mk = read_relative_barycentric(L);
  if (!mk) return std::nullopt;
  const auto& [M, K] = *mk;
  if (!K.is_flag()) return std::nullopt;
  const int n = std::max(1, (M.dimension() + 2) / 2);
  const auto kid = derive(K);
  json side = {{"ambient", complex_to_json(M)}, {"sub", complex_to_json(K)}, {"n", n},
               {"schedule", removal_schedule(M, K)}};
  return add("R-relative-barycentric", L, {kid}, std::move(side));
}

std::size_t CertificateBuilder::derive_uncached(const SimplicialComplex& L) {
  if (nodes_.size() > opts_.max_nodes) {
    frontier_.push_back(L);
    return add("R-none", L, {}, {{"reason", "node budget exhausted"}});
  }
  if (!L.is_flag()) {
    frontier_.push_back(L);
    return add("R-none", L, {}, {{"reason", "complex is not flag"}});
  }
  if (L.empty() || is_simplex(L)) return add("R-simplex", L, {});
  if (auto ns = find_suspension(L)) return add("R-suspension", L, {}, {{"north", ns->first}, {"south", ns->second}});

  std::vector<std::size_t> partial;
  BettiKnowledge current = unknown_knowledge(L.dimension(), characteristic_);
  auto absorb = [&](std::size_t id) {
    partial.push_back(id);
    for (std::size_t i = 0; i < current.degrees.size(); ++i)
      if (auto m = meet(current.degrees[i], knowledge(id).at(static_cast<int>(i)))) current.degrees[i] = *m;
  };
  auto done = [&] { return current.fully_determined(); };

  const auto comps = complement_components(L);
  if (comps.size() >= 2) {
    std::vector<VertexId> rest;
    for (std::size_t c = 1; c < comps.size(); ++c) rest.insert(rest.end(), comps[c].begin(), comps[c].end());
    std::sort(rest.begin(), rest.end());
    auto A = full_subcomplex(L, comps[0]);
    auto B = full_subcomplex(L, rest);
    if (join(A, B) == L) {
      if (comps[0].size() == 1)
        absorb(add("R-cone", L, {derive(B)}, {{"apex", comps[0][0]}}));
      else if (rest.size() == 1)
        absorb(add("R-cone", L, {derive(A)}, {{"apex", rest[0]}}));
      else
        absorb(add("R-join", L, {derive(A), derive(B)}));
    }
  }
  if (!done())
    if (auto id = try_octahedron(L)) absorb(*id);
  bool equality_used = false;
  if (!done())
    for (const auto& v : L.vertices()) {
      const auto lid = derive(link(L, {v}));
      if (!knowledge(lid).all_zero()) continue;
      const auto rid = derive(full_subcomplex(L, without(L.vertices(), {v})));
      absorb(add("R-vertex-remove", L, {rid, lid}, {{"vertex", v}, {"direction", "up"}}));
      equality_used = true;
      break;
    }
  if (!done() && !equality_used)
    for (const auto& v : L.vertices()) {
      const auto lid = derive(link(L, {v}));
      const auto& lk = knowledge(lid);
      bool useful = false;
      for (int i : current.undetermined())
        if (lk.at(i).is_zero() && lk.at(i - 1).is_zero()) useful = true;
      if (!useful) continue;
      const auto rid = derive(full_subcomplex(L, without(L.vertices(), {v})));
      const auto id = add("R-vertex-remove", L, {rid, lid}, {{"vertex", v}, {"direction", "up"}});
      bool improves = false;
      for (int i : current.undetermined())
        if (knowledge(id).at(i).determined() || (knowledge(id).at(i).bounded() && !current.at(i).bounded()))
          improves = true;
      if (improves) absorb(id);
      if (done()) break;
    }
  if (!done())
    if (auto id = try_relative_barycentric(L)) absorb(*id);
  if (!done() && L.dimension() == 1 && !current.at(2).is_zero()) {
    bool subcubic = true;
    for (const auto& v : L.vertices()) subcubic = subcubic && L.neighbors(v).size() <= 3;
    if (subcubic)
      if (auto id = graph_b2_node(*this, L)) absorb(*id);
  }
  if (!done()) {
    const auto cc = connected_components(L);
    if (cc.size() >= 2) {
      std::vector<VertexId> rest;
      for (std::size_t c = 1; c < cc.size(); ++c) rest.insert(rest.end(), cc[c].begin(), cc[c].end());
      absorb(add("R-mv-split", L,
                 {derive(full_subcomplex(L, cc[0])), derive(full_subcomplex(L, rest)), derive(SimplicialComplex{})}));
    }
  }
  if (!current.at(0).determined()) absorb(add("R-b0-infinite", L, {}));

  std::size_t id = partial.size() == 1 ? partial[0] : add("R-combine", L, partial);
  std::optional<SphereTag> tag;
  if (opts_.assumed_sphere && input_ && *input_ == L) tag = opts_.assumed_sphere;
  if (!tag) tag = catalog_sphere_tag(L);
  if (tag && tag->dimension == L.dimension() && !knowledge(id).fully_determined()) {
    auto did = add("R-duality", L, {id}, {{"sphere_dimension", tag->dimension}, {"provenance", tag->provenance}});
    if (knowledge(did).undetermined().size() < knowledge(id).undetermined().size()) id = did;
  }
  if (const auto open = knowledge(id).undetermined(); open.size() == 1)
    id = add("R-euler", L, {id}, {{"degree", open[0]}});
  if (!knowledge(id).fully_determined()) frontier_.push_back(L);
  return id;
}

Certificate CertificateBuilder::finish(std::size_t root) const {
  std::set<std::size_t> keep;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (!keep.insert(x).second) continue;
    for (auto p : nodes_.at(x).premises) stack.push_back(p);
  }
  std::map<std::size_t, std::size_t> renumber;
  Certificate c;
  for (auto x : keep) {
    renumber[x] = c.nodes.size();
    CertNode n = nodes_[x];
    n.id = c.nodes.size();
    for (auto& p : n.premises) p = renumber.at(p);
    c.nodes.push_back(std::move(n));
  }
  c.root = renumber.at(root);
  return c;
}

DeriveResult derive(const SimplicialComplex& L, int characteristic, const std::set<int>& goal,
                    const DeriveOptions& opts) {
  CertificateBuilder b(characteristic, opts);
  b.set_input(L);
  const auto root = b.derive(L);
  DeriveResult r;
  r.certificate = b.finish(root);
  const auto& k = r.certificate.conclusion();
  r.complete = true;
  for (int i = 0; i < static_cast<int>(k.degrees.size()); ++i)
    if ((goal.empty() || goal.count(i)) && !k.at(i).determined()) r.complete = false;
  r.frontier = b.frontier();
  return r;
}

json knowledge_to_json(const BettiKnowledge& k) {
  json out = json::array();
  for (const auto& d : k.degrees) out.push_back(fact_to_json(d));
  return out;
}

BettiKnowledge knowledge_from_json(const json& j, int characteristic) {
  BettiKnowledge k;
  k.characteristic = characteristic;
  for (const auto& f : j) k.degrees.push_back(fact_from_json(f));
  return k;
}

json certificate_to_json(const Certificate& c) {
  json nodes = json::array();
  for (const auto& n : c.nodes)
    nodes.push_back({{"id", n.id}, {"rule", n.rule}, {"complex", complex_to_json(n.complex)},
                     {"char", n.conclusion.characteristic}, {"conclusion", knowledge_to_json(n.conclusion)},
                     {"premises", n.premises}, {"side", n.side}});
  return {{"root", c.root}, {"nodes", std::move(nodes)}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  try {
    c.root = j.at("root").get<std::size_t>();
    for (const auto& n : j.at("nodes")) {
      CertNode node;
      node.id = n.at("id").get<std::size_t>();
      node.rule = n.at("rule").get<std::string>();
      node.complex = complex_from_json(n.at("complex"));
      node.conclusion = knowledge_from_json(n.at("conclusion"), n.at("char").get<int>());
      node.premises = n.at("premises").get<std::vector<std::size_t>>();
      node.side = n.value("side", json::object());
      c.nodes.push_back(std::move(node));
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedInput, std::string("malformed certificate: ") + e.what());
  }
  if (c.root >= c.nodes.size()) fail(ErrorCode::MalformedInput, "certificate root out of range");
  return c;
}

json verification_to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"node", f.id}, {"rule", f.rule}, {"reason", f.reason}});
  return {{"ok", r.ok}, {"nodes_checked", r.nodes_checked}, {"failures", std::move(failures)},
          {"assumptions", r.assumptions}};
}

}  // namespace l2lab
