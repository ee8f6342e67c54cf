#include "l2lab/subdivision.hpp"

#include <algorithm>
#include <functional>

#include "l2lab/error.hpp"
#include "l2lab/isomorphism.hpp"

namespace l2lab {

namespace {

void check_edge(const SimplicialComplex& L, const Simplex& e) {
  if (e.size() != 2) fail(ErrorCode::NotAnEdge, to_string(e) + " is not an edge");
  if (!L.contains(e)) fail(ErrorCode::SimplexNotPresent, "edge " + to_string(e) + " not in complex");
}

Simplex with(const Simplex& s, const VertexId& v) { return make_simplex(simplex_union(s, Simplex{v})); }

std::vector<Simplex> all_subsets(const Simplex& s, bool include_empty, bool include_full) {
  std::vector<Simplex> out;
  const std::size_t n = s.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!include_empty && mask == 0) continue;
    if (!include_full && mask == (1u << n) - 1) continue;
    Simplex sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

SimplicialComplex simplex_boundary(const Simplex& sigma) {
  SimplexSet faces;
  for (auto& f : all_subsets(sigma, false, false)) faces.insert(std::move(f));
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

SimplicialComplex full_simplex(const Simplex& sigma) {
  SimplexSet faces;
  for (auto& f : all_subsets(sigma, false, true)) faces.insert(std::move(f));
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

SimplicialComplex sub_edge(const SimplicialComplex& L, const Simplex& e) {
  check_edge(L, e);
  const VertexId m = midpoint_label(e[0], e[1]);
  if (L.has_vertex(m)) fail(ErrorCode::MalformedInput, "midpoint label '" + m + "' already used");
  SimplexSet out;
  for (const auto& s : L.faces())
    if (!is_face_of(e, s)) out.insert(s);
  std::vector<Simplex> lk{Simplex{}};
  const SimplicialComplex lk_e = link(L, e);
  for (const auto& s : lk_e.faces()) lk.push_back(s);
  for (const auto& t : lk) {
    out.insert(with(t, m));
    out.insert(with(with(t, m), e[0]));
    out.insert(with(with(t, m), e[1]));
  }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

SimplicialComplex link_in_subdivision(const SimplicialComplex& L, const Simplex& e, const Simplex& sigma) {
  check_edge(L, e);
  const VertexId& x = e[0];
  const VertexId& y = e[1];
  const VertexId m = midpoint_label(x, y);
  const bool has_m = std::binary_search(sigma.begin(), sigma.end(), m);
  const bool has_x = std::binary_search(sigma.begin(), sigma.end(), x);
  const bool has_y = std::binary_search(sigma.begin(), sigma.end(), y);
  auto missing = [&]() -> SimplicialComplex {
    fail(ErrorCode::SimplexNotPresent, "simplex " + to_string(sigma) + " not in the subdivision");
  };

  if (has_m) {
    if (has_x && has_y) missing();
    Simplex tau = simplex_difference(sigma, Simplex{m});
    if (has_x) tau = simplex_difference(tau, Simplex{x});
    if (has_y) tau = simplex_difference(tau, Simplex{y});
    Simplex etau = simplex_union(e, tau);
    if (!L.contains(etau)) missing();
    if (!has_x && !has_y) {
      // case 2: σ = v_e * τ
      return join(SimplicialComplex::from_maximal({{x}, {y}}), link(L, etau));
    }
    // case 3: σ = [v_e, x or y] * τ
    return link(L, etau);
  }

  if (!L.contains(sigma) || (has_x && has_y)) missing();
  if (!has_x && !has_y && L.contains(simplex_union(sigma, e))) {
    // case 1: σ ∈ Lk e, including σ = ∅
    return sub_edge(link(L, sigma), e);
  }
  // case 4: Lk σ, with the far endpoint of e renamed to the midpoint
  SimplicialComplex lk = link(L, sigma);
  if (has_x) return relabel(lk, {{y, m}});
  if (has_y) return relabel(lk, {{x, m}});
  return lk;
}

SimplicialComplex relative_barycentric(const SimplicialComplex& L, const SimplicialComplex& K) {
  if (!is_subcomplex(K, L)) fail(ErrorCode::NotASubcomplex, "K is not a subcomplex of L");
  // Cofaces within L \ K (upward closed because K is a subcomplex).
  std::map<Simplex, std::vector<Simplex>> cofaces;
  std::map<Simplex, VertexId> name;
  for (const auto& s : L.faces()) {
    if (K.contains(s)) continue;
    name[s] = barycenter_label(s);
    cofaces[s];
    for (auto& f : all_subsets(s, false, false))
      if (!K.contains(f)) cofaces[f].push_back(s);
  }
  std::set<VertexId> labels(K.vertices().begin(), K.vertices().end());
  for (const auto& [s, n] : name)
    if (!labels.insert(n).second)
      fail(ErrorCode::MalformedInput, "barycenter label '" + n + "' collides with an existing vertex");

  SimplexSet out;
  for (const auto& k : K.faces()) out.insert(k);
  std::vector<VertexId> chain;
  std::function<void(const Simplex&, const std::vector<Simplex>&)> extend =
      [&](const Simplex& top, const std::vector<Simplex>& lower_k) {
        for (const auto& k : lower_k) {
          Simplex s = simplex_union(k, make_simplex(chain));
          out.insert(make_simplex(std::move(s)));
        }
        for (const auto& c : cofaces.at(top)) {
          chain.push_back(name.at(c));
          extend(c, lower_k);
          chain.pop_back();
        }
      };
  for (const auto& [s, n] : name) {
    std::vector<Simplex> lower_k{Simplex{}};
    for (auto& f : all_subsets(s, false, false))
      if (K.contains(f)) lower_k.push_back(std::move(f));
    chain.assign(1, n);
    extend(s, lower_k);
  }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

SimplicialComplex link_in_relative_barycentric(const SimplicialComplex& L, const SimplicialComplex& K,
                                               const VertexId& v) {
  if (!is_subcomplex(K, L)) fail(ErrorCode::NotASubcomplex, "K is not a subcomplex of L");
  if (K.has_vertex(v)) {
    SimplicialComplex lkL = link(L, Simplex{v});
    SimplicialComplex lkK = link(K, Simplex{v});
    VertexMap rename;
    for (const auto& r : lkL.faces())
      if (!lkK.contains(r)) rename[barycenter_label(r)] = barycenter_label(with(r, v));
    return relabel(relative_barycentric(lkL, lkK), rename);
  }
  for (const auto& s : L.faces()) {
    if (K.contains(s) || barycenter_label(s) != v) continue;
    SimplicialComplex bd = simplex_boundary(s);
    SimplexSet bdk;
    for (const auto& f : bd.faces())
      if (K.contains(f)) bdk.insert(f);
    SimplicialComplex lower = relative_barycentric(bd, SimplicialComplex::from_closed_faces(std::move(bdk)));
    SimplicialComplex lk = link(L, s);
    VertexMap rename;
    for (const auto& r : lk.faces()) rename[barycenter_label(r)] = barycenter_label(simplex_union(r, s));
    SimplicialComplex upper = relabel(relative_barycentric(lk, SimplicialComplex{}), rename);
    return join(lower, upper);
  }
  fail(ErrorCode::VertexNotPresent, "vertex '" + v + "' is not a vertex of b(L, K)");
}

}  // namespace l2lab
