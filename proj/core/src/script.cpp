#include "l2lab/script.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "l2lab/error.hpp"
#include "l2lab/isomorphism.hpp"
#include "l2lab/subdivision.hpp"

namespace l2lab {

namespace {

/// A step named by the original simplices its endpoints are barycenters of.
using FlatStep = std::pair<Simplex, Simplex>;
using Support = std::map<VertexId, Simplex>;

Support identity_support(const SimplicialComplex& L) {
  Support s;
  for (const auto& v : L.vertices()) s[v] = Simplex{v};
  return s;
}

/// Support map of b(L, K): barycenters of L \ K and vertices of K.
Support barycentric_support(const SimplicialComplex& L, const SimplicialComplex& K) {
  Support s;
  for (const auto& v : K.vertices()) s[v] = Simplex{v};
  for (const auto& f : L.faces())
    if (!K.contains(f)) s[barycenter_label(f)] = f;
  return s;
}

/// Replays flat steps, tracking which original simplex each vertex subdivides.
class Replayer {
 public:
  Replayer(SimplicialComplex source, Support support) : complex_(std::move(source)), support_(std::move(support)) {
    for (const auto& [label, supp] : support_) by_support_[supp] = label;
  }

  const SimplicialComplex& complex() const { return complex_; }
  const Support& support() const { return support_; }

  SubdivisionStep apply(const FlatStep& flat) {
    auto a = by_support_.find(flat.first);
    auto b = by_support_.find(flat.second);
    if (a == by_support_.end() || b == by_support_.end())
      throw std::logic_error("subdivision step names a vertex that does not exist yet");
    SubdivisionStep step{a->second, b->second};
    apply(step);
    return step;
  }

  void apply(const SubdivisionStep& step) {
    Simplex e = make_simplex({step.u, step.v});
    complex_ = sub_edge(complex_, e);
    Simplex supp = simplex_union(support_.at(step.u), support_.at(step.v));
    const VertexId m = step.new_vertex();
    support_[m] = supp;
    by_support_[supp] = m;
  }

  /// Least edge whose endpoint supports together span sigma.
  std::optional<FlatStep> interior_edge(const Simplex& sigma) const {
    for (const auto& e : complex_.faces_of_dimension(1)) {
      const Simplex& a = support_.at(e[0]);
      const Simplex& b = support_.at(e[1]);
      if (simplex_union(a, b) == sigma && a != sigma && b != sigma) return FlatStep{a, b};
    }
    return std::nullopt;
  }

 private:
  SimplicialComplex complex_;
  Support support_;
  std::map<Simplex, VertexId> by_support_;
};

std::vector<SubdivisionStep> resolve(const SimplicialComplex& source, const Support& support,
                                     const std::vector<FlatStep>& flat) {
  Replayer r(source, support);
  std::vector<SubdivisionStep> out;
  out.reserve(flat.size());
  for (const auto& f : flat) out.push_back(r.apply(f));
  return out;
}

void require_flag(const SimplicialComplex& K, const std::string& what) {
  if (!K.is_flag()) fail(ErrorCode::NotFlag, what + " is not flag");
}

/// Flat steps turning L into b(L, K): simplices of L \ K are added in order of
/// (dimension, labels); each new one splices in the subdivision of the first
/// edge through its interior, right after that edge appears.
std::vector<FlatStep> relative_flat_steps(const SimplicialComplex& L, const SimplicialComplex& K) {
  if (!is_subcomplex(K, L)) fail(ErrorCode::NotASubcomplex, "K is not a subcomplex of L");
  require_flag(K, "K");
  SimplexSet current = K.faces();
  for (const auto& v : L.vertices()) current.insert(Simplex{v});
  std::vector<FlatStep> flat;
  for (const auto& sigma : L.faces()) {
    if (sigma.size() < 2 || K.contains(sigma)) continue;
    current.insert(sigma);
    const auto M = SimplicialComplex::from_closed_faces(current);
    Replayer r(M, identity_support(M));
    std::size_t pos = 0;
    auto edge = r.interior_edge(sigma);
    while (!edge && pos < flat.size()) {
      r.apply(flat[pos++]);
      edge = r.interior_edge(sigma);
    }
    if (!edge) throw std::logic_error("no interior edge found for " + to_string(sigma));
    flat.insert(flat.begin() + static_cast<std::ptrdiff_t>(pos), *edge);
  }
  return flat;
}

/// Cone steps: apex to each barycenter of L \ K, decreasing dimension.
std::vector<FlatStep> cone_flat_steps(const SimplicialComplex& L, const SimplicialComplex& K, const VertexId& apex) {
  std::vector<Simplex> outside;
  for (const auto& f : L.faces())
    if (!K.contains(f)) outside.push_back(f);
  std::stable_sort(outside.begin(), outside.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<FlatStep> flat;
  for (const auto& s : outside) flat.emplace_back(Simplex{apex}, s);
  return flat;
}

bool is_cone_with_apex(const SimplicialComplex& X, const VertexId& apex) {
  if (!X.has_vertex(apex)) return false;
  for (const auto& m : X.maximal_simplices())
    if (!std::binary_search(m.begin(), m.end(), apex)) return false;
  return true;
}

std::vector<Simplex> proper_nonempty_faces(const Simplex& s) {
  std::vector<Simplex> out;
  const std::size_t n = s.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

bool target_matches(const SimplicialComplex& result, const SimplicialComplex& target, std::size_t max_vertices) {
  VertexMap guess;
  for (const auto& v : result.vertices()) guess[v] = barycenter_label(flatten_label(v));
  if (is_isomorphism(result, target, guess)) return true;
  return find_isomorphism(result, target, max_vertices).has_value();
}

struct OctahedronPiece {
  SimplicialComplex source;
  Support support;
  std::vector<FlatStep> flat;
};

OctahedronPiece octahedron_piece(const Simplex& V, const SimplicialComplex& J) {
  if (V.size() <= 2) {
    OctahedronPiece base;
    std::vector<std::vector<VertexId>> pts;
    for (const auto& v : V) pts.push_back({v});
    base.source = SimplicialComplex::from_maximal(pts);
    base.support = identity_support(base.source);
    return base;
  }
  std::optional<VertexId> apex;
  for (const auto& v : V) {
    bool inside = true;
    for (const auto& s : J.faces())
      if (simplex_union(s, Simplex{v}).size() == V.size()) {
        inside = false;
        break;
      }
    if (inside) {
      apex = v;
      break;
    }
  }
  if (!apex)
    fail(ErrorCode::KNotInStarOfVertex, "K restricted to " + to_string(V) + " lies in no vertex star");
  const Simplex tau = simplex_difference(V, Simplex{*apex});
  const SimplicialComplex bd = simplex_boundary(tau);
  SimplexSet kfaces;
  for (const auto& s : J.faces())
    if (is_face_of(s, tau)) kfaces.insert(s);
  const SimplicialComplex Kp = SimplicialComplex::from_closed_faces(std::move(kfaces));

  OctahedronPiece piece = octahedron_piece(tau, Kp);
  const VertexId far = barycenter_label(tau);
  piece.source = join(piece.source, SimplicialComplex::from_maximal({{*apex}, {far}}));
  piece.support[*apex] = Simplex{*apex};
  piece.support[far] = tau;
  for (auto& f : cone_flat_steps(bd, Kp, *apex)) piece.flat.push_back(std::move(f));
  for (auto& f : relative_flat_steps(cone(Kp, *apex), J)) piece.flat.push_back(std::move(f));
  return piece;
}

}  // namespace

SimplicialComplex apply_script(const SubdivisionScript& script) {
  SimplicialComplex X = script.source;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const auto& s = script.steps[i];
    Simplex e = make_simplex({s.u, s.v});
    if (e.size() != 2 || !X.contains(e))
      fail(ErrorCode::StepEdgeMissing, "step " + std::to_string(i) + ": edge " + to_string(e) + " missing");
    X = sub_edge(X, e);
  }
  return X;
}

ScriptReport verify_script(const SubdivisionScript& script, std::size_t max_iso_vertices) {
  ScriptReport report;
  Replayer r(script.source, identity_support(script.source));
  std::map<Simplex, std::size_t> created;
  std::vector<std::pair<Simplex, Simplex>> endpoints;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const auto& s = script.steps[i];
    Simplex e = make_simplex({s.u, s.v});
    if (e.size() != 2 || !r.complex().contains(e)) {
      report.failed_step = i;
      report.messages.push_back("step " + std::to_string(i) + ": edge " + to_string(e) + " missing");
      return report;
    }
    endpoints.emplace_back(r.support().at(s.u), r.support().at(s.v));
    r.apply(s);
    report.steps_applied = i + 1;
  }
  report.replay_ok = true;
  const SimplicialComplex& result = r.complex();

  if (script.claimed_target) {
    report.target_ok = target_matches(result, *script.claimed_target, max_iso_vertices);
    if (!*report.target_ok) report.messages.push_back("replay result is not isomorphic to the claimed target");
  }

  if (script.relative) {
    const auto& L = script.relative->ambient;
    const auto& K = script.relative->sub;
    bool ok_i = true;
    bool ok_ii = true;
    if (!(script.source == L) || !is_subcomplex(K, L)) {
      ok_i = ok_ii = false;
      report.messages.push_back("relative metadata does not match the script source");
    } else {
      for (std::size_t i = 0; i < endpoints.size(); ++i) {
        const auto& [a, b] = endpoints[i];
        Simplex sigma = simplex_union(a, b);
        if (!disjoint(a, b) || !L.contains(sigma) || K.contains(sigma) || created.count(sigma)) {
          ok_i = false;
          report.messages.push_back("condition (i) fails at step " + std::to_string(i) + " creating " +
                                    to_string(sigma));
          continue;
        }
        created[sigma] = i;
      }
      for (const auto& sigma : L.faces())
        if (sigma.size() >= 2 && !K.contains(sigma) && !created.count(sigma)) {
          ok_i = false;
          report.messages.push_back("condition (i): no step creates the barycenter of " + to_string(sigma));
        }
      constexpr long long never = std::numeric_limits<long long>::max();
      auto position = [&](const Simplex& s) -> long long {
        if (K.contains(s)) return never;
        if (s.size() == 1) return -1;
        auto it = created.find(s);
        return it == created.end() ? never : static_cast<long long>(it->second);
      };
      for (const auto& [sigma, at] : created) {
        auto faces = proper_nonempty_faces(sigma);
        for (std::size_t x = 0; x < faces.size() && ok_ii; ++x)
          for (std::size_t y = x + 1; y < faces.size(); ++y) {
            const auto& tau = faces[x];
            const auto& rho = faces[y];
            if (disjoint(tau, rho) || simplex_union(tau, rho) != sigma) continue;
            if (static_cast<long long>(at) > std::max(position(tau), position(rho))) {
              ok_ii = false;
              report.messages.push_back("condition (ii) fails for " + to_string(sigma) + " with faces " +
                                        to_string(tau) + ", " + to_string(rho));
              break;
            }
          }
      }
    }
    report.condition_i = ok_i;
    report.condition_ii = ok_ii;
  }
  return report;
}

SubdivisionScript script_relative(const SimplicialComplex& L, const SimplicialComplex& K) {
  auto flat = relative_flat_steps(L, K);
  SubdivisionScript s;
  s.source = L;
  s.steps = resolve(L, identity_support(L), flat);
  s.claimed_target = relative_barycentric(L, K);
  s.relative = RelativeMeta{L, K};
  return s;
}

SubdivisionScript script_cone(const SimplicialComplex& cL, const SimplicialComplex& cK, const VertexId& apex) {
  if (!is_cone_with_apex(cL, apex)) fail(ErrorCode::NotACone, "L is not a cone with apex '" + apex + "'");
  if (!is_cone_with_apex(cK, apex)) fail(ErrorCode::NotACone, "K is not a cone with apex '" + apex + "'");
  if (!is_subcomplex(cK, cL)) fail(ErrorCode::NotASubcomplex, "K is not a subcomplex of L");
  const SimplicialComplex L = link(cL, Simplex{apex});
  const SimplicialComplex K = link(cK, Simplex{apex});
  const SimplicialComplex B = relative_barycentric(L, K);
  if (B.has_vertex(apex)) fail(ErrorCode::MalformedInput, "apex label collides with a barycenter label");
  SubdivisionScript s;
  s.source = cone(B, apex);
  Support support = barycentric_support(L, K);
  support[apex] = Simplex{apex};
  s.steps = resolve(s.source, support, cone_flat_steps(L, K, apex));
  s.claimed_target = relative_barycentric(cL, cK);
  return s;
}

SubdivisionScript script_twosubs(const SimplicialComplex& L, const SimplicialComplex& K,
                                 const SimplicialComplex& J) {
  if (!is_subcomplex(K, L) || !is_subcomplex(J, K)) fail(ErrorCode::NotNested, "expected J ⊆ K ⊆ L");
  require_flag(J, "J");
  auto flat = relative_flat_steps(K, J);
  SubdivisionScript s;
  s.source = relative_barycentric(L, K);
  s.steps = resolve(s.source, barycentric_support(L, K), flat);
  s.claimed_target = relative_barycentric(L, J);
  return s;
}

SubdivisionScript script_octahedron(int n, const SimplicialComplex& K) {
  if (n < 1) fail(ErrorCode::MalformedInput, "octahedron script needs n >= 1");
  std::vector<VertexId> vs;
  for (int i = 0; i <= n; ++i) vs.push_back(std::to_string(i));
  const Simplex V = make_simplex(vs);
  const SimplicialComplex bd = simplex_boundary(V);
  if (!is_subcomplex(K, bd)) fail(ErrorCode::NotASubcomplex, "K is not a subcomplex of the boundary simplex");
  require_flag(K, "K");
  OctahedronPiece piece = octahedron_piece(V, K);
  SubdivisionScript s;
  s.source = piece.source;
  s.steps = resolve(piece.source, piece.support, piece.flat);
  s.claimed_target = relative_barycentric(bd, K);
  return s;
}

}  // namespace l2lab
