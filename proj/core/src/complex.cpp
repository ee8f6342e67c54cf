#include "l2lab/complex.hpp"

#include <algorithm>
#include <queue>

#include "l2lab/error.hpp"

namespace l2lab {

Simplex make_simplex(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool is_face_of(const Simplex& face, const Simplex& s) {
  return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex simplex_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const Simplex& a, const Simplex& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  return out + "}";
}

long long FVector::reduced_euler() const {
  long long sum = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    long long sign = (k % 2 == 0) ? -1 : 1;  // counts[0] is f_{-1}
    sum += sign * static_cast<long long>(counts[k]);
  }
  return sum;
}

namespace {

void add_closure(const Simplex& s, SimplexSet& faces) {
  if (s.empty() || faces.count(s)) return;
  const std::size_t n = s.size();
  if (n > 24) fail(ErrorCode::SizeLimitExceeded, "simplex of dimension > 23");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Simplex sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    faces.insert(std::move(sub));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<VertexId>>& maximal,
                                                  const std::vector<VertexId>& extra_vertices) {
  SimplexSet faces;
  std::set<Simplex> seen;
  for (const auto& raw : maximal) {
    if (raw.empty()) fail(ErrorCode::MalformedInput, "empty simplex in maximal simplex list");
    Simplex s = make_simplex(raw);
    if (s.size() != raw.size())
      fail(ErrorCode::MalformedInput, "duplicate vertex inside simplex " + to_string(s));
    for (const auto& v : s)
      if (!is_well_formed_label(v)) fail(ErrorCode::MalformedInput, "malformed vertex label '" + v + "'");
    if (!seen.insert(s).second)
      fail(ErrorCode::MalformedInput, "duplicate maximal simplex " + to_string(s));
    add_closure(s, faces);
  }
  for (const auto& v : extra_vertices) {
    if (!is_well_formed_label(v)) fail(ErrorCode::MalformedInput, "malformed vertex label '" + v + "'");
    faces.insert(Simplex{v});
  }
  return from_closed_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
  SimplexSet faces;
  for (const auto& s : simplices) add_closure(make_simplex(s), faces);
  return from_closed_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_closed_faces(SimplexSet faces) {
  SimplicialComplex L;
  L.faces_ = std::move(faces);
  L.finalize();
  return L;
}

void SimplicialComplex::finalize() {
  vertices_.clear();
  adjacency_.clear();
  for (const auto& s : faces_) {
    if (s.size() == 1) {
      vertices_.push_back(s[0]);
      adjacency_[s[0]];
    } else if (s.size() == 2) {
      adjacency_[s[0]].insert(s[1]);
      adjacency_[s[1]].insert(s[0]);
    } else if (s.size() > 2) {
      break;  // ordered by size: no more vertices or edges
    }
  }
  // Flagness: every clique extends one vertex at a time, so it suffices that any
  // face together with a common neighbour of all its vertices is again a face.
  flag_ = true;
  for (const auto& s : faces_) {
    if (s.size() < 2) continue;
    const auto& first = adjacency_.at(s[0]);
    for (const auto& w : first) {
      if (std::binary_search(s.begin(), s.end(), w)) continue;
      bool common = true;
      for (std::size_t i = 1; i < s.size() && common; ++i) common = adjacency_.at(s[i]).count(w) > 0;
      if (common && !faces_.count(make_simplex(simplex_union(s, Simplex{w})))) {
        flag_ = false;
        return;
      }
    }
  }
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -1;
  return static_cast<int>(faces_.rbegin()->size()) - 1;
}

bool SimplicialComplex::contains(const Simplex& s) const { return s.empty() || faces_.count(s) > 0; }

bool SimplicialComplex::has_vertex(const VertexId& v) const { return adjacency_.count(v) > 0; }

bool SimplicialComplex::adjacent(const VertexId& u, const VertexId& v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.count(v) > 0;
}

std::vector<VertexId> SimplicialComplex::neighbors(const VertexId& v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) fail(ErrorCode::VertexNotPresent, "vertex '" + v + "' not in complex");
  return {it->second.begin(), it->second.end()};
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  // A face is maximal iff no face of the next dimension contains it.
  for (const auto& s : faces_) {
    bool maximal = true;
    auto it = adjacency_.find(s[0]);
    for (const auto& w : it->second) {
      if (std::binary_search(s.begin(), s.end(), w)) continue;
      if (faces_.count(make_simplex(simplex_union(s, Simplex{w})))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::faces_of_dimension(int k) const {
  std::vector<Simplex> out;
  for (const auto& s : faces_)
    if (static_cast<int>(s.size()) == k + 1) out.push_back(s);
  return out;
}

FVector f_vector(const SimplicialComplex& L) {
  FVector f;
  f.counts.assign(static_cast<std::size_t>(L.dimension() + 2), 0);
  f.counts[0] = 1;
  for (const auto& s : L.faces()) ++f.counts[s.size()];
  return f;
}

SimplicialComplex link(const SimplicialComplex& L, const Simplex& sigma) {
  if (!L.contains(sigma)) fail(ErrorCode::SimplexNotPresent, "simplex " + to_string(sigma) + " not in complex");
  if (sigma.empty()) return L;
  SimplexSet out;
  for (const auto& s : L.faces()) {
    if (s.size() <= sigma.size() || !is_face_of(sigma, s)) continue;
    out.insert(simplex_difference(s, sigma));
  }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

SimplicialComplex star(const SimplicialComplex& L, const Simplex& sigma) {
  if (!L.contains(sigma)) fail(ErrorCode::SimplexNotPresent, "simplex " + to_string(sigma) + " not in complex");
  if (sigma.empty()) return L;
  SimplexSet out;
  for (const auto& s : L.faces()) {
    if (!is_face_of(sigma, s)) continue;
    // every face of a coface of sigma
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      out.insert(std::move(sub));
    }
  }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

SimplicialComplex remove_simplices(const SimplicialComplex& L, const std::vector<Simplex>& A) {
  for (const auto& a : A)
    if (!L.contains(a)) fail(ErrorCode::SimplexNotPresent, "simplex " + to_string(a) + " not in complex");
  SimplexSet out;
  for (const auto& s : L.faces()) {
    bool keep = true;
    for (const auto& a : A)
      if (is_face_of(a, s)) {
        keep = false;
        break;
      }
    if (keep) out.insert(s);
  }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& L, const std::vector<VertexId>& vertices) {
  Simplex keep = make_simplex(vertices);
  SimplexSet out;
  for (const auto& s : L.faces())
    if (is_face_of(s, keep)) out.insert(s);
  return SimplicialComplex::from_closed_faces(std::move(out));
}

bool is_subcomplex(const SimplicialComplex& K, const SimplicialComplex& L) {
  for (const auto& s : K.faces())
    if (!L.contains(s)) return false;
  return true;
}

bool is_full_subcomplex(const SimplicialComplex& K, const SimplicialComplex& L) {
  return is_subcomplex(K, L) && full_subcomplex(L, K.vertices()) == K;
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& J) {
  std::map<VertexId, VertexId> rename;
  std::set<VertexId> used(K.vertices().begin(), K.vertices().end());
  used.insert(J.vertices().begin(), J.vertices().end());
  for (const auto& v : J.vertices()) {
    if (!K.has_vertex(v)) {
      rename[v] = v;
      continue;
    }
    for (int k = 1;; ++k) {
      VertexId candidate = v + "~" + std::to_string(k);
      if (!used.count(candidate)) {
        used.insert(candidate);
        rename[v] = candidate;
        break;
      }
    }
  }
  std::vector<Simplex> jfaces{Simplex{}};
  for (const auto& t : J.faces()) {
    Simplex r;
    for (const auto& v : t) r.push_back(rename.at(v));
    jfaces.push_back(make_simplex(std::move(r)));
  }
  SimplexSet out;
  std::vector<Simplex> kfaces{Simplex{}};
  kfaces.insert(kfaces.end(), K.faces().begin(), K.faces().end());
  for (const auto& s : kfaces)
    for (const auto& t : jfaces) {
      if (s.empty() && t.empty()) continue;
      out.insert(simplex_union(s, t));
    }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

SimplicialComplex cone(const SimplicialComplex& L, const VertexId& apex) {
  return join(L, SimplicialComplex::from_maximal({{apex}}));
}

SimplicialComplex suspension(const SimplicialComplex& L, const VertexId& north, const VertexId& south) {
  return join(L, SimplicialComplex::from_maximal({{north}, {south}}));
}

std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& L) {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (const auto& v : L.vertices()) {
    if (seen.count(v)) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> q;
    q.push(v);
    seen.insert(v);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      comp.push_back(x);
      for (const auto& y : L.neighbors(x))
        if (seen.insert(y).second) q.push(y);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

long long euler_characteristic(const SimplicialComplex& L) { return f_vector(L).euler(); }

}  // namespace l2lab
