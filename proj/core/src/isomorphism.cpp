#include "l2lab/isomorphism.hpp"

#include <algorithm>

#include "l2lab/error.hpp"

namespace l2lab {

namespace {

struct Invariant {
  std::size_t degree;
  std::vector<std::size_t> link_f;
  auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const SimplicialComplex& L) {
  std::vector<Invariant> out;
  for (const auto& v : L.vertices())
    out.push_back({L.neighbors(v).size(), f_vector(link(L, Simplex{v})).counts});
  return out;
}

class Matcher {
 public:
  Matcher(const SimplicialComplex& a, const SimplicialComplex& b) : A(a), B(b) {
    const auto& va = A.vertices();
    const auto& vb = B.vertices();
    n = va.size();
    auto ia = invariants(A);
    auto ib = invariants(B);
    adjA.assign(n, std::vector<char>(n, 0));
    adjB.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        adjA[i][j] = A.adjacent(va[i], va[j]);
        adjB[i][j] = B.adjacent(vb[i], vb[j]);
      }
    candidates.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (ia[i] == ib[j]) candidates[i].push_back(j);
    // Most constrained first; prefer vertices adjacent to already ordered ones.
    std::vector<char> placed(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      std::pair<std::size_t, std::ptrdiff_t> key{0, 0};
      for (std::size_t i = 0; i < n; ++i) {
        if (placed[i]) continue;
        std::size_t links = 0;
        for (std::size_t k : order) links += adjA[i][k];
        std::pair<std::size_t, std::ptrdiff_t> k2{links, -static_cast<std::ptrdiff_t>(candidates[i].size())};
        if (best == n || k2 > key) {
          best = i;
          key = k2;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
    image.assign(n, n);
    used.assign(n, 0);
  }

  bool run(std::size_t depth) {
    if (depth == n) return full_check();
    std::size_t i = order[depth];
    for (std::size_t j : candidates[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t k = order[d];
        ok = adjA[i][k] == adjB[j][image[k]];
      }
      if (!ok) continue;
      image[i] = j;
      used[j] = 1;
      if (run(depth + 1)) return true;
      used[j] = 0;
      image[i] = n;
    }
    return false;
  }

  VertexMap result() const {
    VertexMap phi;
    for (std::size_t i = 0; i < n; ++i) phi[A.vertices()[i]] = B.vertices()[image[i]];
    return phi;
  }

 private:
  bool full_check() const { return is_isomorphism(A, B, result()); }

  const SimplicialComplex& A;
  const SimplicialComplex& B;
  std::size_t n = 0;
  std::vector<std::vector<char>> adjA, adjB;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> order;
  std::vector<std::size_t> image;
  std::vector<char> used;
};

}  // namespace

SimplicialComplex relabel(const SimplicialComplex& L, const VertexMap& phi) {
  SimplexSet out;
  for (const auto& s : L.faces()) {
    Simplex t;
    t.reserve(s.size());
    for (const auto& v : s) {
      auto it = phi.find(v);
      t.push_back(it == phi.end() ? v : it->second);
    }
    out.insert(make_simplex(std::move(t)));
  }
  return SimplicialComplex::from_closed_faces(std::move(out));
}

bool is_isomorphism(const SimplicialComplex& L1, const SimplicialComplex& L2, const VertexMap& phi) {
  if (L1.num_faces() != L2.num_faces() || phi.size() != L1.num_vertices()) return false;
  std::set<VertexId> targets;
  for (const auto& [v, w] : phi) {
    if (!L1.has_vertex(v) || !L2.has_vertex(w)) return false;
    targets.insert(w);
  }
  if (targets.size() != phi.size()) return false;
  for (const auto& s : L1.faces()) {
    Simplex t;
    for (const auto& v : s) t.push_back(phi.at(v));
    if (!L2.contains(make_simplex(std::move(t)))) return false;
  }
  return true;
}

std::optional<VertexMap> find_isomorphism(const SimplicialComplex& L1, const SimplicialComplex& L2,
                                          std::size_t max_vertices) {
  if (L1.num_vertices() > max_vertices || L2.num_vertices() > max_vertices)
    fail(ErrorCode::SizeLimitExceeded, "isomorphism test limited to " + std::to_string(max_vertices) + " vertices");
  if (!(f_vector(L1) == f_vector(L2))) return std::nullopt;
  if (L1 == L2) {
    VertexMap id;
    for (const auto& v : L1.vertices()) id[v] = v;
    return id;
  }
  auto ia = invariants(L1);
  auto ib = invariants(L2);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;
  Matcher m(L1, L2);
  if (!m.run(0)) return std::nullopt;
  return m.result();
}

bool is_isomorphic(const SimplicialComplex& L1, const SimplicialComplex& L2, std::size_t max_vertices) {
  return find_isomorphism(L1, L2, max_vertices).has_value();
}

}  // namespace l2lab
