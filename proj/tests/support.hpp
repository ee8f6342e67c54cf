#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "l2lab/complex.hpp"

namespace l2lab::testing {

/// Clique complex of a G(n, q) random graph, n <= 16.
inline SimplicialComplex random_flag_complex(std::mt19937& rng, int n, double q) {
  std::bernoulli_distribution coin(q);
  std::vector<unsigned> adj(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) {
        adj[static_cast<std::size_t>(a)] |= 1u << b;
        adj[static_cast<std::size_t>(b)] |= 1u << a;
      }
  std::vector<Simplex> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    Simplex s;
    for (int a = 0; a < n && clique; ++a) {
      if (!(mask >> a & 1u)) continue;
      if ((mask & ~(1u << a) & ~adj[static_cast<std::size_t>(a)]) != 0) clique = false;
      s.push_back("v" + std::to_string(a));
    }
    if (clique) cliques.push_back(make_simplex(s));
  }
  return SimplicialComplex::from_simplices(cliques);
}

/// Random connected triangle-free 3-regular graph on n (even) vertices,
/// by rejection from the pairing model.
inline SimplicialComplex random_cubic_graph(std::mt19937& rng, int n) {
  for (;;) {
    std::vector<int> points;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 3; ++k) points.push_back(i);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    std::vector<std::vector<VertexId>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      const auto a = static_cast<std::size_t>(points[i]), b = static_cast<std::size_t>(points[i + 1]);
      if (a == b || adj[a][b]) ok = false;
      else {
        adj[a][b] = adj[b][a] = true;
        edges.push_back({"g" + std::to_string(a), "g" + std::to_string(b)});
      }
    }
    if (!ok) continue;
    auto G = SimplicialComplex::from_maximal(edges);
    if (G.is_flag() && connected_components(G).size() == 1) return G;
  }
}

}  // namespace l2lab::testing
