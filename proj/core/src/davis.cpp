#include "l2lab/davis.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "l2lab/error.hpp"

namespace l2lab {

namespace {

std::vector<Simplex> simplices_with_empty(const SimplicialComplex& L) {
  std::vector<Simplex> out{Simplex{}};
  out.insert(out.end(), L.faces().begin(), L.faces().end());
  return out;
}

Simplex with(const Simplex& s, const VertexId& v) { return make_simplex(simplex_union(s, Simplex{v})); }

}  // namespace

std::vector<std::size_t> Chamber::counts() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells) out.push_back(c.size());
  return out;
}

long long Chamber::euler() const {
  long long sum = 0;
  for (std::size_t k = 0; k < cells.size(); ++k)
    sum += (k % 2 ? -1 : 1) * static_cast<long long>(cells[k].size());
  return sum;
}

Chamber chamber(const SimplicialComplex& L) {
  Chamber K;
  K.cells.resize(static_cast<std::size_t>(L.dimension() + 2));
  for (const auto& rho : simplices_with_empty(L)) {
    const std::size_t n = rho.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      ChamberCell c;
      for (std::size_t i = 0; i < n; ++i) ((mask & (1u << i)) ? c.free : c.mu).push_back(rho[i]);
      K.cells[c.free.size()].push_back(std::move(c));
    }
  }
  return K;
}

std::size_t CubeComplex::total_cells() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

long long CubeComplex::euler() const {
  long long sum = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) sum += (k % 2 ? -1 : 1) * static_cast<long long>(counts[k]);
  return sum;
}

void CubeComplex::check_boundary_squares_zero() const {
  for (std::size_t k = 2; k < boundary.size(); ++k)
    if (!is_zero(multiply(boundary[k - 1], boundary[k])))
      throw std::logic_error("boundary of boundary is nonzero in degree " + std::to_string(k));
}

std::size_t max_cells_from_env(std::size_t fallback) {
  if (const char* s = std::getenv("L2LAB_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

std::vector<mpz_class> basic_construction_counts(const SimplicialComplex& L, std::uint64_t group_order) {
  std::vector<mpz_class> out(static_cast<std::size_t>(L.dimension() + 2), 0);
  const mpz_class order(std::to_string(group_order));
  for (const auto& rho : simplices_with_empty(L)) {
    const std::size_t n = rho.size();
    // choosing which k vertices are free: C(n, k) cells with |μ| = n - k
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      out[k] += binom * (order >> static_cast<mp_bitcnt_t>(n - k));
      binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
    }
  }
  return out;
}

CubeComplex basic_construction(const FiniteQuotient& q, std::size_t max_cells, bool keep_cells) {
  const auto& L = q.nerve();
  const auto& G = q.group();
  const std::size_t n = G.order();
  mpz_class total = 0;
  for (const auto& c : basic_construction_counts(L, n)) total += c;
  if (total > mpz_class(std::to_string(max_cells)))
    fail(ErrorCode::SizeLimitExceeded, "basic construction would have " + total.get_str() + " cells (bound " +
                                           std::to_string(max_cells) + ")");

  // Left cosets g·H_μ are orbits of right multiplication by the generators in μ.
  const auto simplices = simplices_with_empty(L);
  std::map<Simplex, std::size_t> simplex_index;
  std::vector<std::vector<std::uint32_t>> coset_of(simplices.size());
  std::vector<std::vector<std::uint32_t>> coset_rep(simplices.size());
  for (std::size_t si = 0; si < simplices.size(); ++si) {
    const auto& mu = simplices[si];
    simplex_index[mu] = si;
    std::vector<std::size_t> gens;
    for (const auto& v : mu) gens.push_back(q.generator_of(v));
    auto& id = coset_of[si];
    id.assign(n, UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t g = 0; g < n; ++g) {
      if (id[g] != UINT32_MAX) continue;
      id[g] = next;
      coset_rep[si].push_back(g);
      std::vector<std::uint32_t> stack{g};
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto s : gens) {
          auto y = G.times_generator(x, s);
          if (id[y] == UINT32_MAX) {
            id[y] = next;
            stack.push_back(y);
          }
        }
      }
      ++next;
    }
  }

  const Chamber K = chamber(L);
  const std::size_t dims = K.cells.size();
  CubeComplex X;
  X.index = n;
  X.description = "basic construction over a group of order " + std::to_string(n);
  X.counts.assign(dims, 0);
  std::vector<std::map<std::pair<Simplex, Simplex>, std::size_t>> offset(dims);
  std::vector<std::vector<std::size_t>> cell_offsets(dims);
  for (std::size_t k = 0; k < dims; ++k) {
    for (const auto& c : K.cells[k]) {
      offset[k][{c.mu, c.free}] = X.counts[k];
      cell_offsets[k].push_back(X.counts[k]);
      X.counts[k] += coset_rep[simplex_index.at(c.mu)].size();
    }
  }
  if (keep_cells) {
    X.cells.emplace(dims);
    for (std::size_t k = 0; k < dims; ++k)
      for (const auto& c : K.cells[k])
        for (auto g : coset_rep[simplex_index.at(c.mu)]) (*X.cells)[k].push_back({g, c, 0});
  }
  X.boundary.resize(dims);
  X.boundary[0].rows = 0;
  X.boundary[0].cols = X.counts[0];
  for (std::size_t k = 1; k < dims; ++k) {
    auto& B = X.boundary[k];
    B.rows = X.counts[k - 1];
    B.cols = X.counts[k];
    for (std::size_t j = 0; j < K.cells[k].size(); ++j) {
      const auto& c = K.cells[k][j];
      const std::size_t mu_i = simplex_index.at(c.mu);
      const auto& reps = coset_rep[mu_i];
      for (std::size_t t = 0; t < reps.size(); ++t) {
        const auto col = static_cast<std::uint32_t>(cell_offsets[k][j] + t);
        const auto g = reps[t];
        for (std::size_t i = 0; i < c.free.size(); ++i) {
          const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
          Simplex rest = simplex_difference(c.free, Simplex{c.free[i]});
          Simplex up = with(c.mu, c.free[i]);
          const std::size_t up_i = simplex_index.at(up);
          B.add(static_cast<std::uint32_t>(offset[k - 1].at({up, rest}) + coset_of[up_i][g]), col, sign);
          B.add(static_cast<std::uint32_t>(offset[k - 1].at({c.mu, rest}) + coset_of[mu_i][g]), col, -sign);
        }
      }
    }
    B.normalize();
  }
  X.check_boundary_squares_zero();
  return X;
}

std::vector<mpz_class> cubulation_counts(const SimplicialComplex& L, std::uint64_t group_order) {
  std::vector<mpz_class> out(static_cast<std::size_t>(L.dimension() + 2), 0);
  const mpz_class order(std::to_string(group_order));
  for (const auto& s : simplices_with_empty(L)) out[s.size()] += order >> static_cast<mp_bitcnt_t>(s.size());
  return out;
}

CubeComplex davis_cubulation(const FiniteQuotient& q, std::size_t max_cells) {
  const auto& L = q.nerve();
  const auto& G = q.group();
  const std::size_t n = G.order();
  mpz_class total = 0;
  for (const auto& c : cubulation_counts(L, n)) total += c;
  if (total > mpz_class(std::to_string(max_cells)))
    fail(ErrorCode::SizeLimitExceeded, "cubulation would have " + total.get_str() + " cells (bound " +
                                           std::to_string(max_cells) + ")");
  const auto simplices = simplices_with_empty(L);
  const std::size_t dims = static_cast<std::size_t>(L.dimension() + 2);
  CubeComplex X;
  X.index = n;
  X.description = "coarse cubulation over a group of order " + std::to_string(n);
  X.counts.assign(dims, 0);
  X.cells.emplace(dims);

  // coset numbering per simplex, and the cell index of each coset
  std::map<Simplex, std::size_t> simplex_index;
  std::vector<std::vector<std::uint32_t>> coset_of(simplices.size());
  std::vector<std::vector<std::uint32_t>> coset_rep(simplices.size());
  std::vector<std::size_t> first_cell(simplices.size());
  for (std::size_t si = 0; si < simplices.size(); ++si) {
    const auto& sigma = simplices[si];
    simplex_index[sigma] = si;
    std::vector<std::size_t> gens;
    for (const auto& v : sigma) gens.push_back(q.generator_of(v));
    coset_of[si].assign(n, UINT32_MAX);
    for (std::uint32_t g = 0; g < n; ++g) {
      if (coset_of[si][g] != UINT32_MAX) continue;
      const auto id = static_cast<std::uint32_t>(coset_rep[si].size());
      coset_rep[si].push_back(g);
      for (std::uint32_t mask = 0; mask < (1u << gens.size()); ++mask) {
        auto x = g;
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (mask & (1u << j)) x = G.times_generator(x, gens[j]);
        coset_of[si][x] = id;
      }
    }
    first_cell[si] = X.counts[sigma.size()];
    X.counts[sigma.size()] += coset_rep[si].size();
    for (auto g : coset_rep[si]) (*X.cells)[sigma.size()].push_back({g, ChamberCell{{}, sigma}, 0});
  }

  X.boundary.resize(dims);
  X.boundary[0].cols = X.counts[0];
  for (std::size_t k = 1; k < dims; ++k) {
    X.boundary[k].rows = X.counts[k - 1];
    X.boundary[k].cols = X.counts[k];
  }
  for (std::size_t si = 0; si < simplices.size(); ++si) {
    const auto& sigma = simplices[si];
    const std::size_t k = sigma.size();
    if (k == 0) continue;
    auto& B = X.boundary[k];
    for (std::size_t t = 0; t < coset_rep[si].size(); ++t) {
      const auto col = static_cast<std::uint32_t>(first_cell[si] + t);
      const auto g0 = coset_rep[si][t];
      for (std::size_t i = 0; i < k; ++i) {
        const Simplex rest = simplex_difference(sigma, Simplex{sigma[i]});
        const std::size_t ri = simplex_index.at(rest);
        std::vector<std::size_t> gens;
        for (const auto& v : rest) gens.push_back(q.generator_of(v));
        const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
        for (int up = 0; up < 2; ++up) {
          const auto corner = up ? G.times_generator(g0, q.generator_of(sigma[i])) : g0;
          const auto id = coset_of[ri][corner];
          const auto base = coset_rep[ri][id];
          int flips = -1;
          for (std::uint32_t mask = 0; mask < (1u << gens.size()) && flips < 0; ++mask) {
            auto x = corner;
            for (std::size_t j = 0; j < gens.size(); ++j)
              if (mask & (1u << j)) x = G.times_generator(x, gens[j]);
            if (x == base) flips = __builtin_popcount(mask);
          }
          const std::int64_t orient = (flips % 2 == 0) ? 1 : -1;
          B.add(static_cast<std::uint32_t>(first_cell[ri] + id), col, (up ? sign : -sign) * orient);
        }
      }
    }
  }
  for (std::size_t k = 1; k < dims; ++k) X.boundary[k].normalize();
  X.check_boundary_squares_zero();
  return X;
}

CubeComplex davis_pl(const SimplicialComplex& L, std::size_t max_cells) {
  CubeComplex X = davis_cubulation(canonical_quotient(L), max_cells);
  X.description = "P_L for a nerve with " + std::to_string(L.num_vertices()) + " vertices";
  return X;
}

mpq_class euler_l2(const SimplicialComplex& L) {
  mpq_class sum = 1;
  for (const auto& s : L.faces()) {
    mpq_class term(1, 1);
    term.get_den() <<= static_cast<mp_bitcnt_t>(s.size());
    term.canonicalize();
    if (s.size() % 2) term = -term;
    sum += term;
  }
  return sum;
}

namespace {

struct Edge {
  std::uint32_t tail;
  std::uint32_t head;
};

std::vector<Edge> edges_of(const CubeComplex& X) {
  std::vector<Edge> edges(X.counts.size() > 1 ? X.counts[1] : 0, Edge{UINT32_MAX, UINT32_MAX});
  if (X.counts.size() < 2) return edges;
  std::vector<int> seen(edges.size(), 0);
  for (const auto& t : X.boundary[1].entries) {
    ++seen[t.col];
    if (t.value == 1) edges[t.col].head = t.row;
    else if (t.value == -1) edges[t.col].tail = t.row;
    else fail(ErrorCode::MalformedInput, "1-cell boundary coefficient other than ±1");
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (seen[e] != 2 || edges[e].head == UINT32_MAX || edges[e].tail == UINT32_MAX)
      fail(ErrorCode::MalformedInput, "1-cell " + std::to_string(e) + " is not an edge between distinct vertices");
  return edges;
}

/// Spanning tree by BFS from vertex 0; returns tree-edge flags.
std::vector<char> spanning_tree(const CubeComplex& X, const std::vector<Edge>& edges) {
  const std::size_t nv = X.counts.empty() ? 0 : X.counts[0];
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(nv);
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].tail].emplace_back(e, edges[e].head);
    adj[edges[e].head].emplace_back(e, edges[e].tail);
  }
  std::vector<char> tree(edges.size(), 0);
  std::vector<char> seen(nv, 0);
  if (nv == 0) fail(ErrorCode::Disconnected, "complex has no vertices");
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (auto [e, y] : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        tree[e] = 1;
        ++reached;
        q.push(y);
      }
  }
  if (reached != nv) fail(ErrorCode::Disconnected, "cube complex is not connected");
  return tree;
}

using SparseRow = std::map<std::uint32_t, mpz_class>;

/// Integer kernel of the dense system rows (over the given variable list).
std::vector<std::vector<mpz_class>> dense_integer_kernel(const std::vector<std::vector<mpz_class>>& M,
                                                         std::size_t nvars) {
  // Column operations on [M; I] until M is in column echelon form; the
  // identity columns under the zero columns of M span the kernel.
  std::vector<std::vector<mpz_class>> A = M;
  std::vector<std::vector<mpz_class>> U(nvars, std::vector<mpz_class>(nvars, 0));
  for (std::size_t i = 0; i < nvars; ++i) U[i][i] = 1;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < A.size() && lead < nvars; ++r) {
    while (true) {
      std::size_t best = nvars;
      for (std::size_t c = lead; c < nvars; ++c)
        if (sgn(A[r][c]) != 0 && (best == nvars || abs(A[r][c]) < abs(A[r][best]))) best = c;
      if (best == nvars) break;
      auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& row : A) std::swap(row[a], row[b]);
        for (auto& row : U) std::swap(row[a], row[b]);
      };
      swap_cols(lead, best);
      bool done = true;
      for (std::size_t c = lead + 1; c < nvars; ++c) {
        if (sgn(A[r][c]) == 0) continue;
        mpz_class qt;
        mpz_fdiv_q(qt.get_mpz_t(), A[r][c].get_mpz_t(), A[r][lead].get_mpz_t());
        for (auto& row : A) row[c] -= qt * row[lead];
        for (auto& row : U) row[c] -= qt * row[lead];
        if (sgn(A[r][c]) != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }
  std::vector<std::vector<mpz_class>> kernel;
  for (std::size_t c = lead; c < nvars; ++c) {
    std::vector<mpz_class> v(nvars);
    for (std::size_t i = 0; i < nvars; ++i) v[i] = U[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

/// Basis of integral 1-cocycles vanishing on the spanning tree, as edge values.
std::vector<std::vector<mpz_class>> cocycle_basis(const CubeComplex& X, const std::vector<Edge>& edges,
                                                  const std::vector<char>& tree) {
  const std::size_t ne = edges.size();
  std::vector<SparseRow> equations;
  if (X.counts.size() > 2) {
    std::vector<SparseRow> by_col(X.counts[2]);
    for (const auto& t : X.boundary[2].entries)
      if (!tree[t.row]) by_col[t.col][t.row] += static_cast<long>(t.value);
    for (auto& row : by_col) {
      for (auto it = row.begin(); it != row.end();) it = (sgn(it->second) == 0) ? row.erase(it) : std::next(it);
      if (!row.empty()) equations.push_back(std::move(row));
    }
  }
  // Unit substitution: pivot[x] expresses x through the other variables.
  std::map<std::uint32_t, SparseRow> pivot;
  std::vector<SparseRow> hard;
  auto reduce = [&](SparseRow eq) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = eq.begin(); it != eq.end(); ++it) {
        auto p = pivot.find(it->first);
        if (p == pivot.end()) continue;
        mpz_class a = it->second;
        eq.erase(it);
        for (const auto& [y, c] : p->second) {
          eq[y] += a * c;
          if (sgn(eq[y]) == 0) eq.erase(y);
        }
        changed = true;
        break;
      }
    }
    return eq;
  };
  for (auto& raw : equations) {
    SparseRow eq = reduce(std::move(raw));
    if (eq.empty()) continue;
    auto unit = std::find_if(eq.begin(), eq.end(), [](const auto& e) { return e.second == 1 || e.second == -1; });
    if (unit == eq.end()) {
      hard.push_back(std::move(eq));
      continue;
    }
    const std::uint32_t x = unit->first;
    const mpz_class a = unit->second;
    SparseRow expr;
    for (const auto& [y, c] : eq)
      if (y != x) expr[y] = -c * a;  // x = -(1/a) Σ c y, with 1/a = a
    for (auto& [z, zexpr] : pivot) {
      auto it = zexpr.find(x);
      if (it == zexpr.end()) continue;
      mpz_class b = it->second;
      zexpr.erase(it);
      for (const auto& [y, c] : expr) {
        zexpr[y] += b * c;
        if (sgn(zexpr[y]) == 0) zexpr.erase(y);
      }
    }
    pivot[x] = std::move(expr);
  }
  for (auto& eq : hard) eq = reduce(std::move(eq));

  std::vector<std::uint32_t> free_vars;
  for (std::uint32_t e = 0; e < ne; ++e)
    if (!tree[e] && !pivot.count(e)) free_vars.push_back(e);
  std::set<std::uint32_t> constrained;
  for (const auto& eq : hard)
    for (const auto& [y, c] : eq) constrained.insert(y);

  std::vector<std::map<std::uint32_t, mpz_class>> generators;  // free-variable assignments
  for (auto y : free_vars)
    if (!constrained.count(y)) generators.push_back({{y, 1}});
  if (!constrained.empty()) {
    std::vector<std::uint32_t> vars(constrained.begin(), constrained.end());
    std::map<std::uint32_t, std::size_t> pos;
    for (std::size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = i;
    std::vector<std::vector<mpz_class>> M;
    for (const auto& eq : hard) {
      if (eq.empty()) continue;
      std::vector<mpz_class> row(vars.size(), 0);
      for (const auto& [y, c] : eq) row[pos.at(y)] = c;
      M.push_back(std::move(row));
    }
    for (const auto& k : dense_integer_kernel(M, vars.size())) {
      std::map<std::uint32_t, mpz_class> g;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (sgn(k[i]) != 0) g[vars[i]] = k[i];
      generators.push_back(std::move(g));
    }
    std::sort(generators.begin(), generators.end(),
              [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
  }

  std::vector<std::vector<mpz_class>> basis;
  for (const auto& g : generators) {
    std::vector<mpz_class> c(ne, 0);
    for (const auto& [y, v] : g) c[y] = v;
    for (const auto& [x, expr] : pivot) {
      mpz_class v = 0;
      for (const auto& [y, a] : expr) {
        auto it = g.find(y);
        if (it != g.end()) v += a * it->second;
      }
      c[x] = v;
    }
    basis.push_back(std::move(c));
  }
  return basis;
}

}  // namespace

std::size_t first_betti_integral(const CubeComplex& X) {
  auto edges = edges_of(X);
  auto tree = spanning_tree(X, edges);
  return cocycle_basis(X, edges, tree).size();
}

CubeComplex abelian_p_cover(const CubeComplex& X, std::uint64_t p, const std::vector<int>& exponents,
                            std::size_t max_cells) {
  if (p < 2) fail(ErrorCode::MalformedInput, "p must be a prime");
  std::vector<std::uint64_t> moduli;
  std::uint64_t d = 1;
  for (int k : exponents) {
    if (k < 1) fail(ErrorCode::MalformedInput, "cover exponents must be positive");
    std::uint64_t m = 1;
    for (int i = 0; i < k; ++i) {
      if (m > UINT32_MAX / p) fail(ErrorCode::SizeLimitExceeded, "cover degree too large");
      m *= p;
    }
    moduli.push_back(m);
    if (d > UINT32_MAX / m) fail(ErrorCode::SizeLimitExceeded, "cover degree too large");
    d *= m;
  }
  if (static_cast<long double>(X.total_cells()) * d > static_cast<long double>(max_cells))
    fail(ErrorCode::SizeLimitExceeded, "cover would have more than " + std::to_string(max_cells) + " cells");

  const auto edges = edges_of(X);
  const auto tree = spanning_tree(X, edges);
  const auto basis = cocycle_basis(X, edges, tree);
  const std::size_t r = moduli.size();
  if (r > basis.size())
    fail(ErrorCode::RankTooLarge, "requested rank " + std::to_string(r) + " exceeds rank of H1 (" +
                                      std::to_string(basis.size()) + ")");

  using Sheet = std::vector<std::uint64_t>;
  std::vector<Sheet> cocycle(edges.size(), Sheet(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class m(std::to_string(moduli[i]));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      mpz_class v;
      mpz_fdiv_r(v.get_mpz_t(), basis[i][e].get_mpz_t(), m.get_mpz_t());
      cocycle[e][i] = v.get_ui();
    }
  }
  auto encode = [&](const Sheet& s) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < r; ++i) idx = idx * moduli[i] + s[i];
    return idx;
  };
  auto decode = [&](std::uint64_t idx) {
    Sheet s(r);
    for (std::size_t i = r; i-- > 0;) {
      s[i] = idx % moduli[i];
      idx /= moduli[i];
    }
    return s;
  };
  auto add = [&](const Sheet& a, const Sheet& b, bool minus = false) {
    Sheet s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = (a[i] + (minus ? moduli[i] - b[i] : b[i])) % moduli[i];
    return s;
  };

  // Closure edges and base vertex of every cell.
  const std::size_t dims = X.counts.size();
  std::vector<std::vector<std::vector<std::uint32_t>>> closure(dims);
  std::vector<std::vector<std::uint32_t>> base(dims);
  base[0].resize(X.counts[0]);
  std::iota(base[0].begin(), base[0].end(), 0u);
  closure[0].resize(X.counts[0]);
  if (dims > 1) {
    closure[1].resize(X.counts[1]);
    base[1].resize(X.counts[1]);
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      closure[1][e] = {e};
      base[1][e] = std::min(edges[e].tail, edges[e].head);
    }
  }
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>> faces(dims);
  for (std::size_t k = 1; k < dims; ++k) {
    faces[k].resize(X.counts[k]);
    for (const auto& t : X.boundary[k].entries) faces[k][t.col].emplace_back(t.row, t.value);
  }
  for (std::size_t k = 2; k < dims; ++k) {
    closure[k].resize(X.counts[k]);
    base[k].resize(X.counts[k]);
    for (std::size_t c = 0; c < X.counts[k]; ++c) {
      std::set<std::uint32_t> es;
      std::uint32_t b = UINT32_MAX;
      for (const auto& [f, v] : faces[k][c]) {
        es.insert(closure[k - 1][f].begin(), closure[k - 1][f].end());
        b = std::min(b, base[k - 1][f]);
      }
      closure[k][c].assign(es.begin(), es.end());
      base[k][c] = b;
    }
  }

  CubeComplex Y;
  Y.index = X.index * d;
  Y.description = "abelian " + std::to_string(p) + "-cover of degree " + std::to_string(d);
  Y.counts.resize(dims);
  for (std::size_t k = 0; k < dims; ++k) Y.counts[k] = X.counts[k] * d;
  Y.boundary.resize(dims);
  Y.boundary[0].cols = Y.counts[0];
  for (std::size_t k = 1; k < dims; ++k) {
    auto& B = Y.boundary[k];
    B.rows = Y.counts[k - 1];
    B.cols = Y.counts[k];
    B.entries.reserve(X.boundary[k].entries.size() * d);
    for (std::size_t c = 0; c < X.counts[k]; ++c) {
      // potentials on the closure, from the base vertex
      std::map<std::uint32_t, Sheet> pot{{base[k][c], Sheet(r, 0)}};
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto e : closure[k][c]) {
          const auto& E = edges[e];
          auto t = pot.find(E.tail);
          auto h = pot.find(E.head);
          if (t != pot.end() && h == pot.end()) {
            pot[E.head] = add(t->second, cocycle[e]);
            grew = true;
          } else if (h != pot.end() && t == pot.end()) {
            pot[E.tail] = add(h->second, cocycle[e], true);
            grew = true;
          }
        }
      }
      for (std::uint64_t a = 0; a < d; ++a) {
        const Sheet sa = decode(a);
        const auto col = static_cast<std::uint32_t>(c * d + a);
        for (const auto& [f, v] : faces[k][c]) {
          const Sheet& shift = pot.at(base[k - 1][f]);
          B.add(static_cast<std::uint32_t>(f * d + encode(add(sa, shift))), col, v);
        }
      }
    }
    B.normalize();
  }
  if (X.cells) {
    Y.cells.emplace(dims);
    for (std::size_t k = 0; k < dims; ++k)
      for (const auto& cell : (*X.cells)[k])
        for (std::uint64_t a = 0; a < d; ++a) {
          CellDescriptor cd = cell;
          cd.sheet = cell.sheet * d + a;
          (*Y.cells)[k].push_back(cd);
        }
  }
  Y.check_boundary_squares_zero();
  return Y;
}

}  // namespace l2lab
