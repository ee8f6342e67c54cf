#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "l2lab/labels.hpp"

namespace l2lab {

/// Sorted vertex labels. The empty vector is the empty simplex.
using Simplex = std::vector<VertexId>;

/// Orders simplices by dimension first, then lexicographically.
struct SimplexOrder {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using SimplexSet = std::set<Simplex, SimplexOrder>;

Simplex make_simplex(std::vector<VertexId> vertices);
bool is_face_of(const Simplex& face, const Simplex& s);
Simplex simplex_union(const Simplex& a, const Simplex& b);
Simplex simplex_difference(const Simplex& a, const Simplex& b);
bool disjoint(const Simplex& a, const Simplex& b);
std::string to_string(const Simplex& s);

/// f_{-1} = 1, f_0, f_1, ..., f_dim.
struct FVector {
  std::vector<std::size_t> counts;  // counts[k] = number of (k-1)-simplices

  std::size_t f(int k) const { return counts.at(static_cast<std::size_t>(k + 1)); }
  int dimension() const { return static_cast<int>(counts.size()) - 2; }
  /// Reduced Euler characteristic: sum over k >= -1 of (-1)^k f_k.
  long long reduced_euler() const;
  long long euler() const { return reduced_euler() + 1; }
  bool operator==(const FVector&) const = default;
};

/// Finite abstract simplicial complex with string-labelled vertices.
///
/// Stores every nonempty face. The empty simplex is implicitly present, so the
/// default-constructed complex is the empty complex {∅} (dimension -1).
/// Values are immutable once built.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Validating constructor: rejects empty entries, repeated vertices inside a
  /// simplex, duplicate maximal simplices and malformed labels.
  static SimplicialComplex from_maximal(const std::vector<std::vector<VertexId>>& maximal,
                                        const std::vector<VertexId>& extra_vertices = {});

  /// Downward closure of an arbitrary list of simplices. Duplicates are fine.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

  /// Trusted constructor for a set already closed under taking faces.
  static SimplicialComplex from_closed_faces(SimplexSet faces);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const SimplexSet& faces() const { return faces_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  int dimension() const;
  bool empty() const { return faces_.empty(); }

  bool contains(const Simplex& s) const;
  bool has_vertex(const VertexId& v) const;
  bool adjacent(const VertexId& u, const VertexId& v) const;
  std::vector<VertexId> neighbors(const VertexId& v) const;
  std::vector<Simplex> maximal_simplices() const;
  std::vector<Simplex> faces_of_dimension(int k) const;

  /// Every clique of the 1-skeleton spans a simplex. Computed once at construction.
  bool is_flag() const { return flag_; }

  bool operator==(const SimplicialComplex& other) const { return faces_ == other.faces_; }

 private:
  void finalize();

  SimplexSet faces_;
  std::vector<VertexId> vertices_;
  std::map<VertexId, std::set<VertexId>> adjacency_;
  bool flag_ = true;
};

FVector f_vector(const SimplicialComplex& L);

/// Lk σ: simplices τ disjoint from σ with τ ∪ σ in L. link(L, ∅) = L.
SimplicialComplex link(const SimplicialComplex& L, const Simplex& sigma);

/// Closed star σ * Lk σ.
SimplicialComplex star(const SimplicialComplex& L, const Simplex& sigma);

/// L − A: simplices of L containing no simplex of A.
SimplicialComplex remove_simplices(const SimplicialComplex& L, const std::vector<Simplex>& A);

/// Full subcomplex spanned by the given vertices (those not in L are ignored).
SimplicialComplex full_subcomplex(const SimplicialComplex& L, const std::vector<VertexId>& vertices);

bool is_subcomplex(const SimplicialComplex& K, const SimplicialComplex& L);
bool is_full_subcomplex(const SimplicialComplex& K, const SimplicialComplex& L);

/// Join. Labels of J that collide with labels of K are renamed deterministically
/// by appending "~1", "~2", ... until unique.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& J);
SimplicialComplex cone(const SimplicialComplex& L, const VertexId& apex = "c");
SimplicialComplex suspension(const SimplicialComplex& L, const VertexId& north = "N",
                             const VertexId& south = "S");

/// Connected components as vertex lists (sorted), in order of least vertex.
std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& L);

/// Ordinary Euler characteristic f0 - f1 + f2 - ...
long long euler_characteristic(const SimplicialComplex& L);

}  // namespace l2lab
