#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "l2lab/complex.hpp"
#include "l2lab/group.hpp"
#include "l2lab/sparse.hpp"

namespace l2lab {

/// A cell (μ, F) of the chamber K_L: the face of [0,1]^S with coordinates in μ
/// equal to 1, in F free, and 0 elsewhere. μ ∪ F is a simplex of L or ∅.
struct ChamberCell {
  Simplex mu;
  Simplex free;
  std::size_t dimension() const { return free.size(); }
  bool operator==(const ChamberCell&) const = default;
};

struct Chamber {
  std::vector<std::vector<ChamberCell>> cells;  // by dimension
  std::vector<std::size_t> counts() const;
  long long euler() const;
};

Chamber chamber(const SimplicialComplex& L);

/// Cell of a basic construction: coset g·H_μ (g the least element) times a
/// chamber cell; for covers also the sheet index.
struct CellDescriptor {
  std::uint32_t coset_rep = 0;
  ChamberCell cell;
  std::uint64_t sheet = 0;
};

/// Finite cube complex with integral cellular boundary maps.
/// boundary[k] maps k-cells (columns) to (k-1)-cells (rows), for k >= 1.
struct CubeComplex {
  std::vector<std::size_t> counts;
  std::vector<SparseIntMatrix> boundary;
  /// Normalizing index: |G| for 𝒰(G, K_L), times the degree for covers.
  std::uint64_t index = 1;
  std::string description;
  std::optional<std::vector<std::vector<CellDescriptor>>> cells;

  int dimension() const { return static_cast<int>(counts.size()) - 1; }
  std::size_t total_cells() const;
  long long euler() const;
  /// Throws std::logic_error when some ∂∂ is nonzero.
  void check_boundary_squares_zero() const;
};

/// Default bound on the number of cells any construction may produce;
/// overridden by the L2LAB_MAX_CELLS environment variable.
std::size_t max_cells_from_env(std::size_t fallback = 2'000'000);

/// Cells per dimension of 𝒰(G, K_L) from Σ |G| / 2^|μ|, without building it.
std::vector<mpz_class> basic_construction_counts(const SimplicialComplex& L, std::uint64_t group_order);

/// 𝒰(G, K_L). Face signs: for F = {f_1 < ... < f_k},
///   ∂(gH_μ, μ, F) = Σ_i (-1)^(i-1) [ (gH_{μ+f_i}, μ+f_i, F-f_i) - (gH_μ, μ, F-f_i) ].
/// Throws SizeLimitExceeded when the cell count exceeds max_cells.
CubeComplex basic_construction(const FiniteQuotient& q, std::size_t max_cells = max_cells_from_env(),
                               bool keep_cells = true);

/// Coarse cubulation of 𝒰(G, K_L): one |σ|-cube per coset g·H_σ, σ ∈ L ∪ {∅},
/// each the union of the chamber cells it contains. Cube g·H_σ has corners
/// g·Π_{s∈T} s for T ⊆ σ, based at its least element; a face whose own base
/// corner is reflected in T relative to the induced one carries sign (-1)^|T|.
CubeComplex davis_cubulation(const FiniteQuotient& q, std::size_t max_cells = max_cells_from_env());

/// Cells per dimension of the coarse cubulation: Σ_{|σ|=k} |G| / 2^k.
std::vector<mpz_class> cubulation_counts(const SimplicialComplex& L, std::uint64_t group_order);

/// P_L = 𝒰((Z/2)^{L^0}, K_L), coarsely cubulated.
CubeComplex davis_pl(const SimplicialComplex& L, std::size_t max_cells = max_cells_from_env());

/// Connected abelian cover with deck group Π Z/p^{k_i}, classified by the
/// first r integral cocycles of a basis of H^1 (spanning tree from cell 0).
/// Throws RankTooLarge when r exceeds the rank of H_1(X; Z)/torsion,
/// Disconnected when X is not connected.
CubeComplex abelian_p_cover(const CubeComplex& X, std::uint64_t p, const std::vector<int>& exponents,
                            std::size_t max_cells = max_cells_from_env());

/// Rank of H^1(X; Z) as computed by the cover builder (number of basis cocycles).
std::size_t first_betti_integral(const CubeComplex& X);

/// Σ over σ ∈ L ∪ {∅} of (-1/2)^|σ|.
mpq_class euler_l2(const SimplicialComplex& L);

}  // namespace l2lab
