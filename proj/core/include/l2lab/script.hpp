#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "l2lab/complex.hpp"

namespace l2lab {

/// One edge subdivision, named by the endpoint labels current at that step.
struct SubdivisionStep {
  VertexId u;
  VertexId v;
  VertexId new_vertex() const { return midpoint_label(u, v); }
  bool operator==(const SubdivisionStep&) const = default;
};

/// The pair (L, K) a relative script was generated for; enables the
/// checks of conditions (i) and (ii) during verification.
struct RelativeMeta {
  SimplicialComplex ambient;
  SimplicialComplex sub;
};

struct SubdivisionScript {
  SimplicialComplex source;
  std::vector<SubdivisionStep> steps;
  std::optional<SimplicialComplex> claimed_target;
  std::optional<RelativeMeta> relative;
};

/// Replays the steps. Throws StepEdgeMissing naming the first bad step.
SimplicialComplex apply_script(const SubdivisionScript& script);

struct ScriptReport {
  bool replay_ok = false;
  std::optional<std::size_t> failed_step;
  std::size_t steps_applied = 0;
  std::optional<bool> target_ok;     // set when a claimed target is present
  std::optional<bool> condition_i;   // set when relative metadata is present
  std::optional<bool> condition_ii;
  std::vector<std::string> messages;

  bool passed() const {
    return replay_ok && target_ok.value_or(true) && condition_i.value_or(true) && condition_ii.value_or(true);
  }
};

/// Replay, then isomorphism against the claimed target, then (for relative
/// scripts) conditions (i) and (ii). Any order satisfying them is accepted.
ScriptReport verify_script(const SubdivisionScript& script, std::size_t max_iso_vertices = 64);

/// L -> b(L, K) by edge subdivisions. Requires K flag.
SubdivisionScript script_relative(const SimplicialComplex& L, const SimplicialComplex& K);

/// c·b(L, K) -> b(cL, cK), subdividing edges from the apex to barycenters of
/// L \ K by decreasing dimension.
SubdivisionScript script_cone(const SimplicialComplex& cL, const SimplicialComplex& cK, const VertexId& apex);

/// b(L, K) -> b(L, J) for J ⊆ K ⊆ L with J flag.
SubdivisionScript script_twosubs(const SimplicialComplex& L, const SimplicialComplex& K,
                                 const SimplicialComplex& J);

/// O^n -> b(∂Δ^n, K), where ∂Δ^n has vertices "0".."n". The source octahedron
/// is labelled by the recursion: each suspension pairs a vertex v with the
/// barycenter of the opposite facet.
SubdivisionScript script_octahedron(int n, const SimplicialComplex& K);

}  // namespace l2lab
