#pragma once

// Vertex label grammar.
//
//   label := atom | "[" label ("," label)+ "]"
//   atom  := one or more characters other than '[', ']', ',' and whitespace
//
// A bracketed label names the barycenter (or edge midpoint) of the simplex
// spanned by its children. Nesting records the order in which subdivisions
// created the vertex, and flattening recovers the original simplex.

#include <string>
#include <vector>

namespace l2lab {

using VertexId = std::string;

bool is_well_formed_label(const std::string& label);

/// Top-level children of a bracketed label; empty for an atom.
std::vector<std::string> label_children(const std::string& label);

/// Sorted, deduplicated atoms occurring anywhere in the label.
std::vector<std::string> flatten_label(const std::string& label);

/// Canonical name of the barycenter of a simplex given by its (sorted) vertex labels.
/// A single vertex is its own barycenter.
std::string barycenter_label(const std::vector<std::string>& sorted_vertices);

/// Name of the midpoint created when subdividing the edge {u, v}.
std::string midpoint_label(const std::string& u, const std::string& v);

}  // namespace l2lab
