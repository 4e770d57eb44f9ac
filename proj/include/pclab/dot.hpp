#pragma once
// Graphviz DOT export. Edge x -> y (solid) iff x ∈ cl{y}, x ≠ y; R edges dashed; points
// of X0 double-circled. Output is deterministic.

#include <string>

#include "pclab/adjacency.hpp"
#include "pclab/structures.hpp"
#include "pclab/topology.hpp"

namespace pclab {

std::string to_dot(const FiniteSpace& x);
std::string to_dot(const TopologicalPair& p);
std::string to_dot(const TwoPrecontactSpace& s);
/// The digraph of R only.
std::string to_dot(const AdjacencySpace& a);

}  // namespace pclab
