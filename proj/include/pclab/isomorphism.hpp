#pragma once
// Isomorphism up to relabelling: precontact algebras by atom permutation, 2-precontact
// spaces by point bijection (homeomorphism, X0 onto X0', R preserved both ways).

#include <optional>
#include <vector>

#include "pclab/precontact.hpp"
#include "pclab/structures.hpp"
#include "pclab/topology.hpp"

namespace pclab {

/// Lexicographically least row vector over all atom relabellings; capped at
/// Budget::max_sweep_atoms.
std::vector<Mask> canonical_kernel_form(const RelationKernel& k);

/// perm[p] = image of atom p, with (p,q) ∈ K ⟺ (perm[p], perm[q]) ∈ K'.
std::optional<std::vector<int>> pca_isomorphism(const PrecontactAlgebra& a, const PrecontactAlgebra& b);
bool are_isomorphic(const PrecontactAlgebra& a, const PrecontactAlgebra& b);
/// The Boolean isomorphism a → b induced by an atom permutation.
BooleanHom hom_from_permutation(const PrecontactAlgebra& a, const PrecontactAlgebra& b, const std::vector<int>& perm);

struct PointTriple {
  const FiniteSpace* space;
  PointSet x0;
  const PointRelation* r;
};

/// map[x] = image of x; nullopt if no bijection is a homeomorphism carrying X0 onto Y0
/// and preserving R in both directions. An empty relation on both sides reduces this to
/// isomorphism of topological pairs.
std::optional<std::vector<int>> point_isomorphism(const PointTriple& a, const PointTriple& b);
std::optional<std::vector<int>> pcs_isomorphism(const TwoPrecontactSpace& a, const TwoPrecontactSpace& b);
std::optional<std::vector<int>> pair_isomorphism(const TopologicalPair& a, const TopologicalPair& b);

}  // namespace pclab
