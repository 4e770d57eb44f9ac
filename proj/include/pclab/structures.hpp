#pragma once
// Composite space structures: 2-precontact spaces (X, X0, R), 2-contact spaces and Stone
// 2-spaces (X, X0), mereotopological spaces (X, B), and the canonical constructions
// linking them to precontact algebras.
//
// CO(X0) of a finite subspace is generated by the components K_i of X0, so clopen sets
// of X0 are handled as masks over components and RC(X, X0) has atoms cl(K_i).

#include <optional>
#include <string>
#include <vector>

#include "pclab/adjacency.hpp"
#include "pclab/precontact.hpp"
#include "pclab/report.hpp"
#include "pclab/topology.hpp"

namespace pclab {

struct TwoPrecontactSpace {
  TopologicalPair pair;
  /// Over the points of X; only pairs inside X0 are meaningful.
  PointRelation r;
  /// Checks "dense", "T0", "PCS1".."PCS5" with witnesses.
  DualityReport validation;

  const FiniteSpace& space() const { return pair.space; }
  PointSet x0() const { return pair.subset; }
  bool valid() const { return validation.passed(); }
};

/// Never throws on axiom failure; throws DomainError if X0 or R leave the space.
TwoPrecontactSpace validate_pcs(const FiniteSpace& x, PointSet x0, const PointRelation& r);

/// C_R on CO(X0): (i,j) iff some x ∈ K_i, y ∈ K_j has x R y.
RelationKernel component_relation(const TopologicalPair& p, const PointRelation& r);

/// (RC(X,X0), C_X) with atoms cl(K_i). Throws ValidationError naming the first failed axiom.
PrecontactAlgebra canonical_pca_of_pcs(const TwoPrecontactSpace& s);
/// The same relation on the regions, without the validity gate.
RelationKernel canonical_relation(const TopologicalPair& p, const PointRelation& r);

struct CanonicalPcs {
  PrecontactAlgebra source;
  /// Clan supports in canonical order; point i is the clan with supports[i].
  std::vector<Mask> supports;
  TwoPrecontactSpace space;

  /// g_B(a) = { Γ : a ∈ Γ }
  PointSet g(Mask a) const;
};

/// Points are clans, closed base { g_B(a) }, X0 = Ult(B), R = R_B. Throws DomainError on
/// the degenerate algebra.
CanonicalPcs canonical_pcs_of_pca(const PrecontactAlgebra& a);

struct TwoContactSpace {
  TopologicalPair pair;
  /// "dense", "CS1".."CS4"
  DualityReport validation;
  bool valid() const { return validation.passed(); }
};

struct StoneTwoSpace {
  TopologicalPair pair;
  /// "dense", "CS1".."CS3", "S2S4"
  DualityReport validation;
  bool valid() const { return validation.passed(); }
};

TwoContactSpace validate_cs(const FiniteSpace& x, PointSet x0);
StoneTwoSpace validate_s2s(const FiniteSpace& x, PointSet x0);

struct CanonicalCs {
  PrecontactAlgebra source;
  std::vector<Mask> supports;
  TwoContactSpace space;
};

/// Throws PreconditionError unless a is a contact algebra.
CanonicalCs canonical_cs_of_ca(const PrecontactAlgebra& a);

struct PairContactRelation {
  PointRelation r;
  /// Reflexive-symmetric relations on X0 making (X, X0, R) a 2-precontact space; nullopt
  /// when X0 is too large to search.
  std::optional<int> candidates_valid;
  bool unique() const { return candidates_valid && *candidates_valid == 1; }
};

/// x R y iff cl(F) ∩ cl(G) ≠ ∅ for all F ∈ u_x, G ∈ u_y (u_x the ultrafilter of CO(X0) at x).
PairContactRelation contact_relation_of_pair(const TwoContactSpace& p);

struct MereocompactReport {
  MereotopologicalPair pair;
  bool is_space = false;  // B is a closed base
  bool is_t0 = false;
  bool is_mereocompact = false;
  /// A clan support of B realized by no σ_x.
  std::optional<Mask> unrealized_clan;
  PointSet u_set = 0;
  /// Filled in for mereocompact T0 pairs.
  bool u_dense = false;
  bool u_stone = false;
  bool rc_matches = false;
  bool sigma_agrees = false;  // x ∈ u(X,B) iff σ_x is an ultrafilter
  std::optional<bool> unique;
  /// Another subset passing the same tests, if any.
  std::optional<PointSet> uniqueness_witness;
  bool cs_valid = false;
};

MereocompactReport mereo_report(const MereotopologicalPair& m);

/// The subsets Y of X with Y dense, Y discrete and RC(X,Y) = B; capped at
/// Budget::max_bruteforce_points.
std::vector<PointSet> dense_stone_subspaces(const FiniteSpace& x, const RegionAlgebra& b);

}  // namespace pclab
