#pragma once
// Adjacency spaces (W, R), their precontact algebras (2^W, C_R), and the canonical
// adjacency space of a precontact algebra. Ultrafilters of a finite algebra are the
// principal ones ↑p, so they are identified with atoms throughout.

#include <optional>
#include <string>
#include <vector>

#include "pclab/precontact.hpp"
#include "pclab/report.hpp"
#include "pclab/topology.hpp"

namespace pclab {

struct AdjacencySpace {
  std::vector<std::string> cells;
  /// rows over cell indices
  PointRelation r;
  std::optional<FiniteSpace> topology;

  int size() const { return static_cast<int>(cells.size()); }
  bool related(int x, int y) const { return has_bit(r[x], y); }
};

/// Throws DomainError on an empty cell set or out-of-range pairs.
AdjacencySpace make_adjacency(std::vector<std::string> cells, const std::vector<std::pair<int, int>>& pairs,
                              std::optional<FiniteSpace> topology = std::nullopt);
AdjacencySpace make_adjacency(int cells, const std::vector<std::pair<int, int>>& pairs);

/// x R♭ y iff x R y or y R x or x = y.
AdjacencySpace r_flat(const AdjacencySpace& a);

/// (2^W, C_R), atoms = cells; with blocks, the subalgebra they generate.
PrecontactAlgebra contact_from_adjacency(const AdjacencySpace& a);
PrecontactAlgebra contact_from_adjacency(const AdjacencySpace& a, const std::vector<Mask>& blocks);

bool is_reflexive(const PointRelation& r, PointSet domain);
bool is_symmetric(const PointRelation& r);
bool is_transitive(const PointRelation& r);
/// Undirected connectivity of R ∪ R⁻¹ over the domain.
bool is_zigzag_connected(const PointRelation& r, PointSet domain);
/// The literal reading: every x ≠ y has a directed R-path x→y or y→x.
bool is_path_connected_literally(const PointRelation& r, PointSet domain);

struct Prop25Report {
  bool reflexive_symmetric = false;
  bool contact = false;
  bool transitive = false;
  bool ctr = false;
  bool connected = false;
  bool connected_literal = false;
  bool ccon = false;
  /// R reflexive and symmetric ⟹ C_R = (C_R)^# = C_{R♭}
  bool sharp_and_flat_agree = true;

  bool is_contact_iff() const { return reflexive_symmetric == contact; }
  bool ctr_iff() const { return transitive == ctr; }
  bool ccon_iff() const { return connected == ccon; }
};

Prop25Report prop25_report(const AdjacencySpace& a);

struct CanonicalAdjacency {
  PrecontactAlgebra source;
  /// cells u0..u(n-1) (u_p = ↑p), discrete topology
  AdjacencySpace space;
};

/// Throws DomainError on the degenerate algebra.
CanonicalAdjacency canonical_adjacency(const PrecontactAlgebra& a);

/// R is closed in X×X: (x,y) ∈ R, x' ∈ cl{x}, y' ∈ cl{y} ⟹ (x',y') ∈ R.
bool is_closed_relation(const PointRelation& r, const FiniteSpace& x);
/// A pair of R whose product closure leaves R, if any.
std::optional<std::pair<int, int>> closed_relation_gap(const PointRelation& r, const FiniteSpace& x);

/// s_B is a PCA-isomorphism onto (CO(S(B)), C_{R_B}) and Cref/Csym/Ctr match
/// reflexive/symmetric/transitive R_B.
DualityReport representation_check(const PrecontactAlgebra& a);

PointRelation relation_from_kernel(const RelationKernel& k);
std::string format_relation(const PointRelation& r, const std::vector<std::string>& names);

}  // namespace pclab
