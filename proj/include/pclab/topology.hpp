#pragma once
// Finite topological spaces.
//
// A finite space is Alexandrov: every point has a smallest open neighbourhood O_x and a
// closure cl{x}, and x ∈ cl{y} is a preorder (specialization). Closed sets are exactly
// the down-sets of that preorder, so a space is stored as its point closures and the
// (possibly huge) closed-set family is enumerated only on request.

#include <optional>
#include <string>
#include <vector>

#include "pclab/boolean.hpp"
#include "pclab/precontact.hpp"

namespace pclab {

/// rows[x] = { y : x R y }, indexed by the points of an ambient space.
using PointRelation = std::vector<PointSet>;

class FiniteSpace {
 public:
  FiniteSpace() = default;
  /// Throws DomainError unless closures[x] ∋ x and y ∈ closures[x] ⟹ closures[y] ⊆ closures[x].
  FiniteSpace(std::vector<std::string> names, std::vector<PointSet> closures);
  /// Points named "0", "1", ...
  static FiniteSpace from_closures(std::vector<PointSet> closures);
  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);

  int size() const noexcept { return static_cast<int>(closures_.size()); }
  PointSet all() const noexcept { return low_bits<PointSet>(size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int x) const { return names_[x]; }
  std::optional<int> index_of(const std::string& name) const;
  void require(PointSet m) const;

  /// cl{x}
  PointSet point_closure(int x) const { return closures_[x]; }
  const std::vector<PointSet>& point_closures() const noexcept { return closures_; }
  /// O_x = { y : x ∈ cl{y} }
  PointSet min_open(int x) const { return opens_[x]; }

  PointSet closure(PointSet m) const;
  PointSet interior(PointSet m) const;
  bool is_closed(PointSet m) const { return closure(m) == m; }
  bool is_open(PointSet m) const { return interior(m) == m; }
  bool is_regular_closed(PointSet m) const { return closure(interior(m)) == m; }

  /// Closure and interior inside the subspace Y.
  PointSet closure_in(PointSet y, PointSet m) const { return closure(m) & y; }
  PointSet interior_in(PointSet y, PointSet m) const { return y & ~closure_in(y, y & ~m); }

  /// Every closed set, ascending; capped at Budget::max_bruteforce_points.
  std::vector<PointSet> closed_sets() const;
  std::vector<PointSet> open_sets() const;

  /// Connected components of the subspace Y, ordered by smallest point.
  std::vector<PointSet> components(PointSet y) const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<PointSet> closures_;
  std::vector<PointSet> opens_;
};

/// cl{x} = ∩{ base members containing x } (the full set is always a closed set).
FiniteSpace space_from_closed_base(std::vector<std::string> names, const std::vector<PointSet>& base);
FiniteSpace space_from_closed_base(int points, const std::vector<PointSet>& base);

PointSet closure(const FiniteSpace& x, PointSet m);
PointSet interior(const FiniteSpace& x, PointSet m);

struct SpacePredicates {
  bool is_t0 = false;
  bool is_semiregular = false;
  bool is_connected = false;
  bool is_compact = true;
  bool is_hausdorff = false;
  bool is_zero_dimensional = false;
  bool is_stone = false;
  bool is_extremally_disconnected = false;
};

SpacePredicates space_predicates(const FiniteSpace& x);
bool is_t0(const FiniteSpace& x);
bool is_connected(const FiniteSpace& x);
bool is_discrete(const FiniteSpace& x);
bool is_semiregular(const FiniteSpace& x);
bool is_extremally_disconnected(const FiniteSpace& x);
/// The subspace Y as a space of its own, points renumbered in increasing order.
FiniteSpace subspace(const FiniteSpace& x, PointSet y);

/// A finite Boolean algebra of regular closed sets, given by its atoms; the element with
/// atom mask m is the union of those atoms. Joins are unions, F·G = cl(int(F∩G)),
/// F* = cl(X∖F), and the contact is F ∩ G ≠ ∅.
struct RegionAlgebra {
  int points = 0;
  std::vector<PointSet> atoms;

  BooleanAlgebra algebra() const { return BooleanAlgebra(static_cast<int>(atoms.size())); }
  PointSet region(Mask m) const;
  /// Mask of the atoms inside F, if F is a member.
  std::optional<Mask> element_of(PointSet f) const;
  std::vector<PointSet> members() const;
  /// (i,j) iff atom i meets atom j.
  RelationKernel contact_kernel() const;
  PrecontactAlgebra contact_algebra() const;
  /// Atoms as a sorted set, for comparing two algebras on the same space.
  std::vector<PointSet> sorted_atoms() const;
};

/// RC(X); atoms are the closures of the maximal specialization classes.
RegionAlgebra rc_algebra(const FiniteSpace& x);

struct TopologicalPair {
  FiniteSpace space;
  PointSet subset = 0;
};

bool is_dense(const TopologicalPair& p);
/// Atoms of CO(X0): the components of X0.
std::vector<PointSet> co_atoms(const TopologicalPair& p);
/// RC(X,X0) = { cl_X(A) : A ∈ CO(X0) }, atom i = cl_X(component i).
RegionAlgebra rc_pair_algebra(const TopologicalPair& p);
/// δ on CO(X0): (i,j) iff cl(K_i) ∩ cl(K_j) ≠ ∅; identical to C_(X,X0) through e.
RelationKernel delta_kernel(const TopologicalPair& p);

/// r(F) = F ∩ X0 and e(G) = cl_X(G). Throw DomainError on non-regular-closed input.
PointSet r_map(const TopologicalPair& p, PointSet f);
PointSet e_map(const TopologicalPair& p, PointSet g);

/// σ_x^B as its clan support { i : x ∈ atom i }.
Mask sigma_support(const RegionAlgebra& b, int x);
/// σ_x^B and ν_x^B = { F ∈ B : x ∈ int F } as element families of B's algebra.
ElementFamily sigma(const RegionAlgebra& b, int x);
ElementFamily nu(const FiniteSpace& space, const RegionAlgebra& b, int x);
/// Γ_{x,X0} = { F ∈ CO(X0) : x ∈ cl_X(F) } as a support over the components of X0.
Mask gamma_support(const TopologicalPair& p, int x);

/// x ∈ cl U ∩ cl V ⟹ x ∈ cl(U ∩ V) for all open U, V; decided on minimal neighbourhoods.
bool is_u_point(const FiniteSpace& x, int point);
PointSet u_points(const FiniteSpace& x);

struct MereotopologicalPair {
  FiniteSpace space;
  RegionAlgebra algebra;
};

/// Throws DomainError unless members form a Boolean subalgebra of RC(X).
MereotopologicalPair make_mereotopological_pair(const FiniteSpace& x, const std::vector<PointSet>& members);
MereotopologicalPair rc_mereotopological_pair(const FiniteSpace& x);

/// x ∈ F ∩ G ⟹ x ∈ cl(int(F ∩ G)) for all members F, G.
bool u_point_of_pair(const MereotopologicalPair& m, int x);
PointSet u_points_of_pair(const MereotopologicalPair& m);

/// Every closed set is an intersection of members of B.
bool is_closed_base(const FiniteSpace& x, const RegionAlgebra& b);

/// Semiregular T0 space whose RC(X) clans are all point traces σ_x.
bool is_c_semiregular(const FiniteSpace& x);

/// x ≤ y ⟹ f(x) ≤ f(y) in the specialization preorders.
bool is_continuous(const FiniteSpace& from, const FiniteSpace& to, const std::vector<int>& f);
PointSet preimage(const std::vector<int>& f, PointSet m);
PointSet image(const std::vector<int>& f, PointSet m);

/// "{a,b}" with the space's point names.
std::string format_points(const FiniteSpace& x, PointSet m);

}  // namespace pclab
