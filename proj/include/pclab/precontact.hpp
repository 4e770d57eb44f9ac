#pragma once
// Precontact relations on finite Boolean algebras.
//
// (C0) and (C+) force a C b to depend only on the atoms below a and b, so a relation is
// stored as its atom-pair kernel K: a C b iff some (p,q) in K has p in a and q in b.
// Kernels are kept as rows, rows[p] = { q : (p,q) in K }.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pclab/boolean.hpp"

namespace pclab {

using AtomPair = std::pair<int, int>;

class RelationKernel {
 public:
  RelationKernel() = default;
  /// Empty kernel.
  explicit RelationKernel(BooleanAlgebra algebra);
  /// Throws DomainError on out-of-range atoms.
  RelationKernel(BooleanAlgebra algebra, const std::vector<AtomPair>& pairs);
  static RelationKernel from_rows(BooleanAlgebra algebra, std::vector<Mask> rows);

  const BooleanAlgebra& algebra() const noexcept { return algebra_; }
  int atom_count() const noexcept { return algebra_.atom_count(); }
  const std::vector<Mask>& rows() const noexcept { return rows_; }
  Mask row(int p) const { return rows_[p]; }
  bool contains(int p, int q) const { return has_bit(rows_[p], q); }
  /// Row-major sorted pair list.
  std::vector<AtomPair> pairs() const;
  int pair_count() const;

  /// Atoms related to some atom of a.
  Mask image(Mask a) const;
  bool holds(Mask a, Mask b) const;

  RelationKernel transpose() const;
  bool subset_of(const RelationKernel& other) const;
  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;

  friend bool operator==(const RelationKernel&, const RelationKernel&) = default;

 private:
  BooleanAlgebra algebra_;
  std::vector<Mask> rows_;
};

bool holds(const RelationKernel& c, Mask a, Mask b);

/// Element-level relation on an algebra of at most 6 atoms; rows[a] has bit b set iff (a,b).
struct ElementRelation {
  BooleanAlgebra algebra;
  std::vector<std::uint64_t> rows;

  ElementRelation() = default;
  explicit ElementRelation(BooleanAlgebra algebra);

  bool test(Mask a, Mask b) const { return ((rows[a] >> b) & 1u) != 0; }
  void set(Mask a, Mask b, bool value = true);
  std::size_t size() const;
  friend bool operator==(const ElementRelation&, const ElementRelation&) = default;
};

/// Arbitrary element pairs, as read from input.
struct RawRelation {
  BooleanAlgebra algebra;
  std::vector<std::pair<Mask, Mask>> pairs;
};

/// a C b over the whole carrier.
ElementRelation expand(const RelationKernel& c);
ElementRelation to_element_relation(const RawRelation& raw);

/// Kernel reproducing R. Throws AxiomViolation("C0", "(a,b)") or
/// AxiomViolation("C+", ...) naming the first failing instance.
RelationKernel normalize_relation(const RawRelation& raw);
RelationKernel normalize_relation(const ElementRelation& relation);

struct AxiomReport {
  bool cref = false;
  bool csym = false;
  bool ctr = false;
  bool ctr_sharp = false;
  bool ccon = false;
  bool c6 = false;
  bool is_contact = false;
  bool is_normal_contact = false;
  /// (axiom, witness) for every failing axiom, in the order above.
  std::vector<std::pair<std::string, std::string>> witnesses;

  const std::string* witness(const std::string& axiom) const;
};

/// Table T[a] = image(a) for every element; size 2^n.
std::vector<Mask> image_table(const RelationKernel& c);

/// Exhaustive sweeps over the carrier (capped at Budget::max_sweep_atoms).
AxiomReport compute_axiom_report(const RelationKernel& c);

class PrecontactAlgebra {
 public:
  PrecontactAlgebra() = default;
  explicit PrecontactAlgebra(RelationKernel kernel);

  const BooleanAlgebra& algebra() const noexcept { return kernel_.algebra(); }
  int atom_count() const noexcept { return kernel_.atom_count(); }
  const RelationKernel& kernel() const noexcept { return kernel_; }
  bool holds(Mask a, Mask b) const { return kernel_.holds(a, b); }
  /// a ≪ b iff not a C b*.
  bool ll(Mask a, Mask b) const;

  /// Computed on first use and shared between copies.
  const AxiomReport& report() const;

  friend bool operator==(const PrecontactAlgebra& x, const PrecontactAlgebra& y) {
    return x.kernel_ == y.kernel_;
  }

 private:
  struct Cache;
  RelationKernel kernel_;
  std::shared_ptr<Cache> cache_;
};

const AxiomReport& axiom_report(const PrecontactAlgebra& a);
bool ll(const PrecontactAlgebra& a, Mask x, Mask y);

/// Kernel of C#: symmetric closure plus the diagonal.
PrecontactAlgebra c_sharp(const PrecontactAlgebra& a);
RelationKernel sharp_kernel(const RelationKernel& k);

PrecontactAlgebra rho_s(const BooleanAlgebra& b);
PrecontactAlgebra rho_l(const BooleanAlgebra& b);

/// The ≪ relation of a precontact algebra as an element relation.
ElementRelation ll_relation(const PrecontactAlgebra& a);

struct LlAxiomReport {
  bool ll1 = false;
  bool ll2 = false;
  bool ll3 = false;
  bool ll4 = false;
  bool ll5 = false;
  bool ll6 = false;
  bool ll7 = false;
  bool ll2p = false;
  bool ll4p = false;
  std::vector<std::pair<std::string, std::string>> witnesses;

  /// (≪2), (≪2'), (≪3), (≪4), (≪4'): the axioms that characterize precontact relations.
  bool precontact_axioms() const { return ll2 && ll2p && ll3 && ll4 && ll4p; }
  const std::string* witness(const std::string& axiom) const;
};

LlAxiomReport ll_axiom_report(const ElementRelation& ll);

/// C from ≪: a C b iff not a ≪ b*. Throws AxiomViolation if the precontact ≪-axioms fail.
RelationKernel relation_from_ll(const ElementRelation& ll);

/// A clan, stored by its support: the clan is { a : a ∩ support ≠ ∅ }.
struct Clan {
  Mask support = 0;
  friend bool operator==(const Clan&, const Clan&) = default;
};

/// All clans (cliques of the C# atom graph), in canonical support order: by size, then value.
std::vector<Clan> clans(const PrecontactAlgebra& a);
std::vector<Mask> clan_supports(const RelationKernel& k);
bool is_clan_support(const RelationKernel& k, Mask support);
/// Element-level check of (Clan1)-(Clan4) on an explicit member list.
bool is_clan(const PrecontactAlgebra& a, std::span<const Mask> members);
/// Members of the clan with the given support.
std::vector<Mask> clan_members(const BooleanAlgebra& b, Mask support);

/// A subalgebra given by a partition of the atoms, and its relation C ∩ A².
struct Restriction {
  PrecontactAlgebra algebra;
  /// Inclusion of the subalgebra into the original algebra.
  BooleanHom embedding;
  std::vector<Mask> blocks;
};

/// Throws DomainError if blocks are empty, overlap or do not cover the atoms.
Restriction restrict_relation(const PrecontactAlgebra& a, const std::vector<Mask>& blocks);
/// Support of Γ ∩ A for the clan with the given support.
Mask restrict_clan(const Restriction& r, Mask support);

/// First kernel pair (q1,q2) of the target whose image under the atom map is not in the
/// source kernel; nullopt iff h is a PCA-morphism.
std::optional<AtomPair> pca_morphism_gap(const BooleanHom& h, const PrecontactAlgebra& source,
                                         const PrecontactAlgebra& target);
/// Throws DomainError if h does not go between the two algebras.
bool is_pca_morphism(const BooleanHom& h, const PrecontactAlgebra& source,
                     const PrecontactAlgebra& target);

class PcaMorphism {
 public:
  /// Throws ValidationError with the failing pair if h is not a PCA-morphism.
  PcaMorphism(BooleanHom hom, PrecontactAlgebra source, PrecontactAlgebra target);

  const BooleanHom& hom() const noexcept { return hom_; }
  const PrecontactAlgebra& source() const noexcept { return source_; }
  const PrecontactAlgebra& target() const noexcept { return target_; }
  Mask apply(Mask a) const { return hom_.apply(a); }

 private:
  BooleanHom hom_;
  PrecontactAlgebra source_;
  PrecontactAlgebra target_;
};

/// second ∘ first
PcaMorphism compose(const PcaMorphism& second, const PcaMorphism& first);

/// "{(0,1),(1,2)}"
std::string format_pairs(const std::vector<AtomPair>& pairs);

}  // namespace pclab
