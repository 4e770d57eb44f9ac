#pragma once
// Finite Boolean algebras as powersets of atoms. An element is the set of atoms below
// it, so join/meet/complement are union/intersection/complement of atom masks and the
// carrier (2^n elements) is never stored.

#include <cstdint>
#include <span>
#include <vector>

#include "pclab/bits.hpp"

namespace pclab {

class BooleanAlgebra {
 public:
  /// The degenerate algebra, 0 = 1.
  BooleanAlgebra() = default;
  /// Throws CapacityError above Budget::max_atoms.
  explicit BooleanAlgebra(int atom_count);

  int atom_count() const noexcept { return atoms_; }
  Mask top() const noexcept { return low_bits<Mask>(atoms_); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << atoms_; }
  bool is_degenerate() const noexcept { return atoms_ == 0; }
  bool contains(Mask a) const noexcept { return (a & ~top()) == 0; }
  /// Throws DomainError if a is not an element.
  void require(Mask a) const;

  Mask complement(Mask a) const noexcept { return top() & ~a; }

  friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;

 private:
  int atoms_ = 0;
};

BooleanAlgebra make_algebra(int atom_count);

/// An element tied to its algebra; mixed-algebra operations throw DomainError.
class Element {
 public:
  Element(BooleanAlgebra algebra, Mask atoms);

  const BooleanAlgebra& algebra() const noexcept { return algebra_; }
  Mask atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return atoms_ == 0; }
  bool is_one() const noexcept { return atoms_ == algebra_.top(); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  BooleanAlgebra algebra_;
  Mask atoms_ = 0;
};

Element join(const Element& a, const Element& b);
Element meet(const Element& a, const Element& b);
Element complement(const Element& a);
bool leq(const Element& a, const Element& b);

inline Element operator|(const Element& a, const Element& b) { return join(a, b); }
inline Element operator&(const Element& a, const Element& b) { return meet(a, b); }
inline Element operator~(const Element& a) { return complement(a); }

enum class FamilyKind { filter, ultrafilter, grill, clan_candidate, arbitrary };

const char* family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

/// A set of elements, kept sorted by mask.
struct ElementFamily {
  BooleanAlgebra algebra;
  FamilyKind kind = FamilyKind::arbitrary;
  std::vector<Mask> members;

  ElementFamily() = default;
  ElementFamily(BooleanAlgebra algebra, FamilyKind kind, std::vector<Mask> members);

  bool contains(Mask a) const;
  bool subset_of(const ElementFamily& other) const;
  friend bool operator==(const ElementFamily&, const ElementFamily&) = default;
};

/// ↑p = { a : p ∈ a }.
ElementFamily principal_ultrafilter(const BooleanAlgebra& algebra, int atom);
/// Ult(B) ordered by atom index.
std::vector<ElementFamily> ultrafilters(const BooleanAlgebra& algebra);
/// Indices of the ultrafilters containing a (the Stone map s_B(a)).
std::vector<int> stone_map(const BooleanAlgebra& algebra, Mask a);
/// Union of the ultrafilters ↑p, p ∈ support: { a : a ∩ support ≠ ∅ }.
ElementFamily grill_of_support(const BooleanAlgebra& algebra, Mask support);

/// Exhaustive membership check for the kinds filter, ultrafilter and grill; clan_candidate
/// is checked as a grill and arbitrary always holds.
bool is_family(FamilyKind kind, const BooleanAlgebra& algebra, std::span<const Mask> members);

/// All grills, ordered by their ultrafilter support in canonical order; 2^n - 1 of them.
std::vector<ElementFamily> grills(const BooleanAlgebra& algebra);

/// Ultrafilter U with F ⊆ U ⊆ G, smallest eligible atom. Throws PreconditionError if
/// F ⊄ G and DomainError if the inputs are not a filter and a grill.
ElementFamily grill_lemma_witness(const ElementFamily& filter, const ElementFamily& grill);

/// Boolean homomorphism between finite algebras, given dually by a map from the
/// target's atoms to the source's atoms: apply(a) = { q : atom_map[q] ∈ a }.
class BooleanHom {
 public:
  BooleanHom(BooleanAlgebra source, BooleanAlgebra target, std::vector<int> atom_map);
  static BooleanHom identity(const BooleanAlgebra& algebra);

  const BooleanAlgebra& source() const noexcept { return source_; }
  const BooleanAlgebra& target() const noexcept { return target_; }
  const std::vector<int>& atom_map() const noexcept { return atom_map_; }

  Mask apply(Mask a) const;

  friend bool operator==(const BooleanHom&, const BooleanHom&) = default;

 private:
  BooleanAlgebra source_;
  BooleanAlgebra target_;
  std::vector<int> atom_map_;
};

BooleanHom hom_from_atom_map(const BooleanAlgebra& source, const BooleanAlgebra& target,
                             std::vector<int> atom_map);
Element hom_apply(const BooleanHom& h, const Element& a);
/// second ∘ first
BooleanHom compose(const BooleanHom& second, const BooleanHom& first);

}  // namespace pclab
