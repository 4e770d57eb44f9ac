#include "pclab/boolean.hpp"

#include <algorithm>
#include <string>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"

namespace pclab {

BooleanAlgebra::BooleanAlgebra(int atom_count) : atoms_(atom_count) {
  require_atoms(atom_count, Budget::current().max_atoms, "Boolean algebra");
}

void BooleanAlgebra::require(Mask a) const {
  if (!contains(a))
    throw DomainError("element " + format_indices(a) + " is not in the algebra with " +
                      std::to_string(atoms_) + " atoms");
}

BooleanAlgebra make_algebra(int atom_count) { return BooleanAlgebra(atom_count); }

Element::Element(BooleanAlgebra algebra, Mask atoms) : algebra_(algebra), atoms_(atoms) {
  algebra_.require(atoms);
}

namespace {

void same_algebra(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra())
    throw DomainError("operands belong to different algebras (" +
                      std::to_string(a.algebra().atom_count()) + " vs " +
                      std::to_string(b.algebra().atom_count()) + " atoms)");
}

}  // namespace

Element join(const Element& a, const Element& b) {
  same_algebra(a, b);
  return Element(a.algebra(), a.atoms() | b.atoms());
}

Element meet(const Element& a, const Element& b) {
  same_algebra(a, b);
  return Element(a.algebra(), a.atoms() & b.atoms());
}

Element complement(const Element& a) { return Element(a.algebra(), a.algebra().complement(a.atoms())); }

bool leq(const Element& a, const Element& b) {
  same_algebra(a, b);
  return (a.atoms() & ~b.atoms()) == 0;
}

const char* family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::filter: return "filter";
    case FamilyKind::ultrafilter: return "ultrafilter";
    case FamilyKind::grill: return "grill";
    case FamilyKind::clan_candidate: return "clan-candidate";
    case FamilyKind::arbitrary: return "arbitrary";
  }
  return "arbitrary";
}

FamilyKind family_kind_from_name(const std::string& name) {
  for (FamilyKind k : {FamilyKind::filter, FamilyKind::ultrafilter, FamilyKind::grill,
                       FamilyKind::clan_candidate, FamilyKind::arbitrary})
    if (name == family_kind_name(k)) return k;
  throw DomainError("unknown family kind '" + name + "'");
}

ElementFamily::ElementFamily(BooleanAlgebra alg, FamilyKind k, std::vector<Mask> m)
    : algebra(alg), kind(k), members(std::move(m)) {
  for (Mask a : members) algebra.require(a);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool ElementFamily::contains(Mask a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

bool ElementFamily::subset_of(const ElementFamily& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

ElementFamily principal_ultrafilter(const BooleanAlgebra& algebra, int atom) {
  if (atom < 0 || atom >= algebra.atom_count())
    throw DomainError("atom " + std::to_string(atom) + " out of range");
  require_atoms(algebra.atom_count(), Budget::current().max_atoms, "ultrafilter");
  std::vector<Mask> members;
  members.reserve(algebra.size() / 2);
  for (std::uint64_t a = 0; a < algebra.size(); ++a)
    if (has_bit(static_cast<Mask>(a), atom)) members.push_back(static_cast<Mask>(a));
  return ElementFamily(algebra, FamilyKind::ultrafilter, std::move(members));
}

std::vector<ElementFamily> ultrafilters(const BooleanAlgebra& algebra) {
  std::vector<ElementFamily> out;
  for (int p = 0; p < algebra.atom_count(); ++p) out.push_back(principal_ultrafilter(algebra, p));
  return out;
}

std::vector<int> stone_map(const BooleanAlgebra& algebra, Mask a) {
  algebra.require(a);
  return bit_indices(a);
}

ElementFamily grill_of_support(const BooleanAlgebra& algebra, Mask support) {
  algebra.require(support);
  std::vector<Mask> members;
  for (std::uint64_t a = 0; a < algebra.size(); ++a)
    if ((static_cast<Mask>(a) & support) != 0) members.push_back(static_cast<Mask>(a));
  return ElementFamily(algebra, FamilyKind::grill, std::move(members));
}

namespace {

struct Indicator {
  std::vector<char> in;
  explicit Indicator(const BooleanAlgebra& algebra, std::span<const Mask> members)
      : in(algebra.size(), 0) {
    for (Mask a : members) {
      algebra.require(a);
      in[a] = 1;
    }
  }
  bool operator()(Mask a) const { return in[a] != 0; }
};

bool upward_closed(const BooleanAlgebra& algebra, const Indicator& in, std::span<const Mask> members) {
  for (Mask a : members)
    for (int p = 0; p < algebra.atom_count(); ++p)
      if (!in(a | bit<Mask>(p))) return false;
  return true;
}

bool is_filter(const BooleanAlgebra& algebra, const Indicator& in, std::span<const Mask> members) {
  if (!in(algebra.top()) || in(0)) return false;
  if (!upward_closed(algebra, in, members)) return false;
  for (Mask a : members)
    for (Mask b : members)
      if (!in(a & b)) return false;
  return true;
}

bool is_grill(const BooleanAlgebra& algebra, const Indicator& in, std::span<const Mask> members) {
  if (members.empty() || in(0)) return false;
  if (!upward_closed(algebra, in, members)) return false;
  const std::uint64_t size = algebra.size();
  for (std::uint64_t a = 0; a < size; ++a)
    for (std::uint64_t b = 0; b < size; ++b)
      if (in(static_cast<Mask>(a | b)) && !in(static_cast<Mask>(a)) && !in(static_cast<Mask>(b)))
        return false;
  return true;
}

}  // namespace

bool is_family(FamilyKind kind, const BooleanAlgebra& algebra, std::span<const Mask> members) {
  require_atoms(algebra.atom_count(), Budget::current().max_sweep_atoms, "family check");
  const Indicator in(algebra, members);
  switch (kind) {
    case FamilyKind::filter: return is_filter(algebra, in, members);
    case FamilyKind::ultrafilter: {
      if (!is_filter(algebra, in, members)) return false;
      for (std::uint64_t a = 0; a < algebra.size(); ++a)
        if (!in(static_cast<Mask>(a)) && !in(algebra.complement(static_cast<Mask>(a)))) return false;
      return true;
    }
    case FamilyKind::grill:
    case FamilyKind::clan_candidate: return is_grill(algebra, in, members);
    case FamilyKind::arbitrary: return true;
  }
  return false;
}

std::vector<ElementFamily> grills(const BooleanAlgebra& algebra) {
  require_atoms(algebra.atom_count(), Budget::current().max_exhaustive_atoms, "grill enumeration");
  std::vector<Mask> supports;
  for (Mask s = 1; s <= algebra.top() && algebra.top() != 0; ++s) supports.push_back(s);
  std::sort(supports.begin(), supports.end(), support_less<Mask>);
  std::vector<ElementFamily> out;
  for (Mask s : supports) out.push_back(grill_of_support(algebra, s));
  return out;
}

ElementFamily grill_lemma_witness(const ElementFamily& filter, const ElementFamily& grill) {
  if (filter.algebra != grill.algebra) throw DomainError("filter and grill live in different algebras");
  if (!is_family(FamilyKind::filter, filter.algebra, filter.members))
    throw DomainError("first argument is not a filter");
  if (!is_family(FamilyKind::grill, grill.algebra, grill.members))
    throw DomainError("second argument is not a grill");
  if (!filter.subset_of(grill)) throw PreconditionError("filter is not contained in the grill");
  const BooleanAlgebra& algebra = filter.algebra;
  for (int p = 0; p < algebra.atom_count(); ++p) {
    const bool below = std::all_of(filter.members.begin(), filter.members.end(),
                                   [&](Mask a) { return has_bit(a, p); });
    if (!below) continue;
    ElementFamily u = principal_ultrafilter(algebra, p);
    if (u.subset_of(grill)) return u;
  }
  throw PreconditionError("no ultrafilter between filter and grill");  // unreachable for valid input
}

BooleanHom::BooleanHom(BooleanAlgebra source, BooleanAlgebra target, std::vector<int> atom_map)
    : source_(source), target_(target), atom_map_(std::move(atom_map)) {
  if (static_cast<int>(atom_map_.size()) != target_.atom_count())
    throw DomainError("atom map must be total on the target's " +
                      std::to_string(target_.atom_count()) + " atoms");
  for (int s : atom_map_)
    if (s < 0 || s >= source_.atom_count())
      throw DomainError("atom map value " + std::to_string(s) + " out of range");
}

BooleanHom BooleanHom::identity(const BooleanAlgebra& algebra) {
  std::vector<int> m(algebra.atom_count());
  for (int i = 0; i < algebra.atom_count(); ++i) m[i] = i;
  return BooleanHom(algebra, algebra, std::move(m));
}

Mask BooleanHom::apply(Mask a) const {
  source_.require(a);
  Mask out = 0;
  for (int q = 0; q < target_.atom_count(); ++q)
    if (has_bit(a, atom_map_[q])) out |= bit<Mask>(q);
  return out;
}

BooleanHom hom_from_atom_map(const BooleanAlgebra& source, const BooleanAlgebra& target,
                             std::vector<int> atom_map) {
  return BooleanHom(source, target, std::move(atom_map));
}

Element hom_apply(const BooleanHom& h, const Element& a) {
  if (a.algebra() != h.source()) throw DomainError("element is not in the homomorphism's source");
  return Element(h.target(), h.apply(a.atoms()));
}

BooleanHom compose(const BooleanHom& second, const BooleanHom& first) {
  if (first.target() != second.source()) throw DomainError("homomorphisms are not composable");
  std::vector<int> m(second.target().atom_count());
  for (int c = 0; c < second.target().atom_count(); ++c) m[c] = first.atom_map()[second.atom_map()[c]];
  return BooleanHom(first.source(), second.target(), std::move(m));
}

}  // namespace pclab
