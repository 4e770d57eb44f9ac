#include "pclab/topology.hpp"

#include <algorithm>
#include <bit>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"

namespace pclab {

// ---------------------------------------------------------------- FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::string> names, std::vector<PointSet> closures)
    : names_(std::move(names)), closures_(std::move(closures)) {
  const int n = static_cast<int>(closures_.size());
  require_points(n, Budget::current().max_points, "finite space");
  if (static_cast<int>(names_.size()) != n) throw DomainError("one name per point required");
  const PointSet everything = low_bits<PointSet>(n);
  for (int x = 0; x < n; ++x) {
    if ((closures_[x] & ~everything) != 0)
      throw DomainError("closure of point " + names_[x] + " mentions unknown points");
    if (!has_bit(closures_[x], x)) throw DomainError("closure of point " + names_[x] + " misses the point");
    for_each_bit(closures_[x], [&](int y) {
      if ((closures_[y] & ~closures_[x]) != 0)
        throw DomainError("point closures are not transitive at " + names_[x] + " / " + names_[y]);
    });
  }
  opens_.assign(n, 0);
  for (int y = 0; y < n; ++y) for_each_bit(closures_[y], [&](int x) { opens_[x] |= bit<PointSet>(y); });
}

FiniteSpace FiniteSpace::from_closures(std::vector<PointSet> closures) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < closures.size(); ++i) names.push_back(std::to_string(i));
  return FiniteSpace(std::move(names), std::move(closures));
}

FiniteSpace FiniteSpace::discrete(int n) {
  std::vector<PointSet> c(n);
  for (int i = 0; i < n; ++i) c[i] = bit<PointSet>(i);
  return from_closures(std::move(c));
}

FiniteSpace FiniteSpace::indiscrete(int n) { return from_closures(std::vector<PointSet>(n, low_bits<PointSet>(n))); }

std::optional<int> FiniteSpace::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void FiniteSpace::require(PointSet m) const {
  if ((m & ~all()) != 0) throw DomainError("point set " + format_indices(m) + " is not inside the space");
}

PointSet FiniteSpace::closure(PointSet m) const {
  PointSet out = 0;
  for_each_bit(m & all(), [&](int x) { out |= closures_[x]; });
  return out;
}

PointSet FiniteSpace::interior(PointSet m) const { return all() & ~closure(all() & ~m); }

namespace {

// Down-sets of a preorder given by per-point generators (cl{x} or O_x). Each point not
// yet forced is either excluded for good or included with its generator, so every
// down-set is produced exactly once.
void collect_ideals(const std::vector<PointSet>& gen, int x, PointSet current, PointSet excluded,
                    std::vector<PointSet>& out) {
  if (x == static_cast<int>(gen.size())) {
    out.push_back(current);
    return;
  }
  if (has_bit(current, x)) {
    collect_ideals(gen, x + 1, current, excluded, out);
    return;
  }
  collect_ideals(gen, x + 1, current, excluded | bit<PointSet>(x), out);
  if ((gen[x] & excluded) == 0) collect_ideals(gen, x + 1, current | gen[x], excluded, out);
}

std::vector<PointSet> ideals(const std::vector<PointSet>& gen) {
  std::vector<PointSet> out;
  collect_ideals(gen, 0, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PointSet> FiniteSpace::closed_sets() const {
  require_points(size(), Budget::current().max_bruteforce_points, "closed-set enumeration");
  return ideals(closures_);
}

std::vector<PointSet> FiniteSpace::open_sets() const {
  require_points(size(), Budget::current().max_bruteforce_points, "open-set enumeration");
  return ideals(opens_);
}

std::vector<PointSet> FiniteSpace::components(PointSet y) const {
  y &= all();
  std::vector<PointSet> out;
  PointSet left = y;
  while (left != 0) {
    PointSet comp = bit<PointSet>(std::countr_zero(left));
    for (;;) {
      PointSet grown = comp;
      for_each_bit(comp, [&](int x) { grown |= (closures_[x] | opens_[x]) & y; });
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

FiniteSpace space_from_closed_base(std::vector<std::string> names, const std::vector<PointSet>& base) {
  const int n = static_cast<int>(names.size());
  require_points(n, Budget::current().max_points, "finite space");
  const PointSet everything = low_bits<PointSet>(n);
  std::vector<PointSet> closures(n, everything);
  for (PointSet b : base) {
    if ((b & ~everything) != 0) throw DomainError("base member " + format_indices(b) + " is not inside the space");
    for_each_bit(b, [&](int x) { closures[x] &= b; });
  }
  return FiniteSpace(std::move(names), std::move(closures));
}

FiniteSpace space_from_closed_base(int points, const std::vector<PointSet>& base) {
  std::vector<std::string> names;
  for (int i = 0; i < points; ++i) names.push_back(std::to_string(i));
  return space_from_closed_base(std::move(names), base);
}

PointSet closure(const FiniteSpace& x, PointSet m) { return x.closure(m); }
PointSet interior(const FiniteSpace& x, PointSet m) { return x.interior(m); }

// ---------------------------------------------------------------- predicates

namespace {

// Maximal specialization classes, ordered by smallest point.
std::vector<PointSet> maximal_classes(const FiniteSpace& x) {
  std::vector<PointSet> out;
  PointSet seen = 0;
  for (int p = 0; p < x.size(); ++p) {
    if (has_bit(seen, p)) continue;
    const PointSet cls = x.min_open(p) & x.point_closure(p);
    if (x.min_open(p) == cls) {
      out.push_back(cls);
      seen |= cls;
    }
  }
  return out;
}

}  // namespace

bool is_t0(const FiniteSpace& x) {
  for (int p = 0; p < x.size(); ++p)
    if ((x.min_open(p) & x.point_closure(p)) != bit<PointSet>(p)) return false;
  return true;
}

bool is_connected(const FiniteSpace& x) { return x.components(x.all()).size() <= 1; }

bool is_discrete(const FiniteSpace& x) {
  for (int p = 0; p < x.size(); ++p)
    if (x.point_closure(p) != bit<PointSet>(p)) return false;
  return true;
}

bool is_semiregular(const FiniteSpace& x) { return is_closed_base(x, rc_algebra(x)); }

bool is_extremally_disconnected(const FiniteSpace& x) {
  // cl(U) = ↓U for open U; it suffices that ↓C is open for each maximal class C
  for (PointSet c : maximal_classes(x)) {
    const PointSet down = x.closure(c);
    if (!x.is_open(down)) return false;
  }
  return true;
}

SpacePredicates space_predicates(const FiniteSpace& x) {
  SpacePredicates p;
  p.is_t0 = is_t0(x);
  p.is_semiregular = is_semiregular(x);
  p.is_connected = is_connected(x);
  p.is_compact = true;
  p.is_hausdorff = is_discrete(x);  // finite T1 = finite T2 = discrete
  p.is_zero_dimensional = true;
  for (int q = 0; q < x.size(); ++q) p.is_zero_dimensional = p.is_zero_dimensional && x.is_closed(x.min_open(q));
  p.is_stone = p.is_compact && p.is_hausdorff && p.is_zero_dimensional;
  p.is_extremally_disconnected = is_extremally_disconnected(x);
  return p;
}

FiniteSpace subspace(const FiniteSpace& x, PointSet y) {
  x.require(y);
  const std::vector<int> idx = bit_indices(y);
  std::vector<int> pos(x.size(), -1);
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  std::vector<PointSet> closures;
  for (int p : idx) {
    names.push_back(x.name(p));
    PointSet c = 0;
    for_each_bit(x.point_closure(p) & y, [&](int q) { c |= bit<PointSet>(pos[q]); });
    closures.push_back(c);
  }
  return FiniteSpace(std::move(names), std::move(closures));
}

// ---------------------------------------------------------------- region algebras

PointSet RegionAlgebra::region(Mask m) const {
  PointSet out = 0;
  for_each_bit(m, [&](int i) { out |= atoms[i]; });
  return out;
}

std::optional<Mask> RegionAlgebra::element_of(PointSet f) const {
  Mask m = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if ((atoms[i] & ~f) == 0) m |= bit<Mask>(static_cast<int>(i));
  if (region(m) != f) return std::nullopt;
  return m;
}

std::vector<PointSet> RegionAlgebra::members() const {
  require_atoms(static_cast<int>(atoms.size()), Budget::current().max_atoms, "region algebra");
  std::vector<PointSet> out;
  const Mask size_minus_one = low_bits<Mask>(static_cast<int>(atoms.size()));
  for (Mask m = 0;; ++m) {
    out.push_back(region(m));
    if (m == size_minus_one) break;
  }
  return out;
}

RelationKernel RegionAlgebra::contact_kernel() const {
  const BooleanAlgebra alg = algebra();
  std::vector<Mask> rows(atoms.size(), 0);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if ((atoms[i] & atoms[j]) != 0) rows[i] |= bit<Mask>(static_cast<int>(j));
  return RelationKernel::from_rows(alg, std::move(rows));
}

PrecontactAlgebra RegionAlgebra::contact_algebra() const { return PrecontactAlgebra(contact_kernel()); }

std::vector<PointSet> RegionAlgebra::sorted_atoms() const {
  std::vector<PointSet> s = atoms;
  std::sort(s.begin(), s.end());
  return s;
}

RegionAlgebra rc_algebra(const FiniteSpace& x) {
  RegionAlgebra r;
  r.points = x.size();
  for (PointSet c : maximal_classes(x)) r.atoms.push_back(x.closure(c));
  require_atoms(static_cast<int>(r.atoms.size()), Budget::current().max_atoms, "RC(X)");
  return r;
}

bool is_dense(const TopologicalPair& p) { return p.space.closure(p.subset) == p.space.all(); }

std::vector<PointSet> co_atoms(const TopologicalPair& p) {
  p.space.require(p.subset);
  return p.space.components(p.subset);
}

RegionAlgebra rc_pair_algebra(const TopologicalPair& p) {
  RegionAlgebra r;
  r.points = p.space.size();
  for (PointSet k : co_atoms(p)) r.atoms.push_back(p.space.closure(k));
  require_atoms(static_cast<int>(r.atoms.size()), Budget::current().max_atoms, "RC(X,X0)");
  return r;
}

RelationKernel delta_kernel(const TopologicalPair& p) { return rc_pair_algebra(p).contact_kernel(); }

PointSet r_map(const TopologicalPair& p, PointSet f) {
  p.space.require(f);
  if (!p.space.is_regular_closed(f))
    throw DomainError(format_points(p.space, f) + " is not regular closed in X");
  return f & p.subset;
}

PointSet e_map(const TopologicalPair& p, PointSet g) {
  const FiniteSpace& x = p.space;
  if ((g & ~p.subset) != 0) throw DomainError(format_points(x, g) + " is not inside X0");
  if (x.closure_in(p.subset, x.interior_in(p.subset, g)) != g)
    throw DomainError(format_points(x, g) + " is not regular closed in X0");
  return x.closure(g);
}

Mask sigma_support(const RegionAlgebra& b, int x) {
  Mask s = 0;
  for (std::size_t i = 0; i < b.atoms.size(); ++i)
    if (has_bit(b.atoms[i], x)) s |= bit<Mask>(static_cast<int>(i));
  return s;
}

ElementFamily sigma(const RegionAlgebra& b, int x) {
  return grill_of_support(b.algebra(), sigma_support(b, x));
}

ElementFamily nu(const FiniteSpace& space, const RegionAlgebra& b, int x) {
  const BooleanAlgebra alg = b.algebra();
  std::vector<Mask> members;
  for (std::uint64_t m = 0; m < alg.size(); ++m)
    if (has_bit(space.interior(b.region(static_cast<Mask>(m))), x)) members.push_back(static_cast<Mask>(m));
  return ElementFamily(alg, FamilyKind::arbitrary, std::move(members));
}

Mask gamma_support(const TopologicalPair& p, int x) {
  Mask s = 0;
  const std::vector<PointSet> comps = co_atoms(p);
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (has_bit(p.space.closure(comps[i]), x)) s |= bit<Mask>(static_cast<int>(i));
  return s;
}

// ---------------------------------------------------------------- u-points

bool is_u_point(const FiniteSpace& x, int point) {
  // x ∈ cl U iff U meets O_x, so the condition reduces to U = O_y, V = O_z with y, z ∈ O_x
  const PointSet ox = x.min_open(point);
  bool ok = true;
  for_each_bit(ox, [&](int y) {
    for_each_bit(ox, [&](int z) { ok = ok && (x.min_open(y) & x.min_open(z)) != 0; });
  });
  return ok;
}

PointSet u_points(const FiniteSpace& x) {
  PointSet out = 0;
  for (int p = 0; p < x.size(); ++p)
    if (is_u_point(x, p)) out |= bit<PointSet>(p);
  return out;
}

MereotopologicalPair make_mereotopological_pair(const FiniteSpace& x, const std::vector<PointSet>& members) {
  std::vector<PointSet> ms = members;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  auto in = [&](PointSet f) { return std::binary_search(ms.begin(), ms.end(), f); };
  if (!in(0) || !in(x.all())) throw DomainError("subalgebra must contain the empty set and X");
  for (PointSet f : ms) {
    x.require(f);
    if (!x.is_regular_closed(f)) throw DomainError(format_points(x, f) + " is not regular closed");
    if (!in(x.closure(x.all() & ~f))) throw DomainError("not closed under complement at " + format_points(x, f));
    for (PointSet g : ms) {
      if (!in(f | g)) throw DomainError("not closed under join");
      if (!in(x.closure(x.interior(f & g)))) throw DomainError("not closed under meet");
    }
  }
  RegionAlgebra b;
  b.points = x.size();
  // atoms: minimal nonempty members
  for (PointSet f : ms) {
    if (f == 0) continue;
    bool minimal = true;
    for (PointSet g : ms)
      if (g != 0 && g != f && (g & ~f) == 0) minimal = false;
    if (minimal) b.atoms.push_back(f);
  }
  std::sort(b.atoms.begin(), b.atoms.end(), [](PointSet a, PointSet c) {
    return std::countr_zero(a) != std::countr_zero(c) ? std::countr_zero(a) < std::countr_zero(c) : a < c;
  });
  require_atoms(static_cast<int>(b.atoms.size()), Budget::current().max_atoms, "mereotopological pair");
  if (b.members().size() != ms.size()) throw DomainError("members are not generated by their atoms");
  return MereotopologicalPair{x, std::move(b)};
}

MereotopologicalPair rc_mereotopological_pair(const FiniteSpace& x) { return MereotopologicalPair{x, rc_algebra(x)}; }

bool u_point_of_pair(const MereotopologicalPair& m, int x) {
  // every member containing x contains an atom containing x, and F·G is monotone,
  // so atom pairs decide the condition
  const FiniteSpace& s = m.space;
  const Mask sup = sigma_support(m.algebra, x);
  bool ok = true;
  for_each_bit(sup, [&](int i) {
    for_each_bit(sup, [&](int j) {
      ok = ok && has_bit(s.closure(s.interior(m.algebra.atoms[i] & m.algebra.atoms[j])), x);
    });
  });
  return ok;
}

PointSet u_points_of_pair(const MereotopologicalPair& m) {
  PointSet out = 0;
  for (int p = 0; p < m.space.size(); ++p)
    if (u_point_of_pair(m, p)) out |= bit<PointSet>(p);
  return out;
}

bool is_closed_base(const FiniteSpace& x, const RegionAlgebra& b) {
  // members are unions of atoms, so the smallest member-intersection around p is the
  // intersection of the atoms containing p
  for (int p = 0; p < x.size(); ++p) {
    PointSet meet = x.all();
    for (PointSet a : b.atoms)
      if (has_bit(a, p)) meet &= a;
    if (meet != x.point_closure(p)) return false;
  }
  return true;
}

bool is_c_semiregular(const FiniteSpace& x) {
  if (!is_t0(x)) return false;
  const RegionAlgebra rc = rc_algebra(x);
  if (!is_closed_base(x, rc)) return false;
  std::vector<Mask> traces;
  for (int p = 0; p < x.size(); ++p) traces.push_back(sigma_support(rc, p));
  for (Mask s : clan_supports(rc.contact_kernel()))
    if (std::find(traces.begin(), traces.end(), s) == traces.end()) return false;
  return true;
}

// ---------------------------------------------------------------- maps

bool is_continuous(const FiniteSpace& from, const FiniteSpace& to, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != from.size()) return false;
  for (int v : f)
    if (v < 0 || v >= to.size()) return false;
  for (int y = 0; y < from.size(); ++y) {
    bool ok = true;
    for_each_bit(from.point_closure(y), [&](int x) { ok = ok && has_bit(to.point_closure(f[y]), f[x]); });
    if (!ok) return false;
  }
  return true;
}

PointSet preimage(const std::vector<int>& f, PointSet m) {
  PointSet out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (has_bit(m, f[x])) out |= bit<PointSet>(static_cast<int>(x));
  return out;
}

PointSet image(const std::vector<int>& f, PointSet m) {
  PointSet out = 0;
  for_each_bit(m, [&](int x) { out |= bit<PointSet>(f[x]); });
  return out;
}

std::string format_points(const FiniteSpace& x, PointSet m) { return format_named(m, x.names()); }

}  // namespace pclab
