#include "pclab/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"

namespace pclab {

namespace {

Mask permute_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for_each_bit(m, [&](int p) { out |= bit<Mask>(perm[p]); });
  return out;
}

// Atom invariant used to prune the search: (out-degree, in-degree, loop).
std::vector<std::tuple<int, int, bool>> atom_invariants(const RelationKernel& k) {
  const RelationKernel t = k.transpose();
  std::vector<std::tuple<int, int, bool>> out;
  for (int p = 0; p < k.atom_count(); ++p)
    out.emplace_back(std::popcount(k.row(p)), std::popcount(t.row(p)), k.contains(p, p));
  return out;
}

}  // namespace

std::vector<Mask> canonical_kernel_form(const RelationKernel& k) {
  const int n = k.atom_count();
  require_atoms(n, Budget::current().max_sweep_atoms, "canonical kernel form");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  do {
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) rows[perm[p]] = permute_mask(k.row(p), perm);
    if (best.empty() || rows < best) best = std::move(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::optional<std::vector<int>> pca_isomorphism(const PrecontactAlgebra& a, const PrecontactAlgebra& b) {
  const int n = a.atom_count();
  if (n != b.atom_count()) return std::nullopt;
  const RelationKernel& ka = a.kernel();
  const RelationKernel& kb = b.kernel();
  if (ka.pair_count() != kb.pair_count()) return std::nullopt;
  const auto ia = atom_invariants(ka), ib = atom_invariants(kb);
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  Mask used = 0;

  // Assign atoms in order; each new assignment is checked against all earlier ones.
  auto extend = [&](auto&& self, int p) -> bool {
    if (p == n) return true;
    for (int q = 0; q < n; ++q) {
      if (has_bit(used, q) || ia[p] != ib[q]) continue;
      bool ok = true;
      for (int r = 0; r <= p && ok; ++r) {
        const int s = r == p ? q : perm[r];
        ok = ka.contains(p, r) == kb.contains(q, s) && ka.contains(r, p) == kb.contains(s, q);
      }
      if (!ok) continue;
      perm[p] = q;
      used |= bit<Mask>(q);
      if (self(self, p + 1)) return true;
      used &= ~bit<Mask>(q);
      perm[p] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return perm;
}

bool are_isomorphic(const PrecontactAlgebra& a, const PrecontactAlgebra& b) { return pca_isomorphism(a, b).has_value(); }

BooleanHom hom_from_permutation(const PrecontactAlgebra& a, const PrecontactAlgebra& b, const std::vector<int>& perm) {
  std::vector<int> inverse(perm.size());
  for (std::size_t p = 0; p < perm.size(); ++p) inverse[perm[p]] = static_cast<int>(p);
  return BooleanHom(a.algebra(), b.algebra(), std::move(inverse));
}

std::optional<std::vector<int>> point_isomorphism(const PointTriple& a, const PointTriple& b) {
  const FiniteSpace& x = *a.space;
  const FiniteSpace& y = *b.space;
  const int n = x.size();
  if (n != y.size() || std::popcount(a.x0) != std::popcount(b.x0)) return std::nullopt;

  auto invariant = [](const PointTriple& t, int p) {
    const PointSet row = (*t.r)[p];
    int in = 0;
    for (PointSet other : *t.r) in += has_bit(other, p) ? 1 : 0;
    return std::tuple{std::popcount(t.space->point_closure(p)), std::popcount(t.space->min_open(p)),
                      has_bit(t.x0, p), std::popcount(row), in, has_bit(row, p)};
  };
  std::vector<decltype(invariant(a, 0))> ia, ib;
  for (int p = 0; p < n; ++p) {
    ia.push_back(invariant(a, p));
    ib.push_back(invariant(b, p));
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  PointSet used = 0;
  auto extend = [&](auto&& self, int p) -> bool {
    if (p == n) return true;
    for (int q = 0; q < n; ++q) {
      if (has_bit(used, q) || ia[p] != ib[q]) continue;
      bool ok = true;
      for (int r = 0; r <= p && ok; ++r) {
        const int s = r == p ? q : map[r];
        ok = has_bit(x.point_closure(p), r) == has_bit(y.point_closure(q), s) &&
             has_bit(x.point_closure(r), p) == has_bit(y.point_closure(s), q) &&
             has_bit((*a.r)[p], r) == has_bit((*b.r)[q], s) && has_bit((*a.r)[r], p) == has_bit((*b.r)[s], q);
      }
      if (!ok) continue;
      map[p] = q;
      used |= bit<PointSet>(q);
      if (self(self, p + 1)) return true;
      used &= ~bit<PointSet>(q);
      map[p] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

std::optional<std::vector<int>> pcs_isomorphism(const TwoPrecontactSpace& a, const TwoPrecontactSpace& b) {
  return point_isomorphism(PointTriple{&a.pair.space, a.pair.subset, &a.r}, PointTriple{&b.pair.space, b.pair.subset, &b.r});
}

std::optional<std::vector<int>> pair_isomorphism(const TopologicalPair& a, const TopologicalPair& b) {
  const PointRelation ra(static_cast<std::size_t>(a.space.size()), 0);
  const PointRelation rb(static_cast<std::size_t>(b.space.size()), 0);
  return point_isomorphism(PointTriple{&a.space, a.subset, &ra}, PointTriple{&b.space, b.subset, &rb});
}

}  // namespace pclab
