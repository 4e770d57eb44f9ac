#include "pclab/adjacency.hpp"

#include <bit>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"

namespace pclab {

namespace {

PointRelation relation_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  PointRelation r(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw DomainError("adjacency pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    r[x] |= bit<PointSet>(y);
  }
  return r;
}

// Points reachable from x along R-edges (x included).
PointSet reach(const PointRelation& r, PointSet domain, int x) {
  PointSet seen = bit<PointSet>(x), frontier = seen;
  while (frontier != 0) {
    PointSet next = 0;
    for_each_bit(frontier, [&](int y) { next |= r[y] & domain; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

AdjacencySpace make_adjacency(std::vector<std::string> cells, const std::vector<std::pair<int, int>>& pairs,
                              std::optional<FiniteSpace> topology) {
  if (cells.empty()) throw DomainError("an adjacency space needs a non-empty cell set");
  const int n = static_cast<int>(cells.size());
  require_points(n, Budget::current().max_points, "adjacency cells");
  if (topology && topology->size() != n) throw DomainError("topology size differs from the cell count");
  AdjacencySpace a{std::move(cells), relation_from_pairs(n, pairs), std::move(topology)};
  return a;
}

AdjacencySpace make_adjacency(int cells, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::string> names;
  for (int i = 0; i < cells; ++i) names.push_back(std::to_string(i));
  return make_adjacency(std::move(names), pairs);
}

AdjacencySpace r_flat(const AdjacencySpace& a) {
  AdjacencySpace out = a;
  const int n = a.size();
  for (int x = 0; x < n; ++x) {
    out.r[x] |= bit<PointSet>(x);
    for_each_bit(a.r[x], [&](int y) { out.r[y] |= bit<PointSet>(x); });
  }
  return out;
}

PrecontactAlgebra contact_from_adjacency(const AdjacencySpace& a) {
  const int n = a.size();
  require_atoms(n, Budget::current().max_atoms, "cells of an adjacency algebra");
  std::vector<Mask> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rows[x] = static_cast<Mask>(a.r[x]);
  return PrecontactAlgebra(RelationKernel::from_rows(BooleanAlgebra(n), std::move(rows)));
}

PrecontactAlgebra contact_from_adjacency(const AdjacencySpace& a, const std::vector<Mask>& blocks) {
  return restrict_relation(contact_from_adjacency(a), blocks).algebra;
}

bool is_reflexive(const PointRelation& r, PointSet domain) {
  bool ok = true;
  for_each_bit(domain, [&](int x) { ok = ok && has_bit(r[x], x); });
  return ok;
}

bool is_symmetric(const PointRelation& r) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool ok = true;
    for_each_bit(r[x], [&](int y) { ok = ok && has_bit(r[y], static_cast<int>(x)); });
    if (!ok) return false;
  }
  return true;
}

bool is_transitive(const PointRelation& r) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    PointSet two_step = 0;
    for_each_bit(r[x], [&](int y) { two_step |= r[y]; });
    if ((two_step & ~r[x]) != 0) return false;
  }
  return true;
}

bool is_zigzag_connected(const PointRelation& r, PointSet domain) {
  if (domain == 0) return true;
  PointRelation sym(r.size(), 0);
  for (std::size_t x = 0; x < r.size(); ++x) {
    sym[x] |= r[x];
    for_each_bit(r[x], [&](int y) { sym[y] |= bit<PointSet>(static_cast<int>(x)); });
  }
  return reach(sym, domain, std::countr_zero(domain)) == domain;
}

bool is_path_connected_literally(const PointRelation& r, PointSet domain) {
  std::vector<PointSet> reachable(r.size(), 0);
  for_each_bit(domain, [&](int x) { reachable[x] = reach(r, domain, x); });
  bool ok = true;
  for_each_bit(domain, [&](int x) {
    for_each_bit(domain, [&](int y) {
      if (x < y && !has_bit(reachable[x], y) && !has_bit(reachable[y], x)) ok = false;
    });
  });
  return ok;
}

Prop25Report prop25_report(const AdjacencySpace& a) {
  const PrecontactAlgebra c = contact_from_adjacency(a);
  const AxiomReport& ax = c.report();
  const PointSet all = low_bits<PointSet>(a.size());
  Prop25Report rep;
  rep.reflexive_symmetric = is_reflexive(a.r, all) && is_symmetric(a.r);
  rep.contact = ax.is_contact;
  rep.transitive = is_transitive(a.r);
  rep.ctr = ax.ctr;
  rep.connected = is_zigzag_connected(a.r, all);
  rep.connected_literal = is_path_connected_literally(a.r, all);
  rep.ccon = ax.ccon;
  if (rep.reflexive_symmetric) {
    const PrecontactAlgebra flat = contact_from_adjacency(r_flat(a));
    rep.sharp_and_flat_agree = c_sharp(c) == c && flat == c;
  }
  return rep;
}

PointRelation relation_from_kernel(const RelationKernel& k) {
  PointRelation r(static_cast<std::size_t>(k.atom_count()), 0);
  for (int p = 0; p < k.atom_count(); ++p) r[p] = k.row(p);
  return r;
}

CanonicalAdjacency canonical_adjacency(const PrecontactAlgebra& a) {
  if (a.algebra().is_degenerate()) throw DomainError("the degenerate algebra has no ultrafilters");
  const int n = a.atom_count();
  std::vector<std::string> cells;
  for (int p = 0; p < n; ++p) cells.push_back("u" + std::to_string(p));
  AdjacencySpace space{std::move(cells), relation_from_kernel(a.kernel()), FiniteSpace::discrete(n)};
  return CanonicalAdjacency{a, std::move(space)};
}

std::optional<std::pair<int, int>> closed_relation_gap(const PointRelation& r, const FiniteSpace& x) {
  for (int p = 0; p < x.size(); ++p) {
    std::optional<std::pair<int, int>> gap;
    for_each_bit(r[p], [&](int q) {
      if (gap) return;
      const PointSet cq = x.point_closure(q);
      for_each_bit(x.point_closure(p), [&](int p2) {
        if (!gap && (cq & ~r[p2]) != 0) gap = std::pair{p, q};
      });
    });
    if (gap) return gap;
  }
  return std::nullopt;
}

bool is_closed_relation(const PointRelation& r, const FiniteSpace& x) { return !closed_relation_gap(r, x); }

DualityReport representation_check(const PrecontactAlgebra& a) {
  const CanonicalAdjacency canon = canonical_adjacency(a);
  const BooleanAlgebra& b = a.algebra();
  const int n = b.atom_count();
  require_atoms(n, Budget::current().max_sweep_atoms, "representation check");
  DualityReport rep("representation of a " + std::to_string(n) + "-atom precontact algebra");

  // s_B(a) as a set of ultrafilter indices, built from the ultrafilters themselves.
  const std::vector<ElementFamily> ult = ultrafilters(b);
  std::vector<PointSet> s(b.size());
  for (Mask m = 0; m <= b.top(); ++m) {
    PointSet set = 0;
    for (std::size_t u = 0; u < ult.size(); ++u)
      if (ult[u].contains(m)) set |= bit<PointSet>(static_cast<int>(u));
    s[m] = set;
  }
  std::vector<bool> hit(b.size(), false);
  std::string bij_gap;
  for (Mask m = 0; m <= b.top(); ++m) {
    if (s[m] > b.top() || hit[s[m]]) {
      bij_gap = "a=" + format_indices(m);
      break;
    }
    hit[s[m]] = true;
  }
  rep.add("stone-map-bijective", bij_gap.empty(), bij_gap);

  std::string hom_gap;
  for (Mask x = 0; x <= b.top() && hom_gap.empty(); ++x) {
    if (s[b.complement(x)] != (low_bits<PointSet>(n) & ~s[x])) hom_gap = "a=" + format_indices(x) + " complement";
    for (Mask y = 0; y <= b.top() && hom_gap.empty(); ++y) {
      if (s[x | y] != (s[x] | s[y]) || s[x & y] != (s[x] & s[y]))
        hom_gap = "a=" + format_indices(x) + " b=" + format_indices(y);
    }
  }
  rep.add("stone-map-homomorphism", hom_gap.empty(), hom_gap);

  // a C b ⟺ s(a) C_{R_B} s(b), the right side evaluated on the cell relation.
  const PointRelation& rb = canon.space.r;
  std::string rel_gap;
  for (Mask x = 0; x <= b.top() && rel_gap.empty(); ++x) {
    PointSet reach_x = 0;
    for_each_bit(s[x], [&](int u) { reach_x |= rb[u]; });
    for (Mask y = 0; y <= b.top(); ++y) {
      const bool lhs = a.holds(x, y);
      const bool rhs = (reach_x & s[y]) != 0;
      if (lhs != rhs) {
        rel_gap = "a=" + format_indices(x) + " b=" + format_indices(y);
        break;
      }
    }
  }
  rep.add("stone-map-preserves-relation", rel_gap.empty(), rel_gap);

  const AxiomReport& ax = a.report();
  const PointSet cells = low_bits<PointSet>(n);
  const bool refl = is_reflexive(rb, cells), sym = is_symmetric(rb), trans = is_transitive(rb);
  auto verdicts = [](bool axiom, bool property) {
    return std::string("axiom ") + (axiom ? "holds" : "fails") + ", relation property " + (property ? "holds" : "fails");
  };
  rep.add("Cref<->reflexive", ax.cref == refl, verdicts(ax.cref, refl));
  rep.add("Csym<->symmetric", ax.csym == sym, verdicts(ax.csym, sym));
  rep.add("Ctr<->transitive", ax.ctr == trans, verdicts(ax.ctr, trans));
  return rep;
}

std::string format_relation(const PointRelation& r, const std::vector<std::string>& names) {
  std::string s = "{";
  bool first = true;
  for (std::size_t x = 0; x < r.size(); ++x) {
    for_each_bit(r[x], [&](int y) {
      if (!first) s += ',';
      s += "(" + names[x] + "," + names[y] + ")";
      first = false;
    });
  }
  return s + "}";
}

}  // namespace pclab
