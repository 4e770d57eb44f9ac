#include "pclab/structures.hpp"

#include <algorithm>
#include <bit>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"

namespace pclab {

namespace {

std::string t0_gap(const FiniteSpace& x) {
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b)
      if (x.point_closure(a) == x.point_closure(b)) return "(" + x.name(a) + "," + x.name(b) + ")";
  return {};
}

std::string density_gap(const TopologicalPair& p) {
  const PointSet missing = p.space.all() & ~p.space.closure(p.subset);
  if (missing == 0) return {};
  return p.space.name(std::countr_zero(missing)) + " outside cl(X0)";
}

// A finite Stone space is discrete: no point of X0 may have another X0 point in its closure.
std::string stone_gap(const TopologicalPair& p) {
  std::string gap;
  for_each_bit(p.subset, [&](int x) {
    const PointSet extra = p.space.point_closure(x) & p.subset & ~bit<PointSet>(x);
    if (gap.empty() && extra != 0)
      gap = p.space.name(std::countr_zero(extra)) + " in cl{" + p.space.name(x) + "}";
  });
  return gap;
}

// cl{x} must be the intersection of the base atoms containing x.
std::string closed_base_gap(const FiniteSpace& x, const std::vector<PointSet>& atoms) {
  for (int pt = 0; pt < x.size(); ++pt) {
    PointSet meet = x.all();
    for (PointSet a : atoms)
      if (has_bit(a, pt)) meet &= a;
    if (meet != x.point_closure(pt))
      return "cl{" + x.name(pt) + "}=" + format_points(x, x.point_closure(pt)) + " but base gives " +
             format_points(x, meet);
  }
  return {};
}

std::string format_components(const FiniteSpace& x, const std::vector<PointSet>& comps, Mask support) {
  std::string s = "{";
  bool first = true;
  for_each_bit(support, [&](int i) {
    if (!first) s += ',';
    s += format_points(x, comps[i]);
    first = false;
  });
  return s + "}";
}

// Every clan support of k must equal Γ_{x,X0} for some point x.
std::string realization_gap(const TopologicalPair& p, const std::vector<PointSet>& comps,
                            const std::vector<Mask>& supports) {
  std::vector<Mask> realized;
  for (int x = 0; x < p.space.size(); ++x) realized.push_back(gamma_support(p, x));
  for (Mask s : supports)
    if (std::find(realized.begin(), realized.end(), s) == realized.end())
      return format_components(p.space, comps, s) + " is no Γ_x";
  return {};
}

std::vector<Mask> all_supports(int m) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= low_bits<Mask>(m); ++s) out.push_back(s);
  std::sort(out.begin(), out.end(), support_less<Mask>);
  return out;
}

void add_pair_checks(DualityReport& rep, const TopologicalPair& p, const char* t0_name, const char* stone_name,
                     const char* base_name) {
  rep.add("dense", density_gap(p).empty(), density_gap(p));
  const std::string t0 = t0_gap(p.space);
  rep.add(t0_name, t0.empty(), t0);
  const std::string stone = stone_gap(p);
  rep.add(stone_name, stone.empty(), stone);
  const std::string base = closed_base_gap(p.space, rc_pair_algebra(p).atoms);
  rep.add(base_name, base.empty(), base);
}

void require_relation_inside(const FiniteSpace& x, PointSet x0, const PointRelation& r) {
  x.require(x0);
  if (static_cast<int>(r.size()) != x.size()) throw DomainError("relation rows do not match the points of X");
  for (int a = 0; a < x.size(); ++a) {
    if (r[a] == 0) continue;
    if (!has_bit(x0, a) || (r[a] & ~x0) != 0)
      throw DomainError("relation pair at " + x.name(a) + " leaves X0");
  }
}

}  // namespace

RelationKernel component_relation(const TopologicalPair& p, const PointRelation& r) {
  const std::vector<PointSet> comps = co_atoms(p);
  const int m = static_cast<int>(comps.size());
  std::vector<Mask> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    PointSet image = 0;
    for_each_bit(comps[i], [&](int x) { image |= r[x]; });
    for (int j = 0; j < m; ++j)
      if ((image & comps[j]) != 0) rows[i] |= bit<Mask>(j);
  }
  return RelationKernel::from_rows(BooleanAlgebra(m), std::move(rows));
}

TwoPrecontactSpace validate_pcs(const FiniteSpace& x, PointSet x0, const PointRelation& r) {
  require_relation_inside(x, x0, r);
  TwoPrecontactSpace s{TopologicalPair{x, x0}, r, DualityReport("2-precontact space on " + std::to_string(x.size()) + " points")};
  const TopologicalPair& p = s.pair;
  DualityReport& rep = s.validation;

  const std::string dense = density_gap(p), t0 = t0_gap(x);
  rep.add("PCS1", dense.empty() && t0.empty(), dense.empty() ? "not T0: " + t0 : dense);

  std::string pcs2 = stone_gap(p);
  if (!pcs2.empty()) {
    pcs2 = "X0 not Stone: " + pcs2;
  } else {
    // R closed in X0 × X0 (subspace closures)
    for (int a = 0; a < x.size() && pcs2.empty(); ++a) {
      for_each_bit(r[a], [&](int b) {
        for_each_bit(x.point_closure(a) & x0, [&](int a2) {
          const PointSet missing = x.point_closure(b) & x0 & ~r[a2];
          if (pcs2.empty() && missing != 0)
            pcs2 = "R not closed: (" + x.name(a2) + "," + x.name(std::countr_zero(missing)) + ")";
        });
      });
    }
  }
  rep.add("PCS2", pcs2.empty(), pcs2);

  const std::vector<PointSet> comps = co_atoms(p);
  const std::string base = closed_base_gap(x, rc_pair_algebra(p).atoms);
  rep.add("PCS3", base.empty(), base);

  const RelationKernel cr = component_relation(p, r);
  const RelationKernel sharp = sharp_kernel(cr);
  std::string pcs4;
  for (std::size_t i = 0; i < comps.size() && pcs4.empty(); ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const bool meet = (x.closure(comps[i]) & x.closure(comps[j])) != 0;
      if (meet && !sharp.contains(static_cast<int>(i), static_cast<int>(j))) {
        pcs4 = "(" + format_points(x, comps[i]) + "," + format_points(x, comps[j]) + ")";
        break;
      }
    }
  }
  rep.add("PCS4", pcs4.empty(), pcs4);

  const std::string pcs5 = realization_gap(p, comps, clan_supports(cr));
  rep.add("PCS5", pcs5.empty(), pcs5);
  return s;
}

RelationKernel canonical_relation(const TopologicalPair& p, const PointRelation& r) {
  const RegionAlgebra regions = rc_pair_algebra(p);
  const int m = static_cast<int>(regions.atoms.size());
  std::vector<Mask> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    PointSet image = 0;
    for_each_bit(regions.atoms[i] & p.subset, [&](int x) { image |= r[x]; });
    for (int j = 0; j < m; ++j)
      if ((image & regions.atoms[j] & p.subset) != 0) rows[i] |= bit<Mask>(j);
  }
  return RelationKernel::from_rows(BooleanAlgebra(m), std::move(rows));
}

PrecontactAlgebra canonical_pca_of_pcs(const TwoPrecontactSpace& s) {
  if (const Check* bad = s.validation.first_failure())
    throw ValidationError("not a 2-precontact space: " + bad->name + " fails, witness " + bad->witness);
  return PrecontactAlgebra(canonical_relation(s.pair, s.r));
}

PointSet CanonicalPcs::g(Mask a) const {
  PointSet out = 0;
  for (std::size_t i = 0; i < supports.size(); ++i)
    if ((supports[i] & a) != 0) out |= bit<PointSet>(static_cast<int>(i));
  return out;
}

CanonicalPcs canonical_pcs_of_pca(const PrecontactAlgebra& a) {
  if (a.algebra().is_degenerate()) throw DomainError("the degenerate algebra has no clans");
  CanonicalPcs out{a, clan_supports(a.kernel()), {}};
  const int points = static_cast<int>(out.supports.size());
  require_points(points, Budget::current().max_points, "clans of the canonical space");

  std::vector<std::string> names;
  for (Mask s : out.supports) names.push_back(format_indices(s));
  // The g_B(atom) already give every point closure; g_B of other elements are unions of them.
  std::vector<PointSet> base;
  for (int p = 0; p < a.atom_count(); ++p) base.push_back(out.g(bit<Mask>(p)));
  FiniteSpace x = space_from_closed_base(std::move(names), base);

  std::vector<int> point_of_atom(static_cast<std::size_t>(a.atom_count()), -1);
  PointSet x0 = 0;
  for (int i = 0; i < points; ++i) {
    if (std::popcount(out.supports[i]) == 1) {
      point_of_atom[std::countr_zero(out.supports[i])] = i;
      x0 |= bit<PointSet>(i);
    }
  }
  PointRelation r(static_cast<std::size_t>(points), 0);
  for (auto [p, q] : a.kernel().pairs()) r[point_of_atom[p]] |= bit<PointSet>(point_of_atom[q]);

  out.space = validate_pcs(x, x0, r);
  out.space.validation.subject = "canonical 2-precontact space of a " + std::to_string(a.atom_count()) + "-atom algebra";
  return out;
}

TwoContactSpace validate_cs(const FiniteSpace& x, PointSet x0) {
  x.require(x0);
  TwoContactSpace s{TopologicalPair{x, x0}, DualityReport("2-contact pair on " + std::to_string(x.size()) + " points")};
  add_pair_checks(s.validation, s.pair, "CS1", "CS2", "CS3");
  const std::vector<PointSet> comps = co_atoms(s.pair);
  const std::string cs4 = realization_gap(s.pair, comps, clan_supports(delta_kernel(s.pair)));
  s.validation.add("CS4", cs4.empty(), cs4);
  return s;
}

StoneTwoSpace validate_s2s(const FiniteSpace& x, PointSet x0) {
  x.require(x0);
  StoneTwoSpace s{TopologicalPair{x, x0}, DualityReport("Stone 2-space candidate on " + std::to_string(x.size()) + " points")};
  add_pair_checks(s.validation, s.pair, "CS1", "CS2", "CS3");
  const std::vector<PointSet> comps = co_atoms(s.pair);
  require_atoms(static_cast<int>(comps.size()), Budget::current().max_exhaustive_atoms, "grills of CO(X0)");
  const std::string s2s4 = realization_gap(s.pair, comps, all_supports(static_cast<int>(comps.size())));
  s.validation.add("S2S4", s2s4.empty(), s2s4);
  return s;
}

CanonicalCs canonical_cs_of_ca(const PrecontactAlgebra& a) {
  const AxiomReport& ax = a.report();
  if (!ax.is_contact) {
    const std::string axiom = ax.cref ? "Csym" : "Cref";
    throw PreconditionError("not a contact algebra: " + axiom + " fails, witness " + *ax.witness(axiom));
  }
  CanonicalPcs pcs = canonical_pcs_of_pca(a);
  CanonicalCs out{a, pcs.supports, validate_cs(pcs.space.space(), pcs.space.x0())};
  out.space.validation.subject = "canonical 2-contact space of a " + std::to_string(a.atom_count()) + "-atom algebra";
  return out;
}

PairContactRelation contact_relation_of_pair(const TwoContactSpace& p) {
  const FiniteSpace& x = p.pair.space;
  const PointSet x0 = p.pair.subset;
  const std::vector<PointSet> comps = co_atoms(p.pair);
  // u_x has least member K(x), and the condition is monotone in F and G.
  std::vector<PointSet> closure_of(static_cast<std::size_t>(x.size()), 0);
  for (PointSet k : comps) for_each_bit(k, [&](int y) { closure_of[y] = x.closure(k); });

  PairContactRelation out;
  out.r.assign(static_cast<std::size_t>(x.size()), 0);
  for_each_bit(x0, [&](int a) {
    for_each_bit(x0, [&](int b) {
      if ((closure_of[a] & closure_of[b]) != 0) out.r[a] |= bit<PointSet>(b);
    });
  });

  const std::vector<int> pts = bit_indices(x0);
  const int m = static_cast<int>(pts.size());
  if (m > Budget::current().max_exhaustive_atoms) return out;
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) offdiag.emplace_back(pts[i], pts[j]);
  int valid = 0;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << offdiag.size()); ++choice) {
    PointRelation cand(static_cast<std::size_t>(x.size()), 0);
    for (int y : pts) cand[y] |= bit<PointSet>(y);
    for (std::size_t e = 0; e < offdiag.size(); ++e) {
      if (!has_bit(choice, static_cast<int>(e))) continue;
      auto [u, v] = offdiag[e];
      cand[u] |= bit<PointSet>(v);
      cand[v] |= bit<PointSet>(u);
    }
    if (validate_pcs(x, x0, cand).valid()) ++valid;
  }
  out.candidates_valid = valid;
  return out;
}

std::vector<PointSet> dense_stone_subspaces(const FiniteSpace& x, const RegionAlgebra& b) {
  require_points(x.size(), Budget::current().max_bruteforce_points, "dense subspace search");
  const std::vector<PointSet> target = b.sorted_atoms();
  std::vector<PointSet> out;
  for (PointSet y = 1; y <= x.all(); ++y) {
    if (std::popcount(y) != static_cast<int>(target.size())) continue;
    if (x.closure(y) != x.all()) continue;
    std::vector<PointSet> atoms;
    bool discrete = true;
    for_each_bit(y, [&](int pt) {
      discrete = discrete && (x.point_closure(pt) & y) == bit<PointSet>(pt);
      atoms.push_back(x.point_closure(pt));
    });
    if (!discrete) continue;
    std::sort(atoms.begin(), atoms.end());
    if (atoms == target) out.push_back(y);
  }
  return out;
}

MereocompactReport mereo_report(const MereotopologicalPair& m) {
  MereocompactReport rep;
  rep.pair = m;
  const FiniteSpace& x = m.space;
  rep.is_space = is_closed_base(x, m.algebra);
  rep.is_t0 = is_t0(x);

  std::vector<Mask> traces;
  for (int pt = 0; pt < x.size(); ++pt) traces.push_back(sigma_support(m.algebra, pt));
  for (Mask s : clan_supports(m.algebra.contact_kernel())) {
    if (std::find(traces.begin(), traces.end(), s) == traces.end()) {
      rep.unrealized_clan = s;
      break;
    }
  }
  rep.is_mereocompact = rep.is_space && !rep.unrealized_clan;
  rep.u_set = u_points_of_pair(m);
  if (!(rep.is_mereocompact && rep.is_t0)) return rep;

  const PointSet u = rep.u_set;
  const TopologicalPair up{x, u};
  rep.u_dense = x.closure(u) == x.all();
  rep.u_stone = stone_gap(up).empty();
  rep.rc_matches = rep.u_dense && rc_pair_algebra(up).sorted_atoms() == m.algebra.sorted_atoms();
  rep.sigma_agrees = true;
  for (int pt = 0; pt < x.size(); ++pt)
    rep.sigma_agrees = rep.sigma_agrees && has_bit(u, pt) == (std::popcount(traces[pt]) == 1);
  if (x.size() <= Budget::current().max_bruteforce_points) {
    const std::vector<PointSet> found = dense_stone_subspaces(x, m.algebra);
    rep.unique = found.size() == 1 && found.front() == u;
    for (PointSet y : found)
      if (y != u) {
        rep.uniqueness_witness = y;
        break;
      }
  }
  rep.cs_valid = rep.u_dense && validate_cs(x, u).valid();
  return rep;
}

}  // namespace pclab
