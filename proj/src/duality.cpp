#include "pclab/duality.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"
#include "pclab/isomorphism.hpp"

namespace pclab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int index_of_support(const std::vector<Mask>& supports, Mask s) {
  const auto it = std::find(supports.begin(), supports.end(), s);
  return it == supports.end() ? -1 : static_cast<int>(it - supports.begin());
}

std::string format_map_at(const FiniteSpace& x, const FiniteSpace& y, int p, int image) {
  return x.name(p) + "->" + (image >= 0 ? y.name(image) : std::string("?"));
}

// C_X of a 2-precontact space on arbitrary point sets.
bool canonical_holds(const TwoPrecontactSpace& s, PointSet f, PointSet g) {
  PointSet image = 0;
  for_each_bit(f & s.x0(), [&](int x) { image |= s.r[x]; });
  return (image & g & s.x0()) != 0;
}

// Every element of the algebra; capped because callers sweep pairs of them.
void require_sweep(int atoms, const char* what) { require_atoms(atoms, Budget::current().max_sweep_atoms, what); }

std::vector<Mask> singleton_supports(int n) {
  std::vector<Mask> out;
  for (int p = 0; p < n; ++p) out.push_back(bit<Mask>(p));
  return out;
}

std::vector<Mask> nonempty_supports(int n) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= low_bits<Mask>(n); ++s) out.push_back(s);
  std::sort(out.begin(), out.end(), support_less<Mask>);
  return out;
}

void add_from(DualityReport& rep, const std::string& prefix, const DualityReport& other) { rep.merge(prefix, other); }

}  // namespace

// ------------------------------------------------------------------ morphisms

std::optional<std::string> pcs_morphism_gap(const TwoPrecontactSpace& source, const TwoPrecontactSpace& target,
                                            const std::vector<int>& map) {
  const FiniteSpace& x = source.space();
  const FiniteSpace& y = target.space();
  if (static_cast<int>(map.size()) != x.size()) return "map has " + std::to_string(map.size()) + " entries for " + std::to_string(x.size()) + " points";
  for (int p = 0; p < x.size(); ++p)
    if (map[p] < 0 || map[p] >= y.size()) return "image of " + x.name(p) + " out of range";
  for (int p = 0; p < x.size(); ++p) {
    std::optional<std::string> gap;
    for_each_bit(x.point_closure(p), [&](int q) {
      if (!gap && !has_bit(y.point_closure(map[p]), map[q]))
        gap = "not continuous: " + x.name(q) + " in cl{" + x.name(p) + "} but " + y.name(map[q]) + " not in cl{" +
              y.name(map[p]) + "}";
    });
    if (gap) return gap;
  }
  std::optional<std::string> gap;
  for_each_bit(source.x0(), [&](int p) {
    if (!gap && !has_bit(target.x0(), map[p])) gap = "X0 not preserved: " + format_map_at(x, y, p, map[p]);
  });
  if (gap) return gap;
  for_each_bit(source.x0(), [&](int p) {
    for_each_bit(source.r[p] & source.x0(), [&](int q) {
      if (!gap && !has_bit(target.r[map[p]], map[q]))
        gap = "R not preserved: (" + x.name(p) + "," + x.name(q) + ")";
    });
  });
  return gap;
}

PcsMorphism::PcsMorphism(TwoPrecontactSpace source, TwoPrecontactSpace target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (auto gap = pcs_morphism_gap(source_, target_, map_)) throw ValidationError("not a PCS-morphism: " + *gap);
}

PcsMorphism compose(const PcsMorphism& second, const PcsMorphism& first) {
  std::vector<int> m(first.map().size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = second(first(static_cast<int>(x)));
  return PcsMorphism(first.source(), second.target(), std::move(m));
}

PcsMorphism identity_morphism(const TwoPrecontactSpace& s) {
  std::vector<int> m(static_cast<std::size_t>(s.space().size()));
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = static_cast<int>(x);
  return PcsMorphism(s, s, std::move(m));
}

// ------------------------------------------------------------------ functors

CanonicalPcs ga_object(const PrecontactAlgebra& a) { return canonical_pcs_of_pca(a); }

PcsMorphism ga_morphism(const PcaMorphism& phi, const CanonicalPcs& source_dual, const CanonicalPcs& target_dual) {
  const std::vector<int>& atom_map = phi.hom().atom_map();
  std::vector<int> map;
  for (Mask s : target_dual.supports) {
    // φ⁻¹(Γ') = { a : φ(a) ∩ S' ≠ ∅ } = { a : a ∩ atom_map(S') ≠ ∅ }
    Mask pre = 0;
    for_each_bit(s, [&](int q) { pre |= bit<Mask>(atom_map[q]); });
    const int i = index_of_support(source_dual.supports, pre);
    if (i < 0) throw Error("inverse image of the clan " + format_indices(s) + " is not a clan");
    map.push_back(i);
  }
  return PcsMorphism(target_dual.space, source_dual.space, std::move(map));
}

PcsMorphism ga_morphism(const PcaMorphism& phi) {
  return ga_morphism(phi, ga_object(phi.source()), ga_object(phi.target()));
}

PrecontactAlgebra gt_object(const TwoPrecontactSpace& s) { return canonical_pca_of_pcs(s); }

PcaMorphism gt_morphism(const PcsMorphism& f) {
  const TwoPrecontactSpace& xs = f.source();
  const TwoPrecontactSpace& ys = f.target();
  const RegionAlgebra rx = rc_pair_algebra(xs.pair);
  const std::vector<PointSet> ky = co_atoms(ys.pair);
  const int mx = static_cast<int>(rx.atoms.size());
  std::vector<int> atom_map(static_cast<std::size_t>(mx), -1);
  for (std::size_t j = 0; j < ky.size(); ++j) {
    const PointSet region = xs.space().closure(xs.x0() & preimage(f.map(), ky[j]));
    const std::optional<Mask> m = rx.element_of(region);
    if (!m) throw Error("G^t(f) leaves RC(X,X0) at " + format_points(ys.space(), ky[j]));
    for_each_bit(*m, [&](int i) {
      if (atom_map[i] >= 0) throw Error("G^t(f) images overlap");
      atom_map[i] = static_cast<int>(j);
    });
  }
  if (std::find(atom_map.begin(), atom_map.end(), -1) != atom_map.end()) throw Error("G^t(f) misses an atom");
  const PrecontactAlgebra source = gt_object(ys);
  const PrecontactAlgebra target = gt_object(xs);
  return PcaMorphism(BooleanHom(source.algebra(), target.algebra(), std::move(atom_map)), source, target);
}

// ------------------------------------------------------------------ isomorphisms

TIso t_iso(const TwoPrecontactSpace& s) {
  const RegionAlgebra regions = rc_pair_algebra(s.pair);
  TIso out{canonical_pcs_of_pca(canonical_pca_of_pcs(s)), {}};
  for (int x = 0; x < s.space().size(); ++x)
    out.map.push_back(index_of_support(out.dual.supports, sigma_support(regions, x)));
  return out;
}

DualityReport check_t_iso(const TwoPrecontactSpace& s) {
  const auto start = Clock::now();
  DualityReport rep("t for a " + std::to_string(s.space().size()) + "-point 2-precontact space");
  const TIso t = t_iso(s);
  const FiniteSpace& x = s.space();
  const FiniteSpace& y = t.dual.space.space();

  std::string bij;
  PointSet hit = 0;
  for (int p = 0; p < x.size() && bij.empty(); ++p) {
    if (t.map[p] < 0) bij = "σ_" + x.name(p) + " is not a point of the dual";
    else if (has_bit(hit, t.map[p])) bij = "two points map to " + y.name(t.map[p]);
    else hit |= bit<PointSet>(t.map[p]);
  }
  if (bij.empty() && hit != y.all()) bij = y.name(std::countr_zero(y.all() & ~hit)) + " not hit";
  rep.add("t-bijective", bij.empty(), bij);
  if (!bij.empty()) {
    rep.elapsed_ms = ms_since(start);
    return rep;
  }

  std::string homeo;
  for (int p = 0; p < x.size() && homeo.empty(); ++p)
    for (int q = 0; q < x.size(); ++q)
      if (has_bit(x.point_closure(p), q) != has_bit(y.point_closure(t.map[p]), t.map[q])) {
        homeo = x.name(q) + " in cl{" + x.name(p) + "} not matched";
        break;
      }
  rep.add("t-homeomorphism", homeo.empty(), homeo);

  const PointSet image_x0 = image(t.map, s.x0());
  rep.add("t-X0-onto-Y0", image_x0 == t.dual.space.x0(), format_points(y, image_x0) + " vs " + format_points(y, t.dual.space.x0()));

  std::string rel;
  for_each_bit(s.x0(), [&](int p) {
    for_each_bit(s.x0(), [&](int q) {
      if (rel.empty() && has_bit(s.r[p], q) != has_bit(t.dual.space.r[t.map[p]], t.map[q]))
        rel = "(" + x.name(p) + "," + x.name(q) + ")";
    });
  });
  rep.add("t-relation", rel.empty(), rel);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

GIso g_iso(const PrecontactAlgebra& a) {
  CanonicalPcs dual = ga_object(a);
  RegionAlgebra regions = rc_pair_algebra(dual.space.pair);
  PrecontactAlgebra canonical = canonical_pca_of_pcs(dual.space);
  std::vector<int> atom_map(regions.atoms.size(), -1);
  for (int p = 0; p < a.atom_count(); ++p) {
    const std::optional<Mask> m = regions.element_of(dual.g(bit<Mask>(p)));
    if (!m || std::popcount(*m) != 1) throw Error("g_B of atom " + std::to_string(p) + " is not an atom of RC(X,X0)");
    atom_map[std::countr_zero(*m)] = p;
  }
  if (std::find(atom_map.begin(), atom_map.end(), -1) != atom_map.end()) throw Error("g_B misses an atom of RC(X,X0)");
  BooleanHom hom(a.algebra(), canonical.algebra(), std::move(atom_map));
  return GIso{std::move(dual), std::move(canonical), std::move(regions), std::move(hom)};
}

DualityReport check_g_iso(const PrecontactAlgebra& a) {
  const auto start = Clock::now();
  const BooleanAlgebra& b = a.algebra();
  require_sweep(b.atom_count(), "g_B check");
  DualityReport rep("g for a " + std::to_string(b.atom_count()) + "-atom precontact algebra");
  const GIso g = g_iso(a);
  const FiniteSpace& x = g.dual.space.space();

  std::vector<PointSet> val(b.size());
  for (Mask m = 0; m <= b.top(); ++m) val[m] = g.dual.g(m);

  std::string into, bij, boolean, hom;
  std::vector<PointSet> sorted = val;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bij = "g_B not injective";
  if (g.regions.atoms.size() != static_cast<std::size_t>(b.atom_count()))
    bij = "RC(X,X0) has " + std::to_string(g.regions.atoms.size()) + " atoms";
  for (Mask m = 0; m <= b.top(); ++m) {
    if (into.empty() && !(x.is_regular_closed(val[m]) && g.regions.element_of(val[m])))
      into = "g(" + format_indices(m) + ")=" + format_points(x, val[m]);
    if (hom.empty() && g.regions.region(g.hom.apply(m)) != val[m]) hom = "a=" + format_indices(m);
    if (boolean.empty() && val[b.complement(m)] != x.closure(x.all() & ~val[m]))
      boolean = "complement of " + format_indices(m);
  }
  for (Mask m = 0; m <= b.top() && boolean.empty(); ++m)
    for (Mask n = 0; n <= b.top(); ++n)
      if (val[m | n] != (val[m] | val[n]) || val[m & n] != x.closure(x.interior(val[m] & val[n]))) {
        boolean = "a=" + format_indices(m) + " b=" + format_indices(n);
        break;
      }
  rep.add("g-into-RC(X,X0)", into.empty(), into);
  rep.add("g-bijective", bij.empty(), bij);
  rep.add("g-boolean", boolean.empty(), boolean);
  rep.add("g-matches-atom-hom", hom.empty(), hom);

  std::string pca, ca;
  for (Mask m = 0; m <= b.top(); ++m) {
    for (Mask n = 0; n <= b.top(); ++n) {
      const bool c = a.holds(m, n);
      if (pca.empty() && c != canonical_holds(g.dual.space, val[m], val[n]))
        pca = "a=" + format_indices(m) + " b=" + format_indices(n);
      const bool sharp = c || a.holds(n, m) || (m & n) != 0;
      if (ca.empty() && sharp != ((val[m] & val[n]) != 0))
        ca = "a=" + format_indices(m) + " b=" + format_indices(n);
    }
  }
  rep.add("g-pca-isomorphism", pca.empty(), pca);
  rep.add("g-ca-isomorphism", ca.empty(), ca);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

DualityReport axiom_correspondence(const PrecontactAlgebra& a) {
  const auto start = Clock::now();
  DualityReport rep("axioms of a " + std::to_string(a.atom_count()) + "-atom algebra against its dual");
  const CanonicalPcs dual = ga_object(a);
  const TwoPrecontactSpace& s = dual.space;
  const AxiomReport& ax = a.report();
  auto verdicts = [](bool axiom, bool property) {
    return std::string("axiom ") + (axiom ? "holds" : "fails") + ", dual property " + (property ? "holds" : "fails");
  };
  const bool refl = is_reflexive(s.r, s.x0()), sym = is_symmetric(s.r), trans = is_transitive(s.r);
  const bool conn = is_connected(s.space());
  rep.add("Cref<->reflexive", ax.cref == refl, verdicts(ax.cref, refl));
  rep.add("Csym<->symmetric", ax.csym == sym, verdicts(ax.csym, sym));
  rep.add("Ctr<->transitive", ax.ctr == trans, verdicts(ax.ctr, trans));
  rep.add("Ccon<->connected", ax.ccon == conn, verdicts(ax.ccon, conn));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ------------------------------------------------------------------ naturality

DualityReport check_naturality(const PcaMorphism& phi) {
  const auto start = Clock::now();
  DualityReport rep("g-square for a morphism of " + std::to_string(phi.source().atom_count()) + "-atom into " +
                    std::to_string(phi.target().atom_count()) + "-atom algebras");
  const BooleanAlgebra& a = phi.source().algebra();
  require_sweep(a.atom_count(), "g-square");
  const GIso ga = g_iso(phi.source());
  const GIso gb = g_iso(phi.target());
  try {
    const PcsMorphism f = ga_morphism(phi, ga.dual, gb.dual);
    rep.add("Ga-morphism", true);
    const PcaMorphism psi = gt_morphism(f);
    rep.add("GtGa-morphism", true);
    const RegionAlgebra rb = rc_pair_algebra(gb.dual.space.pair);
    std::string gap;
    for (Mask m = 0; m <= a.top() && gap.empty(); ++m) {
      const PointSet lhs = gb.dual.g(phi.apply(m));
      const std::optional<Mask> in_a = ga.regions.element_of(ga.dual.g(m));
      const PointSet rhs = in_a ? rb.region(psi.apply(*in_a)) : ~PointSet{0};
      if (lhs != rhs) gap = "a=" + format_indices(m);
    }
    rep.add("g-square", gap.empty(), gap);
  } catch (const Error& e) {
    rep.add("Ga-morphism", false, e.what());
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

DualityReport check_naturality(const PcsMorphism& f) {
  const auto start = Clock::now();
  DualityReport rep("t-square for a map of " + std::to_string(f.source().space().size()) + " into " +
                    std::to_string(f.target().space().size()) + " points");
  try {
    const TIso tx = t_iso(f.source());
    const TIso ty = t_iso(f.target());
    const PcaMorphism phi = gt_morphism(f);
    rep.add("Gt-morphism", true);

    // the defining formula on every clopen F' of Y0
    const std::vector<PointSet> ky = co_atoms(f.target().pair);
    const RegionAlgebra rx = rc_pair_algebra(f.source().pair);
    require_atoms(static_cast<int>(ky.size()), Budget::current().max_sweep_atoms, "clopens of Y0");
    std::string formula;
    for (Mask m = 0; m <= low_bits<Mask>(static_cast<int>(ky.size())) && formula.empty(); ++m) {
      PointSet fprime = 0;
      for_each_bit(m, [&](int j) { fprime |= ky[j]; });
      const PointSet expected = f.source().space().closure(f.source().x0() & preimage(f.map(), fprime));
      if (rx.region(phi.apply(m)) != expected) formula = "F'=" + format_points(f.target().space(), fprime);
    }
    rep.add("Gt-formula", formula.empty(), formula);

    const PcsMorphism fsharp = ga_morphism(phi, ty.dual, tx.dual);
    rep.add("GaGt-morphism", true);
    std::string gap;
    for (int x = 0; x < f.source().space().size() && gap.empty(); ++x)
      if (tx.map[x] < 0 || fsharp(tx.map[x]) != ty.map[f(x)]) gap = "x=" + f.source().space().name(x);
    rep.add("t-square", gap.empty(), gap);
  } catch (const Error& e) {
    rep.add("functor-images", false, e.what());
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

DualityReport gt_as_preimage(const PcsMorphism& f) {
  const auto start = Clock::now();
  DualityReport rep("G^t(f) as inverse image");
  const PcaMorphism phi = gt_morphism(f);
  const RegionAlgebra rx = rc_pair_algebra(f.source().pair);
  const RegionAlgebra ry = rc_pair_algebra(f.target().pair);
  require_atoms(static_cast<int>(ry.atoms.size()), Budget::current().max_sweep_atoms, "RC(Y,Y0)");
  std::string gap;
  for (Mask m = 0; m <= low_bits<Mask>(static_cast<int>(ry.atoms.size())); ++m) {
    const PointSet h = ry.region(m);
    if (rx.region(phi.apply(m)) != preimage(f.map(), h)) {
      gap = "H=" + format_points(f.target().space(), h);
      break;
    }
  }
  rep.add("Gt(f)(H)=f^-1(H)", gap.empty(), gap);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ------------------------------------------------------------------ F^t and SAS

AdjacencySpace ft_object(const TwoPrecontactSpace& s) {
  const std::vector<int> pts = bit_indices(s.x0());
  std::vector<std::string> cells;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    cells.push_back(s.space().name(pts[i]));
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (has_bit(s.r[pts[i]], pts[j])) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return make_adjacency(std::move(cells), pairs, subspace(s.space(), s.x0()));
}

std::vector<int> ft_morphism(const PcsMorphism& f) {
  const std::vector<int> target_pts = bit_indices(f.target().x0());
  std::vector<int> out;
  for_each_bit(f.source().x0(), [&](int x) {
    const auto it = std::find(target_pts.begin(), target_pts.end(), f(x));
    out.push_back(static_cast<int>(it - target_pts.begin()));
  });
  return out;
}

std::optional<std::string> faithfulness_gap(const PcsMorphism& f, const PcsMorphism& g) {
  if (ft_morphism(f) != ft_morphism(g) || f.map() == g.map()) return std::nullopt;
  for (std::size_t x = 0; x < f.map().size(); ++x)
    if (f(static_cast<int>(x)) != g(static_cast<int>(x)))
      return "agree on X0 but differ at " + f.source().space().name(static_cast<int>(x));
  return std::nullopt;
}

CanonicalPcs reconstruct_from_sas(const AdjacencySpace& s0) {
  if (s0.topology && !is_discrete(*s0.topology))
    throw PreconditionError("a finite Stone adjacency space must be discrete");
  return ga_object(contact_from_adjacency(s0));
}

DualityReport check_sas_roundtrip(const AdjacencySpace& s0, const TwoPrecontactSpace* candidate) {
  const auto start = Clock::now();
  DualityReport rep("Stone adjacency space on " + std::to_string(s0.size()) + " cells");
  const CanonicalPcs rec = reconstruct_from_sas(s0);
  rep.merge("reconstruction", rec.space.validation);
  const AdjacencySpace back = ft_object(rec.space);
  // cell x ↔ the ultrafilter u_x, the clan with support {x}
  std::string gap;
  if (back.size() != s0.size()) gap = "cell counts differ";
  for (int x = 0; x < s0.size() && gap.empty(); ++x)
    for (int y = 0; y < s0.size(); ++y)
      if (s0.related(x, y) != back.related(x, y)) {
        gap = "(" + s0.cells[x] + "," + s0.cells[y] + ")";
        break;
      }
  rep.add("Ft-roundtrip", gap.empty(), gap);
  rep.add("Ft-discrete", back.topology && is_discrete(*back.topology), "X0 of the reconstruction is not discrete");
  if (candidate) {
    const bool iso = pcs_isomorphism(*candidate, rec.space).has_value();
    rep.add("unique-up-to-isomorphism", iso, "candidate is not PCS-isomorphic to the reconstruction");
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ------------------------------------------------------------------ hom-sets

std::vector<BooleanHom> pca_morphisms(const PrecontactAlgebra& a, const PrecontactAlgebra& b) {
  const int na = a.atom_count(), nb = b.atom_count();
  const int cap = Budget::current().max_exhaustive_atoms;
  require_atoms(na, cap, "morphism enumeration source");
  require_atoms(nb, cap, "morphism enumeration target");
  std::vector<BooleanHom> out;
  if (na == 0 && nb > 0) return out;
  std::vector<int> map(static_cast<std::size_t>(nb), 0);
  while (true) {
    BooleanHom h(a.algebra(), b.algebra(), map);
    if (!pca_morphism_gap(h, a, b)) out.push_back(std::move(h));
    int i = 0;
    while (i < nb && ++map[i] == na) map[i++] = 0;
    if (i == nb) break;
  }
  return out;
}

namespace {

// Backtracking over point maps; keep(x, y) decides whether x ↦ y is admissible on its own.
template <class Keep, class Pair>
std::vector<std::vector<int>> enumerate_maps(const FiniteSpace& x, const FiniteSpace& y, Keep keep, Pair pair_ok) {
  require_points(x.size(), Budget::current().max_morphism_points, "map enumeration");
  std::vector<std::vector<int>> out;
  std::vector<int> map(static_cast<std::size_t>(x.size()), -1);
  auto extend = [&](auto&& self, int p) -> void {
    if (p == x.size()) {
      out.push_back(map);
      return;
    }
    for (int q = 0; q < y.size(); ++q) {
      if (!keep(p, q)) continue;
      map[p] = q;
      bool ok = true;
      for (int r = 0; r <= p && ok; ++r) {
        ok = (!has_bit(x.point_closure(p), r) || has_bit(y.point_closure(q), map[r])) &&
             (!has_bit(x.point_closure(r), p) || has_bit(y.point_closure(map[r]), q)) && pair_ok(p, r, map) &&
             pair_ok(r, p, map);
      }
      if (ok) self(self, p + 1);
    }
    map[p] = -1;
  };
  extend(extend, 0);
  return out;
}

}  // namespace

std::vector<std::vector<int>> continuous_maps(const FiniteSpace& x, const FiniteSpace& y) {
  return enumerate_maps(x, y, [](int, int) { return true; }, [](int, int, const std::vector<int>&) { return true; });
}

std::vector<std::vector<int>> pcs_morphisms(const TwoPrecontactSpace& s, const TwoPrecontactSpace& t) {
  return enumerate_maps(
      s.space(), t.space(), [&](int p, int q) { return !has_bit(s.x0(), p) || has_bit(t.x0(), q); },
      [&](int p, int r, const std::vector<int>& map) {
        return !(has_bit(s.x0(), p) && has_bit(s.x0(), r) && has_bit(s.r[p], r)) || has_bit(t.r[map[p]], map[r]);
      });
}

DualityReport check_hom_bijection(const PrecontactAlgebra& b, const PrecontactAlgebra& b_prime) {
  const auto start = Clock::now();
  DualityReport rep("hom-sets between " + std::to_string(b.atom_count()) + "- and " +
                    std::to_string(b_prime.atom_count()) + "-atom algebras");
  const CanonicalPcs x = ga_object(b), y = ga_object(b_prime);
  const std::vector<BooleanHom> homs = pca_morphisms(b, b_prime);
  std::vector<std::vector<int>> maps = pcs_morphisms(y.space, x.space);
  rep.add("hom-set-sizes", homs.size() == maps.size(),
          std::to_string(homs.size()) + " PCA-morphisms vs " + std::to_string(maps.size()) + " PCS-morphisms");
  std::vector<std::vector<int>> images;
  for (const BooleanHom& h : homs) images.push_back(ga_morphism(PcaMorphism(h, b, b_prime), x, y).map());
  std::sort(images.begin(), images.end());
  std::sort(maps.begin(), maps.end());
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  rep.add("Ga-injective-on-homs", injective, "two PCA-morphisms have the same dual");
  rep.add("Ga-onto-PCS-morphisms", images == maps, "the duals of PCA-morphisms differ from the PCS-morphisms");
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ------------------------------------------------------------------ specializations

const char* specialization_name(Specialization s) {
  switch (s) {
    case Specialization::stone: return "stone";
    case Specialization::connected_stone: return "connected-stone";
    case Specialization::contact: return "contact";
    case Specialization::complete_contact: return "complete-contact";
    case Specialization::connected: return "connected";
  }
  return "?";
}

namespace {

// Empty when a belongs to the subcategory, else the failed membership test.
std::string membership_gap(Specialization s, const PrecontactAlgebra& a) {
  if (a.algebra().is_degenerate()) return "the degenerate algebra has no dual";
  switch (s) {
    case Specialization::stone:
      return a.kernel() == rho_s(a.algebra()).kernel() ? "" : "relation is not ρ_s";
    case Specialization::connected_stone:
      return a.kernel() == rho_l(a.algebra()).kernel() ? "" : "relation is not ρ_l";
    case Specialization::contact:
    case Specialization::complete_contact:
      return a.report().is_contact ? "" : "not a contact algebra";
    case Specialization::connected:
      return a.report().ccon ? "" : "Ccon fails, witness " + *a.report().witness("Ccon");
  }
  return "unknown specialization";
}

void stone_checks(DualityReport& rep, const PrecontactAlgebra& a, const CanonicalPcs& dual) {
  const int n = a.atom_count();
  const TwoPrecontactSpace& s = dual.space;
  rep.add("clans=Ult(B)", dual.supports == singleton_supports(n), std::to_string(dual.supports.size()) + " clans");
  bool diagonal = s.x0() == s.space().all();
  for (int x = 0; x < s.space().size() && diagonal; ++x) diagonal = s.r[x] == bit<PointSet>(x);
  rep.add("dual=(X,X,D_X)", diagonal, "X0=" + format_points(s.space(), s.x0()));
  rep.add("X-Stone", space_predicates(s.space()).is_stone, "X is not discrete");
  rep.add("PCS-valid", s.valid(), s.valid() ? "" : s.validation.first_failure()->name);
}

void connected_stone_checks(DualityReport& rep, const PrecontactAlgebra& a, const CanonicalPcs& dual) {
  const int n = a.atom_count();
  const TwoPrecontactSpace& s = dual.space;
  rep.add("clans=Grills(B)", dual.supports == nonempty_supports(n), std::to_string(dual.supports.size()) + " clans");
  bool square = true;
  for_each_bit(s.x0(), [&](int x) { square = square && s.r[x] == s.x0(); });
  rep.add("R=X0^2", square, format_relation(s.r, s.space().names()));
  const StoneTwoSpace s2 = validate_s2s(s.space(), s.x0());
  rep.add("Stone-2-space", s2.valid(), s2.valid() ? "" : s2.validation.first_failure()->name);
  rep.add("X-connected", n < 2 || is_connected(s.space()), "X is disconnected");
}

void contact_checks(DualityReport& rep, const PrecontactAlgebra& a, const CanonicalPcs& dual) {
  const CanonicalCs cs = canonical_cs_of_ca(a);
  const Check* bad = cs.space.validation.first_failure();
  rep.add("2-contact-space", !bad, bad ? bad->name + ": " + bad->witness : "");
  const PairContactRelation rel = contact_relation_of_pair(cs.space);
  rep.add("R_(X,X0)=R", rel.r == dual.space.r, format_relation(rel.r, dual.space.space().names()));
  rep.add("R_(X,X0)-unique", rel.unique(),
          rel.candidates_valid ? std::to_string(*rel.candidates_valid) + " valid candidates" : "X0 over search budget");
  const PrecontactAlgebra back = rc_pair_algebra(cs.space.pair).contact_algebra();
  rep.add("canonical-contact-algebra-iso", are_isomorphic(back, a), "(RC(X,X0),C_(X,X0)) not isomorphic to B");
}

void complete_contact_checks(DualityReport& rep, const CanonicalPcs& dual) {
  const FiniteSpace& x = dual.space.space();
  const bool same = rc_algebra(x).sorted_atoms() == rc_pair_algebra(dual.space.pair).sorted_atoms();
  rep.add("RC(X)=RC(X,X0)", same, "RC(X) has other members");
  rep.add("X-C-semiregular", is_c_semiregular(x), "X is not C-semiregular");
  rep.add("X0-extremally-disconnected", is_extremally_disconnected(subspace(x, dual.space.x0())),
          "X0 is not extremally disconnected");
}

void run_specialization(DualityReport& rep, Specialization s, const PrecontactAlgebra& a, const CanonicalPcs& dual) {
  switch (s) {
    case Specialization::stone: stone_checks(rep, a, dual); break;
    case Specialization::connected_stone: connected_stone_checks(rep, a, dual); break;
    case Specialization::contact: contact_checks(rep, a, dual); break;
    case Specialization::complete_contact: complete_contact_checks(rep, dual); break;
    case Specialization::connected:
      rep.add("X-connected", is_connected(dual.space.space()), "X is disconnected");
      break;
  }
}

}  // namespace

DualityReport corollary_suite(Specialization s, const PrecontactAlgebra& a) {
  const std::string gap = membership_gap(s, a);
  if (!gap.empty()) throw ClassificationError(std::string(specialization_name(s)) + ": " + gap);
  const auto start = Clock::now();
  DualityReport rep(std::string(specialization_name(s)) + " specialization");
  run_specialization(rep, s, a, ga_object(a));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

DualityReport corollary_suites(const PrecontactAlgebra& a) {
  const auto start = Clock::now();
  DualityReport rep("specializations of a " + std::to_string(a.atom_count()) + "-atom algebra");
  const CanonicalPcs dual = ga_object(a);
  for (Specialization s : {Specialization::stone, Specialization::connected_stone, Specialization::contact,
                           Specialization::complete_contact, Specialization::connected}) {
    if (!membership_gap(s, a).empty()) continue;
    DualityReport part;
    run_specialization(part, s, a, dual);
    add_from(rep, specialization_name(s), part);
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

DualityReport mereo_suite(const MereotopologicalPair& m) {
  const MereocompactReport mr = mereo_report(m);
  if (!mr.is_space) throw ClassificationError("B is not a closed base");
  if (!mr.is_t0) throw ClassificationError("X is not T0");
  if (!mr.is_mereocompact)
    throw ClassificationError("not mereocompact: clan " + format_indices(*mr.unrealized_clan) + " is no σ_x");
  const auto start = Clock::now();
  const FiniteSpace& x = m.space;
  DualityReport rep("mereocompact T0 space on " + std::to_string(x.size()) + " points");
  const std::string u = "u=" + format_points(x, mr.u_set);
  rep.add("u-dense", mr.u_dense, u);
  rep.add("u-Stone", mr.u_stone, u);
  rep.add("RC(X,u)=B", mr.rc_matches, u);
  rep.add("u=sigma-ultrafilter-points", mr.sigma_agrees, u);
  rep.add("u-unique", mr.unique.value_or(false),
          !mr.unique ? "X over brute-force budget"
                     : mr.uniqueness_witness ? "also " + format_points(x, *mr.uniqueness_witness) : u);
  rep.add("(X,u)-2-contact", mr.cs_valid, u);
  // F^h then F^g returns B; F^g then F^h returns u
  const std::vector<PointSet> members = rc_pair_algebra(TopologicalPair{x, mr.u_set}).members();
  const MereotopologicalPair again = make_mereotopological_pair(x, members);
  rep.add("FgFh-identity", again.algebra.sorted_atoms() == m.algebra.sorted_atoms(), u);
  rep.add("FhFg-identity", u_points_of_pair(again) == mr.u_set, u);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

DualityReport gmcs_suite(const MereotopologicalPair& from, const MereotopologicalPair& to, const std::vector<int>& f) {
  for (const MereotopologicalPair* p : {&from, &to}) {
    const MereocompactReport r = mereo_report(*p);
    if (!(r.is_mereocompact && r.is_t0)) throw ClassificationError("not a mereocompact T0 space");
  }
  const FiniteSpace& x = from.space;
  const FiniteSpace& y = to.space;
  if (static_cast<int>(f.size()) != x.size()) throw DomainError("map size differs from the point count");
  for (int v : f)
    if (v < 0 || v >= y.size()) throw DomainError("map value out of range");
  const auto start = Clock::now();
  DualityReport rep("GMCS morphism");

  const int mt = static_cast<int>(to.algebra.atoms.size());
  require_atoms(mt, Budget::current().max_sweep_atoms, "members of B");
  std::vector<PointSet> psi(std::size_t{1} << mt);
  std::string defined;
  for (Mask m = 0; m <= low_bits<Mask>(mt); ++m) {
    psi[m] = preimage(f, to.algebra.region(m));
    if (defined.empty() && !from.algebra.element_of(psi[m])) defined = "F=" + format_points(y, to.algebra.region(m));
  }
  rep.add("psi-well-defined", defined.empty(), defined);
  std::string boolean;
  if (defined.empty()) {
    if (psi[0] != 0 || psi[low_bits<Mask>(mt)] != x.all()) boolean = "bounds";
    for (Mask m = 0; m <= low_bits<Mask>(mt) && boolean.empty(); ++m) {
      if (psi[low_bits<Mask>(mt) & ~m] != x.closure(x.all() & ~psi[m]))
        boolean = "complement of " + format_points(y, to.algebra.region(m));
      for (Mask n = 0; n <= low_bits<Mask>(mt) && boolean.empty(); ++n)
        if (psi[m | n] != (psi[m] | psi[n]) || psi[m & n] != x.closure(x.interior(psi[m] & psi[n])))
          boolean = "F=" + format_points(y, to.algebra.region(m)) + " G=" + format_points(y, to.algebra.region(n));
    }
  }
  rep.add("psi-boolean-hom", defined.empty() && boolean.empty(), boolean.empty() ? defined : boolean);
  rep.add("f-continuous", is_continuous(x, y, f), "f is not continuous");
  const PointSet ux = u_points_of_pair(from), uy = u_points_of_pair(to);
  rep.add("f-preserves-u-points", (image(f, ux) & ~uy) == 0, "f(u(X,A))=" + format_points(y, image(f, ux)));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace pclab
