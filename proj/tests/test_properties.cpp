// Seeded property tests of the structural invariants. Each generator is a fixed-seed
// mt19937_64, so a failure reproduces from the seed printed by Catch's INFO.

#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pclab/duality.hpp"
#include "pclab/error.hpp"
#include "pclab/isomorphism.hpp"
#include "pclab/random.hpp"
#include "pclab/suite.hpp"

using namespace pclab;

namespace {

// Dense pair: X random, X0 random with every missing point in its closure.
TopologicalPair random_dense_pair(Rng& rng, int points) {
  const FiniteSpace x = random_space(rng, points, 0.35);
  PointSet x0 = rng() & x.all();
  for (int p = 0; p < points; ++p)
    if (!has_bit(x.closure(x0), p)) x0 |= bit<PointSet>(p);
  return {x, x0};
}

// Partition of n atoms into nonempty blocks.
std::vector<Mask> random_blocks(Rng& rng, int n) {
  std::vector<Mask> blocks;
  for (int p = 0; p < n; ++p) {
    const int b = uniform_index(rng, static_cast<int>(blocks.size()) + 1);
    if (b == static_cast<int>(blocks.size())) blocks.push_back(0);
    blocks[b] |= bit<Mask>(p);
  }
  return blocks;
}

std::vector<PointSet> trace(const std::vector<PointSet>& members, PointSet y) {
  std::vector<PointSet> out;
  for (PointSet f : members) {
    // renumber to subspace indices
    PointSet t = 0;
    int i = 0;
    for_each_bit(y, [&](int p) {
      if (has_bit(f, p)) t |= bit<PointSet>(i);
      ++i;
    });
    out.push_back(t);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------ Boolean layer

TEST_CASE("stone map is a Boolean isomorphism", "[properties]") {
  for (int n = 1; n <= 6; ++n) {
    const BooleanAlgebra b(n);
    std::vector<PointSet> img(b.size());
    for (Mask a = 0; a <= b.top(); ++a)
      for (int u : stone_map(b, a)) img[a] |= bit<PointSet>(u);
    for (Mask a = 0; a <= b.top(); ++a) {
      REQUIRE(img[b.complement(a)] == (low_bits<PointSet>(n) & ~img[a]));
      for (Mask c = 0; c <= b.top(); ++c) {
        REQUIRE(img[a | c] == (img[a] | img[c]));
        if (a != c) REQUIRE(img[a] != img[c]);
      }
    }
  }
}

TEST_CASE("grill lemma on every filter-grill pair up to three atoms", "[properties]") {
  for (int n = 1; n <= 3; ++n) {
    const BooleanAlgebra b(n);
    const auto filters = oracle::families(n, [&](oracle::Family f) { return oracle::is_filter(f, n); });
    const auto grill_fams = oracle::families(n, [&](oracle::Family f) { return oracle::is_grill(f, n); });
    for (oracle::Family f : filters)
      for (oracle::Family g : grill_fams) {
        if ((f & ~g) != 0) continue;
        auto members = [&](oracle::Family fam) {
          std::vector<Mask> m;
          for (Mask a = 0; a <= b.top(); ++a)
            if (oracle::in(fam, a)) m.push_back(a);
          return m;
        };
        const ElementFamily u = grill_lemma_witness(ElementFamily(b, FamilyKind::filter, members(f)),
                                                    ElementFamily(b, FamilyKind::grill, members(g)));
        const oracle::Family uf = oracle::members_of(u.members);
        REQUIRE(oracle::is_ultrafilter(uf, n));
        REQUIRE((f & ~uf) == 0);
        REQUIRE((uf & ~g) == 0);
      }
  }
}

// ------------------------------------------------------------------ precontact layer

TEST_CASE("kernels are a complete invariant of precontact relations", "[properties]") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& rows : oracle::all_kernel_rows(n)) {
      const RelationKernel k = RelationKernel::from_rows(BooleanAlgebra(n), rows);
      REQUIRE(normalize_relation(expand(k)) == k);
    }
}

TEST_CASE("C sharp, extremality, clans and the interdefinability of ll", "[properties]") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& rows : oracle::all_kernel_rows(n)) {
      const PrecontactAlgebra a = oracle::algebra_of(n, rows);
      const PrecontactAlgebra s = c_sharp(a);
      REQUIRE(c_sharp(s) == s);
      REQUIRE(s.report().is_contact);
      REQUIRE(clans(a) == clans(s));
      REQUIRE(relation_from_ll(ll_relation(a)) == a.kernel());
      if (a.report().is_contact) {
        REQUIRE(rho_s(a.algebra()).kernel().subset_of(a.kernel()));
        REQUIRE(a.kernel().subset_of(rho_l(a.algebra()).kernel()));
      }
    }
}

TEST_CASE("clans restrict to clans of subalgebras", "[properties]") {
  Rng rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + uniform_index(rng, 6);
    const PrecontactAlgebra a = random_pca(rng, n, 0.3);
    const Restriction r = restrict_relation(a, random_blocks(rng, n));
    for (const Clan& c : clans(a)) REQUIRE(is_clan_support(r.algebra.kernel(), restrict_clan(r, c.support)));
    // the restricted relation is C on the embedded elements
    for (Mask x = 0; x <= r.algebra.algebra().top(); ++x)
      for (Mask y = 0; y <= r.algebra.algebra().top(); ++y)
        REQUIRE(r.algebra.holds(x, y) == a.holds(r.embedding.apply(x), r.embedding.apply(y)));
  }
}

// ------------------------------------------------------------------ topology layer

TEST_CASE("Kuratowski laws", "[properties]") {
  Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSpace x = random_space(rng, 1 + uniform_index(rng, 6), 0.3);
    REQUIRE(x.closure(0) == 0);
    for (PointSet a = 0; a <= x.all(); ++a) {
      REQUIRE((a & ~x.closure(a)) == 0);
      REQUIRE(x.closure(x.closure(a)) == x.closure(a));
      REQUIRE(x.interior(a) == (x.all() & ~x.closure(x.all() & ~a)));
      const PointSet b = rng() & x.all();
      REQUIRE(x.closure(a | b) == (x.closure(a) | x.closure(b)));
    }
  }
}

TEST_CASE("RC(X) is a contact algebra closed under unions", "[properties]") {
  Rng rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSpace x = random_space(rng, 1 + uniform_index(rng, 7), 0.3);
    const RegionAlgebra rc = rc_algebra(x);
    REQUIRE(rc.contact_algebra().report().is_contact);
    const auto members = rc.members();
    for (PointSet f : members) {
      REQUIRE(x.is_regular_closed(f));
      for (PointSet g : members) REQUIRE(x.is_regular_closed(f | g));
    }
  }
}

TEST_CASE("r and e are inverse Boolean isomorphisms on dense pairs", "[properties]") {
  Rng rng(64);
  for (int trial = 0; trial < 300; ++trial) {
    const TopologicalPair p = random_dense_pair(rng, 1 + uniform_index(rng, 4));
    const FiniteSpace& x = p.space;
    const FiniteSpace sub = subspace(x, p.subset);
    const auto big = rc_algebra(x).members();
    const auto small = rc_algebra(sub).members();
    REQUIRE(big.size() == small.size());
    for (PointSet f : big) {
      const PointSet g = f & p.subset;
      REQUIRE(sub.is_regular_closed(trace({g}, p.subset)[0]));
      REQUIRE(x.closure(g) == f);
    }
    for (PointSet g0 : small) {
      // lift g0 back to X-indices
      PointSet g = 0;
      int i = 0;
      for_each_bit(p.subset, [&](int pt) {
        if (has_bit(g0, i)) g |= bit<PointSet>(pt);
        ++i;
      });
      REQUIRE(x.is_regular_closed(x.closure(g)));
      REQUIRE((x.closure(g) & p.subset) == g);
    }
  }
}

TEST_CASE("u-points of a pair restrict to dense subspaces", "[properties]") {
  Rng rng(65);
  for (int trial = 0; trial < 300; ++trial) {
    const TopologicalPair p = random_dense_pair(rng, 1 + uniform_index(rng, 6));
    const MereotopologicalPair m = rc_mereotopological_pair(p.space);
    const FiniteSpace sub = subspace(p.space, p.subset);
    MereotopologicalPair m0;
    REQUIRE_NOTHROW(m0 = make_mereotopological_pair(sub, trace(m.algebra.members(), p.subset)));
    int i = 0;
    for_each_bit(p.subset, [&](int pt) {
      REQUIRE(u_point_of_pair(m0, i) == u_point_of_pair(m, pt));
      ++i;
    });
  }
}

TEST_CASE("u-points are the points whose trace is an ultrafilter", "[properties]") {
  Rng rng(66);
  for (int trial = 0; trial < 300; ++trial) {
    const FiniteSpace x = random_space(rng, 1 + uniform_index(rng, 7), 0.3);
    const MereotopologicalPair m = rc_mereotopological_pair(x);
    const int atoms = static_cast<int>(m.algebra.atoms.size());
    for (int pt = 0; pt < x.size(); ++pt) {
      const ElementFamily s = sigma(m.algebra, pt);
      REQUIRE(u_point_of_pair(m, pt) == is_family(FamilyKind::ultrafilter, BooleanAlgebra(atoms), s.members));
    }
  }
}

TEST_CASE("nu lies inside every grill below sigma", "[properties]") {
  Rng rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    const FiniteSpace x = random_space(rng, 1 + uniform_index(rng, 6), 0.3);
    const RegionAlgebra rc = rc_algebra(x);
    if (rc.atoms.size() > 5) continue;
    const BooleanAlgebra b = rc.algebra();
    for (int pt = 0; pt < x.size(); ++pt) {
      const ElementFamily s = sigma(rc, pt), nx = nu(x, rc, pt);
      for (const ElementFamily& g : grills(b)) {
        const bool below = std::all_of(g.members.begin(), g.members.end(), [&](Mask a) { return s.contains(a); });
        if (!below) continue;
        for (Mask a : nx.members) REQUIRE(g.contains(a));
      }
    }
  }
}

TEST_CASE("RC(X) = RC(X,X0) iff X0 is extremally disconnected", "[properties]") {
  Rng rng(68);
  int equal = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const TopologicalPair p = random_dense_pair(rng, 1 + uniform_index(rng, 6));
    const bool same = rc_algebra(p.space).sorted_atoms() == rc_pair_algebra(p).sorted_atoms();
    REQUIRE(same == is_extremally_disconnected(subspace(p.space, p.subset)));
    equal += same;
  }
  CHECK(equal > 20);
}

// ------------------------------------------------------------------ adjacency and structures

TEST_CASE("R-flat and the canonical adjacency space", "[properties]") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& rows : oracle::all_kernel_rows(n)) {
      std::vector<std::pair<int, int>> pairs;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (has_bit(rows[x], y)) pairs.emplace_back(x, y);
      const AdjacencySpace a = make_adjacency(n, pairs);
      const AdjacencySpace f = r_flat(a);
      REQUIRE(r_flat(f).r == f.r);
      REQUIRE(is_reflexive(f.r, low_bits<PointSet>(n)));
      REQUIRE(is_symmetric(f.r));
      REQUIRE(contact_from_adjacency(f) == c_sharp(contact_from_adjacency(a)));
      REQUIRE(canonical_adjacency(contact_from_adjacency(a)).space.r == a.r);
    }
}

TEST_CASE("canonical duals validate and g is additive", "[properties]") {
  Rng rng(69);
  for (int trial = 0; trial < 300; ++trial) {
    const PrecontactAlgebra a = random_pca(rng, 1 + uniform_index(rng, 5), 0.35);
    const CanonicalPcs c = canonical_pcs_of_pca(a);
    REQUIRE(c.space.valid());
    REQUIRE(c.g(0) == 0);
    const Mask top = a.algebra().top();
    for (Mask x = 0; x <= top; ++x) {
      const Mask y = static_cast<Mask>(rng()) & top;
      REQUIRE(c.g(x | y) == (c.g(x) | c.g(y)));
    }
    // (RC(X,X0), (C_X)^#) is (RC(X,X0), C_(X,X0))
    const RegionAlgebra regions = rc_pair_algebra(c.space.pair);
    const PrecontactAlgebra cx(canonical_relation(c.space.pair, c.space.r));
    REQUIRE(c_sharp(cx).kernel() == regions.contact_kernel());
    // every finite algebra is complete: RC(X) = RC(X,X0) on the dual
    REQUIRE(rc_algebra(c.space.space()).sorted_atoms() == regions.sorted_atoms());
  }
}

TEST_CASE("2-contact spaces, C-semiregularity and u-points", "[properties]") {
  Rng rng(70);
  for (int trial = 0; trial < 300; ++trial) {
    const PrecontactAlgebra a = random_pca(rng, 1 + uniform_index(rng, 4), 0.4, Constraints{true, false, false});
    const CanonicalCs cs = canonical_cs_of_ca(a);
    REQUIRE(cs.space.valid());
    const FiniteSpace& x = cs.space.pair.space;
    if (is_extremally_disconnected(subspace(x, cs.space.pair.subset))) REQUIRE(is_c_semiregular(x));
    if (is_c_semiregular(x)) {
      const PointSet u = u_points(x);
      REQUIRE(validate_cs(x, u).valid());
      REQUIRE(u == cs.space.pair.subset);
    }
    const MereocompactReport mr = mereo_report(MereotopologicalPair{x, rc_pair_algebra(cs.space.pair)});
    REQUIRE(mr.is_mereocompact);
    REQUIRE(mr.sigma_agrees);
    REQUIRE(mr.rc_matches);
    REQUIRE(mr.u_set == cs.space.pair.subset);
  }
}

// ------------------------------------------------------------------ duality layer

TEST_CASE("duality on random algebras with four and five atoms", "[properties]") {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const PrecontactAlgebra a = random_pca(rng, 4 + uniform_index(rng, 2), 0.3);
    REQUIRE(check_g_iso(a).passed());
    REQUIRE(check_t_iso(ga_object(a).space).passed());
    REQUIRE(axiom_correspondence(a).passed());
  }
}

TEST_CASE("G^a and G^t are contravariant functors", "[properties]") {
  Rng rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    const PrecontactAlgebra a = random_pca(rng, 1 + uniform_index(rng, 4), 0.4);
    const PcaMorphism phi = random_pca_morphism(rng, a, 1 + uniform_index(rng, 4), 0.5);
    const PcaMorphism psi = random_pca_morphism(rng, phi.target(), 1 + uniform_index(rng, 4), 0.5);
    const CanonicalPcs da = ga_object(a), db = ga_object(phi.target()), dc = ga_object(psi.target());
    const PcsMorphism ga_phi = ga_morphism(phi, da, db), ga_psi = ga_morphism(psi, db, dc);
    const PcsMorphism ga_comp = ga_morphism(compose(psi, phi), da, dc);
    REQUIRE(ga_comp.map() == compose(ga_phi, ga_psi).map());

    const PcaMorphism gt_comp = gt_morphism(compose(ga_phi, ga_psi));
    REQUIRE(gt_comp.hom().atom_map() == compose(gt_morphism(ga_psi), gt_morphism(ga_phi)).hom().atom_map());
    REQUIRE(ga_morphism(PcaMorphism(BooleanHom::identity(a.algebra()), a, a), da, da).map() ==
            identity_morphism(da.space).map());

    REQUIRE(check_naturality(phi).passed());
    REQUIRE(check_naturality(ga_phi).passed());
    REQUIRE(gt_as_preimage(ga_phi).passed());
  }
}

TEST_CASE("suite runs are deterministic and pass", "[properties]") {
  const RandomSpec spec{3, 0.4, 99, {}};
  const SuiteOutcome first = run_suite(spec, 25);
  const SuiteOutcome second = run_suite(spec, 25);
  CHECK(first.report.passed());
  CHECK(first.failures.empty());
  REQUIRE(first.report.checks.size() == second.report.checks.size());
  for (std::size_t i = 0; i < first.report.checks.size(); ++i) {
    CHECK(first.report.checks[i].name == second.report.checks[i].name);
    CHECK(first.report.checks[i].pass == second.report.checks[i].pass);
  }
  Rng r1(5), r2(5);
  for (int i = 0; i < 20; ++i) REQUIRE(random_pca(r1, 4, 0.5) == random_pca(r2, 4, 0.5));
  CHECK_THROWS_AS(run_suite(RandomSpec{7, 0.5, 1, {}}, 1), CapacityError);
}
