#include <array>

#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pclab/error.hpp"
#include "pclab/random.hpp"
#include "pclab/structures.hpp"

using namespace pclab;
using fixture::G1;
using fixture::G2;
using fixture::G3;

namespace {

// Literal 2-space axioms over explicit closed sets and clopen families of X0.
struct Literal {
  int n;
  PointSet x0;
  std::vector<PointSet> closed;
  std::vector<PointSet> clopens;  // clopen subsets of X0

  Literal(const FiniteSpace& x, PointSet sub)
      : n(x.size()), x0(sub), closed(oracle::closed_sets_of(x)), clopens(oracle::clopens_of_subspace(closed, sub)) {}

  PointSet cl(PointSet m) const { return oracle::closure(closed, m); }

  bool dense() const { return cl(x0) == low_bits<PointSet>(n); }
  bool t0() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (cl(bit<PointSet>(a)) == cl(bit<PointSet>(b))) return false;
    return true;
  }
  // A finite Stone space is discrete.
  bool x0_stone() const { return clopens.size() == (std::size_t{1} << std::popcount(x0)); }
  // Every closed set is an intersection of sets cl(A), A clopen in X0.
  bool closed_base() const {
    for (PointSet c : closed) {
      PointSet meet = low_bits<PointSet>(n);
      for (PointSet a : clopens)
        if ((c & ~cl(a)) == 0) meet &= cl(a);
      if (meet != c) return false;
    }
    return true;
  }
  // R closed in X0 × X0 with the subspace topology.
  bool r_closed(const PointRelation& r) const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (has_bit(r[a], b))
          for (int a2 = 0; a2 < n; ++a2)
            for (int b2 = 0; b2 < n; ++b2)
              if (has_bit(cl(bit<PointSet>(a)) & x0, a2) && has_bit(cl(bit<PointSet>(b)) & x0, b2) &&
                  !has_bit(r[a2], b2))
                return false;
    return true;
  }
  bool related(const PointRelation& r, PointSet f, PointSet g) const {
    for (int a = 0; a < n; ++a)
      if (has_bit(f, a) && (r[a] & g) != 0) return true;
    return false;
  }
  bool delta(PointSet f, PointSet g) const { return (cl(f) & cl(g)) != 0; }

  // Families of clopens as bitsets over clopen indices.
  bool has(std::uint32_t fam, PointSet f) const {
    for (std::size_t i = 0; i < clopens.size(); ++i)
      if (clopens[i] == f) return (fam >> i) & 1;
    return false;
  }
  bool is_grill(std::uint32_t fam) const {
    if (fam == 0 || has(fam, 0)) return false;
    for (PointSet f : clopens)
      for (PointSet g : clopens) {
        if (has(fam, f) && (f & ~g) == 0 && !has(fam, g)) return false;
        if (has(fam, f | g) && !has(fam, f) && !has(fam, g)) return false;
      }
    return true;
  }
  template <class Rel>
  bool is_clan(std::uint32_t fam, Rel&& rel) const {
    if (!is_grill(fam)) return false;
    for (PointSet f : clopens)
      for (PointSet g : clopens)
        if (has(fam, f) && has(fam, g) && !(rel(f, g) || rel(g, f) || (f & g) != 0)) return false;
    return true;
  }
  std::uint32_t gamma(int x) const {
    std::uint32_t fam = 0;
    for (std::size_t i = 0; i < clopens.size(); ++i)
      if (has_bit(cl(clopens[i]), x)) fam |= std::uint32_t{1} << i;
    return fam;
  }
  template <class Keep>
  bool all_realized(Keep&& keep) const {
    for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << clopens.size()); ++fam) {
      if (!keep(fam)) continue;
      bool found = false;
      for (int x = 0; x < n; ++x) found = found || gamma(x) == fam;
      if (!found) return false;
    }
    return true;
  }

  std::array<bool, 5> pcs(const PointRelation& r) const {
    bool pcs4 = true;
    for (PointSet f : clopens)
      for (PointSet g : clopens)
        if (delta(f, g) && !(related(r, f, g) || related(r, g, f) || (f & g) != 0)) pcs4 = false;
    const bool pcs5 = all_realized([&](std::uint32_t fam) {
      return is_clan(fam, [&](PointSet f, PointSet g) { return related(r, f, g); });
    });
    return {dense() && t0(), x0_stone() && r_closed(r), closed_base(), pcs4, pcs5};
  }
};

struct Candidate {
  FiniteSpace x;
  PointSet x0;
  PointRelation r;
};

// Mix of canonical duals (valid), their perturbations and random triples.
std::vector<Candidate> candidates(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Candidate> out;
  for (int i = 0; i < count; ++i) {
    if (i % 3 == 0) {
      const CanonicalPcs c = canonical_pcs_of_pca(random_pca(rng, 1 + uniform_index(rng, 3), 0.4));
      if (c.space.space().size() > 6) continue;
      Candidate cand{c.space.space(), c.space.x0(), c.space.r};
      if (i % 2 == 1) {
        const int a = uniform_index(rng, std::popcount(cand.x0)), b = uniform_index(rng, std::popcount(cand.x0));
        cand.r[a] ^= bit<PointSet>(b);
      }
      out.push_back(cand);
    } else {
      const int n = 1 + uniform_index(rng, 5);
      const FiniteSpace x = random_space(rng, n, 0.3);
      const PointSet x0 = rng() & x.all();
      PointRelation r(n, 0);
      for (int a = 0; a < n; ++a)
        if (has_bit(x0, a)) r[a] = rng() & x0;
      out.push_back(Candidate{x, x0, r});
    }
  }
  return out;
}

bool check(const DualityReport& rep, const std::string& name) {
  const Check* c = rep.find(name);
  REQUIRE(c != nullptr);
  return c->pass;
}

}  // namespace

TEST_CASE("X_L as a 2-precontact space", "[structures]") {
  const TwoPrecontactSpace s = fixture::x_l_pcs();
  CHECK(s.valid());
  const TwoPrecontactSpace d = fixture::x_l_pcs(fixture::x0_diagonal());
  CHECK_FALSE(d.valid());
  REQUIRE(d.validation.first_failure() != nullptr);
  CHECK(d.validation.first_failure()->name == "PCS4");
  CHECK(d.validation.first_failure()->witness == "({Γ1},{Γ2})");
  CHECK_THROWS_AS(validate_pcs(fixture::x_l(), 0b011, {0b100, 0, 0}), DomainError);
  CHECK_THROWS_AS(canonical_pca_of_pcs(d), ValidationError);
  CHECK(canonical_pca_of_pcs(s) == fixture::b4_rho_l());
}

TEST_CASE("2-precontact axioms against literal clopen families", "[structures]") {
  int valid = 0;
  for (const Candidate& c : candidates(31, 400)) {
    const TwoPrecontactSpace s = validate_pcs(c.x, c.x0, c.r);
    const auto lit = Literal(c.x, c.x0).pcs(c.r);
    INFO(format_points(c.x, c.x0) << " R " << format_relation(c.r, c.x.names()));
    for (int k = 0; k < 5; ++k) CHECK(check(s.validation, "PCS" + std::to_string(k + 1)) == lit[k]);
    valid += s.valid();
  }
  CHECK(valid > 50);
}

TEST_CASE("canonical 2-precontact spaces", "[structures]") {
  const CanonicalPcs path = canonical_pcs_of_pca(fixture::b8_k_path());
  CHECK(path.supports == std::vector<Mask>{0b001, 0b010, 0b100, 0b011, 0b110});
  CHECK(path.space.space().size() == 5);
  CHECK(path.space.x0() == 0b00111);
  CHECK(path.space.valid());
  CHECK(path.g(fixture::R) == 0b10100);
  CHECK(path.space.space().name(3) == "{0,1}");
  CHECK(path.space.r[0] == 0b010);
  CHECK(path.space.r[1] == 0b100);

  const CanonicalPcs small = canonical_pcs_of_pca(fixture::b4_rho_s());
  CHECK(small.space.space().size() == 2);
  CHECK(is_discrete(small.space.space()));
  CHECK(canonical_pcs_of_pca(fixture::b4_rho_l()).space.space().size() == 3);
  CHECK_THROWS_AS(canonical_pcs_of_pca(fixture::pca(0, {})), DomainError);

  // every clan support equals the literal clan list, and g(a) collects the clans meeting a
  for (int n = 1; n <= 3; ++n)
    for (const auto& rows : oracle::all_kernel_rows(n)) {
      const CanonicalPcs c = canonical_pcs_of_pca(oracle::algebra_of(n, rows));
      REQUIRE(c.supports == oracle::clan_supports(n, rows));
      REQUIRE(c.space.valid());
      for (Mask a = 0; a < (1u << n); ++a) {
        PointSet want = 0;
        for (std::size_t i = 0; i < c.supports.size(); ++i)
          if ((c.supports[i] & a) != 0) want |= bit<PointSet>(static_cast<int>(i));
        REQUIRE(c.g(a) == want);
        REQUIRE(c.space.space().is_closed(want));
      }
    }
}

TEST_CASE("2-contact spaces and Stone 2-spaces against literal definitions", "[structures]") {
  for (const Candidate& c : candidates(32, 300)) {
    const Literal lit(c.x, c.x0);
    const TwoContactSpace cs = validate_cs(c.x, c.x0);
    CHECK(check(cs.validation, "dense") == lit.dense());
    CHECK(check(cs.validation, "CS1") == lit.t0());
    CHECK(check(cs.validation, "CS2") == lit.x0_stone());
    CHECK(check(cs.validation, "CS3") == lit.closed_base());
    const bool cs4 =
        lit.all_realized([&](std::uint32_t f) { return lit.is_clan(f, [&](PointSet a, PointSet b) { return lit.delta(a, b); }); });
    CHECK(check(cs.validation, "CS4") == cs4);
    const StoneTwoSpace s2 = validate_s2s(c.x, c.x0);
    CHECK(check(s2.validation, "S2S4") == lit.all_realized([&](std::uint32_t f) { return lit.is_grill(f); }));
  }
}

TEST_CASE("the discrete pair is a 2-contact space but not a Stone 2-space", "[structures]") {
  const FiniteSpace d = FiniteSpace::discrete(2);
  CHECK(validate_cs(d, 0b11).valid());
  const StoneTwoSpace s = validate_s2s(d, 0b11);
  CHECK_FALSE(s.valid());
  CHECK(s.validation.first_failure()->name == "S2S4");
  CHECK(validate_s2s(fixture::x_l(), 0b011).valid());
  CHECK(validate_cs(fixture::x_l(), 0b011).valid());
  CHECK_FALSE(validate_cs(fixture::x_l(), 0b001).valid());
}

TEST_CASE("canonical 2-contact space", "[structures]") {
  CHECK_THROWS_AS(canonical_cs_of_ca(fixture::b8_k_path()), PreconditionError);
  const CanonicalCs c = canonical_cs_of_ca(fixture::b4_rho_l());
  CHECK(c.space.valid());
  CHECK(c.space.pair.space.size() == 3);
  CHECK(canonical_cs_of_ca(fixture::b4_rho_s()).space.valid());
}

TEST_CASE("contact relation of a 2-contact space against all clopen pairs", "[structures]") {
  for (const Candidate& c : candidates(33, 300)) {
    const TwoContactSpace cs = validate_cs(c.x, c.x0);
    if (!cs.valid()) continue;
    const Literal lit(c.x, c.x0);
    const PairContactRelation rel = contact_relation_of_pair(cs);
    for (int a = 0; a < lit.n; ++a)
      for (int b = 0; b < lit.n; ++b) {
        bool want = has_bit(c.x0, a) && has_bit(c.x0, b);
        for (PointSet f : lit.clopens)
          for (PointSet g : lit.clopens)
            if (has_bit(f, a) && has_bit(g, b) && !lit.delta(f, g)) want = false;
        REQUIRE(has_bit(rel.r[a], b) == want);
      }
    REQUIRE(rel.candidates_valid.has_value());
    CHECK(rel.unique());
    CHECK(validate_pcs(c.x, c.x0, rel.r).valid());
  }
  const PairContactRelation xl = contact_relation_of_pair(validate_cs(fixture::x_l(), 0b011));
  CHECK(xl.r == fixture::x0_square());
  CHECK(xl.unique());
}

TEST_CASE("mereocompactness reports", "[structures]") {
  const FiniteSpace x = fixture::x_l();
  const MereocompactReport rc = mereo_report(rc_mereotopological_pair(x));
  CHECK(rc.is_space);
  CHECK(rc.is_t0);
  CHECK(rc.is_mereocompact);
  CHECK(rc.u_set == 0b011);
  CHECK(rc.u_dense);
  CHECK(rc.u_stone);
  CHECK(rc.rc_matches);
  CHECK(rc.sigma_agrees);
  REQUIRE(rc.unique.has_value());
  CHECK(*rc.unique);
  CHECK(rc.cs_valid);

  const MereocompactReport trivial = mereo_report(make_mereotopological_pair(x, {0, 0b111}));
  CHECK_FALSE(trivial.is_space);
  CHECK_FALSE(trivial.is_mereocompact);

  const MereocompactReport disc = mereo_report(rc_mereotopological_pair(FiniteSpace::discrete(3)));
  CHECK(disc.is_mereocompact);
  CHECK(disc.u_set == 0b111);
  CHECK(*disc.unique);

  // Sierpiński: RC = {∅, X} is not a closed base
  CHECK_FALSE(mereo_report(rc_mereotopological_pair(fixture::sierpinski())).is_space);

  CHECK(dense_stone_subspaces(x, rc_algebra(x)) == std::vector<PointSet>{0b011});
}
