#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pclab/boolean.hpp"
#include "pclab/error.hpp"

using namespace pclab;
using fixture::P;
using fixture::Q;
using fixture::R;

TEST_CASE("algebra carriers and element operations", "[boolean]") {
  CHECK(BooleanAlgebra(0).is_degenerate());
  CHECK(BooleanAlgebra(0).size() == 1);
  CHECK(BooleanAlgebra(2).size() == 4);
  CHECK(BooleanAlgebra(3).size() == 8);
  CHECK_THROWS_AS(BooleanAlgebra(17), CapacityError);
  CHECK_THROWS_AS(BooleanAlgebra(-1), DomainError);

  const BooleanAlgebra b4(2), b8(3);
  CHECK((Element(b4, P) | Element(b4, Q)).is_one());
  CHECK((Element(b4, P) & Element(b4, Q)).is_zero());
  CHECK(~(Element(b8, P) | Element(b8, Q)) == Element(b8, R));
  CHECK(leq(Element(b8, P), Element(b8, P | R)));
  CHECK_FALSE(leq(Element(b8, Q), Element(b8, P | R)));
  CHECK_THROWS_AS(Element(b4, R), DomainError);
  CHECK_THROWS_AS(Element(b4, P) | Element(b8, P), DomainError);
}

TEST_CASE("ultrafilters are exactly the principal ones", "[boolean]") {
  for (int n = 0; n <= 3; ++n) {
    const BooleanAlgebra b(n);
    const auto literal = oracle::families(n, [&](oracle::Family f) { return oracle::is_ultrafilter(f, n); });
    const auto lib = ultrafilters(b);
    REQUIRE(lib.size() == literal.size());
    REQUIRE(static_cast<int>(lib.size()) == n);
    for (int p = 0; p < n; ++p) {
      CHECK(oracle::is_ultrafilter(oracle::members_of(lib[p].members), n));
      CHECK(oracle::support(oracle::members_of(lib[p].members), n) == bit<Mask>(p));
    }
  }
}

TEST_CASE("stone map", "[boolean]") {
  CHECK(stone_map(BooleanAlgebra(2), P) == std::vector<int>{0});
  CHECK(stone_map(BooleanAlgebra(2), P | Q) == std::vector<int>{0, 1});
  CHECK(stone_map(BooleanAlgebra(3), P | Q) == std::vector<int>{0, 1});
}

TEST_CASE("is_family agrees with the literal definitions", "[boolean]") {
  for (int n = 1; n <= 3; ++n) {
    const BooleanAlgebra b(n);
    for (oracle::Family f : oracle::families(n, [](oracle::Family) { return true; })) {
      std::vector<Mask> members;
      for (Mask a = 0; a <= b.top(); ++a)
        if (oracle::in(f, a)) members.push_back(a);
      CHECK(is_family(FamilyKind::filter, b, members) == oracle::is_filter(f, n));
      CHECK(is_family(FamilyKind::ultrafilter, b, members) == oracle::is_ultrafilter(f, n));
      CHECK(is_family(FamilyKind::grill, b, members) == oracle::is_grill(f, n));
    }
  }
  const BooleanAlgebra b4(2);
  CHECK(is_family(FamilyKind::grill, b4, std::vector<Mask>{P, Q, P | Q}));
  CHECK_FALSE(is_family(FamilyKind::grill, b4, std::vector<Mask>{P, Q}));
  CHECK(is_family(FamilyKind::filter, b4, std::vector<Mask>{P | Q}));
}

TEST_CASE("grills are the nonempty unions of ultrafilters", "[boolean]") {
  for (int n = 1; n <= 3; ++n) {
    const auto literal = oracle::families(n, [&](oracle::Family f) { return oracle::is_grill(f, n); });
    const auto lib = grills(BooleanAlgebra(n));
    CHECK(lib.size() == (std::size_t{1} << n) - 1);
    REQUIRE(lib.size() == literal.size());
    std::vector<oracle::Family> got;
    for (const auto& g : lib) got.push_back(oracle::members_of(g.members));
    std::vector<oracle::Family> want = literal;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("grill lemma witnesses", "[boolean]") {
  const BooleanAlgebra b4(2);
  const ElementFamily top_filter(b4, FamilyKind::filter, {P | Q});
  const ElementFamily both(b4, FamilyKind::grill, {P, Q, P | Q});
  CHECK(grill_lemma_witness(top_filter, both) == principal_ultrafilter(b4, 0));
  CHECK(grill_lemma_witness(principal_ultrafilter(b4, 0), principal_ultrafilter(b4, 0)) ==
        principal_ultrafilter(b4, 0));
  CHECK(grill_lemma_witness(top_filter, principal_ultrafilter(b4, 1)) == principal_ultrafilter(b4, 1));
  CHECK_THROWS_AS(grill_lemma_witness(principal_ultrafilter(b4, 0), principal_ultrafilter(b4, 1)), PreconditionError);
}

TEST_CASE("homomorphisms from atom maps", "[boolean]") {
  const BooleanAlgebra b4(2), b2(1);
  const BooleanHom phi = hom_from_atom_map(b4, b2, {0});
  CHECK(phi.apply(P) == 1);
  CHECK(phi.apply(Q) == 0);
  CHECK(phi.apply(P | Q) == 1);
  CHECK(phi.apply(0) == 0);
  CHECK(BooleanHom::identity(b4).apply(Q) == Q);
  CHECK_THROWS_AS(hom_from_atom_map(b4, b2, {2}), DomainError);

  // every atom map B8 → B4 preserves the operations, checked elementwise
  const BooleanAlgebra b8(3);
  for (int m0 = 0; m0 < 3; ++m0)
    for (int m1 = 0; m1 < 3; ++m1) {
      const BooleanHom h(b8, b4, {m0, m1});
      CHECK(h.apply(b8.top()) == b4.top());
      for (Mask a = 0; a <= b8.top(); ++a) {
        CHECK(h.apply(b8.complement(a)) == b4.complement(h.apply(a)));
        for (Mask c = 0; c <= b8.top(); ++c) {
          CHECK(h.apply(a | c) == (h.apply(a) | h.apply(c)));
          CHECK(h.apply(a & c) == (h.apply(a) & h.apply(c)));
        }
      }
      const BooleanHom back(b4, b2, {1});
      const BooleanHom comp = compose(back, h);
      for (Mask a = 0; a <= b8.top(); ++a) CHECK(comp.apply(a) == back.apply(h.apply(a)));
    }
}
