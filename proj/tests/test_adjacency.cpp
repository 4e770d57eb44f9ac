#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pclab/adjacency.hpp"
#include "pclab/error.hpp"
#include "pclab/random.hpp"

using namespace pclab;

namespace {

// Every relation on n cells, n ≤ 3.
std::vector<PointRelation> all_relations(int n) {
  std::vector<PointRelation> out;
  for (const auto& rows : oracle::all_kernel_rows(n)) out.emplace_back(rows.begin(), rows.end());
  return out;
}

std::vector<std::pair<int, int>> pairs_of(const PointRelation& r) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (has_bit(r[x], static_cast<int>(y))) out.emplace_back(static_cast<int>(x), static_cast<int>(y));
  return out;
}

bool literal_holds(const PointRelation& r, PointSet a, PointSet b) {
  for (auto [x, y] : pairs_of(r))
    if (has_bit(a, x) && has_bit(b, y)) return true;
  return false;
}

// Directed reachability by Warshall, reflexive.
std::vector<PointSet> reach(const PointRelation& r) {
  const int n = static_cast<int>(r.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    m[x][x] = true;
    for (int y = 0; y < n; ++y) m[x][y] = m[x][y] || has_bit(r[x], y);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = m[i][j] || (m[i][k] && m[k][j]);
  std::vector<PointSet> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j]) out[i] |= bit<PointSet>(j);
  return out;
}

bool literal_zigzag(const PointRelation& r) {
  PointRelation sym = r;
  for (auto [x, y] : pairs_of(r)) sym[y] |= bit<PointSet>(x);
  const auto reach_sym = reach(sym);
  return reach_sym.empty() || reach_sym[0] == low_bits<PointSet>(static_cast<int>(r.size()));
}

bool literal_path(const PointRelation& r) {
  const auto rr = reach(r);
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (!has_bit(rr[x], static_cast<int>(y)) && !has_bit(rr[y], static_cast<int>(x))) return false;
  return true;
}

}  // namespace

TEST_CASE("R-flat", "[adjacency]") {
  const AdjacencySpace path = make_adjacency({"a", "b", "c"}, {{0, 1}, {1, 2}});
  const AdjacencySpace flat = r_flat(path);
  CHECK(pairs_of(flat.r).size() == 7);
  CHECK(flat.related(1, 0));
  CHECK_FALSE(flat.related(0, 2));
  CHECK(flat.cells == path.cells);
  CHECK_THROWS_AS(make_adjacency(2, {{0, 2}}), DomainError);
  CHECK_THROWS_AS(make_adjacency(0, {}), DomainError);
}

TEST_CASE("contact from an adjacency space against the existential definition", "[adjacency]") {
  for (int n = 1; n <= 3; ++n)
    for (const PointRelation& r : all_relations(n)) {
      const PrecontactAlgebra c = contact_from_adjacency(make_adjacency(n, pairs_of(r)));
      for (Mask a = 0; a < (1u << n); ++a)
        for (Mask b = 0; b < (1u << n); ++b) REQUIRE(c.holds(a, b) == literal_holds(r, a, b));
    }
}

TEST_CASE("contact on the subalgebra generated by blocks", "[adjacency]") {
  const AdjacencySpace path = make_adjacency({"a", "b", "c"}, {{0, 1}, {1, 2}});
  const std::vector<Mask> blocks{0b001, 0b110};
  const PrecontactAlgebra c = contact_from_adjacency(path, blocks);
  REQUIRE(c.atom_count() == 2);
  for (Mask a = 0; a < 4; ++a)
    for (Mask b = 0; b < 4; ++b) {
      PointSet sa = 0, sb = 0;
      for (int i = 0; i < 2; ++i) {
        if (has_bit(a, i)) sa |= blocks[i];
        if (has_bit(b, i)) sb |= blocks[i];
      }
      CHECK(c.holds(a, b) == literal_holds(path.r, sa, sb));
    }
}

TEST_CASE("relation properties against the axioms of the induced contact", "[adjacency]") {
  for (int n = 1; n <= 3; ++n)
    for (const PointRelation& r : all_relations(n)) {
      const AdjacencySpace a = make_adjacency(n, pairs_of(r));
      const Prop25Report rep = prop25_report(a);
      INFO(format_relation(r, a.cells));
      CHECK(rep.is_contact_iff());
      CHECK(rep.ctr_iff());
      CHECK(rep.ccon_iff());
      CHECK(rep.sharp_and_flat_agree);
      CHECK(rep.connected == literal_zigzag(r));
      CHECK(rep.connected_literal == literal_path(r));
    }
}

TEST_CASE("zigzag relation: connected only in the undirected sense", "[adjacency]") {
  // x → y ← z
  const AdjacencySpace a = make_adjacency({"x", "y", "z"}, {{0, 1}, {2, 1}});
  const Prop25Report rep = prop25_report(a);
  CHECK(rep.connected);
  CHECK(rep.ccon);
  CHECK_FALSE(rep.connected_literal);
}

TEST_CASE("canonical adjacency space", "[adjacency]") {
  const CanonicalAdjacency c = canonical_adjacency(fixture::b8_k_path());
  CHECK(c.space.cells == std::vector<std::string>{"u0", "u1", "u2"});
  CHECK(c.space.r == PointRelation{0b010, 0b100, 0});
  REQUIRE(c.space.topology.has_value());
  CHECK(*c.space.topology == FiniteSpace::discrete(3));
  CHECK(contact_from_adjacency(c.space) == fixture::b8_k_path());
  CHECK_THROWS_AS(canonical_adjacency(fixture::pca(0, {})), DomainError);
}

TEST_CASE("representation check on every kernel up to three atoms", "[adjacency]") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& rows : oracle::all_kernel_rows(n)) {
      const DualityReport rep = representation_check(oracle::algebra_of(n, rows));
      INFO(rep.subject);
      REQUIRE(rep.passed());
      CHECK(rep.checks.size() == 6);
    }
}

TEST_CASE("closed relations against the product topology", "[adjacency]") {
  const FiniteSpace xl = fixture::x_l();
  CHECK_FALSE(is_closed_relation({0b010, 0, 0}, xl));
  REQUIRE(closed_relation_gap({0b010, 0, 0}, xl).has_value());
  CHECK(is_closed_relation({0b111, 0b111, 0b111}, xl));
  CHECK(is_closed_relation({0, 0, 0b100}, xl));

  // Closed sets of X × X from the subbase C × X, X × C; pair (x,y) is point x*n+y.
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + uniform_index(rng, 3);
    const FiniteSpace x = random_space(rng, n, 0.4);
    const auto closed = oracle::closed_sets_of(x);
    std::vector<PointSet> base;
    for (PointSet c : closed) {
      PointSet left = 0, right = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (has_bit(c, i)) left |= bit<PointSet>(i * n + j);
          if (has_bit(c, j)) right |= bit<PointSet>(i * n + j);
        }
      base.push_back(left);
      base.push_back(right);
    }
    const auto product = oracle::closed_sets(n * n, base);
    PointRelation r(n, 0);
    PointSet flat = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (bernoulli(rng, 0.5)) {
          r[i] |= bit<PointSet>(j);
          flat |= bit<PointSet>(i * n + j);
        }
    const bool literal = std::binary_search(product.begin(), product.end(), flat);
    REQUIRE(is_closed_relation(r, x) == literal);
    REQUIRE(closed_relation_gap(r, x).has_value() == !literal);
  }
}
