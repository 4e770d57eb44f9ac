#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "pclab/dot.hpp"
#include "pclab/error.hpp"
#include "pclab/io.hpp"
#include "pclab/random.hpp"

using namespace pclab;
using pclab::io::Json;

namespace {

io::Instance roundtrip(const io::Instance& in) { return io::parse_instance(io::dump(io::to_json(in))); }

std::string error_of(const std::string& text) {
  try {
    io::parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("every kind survives a round trip", "[io]") {
  const PrecontactAlgebra path = fixture::b8_k_path();
  const TwoPrecontactSpace xl = fixture::x_l_pcs();
  const PcaMorphism phi(hom_from_atom_map(BooleanAlgebra(2), BooleanAlgebra(1), {0}), fixture::b4_rho_l(),
                        fixture::pca(1, {{0, 0}}));
  const std::vector<io::Instance> all{
      BooleanAlgebra(3),
      path,
      fixture::x_l(),
      TopologicalPair{fixture::x_l(), 0b011},
      xl,
      validate_cs(fixture::x_l(), 0b011),
      rc_mereotopological_pair(fixture::x_l()),
      phi,
      ga_morphism(phi),
      make_adjacency({"a", "b", "c"}, {{0, 1}, {1, 2}}, FiniteSpace::discrete(3)),
  };
  for (const io::Instance& in : all) {
    INFO(io::kind_name(in));
    const io::Instance back = roundtrip(in);
    REQUIRE(back.index() == in.index());
    CHECK(io::dump(io::to_json(back)) == io::dump(io::to_json(in)));
    const Json j = io::to_json(in);
    CHECK(j["schema_version"] == "1");
    CHECK(j["kind"] == io::kind_name(in));
  }
  CHECK(std::get<PrecontactAlgebra>(roundtrip(path)) == path);
  const auto s = std::get<TwoPrecontactSpace>(roundtrip(xl));
  CHECK(s.space() == xl.space());
  CHECK(s.x0() == xl.x0());
  CHECK(s.r == xl.r);
  CHECK(s.valid());
  CHECK(std::get<PcsMorphism>(roundtrip(ga_morphism(phi))).map() == ga_morphism(phi).map());
  CHECK(std::get<PcaMorphism>(roundtrip(phi)).hom().atom_map() == std::vector<int>{0});
}

TEST_CASE("random instances round trip", "[io]") {
  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const PrecontactAlgebra a = random_pca(rng, 1 + uniform_index(rng, 5), 0.4);
    REQUIRE(std::get<PrecontactAlgebra>(roundtrip(a)) == a);
    const CanonicalPcs d = ga_object(a);
    const auto back = std::get<TwoPrecontactSpace>(roundtrip(d.space));
    REQUIRE(back.space() == d.space.space());
    REQUIRE(back.r == d.space.r);
    const FiniteSpace x = random_space(rng, 1 + uniform_index(rng, 8), 0.3);
    REQUIRE(std::get<FiniteSpace>(roundtrip(x)) == x);
  }
}

TEST_CASE("relation input is normalized to its kernel", "[io]") {
  const std::string text = R"({"schema_version":"1","kind":"pca","algebra":{"atoms":2},
    "relation":[[1,1],[1,3],[3,1],[3,3],[2,2],[2,3],[3,2]]})";
  const auto a = std::get<PrecontactAlgebra>(io::parse_instance(text));
  CHECK(a == fixture::b4_rho_s());
  const std::string broken = R"({"schema_version":"1","kind":"pca","algebra":{"atoms":2},"relation":[[1,1]]})";
  CHECK_THROWS_AS(io::parse_instance(broken), AxiomViolation);
}

TEST_CASE("names and indices are interchangeable references", "[io]") {
  const std::string by_name = R"({"schema_version":"1","kind":"pcs",
    "space":{"points":["Γ1","Γ2","Γ3"],"closed_base":[["Γ1","Γ3"],["Γ2","Γ3"],["Γ3"]]},
    "x0":["Γ1","Γ2"],"R":[["Γ1","Γ1"],["Γ1","Γ2"],["Γ2","Γ1"],["Γ2","Γ2"]]})";
  const std::string by_index = R"({"schema_version":"1","kind":"pcs",
    "space":{"points":["Γ1","Γ2","Γ3"],"closed_base":[[0,2],[1,2],[2]]},
    "x0":[0,1],"R":[[0,0],[0,1],[1,0],[1,1]]})";
  const auto a = std::get<TwoPrecontactSpace>(io::parse_instance(by_name));
  const auto b = std::get<TwoPrecontactSpace>(io::parse_instance(by_index));
  CHECK(a.space() == fixture::x_l());
  CHECK(a.space() == b.space());
  CHECK(a.r == b.r);
}

TEST_CASE("parse errors carry a location", "[io]") {
  CHECK(error_of("{").find("malformed JSON") != std::string::npos);
  CHECK(error_of("[]") != "");
  CHECK(error_of(R"({"kind":"pca"})").find("schema_version") != std::string::npos);
  CHECK(error_of(R"({"schema_version":"2","kind":"pca"})").find("schema_version") != std::string::npos);
  CHECK(error_of(R"({"schema_version":"1","kind":"nope"})").find("kind") != std::string::npos);
  CHECK(error_of(R"({"schema_version":"1","kind":"pca","algebra":{"atoms":2},"kernel":[[0,5]]})") != "");
  CHECK(error_of(R"({"schema_version":"1","kind":"space","points":["a"],"closed_base":[["b"]]})") != "");
  CHECK(error_of(R"({"schema_version":"1","kind":"algebra","atoms":"three"})").find("atoms") != std::string::npos);
  CHECK(error_of(R"({"schema_version":"1","kind":"algebra","atoms":40})").find("/atoms") != std::string::npos);
  CHECK_THROWS_AS(io::parse_instance(R"({"schema_version":"1","kind":"algebra","atoms":20})"), CapacityError);
  CHECK_THROWS_AS(io::read_instance("/nonexistent/file.json"), ParseError);
}

TEST_CASE("reports as JSON", "[io]") {
  DualityReport r("demo");
  r.add("first", true);
  r.add("second", false, "because");
  r.elapsed_ms = 1.5;
  const Json j = io::report_json(r);
  CHECK(j["schema_version"] == "1");
  CHECK(j["kind"] == "report");
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["witness"] == "because");
  CHECK(j.contains("elapsed_ms"));
  CHECK(io::report_json(r, false)["elapsed_ms"] == 0.0);
}

TEST_CASE("DOT export", "[io]") {
  const std::string xl = to_dot(fixture::x_l_pcs());
  CHECK(xl.rfind("digraph pclab {", 0) == 0);
  CHECK(xl.find("n2 -> n0;") != std::string::npos);
  CHECK(xl.find("n2 -> n1;") != std::string::npos);
  CHECK(xl == to_dot(fixture::x_l_pcs()));
  std::size_t dashed = 0, pos = 0;
  while ((pos = xl.find("dashed", pos)) != std::string::npos) ++dashed, ++pos;
  CHECK(dashed == 4);
  CHECK(to_dot(FiniteSpace::discrete(3)).find("->") == std::string::npos);
  const std::string adj = to_dot(make_adjacency({"a", "b"}, {{0, 1}}, FiniteSpace::indiscrete(2)));
  CHECK(adj.find("n0 -> n1") != std::string::npos);
  CHECK(adj.find("n1 -> n0") == std::string::npos);
  CHECK(to_dot(TopologicalPair{fixture::x_l(), 0b011}).find("doublecircle") != std::string::npos);
}
