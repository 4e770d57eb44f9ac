#include "pclab/io.hpp"

#include <fstream>
#include <sstream>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"

namespace pclab::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const std::string& where, const char* key) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const std::string& where, const char* key) {
  const Json& a = field(j, where, key);
  if (!a.is_array()) fail(where + "/" + key, "expected an array");
  return a;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

// An index below n, or a name from names.
int as_ref(const Json& j, const std::string& where, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (j.is_string()) {
    const auto it = std::find(names.begin(), names.end(), j.get<std::string>());
    if (it == names.end()) fail(where, "unknown name \"" + j.get<std::string>() + "\"");
    return static_cast<int>(it - names.begin());
  }
  const int i = as_int(j, where);
  if (i < 0 || i >= n) fail(where, "index " + std::to_string(i) + " out of range");
  return i;
}

PointSet as_point_set(const Json& j, const std::string& where, const std::vector<std::string>& names) {
  if (!j.is_array()) fail(where, "expected an array of points");
  PointSet s = 0;
  for (std::size_t i = 0; i < j.size(); ++i) s |= bit<PointSet>(as_ref(j[i], where + "/" + std::to_string(i), names));
  return s;
}

std::vector<std::pair<int, int>> as_pairs(const Json& j, const std::string& where,
                                          const std::vector<std::string>& names) {
  if (!j.is_array()) fail(where, "expected an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) fail(w, "expected a pair");
    out.emplace_back(as_ref(j[i][0], w + "/0", names), as_ref(j[i][1], w + "/1", names));
  }
  return out;
}

std::vector<std::string> index_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Json point_list(const FiniteSpace& x, PointSet s) {
  Json a = Json::array();
  for_each_bit(s, [&](int p) { a.push_back(x.name(p)); });
  return a;
}

Json relation_pairs(const FiniteSpace& x, const PointRelation& r, PointSet domain) {
  Json a = Json::array();
  for_each_bit(domain, [&](int p) {
    for_each_bit(r[p] & domain, [&](int q) { a.push_back(Json::array({x.name(p), x.name(q)})); });
  });
  return a;
}

// ------------------------------------------------------------------ readers

BooleanAlgebra read_algebra(const Json& j, const std::string& where) {
  const int n = as_int(field(j, where, "atoms"), where + "/atoms");
  if (n < 0) fail(where + "/atoms", "negative atom count");
  if (n > kMaskBits) fail(where + "/atoms", "atom count above the mask width");
  return BooleanAlgebra(n);
}

PrecontactAlgebra read_pca(const Json& j, const std::string& where) {
  const BooleanAlgebra b = read_algebra(field(j, where, "algebra"), where + "/algebra");
  const bool has_kernel = j.contains("kernel");
  if (has_kernel == j.contains("relation")) fail(where, "expected exactly one of \"kernel\" and \"relation\"");
  if (has_kernel) {
    std::vector<AtomPair> pairs;
    for (auto [p, q] : as_pairs(j["kernel"], where + "/kernel", index_names(b.atom_count()))) pairs.emplace_back(p, q);
    return PrecontactAlgebra(RelationKernel(b, pairs));
  }
  RawRelation raw{b, {}};
  const Json& rel = j["relation"];
  if (!rel.is_array()) fail(where + "/relation", "expected an array of element pairs");
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string w = where + "/relation/" + std::to_string(i);
    if (!rel[i].is_array() || rel[i].size() != 2) fail(w, "expected a pair");
    const int a = as_int(rel[i][0], w + "/0"), c = as_int(rel[i][1], w + "/1");
    if (a < 0 || c < 0 || !b.contains(static_cast<Mask>(a)) || !b.contains(static_cast<Mask>(c)))
      fail(w, "element outside the algebra");
    raw.pairs.emplace_back(static_cast<Mask>(a), static_cast<Mask>(c));
  }
  return PrecontactAlgebra(normalize_relation(raw));
}

FiniteSpace read_space(const Json& j, const std::string& where) {
  const Json& pts = array_field(j, where, "points");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    names.push_back(as_string(pts[i], where + "/points/" + std::to_string(i)));
    if (std::count(names.begin(), names.end(), names.back()) > 1) fail(where + "/points", "duplicate point name");
  }
  if (names.empty()) fail(where + "/points", "a space needs at least one point");
  if (static_cast<int>(names.size()) > Budget::current().max_points)
    throw CapacityError(where + ": more than " + std::to_string(Budget::current().max_points) + " points");
  const Json& base = array_field(j, where, "closed_base");
  std::vector<PointSet> sets;
  for (std::size_t i = 0; i < base.size(); ++i)
    sets.push_back(as_point_set(base[i], where + "/closed_base/" + std::to_string(i), names));
  return space_from_closed_base(std::move(names), sets);
}

PointSet read_x0(const Json& j, const std::string& where, const FiniteSpace& x) {
  return as_point_set(field(j, where, "x0"), where + "/x0", x.names());
}

TwoPrecontactSpace read_pcs(const Json& j, const std::string& where) {
  const FiniteSpace x = read_space(field(j, where, "space"), where + "/space");
  const PointSet x0 = read_x0(j, where, x);
  PointRelation r(static_cast<std::size_t>(x.size()), 0);
  for (auto [p, q] : as_pairs(field(j, where, "R"), where + "/R", x.names())) {
    if (!has_bit(x0, p) || !has_bit(x0, q)) fail(where + "/R", "pair (" + x.name(p) + "," + x.name(q) + ") leaves X0");
    r[p] |= bit<PointSet>(q);
  }
  return validate_pcs(x, x0, r);
}

MereotopologicalPair read_mereo(const Json& j, const std::string& where) {
  const FiniteSpace x = read_space(field(j, where, "space"), where + "/space");
  std::vector<PointSet> members;
  if (j.contains("members")) {
    const Json& m = array_field(j, where, "members");
    for (std::size_t i = 0; i < m.size(); ++i)
      members.push_back(as_point_set(m[i], where + "/members/" + std::to_string(i), x.names()));
  } else {
    const Json& a = array_field(j, where, "atoms");
    std::vector<PointSet> atoms;
    for (std::size_t i = 0; i < a.size(); ++i)
      atoms.push_back(as_point_set(a[i], where + "/atoms/" + std::to_string(i), x.names()));
    require_atoms(static_cast<int>(atoms.size()), Budget::current().max_atoms, "mereotopological algebra");
    for (Mask m = 0; m <= low_bits<Mask>(static_cast<int>(atoms.size())); ++m) {
      PointSet f = 0;
      for_each_bit(m, [&](int i) { f |= atoms[i]; });
      members.push_back(f);
    }
  }
  return make_mereotopological_pair(x, members);
}

AdjacencySpace read_adjacency(const Json& j, const std::string& where) {
  const Json& c = array_field(j, where, "cells");
  std::vector<std::string> cells;
  for (std::size_t i = 0; i < c.size(); ++i) cells.push_back(as_string(c[i], where + "/cells/" + std::to_string(i)));
  if (cells.empty()) fail(where + "/cells", "an adjacency space needs at least one cell");
  const auto pairs = as_pairs(field(j, where, "R"), where + "/R", cells);
  std::optional<FiniteSpace> topology;
  if (j.contains("topology") && !j["topology"].is_null()) {
    topology = read_space(j["topology"], where + "/topology");
    if (topology->size() != static_cast<int>(cells.size())) fail(where + "/topology", "point count differs from cells");
  }
  return make_adjacency(std::move(cells), pairs, std::move(topology));
}

Instance read_morphism(const Json& j, const std::string& where) {
  const std::string category = as_string(field(j, where, "category"), where + "/category");
  if (category == "pca") {
    const PrecontactAlgebra s = read_pca(field(j, where, "source"), where + "/source");
    const PrecontactAlgebra t = read_pca(field(j, where, "target"), where + "/target");
    const Json& m = array_field(j, where, "atom_map");
    if (static_cast<int>(m.size()) != t.atom_count()) fail(where + "/atom_map", "one entry per target atom expected");
    std::vector<int> map;
    for (std::size_t i = 0; i < m.size(); ++i)
      map.push_back(as_ref(m[i], where + "/atom_map/" + std::to_string(i), index_names(s.atom_count())));
    return PcaMorphism(BooleanHom(s.algebra(), t.algebra(), std::move(map)), s, t);
  }
  if (category == "pcs") {
    TwoPrecontactSpace s = read_pcs(field(j, where, "source"), where + "/source");
    TwoPrecontactSpace t = read_pcs(field(j, where, "target"), where + "/target");
    const Json& m = array_field(j, where, "map");
    if (static_cast<int>(m.size()) != s.space().size()) fail(where + "/map", "one entry per source point expected");
    std::vector<int> map;
    for (std::size_t i = 0; i < m.size(); ++i)
      map.push_back(as_ref(m[i], where + "/map/" + std::to_string(i), t.space().names()));
    return PcsMorphism(std::move(s), std::move(t), std::move(map));
  }
  fail(where + "/category", "expected \"pca\" or \"pcs\"");
}

// ------------------------------------------------------------------ writers

Json with_header(const char* kind, Json payload) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  for (auto& [k, v] : payload.items()) j[k] = v;
  return j;
}

Json pair_payload(const TopologicalPair& p) {
  Json j;
  j["space"] = space_json(p.space);
  j["x0"] = point_list(p.space, p.subset);
  return j;
}

}  // namespace

const char* kind_name(const Instance& instance) {
  static constexpr const char* names[] = {"algebra", "pca",   "space",    "pair",     "pcs",
                                          "cs",      "mereo", "morphism", "morphism", "adjacency"};
  return names[instance.index()];
}

Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  const std::string version = as_string(field(j, "", "schema_version"), "/schema_version");
  if (version != kSchemaVersion) fail("/schema_version", "unsupported version \"" + version + "\"");
  const std::string kind = as_string(field(j, "", "kind"), "/kind");
  if (kind == "algebra") return read_algebra(j, "");
  if (kind == "pca") return read_pca(j, "");
  if (kind == "space") return read_space(j, "");
  if (kind == "pair") {
    FiniteSpace x = read_space(field(j, "", "space"), "/space");
    const PointSet x0 = read_x0(j, "", x);
    return TopologicalPair{std::move(x), x0};
  }
  if (kind == "pcs") return read_pcs(j, "");
  if (kind == "cs") {
    const FiniteSpace x = read_space(field(j, "", "space"), "/space");
    return validate_cs(x, read_x0(j, "", x));
  }
  if (kind == "mereo") return read_mereo(j, "");
  if (kind == "morphism") return read_morphism(j, "");
  if (kind == "adjacency") return read_adjacency(j, "");
  fail("/kind", "unknown kind \"" + kind + "\"");
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_instance(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json algebra_json(const BooleanAlgebra& b) { return Json{{"atoms", b.atom_count()}}; }

Json pca_json(const PrecontactAlgebra& a) {
  Json j;
  j["algebra"] = algebra_json(a.algebra());
  Json k = Json::array();
  for (auto [p, q] : a.kernel().pairs()) k.push_back(Json::array({p, q}));
  j["kernel"] = k;
  return j;
}

Json space_json(const FiniteSpace& x) {
  Json j;
  j["points"] = x.names();
  Json base = Json::array();
  for (int p = 0; p < x.size(); ++p) base.push_back(point_list(x, x.point_closure(p)));
  j["closed_base"] = base;
  return j;
}

Json pcs_json(const TwoPrecontactSpace& s) {
  Json j = pair_payload(s.pair);
  j["R"] = relation_pairs(s.space(), s.r, s.x0());
  return j;
}

Json adjacency_json(const AdjacencySpace& a) {
  Json j;
  j["cells"] = a.cells;
  Json r = Json::array();
  for (int x = 0; x < a.size(); ++x)
    for_each_bit(a.r[x], [&](int y) { r.push_back(Json::array({a.cells[x], a.cells[y]})); });
  j["R"] = r;
  if (a.topology) j["topology"] = space_json(*a.topology);
  return j;
}

Json report_json(const DualityReport& r, bool timing) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "report";
  j["subject"] = r.subject;
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  j["checks"] = checks;
  j["pass"] = r.passed();
  j["elapsed_ms"] = timing ? r.elapsed_ms : 0.0;
  return j;
}

Json to_json(const Instance& instance) {
  struct Visitor {
    Json operator()(const BooleanAlgebra& b) const { return with_header("algebra", algebra_json(b)); }
    Json operator()(const PrecontactAlgebra& a) const { return with_header("pca", pca_json(a)); }
    Json operator()(const FiniteSpace& x) const { return with_header("space", space_json(x)); }
    Json operator()(const TopologicalPair& p) const { return with_header("pair", pair_payload(p)); }
    Json operator()(const TwoPrecontactSpace& s) const { return with_header("pcs", pcs_json(s)); }
    Json operator()(const TwoContactSpace& s) const { return with_header("cs", pair_payload(s.pair)); }
    Json operator()(const MereotopologicalPair& m) const {
      Json j;
      j["space"] = space_json(m.space);
      Json atoms = Json::array();
      for (PointSet a : m.algebra.atoms) atoms.push_back(point_list(m.space, a));
      j["atoms"] = atoms;
      return with_header("mereo", j);
    }
    Json operator()(const PcaMorphism& f) const {
      Json j;
      j["category"] = "pca";
      j["source"] = pca_json(f.source());
      j["target"] = pca_json(f.target());
      j["atom_map"] = f.hom().atom_map();
      return with_header("morphism", j);
    }
    Json operator()(const PcsMorphism& f) const {
      Json j;
      j["category"] = "pcs";
      j["source"] = pcs_json(f.source());
      j["target"] = pcs_json(f.target());
      Json m = Json::array();
      for (int y : f.map()) m.push_back(f.target().space().name(y));
      j["map"] = m;
      return with_header("morphism", j);
    }
    Json operator()(const AdjacencySpace& a) const { return with_header("adjacency", adjacency_json(a)); }
  };
  return std::visit(Visitor{}, instance);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pclab::io
