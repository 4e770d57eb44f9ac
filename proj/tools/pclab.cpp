// pclab: command-line front end. Exit codes: 0 pass, 1 semantic failure, 2 usage,
// parse or capacity error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pclab/budget.hpp"
#include "pclab/dot.hpp"
#include "pclab/duality.hpp"
#include "pclab/error.hpp"
#include "pclab/io.hpp"
#include "pclab/isomorphism.hpp"
#include "pclab/random.hpp"
#include "pclab/suite.hpp"

namespace {

using namespace pclab;
using io::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Raised for kind mismatches and similar misuse detected after parsing.
struct UsageError : Error {
  using Error::Error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void print_report(std::ostream& out, const DualityReport& r, bool json, bool timing) {
  if (json) {
    out << io::dump(io::report_json(r, timing));
    return;
  }
  out << r.subject << "\n";
  for (const Check& c : r.checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
  out << (r.passed() ? "all checks passed" : std::to_string(r.failures()) + " check(s) failed") << "\n";
}

[[noreturn]] void wrong_kind(const io::Instance& inst, const std::string& what) {
  throw UsageError(std::string("kind \"") + io::kind_name(inst) + "\" does not support " + what);
}

// ------------------------------------------------------------------ validate

DualityReport validation_report(const io::Instance& inst) {
  DualityReport rep(std::string(io::kind_name(inst)) + " instance");
  if (auto* b = std::get_if<BooleanAlgebra>(&inst)) {
    rep.add("nondegenerate", !b->is_degenerate(), "0 = 1");
  } else if (std::holds_alternative<PrecontactAlgebra>(inst)) {
    // C0 and C+ hold by construction of a kernel; the input is rejected otherwise.
    rep.add("C0", true);
    rep.add("C+", true);
  } else if (std::holds_alternative<FiniteSpace>(inst)) {
    rep.add("space", true);
  } else if (auto* p = std::get_if<TopologicalPair>(&inst)) {
    rep.add("dense", is_dense(*p), "cl(X0)=" + format_points(p->space, p->space.closure(p->subset)));
  } else if (auto* s = std::get_if<TwoPrecontactSpace>(&inst)) {
    rep = s->validation;
  } else if (auto* c = std::get_if<TwoContactSpace>(&inst)) {
    rep = c->validation;
  } else if (auto* m = std::get_if<MereotopologicalPair>(&inst)) {
    const MereocompactReport r = mereo_report(*m);
    rep.add("closed-base", r.is_space, "some closed set is no intersection of members");
    rep.add("T0", r.is_t0, "two points share their closures");
    rep.add("mereocompact", r.is_mereocompact,
            r.unrealized_clan ? "clan " + format_indices(*r.unrealized_clan) + " is no σ_x" : "");
  } else if (std::holds_alternative<PcaMorphism>(inst) || std::holds_alternative<PcsMorphism>(inst)) {
    rep.add("morphism", true);
  } else if (auto* adj = std::get_if<AdjacencySpace>(&inst)) {
    rep.add("cells", adj->size() > 0, "no cells");
    if (adj->topology) rep.add("R-closed", is_closed_relation(adj->r, *adj->topology), "R is not closed in X×X");
  }
  if (rep.subject.empty()) rep.subject = std::string(io::kind_name(inst)) + " instance";
  return rep;
}

int cmd_validate(const std::string& file, bool text) {
  const io::Instance inst = io::read_instance(file);
  const DualityReport rep = validation_report(inst);
  print_report(std::cout, rep, !text, true);
  return rep.passed() ? kPass : kFail;
}

// ------------------------------------------------------------------ dualize

int cmd_dualize(const std::string& file, bool roundtrip, const std::string& out, bool timing) {
  const io::Instance inst = io::read_instance(file);
  DualityReport rep;
  if (auto* a = std::get_if<PrecontactAlgebra>(&inst)) {
    if (a->algebra().is_degenerate()) throw DomainError("the degenerate algebra has no dual space");
    const CanonicalPcs dual = ga_object(*a);
    write_output(out, io::dump(io::to_json(dual.space)));
    if (roundtrip) {
      rep = check_g_iso(*a);
      rep.add("GtGa(B)~B", are_isomorphic(gt_object(dual.space), *a), "not isomorphic");
    }
  } else if (auto* s = std::get_if<TwoPrecontactSpace>(&inst)) {
    const PrecontactAlgebra a = gt_object(*s);
    write_output(out, io::dump(io::to_json(a)));
    if (roundtrip) {
      rep = check_t_iso(*s);
      rep.add("GaGt(S)~S", pcs_isomorphism(ga_object(a).space, *s).has_value(), "not isomorphic");
    }
  } else if (auto* c = std::get_if<TwoContactSpace>(&inst)) {
    if (!c->valid()) throw ValidationError("not a 2-contact space: " + c->validation.first_failure()->name);
    const PrecontactAlgebra a = rc_pair_algebra(c->pair).contact_algebra();
    write_output(out, io::dump(io::to_json(a)));
    if (roundtrip) {
      const CanonicalCs back = canonical_cs_of_ca(a);
      rep = DualityReport("2-contact space round trip");
      rep.add("pair-iso", pair_isomorphism(back.space.pair, c->pair).has_value(), "not isomorphic");
    }
  } else if (auto* adj = std::get_if<AdjacencySpace>(&inst)) {
    const CanonicalPcs rec = reconstruct_from_sas(*adj);
    write_output(out, io::dump(io::to_json(rec.space)));
    if (roundtrip) rep = check_sas_roundtrip(*adj);
  } else {
    wrong_kind(inst, "dualize");
  }
  if (!roundtrip) return kPass;
  print_report(std::cerr, rep, false, timing);
  return rep.passed() ? kPass : kFail;
}

// ------------------------------------------------------------------ enumerate

struct Listing {
  std::vector<std::string> lines;
  Json json = Json::array();
};

std::string atom_set(Mask m) { return format_indices(m); }

const PrecontactAlgebra* as_pca(const io::Instance& inst, std::optional<PrecontactAlgebra>& hold) {
  if (auto* a = std::get_if<PrecontactAlgebra>(&inst)) return a;
  if (auto* b = std::get_if<BooleanAlgebra>(&inst)) {
    hold = PrecontactAlgebra(RelationKernel(*b));
    return &*hold;
  }
  return nullptr;
}

Listing enumerate(const io::Instance& inst, const std::string& what) {
  Listing out;
  auto add_support = [&](Mask s) {
    out.lines.push_back(atom_set(s));
    out.json.push_back(bit_indices(s));
  };
  auto add_points = [&](const FiniteSpace& x, PointSet s) {
    out.lines.push_back(format_points(x, s));
    Json a = Json::array();
    for_each_bit(s, [&](int p) { a.push_back(x.name(p)); });
    out.json.push_back(a);
  };
  std::optional<PrecontactAlgebra> hold;
  const PrecontactAlgebra* a = as_pca(inst, hold);
  if (what == "ultrafilters" || what == "grills") {
    if (!a) wrong_kind(inst, what);
    const std::vector<ElementFamily> fams = what == "ultrafilters" ? ultrafilters(a->algebra()) : grills(a->algebra());
    for (const ElementFamily& f : fams) {
      Mask support = 0;
      for (Mask m : f.members)
        if (std::popcount(m) == 1) support |= m;
      add_support(support);
    }
    return out;
  }
  if (what == "clans") {
    if (!std::holds_alternative<PrecontactAlgebra>(inst)) wrong_kind(inst, what);
    for (const Clan& c : clans(*a)) add_support(c.support);
    return out;
  }
  const FiniteSpace* x = nullptr;
  const TopologicalPair* pair = nullptr;
  if (auto* s = std::get_if<FiniteSpace>(&inst)) x = s;
  if (auto* p = std::get_if<TopologicalPair>(&inst)) pair = p;
  if (auto* s = std::get_if<TwoPrecontactSpace>(&inst)) pair = &s->pair;
  if (auto* c = std::get_if<TwoContactSpace>(&inst)) pair = &c->pair;
  if (pair) x = &pair->space;
  auto* mereo = std::get_if<MereotopologicalPair>(&inst);
  if (mereo) x = &mereo->space;
  if (what == "rc") {
    if (!x) wrong_kind(inst, what);
    const RegionAlgebra r = mereo ? mereo->algebra : pair ? rc_pair_algebra(*pair) : rc_algebra(*x);
    require_atoms(static_cast<int>(r.atoms.size()), Budget::current().max_sweep_atoms, "region listing");
    std::vector<PointSet> members = r.members();
    std::sort(members.begin(), members.end(), support_less<PointSet>);
    for (PointSet m : members) add_points(*x, m);
    return out;
  }
  if (what == "u-points") {
    if (!x) wrong_kind(inst, what);
    for_each_bit(mereo ? u_points_of_pair(*mereo) : u_points(*x), [&](int p) { add_points(*x, bit<PointSet>(p)); });
    return out;
  }
  throw UsageError("unknown listing \"" + what + "\"");
}

int cmd_enumerate(const std::string& file, const std::string& what, bool json) {
  const io::Instance inst = io::read_instance(file);
  const Listing l = enumerate(inst, what);
  if (json) {
    Json j;
    j["schema_version"] = io::kSchemaVersion;
    j["kind"] = "listing";
    j["what"] = what;
    j["items"] = l.json;
    j["count"] = l.lines.size();
    std::cout << io::dump(j);
  } else {
    for (const std::string& line : l.lines) std::cout << line << "\n";
    std::cout << "count " << l.lines.size() << "\n";
  }
  return kPass;
}

// ------------------------------------------------------------------ suite

int cmd_suite(const RandomSpec& spec, int count, const std::string& dump_dir, bool text, bool timing) {
  const SuiteOutcome outcome = run_suite(spec, count);
  print_report(std::cout, outcome.report, !text, timing);
  for (const SuiteFailure& f : outcome.failures) {
    const std::filesystem::path path =
        std::filesystem::path(dump_dir) / ("suite-failure-" + std::to_string(f.index) + ".json");
    write_output(path.string(), io::dump(io::to_json(f.instance)));
    std::cerr << "instance " << f.index << " (seed " << f.seed << ") failed " << f.report.first_failure()->name
              << ", written to " << path.string() << "\n";
  }
  return outcome.failures.empty() ? kPass : kFail;
}

// ------------------------------------------------------------------ export-dot

int cmd_export_dot(const std::string& file, const std::string& out) {
  const io::Instance inst = io::read_instance(file);
  std::string dot;
  if (auto* x = std::get_if<FiniteSpace>(&inst)) dot = to_dot(*x);
  else if (auto* p = std::get_if<TopologicalPair>(&inst)) dot = to_dot(*p);
  else if (auto* s = std::get_if<TwoPrecontactSpace>(&inst)) dot = to_dot(*s);
  else if (auto* c = std::get_if<TwoContactSpace>(&inst)) dot = to_dot(c->pair);
  else if (auto* m = std::get_if<MereotopologicalPair>(&inst)) dot = to_dot(m->space);
  else if (auto* a = std::get_if<AdjacencySpace>(&inst)) dot = to_dot(*a);
  else wrong_kind(inst, "export-dot");
  write_output(out, dot);
  return kPass;
}

// ------------------------------------------------------------------ random

int cmd_random(const RandomSpec& spec, const std::string& kind, int points, const std::string& out) {
  Rng rng(spec.seed);
  io::Instance inst = BooleanAlgebra();
  if (kind == "pca") {
    inst = random_pca(rng, spec.atoms, spec.density, spec.constraints);
  } else if (kind == "pcs") {
    const PrecontactAlgebra a = random_pca(rng, spec.atoms, spec.density, spec.constraints);
    if (a.algebra().is_degenerate()) throw DomainError("the degenerate algebra has no dual space");
    inst = ga_object(a).space;
  } else if (kind == "space") {
    inst = random_space(rng, points, spec.density);
  } else {
    throw UsageError("unknown kind \"" + kind + "\" (pca, pcs, space)");
  }
  write_output(out, io::dump(io::to_json(inst)));
  return kPass;
}

void add_random_options(CLI::App* cmd, RandomSpec& spec, std::string& constraints) {
  cmd->add_option("--atoms", spec.atoms, "number of atoms")->capture_default_str();
  cmd->add_option("--density", spec.density, "kernel density in [0,1]")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--seed", spec.seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--constraints", constraints, "comma-separated: contact, connected, complete, none")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model lab for precontact algebras and 2-precontact spaces"};
  app.require_subcommand(1);

  std::string file, out = "-", what, dump_dir = ".", kind = "pca", constraints = "none";
  bool text = false, json = false, roundtrip = false, no_timing = false;
  int count = 100, points = 4;
  RandomSpec spec;

  auto* validate = app.add_subcommand("validate", "check an instance against its axioms");
  validate->add_option("file", file, "instance file")->required();
  validate->add_flag("--text", text, "plain-text verdicts instead of JSON");

  auto* dualize = app.add_subcommand("dualize", "algebra to space or space to algebra");
  dualize->add_option("file", file, "pca, pcs, cs or adjacency file")->required();
  dualize->add_option("-o,--output", out, "output file (default stdout)");
  dualize->add_flag("--roundtrip", roundtrip, "verify the g or t isomorphism, report on stderr");
  dualize->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list ultrafilters, grills, clans, rc or u-points");
  enumerate_cmd->add_option("file", file, "instance file")->required();
  enumerate_cmd->add_option("what", what, "ultrafilters | grills | clans | rc | u-points")
      ->required()
      ->check(CLI::IsMember({"ultrafilters", "grills", "clans", "rc", "u-points"}));
  enumerate_cmd->add_flag("--json", json, "JSON listing instead of text");

  auto* suite = app.add_subcommand("suite", "run the property suite on seeded random instances");
  add_random_options(suite, spec, constraints);
  suite->add_option("--count", count, "number of instances")->capture_default_str();
  suite->add_option("--dump-dir", dump_dir, "directory for failing instance files")->capture_default_str();
  suite->add_flag("--text", text, "plain-text report instead of JSON");
  suite->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a space, pair, pcs or adjacency file");
  dot->add_option("file", file, "instance file")->required();
  dot->add_option("-o,--output", out, "output file (default stdout)");

  auto* random = app.add_subcommand("random", "generate a seeded random instance");
  add_random_options(random, spec, constraints);
  random->add_option("--kind", kind, "pca | pcs | space")->capture_default_str();
  random->add_option("--points", points, "points for --kind space")->capture_default_str();
  random->add_option("-o,--output", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    spec.constraints = parse_constraints(constraints);
    if (validate->parsed()) return cmd_validate(file, text);
    if (dualize->parsed()) return cmd_dualize(file, roundtrip, out, !no_timing);
    if (enumerate_cmd->parsed()) return cmd_enumerate(file, what, json);
    if (suite->parsed()) return cmd_suite(spec, count, dump_dir, text, !no_timing);
    if (dot->parsed()) return cmd_export_dot(file, out);
    if (random->parsed()) return cmd_random(spec, kind, points, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "over budget: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
