#include "pclab/suite.hpp"

#include <chrono>
#include <map>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"
#include "pclab/isomorphism.hpp"

namespace pclab {

namespace {

void add_guarded(DualityReport& rep, const std::string& prefix, auto&& run) {
  try {
    rep.merge(prefix, run());
  } catch (const Error& e) {
    rep.add(prefix, false, e.what());
  }
}

DualityReport morphism_checks(const PrecontactAlgebra& a, Rng& rng) {
  DualityReport rep;
  const int m = 1 + uniform_index(rng, a.atom_count());
  const PcaMorphism phi = random_pca_morphism(rng, a, m, 0.7);
  rep.merge("g-square", check_naturality(phi));
  const PcsMorphism f = ga_morphism(phi);
  rep.merge("t-square", check_naturality(f));
  rep.merge("preimage", gt_as_preimage(f));

  // functoriality on a composable pair
  const PcaMorphism psi = random_pca_morphism(rng, phi.target(), 1 + uniform_index(rng, m), 0.7);
  const PcsMorphism lhs = ga_morphism(compose(psi, phi));
  const PcsMorphism rhs = compose(f, ga_morphism(psi));
  rep.add("Ga-functor", lhs.map() == rhs.map(), "G^a(ψ∘φ) differs from G^a(φ)∘G^a(ψ)");
  const PcaMorphism gt_lhs = gt_morphism(rhs);
  const PcaMorphism gt_rhs = compose(gt_morphism(ga_morphism(psi)), gt_morphism(f));
  rep.add("Gt-functor", gt_lhs.hom().atom_map() == gt_rhs.hom().atom_map(), "G^t(g∘f) differs from G^t(f)∘G^t(g)");
  return rep;
}

}  // namespace

DualityReport instance_suite(const PrecontactAlgebra& a, Rng& rng) {
  const auto start = std::chrono::steady_clock::now();
  DualityReport rep(std::to_string(a.atom_count()) + "-atom algebra " + format_pairs(a.kernel().pairs()));
  add_guarded(rep, "representation", [&] { return representation_check(a); });
  add_guarded(rep, "g", [&] { return check_g_iso(a); });
  add_guarded(rep, "axioms", [&] { return axiom_correspondence(a); });
  add_guarded(rep, "dual", [&] {
    const CanonicalPcs dual = ga_object(a);
    DualityReport r = dual.space.validation;
    r.merge("t", check_t_iso(dual.space));
    const bool complete = rc_algebra(dual.space.space()).sorted_atoms() == rc_pair_algebra(dual.space.pair).sorted_atoms();
    r.add("RC(X)=RC(X,X0)", complete, "RC(X) has other members");
    r.add("GtGa-iso", are_isomorphic(gt_object(dual.space), a), "G^t(G^a(B)) not isomorphic to B");
    return r;
  });
  add_guarded(rep, "interdefinable", [&] {
    DualityReport r;
    const ElementRelation ll = ll_relation(a);
    r.add("C->ll->C", relation_from_ll(ll) == a.kernel(), "round trip changed the kernel");
    r.add("ll-precontact-axioms", ll_axiom_report(ll).precontact_axioms(), "≪ of a precontact relation fails its axioms");
    return r;
  });
  add_guarded(rep, "specializations", [&] { return corollary_suites(a); });
  if (a.report().is_contact) {
    add_guarded(rep, "mereo", [&] {
      const CanonicalCs cs = canonical_cs_of_ca(a);
      const FiniteSpace& x = cs.space.pair.space;
      if (x.size() > Budget::current().max_bruteforce_points) return DualityReport();
      const DualityReport r = mereo_suite(MereotopologicalPair{x, rc_pair_algebra(cs.space.pair)});
      DualityReport out = r;
      out.add("u=X0", mereo_report(MereotopologicalPair{x, rc_pair_algebra(cs.space.pair)}).u_set == cs.space.pair.subset,
              "u(X,B) differs from X0");
      return out;
    });
  }
  add_guarded(rep, "morphisms", [&] { return morphism_checks(a, rng); });
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SuiteOutcome run_suite(const RandomSpec& spec, int count) {
  require_atoms(spec.atoms, Budget::current().max_exhaustive_atoms, "suite");
  if (spec.atoms < 1) throw DomainError("the degenerate algebra has no dual");
  if (count < 0) throw DomainError("negative instance count");
  const auto start = std::chrono::steady_clock::now();
  SuiteOutcome out;
  out.report.subject = std::to_string(count) + " instances, atoms=" + std::to_string(spec.atoms) +
                       " density=" + std::to_string(spec.density) + " seed=" + std::to_string(spec.seed) +
                       " constraints=" + format_constraints(spec.constraints);
  Rng master(spec.seed);
  std::vector<std::string> order;
  std::map<std::string, Check> merged;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = master();
    Rng rng(seed);
    const PrecontactAlgebra a = random_pca(rng, spec.atoms, spec.density, spec.constraints);
    DualityReport rep = instance_suite(a, rng);
    for (const Check& c : rep.checks) {
      auto [it, fresh] = merged.try_emplace(c.name, Check{c.name, true, {}});
      if (fresh) order.push_back(c.name);
      if (!c.pass && it->second.pass) {
        it->second.pass = false;
        it->second.witness = "instance " + std::to_string(i) + ": " + c.witness;
      }
    }
    if (!rep.passed()) out.failures.push_back(SuiteFailure{i, seed, a, std::move(rep)});
    ++out.instances;
  }
  for (const std::string& name : order) out.report.checks.push_back(merged[name]);
  out.report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace pclab
