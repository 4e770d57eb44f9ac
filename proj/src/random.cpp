#include "pclab/random.hpp"

#include <sstream>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"

namespace pclab {

namespace {

constexpr int kMaxRejections = 100000;

}  // namespace

Constraints parse_constraints(const std::string& tags) {
  Constraints c;
  std::istringstream in(tags);
  std::string tag;
  while (std::getline(in, tag, ',')) {
    if (tag == "contact") c.contact = true;
    else if (tag == "connected") c.connected = true;
    else if (tag == "complete") c.complete = true;
    else if (tag != "none" && !tag.empty()) throw DomainError("unknown constraint \"" + tag + "\"");
  }
  return c;
}

std::string format_constraints(const Constraints& c) {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ',';
    s += name;
  };
  add(c.contact, "contact");
  add(c.connected, "connected");
  add(c.complete, "complete");
  return s.empty() ? "none" : s;
}

bool bernoulli(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1p-53 < p; }

int uniform_index(Rng& rng, int n) {
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return static_cast<int>(v % range);
}

RelationKernel random_kernel(Rng& rng, const BooleanAlgebra& b, double density) {
  std::vector<Mask> rows(static_cast<std::size_t>(b.atom_count()), 0);
  for (int p = 0; p < b.atom_count(); ++p)
    for (int q = 0; q < b.atom_count(); ++q)
      if (bernoulli(rng, density)) rows[p] |= bit<Mask>(q);
  return RelationKernel::from_rows(b, std::move(rows));
}

bool atom_graph_connected(const RelationKernel& k) {
  const int n = k.atom_count();
  if (n == 0) return true;
  const RelationKernel t = k.transpose();
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int p) { next |= k.row(p) | t.row(p); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == low_bits<Mask>(n);
}

PrecontactAlgebra random_pca(Rng& rng, int atoms, double density, const Constraints& c) {
  require_atoms(atoms, Budget::current().max_atoms, "random algebra");
  if (atoms < 0) throw DomainError("negative atom count");
  if (density < 0.0 || density > 1.0) throw DomainError("density outside [0,1]");
  const BooleanAlgebra b(atoms);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    RelationKernel k = random_kernel(rng, b, density);
    if (c.contact) {
      std::vector<Mask> rows = k.rows();
      const RelationKernel t = k.transpose();
      for (int p = 0; p < atoms; ++p) rows[p] |= t.row(p) | bit<Mask>(p);
      k = RelationKernel::from_rows(b, std::move(rows));
    }
    if (!c.connected || atom_graph_connected(k)) return PrecontactAlgebra(std::move(k));
  }
  throw CapacityError("no connected kernel after " + std::to_string(kMaxRejections) + " draws");
}

PrecontactAlgebra random_pca(const RandomSpec& spec) {
  Rng rng(spec.seed);
  return random_pca(rng, spec.atoms, spec.density, spec.constraints);
}

PcaMorphism random_pca_morphism(Rng& rng, const PrecontactAlgebra& source, int target_atoms, double density) {
  if (source.atom_count() == 0 && target_atoms > 0) throw DomainError("no homomorphism out of the degenerate algebra");
  const BooleanAlgebra t(target_atoms);
  std::vector<int> map;
  for (int q = 0; q < target_atoms; ++q) map.push_back(uniform_index(rng, source.atom_count()));
  std::vector<Mask> rows(static_cast<std::size_t>(target_atoms), 0);
  for (int p = 0; p < target_atoms; ++p)
    for (int q = 0; q < target_atoms; ++q)
      if (source.kernel().contains(map[p], map[q]) && bernoulli(rng, density)) rows[p] |= bit<Mask>(q);
  PrecontactAlgebra target(RelationKernel::from_rows(t, std::move(rows)));
  return PcaMorphism(BooleanHom(source.algebra(), t, std::move(map)), source, std::move(target));
}

FiniteSpace random_space(Rng& rng, int points, double density) {
  require_points(points, Budget::current().max_points, "random space");
  std::vector<PointSet> cl(static_cast<std::size_t>(points));
  for (int x = 0; x < points; ++x) {
    cl[x] = bit<PointSet>(x);
    for (int y = 0; y < points; ++y)
      if (y != x && bernoulli(rng, density)) cl[x] |= bit<PointSet>(y);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < points; ++x) {
      PointSet next = cl[x];
      for_each_bit(cl[x], [&](int y) { next |= cl[y]; });
      if (next != cl[x]) {
        cl[x] = next;
        changed = true;
      }
    }
  }
  return FiniteSpace::from_closures(std::move(cl));
}

}  // namespace pclab
