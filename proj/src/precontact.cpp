#include "pclab/precontact.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "pclab/budget.hpp"
#include "pclab/error.hpp"
#include "pclab/kernels.hpp"

namespace pclab {

namespace {

std::string pair_string(Mask a, Mask b) { return "(" + format_indices(a) + "," + format_indices(b) + ")"; }

void require_atom(const BooleanAlgebra& b, int p) {
  if (p < 0 || p >= b.atom_count())
    throw DomainError("atom " + std::to_string(p) + " out of range for an algebra with " +
                      std::to_string(b.atom_count()) + " atoms");
}

}  // namespace

// ---------------------------------------------------------------- RelationKernel

RelationKernel::RelationKernel(BooleanAlgebra algebra)
    : algebra_(algebra), rows_(static_cast<std::size_t>(algebra.atom_count()), 0) {}

RelationKernel::RelationKernel(BooleanAlgebra algebra, const std::vector<AtomPair>& pairs)
    : RelationKernel(algebra) {
  for (auto [p, q] : pairs) {
    require_atom(algebra_, p);
    require_atom(algebra_, q);
    rows_[p] |= bit<Mask>(q);
  }
}

RelationKernel RelationKernel::from_rows(BooleanAlgebra algebra, std::vector<Mask> rows) {
  if (static_cast<int>(rows.size()) != algebra.atom_count())
    throw DomainError("kernel needs one row per atom");
  for (Mask r : rows) algebra.require(r);
  RelationKernel k(algebra);
  k.rows_ = std::move(rows);
  return k;
}

std::vector<AtomPair> RelationKernel::pairs() const {
  std::vector<AtomPair> out;
  for (int p = 0; p < atom_count(); ++p) for_each_bit(rows_[p], [&](int q) { out.emplace_back(p, q); });
  return out;
}

int RelationKernel::pair_count() const {
  int n = 0;
  for (Mask r : rows_) n += std::popcount(r);
  return n;
}

Mask RelationKernel::image(Mask a) const {
  Mask out = 0;
  for_each_bit(a & algebra_.top(), [&](int p) { out |= rows_[p]; });
  return out;
}

bool RelationKernel::holds(Mask a, Mask b) const { return (image(a) & b) != 0; }

RelationKernel RelationKernel::transpose() const {
  RelationKernel t(algebra_);
  for (int p = 0; p < atom_count(); ++p) for_each_bit(rows_[p], [&](int q) { t.rows_[q] |= bit<Mask>(p); });
  return t;
}

bool RelationKernel::subset_of(const RelationKernel& other) const {
  if (algebra_ != other.algebra_) return false;
  for (int p = 0; p < atom_count(); ++p)
    if ((rows_[p] & ~other.rows_[p]) != 0) return false;
  return true;
}

bool RelationKernel::is_reflexive() const {
  for (int p = 0; p < atom_count(); ++p)
    if (!contains(p, p)) return false;
  return true;
}

bool RelationKernel::is_symmetric() const { return *this == transpose(); }

bool RelationKernel::is_transitive() const {
  for (int p = 0; p < atom_count(); ++p)
    if ((image(rows_[p]) & ~rows_[p]) != 0) return false;
  return true;
}

bool holds(const RelationKernel& c, Mask a, Mask b) { return c.holds(a, b); }

std::string format_pairs(const std::vector<AtomPair>& pairs) {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ',';
    s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  }
  return s + "}";
}

// ---------------------------------------------------------------- element relations

ElementRelation::ElementRelation(BooleanAlgebra b) : algebra(b) {
  require_atoms(b.atom_count(), Budget::current().max_exhaustive_atoms, "element relation");
  rows.assign(b.size(), 0);
}

void ElementRelation::set(Mask a, Mask b, bool value) {
  algebra.require(a);
  algebra.require(b);
  if (value)
    rows[a] |= std::uint64_t{1} << b;
  else
    rows[a] &= ~(std::uint64_t{1} << b);
}

std::size_t ElementRelation::size() const {
  std::size_t n = 0;
  for (auto r : rows) n += std::popcount(r);
  return n;
}

ElementRelation expand(const RelationKernel& c) {
  ElementRelation r(c.algebra());
  const auto size = static_cast<Mask>(c.algebra().size());
  for (Mask a = 0; a < size; ++a) {
    const Mask img = c.image(a);
    for (Mask b = 0; b < size; ++b)
      if ((img & b) != 0) r.rows[a] |= std::uint64_t{1} << b;
  }
  return r;
}

ElementRelation to_element_relation(const RawRelation& raw) {
  ElementRelation r(raw.algebra);
  for (auto [a, b] : raw.pairs) r.set(a, b);
  return r;
}

RelationKernel normalize_relation(const RawRelation& raw) { return normalize_relation(to_element_relation(raw)); }

RelationKernel normalize_relation(const ElementRelation& r) {
  const BooleanAlgebra& alg = r.algebra;
  const auto size = static_cast<Mask>(alg.size());
  for (Mask a = 0; a < size; ++a)
    for (Mask b = 0; b < size; ++b)
      if (r.test(a, b) && (a == 0 || b == 0)) throw AxiomViolation("C0", pair_string(a, b));
  // (C+) on both sides, over every triple
  for (Mask a = 0; a < size; ++a)
    for (Mask b = 0; b < size; ++b)
      for (Mask c = 0; c < size; ++c) {
        if (r.test(a, b | c) != (r.test(a, b) || r.test(a, c)))
          throw AxiomViolation("C+", "a=" + format_indices(a) + " b=" + format_indices(b) +
                                         " c=" + format_indices(c) + " (right)");
        if (r.test(a | b, c) != (r.test(a, c) || r.test(b, c)))
          throw AxiomViolation("C+", "a=" + format_indices(a) + " b=" + format_indices(b) +
                                         " c=" + format_indices(c) + " (left)");
      }
  RelationKernel k(alg);
  std::vector<AtomPair> pairs;
  for (int p = 0; p < alg.atom_count(); ++p)
    for (int q = 0; q < alg.atom_count(); ++q)
      if (r.test(bit<Mask>(p), bit<Mask>(q))) pairs.emplace_back(p, q);
  return RelationKernel(alg, pairs);
}

// ---------------------------------------------------------------- axiom sweeps

std::vector<Mask> image_table(const RelationKernel& c) {
  require_atoms(c.atom_count(), Budget::current().max_atoms, "image table");
  std::vector<Mask> table(c.algebra().size());
  kernels::image_table(c.rows(), table);
  return table;
}

namespace {

// Ctr over T: a ≪ c iff T[a] ⊆ c. Interpolants b need T[a] ⊆ b and T[b] ⊆ c, so the
// tightest c = T[a] is the hardest instance; the axiom holds iff it holds there.
std::optional<kernels::PairHit> first_interpolation_gap(std::span<const Mask> table) {
  for (std::size_t a = 0; a < table.size(); ++a) {
    const Mask c = table[a];
    if (!kernels::first_interpolant(table, c, c)) return kernels::PairHit{static_cast<Mask>(a), c};
  }
  return std::nullopt;
}

}  // namespace

AxiomReport compute_axiom_report(const RelationKernel& c) {
  require_atoms(c.atom_count(), Budget::current().max_sweep_atoms, "axiom sweep");
  const Mask top = c.algebra().top();
  const std::vector<Mask> t = image_table(c);
  const std::vector<Mask> ts = image_table(sharp_kernel(c));
  AxiomReport r;
  auto fail = [&](const char* axiom, std::string w) { r.witnesses.emplace_back(axiom, std::move(w)); };

  if (auto gap = kernels::first_reflexive_gap(t))
    fail("Cref", "a=" + format_indices(*gap));
  else
    r.cref = true;

  if (auto hit = kernels::first_asymmetric_pair(t))
    fail("Csym", pair_string(hit->first, hit->second));
  else
    r.csym = true;

  if (auto hit = first_interpolation_gap(t))
    fail("Ctr", "a=" + format_indices(hit->first) + " c=" + format_indices(hit->second));
  else
    r.ctr = true;

  if (auto hit = first_interpolation_gap(ts))
    fail("CtrSharp", "a=" + format_indices(hit->first) + " c=" + format_indices(hit->second));
  else
    r.ctr_sharp = true;

  if (auto a = kernels::first_disconnected(t))
    fail("Ccon", "a=" + format_indices(*a));
  else
    r.ccon = true;

  r.c6 = true;
  for (Mask a = 0; a < top; ++a) {
    if (!kernels::first_separated(t, a)) {
      fail("C6", "a=" + format_indices(a));
      r.c6 = false;
      break;
    }
  }

  r.is_contact = r.cref && r.csym;
  r.is_normal_contact = r.is_contact && r.ctr_sharp && r.c6;
  return r;
}

const std::string* AxiomReport::witness(const std::string& axiom) const {
  for (const auto& [name, w] : witnesses)
    if (name == axiom) return &w;
  return nullptr;
}

// ---------------------------------------------------------------- PrecontactAlgebra

struct PrecontactAlgebra::Cache {
  std::once_flag once;
  AxiomReport report;
};

PrecontactAlgebra::PrecontactAlgebra(RelationKernel kernel)
    : kernel_(std::move(kernel)), cache_(std::make_shared<Cache>()) {}

bool PrecontactAlgebra::ll(Mask a, Mask b) const {
  algebra().require(a);
  algebra().require(b);
  return !kernel_.holds(a, algebra().complement(b));
}

const AxiomReport& PrecontactAlgebra::report() const {
  if (!cache_) throw PreconditionError("default-constructed precontact algebra has no report");
  std::call_once(cache_->once, [this] { cache_->report = compute_axiom_report(kernel_); });
  return cache_->report;
}

const AxiomReport& axiom_report(const PrecontactAlgebra& a) { return a.report(); }
bool ll(const PrecontactAlgebra& a, Mask x, Mask y) { return a.ll(x, y); }

RelationKernel sharp_kernel(const RelationKernel& k) {
  std::vector<Mask> rows = k.transpose().rows();
  for (int p = 0; p < k.atom_count(); ++p) rows[p] |= k.row(p) | bit<Mask>(p);
  return RelationKernel::from_rows(k.algebra(), std::move(rows));
}

PrecontactAlgebra c_sharp(const PrecontactAlgebra& a) { return PrecontactAlgebra(sharp_kernel(a.kernel())); }

PrecontactAlgebra rho_s(const BooleanAlgebra& b) {
  std::vector<Mask> rows(b.atom_count());
  for (int p = 0; p < b.atom_count(); ++p) rows[p] = bit<Mask>(p);
  return PrecontactAlgebra(RelationKernel::from_rows(b, std::move(rows)));
}

PrecontactAlgebra rho_l(const BooleanAlgebra& b) {
  return PrecontactAlgebra(RelationKernel::from_rows(b, std::vector<Mask>(b.atom_count(), b.top())));
}

// ---------------------------------------------------------------- non-tangential inclusion

ElementRelation ll_relation(const PrecontactAlgebra& a) {
  ElementRelation r(a.algebra());
  const auto size = static_cast<Mask>(a.algebra().size());
  for (Mask x = 0; x < size; ++x)
    for (Mask y = 0; y < size; ++y)
      if (a.ll(x, y)) r.rows[x] |= std::uint64_t{1} << y;
  return r;
}

const std::string* LlAxiomReport::witness(const std::string& axiom) const {
  for (const auto& [name, w] : witnesses)
    if (name == axiom) return &w;
  return nullptr;
}

LlAxiomReport ll_axiom_report(const ElementRelation& ll) {
  const BooleanAlgebra& alg = ll.algebra;
  const Mask top = alg.top();
  const auto size = static_cast<Mask>(alg.size());
  const int n = alg.atom_count();
  LlAxiomReport r;
  auto check = [&](bool& flag, const char* name, auto&& find) {
    std::optional<std::string> w = find();
    flag = !w.has_value();
    if (w) r.witnesses.emplace_back(name, std::move(*w));
  };
  using W = std::optional<std::string>;

  check(r.ll1, "ll1", [&]() -> W {
    for (Mask a = 0; a < size; ++a)
      for (Mask b = 0; b < size; ++b)
        if (ll.test(a, b) && (a & ~b) != 0) return pair_string(a, b);
    return std::nullopt;
  });
  check(r.ll2, "ll2", [&]() -> W { return ll.test(0, 0) ? W{} : W{"(0,0)"}; });
  check(r.ll3, "ll3", [&]() -> W {
    // monotone in both arguments iff stable under removing/adding single atoms
    for (Mask b = 0; b < size; ++b)
      for (Mask c = 0; c < size; ++c) {
        if (!ll.test(b, c)) continue;
        for (int p = 0; p < n; ++p) {
          const Mask a = b & ~bit<Mask>(p);
          const Mask t = c | bit<Mask>(p);
          if (!ll.test(a, c))
            return "a=" + format_indices(a) + " b=" + format_indices(b) + " c=" + format_indices(c) +
                   " t=" + format_indices(c);
          if (!ll.test(b, t))
            return "a=" + format_indices(b) + " b=" + format_indices(b) + " c=" + format_indices(c) +
                   " t=" + format_indices(t);
        }
      }
    return std::nullopt;
  });
  check(r.ll4, "ll4", [&]() -> W {
    for (Mask a = 0; a < size; ++a)
      for (Mask b = 0; b < size; ++b)
        for (Mask c = 0; c < size; ++c)
          if (ll.test(a, b) && ll.test(a, c) && !ll.test(a, b & c))
            return "a=" + format_indices(a) + " b=" + format_indices(b) + " c=" + format_indices(c);
    return std::nullopt;
  });
  check(r.ll5, "ll5", [&]() -> W {
    for (Mask a = 0; a < size; ++a)
      for (Mask c = 0; c < size; ++c) {
        if (!ll.test(a, c)) continue;
        bool found = false;
        for (Mask b = 0; b < size && !found; ++b) found = ll.test(a, b) && ll.test(b, c);
        if (!found) return pair_string(a, c);
      }
    return std::nullopt;
  });
  check(r.ll6, "ll6", [&]() -> W {
    for (Mask a = 1; a < size; ++a) {
      bool found = false;
      for (Mask b = 1; b < size && !found; ++b) found = ll.test(b, a);
      if (!found) return "a=" + format_indices(a);
    }
    return std::nullopt;
  });
  check(r.ll7, "ll7", [&]() -> W {
    for (Mask a = 0; a < size; ++a)
      for (Mask b = 0; b < size; ++b)
        if (ll.test(a, b) && !ll.test(top & ~b, top & ~a)) return pair_string(a, b);
    return std::nullopt;
  });
  check(r.ll2p, "ll2'", [&]() -> W { return ll.test(top, top) ? W{} : W{pair_string(top, top)}; });
  check(r.ll4p, "ll4'", [&]() -> W {
    for (Mask a = 0; a < size; ++a)
      for (Mask b = 0; b < size; ++b)
        for (Mask c = 0; c < size; ++c)
          if (ll.test(a, c) && ll.test(b, c) && !ll.test(a | b, c))
            return "a=" + format_indices(a) + " b=" + format_indices(b) + " c=" + format_indices(c);
    return std::nullopt;
  });
  return r;
}

RelationKernel relation_from_ll(const ElementRelation& ll) {
  const LlAxiomReport rep = ll_axiom_report(ll);
  if (!rep.precontact_axioms()) {
    for (const char* name : {"ll2", "ll2'", "ll3", "ll4", "ll4'"})
      if (const std::string* w = rep.witness(name)) throw AxiomViolation(name, *w);
  }
  const BooleanAlgebra& alg = ll.algebra;
  ElementRelation c(alg);
  const auto size = static_cast<Mask>(alg.size());
  for (Mask a = 0; a < size; ++a)
    for (Mask b = 0; b < size; ++b)
      if (!ll.test(a, alg.complement(b))) c.rows[a] |= std::uint64_t{1} << b;
  return normalize_relation(c);
}

// ---------------------------------------------------------------- clans

namespace {

void extend_cliques(const std::vector<Mask>& adj, Mask clique, Mask candidates, std::vector<Mask>& out) {
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    const Mask next = clique | bit<Mask>(v);
    out.push_back(next);
    extend_cliques(adj, next, candidates & adj[v], out);
  }
}

}  // namespace

std::vector<Mask> clan_supports(const RelationKernel& k) {
  const RelationKernel s = sharp_kernel(k);
  std::vector<Mask> adj(k.atom_count());
  for (int p = 0; p < k.atom_count(); ++p) adj[p] = s.row(p) & ~bit<Mask>(p);
  std::vector<Mask> out;
  extend_cliques(adj, 0, k.algebra().top(), out);
  std::sort(out.begin(), out.end(), support_less<Mask>);
  return out;
}

std::vector<Clan> clans(const PrecontactAlgebra& a) {
  std::vector<Clan> out;
  for (Mask s : clan_supports(a.kernel())) out.push_back(Clan{s});
  return out;
}

bool is_clan_support(const RelationKernel& k, Mask support) {
  if (support == 0 || !k.algebra().contains(support)) return false;
  const RelationKernel s = sharp_kernel(k);
  bool ok = true;
  for_each_bit(support, [&](int p) { ok = ok && (s.row(p) & support) == support; });
  return ok;
}

std::vector<Mask> clan_members(const BooleanAlgebra& b, Mask support) {
  b.require(support);
  std::vector<Mask> out;
  for (std::uint64_t a = 0; a < b.size(); ++a)
    if ((static_cast<Mask>(a) & support) != 0) out.push_back(static_cast<Mask>(a));
  return out;
}

bool is_clan(const PrecontactAlgebra& a, std::span<const Mask> members) {
  if (!is_family(FamilyKind::grill, a.algebra(), members)) return false;  // (Clan1)-(Clan3)
  const RelationKernel s = sharp_kernel(a.kernel());
  for (Mask x : members)
    for (Mask y : members)
      if (!s.holds(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------- subalgebras

Restriction restrict_relation(const PrecontactAlgebra& a, const std::vector<Mask>& blocks) {
  const BooleanAlgebra& alg = a.algebra();
  if (blocks.empty() && alg.atom_count() > 0) throw DomainError("partition has no blocks");
  Mask seen = 0;
  for (Mask blk : blocks) {
    alg.require(blk);
    if (blk == 0) throw DomainError("partition block is empty");
    if ((seen & blk) != 0) throw DomainError("partition blocks overlap at " + format_indices(seen & blk));
    seen |= blk;
  }
  if (seen != alg.top()) throw DomainError("partition misses atoms " + format_indices(alg.top() & ~seen));

  const BooleanAlgebra sub(static_cast<int>(blocks.size()));
  std::vector<Mask> rows(blocks.size(), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (a.holds(blocks[i], blocks[j])) rows[i] |= bit<Mask>(static_cast<int>(j));
  // the embedding sends block i to the join of its atoms: atom p of A maps back to its block
  std::vector<int> atom_map(alg.atom_count());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for_each_bit(blocks[i], [&](int p) { atom_map[p] = static_cast<int>(i); });
  return Restriction{PrecontactAlgebra(RelationKernel::from_rows(sub, std::move(rows))),
                     BooleanHom(sub, alg, std::move(atom_map)), blocks};
}

Mask restrict_clan(const Restriction& r, Mask support) {
  Mask out = 0;
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    if ((r.blocks[i] & support) != 0) out |= bit<Mask>(static_cast<int>(i));
  return out;
}

// ---------------------------------------------------------------- morphisms

std::optional<AtomPair> pca_morphism_gap(const BooleanHom& h, const PrecontactAlgebra& source,
                                         const PrecontactAlgebra& target) {
  if (h.source() != source.algebra() || h.target() != target.algebra())
    throw DomainError("homomorphism does not go between the given algebras");
  // φ(a) C' φ(b) iff some (q1,q2) in K' has map(q1) in a and map(q2) in b
  const auto& m = h.atom_map();
  for (auto [q1, q2] : target.kernel().pairs())
    if (!source.kernel().contains(m[q1], m[q2])) return AtomPair{q1, q2};
  return std::nullopt;
}

bool is_pca_morphism(const BooleanHom& h, const PrecontactAlgebra& source, const PrecontactAlgebra& target) {
  return !pca_morphism_gap(h, source, target).has_value();
}

PcaMorphism::PcaMorphism(BooleanHom hom, PrecontactAlgebra source, PrecontactAlgebra target)
    : hom_(std::move(hom)), source_(std::move(source)), target_(std::move(target)) {
  if (auto gap = pca_morphism_gap(hom_, source_, target_)) {
    const auto& m = hom_.atom_map();
    throw ValidationError("not a PCA-morphism: target pair (" + std::to_string(gap->first) + "," +
                          std::to_string(gap->second) + ") maps to (" + std::to_string(m[gap->first]) +
                          "," + std::to_string(m[gap->second]) + ") outside the source kernel");
  }
}

PcaMorphism compose(const PcaMorphism& second, const PcaMorphism& first) {
  return PcaMorphism(compose(second.hom(), first.hom()), first.source(), second.target());
}

}  // namespace pclab
