#pragma once
// Seeded instance generators. Same seed and spec give the same instance on every
// platform: only std::mt19937_64 output is consumed, never a std distribution.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pclab/precontact.hpp"
#include "pclab/topology.hpp"

namespace pclab {

using Rng = std::mt19937_64;

struct Constraints {
  bool contact = false;    // symmetrize, then reflexivize
  bool connected = false;  // rejection sampling
  bool complete = false;   // finite algebras are complete; accepted and ignored
};

/// Comma-separated tags from {contact, connected, complete, none}; throws DomainError.
Constraints parse_constraints(const std::string& tags);
std::string format_constraints(const Constraints& c);

struct RandomSpec {
  int atoms = 3;
  double density = 0.5;
  std::uint64_t seed = 1;
  Constraints constraints;
};

/// true with probability p, from the top 53 bits of one draw.
bool bernoulli(Rng& rng, double p);
/// Uniform in [0, n) by rejection.
int uniform_index(Rng& rng, int n);

/// Each atom pair independently with the given density.
RelationKernel random_kernel(Rng& rng, const BooleanAlgebra& b, double density);
/// Throws CapacityError past the atom cap or when rejection sampling gives up.
PrecontactAlgebra random_pca(Rng& rng, int atoms, double density, const Constraints& c = {});
PrecontactAlgebra random_pca(const RandomSpec& spec);

/// Ccon on a finite algebra: the atom graph of C ∪ C⁻¹ is connected.
bool atom_graph_connected(const RelationKernel& k);

/// A PCA-morphism out of source: random target of target_atoms atoms, random atom map,
/// target kernel a random subset of the pairs the map allows.
PcaMorphism random_pca_morphism(Rng& rng, const PrecontactAlgebra& source, int target_atoms, double density);

/// Reflexive-transitive closure of a random relation; not necessarily T0.
FiniteSpace random_space(Rng& rng, int points, double density);

}  // namespace pclab
