#include "pclab/budget.hpp"

#include <cstdlib>
#include <string>

#include "pclab/error.hpp"

namespace pclab {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

Budget load() {
  Budget b;
  b.max_atoms = env_int("PCLAB_MAX_ATOMS", b.max_atoms);
  b.max_sweep_atoms = env_int("PCLAB_MAX_SWEEP_ATOMS", b.max_sweep_atoms);
  b.max_exhaustive_atoms = env_int("PCLAB_MAX_EXHAUSTIVE_ATOMS", b.max_exhaustive_atoms);
  b.max_points = env_int("PCLAB_MAX_POINTS", b.max_points);
  b.max_bruteforce_points = env_int("PCLAB_MAX_BRUTEFORCE_POINTS", b.max_bruteforce_points);
  b.max_morphism_points = env_int("PCLAB_MAX_MORPHISM_POINTS", b.max_morphism_points);
  // hard representation limits
  if (b.max_atoms > 16) b.max_atoms = 16;
  if (b.max_exhaustive_atoms > 6) b.max_exhaustive_atoms = 6;
  if (b.max_points > 64) b.max_points = 64;
  return b;
}

}  // namespace

const Budget& Budget::current() {
  static const Budget b = load();
  return b;
}

void require_atoms(int atoms, int limit, const char* what) {
  if (atoms < 0) throw DomainError(std::string(what) + ": negative atom count");
  if (atoms > limit)
    throw CapacityError(std::string(what) + ": " + std::to_string(atoms) +
                        " atoms exceeds the limit of " + std::to_string(limit));
}

void require_points(int points, int limit, const char* what) {
  if (points > limit)
    throw CapacityError(std::string(what) + ": " + std::to_string(points) +
                        " points exceeds the limit of " + std::to_string(limit));
}

}  // namespace pclab
