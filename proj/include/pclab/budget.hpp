#pragma once

namespace pclab {

/// Size limits. Defaults can be overridden through environment variables
/// (read once): PCLAB_MAX_ATOMS, PCLAB_MAX_SWEEP_ATOMS, PCLAB_MAX_EXHAUSTIVE_ATOMS,
/// PCLAB_MAX_POINTS, PCLAB_MAX_BRUTEFORCE_POINTS, PCLAB_MAX_MORPHISM_POINTS.
struct Budget {
  int max_atoms = 16;              // algebra and kernel level operations
  int max_sweep_atoms = 8;         // element-level exhaustive axiom sweeps
  int max_exhaustive_atoms = 6;    // element relations, family enumeration, suites
  int max_points = 64;             // width of PointSet
  int max_bruteforce_points = 16;  // searches over all subsets of a space
  int max_morphism_points = 6;     // enumeration of all point maps

  static const Budget& current();
};

void require_atoms(int atoms, int limit, const char* what);
void require_points(int points, int limit, const char* what);

}  // namespace pclab
