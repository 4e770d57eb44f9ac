#pragma once
// The property suite behind `pclab suite`: every duality check on seeded random
// instances, aggregated by check name.

#include <string>
#include <vector>

#include "pclab/duality.hpp"
#include "pclab/random.hpp"
#include "pclab/report.hpp"

namespace pclab {

/// All checks for one algebra; rng drives the sampled morphisms.
DualityReport instance_suite(const PrecontactAlgebra& a, Rng& rng);

struct SuiteFailure {
  int index = 0;
  std::uint64_t seed = 0;
  PrecontactAlgebra instance;
  DualityReport report;
};

struct SuiteOutcome {
  /// One check per name; the witness names the first failing instance.
  DualityReport report;
  int instances = 0;
  std::vector<SuiteFailure> failures;
};

/// Instance i is drawn from its own generator, seeded by the i-th output of a generator
/// seeded with spec.seed. Throws CapacityError past Budget::max_exhaustive_atoms.
SuiteOutcome run_suite(const RandomSpec& spec, int count);

}  // namespace pclab
