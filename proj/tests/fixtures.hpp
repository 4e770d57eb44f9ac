#pragma once
// Worked fixtures shared by the tests.

#include "pclab/precontact.hpp"
#include "pclab/structures.hpp"
#include "pclab/topology.hpp"

namespace fixture {

using namespace pclab;

inline constexpr int G1 = 0, G2 = 1, G3 = 2;

/// X_L: Γ3 lies in the closure of both Γ1 and Γ2.
inline FiniteSpace x_l() {
  return FiniteSpace({"Γ1", "Γ2", "Γ3"}, {0b101, 0b110, 0b100});
}

inline PointRelation x0_square() { return {0b011, 0b011, 0}; }
inline PointRelation x0_diagonal() { return {0b001, 0b010, 0}; }

inline TwoPrecontactSpace x_l_pcs(const PointRelation& r = x0_square()) { return validate_pcs(x_l(), 0b011, r); }

/// open sets ∅, {1}, X
inline FiniteSpace sierpinski() { return FiniteSpace({"0", "1"}, {0b01, 0b11}); }

inline PrecontactAlgebra pca(int n, const std::vector<AtomPair>& pairs) {
  return PrecontactAlgebra(RelationKernel(BooleanAlgebra(n), pairs));
}

inline PrecontactAlgebra b4_rho_s() { return rho_s(BooleanAlgebra(2)); }
inline PrecontactAlgebra b4_rho_l() { return rho_l(BooleanAlgebra(2)); }
/// p→q→r
inline PrecontactAlgebra b8_k_path() { return pca(3, {{0, 1}, {1, 2}}); }

inline constexpr Mask P = 1, Q = 2, R = 4;

}  // namespace fixture
