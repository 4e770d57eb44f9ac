#pragma once
// The functors G^a (algebra → space) and G^t (space → algebra) on objects and morphisms,
// the natural isomorphisms t and g, and the specializations to subcategories.

#include <optional>
#include <string>
#include <vector>

#include "pclab/adjacency.hpp"
#include "pclab/precontact.hpp"
#include "pclab/report.hpp"
#include "pclab/structures.hpp"

namespace pclab {

/// The first reason map fails to be a PCS-morphism, or nullopt.
std::optional<std::string> pcs_morphism_gap(const TwoPrecontactSpace& source, const TwoPrecontactSpace& target,
                                            const std::vector<int>& map);

class PcsMorphism {
 public:
  /// Throws ValidationError with the failing point or pair.
  PcsMorphism(TwoPrecontactSpace source, TwoPrecontactSpace target, std::vector<int> map);

  const TwoPrecontactSpace& source() const noexcept { return source_; }
  const TwoPrecontactSpace& target() const noexcept { return target_; }
  const std::vector<int>& map() const noexcept { return map_; }
  int operator()(int x) const { return map_[x]; }

 private:
  TwoPrecontactSpace source_;
  TwoPrecontactSpace target_;
  std::vector<int> map_;
};

/// second ∘ first
PcsMorphism compose(const PcsMorphism& second, const PcsMorphism& first);
PcsMorphism identity_morphism(const TwoPrecontactSpace& s);

// ------------------------------------------------------------------ functors

/// = canonical_pcs_of_pca
CanonicalPcs ga_object(const PrecontactAlgebra& a);
/// G^a(φ): G^a(target) → G^a(source), Γ' ↦ φ⁻¹(Γ').
PcsMorphism ga_morphism(const PcaMorphism& phi);
PcsMorphism ga_morphism(const PcaMorphism& phi, const CanonicalPcs& source_dual, const CanonicalPcs& target_dual);

/// = canonical_pca_of_pcs; atom i is cl_X(K_i).
PrecontactAlgebra gt_object(const TwoPrecontactSpace& s);
/// G^t(f)(cl_Y(F')) = cl_X(X0 ∩ f⁻¹(F')), a morphism G^t(target) → G^t(source).
PcaMorphism gt_morphism(const PcsMorphism& f);

// ------------------------------------------------------------------ isomorphisms

struct TIso {
  CanonicalPcs dual;  // G^a(G^t(S))
  /// x ↦ σ_x as a point of dual
  std::vector<int> map;
};

TIso t_iso(const TwoPrecontactSpace& s);
/// Bijective, homeomorphic, X0 onto Y0, R preserved in both directions.
DualityReport check_t_iso(const TwoPrecontactSpace& s);

struct GIso {
  CanonicalPcs dual;              // G^a(A)
  PrecontactAlgebra canonical;    // G^t(G^a(A))
  RegionAlgebra regions;          // RC(X, X0) of the dual
  BooleanHom hom;                 // a ↦ g_B(a), as a hom A → canonical
};

GIso g_iso(const PrecontactAlgebra& a);
/// g_B is a PCA-isomorphism onto the canonical algebra and a CA-isomorphism
/// (B, C^#) → (RC(X,X0), C_(X,X0)); every element is checked, relations evaluated on
/// point sets.
DualityReport check_g_iso(const PrecontactAlgebra& a);

/// Cref/Csym/Ctr against R of G^a(A), Ccon against connectedness of X.
DualityReport axiom_correspondence(const PrecontactAlgebra& a);

// ------------------------------------------------------------------ naturality

/// g_B ∘ φ = ψ♯ ∘ g_A with ψ♯ = G^t(G^a(φ)), elementwise.
DualityReport check_naturality(const PcaMorphism& phi);
/// f♯ ∘ t_X = t_Y ∘ f with f♯ = G^a(G^t(f)), pointwise; also the defining formula of
/// G^t(f) on every clopen of Y0.
DualityReport check_naturality(const PcsMorphism& f);
/// G^t(f)(H) = f⁻¹(H) for every H ∈ RC(Y, Y0).
DualityReport gt_as_preimage(const PcsMorphism& f);

// ------------------------------------------------------------------ F^t and SAS

/// (X0, R) with the subspace topology; cells keep their point names.
AdjacencySpace ft_object(const TwoPrecontactSpace& s);
/// f|X0 on renumbered cells.
std::vector<int> ft_morphism(const PcsMorphism& f);
/// Witness of f|X0 = g|X0 with f ≠ g, if any.
std::optional<std::string> faithfulness_gap(const PcsMorphism& f, const PcsMorphism& g);

/// G^a of (CO(X0), C_R). Throws PreconditionError unless the cell topology is discrete.
CanonicalPcs reconstruct_from_sas(const AdjacencySpace& s0);
/// F^t of the reconstruction is isomorphic to s0; with a candidate, also checks that it
/// is PCS-isomorphic to the reconstruction.
DualityReport check_sas_roundtrip(const AdjacencySpace& s0, const TwoPrecontactSpace* candidate = nullptr);

// ------------------------------------------------------------------ hom-sets

/// Every PCA-morphism a → b, as atom maps; capped at Budget::max_exhaustive_atoms.
std::vector<BooleanHom> pca_morphisms(const PrecontactAlgebra& a, const PrecontactAlgebra& b);
/// Every PCS-morphism s → t; capped at Budget::max_morphism_points for s.
std::vector<std::vector<int>> pcs_morphisms(const TwoPrecontactSpace& s, const TwoPrecontactSpace& t);
/// Every continuous map x → y; capped at Budget::max_morphism_points for x.
std::vector<std::vector<int>> continuous_maps(const FiniteSpace& x, const FiniteSpace& y);
/// |PCS(G^a(B'), G^a(B))| = |PCA(B, B')| and φ ↦ G^a(φ) is a bijection between them.
DualityReport check_hom_bijection(const PrecontactAlgebra& b, const PrecontactAlgebra& b_prime);

// ------------------------------------------------------------------ specializations

enum class Specialization { stone, connected_stone, contact, complete_contact, connected };

const char* specialization_name(Specialization s);

/// Throws ClassificationError if a is outside the subcategory.
DualityReport corollary_suite(Specialization s, const PrecontactAlgebra& a);
/// Every specialization whose membership test a passes.
DualityReport corollary_suites(const PrecontactAlgebra& a);

/// F^g/F^h round trip through u(X,B). Throws ClassificationError unless m is a
/// mereocompact T0 space.
DualityReport mereo_suite(const MereotopologicalPair& m);
/// ψ_f: B → A, F ↦ f⁻¹(F) is a well-defined Boolean homomorphism, f is continuous and
/// preserves u-points. Throws ClassificationError unless both pairs are mereocompact T0.
DualityReport gmcs_suite(const MereotopologicalPair& from, const MereotopologicalPair& to, const std::vector<int>& f);

}  // namespace pclab
