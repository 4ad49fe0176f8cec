#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rectors/fincat.hpp"
#include "rectors/pretorsion.hpp"

namespace rectors {

// M C = C x C, M M C = MC x MC (nested, not flattened).
struct MonadInstance {
  CatPtr base;
  ProductCategory square;  // MC
  ProductCategory fourth;  // MMC
  Functor eta;             // C -> MC, diagonal
  Functor mu;              // MMC -> MC, ((a,b),(c,d)) |-> (a,d)
  Functor m_eta;           // eta x eta : MC -> MMC
  Functor eta_m;           // diagonal of MC : MC -> MMC
  bool pointed = false;
  bool unit_left = false;   // mu . M eta = id
  bool unit_right = false;  // mu . eta M = id
  bool associative = false; // mu . M mu = mu . mu M, on every object and morphism of MMMC
  std::size_t associativity_objects = 0;
  std::size_t associativity_morphisms = 0;
};

// Throws NotBiQuasiPointed, or SizeTooLarge when MMC cannot be materialized.
MonadInstance monad_instance(const CatPtr& c);

// Q : C x C -> C with Qmu indexed by object 4-tuples (x1 most significant) and
// Qeta by objects.
struct PseudoAlgebra {
  CatPtr category;
  ProductCategory square;
  Functor q;
  std::vector<MorId> mu;   // Q(Q(x1,x2),Q(x3,x4)) -> Q(x1,x4)
  std::vector<MorId> eta;  // X -> Q(X,X)

  ObjId q_obj(ObjId x, ObjId y) const;
  MorId q_mor(MorId f, MorId g) const;
  std::size_t mu_index(ObjId x1, ObjId x2, ObjId x3, ObjId x4) const;
  MorId mu_at(ObjId x1, ObjId x2, ObjId x3, ObjId x4) const { return mu[mu_index(x1, x2, x3, x4)]; }
};

// Q(X,Y) = G(pi1 F X, pi2 F Y) for an adjoint equivalence F : C -> A x B, G.
PseudoAlgebra algebra_from_equivalence(const ProductCategory& target, const AdjointEquivalence& e);
// Throws NotRectangular.
PseudoAlgebra build_pseudo_algebra(const PretorsionPresentation& P);
// MC with Q = mu and identity 2-cells.
PseudoAlgebra free_algebra(const MonadInstance& m);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::vector<std::uint32_t> witness;
  std::size_t checked = 0;
};

struct CoherenceReport {
  bool ok = false;
  std::vector<CheckResult> checks;
  const CheckResult* first_failure() const;
};

CoherenceReport check_pseudo_algebra(const PseudoAlgebra& A);

// (G, phi) : A -> B with G : A.category -> B.category and
// phi_{X,Y} : B.Q(GX, GY) -> G A.Q(X,Y), indexed x * n + y.
struct PseudoMorphism {
  Functor functor;
  std::vector<MorId> phi;
};

CoherenceReport check_pseudo_morphism(const PseudoAlgebra& A, const PseudoAlgebra& B, const PseudoMorphism& m);

struct AlgebraPretorsion {
  PretorsionVerdict verdict;       // normalized choice
  std::vector<SesRecord> raw_ses;  // the sequences through Qeta before normalization
  bool generic_ok = false;         // check_pretorsion on the same subsets
  bool rectangular = false;
  bool gamma_is_q_prime = false;   // canonical functor of raw_ses equals X |-> (Q(X,0), Q(1,X))
  bool independent_of_choice = false;
  ObjId zero = kNone;
  ObjId one = kNone;
};

// Throws IncoherentAlgebra when check_pseudo_algebra fails.
AlgebraPretorsion algebra_to_pretorsion(const PseudoAlgebra& A);

struct RoundTrip {
  bool ok = false;
  // xi . chi : theory -> algebra -> theory
  bool torsion_equal = false;
  bool free_equal = false;
  CoherenceReport algebra;
  // chi . xi : algebra -> theory -> algebra
  std::optional<PseudoAlgebra> rebuilt;
  CoherenceReport rebuilt_report;
  bool phi_iso = false;
  CoherenceReport phi_report;
  CoherenceReport phi_inverse_report;
};

RoundTrip roundtrip_check(const PretorsionPresentation& P);
RoundTrip roundtrip_check(const PseudoAlgebra& A);

struct FunctorPseudoMorphism {
  PseudoAlgebra source;
  PseudoAlgebra target;
  PseudoMorphism morphism;
  CoherenceReport report;
  bool phi_identity = false;
};

// G must be a morphism of rectangular theories P -> Q.
FunctorPseudoMorphism pseudo_morphism_from_functor(const PretorsionPresentation& P, const PretorsionPresentation& Q,
                                                   const Functor& G);

}  // namespace rectors
