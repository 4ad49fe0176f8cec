#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rectors/exactness.hpp"
#include "rectors/fincat.hpp"

namespace rectors {

// Chosen sequence T^X -> X -> F^X for every object X. Objects of T use ell = id,
// objects of F use r = id.
struct PretorsionPresentation {
  CatPtr category;
  IdSet torsion;
  IdSet free;
  NullIdeal ideal;
  std::vector<SesRecord> ses;
  ObjId zero_witness = kNone;  // least object of T and F together
  bool closure_added = false;
};

enum class PretorsionFailure {
  None,
  EmptyCategoryUnsupported,
  T1Violation,
  T2Violation,
  InvalidSes,
  NotNormalized,
};
const char* to_string(PretorsionFailure f);

struct PretorsionVerdict {
  bool ok = false;
  PretorsionFailure failure = PretorsionFailure::None;
  MorId t1_witness = kNone;  // T -> F morphism outside the ideal
  ObjId t2_witness = kNone;  // object without a short exact sequence
  bool closure_added = false;
  std::optional<PretorsionPresentation> presentation;
};

PretorsionVerdict check_pretorsion(const CatPtr& c, const IdSet& T, const IdSet& F);
// Validates a caller-supplied choice of (ell, r) per object.
PretorsionVerdict make_presentation(const CatPtr& c, const IdSet& T, const IdSet& F,
                                    const std::vector<std::pair<MorId, MorId>>& choice);
// Rewrites ell or r to an identity where X lies in T or F.
std::vector<std::pair<MorId, MorId>> normalize_choice(const FinCat& c, const IdSet& T, const IdSet& F,
                                                      std::vector<std::pair<MorId, MorId>> choice);

// (h^T, h^F) for h : X -> Y; throws Error(InternalNonUnique) if the fill-ins are not unique.
std::pair<MorId, MorId> induced_parts(const PretorsionPresentation& P, MorId h);

// C -> T x F, X |-> (T^X, F^X).
struct Gamma {
  Subcategory torsion;
  Subcategory free;
  ProductCategory target;
  Functor functor;
};

Gamma gamma(const PretorsionPresentation& P);
// Same as gamma() but for an arbitrary (possibly unnormalized) valid choice.
Gamma gamma_for_choice(const PretorsionPresentation& P, const std::vector<SesRecord>& ses);

struct RectangularVerdict {
  bool ok = false;
  Gamma gamma;
  EquivalenceVerdict equivalence;
};

RectangularVerdict is_rectangular(const PretorsionPresentation& P);

struct ProductPretorsion {
  ProductCategory product;
  PretorsionVerdict componentwise;  // componentwise choice, validated
  PretorsionVerdict rechecked;      // independent search on the product
};

ProductPretorsion product_pretorsion(const std::vector<PretorsionPresentation>& parts, const Limits& limits = {});

struct ProductTheory {
  enum class Failure { None, NoTerminalInC, NoInitialInD, QuasiPointednessViolation };
  Failure failure = Failure::None;
  MorId witness = kNone;
  int witness_factor = -1;  // 0 for C, 1 for D
  std::optional<ProductCategory> product;
  std::optional<PretorsionVerdict> verdict;
};
const char* to_string(ProductTheory::Failure f);

// C x D with T = C x {initial}, F = {terminal} x D.
ProductTheory canonical_product_theory(const CatPtr& C, const CatPtr& D, const Limits& limits = {});
// For C x D with T = C x {0}, F = {1} x D: ell = (m1, m2), r = (e1, e2) with m1 iso,
// m2 mono, e1 epi, e2 iso.
bool componentwise_shape_holds(const ProductCategory& P, MorId ell, MorId r);
bool every_map_to_terminal_is_epi(const FinCat& c, MorId* witness);
bool every_map_from_initial_is_mono(const FinCat& c, MorId* witness);

struct ReflectionVerdict {
  bool ok = false;
  bool replete = false;
  ObjId witness = kNone;
  std::vector<MorId> units;  // per object: epi unit (or mono counit)
  bool agrees_with_pretorsion = false;
};

ReflectionVerdict is_epireflective(const CatPtr& c, const IdSet& J);
ReflectionVerdict is_monocoreflective(const CatPtr& c, const IdSet& J);

// Pull back a theory on D along an equivalence C -> D.
PretorsionVerdict transfer_along_equivalence(const PretorsionPresentation& Pd, const Functor& L);

struct MorphismVerdict {
  enum class Failure { None, NotAFunctor, TorsionNotPreserved, FreeNotPreserved, SesNotPreserved };
  bool ok = false;
  Failure failure = Failure::None;
  ObjId witness = kNone;
};
const char* to_string(MorphismVerdict::Failure f);

MorphismVerdict check_pretorsion_morphism(const PretorsionPresentation& P, const PretorsionPresentation& Q,
                                          const Functor& G);

// Components T'^{GX} -> G(T^X) and F'^{GX} -> G(F^X).
struct LambdaComponents {
  std::vector<MorId> torsion;
  std::vector<MorId> free;
};

LambdaComponents lambda_for_morphism(const PretorsionPresentation& P, const PretorsionPresentation& Q,
                                     const Functor& G);
// Compatibility of lambda with a natural transformation alpha : G => H; returns the
// first failing object or kNone.
ObjId alpha_compatibility_violation(const PretorsionPresentation& P, const PretorsionPresentation& Q,
                                    const Functor& G, const Functor& H, const NatTrans& alpha);

struct Characterization {
  bool pretorsion = false;
  bool rectangular = false;
  PretorsionVerdict verdict;
  // Consequences that must hold for rectangular theories.
  bool intersection_isomorphic = false;
  bool zero_endo_trivial = false;
  bool zero_terminal_in_torsion = false;
  bool zero_initial_in_free = false;
  bool torsion_quasi_pointed = false;
  bool free_quasi_pointed = false;
  bool product_form_equivalent = false;
  bool product_form_matches = false;
  bool identity_kernels = false;
  // Classification.
  bool symmetrical = false;
  bool pointed = false;
  bool kernels_of_identities = false;
  bool gj_consistent = false;
  ObjId zero = kNone;
};

Characterization characterize_rectangular(const CatPtr& c, const IdSet& T, const IdSet& F);

}  // namespace rectors
