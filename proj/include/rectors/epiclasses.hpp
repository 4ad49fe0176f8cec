#pragma once

#include <string>
#include <vector>

#include "rectors/exactness.hpp"
#include "rectors/fincat.hpp"
#include "rectors/pretorsion.hpp"

namespace rectors {

// Inside the arrow category on E the short exact sequences run from a map into
// a zero object to an isomorphism, so those are the torsion and torsion-free
// parts respectively.
struct EpiClassPresentation {
  CatPtr base;
  std::vector<MorId> E;  // ascending
  ArrowCategory arrows;
  IdSet torsion;  // arrows with zero-object target
  IdSet free;     // isomorphisms
  NullIdeal zero_ideal;  // zero morphisms of the base
  bool arrow_category_pointed = false;  // zero objects are exactly torsion and free together
};

// Throws NotPointed, NonEpiInE, MissingIso or MissingZeroTargetMap.
EpiClassPresentation build_epiclass(const CatPtr& X, std::vector<MorId> E, const Limits& limits = {});

enum class EpiMode { Explicit, Minimal, Split, Regular, Projections };
const char* to_string(EpiMode m);

std::vector<MorId> isos_and_zero_target_maps(const FinCat& X);
std::vector<MorId> split_epimorphisms(const FinCat& X);
std::vector<MorId> regular_epimorphisms(const FinCat& X);
std::vector<MorId> product_projections(const FinCat& X);

bool is_split_epi(const FinCat& X, MorId e);
bool is_regular_epi(const FinCat& X, MorId e);
// A cokernel of some morphism, relative to the zero morphisms.
bool is_normal_epi(const NullIdeal& zero, MorId e);
bool has_kernel(const NullIdeal& zero, MorId e);

struct ProductProjection {
  bool ok = false;
  ObjId complement = kNone;  // W
  MorId second_leg = kNone;  // w : src(e) -> W
};

ProductProjection is_product_projection(const FinCat& X, MorId e);
bool has_binary_products(const FinCat& X);

struct ShapeVerdict {
  bool candidate = false;  // src in torsion, tgt in free, composable
  bool shape = false;      // top of ell is a kernel of e, e a cokernel of it, bottom of r iso
  bool generic = false;    // is_short_exact in the arrow category
  bool agree() const { return shape == generic; }
};

ShapeVerdict ses_shape_check(const EpiClassPresentation& P, MorId ell, MorId r);

struct TorsionClassVerdict {
  bool direct = false;   // every e is a cokernel and has a kernel
  bool generic = false;  // check_pretorsion on the arrow category, with Z = zero objects
  bool agree = false;
  MorId witness = kNone;  // first e failing the direct predicate
  PretorsionVerdict pretorsion;
};

TorsionClassVerdict check_torsion_class(const EpiClassPresentation& P);

struct RectangularClassVerdict {
  TorsionClassVerdict torsion;
  bool products_exist = false;
  bool direct = false;   // every e is a product projection
  bool generic = false;  // torsion theory and is_rectangular
  bool agree = false;    // only guaranteed when products_exist
  MorId witness = kNone;
  bool all_normal = false;
  bool normal_projections = false;  // every product projection of X is a normal epi
  bool projections_are_normal_with_kernel = false;  // direct => every e normal with a kernel
  // The per-mode statement: projections -> torsion <=> rectangular <=> normal projections;
  // split/regular -> torsion <=> all normal and rectangular <=> all projections.
  // Clauses mentioning rectangularity are only required when products_exist.
  bool mode_statement = false;
};

RectangularClassVerdict check_rectangular_class(const EpiClassPresentation& P, EpiMode mode);

}  // namespace rectors
