#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rectors/fincat.hpp"

namespace rectors {

struct NullFactorization {
  ObjId via = kNone;
  MorId first = kNone;   // src -> via
  MorId second = kNone;  // via -> tgt
};

// Morphisms that factor through some object of Z.
class NullIdeal {
 public:
  NullIdeal() = default;
  NullIdeal(CatPtr base, IdSet generators);

  const CatPtr& base() const { return base_; }
  const IdSet& generators() const { return generators_; }
  bool contains(MorId f) const { return witness_[f].has_value(); }
  const std::optional<NullFactorization>& witness(MorId f) const { return witness_[f]; }
  std::vector<MorId> members() const;

 private:
  CatPtr base_;
  IdSet generators_;
  std::vector<std::optional<NullFactorization>> witness_;
};

// (g, f) with f null but g . f or f . g outside the ideal; never expected.
std::optional<std::pair<MorId, MorId>> closure_violation(const NullIdeal& N);

// `map` is the morphism being measured; table maps each test morphism u to its
// unique factorization u'.
struct KernelCertificate {
  MorId inclusion = kNone;
  MorId map = kNone;
  std::vector<std::pair<MorId, MorId>> factorizations;
};

enum class UniversalFailure { None, NotNull, NoFactorization, ManyFactorizations };
const char* to_string(UniversalFailure f);

struct UniversalVerdict {
  UniversalFailure failure = UniversalFailure::None;
  MorId witness = kNone;
  std::optional<KernelCertificate> certificate;
  bool ok() const { return failure == UniversalFailure::None; }
};

// Is ell a kernel of r relative to N?
UniversalVerdict check_kernel(const NullIdeal& N, MorId ell, MorId r);
// Is r a cokernel of ell relative to N?
UniversalVerdict check_cokernel(const NullIdeal& N, MorId ell, MorId r);

// All kernels of r (least identifier first); asserts they are pairwise isomorphic.
std::vector<KernelCertificate> kernel_rel(const NullIdeal& N, MorId r);
std::vector<KernelCertificate> cokernel_rel(const NullIdeal& N, MorId ell);

struct SesRecord {
  ObjId torsion = kNone;
  MorId ell = kNone;
  ObjId middle = kNone;
  MorId r = kNone;
  ObjId free = kNone;
};

struct SesVerdict {
  bool exact = false;
  UniversalVerdict kernel;
  UniversalVerdict cokernel;
  SesRecord record;
};

// Throws Error(NotComposable) when tgt(ell) != src(r).
SesVerdict is_short_exact(const NullIdeal& N, MorId ell, MorId r);

struct ComponentwiseSes {
  std::vector<bool> factor_exact;
  bool product_exact = false;
  bool consistent = false;
};

NullIdeal product_ideal(const ProductCategory& P, const std::vector<NullIdeal>& factor_ideals);
ComponentwiseSes componentwise_ses_check(const ProductCategory& P, const std::vector<NullIdeal>& factor_ideals,
                                         MorId ell, MorId r);

bool is_retract(const FinCat& c, ObjId k, ObjId z);

}  // namespace rectors
