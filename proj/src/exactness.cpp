#include "rectors/exactness.hpp"

namespace rectors {

NullIdeal::NullIdeal(CatPtr base, IdSet generators)
    : base_(std::move(base)), generators_(std::move(generators)) {
  const FinCat& c = *base_;
  witness_.assign(c.morphism_count(), std::nullopt);
  for (ObjId z : generators_.members())
    for (ObjId a = 0; a < c.object_count(); ++a)
      for (MorId p : c.hom(a, z))
        for (ObjId b = 0; b < c.object_count(); ++b)
          for (MorId q : c.hom(z, b)) {
            MorId m = c.compose(q, p);
            if (!witness_[m]) witness_[m] = NullFactorization{z, p, q};
          }
}

std::vector<MorId> NullIdeal::members() const {
  std::vector<MorId> out;
  for (MorId f = 0; f < witness_.size(); ++f)
    if (witness_[f]) out.push_back(f);
  return out;
}

std::optional<std::pair<MorId, MorId>> closure_violation(const NullIdeal& N) {
  const FinCat& c = *N.base();
  for (MorId n : N.members())
    for (MorId g = 0; g < c.morphism_count(); ++g) {
      if (c.src(g) == c.tgt(n) && !N.contains(c.compose(g, n))) return std::make_pair(g, n);
      if (c.tgt(g) == c.src(n) && !N.contains(c.compose(n, g))) return std::make_pair(n, g);
    }
  return std::nullopt;
}

const char* to_string(UniversalFailure f) {
  switch (f) {
    case UniversalFailure::None: return "None";
    case UniversalFailure::NotNull: return "CompositeNotNull";
    case UniversalFailure::NoFactorization: return "NoFactorization";
    case UniversalFailure::ManyFactorizations: return "FactorizationNotUnique";
  }
  return "Unknown";
}

UniversalVerdict check_kernel(const NullIdeal& N, MorId ell, MorId r) {
  const FinCat& c = *N.base();
  if (c.tgt(ell) != c.src(r)) throw Error(ErrorCode::NotComposable, "kernel candidate is not composable");
  UniversalVerdict v;
  if (!N.contains(c.compose(r, ell))) {
    v.failure = UniversalFailure::NotNull;
    v.witness = ell;
    return v;
  }
  ObjId k = c.src(ell), x = c.tgt(ell);
  KernelCertificate cert{ell, r, {}};
  for (ObjId u_src = 0; u_src < c.object_count(); ++u_src)
    for (MorId u : c.hom(u_src, x)) {
      if (!N.contains(c.compose(r, u))) continue;
      MorId found = kNone;
      int count = 0;
      for (MorId w : c.hom(u_src, k))
        if (c.compose(ell, w) == u) {
          if (!count) found = w;
          ++count;
        }
      if (count != 1) {
        v.failure = count == 0 ? UniversalFailure::NoFactorization : UniversalFailure::ManyFactorizations;
        v.witness = u;
        return v;
      }
      cert.factorizations.emplace_back(u, found);
    }
  v.certificate = std::move(cert);
  return v;
}

UniversalVerdict check_cokernel(const NullIdeal& N, MorId ell, MorId r) {
  const FinCat& c = *N.base();
  if (c.tgt(ell) != c.src(r)) throw Error(ErrorCode::NotComposable, "cokernel candidate is not composable");
  UniversalVerdict v;
  if (!N.contains(c.compose(r, ell))) {
    v.failure = UniversalFailure::NotNull;
    v.witness = r;
    return v;
  }
  ObjId x = c.src(r), f = c.tgt(r);
  KernelCertificate cert{r, ell, {}};
  for (ObjId v_tgt = 0; v_tgt < c.object_count(); ++v_tgt)
    for (MorId w : c.hom(x, v_tgt)) {
      if (!N.contains(c.compose(w, ell))) continue;
      MorId found = kNone;
      int count = 0;
      for (MorId y : c.hom(f, v_tgt))
        if (c.compose(y, r) == w) {
          if (!count) found = y;
          ++count;
        }
      if (count != 1) {
        v.failure = count == 0 ? UniversalFailure::NoFactorization : UniversalFailure::ManyFactorizations;
        v.witness = w;
        return v;
      }
      cert.factorizations.emplace_back(w, found);
    }
  v.certificate = std::move(cert);
  return v;
}

namespace {

MorId lookup(const KernelCertificate& cert, MorId u) {
  for (auto [a, b] : cert.factorizations)
    if (a == u) return b;
  return kNone;
}

}  // namespace

std::vector<KernelCertificate> kernel_rel(const NullIdeal& N, MorId r) {
  const FinCat& c = *N.base();
  std::vector<KernelCertificate> out;
  for (ObjId k = 0; k < c.object_count(); ++k)
    for (MorId ell : c.hom(k, c.src(r))) {
      auto v = check_kernel(N, ell, r);
      if (v.ok()) out.push_back(*v.certificate);
    }
  for (std::size_t i = 1; i < out.size(); ++i) {
    MorId cmp = lookup(out[i], out[0].inclusion);
    if (cmp == kNone || !c.is_iso(cmp)) throw Error(ErrorCode::Internal, "kernels are not isomorphic");
  }
  return out;
}

std::vector<KernelCertificate> cokernel_rel(const NullIdeal& N, MorId ell) {
  const FinCat& c = *N.base();
  std::vector<KernelCertificate> out;
  for (ObjId f = 0; f < c.object_count(); ++f)
    for (MorId r : c.hom(c.tgt(ell), f)) {
      auto v = check_cokernel(N, ell, r);
      if (v.ok()) out.push_back(*v.certificate);
    }
  for (std::size_t i = 1; i < out.size(); ++i) {
    MorId cmp = lookup(out[i], out[0].inclusion);
    if (cmp == kNone || !c.is_iso(cmp)) throw Error(ErrorCode::Internal, "cokernels are not isomorphic");
  }
  return out;
}

SesVerdict is_short_exact(const NullIdeal& N, MorId ell, MorId r) {
  const FinCat& c = *N.base();
  if (c.tgt(ell) != c.src(r)) throw Error(ErrorCode::NotComposable, "ell and r are not composable");
  SesVerdict v;
  v.record = SesRecord{c.src(ell), ell, c.tgt(ell), r, c.tgt(r)};
  v.kernel = check_kernel(N, ell, r);
  v.cokernel = check_cokernel(N, ell, r);
  v.exact = v.kernel.ok() && v.cokernel.ok();
  return v;
}

NullIdeal product_ideal(const ProductCategory& P, const std::vector<NullIdeal>& factor_ideals) {
  if (factor_ideals.size() != P.factors.size())
    throw Error(ErrorCode::FactorMismatch, "one ideal per factor is required");
  for (std::size_t i = 0; i < P.factors.size(); ++i)
    if (factor_ideals[i].base() != P.factors[i])
      throw Error(ErrorCode::FactorMismatch, "ideal " + std::to_string(i) + " lives on another category");
  IdSet gens(P.category->object_count());
  for (ObjId x = 0; x < P.category->object_count(); ++x) {
    bool in = true;
    for (std::size_t i = 0; i < P.factors.size() && in; ++i)
      in = factor_ideals[i].generators().contains(P.object_component(x, i));
    if (in) gens.insert(x);
  }
  return NullIdeal(P.category, gens);
}

ComponentwiseSes componentwise_ses_check(const ProductCategory& P, const std::vector<NullIdeal>& factor_ideals,
                                         MorId ell, MorId r) {
  NullIdeal N = product_ideal(P, factor_ideals);
  ComponentwiseSes out;
  out.product_exact = is_short_exact(N, ell, r).exact;
  bool all = true;
  for (std::size_t i = 0; i < P.factors.size(); ++i) {
    bool e = is_short_exact(factor_ideals[i], P.morphism_component(ell, i), P.morphism_component(r, i)).exact;
    out.factor_exact.push_back(e);
    all = all && e;
  }
  out.consistent = all == out.product_exact;
  return out;
}

bool is_retract(const FinCat& c, ObjId k, ObjId z) {
  for (MorId s : c.hom(k, z))
    for (MorId p : c.hom(z, k))
      if (c.compose(p, s) == c.identity(k)) return true;
  return false;
}

}  // namespace rectors
