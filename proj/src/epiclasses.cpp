#include "rectors/epiclasses.hpp"

#include <algorithm>

namespace rectors {

namespace {

IdSet zero_objects(const FinCat& X) { return IdSet::of(X.object_count(), find_extremal_objects(X).zero); }

template <class Pred>
std::vector<MorId> filter(const FinCat& X, Pred p) {
  std::vector<MorId> out;
  for (MorId f = 0; f < X.morphism_count(); ++f)
    if (p(f)) out.push_back(f);
  return out;
}

// (e, w) : P -> A x W is a product cone.
bool is_product_cone(const FinCat& X, MorId e, MorId w) {
  ObjId p = X.src(e), a = X.tgt(e), b = X.tgt(w);
  for (ObjId v = 0; v < X.object_count(); ++v)
    for (MorId f : X.hom(v, a))
      for (MorId g : X.hom(v, b)) {
        int count = 0;
        for (MorId h : X.hom(v, p))
          if (X.compose(e, h) == f && X.compose(w, h) == g && ++count > 1) break;
        if (count != 1) return false;
      }
  return true;
}

}  // namespace

const char* to_string(EpiMode m) {
  switch (m) {
    case EpiMode::Explicit: return "explicit";
    case EpiMode::Minimal: return "minimal";
    case EpiMode::Split: return "split";
    case EpiMode::Regular: return "regular";
    case EpiMode::Projections: return "projections";
  }
  return "unknown";
}

EpiClassPresentation build_epiclass(const CatPtr& Xp, std::vector<MorId> E, const Limits& limits) {
  const FinCat& X = *Xp;
  IdSet zero = zero_objects(X);
  if (zero.empty()) throw Error(ErrorCode::NotPointed, "the base category has no zero object");
  std::sort(E.begin(), E.end());
  E.erase(std::unique(E.begin(), E.end()), E.end());
  for (MorId e : E) {
    if (e >= X.morphism_count()) throw Error(ErrorCode::InvalidArgument, "morphism id out of range");
    if (!is_epi(X, e)) throw Error(ErrorCode::NonEpiInE, X.morphism_name(e) + " is not an epimorphism", {X.morphism_name(e)});
  }
  for (MorId f = 0; f < X.morphism_count(); ++f) {
    if (std::binary_search(E.begin(), E.end(), f)) continue;
    if (X.is_iso(f)) throw Error(ErrorCode::MissingIso, "class misses the isomorphism " + X.morphism_name(f), {X.morphism_name(f)});
    if (zero.contains(X.tgt(f)))
      throw Error(ErrorCode::MissingZeroTargetMap, "class misses " + X.morphism_name(f), {X.morphism_name(f)});
  }
  EpiClassPresentation P;
  P.base = Xp;
  P.E = E;
  P.arrows = arrow_category(Xp, E, limits);
  std::size_t n = E.size();
  P.torsion = IdSet(n);
  P.free = IdSet(n);
  for (ObjId i = 0; i < n; ++i) {
    if (zero.contains(X.tgt(E[i]))) P.torsion.insert(i);
    if (X.is_iso(E[i])) P.free.insert(i);
  }
  P.torsion = replete_closure(*P.arrows.category, P.torsion);
  P.free = replete_closure(*P.arrows.category, P.free);
  P.arrow_category_pointed = zero_objects(*P.arrows.category) == P.torsion.intersect(P.free);
  P.zero_ideal = NullIdeal(Xp, zero);
  return P;
}

std::vector<MorId> isos_and_zero_target_maps(const FinCat& X) {
  IdSet zero = zero_objects(X);
  return filter(X, [&](MorId f) { return X.is_iso(f) || zero.contains(X.tgt(f)); });
}

bool is_split_epi(const FinCat& X, MorId e) { return find_section(X, e) != kNone; }

bool is_regular_epi(const FinCat& X, MorId e) {
  ObjId p = X.src(e), a = X.tgt(e);
  for (ObjId k = 0; k < X.object_count(); ++k)
    for (MorId f : X.hom(k, p))
      for (MorId g : X.hom(k, p)) {
        if (g < f || X.compose(e, f) != X.compose(e, g)) continue;
        bool universal = true;
        for (ObjId v = 0; v < X.object_count() && universal; ++v)
          for (MorId h : X.hom(p, v)) {
            if (X.compose(h, f) != X.compose(h, g)) continue;
            int count = 0;
            for (MorId u : X.hom(a, v)) count += X.compose(u, e) == h;
            if (count != 1) {
              universal = false;
              break;
            }
          }
        if (universal) return true;
      }
  return false;
}

bool is_normal_epi(const NullIdeal& zero, MorId e) {
  const FinCat& X = *zero.base();
  for (ObjId k = 0; k < X.object_count(); ++k)
    for (MorId m : X.hom(k, X.src(e)))
      if (check_cokernel(zero, m, e).ok()) return true;
  return false;
}

bool has_kernel(const NullIdeal& zero, MorId e) { return !kernel_rel(zero, e).empty(); }

ProductProjection is_product_projection(const FinCat& X, MorId e) {
  ProductProjection out;
  for (ObjId w = 0; w < X.object_count(); ++w)
    for (MorId leg : X.hom(X.src(e), w))
      if (is_product_cone(X, e, leg)) {
        out.ok = true;
        out.complement = w;
        out.second_leg = leg;
        return out;
      }
  return out;
}

bool has_binary_products(const FinCat& X) {
  for (ObjId a = 0; a < X.object_count(); ++a)
    for (ObjId b = 0; b < X.object_count(); ++b) {
      bool found = false;
      for (ObjId p = 0; p < X.object_count() && !found; ++p)
        for (MorId e : X.hom(p, a)) {
          for (MorId w : X.hom(p, b))
            if (is_product_cone(X, e, w)) {
              found = true;
              break;
            }
          if (found) break;
        }
      if (!found) return false;
    }
  return true;
}

std::vector<MorId> split_epimorphisms(const FinCat& X) {
  return filter(X, [&](MorId f) { return is_split_epi(X, f); });
}
std::vector<MorId> regular_epimorphisms(const FinCat& X) {
  return filter(X, [&](MorId f) { return is_regular_epi(X, f); });
}
std::vector<MorId> product_projections(const FinCat& X) {
  return filter(X, [&](MorId f) { return is_product_projection(X, f).ok; });
}

ShapeVerdict ses_shape_check(const EpiClassPresentation& P, MorId ell, MorId r) {
  const FinCat& A = *P.arrows.category;
  const FinCat& X = *P.base;
  ShapeVerdict v;
  if (A.tgt(ell) != A.src(r)) throw Error(ErrorCode::NotComposable, "ell and r are not composable");
  v.candidate = P.torsion.contains(A.src(ell)) && P.free.contains(A.tgt(r));
  NullIdeal N(P.arrows.category, P.torsion.intersect(P.free));
  v.generic = is_short_exact(N, ell, r).exact;
  MorId a = P.arrows.squares[ell].first;
  MorId e = P.arrows.arrows[A.tgt(ell)];
  MorId b = P.arrows.squares[r].second;
  v.shape = v.candidate && check_kernel(P.zero_ideal, a, e).ok() && check_cokernel(P.zero_ideal, a, e).ok() &&
            X.is_iso(b);
  if (!v.candidate) v.generic = false;
  return v;
}

TorsionClassVerdict check_torsion_class(const EpiClassPresentation& P) {
  TorsionClassVerdict v;
  v.direct = true;
  for (MorId e : P.E)
    if (!has_kernel(P.zero_ideal, e) || !is_normal_epi(P.zero_ideal, e)) {
      v.direct = false;
      v.witness = e;
      break;
    }
  v.pretorsion = check_pretorsion(P.arrows.category, P.torsion, P.free);
  v.generic = v.pretorsion.ok && P.arrow_category_pointed;
  v.agree = v.direct == v.generic;
  return v;
}

RectangularClassVerdict check_rectangular_class(const EpiClassPresentation& P, EpiMode mode) {
  const FinCat& X = *P.base;
  RectangularClassVerdict v;
  v.torsion = check_torsion_class(P);
  v.products_exist = has_binary_products(X);
  v.direct = true;
  v.all_normal = true;
  bool normal_with_kernel = true;
  for (MorId e : P.E) {
    if (v.direct && !is_product_projection(X, e).ok) {
      v.direct = false;
      v.witness = e;
    }
    bool normal = is_normal_epi(P.zero_ideal, e);
    v.all_normal = v.all_normal && normal;
    normal_with_kernel = normal_with_kernel && normal && has_kernel(P.zero_ideal, e);
  }
  v.generic = v.torsion.generic && is_rectangular(*v.torsion.pretorsion.presentation).ok;
  v.agree = v.direct == v.generic;
  v.normal_projections = true;
  for (MorId e : product_projections(X)) v.normal_projections = v.normal_projections && is_normal_epi(P.zero_ideal, e);
  v.projections_are_normal_with_kernel = !v.direct || normal_with_kernel;
  // The rectangular clauses assume binary products in X; without them only the torsion clauses are decided.
  bool rect = !v.products_exist || v.agree;
  switch (mode) {
    case EpiMode::Projections:
      v.mode_statement = v.torsion.agree && v.torsion.generic == v.normal_projections &&
                         (!v.products_exist || v.generic == v.torsion.generic) && rect;
      break;
    case EpiMode::Split:
    case EpiMode::Regular:
      v.mode_statement = v.torsion.agree && v.torsion.generic == v.all_normal && rect;
      break;
    default:
      v.mode_statement = v.torsion.agree && rect;
  }
  return v;
}

}  // namespace rectors
