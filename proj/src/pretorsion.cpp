#include "rectors/pretorsion.hpp"

#include <algorithm>
#include <functional>

namespace rectors {

namespace {

const Limits kInternal{128, 1u << 20};

MorId t1_violation(const FinCat& c, const NullIdeal& N, const IdSet& T, const IdSet& F) {
  for (ObjId t : T.members())
    for (ObjId f : F.members())
      for (MorId m : c.hom(t, f))
        if (!N.contains(m)) return m;
  return kNone;
}

ObjId least(const IdSet& s) {
  auto m = s.members();
  return m.empty() ? kNone : m.front();
}

MorId unique_fill(const FinCat& c, ObjId a, ObjId b, const std::function<bool(MorId)>& ok) {
  MorId found = kNone;
  for (MorId m : c.hom(a, b))
    if (ok(m)) {
      if (found != kNone) throw Error(ErrorCode::InternalNonUnique, "fill-in is not unique");
      found = m;
    }
  if (found == kNone) throw Error(ErrorCode::InternalNonUnique, "fill-in does not exist");
  return found;
}

}  // namespace

const char* to_string(PretorsionFailure f) {
  switch (f) {
    case PretorsionFailure::None: return "None";
    case PretorsionFailure::EmptyCategoryUnsupported: return "EmptyCategoryUnsupported";
    case PretorsionFailure::T1Violation: return "T1Violation";
    case PretorsionFailure::T2Violation: return "T2Violation";
    case PretorsionFailure::InvalidSes: return "InvalidSes";
    case PretorsionFailure::NotNormalized: return "NotNormalized";
  }
  return "Unknown";
}

PretorsionVerdict check_pretorsion(const CatPtr& cp, const IdSet& T0, const IdSet& F0) {
  const FinCat& c = *cp;
  PretorsionVerdict v;
  if (c.empty()) {
    v.failure = PretorsionFailure::EmptyCategoryUnsupported;
    return v;
  }
  if (T0.universe() != c.object_count() || F0.universe() != c.object_count())
    throw Error(ErrorCode::InvalidArgument, "object subsets do not match the category");
  IdSet T = replete_closure(c, T0), F = replete_closure(c, F0);
  v.closure_added = !(T == T0) || !(F == F0);
  NullIdeal N(cp, T.intersect(F));
  if ((v.t1_witness = t1_violation(c, N, T, F)) != kNone) {
    v.failure = PretorsionFailure::T1Violation;
    return v;
  }
  std::vector<SesRecord> ses(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    bool found = false;
    auto try_pair = [&](MorId ell, MorId r) {
      if (!N.contains(c.compose(r, ell))) return false;
      if (!check_kernel(N, ell, r).ok() || !check_cokernel(N, ell, r).ok()) return false;
      ses[x] = SesRecord{c.src(ell), ell, x, r, c.tgt(r)};
      return true;
    };
    bool in_t = T.contains(x), in_f = F.contains(x);
    if (in_t && in_f) {
      found = try_pair(c.identity(x), c.identity(x));
    } else if (in_t) {
      std::vector<MorId> rs;
      for (ObjId f : F.members())
        for (MorId r : c.hom(x, f)) rs.push_back(r);
      std::sort(rs.begin(), rs.end());
      for (MorId r : rs)
        if ((found = try_pair(c.identity(x), r))) break;
    } else if (in_f) {
      for (ObjId t : T.members()) {
        for (MorId ell : c.hom(t, x))
          if ((found = try_pair(ell, c.identity(x)))) break;
        if (found) break;
      }
    } else {
      std::vector<MorId> rs;
      for (ObjId f : F.members())
        for (MorId r : c.hom(x, f)) rs.push_back(r);
      std::sort(rs.begin(), rs.end());
      for (ObjId t : T.members()) {
        for (MorId ell : c.hom(t, x)) {
          for (MorId r : rs)
            if ((found = try_pair(ell, r))) break;
          if (found) break;
        }
        if (found) break;
      }
    }
    if (!found) {
      v.failure = PretorsionFailure::T2Violation;
      v.t2_witness = x;
      return v;
    }
  }
  v.ok = true;
  v.presentation = PretorsionPresentation{cp, T, F, N, std::move(ses), least(T.intersect(F)), v.closure_added};
  return v;
}

std::vector<std::pair<MorId, MorId>> normalize_choice(const FinCat& c, const IdSet& T, const IdSet& F,
                                                      std::vector<std::pair<MorId, MorId>> choice) {
  for (ObjId x = 0; x < choice.size(); ++x) {
    if (T.contains(x)) choice[x].first = c.identity(x);
    if (F.contains(x)) choice[x].second = c.identity(x);
  }
  return choice;
}

PretorsionVerdict make_presentation(const CatPtr& cp, const IdSet& T0, const IdSet& F0,
                                    const std::vector<std::pair<MorId, MorId>>& choice) {
  const FinCat& c = *cp;
  PretorsionVerdict v;
  if (c.empty()) {
    v.failure = PretorsionFailure::EmptyCategoryUnsupported;
    return v;
  }
  if (choice.size() != c.object_count()) throw Error(ErrorCode::InvalidArgument, "one sequence per object is required");
  IdSet T = replete_closure(c, T0), F = replete_closure(c, F0);
  v.closure_added = !(T == T0) || !(F == F0);
  NullIdeal N(cp, T.intersect(F));
  if ((v.t1_witness = t1_violation(c, N, T, F)) != kNone) {
    v.failure = PretorsionFailure::T1Violation;
    return v;
  }
  std::vector<SesRecord> ses(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto [ell, r] = choice[x];
    if (c.tgt(ell) != x || c.src(r) != x || !T.contains(c.src(ell)) || !F.contains(c.tgt(r)) ||
        !is_short_exact(N, ell, r).exact) {
      v.failure = PretorsionFailure::InvalidSes;
      v.t2_witness = x;
      return v;
    }
    if ((T.contains(x) && ell != c.identity(x)) || (F.contains(x) && r != c.identity(x))) {
      v.failure = PretorsionFailure::NotNormalized;
      v.t2_witness = x;
      return v;
    }
    ses[x] = SesRecord{c.src(ell), ell, x, r, c.tgt(r)};
  }
  v.ok = true;
  v.presentation = PretorsionPresentation{cp, T, F, N, std::move(ses), least(T.intersect(F)), v.closure_added};
  return v;
}

std::pair<MorId, MorId> induced_parts(const PretorsionPresentation& P, MorId h) {
  const FinCat& c = *P.category;
  const SesRecord& sx = P.ses[c.src(h)];
  const SesRecord& sy = P.ses[c.tgt(h)];
  MorId hl = c.compose(h, sx.ell);
  MorId ht = unique_fill(c, sx.torsion, sy.torsion, [&](MorId m) { return c.compose(sy.ell, m) == hl; });
  MorId rh = c.compose(sy.r, h);
  MorId hf = unique_fill(c, sx.free, sy.free, [&](MorId m) { return c.compose(m, sx.r) == rh; });
  return {ht, hf};
}

Gamma gamma_for_choice(const PretorsionPresentation& P, const std::vector<SesRecord>& ses) {
  PretorsionPresentation Q = P;
  Q.ses = ses;
  Gamma g;
  g.torsion = full_subcategory(P.category, P.torsion, "T");
  g.free = full_subcategory(P.category, P.free, "F");
  g.target = product_category({g.torsion.category, g.free.category}, kInternal);
  const FinCat& c = *P.category;
  g.functor = Functor{P.category, g.target.category, {}, {}};
  for (ObjId x = 0; x < c.object_count(); ++x) {
    std::vector<ObjId> xs{g.torsion.to_sub[ses[x].torsion], g.free.to_sub[ses[x].free]};
    g.functor.objects.push_back(g.target.object_of(xs));
  }
  for (MorId h = 0; h < c.morphism_count(); ++h) {
    auto [ht, hf] = induced_parts(Q, h);
    std::vector<MorId> hs{g.torsion.mor_to_sub[ht], g.free.mor_to_sub[hf]};
    g.functor.morphisms.push_back(g.target.morphism_of(hs));
  }
  return g;
}

Gamma gamma(const PretorsionPresentation& P) { return gamma_for_choice(P, P.ses); }

RectangularVerdict is_rectangular(const PretorsionPresentation& P) {
  RectangularVerdict v;
  v.gamma = gamma(P);
  v.equivalence = check_equivalence(v.gamma.functor);
  v.ok = v.equivalence.ok;
  return v;
}

ProductPretorsion product_pretorsion(const std::vector<PretorsionPresentation>& parts, const Limits& limits) {
  std::vector<CatPtr> cats;
  for (const auto& p : parts) cats.push_back(p.category);
  ProductPretorsion out;
  out.product = product_category(cats, limits);
  const FinCat& c = *out.product.category;
  IdSet T(c.object_count()), F(c.object_count());
  std::vector<std::pair<MorId, MorId>> choice(c.object_count());
  std::vector<MorId> ells(parts.size()), rs(parts.size());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto xs = out.product.object_components(x);
    bool in_t = true, in_f = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      in_t = in_t && parts[i].torsion.contains(xs[i]);
      in_f = in_f && parts[i].free.contains(xs[i]);
      ells[i] = parts[i].ses[xs[i]].ell;
      rs[i] = parts[i].ses[xs[i]].r;
    }
    if (in_t) T.insert(x);
    if (in_f) F.insert(x);
    choice[x] = {out.product.morphism_of(ells), out.product.morphism_of(rs)};
  }
  out.componentwise = make_presentation(out.product.category, T, F, choice);
  out.rechecked = check_pretorsion(out.product.category, T, F);
  return out;
}

const char* to_string(ProductTheory::Failure f) {
  switch (f) {
    case ProductTheory::Failure::None: return "None";
    case ProductTheory::Failure::NoTerminalInC: return "NoTerminalInC";
    case ProductTheory::Failure::NoInitialInD: return "NoInitialInD";
    case ProductTheory::Failure::QuasiPointednessViolation: return "QuasiPointednessViolation";
  }
  return "Unknown";
}

bool componentwise_shape_holds(const ProductCategory& P, MorId ell, MorId r) {
  if (P.factors.size() != 2) throw Error(ErrorCode::FactorMismatch, "shape check needs exactly two factors");
  const FinCat& C = *P.factors[0];
  const FinCat& D = *P.factors[1];
  return C.is_iso(P.morphism_component(ell, 0)) && is_mono(D, P.morphism_component(ell, 1)) &&
         is_epi(C, P.morphism_component(r, 0)) && D.is_iso(P.morphism_component(r, 1));
}

bool every_map_to_terminal_is_epi(const FinCat& c, MorId* witness) {
  for (ObjId one : find_extremal_objects(c).terminal)
    for (ObjId x = 0; x < c.object_count(); ++x)
      for (MorId m : c.hom(x, one))
        if (!is_epi(c, m)) {
          if (witness) *witness = m;
          return false;
        }
  return true;
}

bool every_map_from_initial_is_mono(const FinCat& c, MorId* witness) {
  for (ObjId zero : find_extremal_objects(c).initial)
    for (ObjId x = 0; x < c.object_count(); ++x)
      for (MorId m : c.hom(zero, x))
        if (!is_mono(c, m)) {
          if (witness) *witness = m;
          return false;
        }
  return true;
}

ProductTheory canonical_product_theory(const CatPtr& C, const CatPtr& D, const Limits& limits) {
  ProductTheory a;
  auto ec = find_extremal_objects(*C);
  auto ed = find_extremal_objects(*D);
  if (ec.terminal.empty()) {
    a.failure = ProductTheory::Failure::NoTerminalInC;
    return a;
  }
  if (ed.initial.empty()) {
    a.failure = ProductTheory::Failure::NoInitialInD;
    return a;
  }
  if (!every_map_to_terminal_is_epi(*C, &a.witness)) {
    a.failure = ProductTheory::Failure::QuasiPointednessViolation;
    a.witness_factor = 0;
    return a;
  }
  if (!every_map_from_initial_is_mono(*D, &a.witness)) {
    a.failure = ProductTheory::Failure::QuasiPointednessViolation;
    a.witness_factor = 1;
    return a;
  }
  a.product = product_category({C, D}, limits);
  const ProductCategory& P = *a.product;
  const FinCat& c = *P.category;
  ObjId zero = ed.initial.front(), one = ec.terminal.front();
  IdSet T(c.object_count()), F(c.object_count());
  std::vector<std::pair<MorId, MorId>> choice(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    ObjId cx = P.object_component(x, 0), dx = P.object_component(x, 1);
    bool d_initial = is_initial(*D, dx), c_terminal = is_terminal(*C, cx);
    if (d_initial) T.insert(x);
    if (c_terminal) F.insert(x);
    ObjId z = d_initial ? dx : zero;
    ObjId o = c_terminal ? cx : one;
    std::vector<MorId> ell{C->identity(cx), D->hom(z, dx).front()};
    std::vector<MorId> r{C->hom(cx, o).front(), D->identity(dx)};
    choice[x] = {P.morphism_of(ell), P.morphism_of(r)};
  }
  a.verdict = make_presentation(P.category, T, F, choice);
  return a;
}

namespace {

MorId universal_unit(const FinCat& c, const IdSet& J, ObjId x, bool reflective) {
  for (ObjId j : J.members()) {
    auto cands = reflective ? c.hom(x, j) : c.hom(j, x);
    for (MorId eta : cands) {
      if (reflective ? !is_epi(c, eta) : !is_mono(c, eta)) continue;
      bool universal = true;
      for (ObjId j2 : J.members()) {
        auto tests = reflective ? c.hom(x, j2) : c.hom(j2, x);
        for (MorId g : tests) {
          int count = 0;
          auto hs = reflective ? c.hom(j, j2) : c.hom(j2, j);
          for (MorId h : hs)
            count += (reflective ? c.compose(h, eta) : c.compose(eta, h)) == g;
          if (count != 1) {
            universal = false;
            break;
          }
        }
        if (!universal) break;
      }
      if (universal) return eta;
    }
  }
  return kNone;
}

ReflectionVerdict reflection(const CatPtr& cp, const IdSet& J0, bool reflective) {
  const FinCat& c = *cp;
  ReflectionVerdict v;
  IdSet J = replete_closure(c, J0);
  v.replete = J == J0;
  v.ok = !c.empty();
  for (ObjId x = 0; x < c.object_count() && v.ok; ++x) {
    MorId eta = universal_unit(c, J, x, reflective);
    if (eta == kNone) {
      v.ok = false;
      v.witness = x;
    }
    v.units.push_back(eta);
  }
  IdSet all = IdSet::all(c.object_count());
  bool generic = reflective ? check_pretorsion(cp, all, J0).ok : check_pretorsion(cp, J0, all).ok;
  v.agrees_with_pretorsion = generic == v.ok;
  return v;
}

}  // namespace

ReflectionVerdict is_epireflective(const CatPtr& c, const IdSet& J) { return reflection(c, J, true); }
ReflectionVerdict is_monocoreflective(const CatPtr& c, const IdSet& J) { return reflection(c, J, false); }

PretorsionVerdict transfer_along_equivalence(const PretorsionPresentation& Pd, const Functor& L) {
  if (L.target != Pd.category) throw Error(ErrorCode::InvalidArgument, "functor does not land in the theory's category");
  auto ev = check_equivalence(L);
  if (!ev.ok) throw Error(ErrorCode::NotAnEquivalence, std::string("not an equivalence: ") + to_string(ev.failure));
  const AdjointEquivalence& e = *ev.data;
  const FinCat& c = *L.source;
  IdSet T(c.object_count()), F(c.object_count());
  std::vector<std::pair<MorId, MorId>> choice(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    if (Pd.torsion.contains(L.obj(x))) T.insert(x);
    if (Pd.free.contains(L.obj(x))) F.insert(x);
    const SesRecord& s = Pd.ses[L.obj(x)];
    MorId eta = e.unit.components[x];
    MorId ell = c.compose(c.inverse(eta), e.inverse.mor(s.ell));
    MorId r = c.compose(e.inverse.mor(s.r), eta);
    choice[x] = {ell, r};
  }
  return make_presentation(L.source, T, F, normalize_choice(c, T, F, choice));
}

const char* to_string(MorphismVerdict::Failure f) {
  switch (f) {
    case MorphismVerdict::Failure::None: return "None";
    case MorphismVerdict::Failure::NotAFunctor: return "NotAFunctor";
    case MorphismVerdict::Failure::TorsionNotPreserved: return "TorsionNotPreserved";
    case MorphismVerdict::Failure::FreeNotPreserved: return "FreeNotPreserved";
    case MorphismVerdict::Failure::SesNotPreserved: return "SesNotPreserved";
  }
  return "Unknown";
}

MorphismVerdict check_pretorsion_morphism(const PretorsionPresentation& P, const PretorsionPresentation& Q,
                                          const Functor& G) {
  MorphismVerdict v;
  if (G.source != P.category || G.target != Q.category || !functor_violation(G).empty()) {
    v.failure = MorphismVerdict::Failure::NotAFunctor;
    return v;
  }
  const FinCat& c = *P.category;
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (P.torsion.contains(x) && !Q.torsion.contains(G.obj(x))) {
      v.failure = MorphismVerdict::Failure::TorsionNotPreserved;
      v.witness = x;
      return v;
    }
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (P.free.contains(x) && !Q.free.contains(G.obj(x))) {
      v.failure = MorphismVerdict::Failure::FreeNotPreserved;
      v.witness = x;
      return v;
    }
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (!is_short_exact(Q.ideal, G.mor(P.ses[x].ell), G.mor(P.ses[x].r)).exact) {
      v.failure = MorphismVerdict::Failure::SesNotPreserved;
      v.witness = x;
      return v;
    }
  v.ok = true;
  return v;
}

LambdaComponents lambda_for_morphism(const PretorsionPresentation& P, const PretorsionPresentation& Q,
                                     const Functor& G) {
  const FinCat& d = *Q.category;
  LambdaComponents out;
  for (ObjId x = 0; x < P.category->object_count(); ++x) {
    const SesRecord& s = P.ses[x];
    const SesRecord& sg = Q.ses[G.obj(x)];
    MorId gl = G.mor(s.ell), gr = G.mor(s.r);
    out.torsion.push_back(
        unique_fill(d, sg.torsion, G.obj(s.torsion), [&](MorId m) { return d.compose(gl, m) == sg.ell; }));
    out.free.push_back(unique_fill(d, sg.free, G.obj(s.free), [&](MorId m) { return d.compose(m, sg.r) == gr; }));
  }
  return out;
}

ObjId alpha_compatibility_violation(const PretorsionPresentation& P, const PretorsionPresentation& Q,
                                    const Functor& G, const Functor& H, const NatTrans& alpha) {
  const FinCat& d = *Q.category;
  auto lg = lambda_for_morphism(P, Q, G);
  auto lh = lambda_for_morphism(P, Q, H);
  for (ObjId x = 0; x < P.category->object_count(); ++x) {
    auto [at, af] = induced_parts(Q, alpha.components[x]);
    const SesRecord& s = P.ses[x];
    if (d.compose(lh.torsion[x], at) != d.compose(alpha.components[s.torsion], lg.torsion[x])) return x;
    if (d.compose(lh.free[x], af) != d.compose(alpha.components[s.free], lg.free[x])) return x;
  }
  return kNone;
}

Characterization characterize_rectangular(const CatPtr& cp, const IdSet& T0, const IdSet& F0) {
  Characterization ch;
  ch.verdict = check_pretorsion(cp, T0, F0);
  ch.pretorsion = ch.verdict.ok;
  if (!ch.pretorsion) return ch;
  const PretorsionPresentation& P = *ch.verdict.presentation;
  const FinCat& c = *cp;
  auto rect = is_rectangular(P);
  ch.rectangular = rect.ok;
  IdSet Z = P.torsion.intersect(P.free);
  ch.zero = P.zero_witness;

  auto ext = find_extremal_objects(c);
  ch.symmetrical = is_bi_quasi_pointed(c).ok;
  ch.pointed = !ext.zero.empty() && Z == IdSet::of(c.object_count(), ext.zero);

  ch.kernels_of_identities = true;
  ch.identity_kernels = true;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto ks = kernel_rel(P.ideal, c.identity(x));
    auto cs = cokernel_rel(P.ideal, c.identity(x));
    if (ks.empty() || cs.empty()) ch.kernels_of_identities = false;
    for (const auto& k : ks) {
      ObjId kobj = c.src(k.inclusion);
      bool retract = false;
      for (ObjId z : Z.members()) retract = retract || is_retract(c, kobj, z);
      if (!retract || !Z.contains(kobj)) ch.identity_kernels = false;
    }
  }
  ch.gj_consistent = !(ch.rectangular && ch.kernels_of_identities) || ch.pointed;
  if (!ch.rectangular) return ch;

  ObjId z = ch.zero;
  ch.intersection_isomorphic = true;
  for (ObjId a : Z.members())
    for (ObjId b : Z.members()) ch.intersection_isomorphic = ch.intersection_isomorphic && c.isomorphic(a, b);
  ch.zero_endo_trivial = c.hom(z, z).size() == 1;
  ch.zero_terminal_in_torsion = true;
  for (ObjId t : P.torsion.members()) ch.zero_terminal_in_torsion = ch.zero_terminal_in_torsion && c.hom(t, z).size() == 1;
  ch.zero_initial_in_free = true;
  for (ObjId f : P.free.members()) ch.zero_initial_in_free = ch.zero_initial_in_free && c.hom(z, f).size() == 1;

  const Gamma& g = rect.gamma;
  const CatPtr& Tc = g.torsion.category;
  const CatPtr& Fc = g.free.category;
  ch.torsion_quasi_pointed = every_map_to_terminal_is_epi(*Tc, nullptr) && !find_extremal_objects(*Tc).terminal.empty();
  ch.free_quasi_pointed = every_map_from_initial_is_mono(*Fc, nullptr) && !find_extremal_objects(*Fc).initial.empty();

  auto a = canonical_product_theory(Tc, Fc, kInternal);
  if (a.failure == ProductTheory::Failure::None && a.verdict && a.verdict->ok) {
    const auto& PA = *a.verdict->presentation;
    bool preserves = true;
    for (ObjId x = 0; x < c.object_count(); ++x) {
      ObjId gx = g.functor.obj(x);
      preserves = preserves && (PA.torsion.contains(gx) == P.torsion.contains(x)) &&
                  (PA.free.contains(gx) == P.free.contains(x));
    }
    ch.product_form_equivalent = preserves;

    IdSet tt = IdSet::all(Tc->object_count());
    IdSet tone = IdSet::of(Tc->object_count(), find_extremal_objects(*Tc).terminal);
    IdSet fzero = IdSet::of(Fc->object_count(), find_extremal_objects(*Fc).initial);
    IdSet ff = IdSet::all(Fc->object_count());
    auto vt = check_pretorsion(Tc, tt, tone);
    auto vf = check_pretorsion(Fc, fzero, ff);
    if (vt.ok && vf.ok) {
      auto pp = product_pretorsion({*vt.presentation, *vf.presentation}, kInternal);
      ch.product_form_matches = pp.componentwise.ok && pp.rechecked.ok &&
                                pp.componentwise.presentation->torsion == PA.torsion &&
                                pp.componentwise.presentation->free == PA.free;
    }
  }
  return ch;
}

}  // namespace rectors
