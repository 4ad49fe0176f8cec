#include "rectors/fincat.hpp"

namespace rectors {

std::string functor_violation(const Functor& F) {
  const FinCat& C = *F.source;
  const FinCat& D = *F.target;
  if (F.objects.size() != C.object_count() || F.morphisms.size() != C.morphism_count())
    return "object or morphism map has the wrong length";
  for (ObjId x = 0; x < C.object_count(); ++x)
    if (F.obj(x) >= D.object_count()) return "object " + C.object_name(x) + " maps out of range";
  for (MorId f = 0; f < C.morphism_count(); ++f) {
    MorId g = F.mor(f);
    if (g >= D.morphism_count()) return "morphism " + C.morphism_name(f) + " maps out of range";
    if (D.src(g) != F.obj(C.src(f)) || D.tgt(g) != F.obj(C.tgt(f)))
      return "morphism " + C.morphism_name(f) + " maps into the wrong hom-set";
  }
  for (ObjId x = 0; x < C.object_count(); ++x)
    if (F.mor(C.identity(x)) != D.identity(F.obj(x))) return "identity of " + C.object_name(x) + " not preserved";
  for (MorId f = 0; f < C.morphism_count(); ++f)
    for (ObjId z = 0; z < C.object_count(); ++z)
      for (MorId g : C.hom(C.tgt(f), z))
        if (F.mor(C.compose(g, f)) != D.compose(F.mor(g), F.mor(f)))
          return "composite " + C.morphism_name(g) + " . " + C.morphism_name(f) + " not preserved";
  return {};
}

Functor identity_functor(const CatPtr& c) {
  Functor F{c, c, {}, {}};
  for (ObjId x = 0; x < c->object_count(); ++x) F.objects.push_back(x);
  for (MorId f = 0; f < c->morphism_count(); ++f) F.morphisms.push_back(f);
  return F;
}

Functor compose(const Functor& G, const Functor& F) {
  if (F.target != G.source) throw Error(ErrorCode::NotComposable, "functors are not composable");
  Functor H{F.source, G.target, {}, {}};
  for (ObjId x : F.objects) H.objects.push_back(G.obj(x));
  for (MorId f : F.morphisms) H.morphisms.push_back(G.mor(f));
  return H;
}

std::string nat_trans_violation(const NatTrans& a) {
  if (a.from.source != a.to.source || a.from.target != a.to.target) return "functors have different endpoints";
  const FinCat& C = *a.from.source;
  const FinCat& D = *a.from.target;
  if (a.components.size() != C.object_count()) return "component count mismatch";
  for (ObjId x = 0; x < C.object_count(); ++x) {
    MorId c = a.components[x];
    if (c >= D.morphism_count() || D.src(c) != a.from.obj(x) || D.tgt(c) != a.to.obj(x))
      return "component at " + C.object_name(x) + " has the wrong type";
  }
  for (MorId f = 0; f < C.morphism_count(); ++f) {
    ObjId s = C.src(f), t = C.tgt(f);
    if (D.compose(a.to.mor(f), a.components[s]) != D.compose(a.components[t], a.from.mor(f)))
      return "naturality fails at " + C.morphism_name(f);
  }
  return {};
}

bool is_natural_iso(const NatTrans& a) {
  if (!nat_trans_violation(a).empty()) return false;
  for (MorId c : a.components)
    if (!a.from.target->is_iso(c)) return false;
  return true;
}

NatTrans identity_nat(const Functor& F) {
  NatTrans a{F, F, {}};
  for (ObjId x = 0; x < F.source->object_count(); ++x) a.components.push_back(F.target->identity(F.obj(x)));
  return a;
}

NatTrans vertical(const NatTrans& b, const NatTrans& a) {
  NatTrans c{a.from, b.to, {}};
  for (ObjId x = 0; x < a.components.size(); ++x)
    c.components.push_back(a.from.target->compose(b.components[x], a.components[x]));
  return c;
}

NatTrans inverse(const NatTrans& a) {
  NatTrans b{a.to, a.from, {}};
  for (MorId c : a.components) {
    MorId i = a.from.target->inverse(c);
    if (i == kNone) throw Error(ErrorCode::InvalidArgument, "component is not invertible");
    b.components.push_back(i);
  }
  return b;
}

NatTrans whisker_left(const Functor& H, const NatTrans& a) {
  NatTrans b{compose(H, a.from), compose(H, a.to), {}};
  for (MorId c : a.components) b.components.push_back(H.mor(c));
  return b;
}

NatTrans whisker_right(const NatTrans& a, const Functor& K) {
  NatTrans b{compose(a.from, K), compose(a.to, K), {}};
  for (ObjId x = 0; x < K.source->object_count(); ++x) b.components.push_back(a.components[K.obj(x)]);
  return b;
}

const char* to_string(EquivalenceVerdict::Failure f) {
  switch (f) {
    case EquivalenceVerdict::Failure::None: return "None";
    case EquivalenceVerdict::Failure::NotFullyFaithful: return "NotFullyFaithful";
    case EquivalenceVerdict::Failure::NotEssentiallySurjective: return "NotEssentiallySurjective";
  }
  return "Unknown";
}

namespace {

// Unique h in hom(a, b) with F(h) == target, else throws.
MorId preimage(const Functor& F, ObjId a, ObjId b, MorId target) {
  MorId found = kNone;
  for (MorId h : F.source->hom(a, b))
    if (F.mor(h) == target) {
      if (found != kNone) throw Error(ErrorCode::InternalNonUnique, "functor is not faithful on this hom-set");
      found = h;
    }
  if (found == kNone) throw Error(ErrorCode::InternalNonUnique, "functor is not full on this hom-set");
  return found;
}

}  // namespace

EquivalenceVerdict check_equivalence(const Functor& F) {
  const FinCat& C = *F.source;
  const FinCat& D = *F.target;
  EquivalenceVerdict v;
  std::vector<char> seen(D.morphism_count(), 0);
  for (ObjId a = 0; a < C.object_count(); ++a)
    for (ObjId b = 0; b < C.object_count(); ++b) {
      auto src = C.hom(a, b);
      auto dst = D.hom(F.obj(a), F.obj(b));
      bool ok = src.size() == dst.size();
      for (MorId h : src) {
        if (!ok) break;
        if (seen[F.mor(h)]) ok = false;
        seen[F.mor(h)] = 1;
      }
      for (MorId h : src) seen[F.mor(h)] = 0;
      if (!ok) {
        v.failure = EquivalenceVerdict::Failure::NotFullyFaithful;
        v.witness_a = a;
        v.witness_b = b;
        return v;
      }
    }
  std::vector<ObjId> pre(D.object_count(), kNone);
  std::vector<MorId> phi(D.object_count(), kNone);
  for (ObjId d = 0; d < D.object_count(); ++d) {
    for (ObjId c = 0; c < C.object_count() && pre[d] == kNone; ++c) {
      MorId i = D.find_iso(F.obj(c), d);
      if (i != kNone) {
        pre[d] = c;
        phi[d] = i;
      }
    }
    if (pre[d] == kNone) {
      v.failure = EquivalenceVerdict::Failure::NotEssentiallySurjective;
      v.witness_a = d;
      return v;
    }
  }
  Functor G{F.target, F.source, pre, {}};
  for (MorId g = 0; g < D.morphism_count(); ++g) {
    ObjId d = D.src(g), e = D.tgt(g);
    MorId want = D.compose(D.inverse(phi[e]), D.compose(g, phi[d]));
    G.morphisms.push_back(preimage(F, pre[d], pre[e], want));
  }
  NatTrans unit{identity_functor(F.source), compose(G, F), {}};
  for (ObjId c = 0; c < C.object_count(); ++c)
    unit.components.push_back(preimage(F, c, G.obj(F.obj(c)), D.inverse(phi[F.obj(c)])));
  NatTrans counit{compose(F, G), identity_functor(F.target), phi};
  v.ok = true;
  v.data = adjointify(F, G, unit, counit);
  return v;
}

AdjointEquivalence adjointify(const Functor& F, const Functor& G, const NatTrans& unit, const NatTrans& counit) {
  const FinCat& D = *F.target;
  NatTrans eps{counit.from, counit.to, {}};
  for (ObjId d = 0; d < D.object_count(); ++d) {
    MorId e_fgd = counit.components[F.obj(G.obj(d))];
    MorId f_eta = F.mor(unit.components[G.obj(d)]);
    MorId a = D.inverse(e_fgd), b = D.inverse(f_eta);
    if (a == kNone || b == kNone) throw Error(ErrorCode::NotAnEquivalence, "unit or counit is not invertible");
    eps.components.push_back(D.compose(counit.components[d], D.compose(b, a)));
  }
  AdjointEquivalence e{F, G, unit, eps};
  if (!triangle_identities_hold(e)) throw Error(ErrorCode::Internal, "adjointification failed");
  return e;
}

AdjointEquivalence complete_from_unit(const Functor& F, const Functor& G, const NatTrans& unit) {
  const FinCat& C = *F.source;
  const FinCat& D = *F.target;
  NatTrans eps{compose(F, G), identity_functor(F.target), {}};
  for (ObjId d = 0; d < D.object_count(); ++d) {
    MorId inv = C.inverse(unit.components[G.obj(d)]);
    if (inv == kNone) throw Error(ErrorCode::NotAnEquivalence, "unit is not invertible");
    eps.components.push_back(preimage(G, F.obj(G.obj(d)), d, inv));
  }
  AdjointEquivalence e{F, G, unit, eps};
  if (!triangle_identities_hold(e)) throw Error(ErrorCode::NotAnEquivalence, "triangle identities fail");
  return e;
}

bool triangle_identities_hold(const AdjointEquivalence& e) {
  const FinCat& C = *e.forward.source;
  const FinCat& D = *e.forward.target;
  for (ObjId c = 0; c < C.object_count(); ++c) {
    ObjId fc = e.forward.obj(c);
    if (D.compose(e.counit.components[fc], e.forward.mor(e.unit.components[c])) != D.identity(fc)) return false;
  }
  for (ObjId d = 0; d < D.object_count(); ++d) {
    ObjId gd = e.inverse.obj(d);
    if (C.compose(e.inverse.mor(e.counit.components[d]), e.unit.components[gd]) != C.identity(gd)) return false;
  }
  return true;
}

}  // namespace rectors
