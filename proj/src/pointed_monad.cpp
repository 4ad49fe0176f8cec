#include "rectors/pointed_monad.hpp"

#include <algorithm>

namespace rectors {

namespace {

const Limits kSquare{1u << 14, 1u << 20};

std::size_t pow_size(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > (std::size_t(1) << 40) / base) return std::size_t(1) << 40;
    r *= base;
  }
  return r;
}

Functor diagonal(const CatPtr& c, const ProductCategory& sq) {
  Functor d{c, sq.category, {}, {}};
  for (ObjId x = 0; x < c->object_count(); ++x) d.objects.push_back(sq.object_of(std::vector<ObjId>{x, x}));
  for (MorId f = 0; f < c->morphism_count(); ++f) d.morphisms.push_back(sq.morphism_of(std::vector<MorId>{f, f}));
  return d;
}

ProductCategory square_of(const CatPtr& c) {
  if (pow_size(c->morphism_count(), 2) > kSquare.max_morphisms || pow_size(c->object_count(), 2) > kSquare.max_objects)
    throw Error(ErrorCode::SizeTooLarge, "C x C is too large to materialize");
  return product_category({c, c}, kSquare);
}

struct Recorder {
  CheckResult& r;
  template <class... Ids>
  void fail(Ids... ids) {
    if (r.ok) {
      r.ok = false;
      r.witness = {static_cast<std::uint32_t>(ids)...};
    }
  }
};

CheckResult& add(CoherenceReport& rep, const std::string& name) {
  rep.checks.reserve(16);
  rep.checks.push_back(CheckResult{name, true, {}, 0});
  return rep.checks.back();
}

void finish(CoherenceReport& rep) {
  rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.ok; });
}

}  // namespace

MonadInstance monad_instance(const CatPtr& c) {
  auto bq = is_bi_quasi_pointed(*c);
  if (!bq.ok) throw Error(ErrorCode::NotBiQuasiPointed, std::string("not bi-quasi-pointed: ") + to_string(bq.reason));
  if (pow_size(c->morphism_count(), 4) > kSquare.max_morphisms)
    throw Error(ErrorCode::SizeTooLarge, "M M C is too large to materialize");
  MonadInstance m;
  m.base = c;
  m.pointed = !find_extremal_objects(*c).zero.empty();
  m.square = square_of(c);
  m.fourth = product_category({m.square.category, m.square.category}, kSquare);
  const ProductCategory& sq = m.square;
  const ProductCategory& fo = m.fourth;
  m.eta = diagonal(c, sq);
  m.eta_m = diagonal(sq.category, fo);
  m.m_eta = product_functor({m.eta, m.eta}, sq, fo);

  m.mu = Functor{fo.category, sq.category, {}, {}};
  for (ObjId x = 0; x < fo.category->object_count(); ++x) {
    ObjId a = sq.object_component(fo.object_component(x, 0), 0);
    ObjId d = sq.object_component(fo.object_component(x, 1), 1);
    m.mu.objects.push_back(sq.object_of(std::vector<ObjId>{a, d}));
  }
  for (MorId f = 0; f < fo.category->morphism_count(); ++f) {
    MorId a = sq.morphism_component(fo.morphism_component(f, 0), 0);
    MorId d = sq.morphism_component(fo.morphism_component(f, 1), 1);
    m.mu.morphisms.push_back(sq.morphism_of(std::vector<MorId>{a, d}));
  }

  Functor id = identity_functor(sq.category);
  m.unit_left = compose(m.mu, m.m_eta) == id;
  m.unit_right = compose(m.mu, m.eta_m) == id;

  // MMMC = MMC x MMC; M mu = mu x mu, mu M = (i, j) |-> (first of i, second of j).
  m.associative = true;
  std::size_t n = fo.category->object_count();
  for (ObjId i = 0; i < n && m.associative; ++i)
    for (ObjId j = 0; j < n; ++j) {
      ObjId lhs = m.mu.obj(fo.object_of(std::vector<ObjId>{m.mu.obj(i), m.mu.obj(j)}));
      ObjId rhs = m.mu.obj(fo.object_of(std::vector<ObjId>{fo.object_component(i, 0), fo.object_component(j, 1)}));
      ++m.associativity_objects;
      if (lhs != rhs) {
        m.associative = false;
        break;
      }
    }
  std::size_t k = fo.category->morphism_count();
  for (MorId i = 0; i < k && m.associative; ++i)
    for (MorId j = 0; j < k; ++j) {
      MorId lhs = m.mu.mor(fo.morphism_of(std::vector<MorId>{m.mu.mor(i), m.mu.mor(j)}));
      MorId rhs =
          m.mu.mor(fo.morphism_of(std::vector<MorId>{fo.morphism_component(i, 0), fo.morphism_component(j, 1)}));
      ++m.associativity_morphisms;
      if (lhs != rhs) {
        m.associative = false;
        break;
      }
    }
  return m;
}

ObjId PseudoAlgebra::q_obj(ObjId x, ObjId y) const { return q.obj(square.object_of(std::vector<ObjId>{x, y})); }
MorId PseudoAlgebra::q_mor(MorId f, MorId g) const { return q.mor(square.morphism_of(std::vector<MorId>{f, g})); }
std::size_t PseudoAlgebra::mu_index(ObjId x1, ObjId x2, ObjId x3, ObjId x4) const {
  std::size_t n = category->object_count();
  return ((std::size_t(x1) * n + x2) * n + x3) * n + x4;
}

PseudoAlgebra algebra_from_equivalence(const ProductCategory& target, const AdjointEquivalence& e) {
  const Functor& F = e.forward;
  const Functor& G = e.inverse;
  if (F.target != target.category || target.factors.size() != 2)
    throw Error(ErrorCode::FactorMismatch, "equivalence must land in a binary product");
  PseudoAlgebra A;
  A.category = F.source;
  const FinCat& c = *A.category;
  std::size_t n = c.object_count();
  if (pow_size(n, 4) > (std::size_t(1) << 22)) throw Error(ErrorCode::SizeTooLarge, "too many object 4-tuples");
  A.square = square_of(A.category);
  const ProductCategory& sq = A.square;
  A.q = Functor{sq.category, A.category, {}, {}};
  for (ObjId p = 0; p < sq.category->object_count(); ++p) {
    ObjId a = target.object_component(F.obj(sq.object_component(p, 0)), 0);
    ObjId b = target.object_component(F.obj(sq.object_component(p, 1)), 1);
    A.q.objects.push_back(G.obj(target.object_of(std::vector<ObjId>{a, b})));
  }
  for (MorId p = 0; p < sq.category->morphism_count(); ++p) {
    MorId a = target.morphism_component(F.mor(sq.morphism_component(p, 0)), 0);
    MorId b = target.morphism_component(F.mor(sq.morphism_component(p, 1)), 1);
    A.q.morphisms.push_back(G.mor(target.morphism_of(std::vector<MorId>{a, b})));
  }
  A.eta = e.unit.components;
  A.mu.assign(pow_size(n, 4), kNone);
  std::vector<ObjId> fa(n), fb(n);
  for (ObjId x = 0; x < n; ++x) {
    fa[x] = target.object_component(F.obj(x), 0);
    fb[x] = target.object_component(F.obj(x), 1);
  }
  for (ObjId x1 = 0; x1 < n; ++x1)
    for (ObjId x2 = 0; x2 < n; ++x2) {
      MorId c1 = target.morphism_component(
          e.counit.components[target.object_of(std::vector<ObjId>{fa[x1], fb[x2]})], 0);
      for (ObjId x3 = 0; x3 < n; ++x3)
        for (ObjId x4 = 0; x4 < n; ++x4) {
          MorId c2 = target.morphism_component(
              e.counit.components[target.object_of(std::vector<ObjId>{fa[x3], fb[x4]})], 1);
          A.mu[A.mu_index(x1, x2, x3, x4)] = G.mor(target.morphism_of(std::vector<MorId>{c1, c2}));
        }
    }
  return A;
}

PseudoAlgebra build_pseudo_algebra(const PretorsionPresentation& P) {
  auto rect = is_rectangular(P);
  if (!rect.ok) throw Error(ErrorCode::NotRectangular, "the canonical functor is not an equivalence");
  return algebra_from_equivalence(rect.gamma.target, *rect.equivalence.data);
}

PseudoAlgebra free_algebra(const MonadInstance& m) {
  PseudoAlgebra A;
  A.category = m.square.category;
  A.square = m.fourth;
  A.q = m.mu;
  const FinCat& c = *A.category;
  std::size_t n = c.object_count();
  A.mu.assign(pow_size(n, 4), kNone);
  for (ObjId x1 = 0; x1 < n; ++x1)
    for (ObjId x2 = 0; x2 < n; ++x2)
      for (ObjId x3 = 0; x3 < n; ++x3)
        for (ObjId x4 = 0; x4 < n; ++x4) A.mu[A.mu_index(x1, x2, x3, x4)] = c.identity(A.q_obj(x1, x4));
  for (ObjId x = 0; x < n; ++x) A.eta.push_back(c.identity(x));
  return A;
}

const CheckResult* CoherenceReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

CoherenceReport check_pseudo_algebra(const PseudoAlgebra& A) {
  CoherenceReport rep;
  const FinCat& c = *A.category;
  std::size_t n = c.object_count(), m = c.morphism_count();
  if (pow_size(n, 8) > (std::size_t(1) << 27) || pow_size(m, 4) > (std::size_t(1) << 27))
    throw Error(ErrorCode::SizeTooLarge, "coherence enumeration is too large");

  auto& fn = add(rep, "q_functor");
  fn.checked = 1;
  if (A.q.source != A.square.category || A.q.target != A.category || !functor_violation(A.q).empty() ||
      A.mu.size() != pow_size(n, 4) || A.eta.size() != n) {
    fn.ok = false;
    finish(rep);
    return rep;
  }

  auto& ty = add(rep, "component_types");
  {
    Recorder rec{ty};
    for (ObjId x = 0; x < n; ++x) {
      ++ty.checked;
      MorId e = A.eta[x];
      if (e >= m || c.src(e) != x || c.tgt(e) != A.q_obj(x, x)) rec.fail(x);
    }
    for (ObjId x1 = 0; x1 < n; ++x1)
      for (ObjId x2 = 0; x2 < n; ++x2)
        for (ObjId x3 = 0; x3 < n; ++x3)
          for (ObjId x4 = 0; x4 < n; ++x4) {
            ++ty.checked;
            MorId u = A.mu_at(x1, x2, x3, x4);
            if (u >= m || c.src(u) != A.q_obj(A.q_obj(x1, x2), A.q_obj(x3, x4)) || c.tgt(u) != A.q_obj(x1, x4))
              rec.fail(x1, x2, x3, x4);
          }
    if (!ty.ok) {
      finish(rep);
      return rep;
    }
  }

  auto& ul = add(rep, "unit_m_eta");
  {
    Recorder rec{ul};
    for (ObjId x1 = 0; x1 < n; ++x1)
      for (ObjId x2 = 0; x2 < n; ++x2) {
        ++ul.checked;
        MorId lhs = c.compose(A.mu_at(x1, x1, x2, x2), A.q_mor(A.eta[x1], A.eta[x2]));
        if (lhs != c.identity(A.q_obj(x1, x2))) rec.fail(x1, x2);
      }
  }
  auto& ur = add(rep, "unit_eta_m");
  {
    Recorder rec{ur};
    for (ObjId x1 = 0; x1 < n; ++x1)
      for (ObjId x2 = 0; x2 < n; ++x2) {
        ++ur.checked;
        ObjId q = A.q_obj(x1, x2);
        if (c.compose(A.mu_at(x1, x2, x1, x2), A.eta[q]) != c.identity(q)) rec.fail(x1, x2);
      }
  }
  auto& as = add(rep, "associativity");
  {
    Recorder rec{as};
    std::vector<ObjId> q2(n * n);
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b) q2[a * n + b] = A.q_obj(a, b);
    std::vector<ObjId> x(8, 0);
    for (std::size_t t = 0; t < pow_size(n, 8); ++t) {
      std::size_t r = t;
      for (int i = 7; i >= 0; --i) {
        x[i] = r % n;
        r /= n;
      }
      ++as.checked;
      MorId route1 = c.compose(A.mu_at(x[0], x[3], x[4], x[7]),
                               A.q_mor(A.mu_at(x[0], x[1], x[2], x[3]), A.mu_at(x[4], x[5], x[6], x[7])));
      MorId route2 = c.compose(A.mu_at(x[0], x[1], x[6], x[7]),
                               A.mu_at(q2[x[0] * n + x[1]], q2[x[2] * n + x[3]], q2[x[4] * n + x[5]],
                                       q2[x[6] * n + x[7]]));
      if (route1 != route2) {
        rec.fail(x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]);
        break;
      }
    }
  }
  auto& en = add(rep, "eta_natural");
  {
    Recorder rec{en};
    for (MorId f = 0; f < m; ++f) {
      ++en.checked;
      if (c.compose(A.eta[c.tgt(f)], f) != c.compose(A.q_mor(f, f), A.eta[c.src(f)])) rec.fail(f);
    }
  }
  auto& mn = add(rep, "mu_natural");
  {
    Recorder rec{mn};
    for (MorId f1 = 0; f1 < m && mn.ok; ++f1)
      for (MorId f2 = 0; f2 < m && mn.ok; ++f2) {
        MorId q12 = A.q_mor(f1, f2);
        for (MorId f3 = 0; f3 < m && mn.ok; ++f3)
          for (MorId f4 = 0; f4 < m; ++f4) {
            ++mn.checked;
            MorId lhs = c.compose(A.mu_at(c.tgt(f1), c.tgt(f2), c.tgt(f3), c.tgt(f4)), A.q_mor(q12, A.q_mor(f3, f4)));
            MorId rhs = c.compose(A.q_mor(f1, f4), A.mu_at(c.src(f1), c.src(f2), c.src(f3), c.src(f4)));
            if (lhs != rhs) {
              rec.fail(f1, f2, f3, f4);
              break;
            }
          }
      }
  }
  auto& ei = add(rep, "eta_iso");
  {
    Recorder rec{ei};
    for (ObjId x = 0; x < n; ++x) {
      ++ei.checked;
      if (!c.is_iso(A.eta[x])) rec.fail(x);
    }
  }
  auto& mi = add(rep, "mu_iso");
  {
    Recorder rec{mi};
    for (std::size_t i = 0; i < A.mu.size(); ++i) {
      ++mi.checked;
      if (!c.is_iso(A.mu[i])) rec.fail(i / (n * n * n), i / (n * n) % n, i / n % n, i % n);
    }
  }
  auto& ex = add(rep, "preserves_extremal");
  {
    Recorder rec{ex};
    auto e = find_extremal_objects(c);
    for (ObjId z : e.initial) {
      ++ex.checked;
      if (!is_initial(c, A.q_obj(z, z))) rec.fail(z);
    }
    for (ObjId o : e.terminal) {
      ++ex.checked;
      if (!is_terminal(c, A.q_obj(o, o))) rec.fail(o);
    }
  }
  finish(rep);
  return rep;
}

CoherenceReport check_pseudo_morphism(const PseudoAlgebra& A, const PseudoAlgebra& B, const PseudoMorphism& pm) {
  CoherenceReport rep;
  const FinCat& c = *A.category;
  const FinCat& d = *B.category;
  const Functor& G = pm.functor;
  std::size_t n = c.object_count(), m = c.morphism_count();
  auto phi = [&](ObjId x, ObjId y) { return pm.phi[std::size_t(x) * n + y]; };

  auto& fn = add(rep, "functor");
  fn.checked = 1;
  if (G.source != A.category || G.target != B.category || !functor_violation(G).empty() || pm.phi.size() != n * n) {
    fn.ok = false;
    finish(rep);
    return rep;
  }
  auto& ty = add(rep, "component_types");
  {
    Recorder rec{ty};
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y) {
        ++ty.checked;
        MorId p = phi(x, y);
        if (p >= d.morphism_count() || d.src(p) != B.q_obj(G.obj(x), G.obj(y)) || d.tgt(p) != G.obj(A.q_obj(x, y)))
          rec.fail(x, y);
      }
    if (!ty.ok) {
      finish(rep);
      return rep;
    }
  }
  auto& un = add(rep, "unit");
  {
    Recorder rec{un};
    for (ObjId x = 0; x < n; ++x) {
      ++un.checked;
      if (G.mor(A.eta[x]) != d.compose(phi(x, x), B.eta[G.obj(x)])) rec.fail(x);
    }
  }
  auto& mu = add(rep, "multiplication");
  {
    Recorder rec{mu};
    for (ObjId x1 = 0; x1 < n; ++x1)
      for (ObjId x2 = 0; x2 < n; ++x2)
        for (ObjId x3 = 0; x3 < n; ++x3)
          for (ObjId x4 = 0; x4 < n; ++x4) {
            ++mu.checked;
            ObjId q12 = A.q_obj(x1, x2), q34 = A.q_obj(x3, x4);
            MorId lhs = d.compose(G.mor(A.mu_at(x1, x2, x3, x4)),
                                  d.compose(phi(q12, q34), B.q_mor(phi(x1, x2), phi(x3, x4))));
            MorId rhs = d.compose(phi(x1, x4), B.mu_at(G.obj(x1), G.obj(x2), G.obj(x3), G.obj(x4)));
            if (lhs != rhs) rec.fail(x1, x2, x3, x4);
          }
  }
  auto& na = add(rep, "naturality");
  {
    Recorder rec{na};
    for (MorId f = 0; f < m; ++f)
      for (MorId g = 0; g < m; ++g) {
        ++na.checked;
        MorId lhs = d.compose(G.mor(A.q_mor(f, g)), phi(c.src(f), c.src(g)));
        MorId rhs = d.compose(phi(c.tgt(f), c.tgt(g)), B.q_mor(G.mor(f), G.mor(g)));
        if (lhs != rhs) rec.fail(f, g);
      }
  }
  auto& is = add(rep, "phi_iso");
  {
    Recorder rec{is};
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y) {
        ++is.checked;
        if (!d.is_iso(phi(x, y))) rec.fail(x, y);
      }
  }
  finish(rep);
  return rep;
}

AlgebraPretorsion algebra_to_pretorsion(const PseudoAlgebra& A) {
  auto rep = check_pseudo_algebra(A);
  if (!rep.ok) {
    const auto* f = rep.first_failure();
    std::vector<std::string> w{f->name};
    for (auto id : f->witness) w.push_back(std::to_string(id));
    throw Error(ErrorCode::IncoherentAlgebra, "pseudo-algebra fails " + f->name, w);
  }
  const CatPtr& cp = A.category;
  const FinCat& c = *cp;
  auto ext = find_extremal_objects(c);
  if (ext.initial.empty() || ext.terminal.empty())
    throw Error(ErrorCode::NotBiQuasiPointed, "the carrier has no initial or no terminal object");
  AlgebraPretorsion out;
  ObjId zero = out.zero = ext.initial.front();
  ObjId one = out.one = ext.terminal.front();
  std::size_t n = c.object_count();
  IdSet T0(n), F0(n);
  for (ObjId x = 0; x < n; ++x) {
    T0.insert(A.q_obj(x, zero));
    F0.insert(A.q_obj(one, x));
  }
  IdSet T = replete_closure(c, T0), F = replete_closure(c, F0);
  std::vector<std::pair<MorId, MorId>> choice(n);
  for (ObjId x = 0; x < n; ++x) {
    MorId from0 = c.hom(zero, x).front(), to1 = c.hom(x, one).front();
    MorId ell = c.compose(c.inverse(A.eta[x]), A.q_mor(c.identity(x), from0));
    MorId r = c.compose(A.q_mor(to1, c.identity(x)), A.eta[x]);
    choice[x] = {ell, r};
    out.raw_ses.push_back(SesRecord{c.src(ell), ell, x, r, c.tgt(r)});
  }
  out.verdict = make_presentation(cp, T, F, normalize_choice(c, T, F, choice));
  out.generic_ok = check_pretorsion(cp, T, F).ok;
  if (!out.verdict.ok) return out;
  const PretorsionPresentation& P = *out.verdict.presentation;
  out.rectangular = is_rectangular(P).ok;

  bool raw_exact = true;
  for (const auto& s : out.raw_ses) raw_exact = raw_exact && is_short_exact(P.ideal, s.ell, s.r).exact;
  if (raw_exact) {
    Gamma g = gamma_for_choice(P, out.raw_ses);
    bool same = true;
    for (ObjId x = 0; x < n && same; ++x) {
      ObjId expect = g.target.object_of(
          std::vector<ObjId>{g.torsion.to_sub[A.q_obj(x, zero)], g.free.to_sub[A.q_obj(one, x)]});
      same = g.functor.obj(x) == expect;
    }
    for (MorId f = 0; f < c.morphism_count() && same; ++f) {
      MorId expect = g.target.morphism_of(std::vector<MorId>{g.torsion.mor_to_sub[A.q_mor(f, c.identity(zero))],
                                                             g.free.mor_to_sub[A.q_mor(c.identity(one), f)]});
      same = g.functor.mor(f) == expect;
    }
    out.gamma_is_q_prime = same;
  }

  // Q(t,0) -> t through every essential preimage t ~ Q(X,0).
  out.independent_of_choice = true;
  ObjId q00 = A.q_obj(zero, zero);
  MorId bang = c.hom(zero, q00).front();
  for (ObjId t : T.members()) {
    MorId seen = kNone;
    for (ObjId x = 0; x < n; ++x) {
      ObjId qx0 = A.q_obj(x, zero);
      for (MorId j : c.hom(t, qx0)) {
        if (!c.is_iso(j)) continue;
        MorId psi = c.compose(c.inverse(j), c.compose(A.mu_at(x, zero, zero, zero), A.q_mor(j, bang)));
        if (!c.is_iso(psi) || (seen != kNone && psi != seen)) out.independent_of_choice = false;
        seen = psi;
      }
    }
  }
  return out;
}

RoundTrip roundtrip_check(const PseudoAlgebra& A) {
  RoundTrip rt;
  rt.algebra = check_pseudo_algebra(A);
  if (!rt.algebra.ok) return rt;
  auto ap = algebra_to_pretorsion(A);
  if (!ap.verdict.ok || !ap.rectangular || !ap.gamma_is_q_prime) return rt;
  const PretorsionPresentation& P = *ap.verdict.presentation;
  const CatPtr& cp = A.category;
  const FinCat& c = *cp;
  std::size_t n = c.object_count();
  Gamma g = gamma_for_choice(P, ap.raw_ses);
  const ProductCategory& tf = g.target;

  Functor inv{tf.category, cp, {}, {}};
  for (ObjId p = 0; p < tf.category->object_count(); ++p) {
    ObjId a = g.torsion.inclusion.obj(tf.object_component(p, 0));
    ObjId b = g.free.inclusion.obj(tf.object_component(p, 1));
    inv.objects.push_back(A.q_obj(a, b));
  }
  for (MorId p = 0; p < tf.category->morphism_count(); ++p) {
    MorId a = g.torsion.inclusion.mor(tf.morphism_component(p, 0));
    MorId b = g.free.inclusion.mor(tf.morphism_component(p, 1));
    inv.morphisms.push_back(A.q_mor(a, b));
  }
  NatTrans unit{identity_functor(cp), compose(inv, g.functor), {}};
  for (ObjId x = 0; x < n; ++x) {
    MorId gamma_x = c.compose(c.inverse(A.eta[x]), A.mu_at(x, ap.zero, ap.one, x));
    unit.components.push_back(c.inverse(gamma_x));
  }
  auto e = complete_from_unit(g.functor, inv, unit);
  rt.rebuilt = algebra_from_equivalence(tf, e);
  rt.rebuilt_report = check_pseudo_algebra(*rt.rebuilt);

  PseudoMorphism phi{identity_functor(cp), {}};
  PseudoMorphism phi_inv{identity_functor(cp), {}};
  rt.phi_iso = true;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      MorId p = A.mu_at(x, ap.zero, ap.one, y);
      phi.phi.push_back(p);
      rt.phi_iso = rt.phi_iso && c.is_iso(p);
      phi_inv.phi.push_back(c.is_iso(p) ? c.inverse(p) : p);
    }
  rt.phi_report = check_pseudo_morphism(A, *rt.rebuilt, phi);
  rt.phi_inverse_report = check_pseudo_morphism(*rt.rebuilt, A, phi_inv);
  if (rt.rebuilt_report.ok) {
    auto again = algebra_to_pretorsion(*rt.rebuilt);
    rt.torsion_equal = again.verdict.ok && again.verdict.presentation->torsion == P.torsion;
    rt.free_equal = again.verdict.ok && again.verdict.presentation->free == P.free;
  }
  rt.ok = rt.torsion_equal && rt.free_equal && rt.rebuilt_report.ok && rt.phi_iso && rt.phi_report.ok && rt.phi_inverse_report.ok;
  return rt;
}

RoundTrip roundtrip_check(const PretorsionPresentation& P) {
  auto A = build_pseudo_algebra(P);
  RoundTrip rt = roundtrip_check(A);
  if (!rt.algebra.ok) return rt;
  auto ap = algebra_to_pretorsion(A);
  rt.torsion_equal = ap.verdict.ok && ap.verdict.presentation->torsion == P.torsion;
  rt.free_equal = ap.verdict.ok && ap.verdict.presentation->free == P.free;
  rt.ok = rt.ok && rt.torsion_equal && rt.free_equal;
  return rt;
}

FunctorPseudoMorphism pseudo_morphism_from_functor(const PretorsionPresentation& P, const PretorsionPresentation& Q,
                                                   const Functor& G) {
  auto mv = check_pretorsion_morphism(P, Q, G);
  if (!mv.ok)
    throw Error(ErrorCode::InvalidArgument, std::string("not a morphism of theories: ") + to_string(mv.failure));
  auto rp = is_rectangular(P);
  auto rq = is_rectangular(Q);
  if (!rp.ok || !rq.ok) throw Error(ErrorCode::NotRectangular, "both theories must be rectangular");
  const AdjointEquivalence& ep = *rp.equivalence.data;
  const AdjointEquivalence& eq = *rq.equivalence.data;
  const Gamma& gp = rp.gamma;
  const Gamma& gq = rq.gamma;
  const FinCat& c = *P.category;
  const FinCat& d = *Q.category;

  FunctorPseudoMorphism out;
  out.source = algebra_from_equivalence(gp.target, ep);
  out.target = algebra_from_equivalence(gq.target, eq);
  out.morphism.functor = G;
  auto lam = lambda_for_morphism(P, Q, G);
  auto dprime = [&](MorId a, MorId b) {
    return eq.inverse.mor(gq.target.morphism_of(std::vector<MorId>{gq.torsion.mor_to_sub[a], gq.free.mor_to_sub[b]}));
  };

  std::size_t n = c.object_count();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      ObjId ab = gp.target.object_of(std::vector<ObjId>{gp.target.object_component(gp.functor.obj(x), 0),
                                                        gp.target.object_component(gp.functor.obj(y), 1)});
      ObjId w = ep.inverse.obj(ab);
      MorId einv = gp.target.category->inverse(ep.counit.components[ab]);
      MorId e1 = gp.torsion.inclusion.mor(gp.target.morphism_component(einv, 0));
      MorId e2 = gp.free.inclusion.mor(gp.target.morphism_component(einv, 1));
      MorId kappa = d.compose(
          d.inverse(eq.unit.components[G.obj(w)]),
          d.compose(dprime(d.inverse(lam.torsion[w]), d.inverse(lam.free[w])), dprime(G.mor(e1), G.mor(e2))));
      out.morphism.phi.push_back(d.compose(kappa, dprime(lam.torsion[x], lam.free[y])));
    }
  out.report = check_pseudo_morphism(out.source, out.target, out.morphism);
  out.phi_identity = std::all_of(out.morphism.phi.begin(), out.morphism.phi.end(),
                                 [&](MorId f) { return d.is_identity(f); });
  return out;
}

}  // namespace rectors
