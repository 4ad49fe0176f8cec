#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "rectors/pointed_monad.hpp"
#include "support.hpp"

using namespace support;

namespace {

struct Instance {
  ProductCategory product;
  PretorsionPresentation theory;
};

Instance canonical(const CatPtr& C, const CatPtr& D) {
  auto a = canonical_product_theory(C, D);
  REQUIRE(a.failure == ProductTheory::Failure::None);
  REQUIRE(a.verdict->ok);
  return {*a.product, *a.verdict->presentation};
}

std::string strip(const std::string& s) { return s.substr(1, s.size() - 2); }

// "(a,b)" -> {"a","b"}, splitting at the top-level comma.
std::pair<std::string, std::string> split_pair(const std::string& name) {
  std::string in = strip(name);
  int depth = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == '(') ++depth;
    if (in[i] == ')') --depth;
    if (in[i] == ',' && depth == 0) return {in.substr(0, i), in.substr(i + 1)};
  }
  FAIL("not a pair: " << name);
  return {};
}

const CheckResult& check_named(const CoherenceReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("monad laws hold as exact functor equalities") {
  for (auto c : {pt(), two(), p2()}) {
    auto m = monad_instance(c);
    CHECK(m.unit_left);
    CHECK(m.unit_right);
    CHECK(m.associative);
    std::size_t mc = c->morphism_count();
    CHECK(m.associativity_morphisms == mc * mc * mc * mc * mc * mc * mc * mc);
    CHECK(m.associativity_objects == std::size_t(std::pow(c->object_count(), 8)));

    // Name-level oracle: eta x = (x,x), mu ((a,b),(c,d)) = (a,d).
    const FinCat& sq = *m.square.category;
    const FinCat& fo = *m.fourth.category;
    for (ObjId x = 0; x < c->object_count(); ++x)
      CHECK(sq.object_name(m.eta.obj(x)) == "(" + c->object_name(x) + "," + c->object_name(x) + ")");
    for (MorId f = 0; f < fo.morphism_count(); ++f) {
      auto [l, r] = split_pair(fo.morphism_name(f));
      auto [a, b] = split_pair(l);
      auto [cc, d] = split_pair(r);
      CHECK(sq.morphism_name(m.mu.mor(f)) == "(" + a + "," + d + ")");
    }
  }
  CHECK(monad_instance(p2()).pointed);
  CHECK_FALSE(monad_instance(two()).pointed);
  CHECK_THROWS_AS(monad_instance(disc2()), Error);
  try {
    monad_instance(load("nonmono_initial.fincat"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBiQuasiPointed);
  }
}

TEST_CASE("pseudo-algebras from rectangular theories are coherent") {
  auto t = two();
  auto p = p2();
  for (auto [C, D] : {std::pair{t, t}, std::pair{p, p}, std::pair{pt(), pt()}}) {
    auto [prod_, P] = canonical(C, D);
    auto A = build_pseudo_algebra(P);
    auto rep = check_pseudo_algebra(A);
    CHECK(rep.ok);
    for (const auto& ch : rep.checks) {
      INFO(ch.name);
      CHECK(ch.ok);
      CHECK(ch.checked > 0);
    }
  }
  auto [pp, P] = canonical(p, p);
  auto A = build_pseudo_algebra(P);
  const FinCat& c = *pp.category;
  ObjId zero = obj(c, "(S1,S1)");
  CHECK(c.isomorphic(A.q_obj(zero, zero), zero));
  // Q(X,Y) ~ (X1, Y2)
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = 0; y < c.object_count(); ++y) {
      std::vector<ObjId> expect{pp.object_component(x, 0), pp.object_component(y, 1)};
      CHECK(c.isomorphic(A.q_obj(x, y), pp.object_of(expect)));
    }
}

TEST_CASE("a broken unit component is reported by the unit axioms") {
  auto p = p2();
  auto [pp, P] = canonical(p, p);
  auto A = build_pseudo_algebra(P);
  const FinCat& c = *pp.category;
  ObjId x = obj(c, "(S2,S2)");
  MorId bad = kNone;
  for (MorId f : c.hom(x, A.q_obj(x, x)))
    if (!c.is_iso(f)) bad = f;
  REQUIRE(bad != kNone);
  A.eta[x] = bad;
  auto rep = check_pseudo_algebra(A);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.first_failure());
  std::string first = rep.first_failure()->name;
  CHECK((first == "unit_m_eta" || first == "unit_eta_m"));
  CHECK_FALSE(check_named(rep, "eta_iso").ok);
  CHECK(check_named(rep, "eta_iso").witness == std::vector<std::uint32_t>{x});
  CHECK_THROWS_AS(algebra_to_pretorsion(A), Error);
}

TEST_CASE("algebra to theory recovers the torsion and torsion-free parts") {
  auto t = two();
  auto p = p2();
  for (auto [C, D] : {std::pair{t, t}, std::pair{p, p}, std::pair{t, p}}) {
    auto [pp, P] = canonical(C, D);
    auto ap = algebra_to_pretorsion(build_pseudo_algebra(P));
    REQUIRE(ap.verdict.ok);
    CHECK(ap.verdict.presentation->torsion == P.torsion);
    CHECK(ap.verdict.presentation->free == P.free);
    CHECK(ap.generic_ok);
    CHECK(ap.rectangular);
    CHECK(ap.gamma_is_q_prime);
    CHECK(ap.independent_of_choice);
    CHECK(oracle::pretorsion(*pp.category, P.torsion, P.free));
  }
}

TEST_CASE("the free algebra gives the canonical theory on the square") {
  for (auto c : {two(), p2(), pt()}) {
    auto m = monad_instance(c);
    auto A = free_algebra(m);
    CHECK(check_pseudo_algebra(A).ok);
    auto ap = algebra_to_pretorsion(A);
    REQUIRE(ap.verdict.ok);
    auto [pp, P] = canonical(c, c);
    CHECK(pp.category->object_count() == m.square.category->object_count());
    // Same object naming and ordering, so the subsets can be compared directly.
    for (ObjId x = 0; x < pp.category->object_count(); ++x)
      REQUIRE(pp.category->object_name(x) == m.square.category->object_name(x));
    CHECK(ap.verdict.presentation->torsion == P.torsion);
    CHECK(ap.verdict.presentation->free == P.free);
  }
}

TEST_CASE("round trips in both directions") {
  auto t = two();
  auto p = p2();
  for (auto [C, D] : {std::pair{t, t}, std::pair{p, p}, std::pair{pt(), pt()}}) {
    auto [pp, P] = canonical(C, D);
    auto rt = roundtrip_check(P);
    CHECK(rt.ok);
    CHECK(rt.torsion_equal);
    CHECK(rt.free_equal);
    CHECK(rt.algebra.ok);
    CHECK(rt.rebuilt_report.ok);
    CHECK(rt.phi_iso);
    CHECK(rt.phi_report.ok);
    CHECK(rt.phi_inverse_report.ok);
  }
  auto A = free_algebra(monad_instance(t));
  CHECK(roundtrip_check(A).ok);
}

TEST_CASE("pseudo-morphisms from morphisms of theories") {
  auto p = p2();
  auto [pp, P] = canonical(p, p);
  auto id = pseudo_morphism_from_functor(P, P, identity_functor(pp.category));
  CHECK(id.report.ok);
  CHECK(id.phi_identity);

  // The flipped theory on P2 x P2; the swap is a morphism in both directions.
  const FinCat& c = *pp.category;
  auto flipped = check_pretorsion(pp.category, objects(c, {"(S1,S1)", "(S1,S2)"}), objects(c, {"(S1,S1)", "(S2,S1)"}));
  REQUIRE(flipped.ok);
  const auto& P2 = *flipped.presentation;
  auto sw = swap_functor(pp);
  auto g = pseudo_morphism_from_functor(P, P2, sw);
  auto h = pseudo_morphism_from_functor(P2, P, sw);
  CHECK(g.report.ok);
  CHECK(h.report.ok);

  // (h, psi) . (g, phi) = (h g, h(phi) . psi_g) and h g = id.
  REQUIRE(compose(sw, sw) == identity_functor(pp.category));
  std::size_t n = c.object_count();
  PseudoMorphism pasted{compose(sw, sw), {}};
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      MorId psi = h.morphism.phi[sw.obj(x) * n + sw.obj(y)];
      pasted.phi.push_back(c.compose(sw.mor(g.morphism.phi[x * n + y]), psi));
    }
  CHECK(check_pseudo_morphism(g.source, h.target, pasted).ok);
  CHECK(pasted.phi == id.morphism.phi);

  CHECK_THROWS_AS(pseudo_morphism_from_functor(P, P, sw), Error);
}
