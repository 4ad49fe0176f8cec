#include "doctest.h"
#include "oracles.hpp"
#include "rectors/exactness.hpp"
#include "support.hpp"

using namespace support;

namespace {

struct Case {
  CatPtr cat;
  IdSet Z;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  auto p = p2();
  out.push_back({p, objects(*p, {"S1"})});
  auto t = two();
  auto sq = prod(t, t);
  out.push_back({sq.category, objects(*sq.category, {"(1,0)"})});
  auto pp = prod(p2(), p2());
  out.push_back({pp.category, objects(*pp.category, {"(S1,S1)"})});
  out.push_back({pp.category, objects(*pp.category, {"(S1,S1)", "(S2,S1)"})});
  out.push_back({t, IdSet(2)});
  return out;
}

}  // namespace

TEST_CASE("null ideal matches exhaustive factorization search") {
  for (const auto& [c, Z] : cases()) {
    NullIdeal N(c, Z);
    CHECK_FALSE(closure_violation(N));
    for (MorId f = 0; f < c->morphism_count(); ++f) {
      CHECK(N.contains(f) == oracle::null(*c, Z, f));
      if (N.contains(f)) {
        auto w = *N.witness(f);
        CHECK(Z.contains(w.via));
        CHECK(c->compose(w.second, w.first) == f);
      }
    }
  }
  auto p = p2();
  NullIdeal N(p, objects(*p, {"S1"}));
  CHECK(N.contains(mor(*p, "const")));
  CHECK_FALSE(N.contains(p->identity(obj(*p, "S2"))));
}

TEST_CASE("kernels, cokernels and exact pairs agree with the definition") {
  for (const auto& [c, Z] : cases()) {
    NullIdeal N(c, Z);
    for (MorId ell = 0; ell < c->morphism_count(); ++ell)
      for (MorId r = 0; r < c->morphism_count(); ++r) {
        if (c->tgt(ell) != c->src(r)) {
          CHECK_THROWS_AS(is_short_exact(N, ell, r), Error);
          continue;
        }
        auto v = is_short_exact(N, ell, r);
        CHECK(v.kernel.ok() == oracle::kernel(*c, Z, ell, r));
        CHECK(v.cokernel.ok() == oracle::cokernel(*c, Z, ell, r));
        CHECK(v.exact == oracle::ses(*c, Z, ell, r));
        if (!v.kernel.ok() && v.kernel.failure != UniversalFailure::NotNull) {
          MorId u = v.kernel.witness;
          CHECK(oracle::null(*c, Z, c->compose(r, u)));
          int n = 0;
          for (MorId w = 0; w < c->morphism_count(); ++w)
            n += c->src(w) == c->src(u) && c->tgt(w) == c->src(ell) && c->compose(ell, w) == u;
          CHECK(n != 1);
        }
      }
    for (MorId r = 0; r < c->morphism_count(); ++r) {
      auto ks = kernel_rel(N, r);
      std::size_t expected = 0;
      for (MorId ell = 0; ell < c->morphism_count(); ++ell)
        expected += c->tgt(ell) == c->src(r) && oracle::kernel(*c, Z, ell, r);
      CHECK(ks.size() == expected);
      for (std::size_t i = 1; i < ks.size(); ++i) CHECK(ks[i - 1].inclusion < ks[i].inclusion);
      auto cs = cokernel_rel(N, r);
      for (const auto& k : cs) CHECK(oracle::cokernel(*c, Z, r, k.inclusion));
    }
  }
}

TEST_CASE("pointed sets: kernel of the collapse is the identity") {
  auto p = p2();
  NullIdeal N(p, objects(*p, {"S1"}));
  auto ks = kernel_rel(N, mor(*p, "coll"));
  REQUIRE(ks.size() == 1);
  CHECK(ks[0].inclusion == p->identity(obj(*p, "S2")));
  auto ki = kernel_rel(N, p->identity(obj(*p, "S2")));
  REQUIRE(ki.size() == 1);
  CHECK(ki[0].inclusion == mor(*p, "incl"));
  CHECK(is_short_exact(N, p->identity(obj(*p, "S2")), mor(*p, "coll")).exact);
}

TEST_CASE("a composable pair failing the kernel property reports a witness") {
  auto t = two();
  auto sq = prod(t, t);
  const FinCat& c = *sq.category;
  IdSet Z = objects(c, {"(1,0)"});
  NullIdeal N(sq.category, Z);
  // (0,0) -> (0,1) -> (0,1): the composite avoids (1,0).
  MorId ell = mor(c, "(id_0,u)"), r = c.identity(obj(c, "(0,1)"));
  auto v = is_short_exact(N, ell, r);
  CHECK_FALSE(v.exact);
  CHECK(v.kernel.failure == UniversalFailure::NotNull);
  // (0,0) -> (1,1) is null but (0,0) -> (1,0) does not factor through it.
  MorId ell2 = c.identity(obj(c, "(0,0)")), r2 = mor(c, "(u,u)");
  auto w = is_short_exact(N, ell2, r2);
  CHECK(w.kernel.ok());
  CHECK_FALSE(w.cokernel.ok());
  CHECK(w.cokernel.failure == UniversalFailure::NoFactorization);
  CHECK(w.cokernel.witness == mor(c, "(u,id_0)"));
  CHECK(is_short_exact(N, ell2, mor(c, "(u,id_0)")).exact);
}

TEST_CASE("componentwise exactness in products") {
  auto t = two();
  auto sq = prod(t, t);
  std::vector<NullIdeal> parts{NullIdeal(t, IdSet::of(2, {1})), NullIdeal(t, IdSet::of(2, {0}))};
  const FinCat& c = *sq.category;
  for (MorId ell = 0; ell < c.morphism_count(); ++ell)
    for (MorId r = 0; r < c.morphism_count(); ++r)
      if (c.tgt(ell) == c.src(r)) CHECK(componentwise_ses_check(sq, parts, ell, r).consistent);
  CHECK_THROWS_AS(componentwise_ses_check(sq, {parts[0]}, 0, 0), Error);
  CHECK_THROWS_AS(componentwise_ses_check(sq, {parts[0], NullIdeal(p2(), IdSet(2))}, 0, 0), Error);
}

TEST_CASE("retracts") {
  auto p = p2();
  CHECK(is_retract(*p, obj(*p, "S1"), obj(*p, "S2")));
  CHECK_FALSE(is_retract(*p, obj(*p, "S2"), obj(*p, "S1")));
}
