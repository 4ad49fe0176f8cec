#include "doctest.h"
#include "oracles.hpp"
#include "rectors/epiclasses.hpp"
#include "support.hpp"

using namespace support;

namespace {

CatPtr p3() { return load("p3.fincat"); }

// Pointed-set maps named f<a><b>_<images of 1..a-1>, z1<b> from S1.
struct PointedMap {
  int a, b;
  std::vector<int> img;  // img[0] = 0
};

PointedMap decode(const FinCat& c, MorId f) {
  PointedMap m{int(c.object_name(c.src(f))[1] - '0'), int(c.object_name(c.tgt(f))[1] - '0'), {0}};
  std::string n = c.morphism_name(f);
  if (n.rfind("id_", 0) == 0)
    for (int i = 1; i < m.a; ++i) m.img.push_back(i);
  else if (n[0] == 'f')
    for (char ch : n.substr(4)) m.img.push_back(ch - '0');
  return m;
}

bool surjective(const PointedMap& m) {
  std::vector<bool> hit(m.b, false);
  for (int y : m.img) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

// Quotient by the kernel: only the base fibre may have more than one point.
bool normal(const PointedMap& m) {
  if (!surjective(m)) return false;
  std::vector<int> fibre(m.b, 0);
  for (int y : m.img) ++fibre[y];
  for (int y = 1; y < m.b; ++y)
    if (fibre[y] != 1) return false;
  return true;
}

std::vector<std::string> names(const FinCat& c, const std::vector<MorId>& fs) {
  std::vector<std::string> out;
  for (MorId f : fs) out.push_back(c.morphism_name(f));
  return out;
}

void shape_agrees_everywhere(const EpiClassPresentation& P) {
  const FinCat& A = *P.arrows.category;
  IdSet Z = P.torsion.intersect(P.free);
  std::size_t candidates = 0;
  for (MorId ell = 0; ell < A.morphism_count(); ++ell)
    for (MorId r = 0; r < A.morphism_count(); ++r) {
      if (A.tgt(ell) != A.src(r) || !P.torsion.contains(A.src(ell)) || !P.free.contains(A.tgt(r))) continue;
      ++candidates;
      auto v = ses_shape_check(P, ell, r);
      INFO(A.morphism_name(ell) << " ; " << A.morphism_name(r));
      CHECK(v.candidate);
      CHECK(v.agree());
      CHECK(v.generic == oracle::ses(A, Z, ell, r));
    }
  CHECK(candidates > 0);
}

}  // namespace

TEST_CASE("P3 is the category of pointed sets up to three points") {
  auto c = p3();
  CHECK(c->object_count() == 3);
  CHECK(c->morphism_count() == 23);
  CHECK(oracle::associativity_failures(*c).empty());
  for (MorId f = 0; f < c->morphism_count(); ++f) {
    auto m = decode(*c, f);
    CHECK(oracle::epi(*c, f) == surjective(m));
    CHECK(is_split_epi(*c, f) == surjective(m));
    CHECK(is_regular_epi(*c, f) == surjective(m));
    CHECK(is_normal_epi(NullIdeal(c, IdSet::of(3, {obj(*c, "S1")})), f) == normal(m));
  }
  CHECK_FALSE(has_binary_products(*c));
  CHECK_FALSE(has_binary_products(*p2()));
  CHECK(has_binary_products(*pt()));
  auto coll = is_product_projection(*p2(), mor(*p2(), "coll"));
  CHECK(coll.ok);
  CHECK(p2()->object_name(coll.complement) == "S2");
  CHECK_FALSE(is_product_projection(*p2(), mor(*p2(), "incl")).ok);
}

TEST_CASE("every mode on P2 gives the same three-arrow class") {
  auto c = p2();
  std::vector<std::string> expect{"id_S1", "id_S2", "coll"};
  std::sort(expect.begin(), expect.end());
  for (auto E : {isos_and_zero_target_maps(*c), split_epimorphisms(*c), regular_epimorphisms(*c),
                 product_projections(*c)}) {
    auto got = names(*c, E);
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
  auto P = build_epiclass(c, isos_and_zero_target_maps(*c));
  CHECK(P.arrow_category_pointed);
  CHECK(P.torsion.size() == 2);
  CHECK(P.free.size() == 2);
  for (auto mode : {EpiMode::Minimal, EpiMode::Split, EpiMode::Regular, EpiMode::Projections}) {
    INFO(std::string(to_string(mode)));
    auto v = check_rectangular_class(P, mode);
    CHECK(v.torsion.direct);
    CHECK(v.torsion.generic);
    CHECK(v.torsion.agree);
    // S2 x S2 is missing, so every member is a projection but T x F has an
    // object the arrow category lacks.
    CHECK_FALSE(v.products_exist);
    CHECK(v.direct);
    CHECK_FALSE(v.generic);
    CHECK_FALSE(v.agree);
    CHECK(v.projections_are_normal_with_kernel);
    CHECK(v.mode_statement);
    CHECK(oracle::pretorsion(*P.arrows.category, P.torsion, P.free));
  }
  shape_agrees_everywhere(P);
}

TEST_CASE("split epimorphisms of P3 are not a torsion class") {
  auto c = p3();
  auto P = build_epiclass(c, split_epimorphisms(*c));
  CHECK(P.E.size() == 9);
  CHECK(P.arrow_category_pointed);
  auto t = check_torsion_class(P);
  CHECK_FALSE(t.direct);
  CHECK_FALSE(t.generic);
  CHECK(t.agree);
  REQUIRE(t.witness != kNone);
  CHECK(c->morphism_name(t.witness) == "f32_11");
  CHECK(t.generic == oracle::pretorsion(*P.arrows.category, P.torsion, P.free));
  auto v = check_rectangular_class(P, EpiMode::Split);
  CHECK_FALSE(v.all_normal);
  CHECK_FALSE(v.generic);
  CHECK(v.mode_statement);
  shape_agrees_everywhere(P);

  auto R = build_epiclass(c, regular_epimorphisms(*c));
  CHECK(R.E == P.E);
}

TEST_CASE("the minimal class of P3 is a torsion class") {
  auto c = p3();
  auto P = build_epiclass(c, isos_and_zero_target_maps(*c));
  CHECK(product_projections(*c) == P.E);
  auto t = check_torsion_class(P);
  CHECK(t.direct);
  CHECK(t.generic);
  CHECK(oracle::pretorsion(*P.arrows.category, P.torsion, P.free));
  auto v = check_rectangular_class(P, EpiMode::Projections);
  CHECK(v.direct);
  CHECK(v.torsion.agree);
  CHECK(v.mode_statement);
  shape_agrees_everywhere(P);
}

TEST_CASE("invalid classes are rejected") {
  auto c = p2();
  CHECK_THROWS_AS(build_epiclass(two(), {}), Error);
  try {
    build_epiclass(c, {mor(*c, "coll")});
    FAIL("expected MissingIso");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingIso);
  }
  try {
    build_epiclass(c, {mor(*c, "id_S1"), mor(*c, "id_S2")});
    FAIL("expected MissingZeroTargetMap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingZeroTargetMap);
  }
  try {
    build_epiclass(c, {mor(*c, "id_S1"), mor(*c, "id_S2"), mor(*c, "coll"), mor(*c, "incl")});
    FAIL("expected NonEpiInE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonEpiInE);
  }
  auto P = build_epiclass(pt(), isos_and_zero_target_maps(*pt()));
  CHECK(P.E.size() == 1);
  auto v = check_rectangular_class(P, EpiMode::Explicit);
  CHECK(v.torsion.generic);
  CHECK(v.generic);
  CHECK(v.direct);
}
