#pragma once

// Brute-force reference implementations used to cross-check the library.
// Deliberately naive: quantify over every candidate instead of reusing
// any of the library's shortcuts.

#include <vector>

#include "rectors/fincat.hpp"

namespace oracle {

using namespace rectors;

inline std::vector<MorId> all_hom(const FinCat& c, ObjId a, ObjId b) {
  std::vector<MorId> out;
  for (MorId f = 0; f < c.morphism_count(); ++f)
    if (c.src(f) == a && c.tgt(f) == b) out.push_back(f);
  return out;
}

inline bool mono(const FinCat& c, MorId f) {
  for (MorId g = 0; g < c.morphism_count(); ++g)
    for (MorId h = 0; h < c.morphism_count(); ++h)
      if (g != h && c.tgt(g) == c.src(f) && c.tgt(h) == c.src(f) && c.src(g) == c.src(h) &&
          c.compose(f, g) == c.compose(f, h))
        return false;
  return true;
}

inline bool epi(const FinCat& c, MorId f) {
  for (MorId g = 0; g < c.morphism_count(); ++g)
    for (MorId h = 0; h < c.morphism_count(); ++h)
      if (g != h && c.src(g) == c.tgt(f) && c.src(h) == c.tgt(f) && c.tgt(g) == c.tgt(h) &&
          c.compose(g, f) == c.compose(h, f))
        return false;
  return true;
}

inline bool iso(const FinCat& c, MorId f) {
  for (MorId g = 0; g < c.morphism_count(); ++g)
    if (c.src(g) == c.tgt(f) && c.tgt(g) == c.src(f) && c.compose(g, f) == c.identity(c.src(f)) &&
        c.compose(f, g) == c.identity(c.tgt(f)))
      return true;
  return false;
}

inline bool isomorphic(const FinCat& c, ObjId a, ObjId b) {
  for (MorId f = 0; f < c.morphism_count(); ++f)
    if (c.src(f) == a && c.tgt(f) == b && iso(c, f)) return true;
  return false;
}

inline bool initial(const FinCat& c, ObjId x) {
  for (ObjId y = 0; y < c.object_count(); ++y)
    if (all_hom(c, x, y).size() != 1) return false;
  return true;
}

inline bool terminal(const FinCat& c, ObjId x) {
  for (ObjId y = 0; y < c.object_count(); ++y)
    if (all_hom(c, y, x).size() != 1) return false;
  return true;
}

// All violating (h, g, f) triples of the associativity law.
inline std::vector<std::vector<MorId>> associativity_failures(const FinCat& c) {
  std::vector<std::vector<MorId>> out;
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g = 0; g < c.morphism_count(); ++g)
      for (MorId h = 0; h < c.morphism_count(); ++h)
        if (c.src(g) == c.tgt(f) && c.src(h) == c.tgt(g) &&
            c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
          out.push_back({h, g, f});
  return out;
}

inline bool null(const FinCat& c, const IdSet& Z, MorId f) {
  for (MorId p = 0; p < c.morphism_count(); ++p)
    for (MorId q = 0; q < c.morphism_count(); ++q)
      if (c.src(p) == c.src(f) && c.tgt(q) == c.tgt(f) && c.tgt(p) == c.src(q) && Z.contains(c.tgt(p)) &&
          c.compose(q, p) == f)
        return true;
  return false;
}

inline bool kernel(const FinCat& c, const IdSet& Z, MorId ell, MorId r) {
  if (!null(c, Z, c.compose(r, ell))) return false;
  for (MorId u = 0; u < c.morphism_count(); ++u) {
    if (c.tgt(u) != c.tgt(ell) || !null(c, Z, c.compose(r, u))) continue;
    int n = 0;
    for (MorId w = 0; w < c.morphism_count(); ++w)
      n += c.src(w) == c.src(u) && c.tgt(w) == c.src(ell) && c.compose(ell, w) == u;
    if (n != 1) return false;
  }
  return true;
}

inline bool cokernel(const FinCat& c, const IdSet& Z, MorId ell, MorId r) {
  if (!null(c, Z, c.compose(r, ell))) return false;
  for (MorId v = 0; v < c.morphism_count(); ++v) {
    if (c.src(v) != c.src(r) || !null(c, Z, c.compose(v, ell))) continue;
    int n = 0;
    for (MorId w = 0; w < c.morphism_count(); ++w)
      n += c.src(w) == c.tgt(r) && c.tgt(w) == c.tgt(v) && c.compose(w, r) == v;
    if (n != 1) return false;
  }
  return true;
}

inline bool ses(const FinCat& c, const IdSet& Z, MorId ell, MorId r) {
  return c.tgt(ell) == c.src(r) && kernel(c, Z, ell, r) && cokernel(c, Z, ell, r);
}

inline IdSet closure(const FinCat& c, const IdSet& s) {
  IdSet out(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = 0; y < c.object_count(); ++y)
      if (s.contains(y) && isomorphic(c, y, x)) out.insert(x);
  return out;
}

inline bool pretorsion(const FinCat& c, const IdSet& T0, const IdSet& F0) {
  if (c.object_count() == 0) return false;
  IdSet T = closure(c, T0), F = closure(c, F0), Z = T.intersect(F);
  for (MorId m = 0; m < c.morphism_count(); ++m)
    if (T.contains(c.src(m)) && F.contains(c.tgt(m)) && !null(c, Z, m)) return false;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    bool found = false;
    for (MorId ell = 0; ell < c.morphism_count() && !found; ++ell)
      for (MorId r = 0; r < c.morphism_count() && !found; ++r)
        found = c.tgt(ell) == x && c.src(r) == x && T.contains(c.src(ell)) && F.contains(c.tgt(r)) &&
                ses(c, Z, ell, r);
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
