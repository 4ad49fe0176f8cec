#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "rectors/fincat.hpp"
#include "rectors/text_format.hpp"

namespace support {

using namespace rectors;

inline CatPtr load(const std::string& file, const Limits& limits = {}) {
  return std::make_shared<FinCat>(load_fincat(std::string(RECTORS_DATA_DIR) + "/" + file, limits));
}

inline CatPtr pt() { return load("pt.fincat"); }
inline CatPtr two() { return load("poset2.fincat"); }
inline CatPtr p2() { return load("p2.fincat"); }
inline CatPtr disc2() { return load("discrete2.fincat"); }
inline CatPtr iso2() { return load("codiscrete2.fincat"); }

inline ProductCategory prod(const CatPtr& a, const CatPtr& b) { return product_category({a, b}); }

inline ObjId obj(const FinCat& c, const std::string& name) { return c.find_object(name).value(); }
inline MorId mor(const FinCat& c, const std::string& name) { return c.find_morphism(name).value(); }

inline IdSet objects(const FinCat& c, std::initializer_list<const char*> names) {
  IdSet s(c.object_count());
  for (auto n : names) s.insert(obj(c, n));
  return s;
}

inline Functor swap_functor(const ProductCategory& sq) {
  const FinCat& c = *sq.category;
  Functor s{sq.category, sq.category, {}, {}};
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto xs = sq.object_components(x);
    std::swap(xs[0], xs[1]);
    s.objects.push_back(sq.object_of(xs));
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    auto fs = sq.morphism_components(f);
    std::swap(fs[0], fs[1]);
    s.morphisms.push_back(sq.morphism_of(fs));
  }
  return s;
}

inline std::vector<IdSet> all_subsets(std::size_t n) {
  std::vector<IdSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    IdSet s(n);
    for (std::uint32_t i = 0; i < n; ++i)
      if (m >> i & 1) s.insert(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace support
