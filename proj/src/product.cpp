#include "rectors/fincat.hpp"

#include <map>
#include <tuple>

namespace rectors {

namespace {

std::vector<std::size_t> object_radix_of(const std::vector<CatPtr>& fs) {
  std::vector<std::size_t> r;
  for (const auto& f : fs) r.push_back(f->object_count());
  return r;
}

std::vector<std::size_t> morphism_radix_of(const std::vector<CatPtr>& fs) {
  std::vector<std::size_t> r;
  for (const auto& f : fs) r.push_back(f->morphism_count());
  return r;
}

std::uint32_t encode(const std::vector<std::size_t>& radix, std::span<const std::uint32_t> xs) {
  if (xs.size() != radix.size()) throw Error(ErrorCode::FactorMismatch, "tuple length does not match factor count");
  std::size_t v = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) v = v * radix[i] + xs[i];
  return static_cast<std::uint32_t>(v);
}

std::uint32_t component(const std::vector<std::size_t>& radix, std::uint32_t v, std::size_t i) {
  std::size_t x = v;
  for (std::size_t j = radix.size(); j-- > i + 1;) x /= radix[j];
  return static_cast<std::uint32_t>(x % radix[i]);
}

std::string tuple_name(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + ")";
}

}  // namespace

ObjId ProductCategory::object_of(std::span<const ObjId> xs) const { return encode(object_radix, xs); }
MorId ProductCategory::morphism_of(std::span<const MorId> fs) const { return encode(morphism_radix, fs); }
ObjId ProductCategory::object_component(ObjId x, std::size_t i) const { return component(object_radix, x, i); }
MorId ProductCategory::morphism_component(MorId f, std::size_t i) const { return component(morphism_radix, f, i); }

std::vector<ObjId> ProductCategory::object_components(ObjId x) const {
  const auto& r = object_radix;
  std::vector<ObjId> out(r.size());
  for (std::size_t j = r.size(); j-- > 0;) {
    out[j] = x % r[j];
    x /= r[j];
  }
  return out;
}

std::vector<MorId> ProductCategory::morphism_components(MorId f) const {
  const auto& r = morphism_radix;
  std::vector<MorId> out(r.size());
  for (std::size_t j = r.size(); j-- > 0;) {
    out[j] = f % r[j];
    f /= r[j];
  }
  return out;
}

ProductCategory product_category(const std::vector<CatPtr>& factors, const Limits& limits) {
  if (factors.empty()) throw Error(ErrorCode::EmptyFactorList, "product of an empty factor list");
  std::size_t nobj = 1, nmor = 1;
  std::string name;
  for (const auto& f : factors) {
    nobj *= f->object_count();
    nmor *= f->morphism_count();
    if (nobj > limits.max_objects)
      throw Error(ErrorCode::SizeLimitExceeded, "product exceeds the object limit of " + std::to_string(limits.max_objects));
    if (nmor > limits.max_morphisms)
      throw Error(ErrorCode::SizeLimitExceeded,
                  "product exceeds the morphism limit of " + std::to_string(limits.max_morphisms));
    if (!name.empty()) name += "*";
    name += f->name().empty() ? "C" : f->name();
  }

  ProductCategory p;
  p.factors = factors;
  p.object_radix = object_radix_of(factors);
  p.morphism_radix = morphism_radix_of(factors);
  const auto& orad = p.object_radix;
  const auto& mrad = p.morphism_radix;
  std::size_t k = factors.size();

  FinCat::Builder b(name);
  std::vector<std::uint32_t> idx(k);
  std::vector<std::string> parts(k);
  for (std::size_t v = 0; v < nobj; ++v) {
    for (std::size_t i = 0; i < k; ++i) parts[i] = factors[i]->object_name(component(orad, v, i));
    b.add_object(tuple_name(parts));
  }
  for (std::size_t v = 0; v < nmor; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      idx[i] = component(mrad, v, i);
      parts[i] = factors[i]->morphism_name(idx[i]);
    }
    std::vector<ObjId> s(k), t(k);
    for (std::size_t i = 0; i < k; ++i) {
      s[i] = factors[i]->src(idx[i]);
      t[i] = factors[i]->tgt(idx[i]);
    }
    b.add_morphism(tuple_name(parts), encode(orad, s), encode(orad, t));
  }
  for (std::size_t v = 0; v < nobj; ++v) {
    for (std::size_t i = 0; i < k; ++i) idx[i] = factors[i]->identity(component(orad, v, i));
    b.set_identity(static_cast<ObjId>(v), encode(mrad, idx));
  }
  std::vector<std::uint32_t> scratch(k);
  auto cat = std::make_shared<FinCat>(b.build([&](MorId g, MorId f) {
    for (std::size_t i = 0; i < k; ++i)
      scratch[i] = factors[i]->compose(component(mrad, g, i), component(mrad, f, i));
    return encode(mrad, scratch);
  }));
  p.category = cat;
  for (std::size_t i = 0; i < k; ++i) {
    Functor pr{cat, factors[i], {}, {}};
    for (std::size_t v = 0; v < nobj; ++v) pr.objects.push_back(component(orad, static_cast<std::uint32_t>(v), i));
    for (std::size_t v = 0; v < nmor; ++v) pr.morphisms.push_back(component(mrad, static_cast<std::uint32_t>(v), i));
    p.projections.push_back(std::move(pr));
  }
  return p;
}

Functor product_functor(const std::vector<Functor>& parts, const ProductCategory& src,
                        const ProductCategory& tgt) {
  std::size_t k = parts.size();
  if (src.factors.size() != k || tgt.factors.size() != k)
    throw Error(ErrorCode::FactorMismatch, "componentwise functor: factor count mismatch");
  for (std::size_t i = 0; i < k; ++i)
    if (parts[i].source != src.factors[i] || parts[i].target != tgt.factors[i])
      throw Error(ErrorCode::FactorMismatch, "componentwise functor: factor " + std::to_string(i) + " mismatch");
  Functor F{src.category, tgt.category, {}, {}};
  std::vector<std::uint32_t> buf(k);
  for (ObjId x = 0; x < src.category->object_count(); ++x) {
    auto xs = src.object_components(x);
    for (std::size_t i = 0; i < k; ++i) buf[i] = parts[i].obj(xs[i]);
    F.objects.push_back(tgt.object_of(buf));
  }
  for (MorId f = 0; f < src.category->morphism_count(); ++f) {
    auto fs = src.morphism_components(f);
    for (std::size_t i = 0; i < k; ++i) buf[i] = parts[i].mor(fs[i]);
    F.morphisms.push_back(tgt.morphism_of(buf));
  }
  return F;
}

Subcategory full_subcategory(const CatPtr& c, const IdSet& objects, const std::string& name) {
  Subcategory s;
  s.to_sub.assign(c->object_count(), kNone);
  s.mor_to_sub.assign(c->morphism_count(), kNone);
  FinCat::Builder b(name);
  std::vector<ObjId> back_obj;
  std::vector<MorId> back_mor;
  for (ObjId x = 0; x < c->object_count(); ++x)
    if (objects.contains(x)) {
      s.to_sub[x] = b.add_object(c->object_name(x));
      back_obj.push_back(x);
    }
  for (MorId f = 0; f < c->morphism_count(); ++f)
    if (objects.contains(c->src(f)) && objects.contains(c->tgt(f))) {
      s.mor_to_sub[f] = b.add_morphism(c->morphism_name(f), s.to_sub[c->src(f)], s.to_sub[c->tgt(f)]);
      back_mor.push_back(f);
    }
  for (ObjId x : back_obj) b.set_identity(s.to_sub[x], s.mor_to_sub[c->identity(x)]);
  s.category = std::make_shared<FinCat>(
      b.build([&](MorId g, MorId f) { return s.mor_to_sub[c->compose(back_mor[g], back_mor[f])]; }));
  s.inclusion = Functor{s.category, c, back_obj, back_mor};
  return s;
}

ArrowCategory arrow_category(const CatPtr& c, const std::vector<MorId>& E, const Limits& limits) {
  if (E.size() > limits.max_objects)
    throw Error(ErrorCode::SizeLimitExceeded, "arrow category exceeds the object limit");
  ArrowCategory a;
  a.base = c;
  a.arrows = E;
  FinCat::Builder b(c->name() + "^E");
  for (MorId e : E) b.add_object(c->morphism_name(e));
  std::vector<ObjId> msrc, mtgt;
  std::map<std::tuple<ObjId, ObjId, MorId, MorId>, MorId> index;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j) {
      MorId e = E[i], e2 = E[j];
      for (MorId x : c->hom(c->src(e), c->src(e2)))
        for (MorId y : c->hom(c->tgt(e), c->tgt(e2)))
          if (c->compose(y, e) == c->compose(e2, x)) {
            if (a.squares.size() >= limits.max_morphisms)
              throw Error(ErrorCode::SizeLimitExceeded, "arrow category exceeds the morphism limit");
            MorId m = b.add_morphism("[" + c->morphism_name(x) + "," + c->morphism_name(y) + "]:" +
                                         c->morphism_name(e) + ">" + c->morphism_name(e2),
                                     static_cast<ObjId>(i), static_cast<ObjId>(j));
            a.squares.emplace_back(x, y);
            msrc.push_back(static_cast<ObjId>(i));
            mtgt.push_back(static_cast<ObjId>(j));
            index.emplace(std::make_tuple(static_cast<ObjId>(i), static_cast<ObjId>(j), x, y), m);
            if (i == j && c->is_identity(x) && c->is_identity(y)) b.set_identity(static_cast<ObjId>(i), m);
          }
    }
  a.category = std::make_shared<FinCat>(b.build([&](MorId g, MorId f) {
    auto [gx, gy] = a.squares[g];
    auto [fx, fy] = a.squares[f];
    auto it = index.find({msrc[f], mtgt[g], c->compose(gx, fx), c->compose(gy, fy)});
    return it == index.end() ? kNone : it->second;
  }));
  return a;
}

}  // namespace rectors
