#include "rectors/fincat.hpp"

#include <map>
#include <sstream>

namespace rectors {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::WrongHomSet: return "WrongHomSet";
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::IdentityLawViolation: return "IdentityLawViolation";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::EmptyFactorList: return "EmptyFactorList";
    case ErrorCode::FactorMismatch: return "FactorMismatch";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NotAnEquivalence: return "NotAnEquivalence";
    case ErrorCode::NotRectangular: return "NotRectangular";
    case ErrorCode::NotBiQuasiPointed: return "NotBiQuasiPointed";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::InternalNonUnique: return "InternalNonUnique";
    case ErrorCode::NonEpiInE: return "NonEpiInE";
    case ErrorCode::MissingIso: return "MissingIso";
    case ErrorCode::MissingZeroTargetMap: return "MissingZeroTargetMap";
    case ErrorCode::IncoherentAlgebra: return "IncoherentAlgebra";
    case ErrorCode::RoundTripMismatch: return "RoundTripMismatch";
    case ErrorCode::CoherenceFailure: return "CoherenceFailure";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::optional<ObjId> FinCat::find_object(std::string_view id) const {
  auto it = object_index_.find(std::string(id));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCat::find_morphism(std::string_view id) const {
  auto it = morphism_index_.find(std::string(id));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

const NamedSubset* FinCat::find_subset(std::string_view name) const {
  for (const auto& s : subsets_)
    if (s.name == name) return &s;
  return nullptr;
}

MorId FinCat::find_iso(ObjId a, ObjId b) const {
  for (MorId f : hom(a, b))
    if (inverse_[f] != kNone) return f;
  return kNone;
}

ObjId FinCat::Builder::add_object(std::string id) {
  ObjId x = static_cast<ObjId>(cat_.objects_.size());
  cat_.objects_.push_back(std::move(id));
  cat_.identity_.push_back(kNone);
  return x;
}

MorId FinCat::Builder::add_morphism(std::string id, ObjId src, ObjId tgt) {
  MorId f = static_cast<MorId>(cat_.src_.size());
  cat_.morphisms_.push_back(std::move(id));
  cat_.src_.push_back(src);
  cat_.tgt_.push_back(tgt);
  return f;
}

void FinCat::Builder::set_identity(ObjId x, MorId f) { cat_.identity_[x] = f; }

FinCat FinCat::Builder::build(const std::function<MorId(MorId, MorId)>& compose) {
  FinCat& c = cat_;
  std::size_t n = c.objects_.size();
  for (ObjId x = 0; x < n; ++x)
    if (c.identity_[x] == kNone) throw Error(ErrorCode::Internal, "builder: missing identity");
  c.hom_.assign(n * n, {});
  c.local_.assign(c.src_.size(), 0);
  for (MorId f = 0; f < c.src_.size(); ++f) {
    auto& h = c.hom_[static_cast<std::size_t>(c.src_[f]) * n + c.tgt_[f]];
    c.local_[f] = static_cast<std::uint32_t>(h.size());
    h.push_back(f);
  }
  c.comp_offset_.assign(n * n * n, 0);
  std::size_t total = 0;
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId cc = 0; cc < n; ++cc) {
        c.comp_offset_[(static_cast<std::size_t>(a) * n + b) * n + cc] = total;
        total += c.hom(a, b).size() * c.hom(b, cc).size();
      }
  c.comp_.assign(total, kNone);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      auto ab = c.hom(a, b);
      if (ab.empty()) continue;
      for (ObjId cc = 0; cc < n; ++cc) {
        auto bc = c.hom(b, cc);
        std::size_t off = c.comp_offset_[(static_cast<std::size_t>(a) * n + b) * n + cc];
        for (std::size_t gi = 0; gi < bc.size(); ++gi)
          for (std::size_t fi = 0; fi < ab.size(); ++fi) {
            MorId h = compose(bc[gi], ab[fi]);
            if (h == kNone || h >= c.src_.size() || c.src_[h] != a || c.tgt_[h] != cc)
              throw Error(ErrorCode::WrongHomSet,
                          "composite " + c.morphisms_[bc[gi]] + " . " + c.morphisms_[ab[fi]] +
                              " is missing or lands in the wrong hom-set",
                          {c.morphisms_[bc[gi]], c.morphisms_[ab[fi]]});
            c.comp_[off + gi * ab.size() + fi] = h;
          }
      }
    }
  c.inverse_.assign(c.src_.size(), kNone);
  for (MorId f = 0; f < c.src_.size(); ++f) {
    ObjId a = c.src_[f], b = c.tgt_[f];
    for (MorId g : c.hom(b, a))
      if (c.compose(g, f) == c.identity_[a] && c.compose(f, g) == c.identity_[b]) {
        c.inverse_[f] = g;
        break;
      }
  }
  for (ObjId x = 0; x < n; ++x) c.object_index_.emplace(c.objects_[x], x);
  for (MorId f = 0; f < c.src_.size(); ++f) c.morphism_index_.emplace(c.morphisms_[f], f);
  return std::move(cat_);
}

std::optional<MorId> identity_violation(const FinCat& c) {
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (c.compose(c.identity(c.tgt(f)), f) != f) return f;
    if (c.compose(f, c.identity(c.src(f))) != f) return f;
  }
  return std::nullopt;
}

std::optional<std::vector<MorId>> associativity_violation(const FinCat& c) {
  std::size_t n = c.object_count();
  std::vector<std::vector<MorId>> out(n);
  for (MorId f = 0; f < c.morphism_count(); ++f) out[c.src(f)].push_back(f);
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g : out[c.tgt(f)]) {
      MorId gf = c.compose(g, f);
      for (MorId h : out[c.tgt(g)])
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) return std::vector<MorId>{h, g, f};
    }
  return std::nullopt;
}

FinCat validate_category(const RawCategory& raw, const Limits& limits) {
  if (raw.objects.size() > limits.max_objects)
    throw Error(ErrorCode::SizeLimitExceeded,
                "category has " + std::to_string(raw.objects.size()) + " objects; limit is " +
                    std::to_string(limits.max_objects));

  std::unordered_map<std::string, ObjId> obj;
  std::unordered_map<std::string, MorId> mor;
  for (const auto& o : raw.objects) {
    if (o.empty()) throw Error(ErrorCode::Parse, "empty object identifier");
    if (!obj.emplace(o, static_cast<ObjId>(obj.size())).second)
      throw Error(ErrorCode::DuplicateId, "duplicate identifier " + o, {o});
  }

  FinCat::Builder b(raw.name);
  for (const auto& o : raw.objects) b.add_object(o);
  for (const auto& m : raw.morphisms) {
    if (obj.count(m.id) || mor.count(m.id))
      throw Error(ErrorCode::DuplicateId, "duplicate identifier " + m.id, {m.id});
    auto s = obj.find(m.src), t = obj.find(m.tgt);
    if (s == obj.end()) throw Error(ErrorCode::UnknownId, "unknown object " + m.src, {m.src});
    if (t == obj.end()) throw Error(ErrorCode::UnknownId, "unknown object " + m.tgt, {m.tgt});
    mor.emplace(m.id, b.add_morphism(m.id, s->second, t->second));
  }
  std::vector<ObjId> srcs, tgts;
  for (const auto& m : raw.morphisms) {
    srcs.push_back(obj[m.src]);
    tgts.push_back(obj[m.tgt]);
  }

  std::vector<MorId> ident(raw.objects.size(), kNone);
  for (const auto& [o, m] : raw.identities) {
    auto oi = obj.find(o);
    if (oi == obj.end()) throw Error(ErrorCode::UnknownId, "unknown object " + o, {o});
    auto mi = mor.find(m);
    if (mi == mor.end()) throw Error(ErrorCode::UnknownId, "unknown morphism " + m, {m});
    if (srcs[mi->second] != oi->second || tgts[mi->second] != oi->second)
      throw Error(ErrorCode::WrongHomSet, "identity " + m + " is not an endomorphism of " + o, {o, m});
    if (ident[oi->second] != kNone && ident[oi->second] != mi->second)
      throw Error(ErrorCode::DuplicateId, "two identities declared for " + o, {o});
    ident[oi->second] = mi->second;
  }
  for (ObjId x = 0; x < raw.objects.size(); ++x) {
    if (ident[x] != kNone) continue;
    std::string id = "id_" + raw.objects[x];
    auto it = mor.find(id);
    if (it != mor.end()) {
      if (srcs[it->second] != x || tgts[it->second] != x)
        throw Error(ErrorCode::DuplicateId, "implicit identity name " + id + " is taken", {id});
      ident[x] = it->second;
    } else {
      if (obj.count(id)) throw Error(ErrorCode::DuplicateId, "implicit identity name " + id + " is taken", {id});
      MorId f = b.add_morphism(id, x, x);
      mor.emplace(id, f);
      srcs.push_back(x);
      tgts.push_back(x);
      ident[x] = f;
    }
  }
  if (srcs.size() > limits.max_morphisms)
    throw Error(ErrorCode::SizeLimitExceeded,
                "category has " + std::to_string(srcs.size()) + " morphisms; limit is " +
                    std::to_string(limits.max_morphisms));
  for (ObjId x = 0; x < raw.objects.size(); ++x) b.set_identity(x, ident[x]);
  std::vector<bool> is_id(srcs.size(), false);
  for (MorId f : ident) is_id[f] = true;

  auto lookup = [&](const std::string& id) {
    auto it = mor.find(id);
    if (it == mor.end()) throw Error(ErrorCode::UnknownId, "unknown morphism " + id, {id});
    return it->second;
  };
  std::map<std::pair<MorId, MorId>, MorId> table;
  for (const auto& e : raw.composites) {
    MorId g = lookup(e.g), f = lookup(e.f), h = lookup(e.h);
    if (srcs[g] != tgts[f])
      throw Error(ErrorCode::WrongHomSet, e.g + " . " + e.f + " is not composable", {e.g, e.f});
    if (srcs[h] != srcs[f] || tgts[h] != tgts[g])
      throw Error(ErrorCode::WrongHomSet, e.g + " . " + e.f + " = " + e.h + " lands in the wrong hom-set",
                  {e.g, e.f, e.h});
    auto [it, fresh] = table.emplace(std::make_pair(g, f), h);
    if (!fresh && it->second != h)
      throw Error(ErrorCode::DuplicateId, "conflicting composites for " + e.g + " . " + e.f, {e.g, e.f});
  }
  std::vector<std::string> names(srcs.size());
  for (const auto& [id, f] : mor) names[f] = id;
  for (const auto& [gf, h] : table) {
    auto [g, f] = gf;
    if ((is_id[f] && h != g) || (is_id[g] && h != f))
      throw Error(ErrorCode::IdentityLawViolation,
                  "identity law fails: " + names[g] + " . " + names[f] + " = " + names[h],
                  {names[g], names[f], names[h]});
  }

  auto composite = [&](MorId g, MorId f) -> MorId {
    if (is_id[f]) return g;
    if (is_id[g]) return f;
    auto it = table.find({g, f});
    if (it == table.end())
      throw Error(ErrorCode::MissingComposite, "missing composite " + names[g] + " . " + names[f],
                  {names[g], names[f]});
    return it->second;
  };

  // Enumerate composable pairs in id order so the reported missing pair is deterministic.
  for (MorId f = 0; f < srcs.size(); ++f)
    for (MorId g = 0; g < srcs.size(); ++g)
      if (srcs[g] == tgts[f]) composite(g, f);

  FinCat c = b.build(composite);
  if (auto v = associativity_violation(c)) {
    auto& t = *v;
    throw Error(ErrorCode::NonAssociative,
                "associativity fails for " + c.morphism_name(t[0]) + " . " + c.morphism_name(t[1]) +
                    " . " + c.morphism_name(t[2]),
                {c.morphism_name(t[0]), c.morphism_name(t[1]), c.morphism_name(t[2])});
  }

  std::vector<NamedSubset> subs;
  for (const auto& s : raw.subsets) {
    for (const auto& prev : subs)
      if (prev.name == s.name) throw Error(ErrorCode::DuplicateId, "duplicate subset " + s.name, {s.name});
    NamedSubset ns{s.name, false, {}};
    int kind = -1;
    for (const auto& m : s.members) {
      if (auto o = c.find_object(m)) {
        if (kind == 1) throw Error(ErrorCode::InvalidArgument, "subset " + s.name + " mixes objects and morphisms", {s.name});
        kind = 0;
        ns.ids.push_back(*o);
      } else if (auto f = c.find_morphism(m)) {
        if (kind == 0) throw Error(ErrorCode::InvalidArgument, "subset " + s.name + " mixes objects and morphisms", {s.name});
        kind = 1;
        ns.ids.push_back(*f);
      } else {
        throw Error(ErrorCode::UnknownId, "subset " + s.name + " names unknown id " + m, {m});
      }
    }
    ns.of_morphisms = kind == 1;
    subs.push_back(std::move(ns));
  }
  // Subsets are attached after validation; rebuild keeps the same ids.
  FinCat::Builder fin(c.name());
  for (ObjId x = 0; x < c.object_count(); ++x) fin.add_object(c.object_name(x));
  for (MorId f = 0; f < c.morphism_count(); ++f) fin.add_morphism(c.morphism_name(f), c.src(f), c.tgt(f));
  for (ObjId x = 0; x < c.object_count(); ++x) fin.set_identity(x, c.identity(x));
  for (auto& s : subs) fin.add_subset(std::move(s));
  return fin.build([&](MorId g, MorId f) { return c.compose(g, f); });
}

RawCategory to_raw(const FinCat& c) {
  RawCategory r;
  r.name = c.name();
  for (ObjId x = 0; x < c.object_count(); ++x) r.objects.push_back(c.object_name(x));
  for (MorId f = 0; f < c.morphism_count(); ++f)
    r.morphisms.push_back({c.morphism_name(f), c.object_name(c.src(f)), c.object_name(c.tgt(f))});
  for (ObjId x = 0; x < c.object_count(); ++x)
    r.identities.emplace_back(c.object_name(x), c.morphism_name(c.identity(x)));
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (ObjId z = 0; z < c.object_count(); ++z)
      for (MorId g : c.hom(c.tgt(f), z)) {
        if (c.is_identity(g)) continue;
        r.composites.push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.compose(g, f))});
      }
  }
  for (const auto& s : c.subsets()) {
    RawSubset rs{s.name, {}};
    for (auto i : s.ids) rs.members.push_back(s.of_morphisms ? c.morphism_name(i) : c.object_name(i));
    r.subsets.push_back(std::move(rs));
  }
  return r;
}

}  // namespace rectors
