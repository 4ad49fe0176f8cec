#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rectors/error.hpp"

namespace rectors {

struct RawMorphism {
  std::string id;
  std::string src;
  std::string tgt;
};

struct RawComposite {
  std::string g;  // outer
  std::string f;  // inner
  std::string h;  // g . f
};

struct RawSubset {
  std::string name;
  std::vector<std::string> members;
};

// Unvalidated description, e.g. straight out of the .fincat parser.
struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object, morphism
  std::vector<RawComposite> composites;
  std::vector<RawSubset> subsets;
};

struct NamedSubset {
  std::string name;
  bool of_morphisms = false;
  std::vector<std::uint32_t> ids;
};

class FinCat {
 public:
  class Builder;

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return src_.size(); }
  bool empty() const { return objects_.empty(); }

  const std::string& object_name(ObjId x) const { return objects_.at(x); }
  const std::string& morphism_name(MorId f) const { return morphisms_.at(f); }
  std::optional<ObjId> find_object(std::string_view id) const;
  std::optional<MorId> find_morphism(std::string_view id) const;

  ObjId src(MorId f) const { return src_[f]; }
  ObjId tgt(MorId f) const { return tgt_[f]; }
  MorId identity(ObjId x) const { return identity_[x]; }
  bool is_identity(MorId f) const { return identity_[src_[f]] == f; }

  // Ascending morphism ids.
  std::span<const MorId> hom(ObjId a, ObjId b) const {
    return hom_[static_cast<std::size_t>(a) * objects_.size() + b];
  }
  // g . f; requires src(g) == tgt(f).
  MorId compose(MorId g, MorId f) const {
    std::size_t n = objects_.size();
    ObjId a = src_[f], b = tgt_[f], c = tgt_[g];
    std::size_t off = comp_offset_[(static_cast<std::size_t>(a) * n + b) * n + c];
    return comp_[off + static_cast<std::size_t>(local_[g]) * hom(a, b).size() + local_[f]];
  }
  bool composable(MorId g, MorId f) const { return src_[g] == tgt_[f]; }
  // kNone unless f is an isomorphism.
  MorId inverse(MorId f) const { return inverse_[f]; }
  bool is_iso(MorId f) const { return inverse_[f] != kNone; }

  const std::vector<NamedSubset>& subsets() const { return subsets_; }
  const NamedSubset* find_subset(std::string_view name) const;

  // First isomorphism a -> b (least id), or kNone.
  MorId find_iso(ObjId a, ObjId b) const;
  bool isomorphic(ObjId a, ObjId b) const { return find_iso(a, b) != kNone; }

 private:
  friend class Builder;
  FinCat() = default;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::string> morphisms_;
  std::vector<ObjId> src_, tgt_;
  std::vector<MorId> identity_;
  std::vector<std::vector<MorId>> hom_;
  std::vector<std::uint32_t> local_;
  std::vector<std::size_t> comp_offset_;
  std::vector<MorId> comp_;
  std::vector<MorId> inverse_;
  std::vector<NamedSubset> subsets_;
  std::unordered_map<std::string, std::uint32_t> object_index_, morphism_index_;
};

// Assembles a FinCat from trusted data. build() fills the composition table
// through the callback and does not check the category laws.
class FinCat::Builder {
 public:
  explicit Builder(std::string name) { cat_.name_ = std::move(name); }
  ObjId add_object(std::string id);
  MorId add_morphism(std::string id, ObjId src, ObjId tgt);
  void set_identity(ObjId x, MorId f);
  void add_subset(NamedSubset s) { cat_.subsets_.push_back(std::move(s)); }
  std::size_t object_count() const { return cat_.objects_.size(); }
  std::size_t morphism_count() const { return cat_.src_.size(); }
  FinCat build(const std::function<MorId(MorId, MorId)>& compose);

 private:
  FinCat cat_;
};

using CatPtr = std::shared_ptr<const FinCat>;

// Throws Error with the first violated law and a witness.
FinCat validate_category(const RawCategory& raw, const Limits& limits = {});
RawCategory to_raw(const FinCat& c);
// Re-checks identity and associativity laws on an existing table.
std::optional<std::vector<MorId>> associativity_violation(const FinCat& c);
std::optional<MorId> identity_violation(const FinCat& c);

struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> objects;
  std::vector<MorId> morphisms;

  ObjId obj(ObjId x) const { return objects[x]; }
  MorId mor(MorId f) const { return morphisms[f]; }
  bool operator==(const Functor& o) const {
    return source == o.source && target == o.target && objects == o.objects &&
           morphisms == o.morphisms;
  }
};

// Empty string when F is a functor; otherwise a description of the first failure.
std::string functor_violation(const Functor& F);
Functor identity_functor(const CatPtr& c);
// G . F
Functor compose(const Functor& G, const Functor& F);

struct NatTrans {
  Functor from;
  Functor to;
  std::vector<MorId> components;  // components[x] : from(x) -> to(x)
};

std::string nat_trans_violation(const NatTrans& a);
bool is_natural_iso(const NatTrans& a);
NatTrans identity_nat(const Functor& F);
// b . a
NatTrans vertical(const NatTrans& b, const NatTrans& a);
NatTrans inverse(const NatTrans& a);
// H a : H F => H G
NatTrans whisker_left(const Functor& H, const NatTrans& a);
// a K : F K => G K
NatTrans whisker_right(const NatTrans& a, const Functor& K);

struct ProductCategory {
  CatPtr category;
  std::vector<CatPtr> factors;
  std::vector<Functor> projections;
  std::vector<std::size_t> object_radix;
  std::vector<std::size_t> morphism_radix;

  ObjId object_of(std::span<const ObjId> xs) const;
  MorId morphism_of(std::span<const MorId> fs) const;
  ObjId object_component(ObjId x, std::size_t i) const;
  MorId morphism_component(MorId f, std::size_t i) const;
  std::vector<ObjId> object_components(ObjId x) const;
  std::vector<MorId> morphism_components(MorId f) const;
};

ProductCategory product_category(const std::vector<CatPtr>& factors, const Limits& limits = {});
// Componentwise functor between two products with the same number of factors.
Functor product_functor(const std::vector<Functor>& parts, const ProductCategory& src,
                        const ProductCategory& tgt);

struct Subcategory {
  CatPtr category;
  Functor inclusion;
  std::vector<ObjId> to_sub;  // kNone when absent
  std::vector<MorId> mor_to_sub;
};

Subcategory full_subcategory(const CatPtr& c, const IdSet& objects, const std::string& name);

// Objects are the members of E (in the given order); morphisms are commuting
// squares (a, b) with b . e = e' . a.
struct ArrowCategory {
  CatPtr category;
  CatPtr base;
  std::vector<MorId> arrows;
  std::vector<std::pair<MorId, MorId>> squares;
};

ArrowCategory arrow_category(const CatPtr& c, const std::vector<MorId>& E, const Limits& limits = {});

struct MorphismClass {
  bool mono = false;
  bool epi = false;
  bool iso = false;
  bool split_mono = false;
  bool split_epi = false;
};

bool is_mono(const FinCat& c, MorId f);
bool is_epi(const FinCat& c, MorId f);
MorId find_retraction(const FinCat& c, MorId f);
MorId find_section(const FinCat& c, MorId f);
MorphismClass classify_morphism(const FinCat& c, MorId f);

struct ExtremalObjects {
  std::vector<ObjId> initial;
  std::vector<ObjId> terminal;
  std::vector<ObjId> zero;
};

bool is_initial(const FinCat& c, ObjId x);
bool is_terminal(const FinCat& c, ObjId x);
ExtremalObjects find_extremal_objects(const FinCat& c);

struct BiQuasiPointed {
  enum class Reason { None, NoInitial, NoTerminal, NotMono, NotEpi };
  bool ok = false;
  Reason reason = Reason::None;
  ObjId zero = kNone;
  ObjId one = kNone;
  MorId arrow = kNone;
};

BiQuasiPointed is_bi_quasi_pointed(const FinCat& c);
const char* to_string(BiQuasiPointed::Reason r);

IdSet replete_closure(const FinCat& c, const IdSet& s);

struct AdjointEquivalence {
  Functor forward;
  Functor inverse;
  NatTrans unit;    // id => inverse . forward
  NatTrans counit;  // forward . inverse => id
};

struct EquivalenceVerdict {
  enum class Failure { None, NotFullyFaithful, NotEssentiallySurjective };
  bool ok = false;
  Failure failure = Failure::None;
  // NotFullyFaithful: the source hom-set (a, b); NotEssentiallySurjective: target object.
  ObjId witness_a = kNone;
  ObjId witness_b = kNone;
  std::optional<AdjointEquivalence> data;
};

const char* to_string(EquivalenceVerdict::Failure f);
EquivalenceVerdict check_equivalence(const Functor& F);
// Replaces the counit so that both triangle identities hold.
AdjointEquivalence adjointify(const Functor& F, const Functor& G, const NatTrans& unit,
                              const NatTrans& counit);
// Counit forced by the unit when G is fully faithful.
AdjointEquivalence complete_from_unit(const Functor& F, const Functor& G, const NatTrans& unit);
bool triangle_identities_hold(const AdjointEquivalence& e);

}  // namespace rectors
