#include "rectors/fincat.hpp"

namespace rectors {

bool is_mono(const FinCat& c, MorId f) {
  ObjId a = c.src(f);
  std::vector<char> hit(c.morphism_count(), 0);
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto hs = c.hom(x, a);
    bool ok = true;
    for (MorId g : hs) {
      MorId fg = c.compose(f, g);
      if (hit[fg]) ok = false;
      hit[fg] = 1;
    }
    for (MorId g : hs) hit[c.compose(f, g)] = 0;
    if (!ok) return false;
  }
  return true;
}

bool is_epi(const FinCat& c, MorId f) {
  ObjId b = c.tgt(f);
  std::vector<char> hit(c.morphism_count(), 0);
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto hs = c.hom(b, x);
    bool ok = true;
    for (MorId g : hs) {
      MorId gf = c.compose(g, f);
      if (hit[gf]) ok = false;
      hit[gf] = 1;
    }
    for (MorId g : hs) hit[c.compose(g, f)] = 0;
    if (!ok) return false;
  }
  return true;
}

MorId find_retraction(const FinCat& c, MorId f) {
  for (MorId r : c.hom(c.tgt(f), c.src(f)))
    if (c.compose(r, f) == c.identity(c.src(f))) return r;
  return kNone;
}

MorId find_section(const FinCat& c, MorId f) {
  for (MorId s : c.hom(c.tgt(f), c.src(f)))
    if (c.compose(f, s) == c.identity(c.tgt(f))) return s;
  return kNone;
}

MorphismClass classify_morphism(const FinCat& c, MorId f) {
  MorphismClass m;
  m.mono = is_mono(c, f);
  m.epi = is_epi(c, f);
  m.iso = c.is_iso(f);
  m.split_mono = find_retraction(c, f) != kNone;
  m.split_epi = find_section(c, f) != kNone;
  return m;
}

bool is_initial(const FinCat& c, ObjId x) {
  for (ObjId y = 0; y < c.object_count(); ++y)
    if (c.hom(x, y).size() != 1) return false;
  return true;
}

bool is_terminal(const FinCat& c, ObjId x) {
  for (ObjId y = 0; y < c.object_count(); ++y)
    if (c.hom(y, x).size() != 1) return false;
  return true;
}

ExtremalObjects find_extremal_objects(const FinCat& c) {
  ExtremalObjects e;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    bool i = is_initial(c, x), t = is_terminal(c, x);
    if (i) e.initial.push_back(x);
    if (t) e.terminal.push_back(x);
    if (i && t) e.zero.push_back(x);
  }
  return e;
}

const char* to_string(BiQuasiPointed::Reason r) {
  switch (r) {
    case BiQuasiPointed::Reason::None: return "None";
    case BiQuasiPointed::Reason::NoInitial: return "NoInitial";
    case BiQuasiPointed::Reason::NoTerminal: return "NoTerminal";
    case BiQuasiPointed::Reason::NotMono: return "NotMono";
    case BiQuasiPointed::Reason::NotEpi: return "NotEpi";
  }
  return "Unknown";
}

BiQuasiPointed is_bi_quasi_pointed(const FinCat& c) {
  BiQuasiPointed v;
  auto e = find_extremal_objects(c);
  if (e.initial.empty()) {
    v.reason = BiQuasiPointed::Reason::NoInitial;
    return v;
  }
  if (e.terminal.empty()) {
    v.reason = BiQuasiPointed::Reason::NoTerminal;
    return v;
  }
  v.zero = e.initial.front();
  v.one = e.terminal.front();
  v.arrow = c.hom(v.zero, v.one).front();
  if (!is_mono(c, v.arrow)) {
    v.reason = BiQuasiPointed::Reason::NotMono;
    return v;
  }
  if (!is_epi(c, v.arrow)) {
    v.reason = BiQuasiPointed::Reason::NotEpi;
    return v;
  }
  v.ok = true;
  return v;
}

IdSet replete_closure(const FinCat& c, const IdSet& s) {
  IdSet out(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    if (s.contains(x)) {
      out.insert(x);
      continue;
    }
    for (ObjId y : s.members())
      if (c.isomorphic(y, x)) {
        out.insert(x);
        break;
      }
  }
  return out;
}

}  // namespace rectors
