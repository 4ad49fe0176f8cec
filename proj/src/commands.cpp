#include "rectors/commands.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

#include "rectors/bands.hpp"
#include "rectors/epiclasses.hpp"
#include "rectors/pointed_monad.hpp"
#include "rectors/pretorsion.hpp"
#include "rectors/text_format.hpp"

namespace rectors {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

// Errors raised while reading inputs; anything thrown later is a verdict.
struct InputError {
  ErrorCode code;
  std::string message;
  std::vector<std::string> witness;
};

[[noreturn]] void input_error(ErrorCode code, const std::string& message, std::vector<std::string> witness = {}) {
  throw InputError{code, message, std::move(witness)};
}

class Report {
 public:
  explicit Report(const CommandRequest& req) {
    j_["command"] = req.command;
    j_["format_version"] = kFormatVersion;
    j_["inputs"] = req.inputs;
    j_["options"] = json::object();
    for (const auto& [k, v] : req.options) j_["options"][k] = v;
    j_["verdicts"] = json::object();
    j_["witnesses"] = json::object();
    j_["details"] = json::object();
  }

  void verdict(const std::string& name, bool ok) { add_verdict(name, ok ? "pass" : "fail"); }
  void unsupported(const std::string& name, const Error& e) {
    add_verdict(name, "unsupported");
    witness(name, {{"code", to_string(e.code())}, {"message", e.what()}, {"witness", e.witness()}});
  }
  void witness(const std::string& name, json w) {
    j_["witnesses"][name] = w;
    order_w_.push_back(name);
  }
  json& detail(const std::string& key) { return j_["details"][key]; }
  void text(const std::string& block) { text_ += block; }
  // Rows are already strings; the first row is the header.
  void table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream out;
    for (const auto& r : rows) {
      std::ostringstream line;
      line << " ";
      for (std::size_t i = 0; i < r.size(); ++i) line << " " << std::left << std::setw(int(w[i])) << r[i];
      std::string l = line.str();
      out << l.substr(0, l.find_last_not_of(' ') + 1) << "\n";
    }
    text_ += out.str();
  }

  bool passed() const {
    for (const auto& [k, v] : j_["verdicts"].items())
      if (v != "pass") return false;
    return true;
  }

  CommandResult finish(std::optional<std::int64_t> micros) {
    CommandResult r;
    r.outcome = passed() ? Outcome::Pass : Outcome::Fail;
    j_["result"] = passed() ? "pass" : "fail";
    if (micros) j_["timing_us"] = *micros;
    std::ostringstream out;
    out << "command: " << j_["command"].get<std::string>() << "\n";
    for (const auto& in : j_["inputs"]) out << "input: " << in.get<std::string>() << "\n";
    for (const auto& [k, v] : j_["options"].items()) out << "option " << k << ": " << v.get<std::string>() << "\n";
    out << text_;
    for (const auto& name : order_v_) out << "verdict " << name << ": " << j_["verdicts"][name].get<std::string>() << "\n";
    for (const auto& name : order_w_) out << "witness " << name << ": " << j_["witnesses"][name].dump() << "\n";
    out << "result: " << j_["result"].get<std::string>() << "\n";
    if (micros) out << "time_us: " << *micros << "\n";
    r.text = out.str();
    r.report = std::move(j_);
    return r;
  }

 private:
  void add_verdict(const std::string& name, const char* v) {
    if (!j_["verdicts"].contains(name)) order_v_.push_back(name);
    j_["verdicts"][name] = v;
  }

  json j_;
  std::string text_;
  std::vector<std::string> order_v_, order_w_;
};

std::string opt(const CommandRequest& req, const std::string& key, bool required = true) {
  auto it = req.options.find(key);
  if (it == req.options.end() || it->second.empty()) {
    if (required) input_error(ErrorCode::InvalidArgument, "missing option --" + key);
    return {};
  }
  return it->second;
}

const std::string& input(const CommandRequest& req, std::size_t i = 0) {
  if (req.inputs.size() <= i) input_error(ErrorCode::InvalidArgument, "missing input file");
  return req.inputs[i];
}

CatPtr load_cat(const CommandRequest& req, const std::string& path) {
  try {
    return std::make_shared<FinCat>(load_fincat(path, req.limits));
  } catch (const Error& e) {
    input_error(e.code(), e.what(), e.witness());
  }
}

BandTable load_band_input(const std::string& path) {
  try {
    return load_band(path);
  } catch (const Error& e) {
    input_error(e.code(), e.what(), e.witness());
  }
}

IdSet object_subset(const FinCat& c, const std::string& name) {
  const NamedSubset* s = c.find_subset(name);
  if (!s) input_error(ErrorCode::UnknownId, "unknown subset " + name, {name});
  if (s->of_morphisms && !s->ids.empty()) input_error(ErrorCode::InvalidArgument, "subset " + name + " holds morphisms", {name});
  return IdSet::of(c.object_count(), s->ids);
}

std::vector<MorId> morphism_subset(const FinCat& c, const std::string& name) {
  const NamedSubset* s = c.find_subset(name);
  if (!s) input_error(ErrorCode::UnknownId, "unknown subset " + name, {name});
  if (!s->of_morphisms && !s->ids.empty()) input_error(ErrorCode::InvalidArgument, "subset " + name + " holds objects", {name});
  return s->ids;
}

json obj_names(const FinCat& c, const std::vector<ObjId>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(c.object_name(x));
  return out;
}
json mor_names(const FinCat& c, const std::vector<MorId>& fs) {
  json out = json::array();
  for (auto f : fs) out.push_back(c.morphism_name(f));
  return out;
}
std::string join(const json& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : " ") + n.get<std::string>();
  return s.empty() ? "-" : s;
}
json oname(const FinCat& c, ObjId x) { return x == kNone ? json(nullptr) : json(c.object_name(x)); }

void describe_category(Report& r, const FinCat& c) {
  r.detail("category") = {{"name", c.name()}, {"objects", c.object_count()}, {"morphisms", c.morphism_count()}};
}

void ses_table(Report& r, const PretorsionPresentation& P) {
  const FinCat& c = *P.category;
  json rows = json::array();
  std::vector<std::vector<std::string>> text{{"object", "torsion", "ell", "r", "free"}};
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const SesRecord& s = P.ses[x];
    rows.push_back({{"object", c.object_name(x)},
                    {"torsion", c.object_name(s.torsion)},
                    {"ell", c.morphism_name(s.ell)},
                    {"r", c.morphism_name(s.r)},
                    {"free", c.object_name(s.free)}});
    text.push_back({c.object_name(x), c.object_name(s.torsion), c.morphism_name(s.ell), c.morphism_name(s.r),
                    c.object_name(s.free)});
  }
  r.detail("ses") = rows;
  r.text("short exact sequences:\n");
  r.table(text);
}

// Loads the category with its T and F subsets and runs check_pretorsion.
struct Theory {
  CatPtr cat;
  IdSet T, F;
};

Theory load_theory(const CommandRequest& req) {
  Theory t;
  t.cat = load_cat(req, input(req));
  t.T = object_subset(*t.cat, opt(req, "torsion"));
  t.F = object_subset(*t.cat, opt(req, "free"));
  return t;
}

bool pretorsion_verdict(Report& r, const Theory& t, PretorsionVerdict& v) {
  const FinCat& c = *t.cat;
  describe_category(r, c);
  r.detail("torsion") = obj_names(c, t.T.members());
  r.detail("free") = obj_names(c, t.F.members());
  try {
    v = check_pretorsion(t.cat, t.T, t.F);
  } catch (const Error& e) {
    r.unsupported("pretorsion", e);
    return false;
  }
  r.verdict("pretorsion", v.ok);
  r.detail("closure_added") = v.closure_added;
  if (!v.ok) {
    json w{{"failure", to_string(v.failure)}};
    if (v.t1_witness != kNone) w["morphism"] = c.morphism_name(v.t1_witness);
    if (v.t2_witness != kNone) w["object"] = c.object_name(v.t2_witness);
    r.witness("pretorsion", w);
    return false;
  }
  r.detail("zero_witness") = oname(c, v.presentation->zero_witness);
  return true;
}

void cmd_validate(const CommandRequest& req, Report& r) {
  CatPtr c;
  try {
    c = std::make_shared<FinCat>(load_fincat(input(req), req.limits));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonAssociative && e.code() != ErrorCode::IdentityLawViolation)
      input_error(e.code(), e.what(), e.witness());
    r.verdict("category_laws", false);
    r.witness("category_laws", {{"code", to_string(e.code())}, {"message", e.what()}, {"witness", e.witness()}});
    return;
  }
  r.verdict("category_laws", true);
  describe_category(r, *c);
  auto ext = find_extremal_objects(*c);
  r.detail("initial") = obj_names(*c, ext.initial);
  r.detail("terminal") = obj_names(*c, ext.terminal);
  r.detail("zero") = obj_names(*c, ext.zero);
  json subsets = json::object();
  for (const auto& s : c->subsets())
    subsets[s.name] = s.of_morphisms ? mor_names(*c, s.ids) : obj_names(*c, s.ids);
  r.detail("subsets") = subsets;
  std::ostringstream out;
  out << "category " << c->name() << ": " << c->object_count() << " objects, " << c->morphism_count()
      << " morphisms\n";
  out << "initial: " << join(r.detail("initial")) << "\nterminal: " << join(r.detail("terminal"))
      << "\nzero: " << join(r.detail("zero")) << "\n";
  r.text(out.str());
}

void cmd_product(const CommandRequest& req, Report& r) {
  if (req.inputs.size() < 2) input_error(ErrorCode::InvalidArgument, "product needs at least two categories");
  std::vector<CatPtr> factors;
  for (const auto& p : req.inputs) factors.push_back(load_cat(req, p));
  ProductCategory P;
  try {
    P = product_category(factors, req.limits);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeLimitExceeded) input_error(e.code(), e.what(), e.witness());
    throw;
  }
  describe_category(r, *P.category);
  std::string text = write_fincat(*P.category);
  r.detail("fincat") = text;
  r.verdict("product", true);
  r.text(text);
}

void cmd_check_pretorsion(const CommandRequest& req, Report& r) {
  Theory t = load_theory(req);
  PretorsionVerdict v;
  if (pretorsion_verdict(r, t, v)) ses_table(r, *v.presentation);
}

void cmd_check_rectangular(const CommandRequest& req, Report& r) {
  Theory t = load_theory(req);
  PretorsionVerdict v;
  if (!pretorsion_verdict(r, t, v)) {
    r.verdict("rectangular", false);
    return;
  }
  auto rv = is_rectangular(*v.presentation);
  r.verdict("rectangular", rv.ok);
  const FinCat& c = *t.cat;
  if (!rv.ok) {
    json w{{"failure", to_string(rv.equivalence.failure)}};
    if (rv.equivalence.failure == EquivalenceVerdict::Failure::NotFullyFaithful)
      w["hom"] = {c.object_name(rv.equivalence.witness_a), c.object_name(rv.equivalence.witness_b)};
    else
      w["object"] = oname(*rv.gamma.target.category, rv.equivalence.witness_a);
    r.witness("rectangular", w);
  }
  json gamma = json::array();
  std::vector<std::vector<std::string>> rows{{"object", "gamma"}};
  for (ObjId x = 0; x < c.object_count(); ++x) {
    std::string g = rv.gamma.target.category->object_name(rv.gamma.functor.obj(x));
    gamma.push_back({{"object", c.object_name(x)}, {"gamma", g}});
    rows.push_back({c.object_name(x), g});
  }
  r.detail("gamma") = gamma;
  r.text("canonical functor:\n");
  r.table(rows);
}

void cmd_characterize(const CommandRequest& req, Report& r) {
  Theory t = load_theory(req);
  describe_category(r, *t.cat);
  Characterization ch = characterize_rectangular(t.cat, t.T, t.F);
  r.verdict("pretorsion", ch.pretorsion);
  r.verdict("rectangular", ch.rectangular);
  if (ch.rectangular) {
    r.verdict("intersection_isomorphic", ch.intersection_isomorphic);
    r.verdict("zero_endo_trivial", ch.zero_endo_trivial);
    r.verdict("zero_terminal_in_torsion", ch.zero_terminal_in_torsion);
    r.verdict("zero_initial_in_free", ch.zero_initial_in_free);
    r.verdict("product_form_equivalent", ch.product_form_equivalent);
    r.verdict("product_form_matches", ch.product_form_matches);
    r.verdict("identity_kernels", ch.identity_kernels);
  }
  r.detail("zero") = oname(*t.cat, ch.zero);
  r.detail("symmetrical") = ch.symmetrical;
  r.detail("pointed") = ch.pointed;
  r.detail("kernels_of_identities") = ch.kernels_of_identities;
  r.detail("torsion_quasi_pointed") = ch.torsion_quasi_pointed;
  r.detail("free_quasi_pointed") = ch.free_quasi_pointed;
  std::string kind = !ch.pretorsion     ? "not a pretorsion theory"
                     : !ch.rectangular  ? "pretorsion but not rectangular"
                     : ch.pointed       ? "rectangular torsion theory (pointed)"
                     : ch.symmetrical   ? "rectangular, symmetrical"
                                        : "rectangular but not pointed or symmetrical";
  r.detail("classification") = kind;
  r.text("classification: " + kind + "\n");
}

void cmd_check_morphism(const CommandRequest& req, Report& r) {
  CatPtr c = load_cat(req, input(req));
  describe_category(r, *c);
  std::vector<MorId> which;
  std::string m = opt(req, "morphism", false);
  if (m.empty()) {
    for (MorId f = 0; f < c->morphism_count(); ++f) which.push_back(f);
  } else {
    auto f = c->find_morphism(m);
    if (!f) input_error(ErrorCode::UnknownId, "unknown morphism " + m, {m});
    which.push_back(*f);
  }
  json rows = json::array();
  std::vector<std::vector<std::string>> text{{"morphism", "source", "target", "mono", "epi", "iso", "split_mono", "split_epi"}};
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  for (MorId f : which) {
    auto k = classify_morphism(*c, f);
    rows.push_back({{"morphism", c->morphism_name(f)},
                    {"source", c->object_name(c->src(f))},
                    {"target", c->object_name(c->tgt(f))},
                    {"mono", k.mono},
                    {"epi", k.epi},
                    {"iso", k.iso},
                    {"split_mono", k.split_mono},
                    {"split_epi", k.split_epi}});
    text.push_back({c->morphism_name(f), c->object_name(c->src(f)), c->object_name(c->tgt(f)), yn(k.mono), yn(k.epi),
                    yn(k.iso), yn(k.split_mono), yn(k.split_epi)});
  }
  r.detail("morphisms") = rows;
  r.table(text);
  r.verdict("classified", true);
}

void coherence_verdicts(Report& r, const std::string& prefix, const CoherenceReport& rep) {
  for (const auto& ch : rep.checks) {
    r.verdict(prefix + ch.name, ch.ok);
    if (!ch.ok) r.witness(prefix + ch.name, ch.witness);
  }
}

void cmd_check_pseudoalgebra(const CommandRequest& req, Report& r) {
  Theory t = load_theory(req);
  PretorsionVerdict v;
  if (!pretorsion_verdict(r, t, v)) return;
  try {
    auto A = build_pseudo_algebra(*v.presentation);
    auto rep = check_pseudo_algebra(A);
    coherence_verdicts(r, "", rep);
    json q = json::array();
    const FinCat& c = *t.cat;
    for (ObjId x = 0; x < c.object_count(); ++x)
      for (ObjId y = 0; y < c.object_count(); ++y)
        q.push_back({c.object_name(x), c.object_name(y), c.object_name(A.q_obj(x, y))});
    r.detail("q_objects") = q;
    json counts = json::object();
    for (const auto& ch : rep.checks) counts[ch.name] = ch.checked;
    r.detail("checked") = counts;
  } catch (const Error& e) {
    r.unsupported("pseudo_algebra", e);
  }
}

void cmd_roundtrip(const CommandRequest& req, Report& r) {
  Theory t = load_theory(req);
  PretorsionVerdict v;
  if (!pretorsion_verdict(r, t, v)) return;
  try {
    auto rt = roundtrip_check(*v.presentation);
    r.verdict("algebra_coherent", rt.algebra.ok);
    r.verdict("torsion_recovered", rt.torsion_equal);
    r.verdict("free_recovered", rt.free_equal);
    r.verdict("rebuilt_coherent", rt.rebuilt_report.ok);
    r.verdict("phi_iso", rt.phi_iso);
    r.verdict("phi_coherent", rt.phi_report.ok);
    r.verdict("phi_inverse_coherent", rt.phi_inverse_report.ok);
    for (const auto* rep : {&rt.algebra, &rt.rebuilt_report, &rt.phi_report, &rt.phi_inverse_report})
      if (auto f = rep->first_failure()) r.witness(f->name, f->witness);
  } catch (const Error& e) {
    r.unsupported("roundtrip", e);
  }
}

json band_witness(const BandVerdict& v) { return {{"failure", to_string(v.failure)}, {"elements", v.witness}}; }

void cmd_check_band(const CommandRequest& req, Report& r) {
  BandTable b = load_band_input(input(req));
  r.detail("n") = b.n;
  auto rt = band_algebra_roundtrip(b);
  r.verdict("rectangular_band", rt.band.ok);
  if (!rt.band.ok) r.witness("rectangular_band", band_witness(rt.band));
  r.detail("algebra_laws") = rt.laws.ok;
  if (!rt.laws.ok) r.detail("algebra_failure") = {{"failure", to_string(rt.laws.failure)}, {"elements", rt.laws.witness}};
  r.verdict("laws_agree", rt.agree);
  r.verdict("algebra_roundtrip", rt.identity);
}

void decomposition_details(Report& r, const BandDecomposition& d) {
  r.detail("p") = d.p;
  r.detail("q") = d.q;
  r.detail("left") = d.left;
  r.detail("right") = d.right;
  json pairs = json::array();
  std::vector<std::vector<std::string>> rows{{"element", "i", "j"}};
  for (std::size_t x = 0; x < d.pairs.size(); ++x) {
    pairs.push_back({d.pairs[x].first, d.pairs[x].second});
    rows.push_back({std::to_string(x), std::to_string(d.pairs[x].first), std::to_string(d.pairs[x].second)});
  }
  r.detail("pairs") = pairs;
  r.text("p=" + std::to_string(d.p) + " q=" + std::to_string(d.q) + "\n");
  r.table(rows);
}

void cmd_decompose_band(const CommandRequest& req, Report& r) {
  BandTable b = load_band_input(input(req));
  r.detail("n") = b.n;
  auto v = check_band(b);
  r.verdict("rectangular_band", v.ok);
  if (!v.ok) {
    r.witness("rectangular_band", band_witness(v));
    return;
  }
  auto d = decompose_band(b);
  decomposition_details(r, d);
  r.verdict("recomposes", recompose_band(d) == b);
}

void cmd_enumerate_bands(const CommandRequest& req, Report& r) {
  const std::string& s = input(req);
  if (s.empty() || s.size() > 3 || s.find_first_not_of("0123456789") != std::string::npos)
    input_error(ErrorCode::InvalidArgument, "expected a size n, got " + s, {s});
  std::uint32_t n = std::stoul(s);
  BandEnumeration e;
  try {
    e = enumerate_rectangular_bands(n);
  } catch (const Error& err) {
    input_error(err.code(), err.what(), err.witness());
  }
  r.detail("n") = n;
  r.detail("scanned") = e.scanned;
  r.detail("count") = e.bands.size();
  json list = json::array();
  std::vector<std::vector<std::string>> rows{{"table", "p", "q"}};
  for (std::size_t i = 0; i < e.bands.size(); ++i) {
    list.push_back({{"table", e.bands[i].table}, {"p", e.decompositions[i].p}, {"q", e.decompositions[i].q}});
    std::string t;
    for (auto v : e.bands[i].table) t += std::to_string(v);
    rows.push_back({t, std::to_string(e.decompositions[i].p), std::to_string(e.decompositions[i].q)});
  }
  r.detail("bands") = list;
  r.text("scanned " + std::to_string(e.scanned) + " tables, " + std::to_string(e.bands.size()) +
         " rectangular bands\n");
  r.table(rows);
  r.verdict("all_decompose", e.all_decompose);
  r.verdict("laws_agree", e.laws_agree);
}

EpiMode parse_mode(const std::string& s) {
  for (auto m : {EpiMode::Explicit, EpiMode::Minimal, EpiMode::Split, EpiMode::Regular, EpiMode::Projections})
    if (s == to_string(m)) return m;
  input_error(ErrorCode::InvalidArgument, "unknown mode " + s, {s});
}

void cmd_check_epiclass(const CommandRequest& req, Report& r) {
  CatPtr c = load_cat(req, input(req));
  const FinCat& X = *c;
  describe_category(r, X);
  std::string mode_name = opt(req, "mode", false);
  EpiMode mode = mode_name.empty() ? EpiMode::Explicit : parse_mode(mode_name);
  std::string cls = opt(req, "class", mode == EpiMode::Explicit);
  std::vector<MorId> E;
  std::vector<MorId> computed;
  try {
    switch (mode) {
      case EpiMode::Minimal: computed = isos_and_zero_target_maps(X); break;
      case EpiMode::Split: computed = split_epimorphisms(X); break;
      case EpiMode::Regular: computed = regular_epimorphisms(X); break;
      case EpiMode::Projections: computed = product_projections(X); break;
      case EpiMode::Explicit: break;
    }
  } catch (const Error& e) {
    r.unsupported("epiclass", e);
    return;
  }
  if (!cls.empty()) {
    E = morphism_subset(X, cls);
    std::sort(E.begin(), E.end());
    if (mode != EpiMode::Explicit) {
      r.verdict("class_matches_mode", E == computed);
      r.detail("mode_class") = mor_names(X, computed);
    }
  } else {
    E = computed;
  }
  r.detail("mode") = to_string(mode);
  r.detail("class") = mor_names(X, E);
  if (mode == EpiMode::Regular) r.detail("regularity_of_category") = "unchecked";
  EpiClassPresentation P;
  try {
    P = build_epiclass(c, E, req.limits);
  } catch (const Error& e) {
    r.verdict("valid_class", false);
    r.witness("valid_class", {{"code", to_string(e.code())}, {"message", e.what()}, {"witness", e.witness()}});
    return;
  }
  r.verdict("valid_class", true);
  const FinCat& A = *P.arrows.category;
  r.verdict("arrow_category_pointed", P.arrow_category_pointed);
  auto v = check_rectangular_class(P, mode);
  r.verdict("torsion_class", v.torsion.generic);
  r.detail("torsion_direct") = v.torsion.direct;
  r.detail("torsion_generic") = v.torsion.generic;
  r.verdict("torsion_clause_agrees", v.torsion.agree);
  if (v.torsion.witness != kNone) r.witness("not_normal_or_no_kernel", X.morphism_name(v.torsion.witness));
  r.detail("products_exist") = v.products_exist;
  r.detail("projections_direct") = v.direct;
  r.detail("rectangular_generic") = v.generic;
  r.detail("rectangular_clause_agrees") = v.agree;
  if (v.witness != kNone) r.witness("not_a_projection", X.morphism_name(v.witness));
  r.detail("all_normal") = v.all_normal;
  r.detail("normal_projections") = v.normal_projections;
  r.verdict("projections_normal_with_kernel", v.projections_are_normal_with_kernel);
  r.verdict("mode_statement", v.mode_statement);

  std::size_t candidates = 0, agreeing = 0;
  for (MorId ell = 0; ell < A.morphism_count(); ++ell)
    for (MorId rr = 0; rr < A.morphism_count(); ++rr) {
      if (A.tgt(ell) != A.src(rr) || !P.torsion.contains(A.src(ell)) || !P.free.contains(A.tgt(rr))) continue;
      ++candidates;
      if (ses_shape_check(P, ell, rr).agree())
        ++agreeing;
      else if (agreeing + 1 == candidates)
        r.witness("ses_shape", {A.morphism_name(ell), A.morphism_name(rr)});
    }
  r.detail("ses_candidates") = candidates;
  r.verdict("ses_shape_agrees", agreeing == candidates);

  std::ostringstream out;
  out << "class (" << E.size() << "): " << join(r.detail("class")) << "\n";
  out << "torsion class: direct " << (v.torsion.direct ? "yes" : "no") << ", generic "
      << (v.torsion.generic ? "yes" : "no") << "\n";
  out << "rectangular: projections " << (v.direct ? "yes" : "no") << ", generic " << (v.generic ? "yes" : "no")
      << (v.products_exist ? "" : " (no binary products; clause not applicable)") << "\n";
  r.text(out.str());
}

using Handler = std::function<void(const CommandRequest&, Report&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h{
      {"validate", cmd_validate},
      {"product", cmd_product},
      {"check-pretorsion", cmd_check_pretorsion},
      {"check-rectangular", cmd_check_rectangular},
      {"characterize", cmd_characterize},
      {"check-morphism", cmd_check_morphism},
      {"check-pseudoalgebra", cmd_check_pseudoalgebra},
      {"roundtrip", cmd_roundtrip},
      {"check-band", cmd_check_band},
      {"decompose-band", cmd_decompose_band},
      {"enumerate-bands", cmd_enumerate_bands},
      {"check-epiclass", cmd_check_epiclass},
  };
  return h;
}

CommandResult error_result(const CommandRequest& req, const InputError& e) {
  CommandResult r;
  r.outcome = Outcome::InputError;
  r.report = {{"command", req.command},
              {"format_version", kFormatVersion},
              {"inputs", req.inputs},
              {"result", "error"},
              {"error", {{"code", to_string(e.code)}, {"message", e.message}, {"witness", e.witness}}}};
  r.text = "error: " + std::string(to_string(e.code)) + ": " + e.message + "\n";
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, _] : handlers()) n.push_back(k);
    return n;
  }();
  return names;
}

CommandResult run_command(const CommandRequest& req) {
  const Handler* h = nullptr;
  for (const auto& [k, f] : handlers())
    if (k == req.command) h = &f;
  if (!h) return error_result(req, {ErrorCode::InvalidArgument, "unknown command " + req.command, {req.command}});
  auto start = std::chrono::steady_clock::now();
  Report report(req);
  try {
    (*h)(req, report);
  } catch (const InputError& e) {
    return error_result(req, e);
  } catch (const Error& e) {
    report.unsupported(req.command, e);
  } catch (const std::exception& e) {
    return error_result(req, {ErrorCode::Internal, e.what(), {}});
  }
  std::optional<std::int64_t> micros;
  if (req.timing)
    micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return report.finish(micros);
}

}  // namespace rectors
