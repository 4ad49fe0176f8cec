#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rectors/rectors.h"

namespace {

struct Sub {
  CLI::App* app = nullptr;
  std::vector<std::string> inputs;
  std::map<std::string, std::string> options;
};

void add_theory_options(Sub& s) {
  s.app->add_option("--torsion", s.options["torsion"], "object subset holding T")->required();
  s.app->add_option("--free", s.options["free"], "object subset holding F")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide pretorsion-theory, band and epimorphism-class properties of finite categories"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, no_timing = false;
  std::size_t max_objects = 0;
  app.add_flag("--json", json, "machine-readable report");
  app.add_flag("--no-timing", no_timing, "omit timings so reports are byte-identical across runs");
  app.add_option("--max-objects", max_objects, "object limit for loaded and constructed categories");

  std::map<std::string, Sub> subs;
  auto sub = [&](const std::string& name, const std::string& help, const std::string& what) -> Sub& {
    Sub& s = subs[name];
    s.app = app.add_subcommand(name, help);
    s.app->add_option(what, s.inputs, what)->required();
    return s;
  };

  sub("validate", "check the category laws of a .fincat file", "catfile");
  {
    Sub& s = sub("product", "product of two or more categories, as .fincat", "catfiles");
    s.app->get_option("catfiles")->expected(2, -1);
  }
  add_theory_options(sub("check-pretorsion", "check (T1) and (T2) and print the chosen sequences", "catfile"));
  add_theory_options(sub("check-rectangular", "decide whether the canonical functor is an equivalence", "catfile"));
  add_theory_options(sub("characterize", "rectangularity consequences and classification", "catfile"));
  {
    Sub& s = sub("check-morphism", "classify morphisms (mono, epi, iso, split)", "catfile");
    s.app->add_option("--morphism", s.options["morphism"], "a single morphism; default all");
  }
  add_theory_options(sub("check-pseudoalgebra", "build the pseudo-algebra of a rectangular theory and check coherence", "catfile"));
  add_theory_options(sub("roundtrip", "theory -> algebra -> theory and back", "catfile"));
  sub("check-band", "band laws and the monad-algebra correspondence", "bandfile");
  sub("decompose-band", "left-zero x right-zero decomposition", "bandfile");
  sub("enumerate-bands", "all rectangular bands on n <= 3 elements", "n");
  {
    Sub& s = sub("check-epiclass", "torsion and rectangularity of a class of epimorphisms", "catfile");
    s.app->add_option("--class", s.options["class"], "morphism subset E");
    s.app->add_option("--mode", s.options["mode"], "projections|split|regular|explicit|minimal")
        ->check(CLI::IsMember({"projections", "split", "regular", "explicit", "minimal"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return RECTORS_INPUT_ERROR;
  }

  for (auto& [name, s] : subs) {
    if (!s.app || !s.app->parsed()) continue;
    rectors_request* req = rectors_request_new(name.c_str());
    for (const auto& in : s.inputs) rectors_request_add_input(req, in.c_str());
    for (const auto& [k, v] : s.options)
      if (!v.empty()) rectors_request_set_option(req, k.c_str(), v.c_str());
    rectors_request_set_timing(req, no_timing ? 0 : 1);
    rectors_request_set_max_objects(req, max_objects);
    rectors_report* rep = nullptr;
    rectors_run(req, &rep);
    rectors_request_free(req);
    if (!rep) {
      std::fprintf(stderr, "error: %s\n", rectors_last_error());
      return RECTORS_INPUT_ERROR;
    }
    rectors_outcome out = rectors_report_outcome(rep);
    if (json)
      std::fputs(rectors_report_json(rep), stdout);
    else
      std::fputs(rectors_report_text(rep), out == RECTORS_INPUT_ERROR ? stderr : stdout);
    rectors_report_free(rep);
    return out;
  }
  return RECTORS_INPUT_ERROR;
}
