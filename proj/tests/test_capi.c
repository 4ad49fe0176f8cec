#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "rectors/rectors.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);   \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static const char* path(const char* file) {
  static char buf[1024];
  snprintf(buf, sizeof buf, "%s/%s", RECTORS_DATA_DIR, file);
  return buf;
}

static rectors_report* run(const char* command, const char* input, const char* k1, const char* v1, const char* k2,
                           const char* v2, rectors_status* status) {
  rectors_request* req = rectors_request_new(command);
  rectors_report* rep = NULL;
  rectors_request_add_input(req, input);
  if (k1) rectors_request_set_option(req, k1, v1);
  if (k2) rectors_request_set_option(req, k2, v2);
  rectors_request_set_timing(req, 0);
  *status = rectors_run(req, &rep);
  rectors_request_free(req);
  return rep;
}

static void categories(void) {
  rectors_category* c = NULL;
  uint32_t coll, incl, h, x;
  EXPECT(rectors_category_load(path("p2.fincat"), 0, &c) == RECTORS_OK);
  EXPECT(rectors_category_object_count(c) == 2);
  EXPECT(rectors_category_morphism_count(c) == 5);
  EXPECT(rectors_category_find_morphism(c, "coll", &coll) == RECTORS_OK);
  EXPECT(rectors_category_find_morphism(c, "incl", &incl) == RECTORS_OK);
  EXPECT(rectors_category_compose(c, incl, coll, &h) == RECTORS_OK);
  EXPECT(strcmp(rectors_category_morphism_name(c, h), "const") == 0);
  EXPECT(rectors_category_compose(c, incl, incl, &h) == RECTORS_E_INVALID_ARGUMENT);
  EXPECT(rectors_category_source(c, 99, &x) == RECTORS_E_OUT_OF_RANGE);
  EXPECT(rectors_category_find_morphism(c, "nope", &x) == RECTORS_E_UNKNOWN_ID);
  EXPECT(strstr(rectors_last_error(), "nope") != NULL);
  EXPECT(rectors_category_object_name(c, 5) == NULL);
  rectors_category_free(c);

  c = (rectors_category*)1;
  EXPECT(rectors_category_load(path("absent.fincat"), 0, &c) == RECTORS_E_IO);
  EXPECT(c == NULL);
  EXPECT(rectors_category_load(path("nonassoc.fincat"), 0, &c) == RECTORS_E_NON_ASSOCIATIVE);
  EXPECT(rectors_category_parse("category x\nobject a\nobject a\n", 0, &c) == RECTORS_E_DUPLICATE_ID);
  EXPECT(rectors_category_parse("category x\nobject a\nobject b\n", 1, &c) == RECTORS_E_SIZE_LIMIT);
  EXPECT(rectors_category_load(NULL, 0, &c) == RECTORS_E_INVALID_ARGUMENT);
  rectors_category_free(NULL);
}

static void bands(void) {
  rectors_band* b = NULL;
  uint32_t v;
  EXPECT(rectors_band_load(path("lr22.band"), &b) == RECTORS_OK);
  EXPECT(rectors_band_size(b) == 4);
  EXPECT(rectors_band_mul(b, 1, 2, &v) == RECTORS_OK && v == 0);
  EXPECT(rectors_band_mul(b, 4, 0, &v) == RECTORS_E_OUT_OF_RANGE);
  EXPECT(rectors_band_is_rectangular(b) == 1);
  rectors_band_free(b);
  EXPECT(rectors_band_load(path("semilattice2.band"), &b) == RECTORS_OK);
  EXPECT(rectors_band_is_rectangular(b) == 0);
  rectors_band_free(b);
  EXPECT(rectors_band_load(path("p2.fincat"), &b) == RECTORS_E_PARSE);
}

static void reports(void) {
  rectors_status s;
  char* canon = NULL;
  rectors_report* r = run("check-pretorsion", path("prod22.fincat"), "torsion", "Tset", "free", "Fset", &s);
  EXPECT(s == RECTORS_OK);
  EXPECT(rectors_report_outcome(r) == RECTORS_PASS);
  EXPECT(strstr(rectors_report_text(r), "short exact sequences") != NULL);
  EXPECT(strstr(rectors_report_json(r), "timing_us") == NULL);
  EXPECT(rectors_json_canonical(rectors_report_json(r), &canon) == RECTORS_OK);
  EXPECT(canon && strcmp(canon, rectors_report_json(r)) == 0);
  rectors_string_free(canon);
  rectors_report_free(r);

  r = run("check-band", path("semilattice2.band"), NULL, NULL, NULL, NULL, &s);
  EXPECT(s == RECTORS_OK);
  EXPECT(rectors_report_outcome(r) == RECTORS_FAIL);
  rectors_report_free(r);

  r = run("check-pretorsion", path("prod22.fincat"), "torsion", "Missing", "free", "Fset", &s);
  EXPECT(s == RECTORS_E_UNKNOWN_ID);
  EXPECT(rectors_report_outcome(r) == RECTORS_INPUT_ERROR);
  EXPECT(strstr(rectors_report_json(r), "\"error\"") != NULL);
  rectors_report_free(r);

  r = run("no-such-command", path("p2.fincat"), NULL, NULL, NULL, NULL, &s);
  EXPECT(s == RECTORS_E_INVALID_ARGUMENT);
  rectors_report_free(r);

  EXPECT(rectors_json_canonical("{not json", &canon) == RECTORS_E_PARSE);
  EXPECT(rectors_command_count() == 12);
  EXPECT(strcmp(rectors_command_name(0), "validate") == 0);
  EXPECT(rectors_command_name(12) == NULL);
  EXPECT(strcmp(rectors_status_name(RECTORS_E_IO), "IoError") == 0);
}

int main(void) {
  categories();
  bands();
  reports();
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
