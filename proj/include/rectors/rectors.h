#ifndef RECTORS_H
#define RECTORS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define RECTORS_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define RECTORS_API __attribute__((visibility("default")))
#else
#  define RECTORS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rectors_status {
  RECTORS_OK = 0,
  RECTORS_E_PARSE,
  RECTORS_E_IO,
  RECTORS_E_DUPLICATE_ID,
  RECTORS_E_UNKNOWN_ID,
  RECTORS_E_WRONG_HOM_SET,
  RECTORS_E_MISSING_COMPOSITE,
  RECTORS_E_NON_ASSOCIATIVE,
  RECTORS_E_IDENTITY_LAW,
  RECTORS_E_SIZE_LIMIT,
  RECTORS_E_INVALID_ARGUMENT,
  RECTORS_E_UNSUPPORTED,
  RECTORS_E_OUT_OF_RANGE,
  RECTORS_E_INTERNAL
} rectors_status;

/* Exit-code convention shared with the command-line tool. */
typedef enum rectors_outcome {
  RECTORS_PASS = 0,
  RECTORS_FAIL = 1,
  RECTORS_INPUT_ERROR = 2
} rectors_outcome;

typedef struct rectors_category rectors_category;
typedef struct rectors_band rectors_band;
typedef struct rectors_request rectors_request;
typedef struct rectors_report rectors_report;

RECTORS_API const char* rectors_version(void);
RECTORS_API const char* rectors_status_name(rectors_status s);
/* Message of the last failing call on this thread; never NULL. */
RECTORS_API const char* rectors_last_error(void);

/* max_objects = 0 keeps the default limit. */
RECTORS_API rectors_status rectors_category_load(const char* path, size_t max_objects, rectors_category** out);
RECTORS_API rectors_status rectors_category_parse(const char* text, size_t max_objects, rectors_category** out);
RECTORS_API void rectors_category_free(rectors_category* c);
RECTORS_API size_t rectors_category_object_count(const rectors_category* c);
RECTORS_API size_t rectors_category_morphism_count(const rectors_category* c);
RECTORS_API const char* rectors_category_object_name(const rectors_category* c, uint32_t x);
RECTORS_API const char* rectors_category_morphism_name(const rectors_category* c, uint32_t f);
RECTORS_API rectors_status rectors_category_find_morphism(const rectors_category* c, const char* name, uint32_t* out);
RECTORS_API rectors_status rectors_category_source(const rectors_category* c, uint32_t f, uint32_t* out);
RECTORS_API rectors_status rectors_category_target(const rectors_category* c, uint32_t f, uint32_t* out);
/* *out = g . f */
RECTORS_API rectors_status rectors_category_compose(const rectors_category* c, uint32_t g, uint32_t f, uint32_t* out);

RECTORS_API rectors_status rectors_band_load(const char* path, rectors_band** out);
RECTORS_API void rectors_band_free(rectors_band* b);
RECTORS_API uint32_t rectors_band_size(const rectors_band* b);
RECTORS_API rectors_status rectors_band_mul(const rectors_band* b, uint32_t x, uint32_t y, uint32_t* out);
/* 1 when associative, idempotent and xyz = xz; 0 otherwise. */
RECTORS_API int rectors_band_is_rectangular(const rectors_band* b);

RECTORS_API size_t rectors_command_count(void);
RECTORS_API const char* rectors_command_name(size_t i);

RECTORS_API rectors_request* rectors_request_new(const char* command);
RECTORS_API void rectors_request_free(rectors_request* r);
RECTORS_API rectors_status rectors_request_add_input(rectors_request* r, const char* path);
/* Keys: torsion, free, class, mode, morphism. */
RECTORS_API rectors_status rectors_request_set_option(rectors_request* r, const char* key, const char* value);
RECTORS_API void rectors_request_set_timing(rectors_request* r, int enabled);
RECTORS_API void rectors_request_set_max_objects(rectors_request* r, size_t n);

/* Always yields a report unless out is NULL or allocation fails. */
RECTORS_API rectors_status rectors_run(const rectors_request* r, rectors_report** out);
RECTORS_API void rectors_report_free(rectors_report* r);
RECTORS_API rectors_outcome rectors_report_outcome(const rectors_report* r);
RECTORS_API const char* rectors_report_text(const rectors_report* r);
RECTORS_API const char* rectors_report_json(const rectors_report* r);

/* Parses a JSON report and re-emits it in canonical form; caller frees with rectors_string_free. */
RECTORS_API rectors_status rectors_json_canonical(const char* json, char** out);
RECTORS_API void rectors_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
