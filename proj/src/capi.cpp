#include "rectors/rectors.h"

#include <cstring>
#include <memory>
#include <new>

#include "rectors/bands.hpp"
#include "rectors/commands.hpp"
#include "rectors/text_format.hpp"

using namespace rectors;

struct rectors_category {
  FinCat cat;
};
struct rectors_band {
  BandTable table;
};
struct rectors_request {
  CommandRequest req;
};
struct rectors_report {
  CommandResult result;
  std::string json;
};

namespace {

thread_local std::string last_error;

rectors_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return RECTORS_E_PARSE;
    case ErrorCode::Io: return RECTORS_E_IO;
    case ErrorCode::DuplicateId: return RECTORS_E_DUPLICATE_ID;
    case ErrorCode::UnknownId: return RECTORS_E_UNKNOWN_ID;
    case ErrorCode::WrongHomSet: return RECTORS_E_WRONG_HOM_SET;
    case ErrorCode::MissingComposite: return RECTORS_E_MISSING_COMPOSITE;
    case ErrorCode::NonAssociative: return RECTORS_E_NON_ASSOCIATIVE;
    case ErrorCode::IdentityLawViolation: return RECTORS_E_IDENTITY_LAW;
    case ErrorCode::SizeLimitExceeded:
    case ErrorCode::SizeTooLarge: return RECTORS_E_SIZE_LIMIT;
    case ErrorCode::InvalidArgument: return RECTORS_E_INVALID_ARGUMENT;
    case ErrorCode::Unsupported: return RECTORS_E_UNSUPPORTED;
    case ErrorCode::Internal: return RECTORS_E_INTERNAL;
    default: return RECTORS_E_UNSUPPORTED;
  }
}

rectors_status fail(rectors_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
rectors_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RECTORS_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RECTORS_E_INTERNAL, e.what());
  }
}

Limits limits_for(size_t max_objects) {
  Limits l;
  if (max_objects) l.max_objects = max_objects;
  return l;
}

}  // namespace

extern "C" {

const char* rectors_version(void) { return "0.1.0"; }

const char* rectors_status_name(rectors_status s) {
  switch (s) {
    case RECTORS_OK: return "ok";
    case RECTORS_E_PARSE: return "ParseError";
    case RECTORS_E_IO: return "IoError";
    case RECTORS_E_DUPLICATE_ID: return "DuplicateId";
    case RECTORS_E_UNKNOWN_ID: return "UnknownId";
    case RECTORS_E_WRONG_HOM_SET: return "WrongHomSet";
    case RECTORS_E_MISSING_COMPOSITE: return "MissingComposite";
    case RECTORS_E_NON_ASSOCIATIVE: return "NonAssociative";
    case RECTORS_E_IDENTITY_LAW: return "IdentityLawViolation";
    case RECTORS_E_SIZE_LIMIT: return "SizeLimitExceeded";
    case RECTORS_E_INVALID_ARGUMENT: return "InvalidArgument";
    case RECTORS_E_UNSUPPORTED: return "Unsupported";
    case RECTORS_E_OUT_OF_RANGE: return "OutOfRange";
    case RECTORS_E_INTERNAL: return "Internal";
  }
  return "unknown";
}

const char* rectors_last_error(void) { return last_error.c_str(); }

rectors_status rectors_category_load(const char* path, size_t max_objects, rectors_category** out) {
  if (!path || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new rectors_category{load_fincat(path, limits_for(max_objects))};
    return RECTORS_OK;
  });
}

rectors_status rectors_category_parse(const char* text, size_t max_objects, rectors_category** out) {
  if (!text || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new rectors_category{read_fincat(text, limits_for(max_objects))};
    return RECTORS_OK;
  });
}

void rectors_category_free(rectors_category* c) { delete c; }

size_t rectors_category_object_count(const rectors_category* c) { return c ? c->cat.object_count() : 0; }
size_t rectors_category_morphism_count(const rectors_category* c) { return c ? c->cat.morphism_count() : 0; }

const char* rectors_category_object_name(const rectors_category* c, uint32_t x) {
  if (!c || x >= c->cat.object_count()) return nullptr;
  return c->cat.object_name(x).c_str();
}

const char* rectors_category_morphism_name(const rectors_category* c, uint32_t f) {
  if (!c || f >= c->cat.morphism_count()) return nullptr;
  return c->cat.morphism_name(f).c_str();
}

rectors_status rectors_category_find_morphism(const rectors_category* c, const char* name, uint32_t* out) {
  if (!c || !name || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  auto f = c->cat.find_morphism(name);
  if (!f) return fail(RECTORS_E_UNKNOWN_ID, std::string("unknown morphism ") + name);
  *out = *f;
  return RECTORS_OK;
}

rectors_status rectors_category_source(const rectors_category* c, uint32_t f, uint32_t* out) {
  if (!c || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  if (f >= c->cat.morphism_count()) return fail(RECTORS_E_OUT_OF_RANGE, "morphism id out of range");
  *out = c->cat.src(f);
  return RECTORS_OK;
}

rectors_status rectors_category_target(const rectors_category* c, uint32_t f, uint32_t* out) {
  if (!c || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  if (f >= c->cat.morphism_count()) return fail(RECTORS_E_OUT_OF_RANGE, "morphism id out of range");
  *out = c->cat.tgt(f);
  return RECTORS_OK;
}

rectors_status rectors_category_compose(const rectors_category* c, uint32_t g, uint32_t f, uint32_t* out) {
  if (!c || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  if (g >= c->cat.morphism_count() || f >= c->cat.morphism_count())
    return fail(RECTORS_E_OUT_OF_RANGE, "morphism id out of range");
  if (!c->cat.composable(g, f)) return fail(RECTORS_E_INVALID_ARGUMENT, "not composable");
  *out = c->cat.compose(g, f);
  return RECTORS_OK;
}

rectors_status rectors_band_load(const char* path, rectors_band** out) {
  if (!path || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new rectors_band{load_band(path)};
    return RECTORS_OK;
  });
}

void rectors_band_free(rectors_band* b) { delete b; }
uint32_t rectors_band_size(const rectors_band* b) { return b ? b->table.n : 0; }

rectors_status rectors_band_mul(const rectors_band* b, uint32_t x, uint32_t y, uint32_t* out) {
  if (!b || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  if (x >= b->table.n || y >= b->table.n) return fail(RECTORS_E_OUT_OF_RANGE, "element out of range");
  *out = b->table.mul(x, y);
  return RECTORS_OK;
}

int rectors_band_is_rectangular(const rectors_band* b) {
  if (!b) return 0;
  try {
    return check_band(b->table).ok ? 1 : 0;
  } catch (const Error& e) {
    last_error = e.what();
    return 0;
  }
}

size_t rectors_command_count(void) { return command_names().size(); }
const char* rectors_command_name(size_t i) {
  return i < command_names().size() ? command_names()[i].c_str() : nullptr;
}

rectors_request* rectors_request_new(const char* command) {
  if (!command) return nullptr;
  auto* r = new (std::nothrow) rectors_request;
  if (r) r->req.command = command;
  return r;
}

void rectors_request_free(rectors_request* r) { delete r; }

rectors_status rectors_request_add_input(rectors_request* r, const char* path) {
  if (!r || !path) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  r->req.inputs.emplace_back(path);
  return RECTORS_OK;
}

rectors_status rectors_request_set_option(rectors_request* r, const char* key, const char* value) {
  if (!r || !key || !value) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  r->req.options[key] = value;
  return RECTORS_OK;
}

void rectors_request_set_timing(rectors_request* r, int enabled) {
  if (r) r->req.timing = enabled != 0;
}

void rectors_request_set_max_objects(rectors_request* r, size_t n) {
  if (r && n) r->req.limits.max_objects = n;
}

rectors_status rectors_run(const rectors_request* r, rectors_report** out) {
  if (!r || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto rep = std::make_unique<rectors_report>();
    rep->result = run_command(r->req);
    rep->json = rep->result.json();
    rectors_status s = RECTORS_OK;
    if (rep->result.outcome == Outcome::InputError) {
      const auto& err = rep->result.report["error"];
      s = RECTORS_E_INVALID_ARGUMENT;
      for (int c = 0; c <= int(ErrorCode::Internal); ++c)
        if (err["code"] == to_string(ErrorCode(c))) s = status_of(ErrorCode(c));
      last_error = err["message"].get<std::string>();
    }
    *out = rep.release();
    return s;
  });
}

void rectors_report_free(rectors_report* r) { delete r; }

rectors_outcome rectors_report_outcome(const rectors_report* r) {
  return r ? rectors_outcome(int(r->result.outcome)) : RECTORS_INPUT_ERROR;
}

const char* rectors_report_text(const rectors_report* r) { return r ? r->result.text.c_str() : nullptr; }
const char* rectors_report_json(const rectors_report* r) { return r ? r->json.c_str() : nullptr; }

rectors_status rectors_json_canonical(const char* json, char** out) {
  if (!json || !out) return fail(RECTORS_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    std::string s = nlohmann::json::parse(json).dump(2) + "\n";
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) return fail(RECTORS_E_INTERNAL, "out of memory");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return RECTORS_OK;
  } catch (const nlohmann::json::exception& e) {
    return fail(RECTORS_E_PARSE, e.what());
  }
}

void rectors_string_free(char* s) { std::free(s); }

}  // extern "C"
