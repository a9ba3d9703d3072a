#include "pointex/pointex.h"

#include <cstdlib>
#include <new>
#include <string>

#include "pointex/pipeline.hpp"

struct px_session {
  pointex::PresentationFile file;
  pointex::RunConfig config;
  std::string canonical;
};

struct px_result {
  pointex::RunOutput output;
};

namespace {

thread_local std::string last_error;

px_status fail(px_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
px_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return PX_OK;
  } catch (const pointex::InputError& e) {
    return fail(PX_ERR_INPUT, e.what());
  } catch (const pointex::InvariantError& e) {
    return fail(PX_ERR_INVARIANT, e.what());
  } catch (const pointex::ResourceError& e) {
    return fail(PX_ERR_RESOURCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PX_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(PX_ERR_INTERNAL, e.what());
  }
}

std::size_t parse_count(const char* key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value[0] == '-')
    throw pointex::InputError(std::string(key) + " must be a non-negative integer, got '" + value + "'");
  return static_cast<std::size_t>(v);
}

px_status make_session(pointex::PresentationFile file, px_session** out) {
  auto* s = new px_session{std::move(file), {}, {}};
  s->canonical = pointex::serialize_presentation(s->file.presentation);
  if (const char* cap = std::getenv("POINTEX_DEGREE_CAP"); cap && *cap) {
    try {
      s->config.cap = parse_count("POINTEX_DEGREE_CAP", cap);
    } catch (...) {
      delete s;
      throw;
    }
  }
  *out = s;
  return PX_OK;
}

}  // namespace

extern "C" {

const char* px_version(void) { return pointex::kToolVersion; }

const char* px_last_error(void) { return last_error.c_str(); }

px_status px_session_from_text(const char* text, px_session** out) {
  if (!text || !out) return fail(PX_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] { make_session(pointex::parse_presentation_file(text), out); });
}

px_status px_session_from_file(const char* path, px_session** out) {
  if (!path || !out) return fail(PX_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] { make_session(pointex::read_presentation_file(path), out); });
}

void px_session_free(px_session* session) { delete session; }

px_status px_set_option(px_session* session, const char* key, const char* value) {
  if (!session || !key || !value) return fail(PX_ERR_NULL, "null argument");
  return guarded([&] {
    const std::string k = key, v = value;
    pointex::RunConfig& c = session->config;
    if (k == "length") c.length = parse_count(key, v);
    else if (k == "cap") c.cap = parse_count(key, v);
    else if (k == "max_degree") c.max_degree = parse_count(key, v);
    else if (k == "seed") c.seed = parse_count(key, v);
    else if (k == "order") c.order = pointex::MonomialOrder::parse(v);
    else if (k == "element") c.element = v;
    else if (k == "point") c.point = v;
    else if (k == "side") {
      if (v != "right" && v != "left" && v != "both") throw pointex::InputError("side must be right, left or both");
      c.side = v;
    } else {
      throw pointex::InputError("unknown option '" + k + "'");
    }
  });
}

const char* px_session_presentation(const px_session* session) {
  return session ? session->canonical.c_str() : nullptr;
}

int px_subcommand_count(void) { return static_cast<int>(pointex::subcommands().size()); }

const char* px_subcommand_name(int index) {
  const auto& names = pointex::subcommands();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<std::size_t>(index)].c_str();
}

px_status px_run(px_session* session, const char* subcommand, px_result** out) {
  if (!session || !subcommand || !out) return fail(PX_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    pointex::RunOutput r = pointex::run_pipeline(session->file, subcommand, session->config);
    *out = new px_result{std::move(r)};
  });
}

const char* px_result_json(const px_result* result) { return result ? result->output.json.c_str() : nullptr; }

const char* px_result_text(const px_result* result) { return result ? result->output.text.c_str() : nullptr; }

void px_result_free(px_result* result) { delete result; }

}  // extern "C"
