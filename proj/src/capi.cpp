#include "holobrace/holobrace.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "holobrace/report.hpp"

struct hb_session {
  holobrace::Session impl;
};

namespace {

thread_local std::string last_error;

hb_status fail(hb_status code, std::string message) {
  last_error = std::move(message);
  return code;
}

hb_status translate(const holobrace::Error& e) {
  using holobrace::ErrorKind;
  switch (e.kind()) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotOrder2p2:
    case ErrorKind::DegreeMismatch:
      return fail(HB_INVALID_ARGUMENT, e.what());
    case ErrorKind::TooLarge:
      return fail(HB_TOO_LARGE, e.what());
    case ErrorKind::MismatchAgainstClosedForm:
    case ErrorKind::NonIntegral:
    case ErrorKind::UnmatchedFamily:
      return fail(HB_MISMATCH, e.what());
    default:
      return fail(HB_INTERNAL, e.what());
  }
}

template <class F>
hb_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const holobrace::Error& e) {
    return translate(e);
  } catch (const std::bad_alloc&) {
    return fail(HB_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(HB_INTERNAL, e.what());
  } catch (...) {
    return fail(HB_INTERNAL, "unknown exception");
  }
}

bool valid_variant(int v) { return v >= 0 && v < 5; }

holobrace::Variant2p2 variant_at(int v) { return holobrace::kAllVariants[v]; }

}  // namespace

extern "C" {

const char* hb_version(void) { return "1.0.0"; }

const char* hb_last_error(void) { return last_error.c_str(); }

hb_status hb_session_create(unsigned p, int force, hb_session** out) {
  if (!out) return fail(HB_NULL_POINTER, "out is null");
  *out = nullptr;
  return guarded([&] {
    *out = new hb_session{holobrace::Session(p, force != 0)};
    return HB_OK;
  });
}

void hb_session_destroy(hb_session* session) { delete session; }

hb_status hb_render(hb_session* session, const char* command, const char* format, const char* additive, char** out,
                    int* closed_form_match) {
  if (!session || !command || !out) return fail(HB_NULL_POINTER, "session, command and out are required");
  *out = nullptr;
  return guarded([&] {
    const std::string fmt = format ? format : "tsv";
    if (fmt != "tsv" && fmt != "json") return fail(HB_INVALID_ARGUMENT, "format must be tsv or json");
    const auto table = holobrace::render_command(session->impl, command, additive ? additive : "");
    const std::string text = fmt == "json" ? table.to_json() : table.to_tsv();
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) return fail(HB_TOO_LARGE, "out of memory");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    if (closed_form_match) *closed_form_match = table.closed_form_match ? 1 : 0;
    return HB_OK;
  });
}

void hb_free_string(char* s) { std::free(s); }

hb_status hb_aut_order(hb_session* session, int variant, uint64_t* out) {
  if (!session || !out) return fail(HB_NULL_POINTER, "session and out are required");
  if (!valid_variant(variant)) return fail(HB_INVALID_ARGUMENT, "variant index out of range");
  return guarded([&] {
    *out = session->impl.holomorph(variant_at(variant)).auts().size();
    return HB_OK;
  });
}

hb_status hb_regular_count(hb_session* session, int g_variant, int n_variant, uint64_t* out) {
  if (!session || !out) return fail(HB_NULL_POINTER, "session and out are required");
  if (!valid_variant(g_variant) || !valid_variant(n_variant))
    return fail(HB_INVALID_ARGUMENT, "variant index out of range");
  return guarded([&] {
    uint64_t n = 0;
    for (const auto& r : session->impl.regular(variant_at(n_variant)))
      n += r.iso_type.variant == variant_at(g_variant);
    *out = n;
    return HB_OK;
  });
}

hb_status hb_brace_class_count(hb_session* session, int mult_variant, int add_variant, uint64_t* out) {
  if (!session || !out) return fail(HB_NULL_POINTER, "session and out are required");
  if (!valid_variant(mult_variant) || !valid_variant(add_variant))
    return fail(HB_INVALID_ARGUMENT, "variant index out of range");
  return guarded([&] {
    uint64_t n = 0;
    for (const auto& c : session->impl.braces(variant_at(add_variant)))
      n += c.invariants.multiplicative_type.variant == variant_at(mult_variant);
    *out = n;
    return HB_OK;
  });
}

}  // extern "C"
