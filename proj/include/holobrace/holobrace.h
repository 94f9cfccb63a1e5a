#ifndef HOLOBRACE_H
#define HOLOBRACE_H

#include <stdint.h>

#if defined(HOLOBRACE_BUILDING_LIBRARY)
#define HB_API __attribute__((visibility("default")))
#else
#define HB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every fallible call returns one of these. */
typedef enum hb_status {
  HB_OK = 0,
  HB_INVALID_ARGUMENT = -1,
  HB_TOO_LARGE = -2,
  HB_MISMATCH = -3,
  HB_INTERNAL = -4,
  HB_NULL_POINTER = -5
} hb_status;

/* Variant indices, in catalog order. */
enum {
  HB_CYCLIC = 0,
  HB_DIHEDRAL = 1,
  HB_CPXC2P = 2,
  HB_CPXD2P = 3,
  HB_CPCPC2 = 4
};

typedef struct hb_session hb_session;

/* Library version, "major.minor.patch". */
HB_API const char* hb_version(void);

/* Message of the last failing call on this thread, or "" if none. */
HB_API const char* hb_last_error(void);

/* Opens a session for the odd prime p. Primes above 5 need force != 0. */
HB_API hb_status hb_session_create(unsigned p, int force, hb_session** out);
HB_API void hb_session_destroy(hb_session* session);

/* Renders a command (groups, hgs-table, transitive-table, brace-summary,
   braces, cyclic-type, verify) as "tsv" or "json". additive may be NULL.
   The string is released with hb_free_string. closed_form_match may be NULL. */
HB_API hb_status hb_render(hb_session* session, const char* command, const char* format, const char* additive,
                           char** out, int* closed_form_match);
HB_API void hb_free_string(char* s);

/* |Aut(N)| for the variant index. */
HB_API hb_status hb_aut_order(hb_session* session, int variant, uint64_t* out);

/* Regular subgroups of Hol(N) isomorphic to G. */
HB_API hb_status hb_regular_count(hb_session* session, int g_variant, int n_variant, uint64_t* out);

/* Skew brace classes with additive group N and multiplicative group G. */
HB_API hb_status hb_brace_class_count(hb_session* session, int mult_variant, int add_variant, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif
