#ifndef DIEUDONNE_H
#define DIEUDONNE_H

/* C interface to the mod-p Dieudonne module library.
 *
 * Every function returns a dd_status. On failure dd_last_error() describes
 * the problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are heap-allocated and must be released
 * with dd_string_free; modules with dd_module_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(DD_BUILDING)
#define DD_API __attribute__((visibility("default")))
#else
#define DD_API
#endif

typedef enum dd_status {
  DD_OK = 0,
  DD_USAGE = 1,
  DD_VALIDATION = 2,
  DD_INFEASIBLE = 3,
  DD_INTERNAL = 4
} dd_status;

typedef struct dd_module dd_module;

typedef struct dd_invariants {
  size_t g;
  size_t f;
  size_t a;
  size_t u;
  int has_s; /* 0 when s is undefined for the module */
  size_t s;
} dd_invariants;

DD_API const char* dd_last_error(void);
DD_API void dd_string_free(char* s);
DD_API void dd_module_free(dd_module* m);

DD_API dd_status dd_module_from_json(const char* json, dd_module** out);
DD_API dd_status dd_module_to_json(const dd_module* m, char** out);
DD_API dd_status dd_module_dim(const dd_module* m, size_t* out);

/* Constructors. nu is "0,1,1" (',' or ';'); word is over {F, V}. */
DD_API dd_status dd_module_from_eo(const char* nu, unsigned p, dd_module** out);
DD_API dd_status dd_module_from_word(const char* word, unsigned p, dd_module** out);
DD_API dd_status dd_module_i11(unsigned p, dd_module** out);
DD_API dd_status dd_module_ord1(unsigned p, dd_module** out);
DD_API dd_status dd_module_jrs(size_t r, size_t s, unsigned p, dd_module** out);
DD_API dd_status dd_module_hrs(size_t r, size_t s, unsigned p, dd_module** out);
DD_API dd_status dd_module_profile(size_t g, size_t f, size_t a, size_t s, unsigned p, dd_module** out);
DD_API dd_status dd_module_supersingular(size_t g, size_t s, unsigned p, dd_module** out);
DD_API dd_status dd_module_direct_sum(const dd_module* a, const dd_module* b, dd_module** out);
DD_API dd_status dd_module_dual(const dd_module* m, dd_module** out);
/* Attaches a compatible nondegenerate form; DD_VALIDATION if none is found. */
DD_API dd_status dd_module_polarize(const dd_module* m, dd_module** out);

/* Analyses. */
DD_API dd_status dd_module_invariants(const dd_module* m, dd_invariants* out);
DD_API dd_status dd_invariants_json(const dd_module* m, char** out);
DD_API dd_status dd_decompose_json(const dd_module* m, char** out);
/* Writes the report; returns DD_VALIDATION when the module is not BT1. */
DD_API dd_status dd_check_json(const dd_module* m, char** out);
DD_API dd_status dd_eo_type_json(const dd_module* m, char** out);

/* Tables and curves. format is "json" or "csv"; filter may be NULL. */
DD_API dd_status dd_eo_list(size_t g, const char* filter, const char* format, char** out);
DD_API dd_status dd_eo_count(size_t g, unsigned long long* out);
DD_API dd_status dd_atlas_csv(size_t g_max, unsigned jobs, char** out);
DD_API dd_status dd_feasibility_json(size_t g, char** out);
DD_API dd_status dd_hyp2_json(const char* poles, int with_oracle, char** out);
DD_API dd_status dd_hermitian_json(unsigned p, unsigned n, char** out);

#ifdef __cplusplus
}
#endif

#endif
