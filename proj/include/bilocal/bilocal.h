#ifndef BILOCAL_BILOCAL_H
#define BILOCAL_BILOCAL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BILOCAL_BUILDING_LIBRARY)
#define BL_API __attribute__((visibility("default")))
#else
#define BL_API
#endif

typedef enum bl_status {
  BL_OK = 0,
  BL_CHECK_FAILED = 1,     /* computation ran; a mathematical check failed */
  BL_INVALID_ARGUMENT = 2, /* bad context, label or option */
  BL_INFEASIBLE = 3,       /* truncation too small for the request */
  BL_UNSUPPORTED = 4,      /* not defined for this field kind */
  BL_INTERNAL = 5
} bl_status;

typedef enum bl_kind { BL_COMPLEX = 0, BL_REAL = 1 } bl_kind;

typedef struct bl_context bl_context;
typedef struct bl_result bl_result;

/* Contexts larger than N=4, M=4, P=6 are refused unless unsafe_large != 0. */
BL_API bl_status bl_context_create(bl_kind kind, int N, int M, int P, int unsafe_large, bl_context** out);
BL_API void bl_context_destroy(bl_context* ctx);

/* Every command stores its result in *out, including when a check fails
   (status BL_CHECK_FAILED). On other errors *out is NULL and bl_last_error()
   explains. */
BL_API bl_status bl_verify(const bl_context* ctx, int fault, bl_result** out);

/* cutoff is a rational string ("2", "7/2"); D <= 0 means energies 1, 2, 3, ... */
BL_API bl_status bl_classify(const bl_context* ctx, const char* cutoff, int D, bl_result** out);

/* Rows as comma-separated lengths ("2,1"); "" is the empty diagram. minus is
   ignored for real contexts. */
BL_API bl_status bl_gram(const bl_context* ctx, const char* plus, const char* minus, int level, bl_result** out);

/* group is 'U' or 'O'. */
BL_API bl_status bl_map_irreps(char group, int N, int cap, bl_result** out);
BL_API bl_status bl_spectrum(int D, int count, bl_result** out);

/* Strings stay valid until bl_result_destroy. */
BL_API const char* bl_result_json(const bl_result* r);
BL_API const char* bl_result_table(const bl_result* r);
BL_API int bl_result_passed(const bl_result* r);
BL_API void bl_result_destroy(bl_result* r);

/* Message of the last failing call on this thread, "" if none. */
BL_API const char* bl_last_error(void);
BL_API const char* bl_version(void);

#ifdef __cplusplus
}
#endif

#endif
