/* C interface to the normality toolkit.
 *
 * Every function returns an nmi_status; on failure nmi_last_error() holds a
 * message for the calling thread until its next call into the library.
 * Objects are opaque and owned by the caller, who releases them with the
 * matching *_free function. Strings returned by the library stay valid until
 * the owning object is freed.
 */
#ifndef NMI_NMI_H
#define NMI_NMI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NMI_API __declspec(dllexport)
#else
#define NMI_API __attribute__((visibility("default")))
#endif

/* Values double as process exit codes of the nmi command. */
typedef enum nmi_status {
    NMI_OK = 0,
    NMI_ERROR_INTERNAL = 1,
    NMI_ERROR_PARSE = 2,
    NMI_ERROR_BUDGET = 3,
    NMI_ERROR_UNSUPPORTED = 4,
    NMI_ERROR_ARGUMENT = 5
} nmi_status;

typedef enum nmi_format { NMI_FORMAT_TEXT = 0, NMI_FORMAT_KV = 1 } nmi_format;

typedef struct nmi_options nmi_options;
typedef struct nmi_report nmi_report;
typedef struct nmi_ideal nmi_ideal;

NMI_API const char* nmi_version(void);
NMI_API const char* nmi_last_error(void);
NMI_API const char* nmi_status_name(nmi_status status);

/* Options. Keys: "route", "n", "monomial", "direction", "falsify-box",
 * "budget-points", "budget-seconds", "timing" ("0"/"1"). */
NMI_API nmi_status nmi_options_new(nmi_options** out);
NMI_API nmi_status nmi_options_set(nmi_options* options, const char* key, const char* value);
NMI_API void nmi_options_free(nmi_options* options);

/* Runs a command ("normal", "membership", "closure", "hilbert",
 * "graph-report", "irp", "covers", "hochster") on the text of its input
 * file. options may be NULL. */
NMI_API nmi_status nmi_run(const char* command, const char* input, const nmi_options* options, nmi_report** out);
NMI_API const char* nmi_report_render(nmi_report* report, nmi_format format);
/* Value stored under key, or NULL. */
NMI_API const char* nmi_report_get(const nmi_report* report, const char* key);
NMI_API void nmi_report_free(nmi_report* report);

/* Monomial ideals in the ideal file format. */
NMI_API nmi_status nmi_ideal_parse(const char* text, nmi_ideal** out);
NMI_API size_t nmi_ideal_num_vars(const nmi_ideal* ideal);
NMI_API size_t nmi_ideal_num_gens(const nmi_ideal* ideal);
/* Exponent of generator i; writes num_vars entries to exponents. */
NMI_API nmi_status nmi_ideal_generator(const nmi_ideal* ideal, size_t i, int* exponents);
/* *normal is set to 1 or 0 by the Rees-cone criterion. budget_seconds <= 0
 * means unlimited. */
NMI_API nmi_status nmi_ideal_is_normal(const nmi_ideal* ideal, double budget_seconds, int* normal);
/* *member is set to 1 when t^a lies in the integral closure of I^n. */
NMI_API nmi_status nmi_ideal_closure_member(const nmi_ideal* ideal, const int* exponents, int n, int* member);
NMI_API void nmi_ideal_free(nmi_ideal* ideal);

#ifdef __cplusplus
}
#endif

#endif
