#ifndef RBX_RBX_H
#define RBX_RBX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define RBX_API __attribute__((visibility("default")))
#else
#define RBX_API
#endif

typedef enum rbx_status
{
	RBX_OK = 0,
	RBX_CHECK_FAILED = 1,    /* run completed, at least one check failed */
	RBX_CONFIG_ERROR = 2,    /* bad flag, value, config file or model choice */
	RBX_RUNTIME_ERROR = 3,   /* precondition or domain violation while running */
	RBX_HELP = 4,            /* --help given; rbx_last_error() holds the text */
	RBX_IO_ERROR = 5,        /* report could not be written */
	RBX_INVALID_ARGUMENT = 6 /* null handle or index out of range */
} rbx_status;

typedef struct rbx_config rbx_config;
typedef struct rbx_report rbx_report;

RBX_API const char *rbx_version(void);

/* Message of the last non-OK status on this thread, or "". */
RBX_API const char *rbx_last_error(void);

RBX_API rbx_config *rbx_config_new(void);
RBX_API void rbx_config_free(rbx_config *cfg);

/* Parses verify flags; argv[0] is the subcommand name. Replaces *cfg. */
RBX_API rbx_status rbx_config_parse_args(rbx_config *cfg, int argc,
                                         const char *const *argv);

/* Sets one key as spelled in config files, e.g. "bs-arity" or "weight". */
RBX_API rbx_status rbx_config_set(rbx_config *cfg, const char *key,
                                  const char *value);

/* Runs the configured suite. On RBX_OK or RBX_CHECK_FAILED *out receives a
   report owned by the caller; otherwise *out is set to NULL. */
RBX_API rbx_status rbx_run(const rbx_config *cfg, rbx_report **out);

RBX_API void rbx_report_free(rbx_report *report);

RBX_API int rbx_report_passed(const rbx_report *report);
RBX_API int rbx_report_failed(const rbx_report *report);
RBX_API int64_t rbx_report_elapsed_ms(const rbx_report *report);
RBX_API size_t rbx_report_check_count(const rbx_report *report);

/* Accessors return NULL or -1 on a bad handle or index. Strings stay valid
   until the report is freed. */
RBX_API const char *rbx_report_check_name(const rbx_report *report,
                                          size_t index);
RBX_API int rbx_report_check_passed(const rbx_report *report, size_t index);
/* NULL when the check passed. */
RBX_API const char *rbx_report_check_counterexample(const rbx_report *report,
                                                    size_t index);

/* Renders as "text" or "json" into a new string freed with rbx_string_free. */
RBX_API rbx_status rbx_report_render(const rbx_report *report,
                                     const char *format, char **out);
RBX_API void rbx_string_free(char *s);

/* Writes in the configured format to the configured output (stdout if
   unset). */
RBX_API rbx_status rbx_report_write(const rbx_report *report,
                                    const rbx_config *cfg);

#ifdef __cplusplus
}
#endif

#endif
