/*
 * rearr — planning and simulation library for rearranging stochastically
 * loaded optical-tweezer atom arrays into defect-free blocks.
 *
 * C interface over the C++ core: opaque handles, integer status codes, and
 * caller-freed strings, so the planner can be driven from C, Python ctypes,
 * LabVIEW, or anything else that speaks a C ABI. All functions return
 * REARR_OK (0) on success; on failure they return a nonzero status and leave
 * a message retrievable with rearr_last_error() on the calling thread.
 */

#ifndef REARR_H
#define REARR_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(REARR_BUILD)
#    define REARR_API __declspec(dllexport)
#  else
#    define REARR_API __declspec(dllimport)
#  endif
#else
#  define REARR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rearr_status {
    REARR_OK = 0,
    REARR_ERR_INVALID_ARGUMENT = 1, /* bad config key/value, precondition violation */
    REARR_ERR_PARSE = 2,            /* malformed config, board, CSV, or schedule text */
    REARR_ERR_RUNTIME = 3,          /* internal failure */
    REARR_ERR_NULL = 4              /* a required pointer argument was NULL */
} rearr_status;

/* Message describing the last failure on this thread; never NULL. */
REARR_API const char* rearr_last_error(void);

REARR_API const char* rearr_version(void);

/* Frees any char* returned through an out-parameter of this API. */
REARR_API void rearr_string_free(char* s);

/* ---- run configuration ------------------------------------------------ */

typedef struct rearr_config rearr_config;

/* New configuration with library defaults (L=14, p=0.5, default reservoir,
 * full parallelism, 10000 trials, seed 1). */
REARR_API rearr_config* rearr_config_new(void);
REARR_API void rearr_config_free(rearr_config* cfg);

/* Sets one key; keys match the config-file format (L, p, reservoir, lprime,
 * protocol, continuous_release, trials, seed, threads, timings, t1_us,
 * t2_us, trap_um, speed_um_per_ms, sweep_axis, sweep_values, out_dir,
 * trials_csv, stats_csv, schedule_json, save_board). */
REARR_API int rearr_config_set(rearr_config* cfg, const char* key, const char* value);

/* Applies a config-file body (key=value lines, '#' comments) on top of the
 * current contents. */
REARR_API int rearr_config_parse(rearr_config* cfg, const char* text);

/* Serializes every key; feeding the text back through rearr_config_parse
 * reproduces an equivalent configuration. */
REARR_API int rearr_config_dump(const rearr_config* cfg, char** out_text);

/* ---- results ----------------------------------------------------------- */

/* A report is a set of named text sections produced by a run:
 *   "summary"       one-line digest
 *   "trials_csv"    per-trial rows
 *   "stats_csv"     aggregated row(s), sweep reports add '# fit' footers
 *   "schedule_json" move schedule (when requested / planning a board)
 *   "board"         initial board snapshot (when requested)
 *   "final_board"   final board snapshot (board planning only)
 */
typedef struct rearr_report rearr_report;

REARR_API void rearr_report_free(rearr_report* rep);

/* Borrowed pointer, valid until the report is freed; NULL when the section
 * is absent. */
REARR_API const char* rearr_report_get(const rearr_report* rep, const char* section);

/* ---- operations --------------------------------------------------------- */

/* Monte Carlo run of `trials` seeded trials at one configuration. */
REARR_API int rearr_run(const rearr_config* cfg, rearr_report** out_report);

/* Sweep over sweep_values (target sites N, or L' when sweep_axis=lprime);
 * one stats row per grid point plus fit footers. */
REARR_API int rearr_sweep(const rearr_config* cfg, rearr_report** out_report);

/* Plans the two stages on a fixed board snapshot ('0'/'1' rows) instead of a
 * stochastic load; the report carries schedule_json and final_board. */
REARR_API int rearr_plan_board(const rearr_config* cfg, const char* board_text,
                               rearr_report** out_report);

/* Bernoulli(p) board snapshot for the configuration's geometry and the given
 * seed. */
REARR_API int rearr_make_board(const rearr_config* cfg, uint64_t seed, char** out_board_text);

/* Text rendering of a board snapshot: filled/empty dots with the centered
 * target_len x target_len block bracketed. */
REARR_API int rearr_render_board(const char* board_text, int target_len, char** out_text);

/* Replays an exported schedule against a board snapshot; fails if any move
 * collides. Returns the final board snapshot. */
REARR_API int rearr_replay_schedule(const char* schedule_json, const char* board_text,
                                    char** out_final_board_text);

/* Refits stored stats-CSV columns. model: "linsqrt" (y = a*x + b*sqrt(x)),
 * "power" (y = a*x^b), or "expdecay" (y = a*exp(-b*x)). x_column/y_column
 * name CSV headers; '# ' footer lines in the input are ignored. Returns a
 * '# fit ...' line. */
REARR_API int rearr_fit_csv(const char* csv_text, const char* model, const char* x_column,
                            const char* y_column, char** out_fit_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* REARR_H */
