#ifndef CRYOEO_H
#define CRYOEO_H

/*
 * C interface to the cryogenic electro-optic transducer simulator.
 *
 * Usage pattern:
 *
 *   cryoeo_run_t run = NULL;
 *   if (cryoeo_preset("fig4a", &run) != CRYOEO_OK) { ... }
 *   cryoeo_set_option_str(run, "output_dir", "out/fig4a");
 *   char summary[256];
 *   if (cryoeo_execute(run, summary, sizeof summary) != CRYOEO_OK)
 *     fprintf(stderr, "%s\n", cryoeo_last_error(run));
 *   cryoeo_run_free(run);
 *
 * Every call returns a status code; the matching human-readable message is
 * available from cryoeo_last_error().  Handles are not thread-safe; use
 * one handle per thread.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cryoeo_run* cryoeo_run_t;

typedef enum cryoeo_status {
  CRYOEO_OK = 0,
  CRYOEO_INVALID_ARGUMENT = 1,
  CRYOEO_PARSE_ERROR = 2,
  CRYOEO_MESH_ERROR = 3,
  CRYOEO_NEWTON_DIVERGENCE = 4,
  CRYOEO_NON_POSITIVE_TEMPERATURE = 5,
  CRYOEO_END_TIME_BEFORE_START = 6,
  CRYOEO_NOT_SATURATED = 7,
  CRYOEO_INVALID_DOMAIN = 8,
  CRYOEO_EMPTY_REGION = 9,
  CRYOEO_IO_ERROR = 10,
  CRYOEO_INTERNAL = 11
} cryoeo_status;

/* Create a run from configuration text, a configuration file, or a named
 * figure preset (fig2a, fig3a..fig3d, fig4a..fig4d).  On success *out owns
 * a new handle; on failure *out is NULL and cryoeo_last_error(NULL) holds
 * the message. */
cryoeo_status cryoeo_config_parse(const char* text, cryoeo_run_t* out);
cryoeo_status cryoeo_config_parse_file(const char* path, cryoeo_run_t* out);
cryoeo_status cryoeo_preset(const char* name, cryoeo_run_t* out);

/* Layer further configuration onto an existing run (preset + overrides). */
cryoeo_status cryoeo_apply_config_file(cryoeo_run_t run, const char* path);

/* Select the scenario to execute (simulate-thermal, sweep-power,
 * sweep-coupling, sweep-thickness, optimize, or a preset name). */
cryoeo_status cryoeo_set_scenario(cryoeo_run_t run, const char* scenario);

/* Options: int "jobs"; string "output_dir"; flags "svg", "dump_mesh". */
cryoeo_status cryoeo_set_option_int(cryoeo_run_t run, const char* name,
                                    int value);
cryoeo_status cryoeo_set_option_str(cryoeo_run_t run, const char* name,
                                    const char* value);
cryoeo_status cryoeo_set_option_flag(cryoeo_run_t run, const char* name,
                                     int value);

/* Execute the configured scenario.  The one-line summary is copied into
 * summary_buf (always NUL-terminated) when the buffer is non-NULL. */
cryoeo_status cryoeo_execute(cryoeo_run_t run, char* summary_buf,
                             size_t buflen);

/* Files written by the last successful execute. */
int cryoeo_artifact_count(cryoeo_run_t run);
const char* cryoeo_artifact_path(cryoeo_run_t run, int index);

/* Message of the last failure on this handle; pass NULL for failures of
 * the creation functions.  The pointer stays valid until the next call on
 * the same handle (or thread, for NULL). */
const char* cryoeo_last_error(cryoeo_run_t run);

/* Short fixed description of a status code. */
const char* cryoeo_status_message(cryoeo_status status);

const char* cryoeo_version(void);

void cryoeo_run_free(cryoeo_run_t run);

#ifdef __cplusplus
}
#endif

#endif /* CRYOEO_H */
