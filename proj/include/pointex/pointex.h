#ifndef POINTEX_H
#define POINTEX_H

/* C interface to libpointex. Every call that can fail returns a px_status;
 * the message for the most recent failure on the calling thread is
 * available from px_last_error(). Strings returned by the library are owned
 * by the handle they came from. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum px_status {
  PX_OK = 0,
  PX_ERR_NULL = 1,      /* a required pointer argument was NULL */
  PX_ERR_INPUT = 2,     /* malformed input or a failed precondition */
  PX_ERR_INVARIANT = 3, /* internal consistency check failed */
  PX_ERR_RESOURCE = 4,  /* allocation or size limit */
  PX_ERR_INTERNAL = 5
} px_status;

typedef struct px_session px_session;
typedef struct px_result px_result;

const char* px_version(void);
const char* px_last_error(void);

/* A session holds one parsed presentation and the run options. The default
 * degree cap honours the POINTEX_DEGREE_CAP environment variable. */
px_status px_session_from_text(const char* text, px_session** out);
px_status px_session_from_file(const char* path, px_session** out);
void px_session_free(px_session* session);

/* Keys: length, cap, order, side, seed, element, point, max_degree. */
px_status px_set_option(px_session* session, const char* key, const char* value);

/* Canonical presentation text of the session's algebra. */
const char* px_session_presentation(const px_session* session);

/* Number of subcommands and the name of the i-th one. */
int px_subcommand_count(void);
const char* px_subcommand_name(int index);

px_status px_run(px_session* session, const char* subcommand, px_result** out);
const char* px_result_json(const px_result* result);
const char* px_result_text(const px_result* result);
void px_result_free(px_result* result);

#ifdef __cplusplus
}
#endif

#endif
