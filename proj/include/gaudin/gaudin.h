/* C interface to the Gaudin toolkit. All heavy objects stay behind the
 * opaque instance handle; results come back as JSON report strings. */
#ifndef GAUDIN_C_API_H
#define GAUDIN_C_API_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gaudin_instance gaudin_instance;

typedef enum {
    GAUDIN_OK = 0,
    GAUDIN_VERIFY_FAIL = 1,
    GAUDIN_INPUT_ERROR = 2,
    GAUDIN_INTERNAL_ERROR = 3
} gaudin_status;

/* Parse an instance from JSON text or a file path. On success *out owns the
 * handle; on failure *err (when non-NULL) receives a message to be released
 * with gaudin_free_string. */
gaudin_status gaudin_instance_parse(const char* json_text, gaudin_instance** out, char** err);
gaudin_status gaudin_instance_parse_file(const char* path, gaudin_instance** out, char** err);
void gaudin_instance_free(gaudin_instance* inst);

/* Canonical JSON form of the instance (round-trips through parse). */
gaudin_status gaudin_instance_to_json(const gaudin_instance* inst, char** json_out);

/* Run one command: bae-solve | bethe-build | verify | screen-check | gr |
 * hc-image. mode_override may be "exact", "float" or NULL. The JSON report
 * is written to *report_json (always set when the return code is OK,
 * VERIFY_FAIL or INPUT_ERROR); *summary receives a short human-readable
 * text when non-NULL. with_timings != 0 adds wall-clock timings to the
 * report (off by default so exact-mode reports are byte-stable). */
gaudin_status gaudin_run(const gaudin_instance* inst, const char* command,
                         const char* mode_override, int with_timings, char** report_json,
                         char** summary);

void gaudin_free_string(char* s);
const char* gaudin_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GAUDIN_C_API_H */
