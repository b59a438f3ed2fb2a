#ifndef CRAFTBENCH_C_H
#define CRAFTBENCH_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CRAFTER_OBS_BYTES 12288
#define CRAFTER_NUM_ACTIONS 17

/* Return codes. 0..12 mirror the engine's error kinds. */
enum {
    CRAFTER_OK = 0,
    CRAFTER_INVALID_ACTION_INDEX = 1,
    CRAFTER_STEPPED_AFTER_DONE = 2,
    CRAFTER_RETRY_EXHAUSTED = 3,
    CRAFTER_IO_FAILURE = 4,
    CRAFTER_CONFIG_ERROR = 5,
    CRAFTER_INVALID_RECORD = 6,
    CRAFTER_EMPTY_LOG = 7,
    CRAFTER_RATE_OUT_OF_RANGE = 8,
    CRAFTER_EMPTY_INPUT = 9,
    CRAFTER_NOT_RESET = 10,
    CRAFTER_INVALID_ARGUMENT = 11,
    CRAFTER_INVARIANT_VIOLATION = 12,
    CRAFTER_INVALID_HANDLE = 100,
    CRAFTER_BUFFER_TOO_SMALL = 101,
    CRAFTER_INTERNAL_ERROR = 102
};

typedef struct crafter_env crafter_env;

/* config_path may be NULL for the built-in balance table. */
int crafter_create(uint64_t run_seed, const char *config_path, crafter_env **out);

/* Starts the next episode (indices 0, 1, 2, ...) and writes the first
   observation, CRAFTER_OBS_BYTES bytes of row-major 64x64 RGB. */
int crafter_reset(crafter_env *env, uint8_t *obs);

/* info, when not NULL, receives a 4-byte little-endian length followed by
   that many bytes of UTF-8 JSON; *info_len is set to the total size. If
   info_cap is too small the step still happens, obs/reward/done are filled
   and CRAFTER_BUFFER_TOO_SMALL is returned; fetch the info afterwards with
   crafter_last_info. */
int crafter_step(crafter_env *env, int action, uint8_t *obs, float *reward, uint8_t *done, uint8_t *info,
                 size_t info_cap, size_t *info_len);

/* Info of the most recent reset or step, same encoding as crafter_step. */
int crafter_last_info(crafter_env *env, uint8_t *info, size_t info_cap, size_t *info_len);

/* Accepts NULL. */
int crafter_close(crafter_env *env);

/* Message for the last failing call on this thread; "" if none. */
const char *crafter_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
