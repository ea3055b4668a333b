#ifndef ORETOWER_H
#define ORETOWER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes.
 */
typedef enum OtStatus {
  OT_STATUS_OK = 0,
  OT_STATUS_NULL_ARGUMENT = 1,
  OT_STATUS_INVALID_UTF8 = 2,
  OT_STATUS_SYNTAX = 3,
  OT_STATUS_UNBOUND_NAME = 4,
  OT_STATUS_NOT_INVERTIBLE = 5,
  /*
   Operands belong to different algebras or forms.
   */
  OT_STATUS_MISMATCH = 6,
  /*
   Constructor arguments or an algebra failed validation.
   */
  OT_STATUS_INVALID_ALGEBRA = 7,
  OT_STATUS_INVALID = 8,
  /*
   A task file failed to parse; see the last error for the location.
   */
  OT_STATUS_TASK = 9,
  OT_STATUS_PANIC = 10,
} OtStatus;

/*
 An algebra from the zoo together with its alternate forms and named elements.
 */
typedef struct OtAlgebra OtAlgebra;

/*
 An element in normal form, tied to the tower it lives in.
 */
typedef struct OtElement OtElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failure on this thread, or null. Valid until the next failing call.
 */
const char *ot_last_error(void);

/*
 Library version as a static string.
 */
const char *ot_version(void);

/*
 Frees a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void ot_string_free(char *s);

/*
 Builds an algebra from a constructor string such as `Gf(c^2)` or `Mq2(q)`.

 # Safety
 `spec` must be a nul-terminated string; `out` must be writable.
 */
enum OtStatus ot_algebra_new(const char *spec, struct OtAlgebra **out);

/*
 # Safety
 `a` must be null or a handle from [`ot_algebra_new`] that has not been freed.
 */
void ot_algebra_free(struct OtAlgebra *a);

/*
 Reduces the defining relations of every form; `*passed` is 1 when all vanish.

 # Safety
 `a` must be a live algebra handle; `passed` must be writable.
 */
enum OtStatus ot_algebra_self_check(const struct OtAlgebra *a, int *passed);

/*
 Human-readable description of the main tower (one line per skew variable).

 # Safety
 `a` must be a live algebra handle; `out` must be writable.
 */
enum OtStatus ot_algebra_describe(const struct OtAlgebra *a, char **out);

/*
 Parses an expression in a form of the algebra (`form` null or empty for the main form).

 # Safety
 `a` must be a live algebra handle; `form` null or a string; `expr` a string; `out` writable.
 */
enum OtStatus ot_element_parse(const struct OtAlgebra *a,
                               const char *form,
                               const char *expr,
                               struct OtElement **out);

/*
 A named element of the algebra, e.g. `z` or `detq`.

 # Safety
 `a` must be a live algebra handle; `name` a string; `out` writable.
 */
enum OtStatus ot_element_named(const struct OtAlgebra *a, const char *name, struct OtElement **out);

/*
 # Safety
 `e` must be null or a live element handle.
 */
void ot_element_free(struct OtElement *e);

/*
 `*out = x + y`.

 # Safety
 `x`, `y` must be live element handles; `out` writable.
 */
enum OtStatus ot_element_add(const struct OtElement *x,
                             const struct OtElement *y,
                             struct OtElement **out);

/*
 `*out = x - y`.

 # Safety
 As for [`ot_element_add`].
 */
enum OtStatus ot_element_sub(const struct OtElement *x,
                             const struct OtElement *y,
                             struct OtElement **out);

/*
 `*out = x * y` in normal form.

 # Safety
 As for [`ot_element_add`].
 */
enum OtStatus ot_element_mul(const struct OtElement *x,
                             const struct OtElement *y,
                             struct OtElement **out);

/*
 `*out = x*y - y*x`.

 # Safety
 As for [`ot_element_add`].
 */
enum OtStatus ot_element_commutator(const struct OtElement *x,
                                    const struct OtElement *y,
                                    struct OtElement **out);

/*
 `*result` = 1 if the element is zero.

 # Safety
 `e` must be a live element handle; `result` writable.
 */
enum OtStatus ot_element_is_zero(const struct OtElement *e, int *result);

/*
 `*result` = 1 if the element commutes with every generator.

 # Safety
 `e` must be a live element handle; `result` writable.
 */
enum OtStatus ot_element_is_central(const struct OtElement *e, int *result);

/*
 Normal form as a parseable string; free with [`ot_string_free`].

 # Safety
 `e` must be a live element handle; `out` writable.
 */
enum OtStatus ot_element_to_string(const struct OtElement *e, char **out);

/*
 Runs a task file given as text. On success `*report` holds the plain-text
 report and `*exit_code` is 0 (all passed), 1 (a check failed) or 2 (a check errored).

 # Safety
 `task` must be a string; `report` and `exit_code` writable.
 */
enum OtStatus ot_run_task(const char *task, uint64_t seed, char **report, int *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORETOWER_H */
