#include <stdio.h>
#include <string.h>
#include "oretower.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            const char *e = ot_last_error();                         \
            fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,   \
                    e ? e : "no error");                             \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    OtAlgebra *g = NULL;
    CHECK(ot_algebra_new("Gf(c^2)", &g) == OT_STATUS_OK);

    OtElement *z = NULL, *a = NULL, *zc = NULL;
    CHECK(ot_element_named(g, "z", &z) == OT_STATUS_OK);
    CHECK(ot_element_parse(g, NULL, "a", &a) == OT_STATUS_OK);
    CHECK(ot_element_commutator(z, a, &zc) == OT_STATUS_OK);
    int zero = 0, central = 0;
    CHECK(ot_element_is_zero(zc, &zero) == OT_STATUS_OK && zero == 1);
    CHECK(ot_element_is_central(z, &central) == OT_STATUS_OK && central == 1);

    char *s = NULL;
    CHECK(ot_element_to_string(z, &s) == OT_STATUS_OK);
    printf("z = %s\n", s);
    ot_string_free(s);

    OtAlgebra *bad = NULL;
    CHECK(ot_algebra_new("Gf(c)", &bad) == OT_STATUS_INVALID && bad == NULL);
    CHECK(ot_last_error() != NULL);

    ot_element_free(zc);
    ot_element_free(a);
    ot_element_free(z);
    ot_algebra_free(g);
    return 0;
}
