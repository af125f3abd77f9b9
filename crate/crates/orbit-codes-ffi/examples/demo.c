/* Minimal consumer of the C ABI: builds F_2^10, constructs the mixed-family
 * code with l = 2, and prints its weight distribution and verdict.
 *
 * Build (from the workspace root, after `cargo build -p orbit-codes-ffi`):
 *   cc crates/orbit-codes-ffi/examples/demo.c \
 *      -Icrates/orbit-codes-ffi/include \
 *      target/debug/liborbit_codes_ffi.a -lpthread -lm -o demo
 */
#include <stdio.h>

#include "orbit_codes.h"

int main(void) {
    OcField *field = NULL;
    if (oc_field_build(2, 1, 10, &field) != OcStatus_Ok) {
        fprintf(stderr, "field construction failed\n");
        return 1;
    }
    printf("field size: %llu\n", (unsigned long long)oc_field_size(field));

    OcSubspace *s = NULL;
    if (oc_mixed_q2_code(field, 5, 2, &s) != OcStatus_Ok) {
        fprintf(stderr, "construction failed\n");
        oc_field_free(field);
        return 1;
    }

    uint64_t counts[16] = {0};
    OcWeights meta;
    if (oc_weight_distribution(s, counts, 16, &meta) != OcStatus_Ok) {
        fprintf(stderr, "weight distribution failed\n");
        oc_subspace_free(s);
        oc_field_free(field);
        return 1;
    }

    printf("k = %u, orbit size = %llu, stabilizer degree = %u\n", meta.k,
           (unsigned long long)meta.orbit_size, meta.stab_degree);
    printf("counts:");
    for (uint32_t i = 0; i <= meta.k; i++) {
        printf(" %llu", (unsigned long long)counts[i]);
    }
    printf("\nverdict: ");
    if (meta.rfws_r < 0) {
        printf("not r-FWS\n");
    } else if (meta.rfws_r == 0) {
        printf("FWS\n");
    } else {
        printf("%d-FWS\n", meta.rfws_r);
    }

    oc_subspace_free(s);
    oc_field_free(field);
    return 0;
}
