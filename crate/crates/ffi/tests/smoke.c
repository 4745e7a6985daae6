#include <stdio.h>
#include "bondboson.h"

int main(void) {
    BbSpectrum *table = NULL;
    BbBlock block;
    double worst = 0.0;
    bool pass = false;
    size_t i;

    if (bb_spectrum_ssh(6, 1.0, 0.1, 1e-10, &table) != BB_STATUS_OK) {
        fprintf(stderr, "error: %s\n", bb_last_error_message());
        return 1;
    }
    for (i = 0; i < bb_spectrum_block_count(table); i++) {
        if (bb_spectrum_block(table, i, &block) == BB_STATUS_OK) {
            printf("%zu %.6f %.6f\n", i, block.numeric[0], block.numeric[3]);
        }
    }
    bb_spectrum_summary(table, &worst, &pass);
    printf("pass=%d max=%g version=%s\n", pass, worst, bb_version());
    bb_spectrum_free(table);
    return pass ? 0 : 1;
}
