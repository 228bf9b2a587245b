#include <stdio.h>
#include <string.h>

#include "vizbound.h"

#define EXPECT(cond)                                              \
    do {                                                          \
        if (!(cond)) {                                            \
            fprintf(stderr, "line %d: %s\n", __LINE__, #cond);   \
            return 1;                                             \
        }                                                         \
    } while (0)

int main(void) {
    VzGraph *p4 = NULL;
    EXPECT(vz_graph_from_spec("path:4", &p4) == VZ_STATUS_OK);
    EXPECT(vz_graph_vertex_count(p4) == 4);

    size_t gamma = 0;
    size_t witness[4] = {0};
    EXPECT(vz_domination_number(p4, 0, &gamma, witness, 4) == VZ_STATUS_OK);
    EXPECT(gamma == 2);

    VzPairReport r;
    EXPECT(vz_check_pair(p4, p4, 0, &r) == VZ_STATUS_OK);
    EXPECT(r.gamma_product == 4 && r.bound_new == 3 && r.trace_ok && !r.violation);

    char *g6 = NULL;
    EXPECT(vz_graph_to_graph6(p4, &g6) == VZ_STATUS_OK);
    EXPECT(strcmp(g6, "Ch") == 0);
    vz_string_free(g6);

    VzGraph *bad = NULL;
    EXPECT(vz_graph_from_graph6("?!", &bad) == VZ_STATUS_INVALID_INPUT);
    EXPECT(strlen(vz_last_error()) > 0);

    vz_graph_free(p4);
    puts("ok");
    return 0;
}
