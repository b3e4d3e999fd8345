/* C interface to the asymmetric hypergraph workbench.
 *
 * Every function returning asym_status leaves a thread-local message for
 * asym_last_error() on failure. Strings handed out through char** are
 * malloc'd and released with asym_string_free. Handles are released with
 * their matching *_free function; passing NULL to a free function is a no-op.
 */
#ifndef ASYM_H
#define ASYM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ASYM_API __declspec(dllexport)
#else
#define ASYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asym_status {
    ASYM_OK = 0,
    ASYM_ERR_INVALID_ARGUMENT = 1,
    ASYM_ERR_PARSE = 2,
    ASYM_ERR_GUARD = 3,
    ASYM_ERR_INTERNAL = 4
} asym_status;

typedef enum asym_property {
    ASYM_PROP_ASYMMETRIC = 0,
    ASYM_PROP_MINIMAL_ASYMMETRIC = 1,
    ASYM_PROP_STRONGLY_MINIMAL = 2,
    ASYM_PROP_MINIMAL_INVOLUTION_FREE = 3
} asym_property;

typedef enum asym_mode {
    ASYM_MODE_AUTO = 0,
    ASYM_MODE_EXHAUSTIVE = 1,
    ASYM_MODE_SAMPLED = 2
} asym_mode;

typedef enum asym_strategy {
    ASYM_STRATEGY_LABELED = 0,
    ASYM_STRATEGY_AUGMENT = 1
} asym_strategy;

typedef struct asym_hypergraph asym_hypergraph;
typedef struct asym_relation asym_relation;
typedef struct asym_group asym_group;
typedef struct asym_report asym_report;
typedef struct asym_outcome asym_outcome;

typedef struct asym_verify_options {
    asym_mode mode;
    uint64_t samples;
    int has_seed;
    uint64_t seed;
    int stratified;
    int workers; /* 0: all hardware threads */
} asym_verify_options;

ASYM_API const char* asym_version(void);
ASYM_API const char* asym_last_error(void);
ASYM_API void asym_string_free(char* s);
ASYM_API void asym_verify_options_init(asym_verify_options* opt);

/* Hypergraphs */
ASYM_API asym_status asym_hypergraph_parse(const char* hgf, asym_hypergraph** out);
/* Edge i is edges[offsets[i] .. offsets[i+1]); offsets has m+1 entries. k = 0 infers the tag. */
ASYM_API asym_status asym_hypergraph_create(int n, int k, const int* edges, const size_t* offsets, size_t m,
                                            asym_hypergraph** out);
ASYM_API void asym_hypergraph_free(asym_hypergraph* h);
ASYM_API int asym_hypergraph_order(const asym_hypergraph* h);
ASYM_API size_t asym_hypergraph_edge_count(const asym_hypergraph* h);
ASYM_API asym_status asym_hypergraph_to_hgf(const asym_hypergraph* h, char** out);
/* Label table (`index name` lines); vertex indices when the graph carries none. */
ASYM_API asym_status asym_hypergraph_labels(const asym_hypergraph* h, char** out);
ASYM_API asym_status asym_hypergraph_degrees(const asym_hypergraph* h, int* out);
ASYM_API asym_status asym_complement(const asym_hypergraph* h, asym_hypergraph** out);
ASYM_API asym_status asym_canonical_form(const asym_hypergraph* h, asym_hypergraph** out);

/* Generators. family: gkt, gkt-circ, gk, gk-star, tilde-gk, gks, figure2, asym-witness. */
ASYM_API asym_status asym_generate(const char* family, int k, int t, int s, int n, asym_hypergraph** out);
/* family: r3t, hcirc, single-arc. */
ASYM_API asym_status asym_generate_relation(const char* family, int k, int t, asym_relation** out);
/* 1 for relational family names, 0 for hypergraph families, -1 when unknown. */
ASYM_API int asym_family_is_relational(const char* family);

/* Automorphism groups. stabilize may be NULL when count is 0. */
ASYM_API asym_status asym_automorphisms(const asym_hypergraph* h, const int* stabilize, size_t count, asym_group** out);
ASYM_API asym_status asym_automorphisms_brute_force(const asym_hypergraph* h, const int* stabilize, size_t count,
                                                    asym_group** out);
ASYM_API void asym_group_free(asym_group* g);
ASYM_API int asym_group_degree(const asym_group* g);
/* Decimal group order. */
ASYM_API asym_status asym_group_order(const asym_group* g, char** out);
ASYM_API size_t asym_group_generator_count(const asym_group* g);
/* Writes degree() images. */
ASYM_API asym_status asym_group_generator(const asym_group* g, size_t i, int* images);
ASYM_API int asym_group_has_involution(const asym_group* g);
ASYM_API asym_status asym_group_involution(const asym_group* g, int* images);

/* Verification. */
ASYM_API asym_status asym_verify(const asym_hypergraph* h, asym_property p, const asym_verify_options* opt,
                                 asym_report** out);
ASYM_API void asym_report_free(asym_report* r);
ASYM_API int asym_report_holds(const asym_report* r);
ASYM_API asym_status asym_report_to_text(const asym_report* r, char** out);

/* Relations */
ASYM_API asym_status asym_relation_parse(const char* rel, asym_relation** out);
ASYM_API void asym_relation_free(asym_relation* r);
ASYM_API int asym_relation_order(const asym_relation* r);
ASYM_API size_t asym_relation_tuple_count(const asym_relation* r);
ASYM_API asym_status asym_relation_to_rel(const asym_relation* r, char** out);
ASYM_API asym_status asym_relation_automorphisms(const asym_relation* r, asym_group** out);
ASYM_API asym_status asym_relation_multiplicity(const asym_relation* r, int* out);
ASYM_API asym_status asym_relation_verify_minimal(const asym_relation* r, const asym_verify_options* opt,
                                                  asym_report** out);
/* *critical = 1 or 0; *witness = vertex whose deletion stays asymmetric, or -1. */
ASYM_API asym_status asym_relation_critical(const asym_relation* r, int* critical, int* witness);

/* Search */
/* *order = 0 when no asymmetric k-graph exists up to n_max; *witness NULL then. */
ASYM_API asym_status asym_search_min_order(int k, int n_max, int workers, int* order, asym_hypergraph** witness);
/* checkpoint may be NULL. *counterexample is NULL when every instance is symmetric. */
ASYM_API asym_status asym_search_all_symmetric(int k, int n, int workers, const char* checkpoint, int* all_symmetric,
                                               uint64_t* scanned, uint64_t* swap_settled, uint64_t* complete,
                                               asym_hypergraph** counterexample);
ASYM_API asym_status asym_search_enumerate(int k, int n, asym_strategy strategy, int keep_all, int workers,
                                           asym_outcome** out);
ASYM_API asym_status asym_search_minimal(int k, int n, int workers, asym_outcome** out);
ASYM_API asym_status asym_search_minimal_not_strong(int k, int n, int workers, asym_outcome** out);
ASYM_API void asym_outcome_free(asym_outcome* o);
ASYM_API void asym_outcome_counts(const asym_outcome* o, uint64_t* total_labeled, uint64_t* iso_classes,
                                  uint64_t* asymmetric_classes);
ASYM_API size_t asym_outcome_witness_count(const asym_outcome* o);
/* Witnesses as one HGF stream separated by `---` lines. */
ASYM_API asym_status asym_outcome_witnesses(const asym_outcome* o, char** out);

#ifdef __cplusplus
}
#endif

#endif
