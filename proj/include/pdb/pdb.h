/* pdb.h -- C interface to the Parikh-de-Bruijn library.
 *
 * Every call returns a pdb_status. On failure, pdb_last_error() describes the
 * problem for the calling thread. Results are opaque handles owning a
 * rendered text (JSON, DOT or a table) and a verdict; free them with
 * pdb_result_free. Words are passed as strings: letters a, b, ... for
 * sigma <= 26, comma separated letter indices otherwise. Vector lists use
 * the "(3,0,0),(0,3,0)" syntax.
 */

#ifndef PDB_PDB_H
#define PDB_PDB_H

#include <stddef.h>
#include <stdint.h>

#if defined(PDB_BUILDING_LIBRARY)
#define PDB_API __attribute__((visibility("default")))
#else
#define PDB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdb_status
{
    PDB_OK = 0,
    PDB_ERR_INVALID_INPUT = 1,
    PDB_ERR_CAPACITY = 2,
    PDB_ERR_UNSUPPORTED = 3,
    PDB_ERR_NOT_REALIZABLE = 4,
    PDB_ERR_INTERNAL = 5
} pdb_status;

typedef enum pdb_format
{
    PDB_FORMAT_JSON = 0,
    PDB_FORMAT_DOT = 1,
    PDB_FORMAT_TABLE = 2
} pdb_format;

typedef enum pdb_target
{
    PDB_TARGET_SHORTEST_COVERING = 0,
    PDB_TARGET_PDB_ONLY = 1,
    PDB_TARGET_EXISTENCE_AT_LENGTH = 2
} pdb_target;

typedef enum pdb_prune
{
    PDB_PRUNE_DUPLICATE_WINDOW = 0,
    PDB_PRUNE_UNREACHABLE_VECTORS = 1,
    PDB_PRUNE_LETTER_BUDGET = 2,
    PDB_PRUNE_DISTANCE = 3
} pdb_prune;

typedef struct pdb_result pdb_result;
typedef struct pdb_grid pdb_grid;
typedef struct pdb_search_config pdb_search_config;

/* Receives one JSON object per checkpoint. */
typedef void (*pdb_progress_fn)(const char *json_line, void *user);

PDB_API const char *pdb_version(void);
PDB_API const char *pdb_last_error(void);
PDB_API const char *pdb_status_name(pdb_status status);

PDB_API const char *pdb_result_text(const pdb_result *result);
/* 1 for covering / realizable / found / exists, 0 otherwise. */
PDB_API int pdb_result_positive(const pdb_result *result);
PDB_API void pdb_result_free(pdb_result *result);

/* Cover report of `word`. Positive iff covering. */
PDB_API pdb_status pdb_verify(const char *word, uint64_t k, size_t sigma, pdb_format format,
                              pdb_result **out);

/* Walk spelled by `word`, with labels and the (k+1)/(k-1)-order incidences
 * of each step. Always positive. */
PDB_API pdb_status pdb_walk_of_word(const char *word, uint64_t k, size_t sigma,
                                    pdb_result **out);

/* Realizability of a vertex sequence. Positive iff it spells a word. */
PDB_API pdb_status pdb_walk_of_vertices(const char *vertices, pdb_result **out);

/* Smallest word spelled by a vertex sequence; PDB_ERR_NOT_REALIZABLE if none. */
PDB_API pdb_status pdb_spell(const char *vertices, pdb_result **out);

/* Realizability of a set of order-k vectors. Positive iff realizable. */
PDB_API pdb_status pdb_realize(const char *vectors, uint64_t k, size_t sigma, pdb_result **out);

/* Length bounds and known verdict. Positive unless PdB words are known
 * not to exist. */
PDB_API pdb_status pdb_bounds(uint64_t k, size_t sigma, pdb_result **out);

/* Every k for which `word` is k-covering. Positive iff non-empty. */
PDB_API pdb_status pdb_covset(const char *word, size_t sigma, pdb_result **out);

/* family: "binary_pdb", "k2_eulerian" or "kcover_not_k1". */
PDB_API pdb_status pdb_construct(const char *family, uint64_t k, size_t sigma,
                                 pdb_format format, pdb_result **out);

/* All PdB words up to reversal and relabeling. Positive iff any exist. */
PDB_API pdb_status pdb_enumerate_pdb(uint64_t k, size_t sigma, int force, unsigned threads,
                                     pdb_result **out);

/* node_budget 0 means unlimited. */
PDB_API pdb_status pdb_mincov(uint64_t k, size_t sigma, uint64_t max_len, unsigned threads,
                              uint64_t node_budget, pdb_result **out);

PDB_API pdb_status pdb_grid_create(uint64_t k, size_t sigma, pdb_grid **out);
PDB_API void pdb_grid_free(pdb_grid *grid);
PDB_API uint64_t pdb_grid_vertex_count(const pdb_grid *grid);
PDB_API uint64_t pdb_grid_edge_count(const pdb_grid *grid);
PDB_API uint64_t pdb_grid_bow_count(const pdb_grid *grid);
/* JSON or DOT. */
PDB_API pdb_status pdb_grid_render(const pdb_grid *grid, pdb_format format, pdb_result **out);

PDB_API pdb_status pdb_search_config_create(uint64_t k, size_t sigma, pdb_search_config **out);
PDB_API void pdb_search_config_free(pdb_search_config *cfg);
PDB_API pdb_status pdb_search_set_target(pdb_search_config *cfg, pdb_target target);
PDB_API pdb_status pdb_search_set_length(pdb_search_config *cfg, uint64_t length);
PDB_API pdb_status pdb_search_set_max_len(pdb_search_config *cfg, uint64_t max_len);
PDB_API pdb_status pdb_search_set_threads(pdb_search_config *cfg, unsigned threads);
/* 0 means unlimited. */
PDB_API pdb_status pdb_search_set_node_budget(pdb_search_config *cfg, uint64_t budget);
PDB_API pdb_status pdb_search_set_split_depth(pdb_search_config *cfg, size_t depth);
PDB_API pdb_status pdb_search_set_prune(pdb_search_config *cfg, pdb_prune rule, int enabled);
PDB_API pdb_status pdb_search_set_progress(pdb_search_config *cfg, pdb_progress_fn fn,
                                           void *user, uint64_t interval);
/* Positive iff a witness was found. */
PDB_API pdb_status pdb_search_run(const pdb_search_config *cfg, pdb_format format,
                                  pdb_result **out);

#ifdef __cplusplus
}
#endif

#endif
