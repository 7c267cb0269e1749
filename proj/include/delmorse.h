/* delmorse: Cech, Delaunay, Delaunay-Cech, selective Delaunay and Wrap
 * complexes of weighted point sets, discrete gradients of their radius
 * functions, verified collapse sequences between them, and persistence
 * barcodes.
 *
 * C interface of the shared library: opaque handles plus status codes. All
 * functions return DM_OK on success; on failure dm_last_error() holds a
 * message for the calling thread. Strings returned through char** out
 * parameters are released with dm_string_free().
 */
#ifndef DELMORSE_H
#define DELMORSE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t dm_status;
enum {
    DM_OK = 0,
    DM_ERR_VERIFY = 1,     /* a verification (collapse replay, comparison) failed */
    DM_ERR_PARSE = 2,      /* unreadable file or malformed input */
    DM_ERR_DEGENERATE = 3, /* general position failure within tolerance */
    DM_ERR_INVALID = 4,    /* precondition or argument violation */
    DM_ERR_INTERNAL = 5
};

typedef struct dm_points_s dm_points;
typedef struct dm_complex_s dm_complex;
typedef struct dm_gradient_s dm_gradient;
typedef struct dm_collapse_s dm_collapse;
typedef struct dm_barcode_s dm_barcode;

typedef enum {
    DM_COMPLEX_CECH = 0,
    DM_COMPLEX_DELCECH = 1,
    DM_COMPLEX_DELAUNAY = 2,
    DM_COMPLEX_WRAP = 3,
    DM_COMPLEX_SELECTIVE = 4
} dm_complex_type;

typedef struct {
    double sq_radius_cap; /* squared radius cap; HUGE_VAL for no cap */
    int32_t max_dim;      /* maximal simplex dimension; -1 for no cap */
    int32_t threads;      /* worker threads for construction; 1 by default */
    double eps;           /* on/inside/outside classification tolerance */
    double eps_gp;        /* general position rejection tolerance */
    int32_t skip_gp_check; /* nonzero skips the general position check on build */
} dm_options;

void dm_options_init(dm_options* opt);

const char* dm_last_error(void);
const char* dm_status_name(dm_status status);
void dm_string_free(char* s);

/* ---- point sets ---- */
dm_status dm_points_read(const char* path, dm_points** out);
dm_status dm_points_parse(const char* text, dm_points** out);
dm_status dm_points_write(const dm_points* pts, const char* path);
int32_t dm_points_count(const dm_points* pts);
int32_t dm_points_dim(const dm_points* pts);
dm_status dm_points_perturb(const dm_points* pts, double magnitude, uint64_t seed,
                            dm_points** out);
/* violation_count receives the number of violations; report (optional) a
 * human-readable list. DM_OK even when violations exist. */
dm_status dm_points_check_general_position(const dm_points* pts, double eps_gp,
                                           int32_t* violation_count, char** report);
void dm_points_free(dm_points* pts);

/* ---- filtered complexes ---- */
/* selective/n_selective name the exclusion set E (only for
 * DM_COMPLEX_SELECTIVE); opt may be NULL for defaults. */
dm_status dm_complex_build(const dm_points* pts, dm_complex_type type,
                           const int32_t* selective, int32_t n_selective,
                           const dm_options* opt, dm_complex** out);
dm_status dm_complex_read(const char* path, dm_complex** out);
dm_status dm_complex_write(const dm_complex* cx, const char* path);
int64_t dm_complex_size(const dm_complex* cx);
dm_status dm_complex_value_of(const dm_complex* cx, const int32_t* vertices, int32_t n_vertices,
                              int32_t* found, double* value);
void dm_complex_free(dm_complex* cx);

/* ---- discrete gradients ---- */
dm_status dm_gradient_build(const dm_points* pts, const int32_t* selective, int32_t n_selective,
                            int32_t selective_all, const dm_options* opt, dm_gradient** out);
dm_status dm_gradient_write(const dm_gradient* g, const char* path);
int64_t dm_gradient_interval_count(const dm_gradient* g);
int64_t dm_gradient_critical_count(const dm_gradient* g);
void dm_gradient_free(dm_gradient* g);

/* ---- collapse sequences ---- */
/* Chains the hierarchy stages from `from` to `to` (both in
 * {CECH, DELCECH, DELAUNAY, WRAP}, from upstream of to) and replays the
 * result. Returns DM_ERR_VERIFY with the sequence still in *out when the
 * replay fails. */
dm_status dm_collapse_build(const dm_points* pts, dm_complex_type from, dm_complex_type to,
                            const dm_options* opt, dm_collapse** out);
int64_t dm_collapse_step_count(const dm_collapse* c);
int32_t dm_collapse_verified(const dm_collapse* c);
dm_status dm_collapse_write(const dm_collapse* c, const char* path);
void dm_collapse_free(dm_collapse* c);

/* ---- persistence ---- */
dm_status dm_barcode_compute(const dm_complex* cx, dm_barcode** out);
dm_status dm_barcode_write(const dm_barcode* bc, const char* path);
int64_t dm_barcode_size(const dm_barcode* bc);
/* equal receives 1/0; diff (optional) a description of mismatches. */
dm_status dm_barcode_equal(const dm_barcode* const* barcodes, int32_t count, double tol,
                           int32_t* equal, char** diff);
void dm_barcode_free(dm_barcode* bc);

/* ---- zigzag diagram of two point sets ---- */
/* all_hold receives 1 when every inclusion of the connecting diagram holds and
 * every collapse-marked arrow replays; report receives a textual summary. */
dm_status dm_zigzag_connect(const dm_points* x, const dm_points* y, const dm_options* opt,
                            int32_t* all_hold, char** report);

#ifdef __cplusplus
}
#endif

#endif /* DELMORSE_H */
