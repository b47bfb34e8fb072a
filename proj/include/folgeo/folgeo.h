/* folgeo C API: numerical laboratory for foliated geodesic flows of
 * PSL(2,R) suspensions over closed hyperbolic surfaces.
 *
 * All functions return folgeo_status; outputs are passed back through
 * pointers. Strings returned through char** are heap-allocated and must be
 * released with folgeo_string_free. Representation handles are opaque and
 * released with folgeo_rep_free. On error, folgeo_last_error() returns a
 * thread-local message.
 */
#ifndef FOLGEO_H
#define FOLGEO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum folgeo_status {
    FOLGEO_OK = 0,
    FOLGEO_ERR_INVALID = 1, /* validation error: bad arguments, bad schema */
    FOLGEO_ERR_NUMERIC = 2  /* numerical guard tripped during computation */
} folgeo_status;

typedef struct folgeo_rep folgeo_rep;

const char* folgeo_version(void);
const char* folgeo_last_error(void);
void folgeo_string_free(char* s);

/* representations ---------------------------------------------------- */

/* builtin registry: "bolza", "trivial", "rotation:<2g angles>",
 * "free_quotient[:l1,psi1,l2,psi2]", "twist:<builtin>,<k>" */
folgeo_status folgeo_rep_builtin(const char* spec, folgeo_rep** out);
folgeo_status folgeo_rep_from_json(const char* json_text, folgeo_rep** out);
folgeo_status folgeo_rep_to_json(const folgeo_rep* rep, char** out_text);
void folgeo_rep_free(folgeo_rep* rep);

int folgeo_rep_genus(const folgeo_rep* rep);
double folgeo_rep_relator_residual(const folgeo_rep* rep);
const char* folgeo_rep_label(const folgeo_rep* rep);

/* element-level helpers ------------------------------------------------ */

/* class codes: 0 identity, 1 elliptic, 2 parabolic, 3 hyperbolic */
folgeo_status folgeo_classify(const double mat[4], int* out);
folgeo_status folgeo_translation_length(const double mat[4], double* out);

/* experiments: each returns a JSON or CSV document, byte-identical for a
 * fixed (arguments, seed) pair; include_meta adds a timestamped comment
 * line to CSV outputs ---------------------------------------------------- */

folgeo_status folgeo_euler_number(const folgeo_rep* rep, int* out);

folgeo_status folgeo_spectrum_csv(const folgeo_rep* rho, const folgeo_rep* hol_or_null,
                                  int max_len, int include_meta, char** out_csv);

folgeo_status folgeo_dominate_json(const folgeo_rep* rho, const folgeo_rep* hol, int max_len,
                                   char** out_json);

folgeo_status folgeo_exponent_json(const folgeo_rep* rho, const folgeo_rep* hol, double T,
                                   double dt, unsigned long long seed, int n_seeds,
                                   char** out_json);

folgeo_status folgeo_exponent_series_csv(const folgeo_rep* rho, const folgeo_rep* hol, double T,
                                         double dt, unsigned long long seed, int include_meta,
                                         char** out_csv);

folgeo_status folgeo_srb_json(const folgeo_rep* rho, const folgeo_rep* hol, double T,
                              int n_orbits, int bins, unsigned long long seed, char** out_json);

folgeo_status folgeo_sections_csv(const folgeo_rep* rho, const folgeo_rep* hol, int n_dir,
                                  int n_steps, double step, double t_back, int include_meta,
                                  char** out_csv);

folgeo_status folgeo_pair_json(const folgeo_rep* rho, const folgeo_rep* hol, double T,
                               int max_len, unsigned long long seed, char** out_json);

folgeo_status folgeo_detect_json(const folgeo_rep* hol, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* FOLGEO_H */
