/* rrpricing.h - C API for the reusable-resource pricing library.
 *
 * All computation lives behind opaque handles and status codes; every
 * function that produces output does so as a heap-allocated UTF-8 string
 * (JSON or CSV) that the caller releases with rrp_string_free(). On any
 * failure rrp_last_error() returns a thread-local description.
 */
#ifndef RRPRICING_H
#define RRPRICING_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rrp_status {
    RRP_OK = 0,
    RRP_ERR_AUDIT_VIOLATION = 1, /* an audit found at least one violation */
    RRP_ERR_BAD_INPUT = 2,       /* malformed JSON or invalid parameters */
    RRP_ERR_REJECTED = 3,        /* instance outside the concave-admissible family */
    RRP_ERR_NO_CONVERGENCE = 4,
    RRP_ERR_INTERNAL = 5
} rrp_status;

typedef struct rrp_instance rrp_instance;

const char* rrp_version(void);
const char* rrp_last_error(void);
void rrp_string_free(char* s);

/* ---- instances ------------------------------------------------------- */

/* json: {"C":2,"mu":1.0,"c":0.0,"alpha":[1,0,0],
 *        "curve":{"family":"linear","a":1.0,"b":2.0},"Lambda":2.0}
 * Lambda is optional for linear/exponential/logistic (defaults to b) and
 * required for reciprocal. */
rrp_status rrp_instance_create_json(const char* json, rrp_instance** out);
void rrp_instance_destroy(rrp_instance* inst);

int rrp_instance_capacity(const rrp_instance* inst);
double rrp_instance_rate_cap(const rrp_instance* inst);

/* ---- solving --------------------------------------------------------- */

/* Optimal dynamic policy, constructed static rate, best static rate, all
 * objectives and ratios. options_json may be NULL or override
 * {"span_tolerance":..., "max_iterations":..., "inner_tolerance":...}. */
rrp_status rrp_solve_json(const rrp_instance* inst, const char* options_json, char** out_json);

/* Monte Carlo estimate of a policy's objectives plus the 3-sigma comparison
 * against the analytic values.
 * policy_json: {"rates":[...]} or {"static_rate": x}
 * sim_json (optional): {"horizon":1e5,"warmup":5e3,"seed":1,"replications":20} */
rrp_status rrp_simulate_json(const rrp_instance* inst, const char* policy_json,
                             const char* sim_json, char** out_json);

/* ---- batch experiments ------------------------------------------------ */

/* spec_json (all fields optional):
 *   {"family":"linear","C_list":[2,3,4,5,10,20],"count":1000,"seed":20240601}
 * format: "csv" or "json". */
rrp_status rrp_table_profit(const char* spec_json, const char* format, char** out);
rrp_status rrp_table_multi(const char* spec_json, const char* format, char** out);

/* spec_json: {"mu_list":[1,0.1,0.01,0.001,0.0001]} */
rrp_status rrp_tightness(const char* spec_json, const char* format, char** out);

/* Runs every bound audit; returns RRP_ERR_AUDIT_VIOLATION (with the JSON
 * report still populated) if any check fails.
 * options_json (optional): {"lemma2_samples":10000,"seed":99} */
rrp_status rrp_audit_json(const char* options_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* RRPRICING_H */
