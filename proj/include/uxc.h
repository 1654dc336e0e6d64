/* uxc: exact line-arrangement analysis and unexpected-curve certification.
 *
 * C interface of the shared library. All functions return a status code;
 * results come back as opaque document handles or heap-allocated UTF-8
 * strings (JSON reports, SVG). Strings are released with uxc_string_free,
 * documents with uxc_doc_free. On any failure uxc_last_error() returns a
 * thread-local message describing what went wrong.
 *
 * Status codes match the CLI exit codes: 0 ok, 2 invalid input,
 * 3 inconclusive (randomized verification did not reach agreement),
 * 4 internal error.
 */
#ifndef UXC_H
#define UXC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uxc_status {
  UXC_OK = 0,
  UXC_ERR_INVALID = 2,
  UXC_ERR_INCONCLUSIVE = 3,
  UXC_ERR_INTERNAL = 4
} uxc_status;

/* An arrangement (lines) or point configuration over one exact field. */
typedef struct uxc_doc uxc_doc;

const char* uxc_version(void);
const char* uxc_last_error(void);
void uxc_string_free(char* s);
void uxc_doc_free(uxc_doc* doc);

/* Document IO. */
uxc_status uxc_doc_parse(const char* json, uxc_doc** out);
uxc_status uxc_doc_to_json(const uxc_doc* doc, char** out);

/* Family generation. params is a JSON object:
 *   {"family": "complete-polygonal", "N": 6, "seed": 1, "bits": 62,
 *    "field": "rational"|"cyclotomic", "k":, "j":, "stage": "ell4",
 *    "min-mult": 3, "verify-primes": 2}
 * dual-of / sing-geq-of take their input through the separate functions
 * below. */
uxc_status uxc_generate(const char* params_json, uxc_doc** out);

/* Coordinate-swap duality (lines <-> points). */
uxc_status uxc_doc_dualize(const uxc_doc* doc, uxc_doc** out);
/* Points of multiplicity >= min_mult in the singular locus. */
uxc_status uxc_doc_sing(const uxc_doc* doc, unsigned min_mult, uxc_doc** out);
/* Arrangement dual to the singular points. */
uxc_status uxc_doc_dual_arrangement(const uxc_doc* doc, uxc_doc** out);

/* Reports. options is a JSON object; common keys:
 *   {"seed": 1, "samples": 3, "primes": 2, "prime-bits": 62, "timing": false}
 * per-command keys:
 *   splitting: {"method": "empirical"|"supersolvable"|"nearly"|"chain",
 *               "chain": {"base-splitting": [a, b], "steps": [[..], ..]}}
 *   certify:   {"degree": j, "fat": ["3@generic", "2@(1:2:3)"]}
 *   dim:       {"degree": j, "fat": [...]}
 *   render:    {"size": 640, "radius": 1.8}
 * A null or empty options string selects the defaults. */
uxc_status uxc_analyze(const uxc_doc* doc, const char* options_json, char** report);
uxc_status uxc_splitting(const uxc_doc* doc, const char* options_json, char** report);
uxc_status uxc_certify(const uxc_doc* doc, const char* options_json, char** report);
uxc_status uxc_dimension(const uxc_doc* doc, const char* options_json, char** report);
uxc_status uxc_render_svg(const uxc_doc* doc, const char* options_json, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* UXC_H */
