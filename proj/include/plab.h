/*------------------------------------------------------------------------------
 *
 *   Copyright 2026 The plab Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 *
 *----------------------------------------------------------------------------*/

/* plab - product line-ability analysis of component-based products.
 *
 * C interface of the shared library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function; strings
 * returned through char** are released with plab_string_free. Functions
 * return PLAB_OK on success; on failure plab_last_error() describes the most
 * recent error of the calling thread.
 */

#ifndef PLAB_H
#define PLAB_H

#include <stddef.h>

#if defined(_WIN32)
#  define PLAB_API __declspec(dllexport)
#else
#  define PLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plab_status {
  PLAB_OK = 0,
  PLAB_ERR_ARGUMENT = 1,     /* null handle, bad index, bad parameter */
  PLAB_ERR_INPUT = 2,        /* input text failed to parse or validate */
  PLAB_ERR_PRECONDITION = 3, /* analysis preconditions not met */
  PLAB_ERR_NOMEM = 4,
  PLAB_ERR_INTERNAL = 5
} plab_status;

typedef enum plab_severity {
  PLAB_SEVERITY_WARNING = 0,
  PLAB_SEVERITY_ERROR = 1
} plab_severity;

typedef enum plab_format {
  PLAB_FORMAT_TEXT = 0,
  PLAB_FORMAT_JSON = 1,
  PLAB_FORMAT_DOT = 2
} plab_format;

typedef enum plab_class {
  PLAB_CLASS_REQUIRED = 0,
  PLAB_CLASS_OPTIONAL = 1,
  PLAB_CLASS_ISOLATED = 2
} plab_class;

typedef enum plab_metric {
  PLAB_METRIC_SOC = 0,  /* global; num = count, den = 1 */
  PLAB_METRIC_IOC = 1,  /* global */
  PLAB_METRIC_PRR = 2,  /* per product i */
  PLAB_METRIC_IPRR = 3, /* per product i */
  PLAB_METRIC_IR = 4,   /* per product i */
  PLAB_METRIC_RB = 5,   /* per pair (i, j) */
  PLAB_METRIC_RR = 6    /* per pair (i, j) */
} plab_metric;

typedef struct plab_products plab_products;
typedef struct plab_diags plab_diags;
typedef struct plab_classification plab_classification;
typedef struct plab_report plab_report;

typedef struct plab_options {
  double tau_ir;   /* refactor-candidate threshold on IR, default 0.5 */
  double tau_prr;  /* exclusion threshold on PrR, default 0.25 */
  double tau_iprr; /* exclusion threshold on IPrR, default 0.25 */
  int strict;      /* escalate interface/classification warnings to errors */
} plab_options;

PLAB_API const char* plab_version(void);

/* Thread-local message for the last failing call; never NULL. */
PLAB_API const char* plab_last_error(void);

PLAB_API void plab_options_init(plab_options* options);

PLAB_API void plab_string_free(char* text);

/* --- parsing ------------------------------------------------------------ */

/* Parses `count` product description texts into one product set. `names` may
 * be NULL (inputs are then anonymous); individual names may not be NULL.
 * On PLAB_ERR_INPUT a handle is still returned: products that parsed cleanly
 * are available and the diagnostics carry the errors. */
PLAB_API plab_status plab_parse(const char* const* texts, const char* const* names, size_t count,
                                int strict, plab_products** out);

PLAB_API void plab_products_free(plab_products* products);

PLAB_API size_t plab_products_count(const plab_products* products);

/* Valid while the handle lives. Returns NULL on a bad index. */
PLAB_API const char* plab_product_id(const plab_products* products, size_t index);

/* 1 iff parsing produced no error diagnostics. */
PLAB_API int plab_products_ok(const plab_products* products);

/* Parse diagnostics; borrowed reference, valid while the handle lives. */
PLAB_API const plab_diags* plab_products_diags(const plab_products* products);

/* Canonical .plp text of all parsed products. */
PLAB_API plab_status plab_serialize(const plab_products* products, char** out_text);

/* --- diagnostics ---------------------------------------------------------*/

PLAB_API size_t plab_diags_count(const plab_diags* diags);

/* Any out pointer may be NULL. String pointers are valid while the
 * originating handle lives. */
PLAB_API plab_status plab_diags_get(const plab_diags* diags, size_t index, plab_severity* severity,
                                    const char** source, int* line, const char** code,
                                    const char** message);

PLAB_API void plab_diags_free(plab_diags* diags);

/* Structural validation of every parsed product (isolated components,
 * undeclared accept signatures, classification basis and mismatches). */
PLAB_API plab_status plab_validate(const plab_products* products, int strict, plab_diags** out);

/* --- classification ------------------------------------------------------*/

/* Classifies one product into required/optional/isolated components.
 * `start_override`, when non-NULL with `start_count` entries, replaces the
 * product's own start set. */
PLAB_API plab_status plab_classify(const plab_products* products, size_t index,
                                   const char* const* start_override, size_t start_count,
                                   plab_classification** out);

PLAB_API size_t plab_classification_count(const plab_classification* classification, plab_class cls);

PLAB_API const char* plab_classification_name(const plab_classification* classification,
                                              plab_class cls, size_t index);

PLAB_API void plab_classification_free(plab_classification* classification);

/* --- analysis ------------------------------------------------------------*/

/* Full product line-ability analysis over all products in the handle.
 * `options` may be NULL for defaults. Needs at least 2 products. */
PLAB_API plab_status plab_analyze(const plab_products* products, const plab_options* options,
                                  plab_report** out);

PLAB_API plab_status plab_report_render(const plab_report* report, plab_format format,
                                        char** out_text);

/* Exact value of one metric cell. `j` is ignored for non-pairwise metrics;
 * `i` is ignored for global ones. `*defined` is 0 for the undefined ratio,
 * in which case num and den are not written. */
PLAB_API plab_status plab_report_metric(const plab_report* report, plab_metric metric, size_t i,
                                        size_t j, unsigned long long* num, unsigned long long* den,
                                        int* defined);

PLAB_API void plab_report_free(plab_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PLAB_H */
