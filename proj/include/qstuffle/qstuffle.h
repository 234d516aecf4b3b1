/* Copyright 2026 The qstuffle Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

/* C interface to the qstuffle library. All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returning qs_status leaves a message for qs_last_error() on failure.
 * Strings returned through char** are heap copies released with qs_string_free.
 */
#ifndef QSTUFFLE_QSTUFFLE_H
#define QSTUFFLE_QSTUFFLE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QS_API __declspec(dllexport)
#else
#define QS_API __attribute__((visibility("default")))
#endif

typedef enum {
    QS_OK = 0,
    QS_ERR_INVALID_ARGUMENT = 1,
    QS_ERR_PARSE = 2,
    QS_ERR_DOMAIN = 3,
    QS_ERR_MISMATCH = 4,
    QS_ERR_INTERNAL = 5
} qs_status;

typedef enum { QS_PRODUCT_CONC = 0, QS_PRODUCT_STUFFLE = 1, QS_PRODUCT_SHUFFLE = 2 } qs_product_kind;
typedef enum { QS_FORMAT_TEXT = 0, QS_FORMAT_LATEX = 1, QS_FORMAT_JSON = 2 } qs_format;
typedef enum { QS_BASIS_PI = 0, QS_BASIS_SIGMA = 1, QS_BASIS_CHI = 2, QS_BASIS_XI = 3 } qs_basis_kind;
typedef enum { QS_SIGMA_ORACLE = 0, QS_SIGMA_RECURSIVE = 1, QS_SIGMA_BOTH = 2 } qs_sigma_method;
typedef enum {
    QS_SUITE_DUALITY = 0,
    QS_SUITE_PRIMITIVITY = 1,
    QS_SUITE_FACTORIZATION = 2,
    QS_SUITE_AXIOMS = 3,
    QS_SUITE_ALL = 4
} qs_suite;

typedef struct qs_poly qs_poly;
typedef struct qs_basis qs_basis;
typedef struct qs_report qs_report;

QS_API const char* qs_version(void);
/* Message of the last failure on the calling thread; "" if none. Valid until the next failing call. */
QS_API const char* qs_last_error(void);
QS_API void qs_string_free(char* s);

/* word: comma-separated indices such as "3,1,2", or "e" for the empty word. */
QS_API qs_status qs_poly_from_word(const char* word, qs_poly** out);
/* [{"word": [...], "coeff": [{"qpow": n, "coeff": "num/den"}]}, ...] */
QS_API qs_status qs_poly_from_json(const char* json, qs_poly** out);
QS_API void qs_poly_free(qs_poly* p);
QS_API qs_status qs_poly_equal(const qs_poly* a, const qs_poly* b, int* out);
QS_API qs_status qs_product(qs_product_kind kind, const qs_poly* a, const qs_poly* b, qs_poly** out);
QS_API qs_status qs_coproduct_json(const qs_poly* p, char** out);
QS_API qs_status qs_pi1(const qs_poly* p, qs_poly** out);
/* q_value: NULL keeps q symbolic, otherwise a rational "p/q" substituted before rendering. */
QS_API qs_status qs_poly_render(const qs_poly* p, qs_format format, const char* q_value, char** out);

/* Newline-separated Lyndon words of exactly the given weight, ascending. */
QS_API qs_status qs_lyndon_words(unsigned weight, char** out);
/* sequence: Lyndon words separated by ';', e.g. "4;2;1". JSON tree of the derivation. */
QS_API qs_status qs_derivation_tree_json(const char* sequence, int largest_rise, char** out);

/* QS_SIGMA_BOTH fails with QS_ERR_MISMATCH when the recursive formulas disagree with the triangular solve. */
QS_API qs_status qs_basis_build(qs_basis_kind kind, unsigned max_weight, qs_sigma_method method, qs_basis** out);
QS_API void qs_basis_free(qs_basis* b);
QS_API qs_status qs_basis_get(const qs_basis* b, const char* word, qs_poly** out);
QS_API qs_status qs_basis_render(const qs_basis* b, qs_format format, const char* q_value, char** out);

QS_API qs_status qs_verify(qs_suite suite, unsigned max_weight, qs_report** out);
QS_API void qs_report_free(qs_report* r);
QS_API int qs_report_passed(const qs_report* r);
QS_API qs_status qs_report_render(const qs_report* r, qs_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QSTUFFLE_QSTUFFLE_H */
