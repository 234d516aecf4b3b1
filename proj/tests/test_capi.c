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

/* Exercises the shared library through its C interface only. */
#include <stdio.h>
#include <string.h>

#include "qstuffle/qstuffle.h"

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static int renders_as(const qs_poly* p, qs_format format, const char* q_value, const char* expected) {
    char* s = NULL;
    if (qs_poly_render(p, format, q_value, &s) != QS_OK) return 0;
    int same = strcmp(s, expected) == 0;
    if (!same) fprintf(stderr, "rendered '%s', expected '%s'\n", s, expected);
    qs_string_free(s);
    return same;
}

static void test_products(void) {
    qs_poly *a = NULL, *b = NULL, *p = NULL;
    EXPECT(qs_poly_from_word("1", &a) == QS_OK);
    EXPECT(qs_product(QS_PRODUCT_STUFFLE, a, a, &p) == QS_OK);
    EXPECT(renders_as(p, QS_FORMAT_TEXT, NULL, "2·[1,1] + q·[2]"));
    EXPECT(renders_as(p, QS_FORMAT_TEXT, "1", "2·[1,1] + [2]"));
    EXPECT(renders_as(p, QS_FORMAT_TEXT, "0", "2·[1,1]"));
    qs_poly_free(p);

    EXPECT(qs_poly_from_word("2", &b) == QS_OK);
    EXPECT(qs_product(QS_PRODUCT_CONC, b, a, &p) == QS_OK);
    EXPECT(renders_as(p, QS_FORMAT_TEXT, NULL, "[2,1]"));
    EXPECT(renders_as(p, QS_FORMAT_LATEX, NULL, "y_2y_1"));
    qs_poly_free(p);
    EXPECT(qs_product(QS_PRODUCT_SHUFFLE, b, a, &p) == QS_OK);
    EXPECT(renders_as(p, QS_FORMAT_TEXT, NULL, "[2,1] + [1,2]"));

    qs_poly* shuffled = NULL;
    int equal = -1;
    EXPECT(qs_product(QS_PRODUCT_STUFFLE, a, b, &shuffled) == QS_OK);
    EXPECT(qs_poly_equal(p, shuffled, &equal) == QS_OK && equal == 0);
    qs_poly_free(shuffled);
    EXPECT(qs_product(QS_PRODUCT_SHUFFLE, a, b, &shuffled) == QS_OK);
    EXPECT(qs_poly_equal(p, shuffled, &equal) == QS_OK && equal == 1);
    qs_poly_free(shuffled);

    char* json = NULL;
    EXPECT(qs_coproduct_json(b, &json) == QS_OK);
    EXPECT(json != NULL && strstr(json, "\"left\":[1],\"right\":[1]") != NULL);
    qs_string_free(json);

    qs_poly* pi = NULL;
    EXPECT(qs_pi1(b, &pi) == QS_OK);
    EXPECT(renders_as(pi, QS_FORMAT_TEXT, NULL, "-q/2·[1,1] + [2]"));
    qs_poly_free(pi);
    qs_poly_free(p);
    qs_poly_free(a);
    qs_poly_free(b);
}

static void test_json_input(void) {
    qs_poly* p = NULL;
    EXPECT(qs_poly_from_json("[{\"word\":[3],\"coeff\":[{\"qpow\":1,\"coeff\":\"1/2\"}]}]", &p) == QS_OK);
    EXPECT(renders_as(p, QS_FORMAT_TEXT, NULL, "q/2·[3]"));
    EXPECT(renders_as(p, QS_FORMAT_JSON, NULL, "[{\"word\":[3],\"coeff\":[{\"qpow\":1,\"coeff\":\"1/2\"}]}]"));
    qs_poly_free(p);
    p = NULL;
    EXPECT(qs_poly_from_json("[{\"word\":[3]}", &p) == QS_ERR_PARSE);
    EXPECT(p == NULL);
    EXPECT(strlen(qs_last_error()) > 0);
}

static void test_errors(void) {
    qs_poly* p = NULL;
    EXPECT(qs_poly_from_word("1,x", &p) == QS_ERR_PARSE);
    EXPECT(p == NULL);
    EXPECT(strstr(qs_last_error(), "1,x") != NULL);
    EXPECT(qs_poly_from_word(NULL, &p) == QS_ERR_INVALID_ARGUMENT);
    EXPECT(qs_poly_from_word("1", NULL) == QS_ERR_INVALID_ARGUMENT);
    EXPECT(qs_poly_from_word("", &p) == QS_ERR_PARSE);
    EXPECT(qs_poly_from_word("e", &p) == QS_OK);
    qs_poly* pi = NULL;
    EXPECT(qs_pi1(p, &pi) == QS_OK);
    EXPECT(renders_as(pi, QS_FORMAT_TEXT, NULL, "0"));
    qs_poly_free(pi);
    qs_poly_free(p);
    char* s = NULL;
    EXPECT(qs_derivation_tree_json("2;1;", 0, &s) != QS_OK);
    EXPECT(qs_derivation_tree_json("2;1,2", 0, &s) != QS_OK);
    qs_report* r = NULL;
    EXPECT(qs_verify(QS_SUITE_ALL, 0, &r) == QS_ERR_INVALID_ARGUMENT);
    qs_poly_free(NULL);
    qs_basis_free(NULL);
    qs_report_free(NULL);
    qs_string_free(NULL);
}

static void test_lyndon_and_trees(void) {
    char* s = NULL;
    EXPECT(qs_lyndon_words(3, &s) == QS_OK);
    EXPECT(s != NULL && strcmp(s, "3\n2,1\n") == 0);
    qs_string_free(s);
    EXPECT(qs_derivation_tree_json("2;1", 0, &s) == QS_OK);
    EXPECT(s != NULL && strstr(s, "\"op\":\"lambda\"") != NULL);
    qs_string_free(s);
}

static void test_bases(void) {
    qs_basis* b = NULL;
    EXPECT(qs_basis_build(QS_BASIS_SIGMA, 4, QS_SIGMA_BOTH, &b) == QS_OK);
    qs_poly* p = NULL;
    EXPECT(qs_basis_get(b, "2,1", &p) == QS_OK);
    EXPECT(renders_as(p, QS_FORMAT_TEXT, NULL, "[2,1] + q/2·[3]"));
    qs_poly_free(p);
    p = NULL;
    EXPECT(qs_basis_get(b, "5", &p) == QS_ERR_INVALID_ARGUMENT);
    char* s = NULL;
    EXPECT(qs_basis_render(b, QS_FORMAT_LATEX, NULL, &s) == QS_OK);
    EXPECT(s != NULL && strstr(s, "\\Sigma_{y_2y_1}&=&y_2y_1+\\frac{q}{2}y_3") != NULL);
    qs_string_free(s);
    EXPECT(qs_basis_render(b, QS_FORMAT_JSON, "1", &s) == QS_OK);
    EXPECT(s != NULL && strstr(s, "\"kind\": \"sigma\"") != NULL);
    qs_string_free(s);
    qs_basis_free(b);

    EXPECT(qs_basis_build(QS_BASIS_PI, 3, QS_SIGMA_ORACLE, &b) == QS_OK);
    EXPECT(qs_basis_get(b, "2,1", &p) == QS_OK);
    EXPECT(renders_as(p, QS_FORMAT_TEXT, NULL, "[2,1] - [1,2]"));
    qs_poly_free(p);
    qs_basis_free(b);
}

static void test_verify(void) {
    qs_report* r = NULL;
    EXPECT(qs_verify(QS_SUITE_ALL, 4, &r) == QS_OK);
    EXPECT(qs_report_passed(r) == 1);
    char* s = NULL;
    EXPECT(qs_report_render(r, QS_FORMAT_TEXT, &s) == QS_OK);
    EXPECT(s != NULL && strncmp(s, "PASS ", 5) == 0 && strstr(s, "FAIL") == NULL);
    qs_string_free(s);
    EXPECT(qs_report_render(r, QS_FORMAT_JSON, &s) == QS_OK);
    EXPECT(s != NULL && strstr(s, "\"passed\": true") != NULL);
    qs_string_free(s);
    qs_report_free(r);
}

int main(void) {
    EXPECT(strncmp(qs_version(), "qstuffle ", 9) == 0);
    test_products();
    test_json_input();
    test_errors();
    test_lyndon_and_trees();
    test_bases();
    test_verify();
    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    else printf("all C API checks passed\n");
    return failures ? 1 : 0;
}
