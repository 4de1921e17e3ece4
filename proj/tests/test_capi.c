// Copyright 2026 The torquad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "torquad/torquad.h"

static int failures = 0;

#define EXPECT(cond)                                                                                                   \
    do {                                                                                                               \
        if (!(cond)) {                                                                                                 \
            fprintf(stderr, "%s:%d: expectation failed: %s (%s)\n", __FILE__, __LINE__, #cond, tq_last_error());     \
            ++failures;                                                                                                \
        }                                                                                                              \
    } while (0)

static void quads(void)
{
    tq_quad *q = NULL;
    EXPECT(tq_quad_parse("0,1/5;0,2/5;1/5,0;2/5,0", &q) == TQ_OK);

    char small[4];
    size_t needed = 0;
    EXPECT(tq_quad_format(q, small, sizeof small, &needed) == TQ_ERR_BUFFER_TOO_SMALL);
    EXPECT(needed > sizeof small);
    char buf[128];
    EXPECT(tq_quad_format(q, buf, sizeof buf, &needed) == TQ_OK);
    EXPECT(strlen(buf) + 1 == needed);

    int64_t order = 0;
    EXPECT(tq_quad_order(q, &order) == TQ_OK && order == 5);

    int64_t pt[4];
    EXPECT(tq_quad_point(q, 0, pt) == TQ_OK);
    EXPECT(tq_quad_point(q, 4, pt) == TQ_ERR_OUT_OF_RANGE);

    tq_quad *same = NULL;
    EXPECT(tq_quad_parse(buf, &same) == TQ_OK);
    int cmp = 7;
    EXPECT(tq_quad_compare(q, same, &cmp) == TQ_OK && cmp == 0);

    const int64_t rows[16] = {0, 1, 1, 5, 0, 1, 2, 5, 1, 5, 0, 1, 2, 5, 0, 1};
    tq_quad *built = NULL;
    EXPECT(tq_quad_from_points(rows, &built) == TQ_OK);
    EXPECT(tq_quad_compare(q, built, &cmp) == TQ_OK && cmp == 0);

    tq_quad *bad = NULL;
    EXPECT(tq_quad_parse("0,1/5;0,1/5;1/5,0;2/5,0", &bad) == TQ_ERR_INVALID_ARGUMENT);
    EXPECT(bad == NULL);
    EXPECT(strlen(tq_last_error()) > 0);
    EXPECT(tq_quad_parse("nonsense", &bad) == TQ_ERR_PARSE);
    EXPECT(tq_quad_parse(NULL, &bad) == TQ_ERR_INVALID_ARGUMENT);

    const int64_t m[4] = {1, 2, 1, 3};
    tq_quad *moved = NULL;
    EXPECT(tq_act(m, q, &moved) == TQ_OK);
    const int64_t not_sl2[4] = {2, 0, 0, 1};
    tq_quad *nope = NULL;
    EXPECT(tq_act(not_sl2, q, &nope) == TQ_ERR_INVALID_ARGUMENT);

    tq_quad_list *orbit = NULL;
    EXPECT(tq_orbit(q, &orbit) == TQ_OK);
    EXPECT(tq_quad_list_size(orbit) > 1);
    const tq_quad *first = NULL;
    EXPECT(tq_quad_list_get(orbit, 0, &first) == TQ_OK);
    EXPECT(tq_quad_list_get(orbit, tq_quad_list_size(orbit), &first) == TQ_ERR_OUT_OF_RANGE);

    tq_quad *minq = NULL;
    int64_t w[4];
    EXPECT(tq_minimal_representative(moved, &minq, w) == TQ_OK);
    EXPECT(w[0] * w[3] - w[1] * w[2] == 1);
    tq_quad *check = NULL;
    EXPECT(tq_act(w, moved, &check) == TQ_OK);
    EXPECT(tq_quad_compare(check, minq, &cmp) == TQ_OK && cmp == 0);

    int64_t stab = 0;
    EXPECT(tq_stabilizer_order(q, &stab) == TQ_OK && stab == 4);

    int good = -1;
    int64_t a = 0, b = 0;
    EXPECT(tq_good(q, &good, &a, &b) == TQ_OK && good == 1);

    tq_delta_summary d;
    EXPECT(tq_delta(q, 4, 1e-8, &d) == TQ_OK);
    EXPECT(d.gamma_order_mod_pm == 4 && d.delta_order_mod_pm == 12 && d.delta_is_subgroup && d.gamma_in_delta);

    tq_series *mu = NULL;
    EXPECT(tq_mu_series(q, 6, &mu) == TQ_OK);
    tq_series_info info;
    EXPECT(tq_series_get_info(mu, &info) == TQ_OK && info.scale == 10);
    tq_constancy c;
    EXPECT(tq_is_constant(mu, 1e-9, &c) == TQ_OK && !c.constant && c.first_exponent == -4);
    double re = 0, im = 0;
    EXPECT(tq_series_coeff(mu, info.prec, &re, &im) == TQ_ERR_OUT_OF_RANGE);

    tq_series_free(mu);
    tq_quad_list_free(orbit);
    tq_quad_free(check);
    tq_quad_free(minq);
    tq_quad_free(moved);
    tq_quad_free(built);
    tq_quad_free(same);
    tq_quad_free(q);
    tq_quad_free(NULL);
}

static void classification(void)
{
    tq_quad_list *l = NULL;
    tq_classify_stats st;
    EXPECT(tq_classify(8, 1, &l, &st) == TQ_OK);
    size_t expected = 0;
    EXPECT(tq_family_count(8, &expected) == TQ_OK);
    EXPECT(tq_quad_list_size(l) == expected);
    int pass = 0;
    size_t missing = 1, extra = 1;
    EXPECT(tq_match_families(l, 8, &pass, &missing, &extra) == TQ_OK && pass && !missing && !extra);

    for (size_t i = 0; i < tq_quad_list_size(l); ++i) {
        const tq_quad *s = NULL;
        EXPECT(tq_quad_list_get(l, i, &s) == TQ_OK);
        int found = 0;
        tq_family fam;
        EXPECT(tq_family_lookup(s, &found, &fam) == TQ_OK && found);
        EXPECT(fam.case_number >= 1 && fam.case_number <= 11);
        double re = 0, im = 0;
        EXPECT(tq_mu_value(s, 0.1, 0.0, 0, &re, &im) == TQ_OK);
        EXPECT(fabs(re - fam.constant) < 1e-9 && fabs(im) < 1e-9);
        tq_series *mu = NULL;
        tq_constancy c;
        EXPECT(tq_mu_series(s, 6, &mu) == TQ_OK);
        EXPECT(tq_is_constant(mu, 1e-9, &c) == TQ_OK && c.constant);
        EXPECT(fabs(c.value_re - fam.constant) < 1e-9);
        tq_series_free(mu);
    }
    tq_quad_list_free(l);
    EXPECT(tq_classify(0, 1, &l, &st) == TQ_ERR_INVALID_ARGUMENT);
}

static void identities(void)
{
    const tq_upoint u = {1, 3, 0, 1};
    const tq_upoint v = {0, 1, 1, 3};
    double r = 1;
    EXPECT(tq_tate_residual(u, 8, &r) == TQ_OK && r < 1e-9);
    double xe = 1, ye = 1;
    EXPECT(tq_tate_direct_residual(v, 12, 0.05, &xe, &ye) == TQ_OK && xe < 1e-10 && ye < 1e-10);
    EXPECT(tq_theta_functional_residual(0.7, 0.4, 0.1, 0.05, &r) == TQ_OK && r < 1e-10);
    EXPECT(tq_theta_functional_series_residual(u, 8, &r) == TQ_OK && r < 1e-9);
    EXPECT(tq_x_difference_residual(u, v, 8, &r) == TQ_OK && r < 1e-9);
    const tq_upoint zero = {0, 1, 0, 1};
    EXPECT(tq_tate_residual(zero, 8, &r) == TQ_ERR_DEGENERATE);
    const tq_upoint badden = {1, 0, 0, 1};
    EXPECT(tq_tate_residual(badden, 8, &r) != TQ_OK);
}

static void curves(void)
{
    for (int k = 1; k <= 11; ++k) {
        tq_curve_report *rep = NULL;
        EXPECT(tq_curve_verify(k, 10, 99, &rep) == TQ_OK);
        tq_curve_summary s;
        EXPECT(tq_curve_report_summary(rep, &s) == TQ_OK);
        EXPECT(s.pass && s.case_number == k && s.constant_count == (k == 6 || k == 7 ? 2u : 1u));
        int hit = 0;
        for (size_t i = 0; i < s.constant_count; ++i) {
            double re = 0, im = 0;
            EXPECT(tq_curve_report_constant(rep, i, &re, &im) == TQ_OK);
            hit |= fabs(re - s.expected) < 1e-9 && fabs(im) < 1e-9;
        }
        EXPECT(hit);
        for (size_t i = 0; i < s.residual_count; ++i) {
            const char *name = NULL;
            double value = 1;
            EXPECT(tq_curve_report_residual(rep, i, &name, &value) == TQ_OK && name && value < s.tol);
        }
        tq_curve_report_free(rep);
    }
    tq_curve_report *rep = NULL;
    EXPECT(tq_curve_verify(0, 10, 1, &rep) == TQ_ERR_INVALID_ARGUMENT);
}

int main(void)
{
    EXPECT(strlen(tq_version()) > 0);
    EXPECT(strcmp(tq_status_name(TQ_OK), tq_status_name(TQ_ERR_PARSE)) != 0);
    quads();
    classification();
    identities();
    curves();
    if (failures) {
        fprintf(stderr, "%d failures\n", failures);
        return 1;
    }
    printf("all C API checks passed\n");
    return 0;
}
