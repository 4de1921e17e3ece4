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

#include "torquad/torquad.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "torquad/classifier.hpp"
#include "torquad/curve_forms.hpp"
#include "torquad/goodness.hpp"
#include "torquad/modular_groups.hpp"
#include "torquad/poly_roots.hpp"
#include "torquad/qseries.hpp"
#include "torquad/sl2.hpp"
#include "torquad/torsion.hpp"

struct tq_quad
{
    torquad::Quad q;
};

struct tq_quad_list
{
    std::vector<tq_quad> items;
};

struct tq_series
{
    torquad::LaurentSeries s;
};

struct tq_curve_report
{
    torquad::CurveCaseReport r;
    std::vector<std::string> names;
    std::vector<double> values;
};

namespace
{

thread_local std::string g_last_error;

tq_status fail(tq_status st, const char *msg)
{
    g_last_error = msg;
    return st;
}

// Runs f, translating exceptions into status codes.
template <class F>
tq_status guarded(F &&f)
{
    try {
        g_last_error.clear();
        return f();
    } catch (const torquad::ParseError &e) {
        return fail(TQ_ERR_PARSE, e.what());
    } catch (const torquad::OverflowError &e) {
        return fail(TQ_ERR_OVERFLOW, e.what());
    } catch (const torquad::DegenerateError &e) {
        return fail(TQ_ERR_DEGENERATE, e.what());
    } catch (const torquad::SeriesError &e) {
        return fail(TQ_ERR_NUMERIC, e.what());
    } catch (const torquad::RootFindError &e) {
        return fail(TQ_ERR_NUMERIC, e.what());
    } catch (const std::out_of_range &e) {
        return fail(TQ_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(TQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(TQ_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(TQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TQ_ERR_INTERNAL, "unknown error");
    }
}

#define TQ_REQUIRE(cond)                                                                                              \
    do {                                                                                                               \
        if (!(cond)) {                                                                                                 \
            return fail(TQ_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond);                                 \
        }                                                                                                              \
    } while (0)

torquad::UPoint to_upoint(const tq_upoint &u)
{
    return torquad::UPoint{torquad::Rat(u.theta_num, u.theta_den), torquad::Rat(u.r_num, u.r_den)};
}

void split(torquad::cplx z, double *re, double *im)
{
    *re = static_cast<double>(z.real());
    *im = static_cast<double>(z.imag());
}

tq_quad *wrap(torquad::Quad q)
{
    return new tq_quad{std::move(q)};
}

} // namespace

extern "C" {

const char *tq_version(void)
{
    return "0.1.0";
}

const char *tq_status_name(tq_status status)
{
    switch (status) {
    case TQ_OK:
        return "ok";
    case TQ_ERR_INVALID_ARGUMENT:
        return "invalid_argument";
    case TQ_ERR_PARSE:
        return "parse_error";
    case TQ_ERR_OVERFLOW:
        return "overflow";
    case TQ_ERR_DEGENERATE:
        return "degenerate";
    case TQ_ERR_NUMERIC:
        return "numeric_failure";
    case TQ_ERR_BUFFER_TOO_SMALL:
        return "buffer_too_small";
    case TQ_ERR_OUT_OF_RANGE:
        return "out_of_range";
    case TQ_ERR_INTERNAL:
        return "internal_error";
    }
    return "unknown";
}

const char *tq_last_error(void)
{
    return g_last_error.c_str();
}

tq_status tq_quad_parse(const char *text, tq_quad **out)
{
    return guarded([&] {
        TQ_REQUIRE(text && out);
        *out = wrap(torquad::parse_quad(text));
        return TQ_OK;
    });
}

tq_status tq_quad_from_points(const int64_t points[16], tq_quad **out)
{
    return guarded([&] {
        TQ_REQUIRE(points && out);
        std::array<torquad::TorsionCoord, 4> pts;
        for (std::size_t i = 0; i < 4; ++i) {
            const int64_t *p = points + 4 * i;
            pts[i] = torquad::f_pair(torquad::Rat(p[0], p[1]), torquad::Rat(p[2], p[3]));
        }
        *out = wrap(torquad::Quad(pts));
        return TQ_OK;
    });
}

tq_status tq_quad_clone(const tq_quad *q, tq_quad **out)
{
    return guarded([&] {
        TQ_REQUIRE(q && out);
        *out = wrap(q->q);
        return TQ_OK;
    });
}

void tq_quad_free(tq_quad *q)
{
    delete q;
}

tq_status tq_quad_format(const tq_quad *q, char *buf, size_t cap, size_t *needed)
{
    return guarded([&] {
        TQ_REQUIRE(q);
        const std::string s = torquad::format_quad(q->q);
        if (needed) {
            *needed = s.size() + 1;
        }
        if (!buf || cap < s.size() + 1) {
            return fail(TQ_ERR_BUFFER_TOO_SMALL, "buffer too small for quad text");
        }
        std::memcpy(buf, s.c_str(), s.size() + 1);
        return TQ_OK;
    });
}

tq_status tq_quad_point(const tq_quad *q, int i, int64_t out[4])
{
    return guarded([&] {
        TQ_REQUIRE(q && out);
        if (i < 0 || i > 3) {
            return fail(TQ_ERR_OUT_OF_RANGE, "point index must be 0..3");
        }
        const auto &p = q->q[static_cast<std::size_t>(i)];
        out[0] = p.r.num();
        out[1] = p.r.den();
        out[2] = p.theta.num();
        out[3] = p.theta.den();
        return TQ_OK;
    });
}

tq_status tq_quad_order(const tq_quad *q, int64_t *out)
{
    return guarded([&] {
        TQ_REQUIRE(q && out);
        *out = q->q.common_order();
        return TQ_OK;
    });
}

tq_status tq_quad_compare(const tq_quad *a, const tq_quad *b, int *out)
{
    return guarded([&] {
        TQ_REQUIRE(a && b && out);
        const auto c = a->q <=> b->q;
        *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
        return TQ_OK;
    });
}

tq_status tq_act(const int64_t m[4], const tq_quad *q, tq_quad **out)
{
    return guarded([&] {
        TQ_REQUIRE(m && q && out);
        *out = wrap(torquad::act(torquad::Mat2(m[0], m[1], m[2], m[3]), q->q));
        return TQ_OK;
    });
}

tq_status tq_orbit(const tq_quad *q, tq_quad_list **out)
{
    return guarded([&] {
        TQ_REQUIRE(q && out);
        auto *l = new tq_quad_list;
        for (auto &s : torquad::orbit(q->q)) {
            l->items.push_back(tq_quad{std::move(s)});
        }
        *out = l;
        return TQ_OK;
    });
}

tq_status tq_minimal_representative(const tq_quad *q, tq_quad **min_out, int64_t witness[4])
{
    return guarded([&] {
        TQ_REQUIRE(q && min_out);
        auto mr = torquad::minimal_representative(q->q);
        if (witness) {
            witness[0] = mr.witness.a();
            witness[1] = mr.witness.b();
            witness[2] = mr.witness.c();
            witness[3] = mr.witness.d();
        }
        *min_out = wrap(std::move(mr.quad));
        return TQ_OK;
    });
}

tq_status tq_stabilizer_order(const tq_quad *q, int64_t *psl_order)
{
    return guarded([&] {
        TQ_REQUIRE(q && psl_order);
        *psl_order = torquad::psl_quotient_order(torquad::stabilizer_gamma_S(q->q));
        return TQ_OK;
    });
}

size_t tq_quad_list_size(const tq_quad_list *l)
{
    return l ? l->items.size() : 0;
}

tq_status tq_quad_list_get(const tq_quad_list *l, size_t i, const tq_quad **out)
{
    return guarded([&] {
        TQ_REQUIRE(l && out);
        if (i >= l->items.size()) {
            return fail(TQ_ERR_OUT_OF_RANGE, "list index out of range");
        }
        *out = &l->items[i];
        return TQ_OK;
    });
}

void tq_quad_list_free(tq_quad_list *l)
{
    delete l;
}

tq_status tq_good(const tq_quad *q, int *is_good, int64_t *a, int64_t *b)
{
    return guarded([&] {
        TQ_REQUIRE(q && is_good);
        const auto w = torquad::good_quad(q->q);
        *is_good = w ? 1 : 0;
        if (w && a) {
            *a = w->a;
        }
        if (w && b) {
            *b = w->b;
        }
        return TQ_OK;
    });
}

tq_status tq_classify(int64_t max_order, int prune, tq_quad_list **out, tq_classify_stats *stats)
{
    return guarded([&] {
        TQ_REQUIRE(out && max_order >= 1);
        torquad::ClassifyOptions opts;
        opts.max_order = max_order;
        opts.prune = prune != 0;
        torquad::ClassifyStats st;
        const auto res = torquad::classify(opts, &st);
        auto *l = new tq_quad_list;
        for (const auto &c : res) {
            l->items.push_back(tq_quad{c.quad});
        }
        if (stats) {
            stats->minimal_quads = st.minimal_quads;
            stats->quick_good = st.quick_good;
            stats->progression_good = st.progression_good;
            stats->full_scans = st.full_scans;
        }
        *out = l;
        return TQ_OK;
    });
}

tq_status tq_family_lookup(const tq_quad *q, int *found, tq_family *out)
{
    return guarded([&] {
        TQ_REQUIRE(q && found && out);
        const auto e = torquad::lookup_family(q->q);
        *found = e ? 1 : 0;
        if (e) {
            static const std::string labels[] = {torquad::tag_label(torquad::ConstantTag::TwentySevenQuarters),
                                                 torquad::tag_label(torquad::ConstantTag::Zero),
                                                 torquad::tag_label(torquad::ConstantTag::OneHalf),
                                                 torquad::tag_label(torquad::ConstantTag::EightThirds)};
            out->case_number = e->case_number;
            out->has_param = e->param ? 1 : 0;
            out->param_num = e->param ? e->param->num() : 0;
            out->param_den = e->param ? e->param->den() : 1;
            const torquad::Rat v = torquad::tag_value(e->tag);
            out->constant = static_cast<double>(v.num()) / static_cast<double>(v.den());
            out->label = labels[static_cast<int>(e->tag)].c_str();
        }
        return TQ_OK;
    });
}

tq_status tq_family_count(int64_t max_order, size_t *out)
{
    return guarded([&] {
        TQ_REQUIRE(out && max_order >= 1);
        *out = torquad::family_table(max_order).size();
        return TQ_OK;
    });
}

tq_status tq_match_families(const tq_quad_list *l, int64_t max_order, int *pass, size_t *missing, size_t *extra)
{
    return guarded([&] {
        TQ_REQUIRE(l && pass);
        std::vector<torquad::ClassifiedQuad> res;
        for (const auto &it : l->items) {
            res.push_back(torquad::ClassifiedQuad{it.q, it.q.common_order()});
        }
        const auto rep = torquad::match_families(res, max_order);
        *pass = rep.pass ? 1 : 0;
        if (missing) {
            *missing = rep.missing.size();
        }
        if (extra) {
            *extra = rep.extra.size();
        }
        return TQ_OK;
    });
}

tq_status tq_mu_series(const tq_quad *q, int terms, tq_series **out)
{
    return guarded([&] {
        TQ_REQUIRE(q && out && terms >= 1);
        *out = new tq_series{torquad::mu_series(q->q, terms)};
        return TQ_OK;
    });
}

void tq_series_free(tq_series *s)
{
    delete s;
}

tq_status tq_series_get_info(const tq_series *s, tq_series_info *out)
{
    return guarded([&] {
        TQ_REQUIRE(s && out);
        out->scale = s->s.scale();
        out->lead = s->s.lead();
        out->prec = s->s.prec();
        out->count = s->s.coeffs().size();
        return TQ_OK;
    });
}

tq_status tq_series_coeff(const tq_series *s, int64_t e, double *re, double *im)
{
    return guarded([&] {
        TQ_REQUIRE(s && re && im);
        split(s->s.coeff(e), re, im);
        return TQ_OK;
    });
}

tq_status tq_is_constant(const tq_series *s, double tol, tq_constancy *out)
{
    return guarded([&] {
        TQ_REQUIRE(s && out && tol >= 0);
        const auto c = torquad::is_constant(s->s, tol);
        out->constant = c.constant ? 1 : 0;
        split(c.value, &out->value_re, &out->value_im);
        out->first_exponent = c.first_exponent;
        split(c.first_coeff, &out->first_re, &out->first_im);
        out->scale = c.scale;
        return TQ_OK;
    });
}

tq_status tq_mu_value(const tq_quad *q, double q_re, double q_im, int terms, double *re, double *im)
{
    return guarded([&] {
        TQ_REQUIRE(q && re && im && terms >= 0);
        split(torquad::mu_value(q->q, torquad::cplx(q_re, q_im), terms), re, im);
        return TQ_OK;
    });
}

tq_status tq_tate_residual(tq_upoint u, int terms, double *out)
{
    return guarded([&] {
        TQ_REQUIRE(out && terms >= 1);
        *out = torquad::tate_point_residual(to_upoint(u), terms).max_abs();
        return TQ_OK;
    });
}

tq_status tq_tate_direct_residual(tq_upoint u, int terms, double q, double *x_err, double *y_err)
{
    return guarded([&] {
        TQ_REQUIRE(x_err && y_err && terms >= 1 && q > 0 && q < 1);
        const torquad::UPoint up = to_upoint(u);
        const torquad::cplx qq(q, 0);
        *x_err = static_cast<double>(std::abs(torquad::x_series(up, terms).evaluate(qq) - torquad::x_value(up, qq)));
        *y_err = static_cast<double>(std::abs(torquad::y_series(up, terms).evaluate(qq) - torquad::y_value(up, qq)));
        return TQ_OK;
    });
}

tq_status tq_theta_functional_residual(double u_re, double u_im, double q_re, double q_im, double *out)
{
    return guarded([&] {
        TQ_REQUIRE(out);
        const torquad::cplx u(u_re, u_im), q(q_re, q_im);
        if (std::abs(q) >= 1 || u == torquad::cplx(0)) {
            return fail(TQ_ERR_INVALID_ARGUMENT, "need 0 < |q| < 1 and u != 0");
        }
        *out = torquad::theta_functional_residual_value(u, q);
        return TQ_OK;
    });
}

tq_status tq_theta_functional_series_residual(tq_upoint u, int terms, double *out)
{
    return guarded([&] {
        TQ_REQUIRE(out && terms >= 1);
        *out = torquad::theta_functional_residual(to_upoint(u), terms);
        return TQ_OK;
    });
}

tq_status tq_x_difference_residual(tq_upoint u1, tq_upoint u2, int terms, double *out)
{
    return guarded([&] {
        TQ_REQUIRE(out && terms >= 1);
        *out = torquad::x_diff_identity_residual(to_upoint(u1), to_upoint(u2), terms);
        return TQ_OK;
    });
}

tq_status tq_theta_ratio(const tq_quad *q, double q_re, double q_im, int terms, double *re, double *im, int *fallback)
{
    return guarded([&] {
        TQ_REQUIRE(q && re && im && terms >= 0);
        const auto r = torquad::theta_cross_ratio(q->q, torquad::cplx(q_re, q_im), terms);
        split(r.value, re, im);
        if (fallback) {
            *fallback = r.fallback ? 1 : 0;
        }
        return TQ_OK;
    });
}

tq_status tq_curve_verify(int case_number, int samples, uint64_t seed, tq_curve_report **out)
{
    return guarded([&] {
        TQ_REQUIRE(out);
        auto *r = new tq_curve_report{torquad::curve_verify(case_number, samples, seed), {}, {}};
        for (const auto &[name, v] : r->r.residuals) {
            r->names.push_back(name);
            r->values.push_back(v);
        }
        *out = r;
        return TQ_OK;
    });
}

void tq_curve_report_free(tq_curve_report *r)
{
    delete r;
}

tq_status tq_curve_report_summary(const tq_curve_report *r, tq_curve_summary *out)
{
    return guarded([&] {
        TQ_REQUIRE(r && out);
        out->case_number = r->r.case_number;
        out->samples = r->r.samples;
        out->seed = r->r.seed;
        out->model = r->r.model.c_str();
        out->expected = static_cast<double>(r->r.expected.real());
        out->constant_error = r->r.constant_error;
        out->max_spread = r->r.max_spread;
        out->tol = r->r.tol;
        out->constant_count = r->r.constants.size();
        out->residual_count = r->names.size();
        out->pass = r->r.pass ? 1 : 0;
        return TQ_OK;
    });
}

tq_status tq_curve_report_constant(const tq_curve_report *r, size_t i, double *re, double *im)
{
    return guarded([&] {
        TQ_REQUIRE(r && re && im);
        if (i >= r->r.constants.size()) {
            return fail(TQ_ERR_OUT_OF_RANGE, "constant index out of range");
        }
        split(r->r.constants[i], re, im);
        return TQ_OK;
    });
}

tq_status tq_curve_report_residual(const tq_curve_report *r, size_t i, const char **name, double *value)
{
    return guarded([&] {
        TQ_REQUIRE(r && name && value);
        if (i >= r->names.size()) {
            return fail(TQ_ERR_OUT_OF_RANGE, "residual index out of range");
        }
        *name = r->names[i].c_str();
        *value = r->values[i];
        return TQ_OK;
    });
}

tq_status tq_delta(const tq_quad *q, int terms, double tol, tq_delta_summary *out)
{
    return guarded([&] {
        TQ_REQUIRE(q && out && terms >= 1 && tol > 0);
        std::optional<torquad::DeltaReport> found;
        try {
            found.emplace(torquad::delta_report(q->q, terms, tol));
        } catch (const std::runtime_error &e) {
            return fail(TQ_ERR_NUMERIC, e.what());
        }
        const torquad::DeltaReport &rep = *found;
        out->n = rep.n;
        out->terms = rep.terms;
        out->tol = rep.tol;
        out->transpose_convention = rep.convention == torquad::DeltaConvention::Transpose ? 1 : 0;
        out->gamma_order_mod_pm = rep.gamma_order_mod_pm;
        out->delta_order_mod_pm = rep.delta_order_mod_pm;
        out->gamma_size = rep.gamma.size();
        out->delta_size = rep.delta.size();
        out->delta_is_subgroup = rep.delta_is_subgroup ? 1 : 0;
        out->gamma_in_delta = rep.gamma_in_delta ? 1 : 0;
        out->alt_delta_order_mod_pm = rep.alt_delta_order_mod_pm;
        out->alt_gamma_in_delta = rep.alt_gamma_in_delta ? 1 : 0;
        return TQ_OK;
    });
}

} // extern "C"
