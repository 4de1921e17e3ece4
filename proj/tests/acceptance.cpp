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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "torquad/classifier.hpp"
#include "torquad/curve_forms.hpp"
#include "torquad/goodness.hpp"
#include "torquad/modular_groups.hpp"
#include "torquad/qseries.hpp"

using namespace torquad;

namespace
{

using Clock = std::chrono::steady_clock;

std::mt19937_64 rng(12345);

std::int64_t uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

double uniform_real(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double cabs(cplx z) { return static_cast<double>(std::abs(z)); }

// A point of R with denominators dividing some m <= max_den, not the origin.
UPoint random_torsion_upoint(std::int64_t max_den)
{
    for (;;) {
        const std::int64_t m = uniform(2, max_den);
        const UPoint u{Rat(uniform(0, m - 1), m), Rat(uniform(0, m / 2), m)};
        if (!u.is_trivial()) {
            return u;
        }
    }
}

Quad random_level_quad(std::int64_t n)
{
    for (;;) {
        std::array<TorsionCoord, 4> p{};
        for (auto &x : p) {
            x = f_pair(Rat(uniform(0, n - 1), n), Rat(uniform(0, n - 1), n));
        }
        try {
            return Quad(p);
        } catch (const DuplicatePointError &) {
        }
    }
}

Mat2 random_mat2()
{
    static const Mat2 T(1, 1, 0, 1);
    static const Mat2 Ti(1, -1, 0, 1);
    static const Mat2 S(0, -1, 1, 0);
    Mat2 g;
    const std::int64_t len = uniform(0, 10);
    for (std::int64_t i = 0; i < len; ++i) {
        const std::int64_t k = uniform(0, 2);
        g = g * (k == 0 ? T : k == 1 ? Ti : S);
    }
    return g;
}

int failures = 0;

void report(int id, bool pass, const std::string &detail)
{
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += pass ? 0 : 1;
}

std::string fmt(const char *f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<ClassifiedQuad> classified;

void criterion1()
{
    const auto t0 = Clock::now();
    ClassifyStats stats;
    classified = classify(ClassifyOptions{12, true}, &stats);
    const double secs = seconds_since(t0);
    const MatchReport m = match_families(classified, 12);
    bool agree = true;
    for (std::int64_t n = 2; n <= 8; ++n) {
        const auto a = classify(ClassifyOptions{n, true});
        const auto b = classify(ClassifyOptions{n, false});
        agree = agree && a.size() == b.size() &&
                std::equal(a.begin(), a.end(), b.begin(), [](const ClassifiedQuad &x, const ClassifiedQuad &y) {
                    return x.quad == y.quad && x.order == y.order;
                });
    }
    const bool pass = m.pass && classified.size() == 17 && secs < 300.0 && agree;
    report(1, pass,
           "quads=" + std::to_string(classified.size()) + " match=" + (m.pass ? "yes" : "no") +
               " missing=" + std::to_string(m.missing.size()) + " extra=" + std::to_string(m.extra.size()) +
               " pruned_eq_unpruned(N<=8)=" + (agree ? "yes" : "no") + fmt(" time=%.2fs", secs));
}

void criterion2()
{
    bool pass = classified.size() == 17;
    double worst_tail = 0, worst_const = 0;
    for (const auto &c : classified) {
        const auto fam = lookup_family(c.quad);
        if (!fam) {
            pass = false;
            continue;
        }
        const LaurentSeries mu = mu_series(c.quad, 8);
        for (std::int64_t e = mu.lead(); e < mu.prec(); ++e) {
            if (e != 0) {
                worst_tail = std::max(worst_tail, cabs(mu.coeff(e)));
            }
        }
        const Constancy k = is_constant(mu, 1e-9);
        const double err = cabs(k.value - cplx(tag_value(fam->tag).to_double()));
        worst_const = std::max(worst_const, err);
        pass = pass && k.constant && err < 1e-9;
    }
    report(2, pass, fmt("max nonconstant coeff=%.2e", worst_tail) + fmt(" max constant error=%.2e", worst_const));
}

void criterion3()
{
    std::vector<Quad> good;
    for (std::int64_t n = 2; n <= 10; ++n) {
        for (const Quad &s : enumerate_minimal_quads(n)) {
            if (good_quad(s)) {
                good.push_back(s);
            }
        }
    }
    std::vector<Quad> pick;
    std::sample(good.begin(), good.end(), std::back_inserter(pick), 20, rng);
    int exp_ok = 0, sep_ok = 0;
    double min_sep = 1e300;
    for (const Quad &s : pick) {
        const Constancy c = is_constant(mu_series(s, 8), 1e-9);
        const Witness w = *good_quad(s);
        const Quad t = act(w.matrix(), s);
        const std::int64_t scale = 2 * t.common_order();
        const std::int64_t gap = ((t[2].r - t[1].r) * Rat(scale)).num();
        // In the witness form the cross ratio vanishes to order q^(r3 - r2)
        // at the cusp, so mu = j6(cross ratio) has a pole of twice that order.
        const LaurentSeries cr = quad_cross_ratio_series(t, 8).stripped();
        const Constancy ct = is_constant(mu_series(t, 8), 1e-9);
        if (!c.constant && cr.lead() == gap && !ct.constant && ct.first_exponent == -2 * gap && gap > 0) {
            ++exp_ok;
        }
        const double sep = cabs(mu_value(s, cplx(0.1)) - mu_value(s, cplx(0.2)));
        min_sep = std::min(min_sep, sep);
        if (sep > 1e-3) {
            ++sep_ok;
        } else {
            std::printf("  criterion 3 numeric separation %.3e for %s\n", sep, format_quad(s).c_str());
        }
    }
    int census_bad = 0;
    for (const Quad &s : good) {
        if (cabs(mu_value(s, cplx(0.1)) - mu_value(s, cplx(0.2))) <= 1e-3) {
            ++census_bad;
        }
    }
    std::printf("  info: %d of %zu good minimal quads of order <= 10 have |mu(0.1)-mu(0.2)| <= 1e-3\n", census_bad,
                good.size());
    report(3, pick.size() == 20 && exp_ok == 20 && sep_ok == 20,
           "sampled=" + std::to_string(pick.size()) + " exponent_ok=" + std::to_string(exp_ok) +
               " separated=" + std::to_string(sep_ok) + fmt(" min_sep=%.3e", min_sep));
}

void criterion4()
{
    double worst_fe = 0;
    for (int i = 0; i < 100; ++i) {
        const cplx q = std::polar<real>(uniform_real(0.01, 0.5), uniform_real(-std::numbers::pi, std::numbers::pi));
        const cplx u = random_torsion_upoint(12).value(q) *
                       std::polar<real>(1.0, uniform_real(-std::numbers::pi, std::numbers::pi));
        worst_fe = std::max(worst_fe, theta_functional_residual_value(u, q));
    }
    double worst_xd = 0;
    for (int i = 0; i < 50;) {
        const UPoint a = random_torsion_upoint(12);
        const UPoint b = random_torsion_upoint(12);
        if ((a * b).is_trivial() || (a * b.inverse()).is_trivial()) {
            continue;
        }
        worst_xd = std::max(worst_xd, x_diff_identity_residual(a, b, 6));
        ++i;
    }
    double worst_c9 = 0;
    const std::array<cplx, 5> qs{cplx(0.05), cplx(0.1), std::polar<real>(0.1, std::numbers::pi / 5), cplx(0, 0.2),
                                 cplx(0.3)};
    for (const auto &c : classified) {
        const cplx first = theta_cross_ratio(c.quad, qs[0]).value;
        for (const cplx q : qs) {
            const cplx v = theta_cross_ratio(c.quad, q).value;
            worst_c9 = std::max(worst_c9, cabs(v - first) / std::max(1.0, cabs(first)));
        }
    }
    report(4, worst_fe < 1e-10 && worst_xd < 1e-8 && worst_c9 < 1e-9 && classified.size() == 17,
           fmt("functional=%.2e", worst_fe) + fmt(" x_difference=%.2e", worst_xd) +
               fmt(" theta_ratio_spread=%.2e", worst_c9));
}

void criterion5()
{
    double worst_series = 0, worst_direct = 0;
    const cplx q(0.05);
    for (int i = 0; i < 20; ++i) {
        const UPoint u = random_torsion_upoint(12);
        worst_series = std::max(worst_series, tate_point_residual(u, 8).max_abs());
        // The q^8 truncation alone leaves a tail near 1e-8 at q = 0.05, so
        // the direct comparison uses q^12.
        const real ex = std::abs(x_series(u, 12).evaluate(q) - x_value(u, q));
        const real ey = std::abs(y_series(u, 12).evaluate(q) - y_value(u, q));
        worst_direct = std::max(worst_direct, static_cast<double>(std::max(ex, ey)));
    }
    report(5, worst_series < 1e-8 && worst_direct < 1e-8,
           fmt("series residual=%.2e", worst_series) + fmt(" series_vs_direct=%.2e", worst_direct));
}

void criterion6()
{
    bool pass = true;
    double worst_spread = 0, worst_route = 0;
    std::string detail;
    const auto fam = family_table(12);
    for (int k = 1; k <= 11; ++k) {
        const CurveCaseReport r = curve_verify(k, 100, 12345);
        worst_spread = std::max(worst_spread, r.max_spread);
        bool listed = false;
        for (const cplx c : r.constants) {
            listed = listed || cabs(c - r.expected) < 1e-9;
        }
        bool ok = r.pass && r.max_spread < 1e-9 && listed;
        if (k == 6 || k == 7) {
            ok = ok && r.constants.size() == 2 && cabs(r.constants[0]) < 1e-9 &&
                 cabs(r.constants[1] - cplx(8.0L / 3)) < 1e-9;
        }
        for (const auto &e : fam) {
            if (e.case_number != k) {
                continue;
            }
            const Constancy c = is_constant(mu_series(e.quad, 8), 1e-9);
            const double d = cabs(c.value - r.expected);
            worst_route = std::max(worst_route, d);
            ok = ok && c.constant && d < 1e-8;
        }
        if (!ok) {
            detail += " case" + std::to_string(k) + "=fail";
        }
        pass = pass && ok;
    }
    report(6, pass, fmt("cases=11 samples=100 max_spread=%.2e", worst_spread) + fmt(" curve_vs_q=%.2e", worst_route) + detail);
}

void criterion7()
{
    const auto t0 = Clock::now();
    const Quad s = level5_example().front();
    const DeltaReport rep = delta_report(s, 4, 1e-8);
    const PartitionCheck pc = delta_equivalence_classes(level5_example(), 5, 4, 1e-8);
    const double secs = seconds_since(t0);
    const bool pass = rep.gamma_order_mod_pm == 4 && rep.delta_order_mod_pm == 12 && pc.mu_equal && pc.disjoint &&
                      pc.covers && pc.union_size == 12 && secs < 60.0;
    report(7, pass,
           "gamma=" + std::to_string(rep.gamma_order_mod_pm) + " delta=" + std::to_string(rep.delta_order_mod_pm) +
               " convention=" + convention_name(rep.convention) + " partition=" +
               (pc.mu_equal && pc.disjoint && pc.covers ? "yes" : "no") + fmt(" time=%.2fs", secs));
}

void criterion8()
{
    const int N = 1000;
    int action = 0, goodness = 0, fmap = 0, ring = 0, groups = 0;
    for (int i = 0; i < N; ++i) {
        const Quad s = random_level_quad(uniform(2, 12));
        const Mat2 g = random_mat2();
        const Mat2 h = random_mat2();
        if (act(Mat2(), s) == s && act(g * h, s) == act(g, act(h, s)) && act(-g, s) == act(g, s)) {
            ++action;
        }
        if (good_quad(s).has_value() == good_quad(act(g, s)).has_value()) {
            ++goodness;
        }
        const std::int64_t m = uniform(1, 60);
        const Rat x(uniform(-5 * m, 5 * m), m);
        const TorsionCoord p = f_pair(Rat(uniform(-3 * m, 3 * m), m), x);
        if (f_scalar(f_scalar(x)) == f_scalar(x) && f_scalar(-x) == f_scalar(x) &&
            f_pair(-p.r, -p.theta) == p && f_pair(p.r, p.theta) == p) {
            ++fmap;
        }
    }
    for (int i = 0; i < N; ++i) {
        auto series = [&](std::int64_t scale) {
            const std::int64_t lead = uniform(-2, 2);
            const std::int64_t len = uniform(1, 8);
            std::vector<cplx> c(static_cast<std::size_t>(len));
            for (auto &x : c) {
                x = cplx(uniform_real(-1, 1), uniform_real(-1, 1));
            }
            c[0] += cplx(2);
            return LaurentSeries(scale, lead, c, lead + len + uniform(0, 4));
        };
        const std::int64_t sc = uniform(1, 3);
        const LaurentSeries a = series(sc), b = series(uniform(1, 3)), c = series(sc);
        if (approx_equal((a + b) + c, a + (b + c), 1e-12) && approx_equal(a * b, b * a, 1e-12) &&
            approx_equal((a * b) * c, a * (b * c), 1e-12) && approx_equal(a * (b + c), a * b + a * c, 1e-12) &&
            approx_equal(a * a.inverse(), LaurentSeries::constant(1, sc), 1e-10)) {
            ++ring;
        }
    }
    for (int i = 0; i < N; ++i) {
        const Quad s = random_level_quad(uniform(3, 4));
        const SubgroupModN gamma = stabilizer_gamma_S(s);
        const SubgroupModN delta = delta_S(s, 4, 1e-8);
        if (gamma.is_subgroup() && delta.is_subgroup() && gamma.is_subset_of(delta)) {
            ++groups;
        }
    }
    report(8, action == N && goodness == N && fmap == N && ring == N && groups == N,
           "instances=" + std::to_string(N) + " action=" + std::to_string(action) + " goodness=" +
               std::to_string(goodness) + " F=" + std::to_string(fmap) + " ring=" + std::to_string(ring) +
               " subgroups=" + std::to_string(groups));
}

} // namespace

int main()
{
    const std::vector<std::function<void()>> steps{criterion1, criterion2, criterion3, criterion4,
                                                   criterion5, criterion6, criterion7, criterion8};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            steps[i]();
        } catch (const std::exception &e) {
            report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
        }
    }
    return failures == 0 ? 0 : 1;
}
