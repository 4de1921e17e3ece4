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

// Command-line front end. Talks to the library only through torquad.h.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "torquad/torquad.h"

namespace
{

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 12345;

struct CliError
{
    int code;
    std::string message;
};

void check(tq_status st)
{
    if (st == TQ_OK) {
        return;
    }
    const bool usage = st == TQ_ERR_PARSE || st == TQ_ERR_INVALID_ARGUMENT || st == TQ_ERR_OUT_OF_RANGE;
    throw CliError{usage ? kExitUsage : kExitFail, std::string(tq_status_name(st)) + ": " + tq_last_error()};
}

using QuadPtr = std::unique_ptr<tq_quad, decltype(&tq_quad_free)>;
using ListPtr = std::unique_ptr<tq_quad_list, decltype(&tq_quad_list_free)>;

QuadPtr parse(const std::string &text)
{
    tq_quad *q = nullptr;
    check(tq_quad_parse(text.c_str(), &q));
    return QuadPtr(q, tq_quad_free);
}

std::string text_of(const tq_quad *q)
{
    std::size_t need = 0;
    tq_quad_format(q, nullptr, 0, &need);
    std::string s(need, '\0');
    check(tq_quad_format(q, s.data(), s.size(), &need));
    s.resize(need - 1);
    return s;
}

std::int64_t order_of(const tq_quad *q)
{
    std::int64_t n = 0;
    check(tq_quad_order(q, &n));
    return n;
}

std::string matrix_text(const std::int64_t m[4])
{
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) + "," +
           std::to_string(m[3]) + "]]";
}

std::string fraction_text(std::int64_t num, std::int64_t den)
{
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Table labels are matched within this distance.
constexpr double kTagTol = 1e-6;

const char *match_label(double re, double im)
{
    struct Tag
    {
        double v;
        const char *label;
    };
    static const Tag tags[] = {{27.0 / 4.0, "27/4"}, {0.0, "0"}, {0.5, "1/2"}, {8.0 / 3.0, "8/3"}};
    for (const auto &t : tags) {
        if (std::hypot(re - t.v, im) <= kTagTol * std::max(1.0, std::abs(t.v))) {
            return t.label;
        }
    }
    return nullptr;
}

void emit(const json &j)
{
    std::cout << j.dump(2) << "\n";
}

// ---- classify ----

struct ClassifyArgs
{
    std::int64_t max_order = 12;
    bool no_prune = false;
    bool json_out = false;
};

int run_classify(const ClassifyArgs &a)
{
    if (a.max_order < 1) {
        throw CliError{kExitUsage, "--max-order must be at least 1"};
    }
    if (a.max_order > 16) {
        std::cerr << "warning: --max-order " << a.max_order << " above 16 can take a long time\n";
    }
    tq_quad_list *raw = nullptr;
    tq_classify_stats st{};
    check(tq_classify(a.max_order, a.no_prune ? 0 : 1, &raw, &st));
    ListPtr list(raw, tq_quad_list_free);
    int pass = 0;
    std::size_t missing = 0, extra = 0;
    check(tq_match_families(list.get(), a.max_order, &pass, &missing, &extra));

    json arr = json::array();
    const std::size_t n = tq_quad_list_size(list.get());
    for (std::size_t i = 0; i < n; ++i) {
        const tq_quad *q = nullptr;
        check(tq_quad_list_get(list.get(), i, &q));
        json e;
        e["quad"] = text_of(q);
        e["order"] = order_of(q);
        e["status"] = "not_good";
        int found = 0;
        tq_family fam{};
        check(tq_family_lookup(q, &found, &fam));
        if (found) {
            json f;
            f["case"] = fam.case_number;
            if (fam.has_param) {
                f["param"] = fraction_text(fam.param_num, fam.param_den);
            }
            e["family"] = f;
            e["constant"] = {{"value", fam.constant}, {"tag", fam.label}};
        }
        arr.push_back(e);
    }
    if (a.json_out) {
        emit(arr);
    } else {
        for (const auto &e : arr) {
            std::cout << e["quad"].get<std::string>() << "  order " << e["order"].get<std::int64_t>();
            if (e.contains("family")) {
                std::cout << "  case " << e["family"]["case"].get<int>();
                if (e["family"].contains("param")) {
                    std::cout << " (" << e["family"]["param"].get<std::string>() << ")";
                }
                std::cout << "  constant " << e["constant"]["tag"].get<std::string>();
            } else {
                std::cout << "  (not in the family table)";
            }
            std::cout << "\n";
        }
        std::cout << n << " non-good minimal quads of order <= " << a.max_order << "; " << st.minimal_quads
                  << " orbits scanned (" << st.quick_good << " quick, " << st.progression_good << " progression, "
                  << st.full_scans << " full)\n";
        std::cout << "family match: " << (pass ? "PASS" : "FAIL") << " (missing " << missing << ", extra " << extra
                  << ")\n";
    }
    return pass ? kExitOk : kExitFail;
}

// ---- good ----

int run_good(const std::string &quad, bool json_out)
{
    QuadPtr q = parse(quad);
    int good = 0;
    std::int64_t a = 0, b = 0;
    check(tq_good(q.get(), &good, &a, &b));
    json j;
    j["quad"] = text_of(q.get());
    j["order"] = order_of(q.get());
    j["status"] = good ? "good" : "not_good";
    if (good) {
        j["witness"] = {{"a", a}, {"b", b}};
    }
    if (json_out) {
        emit(j);
    } else {
        std::cout << j["quad"].get<std::string>() << ": " << j["status"].get<std::string>();
        if (good) {
            std::cout << " (a, b) = (" << a << ", " << b << ")";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

// ---- verify ----

struct VerifyArgs
{
    std::string quad;
    int terms = 8;
    double tol = 1e-9;
    int numeric_samples = 0;
    bool json_out = false;
};

int run_verify(const VerifyArgs &a)
{
    QuadPtr q = parse(a.quad);
    tq_series *raw = nullptr;
    check(tq_mu_series(q.get(), a.terms, &raw));
    std::unique_ptr<tq_series, decltype(&tq_series_free)> s(raw, tq_series_free);
    tq_constancy c{};
    check(tq_is_constant(s.get(), a.tol, &c));

    int code = kExitOk;
    json j;
    j["quad"] = text_of(q.get());
    j["terms"] = a.terms;
    j["tol"] = a.tol;
    j["status"] = c.constant ? "constant" : "nonconstant";
    if (c.constant) {
        j["constant"] = c.value_re;
        j["constant_im"] = c.value_im;
        if (const char *tag = match_label(c.value_re, c.value_im)) {
            j["tag"] = tag;
        } else {
            std::cerr << "warning: constant " << fmt(c.value_re) << " + " << fmt(c.value_im)
                      << "i matches no table value\n";
            code = kExitFail;
        }
    } else {
        j["first_nonconstant_exponent"] = fraction_text(c.first_exponent, c.scale);
        j["first_coeff"] = {c.first_re, c.first_im};
    }
    if (a.numeric_samples > 0) {
        // q on a fixed ray, so the output is reproducible.
        double spread = 0;
        double re0 = 0, im0 = 0;
        json values = json::array();
        for (int k = 0; k < a.numeric_samples; ++k) {
            const double qv = 0.05 + 0.25 * k / std::max(1, a.numeric_samples - 1);
            double re = 0, im = 0;
            check(tq_mu_value(q.get(), qv, 0.0, 0, &re, &im));
            if (k == 0) {
                re0 = re;
                im0 = im;
            }
            spread = std::max(spread, std::hypot(re - re0, im - im0));
            values.push_back({{"q", qv}, {"re", re}, {"im", im}});
        }
        j["numeric"] = {{"samples", a.numeric_samples}, {"max_spread", spread}, {"values", values}};
        if (c.constant && spread > 1e-6) {
            std::cerr << "warning: series is constant but direct evaluation varies by " << fmt(spread) << "\n";
            code = kExitFail;
        }
    }
    if (a.json_out) {
        emit(j);
    } else {
        std::cout << j["quad"].get<std::string>() << ": " << j["status"].get<std::string>();
        if (c.constant) {
            std::cout << " " << fmt(c.value_re);
            if (j.contains("tag")) {
                std::cout << " (" << j["tag"].get<std::string>() << ")";
            }
        } else {
            std::cout << ", first varying term q^" << j["first_nonconstant_exponent"].get<std::string>();
        }
        std::cout << "\n";
        if (j.contains("numeric")) {
            std::cout << "numeric spread over " << a.numeric_samples << " q values: " << fmt(j["numeric"]["max_spread"])
                      << "\n";
        }
    }
    return code;
}

// ---- theta-check ----

struct ThetaArgs
{
    int trials = 100;
    std::uint64_t seed = kDefaultSeed;
    int terms = 6;
    bool json_out = false;
};

// A random point of R whose denominators divide some m <= max_den, other
// than the origin.
tq_upoint random_upoint(std::mt19937_64 &rng, int max_den)
{
    std::uniform_int_distribution<int> den(2, max_den);
    for (;;) {
        const int m = den(rng);
        std::uniform_int_distribution<int> rnum(0, m / 2);
        std::uniform_int_distribution<int> tnum(0, m - 1);
        tq_upoint u{tnum(rng), m, rnum(rng), m};
        if (u.theta_num != 0 || u.r_num != 0) {
            return u;
        }
    }
}

int run_theta(const ThetaArgs &a)
{
    if (a.trials < 1 || a.terms < 1) {
        throw CliError{kExitUsage, "--trials and --terms must be positive"};
    }
    std::mt19937_64 rng(a.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double fe_max = 0;
    for (int k = 0; k < a.trials; ++k) {
        const double qr = 0.5 * std::sqrt(unit(rng));
        const double qa = 2 * M_PI * unit(rng);
        const double ur = 0.2 + 4.8 * unit(rng);
        const double ua = 2 * M_PI * unit(rng);
        double res = 0;
        check(tq_theta_functional_residual(ur * std::cos(ua), ur * std::sin(ua), qr * std::cos(qa),
                                           qr * std::sin(qa), &res));
        fe_max = std::max(fe_max, res);
    }
    double series_fe = 0, xdiff = 0;
    int pairs = 0;
    for (int k = 0; k < a.trials; ++k) {
        const tq_upoint u = random_upoint(rng, 12);
        tq_upoint v = random_upoint(rng, 12);
        double r = 0;
        check(tq_theta_functional_series_residual(u, a.terms, &r));
        series_fe = std::max(series_fe, r);
        // u1 = u2 and u1 = 1/u2 make a theta factor vanish identically.
        if (u.theta_num * v.theta_den == v.theta_num * u.theta_den && u.r_num * v.r_den == v.r_num * u.r_den) {
            continue;
        }
        const tq_status st = tq_x_difference_residual(u, v, a.terms, &r);
        if (st == TQ_ERR_DEGENERATE) {
            continue;
        }
        check(st);
        xdiff = std::max(xdiff, r);
        ++pairs;
    }
    const bool pass = fe_max < 1e-10 && series_fe < 1e-8 && xdiff < 1e-8;
    json j;
    j["trials"] = a.trials;
    j["seed"] = a.seed;
    j["terms"] = a.terms;
    j["functional_equation_max"] = fe_max;
    j["functional_equation_series_max"] = series_fe;
    j["x_difference_pairs"] = pairs;
    j["x_difference_max"] = xdiff;
    j["status"] = pass ? "pass" : "fail";
    if (a.json_out) {
        emit(j);
    } else {
        std::cout << "functional equation, direct products: " << fmt(fe_max) << "\n"
                  << "functional equation, series:          " << fmt(series_fe) << "\n"
                  << "X difference identity (" << pairs << " pairs):    " << fmt(xdiff) << "\n"
                  << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitFail;
}

// ---- tate-check ----

struct TateArgs
{
    int order = 12;
    int samples = 20;
    std::uint64_t seed = kDefaultSeed;
    int terms = 8;
    int compare_terms = 12;
    double q = 0.05;
    bool json_out = false;
};

int run_tate(const TateArgs &a)
{
    if (a.order < 2 || a.samples < 1 || a.terms < 1 || a.compare_terms < 1 || !(a.q > 0 && a.q < 1)) {
        throw CliError{kExitUsage, "need --order >= 2, positive --samples and --terms, 0 < --q < 1"};
    }
    std::mt19937_64 rng(a.seed);
    double eq = 0, xe = 0, ye = 0;
    for (int k = 0; k < a.samples; ++k) {
        const tq_upoint u = random_upoint(rng, a.order);
        double r = 0, x = 0, y = 0;
        check(tq_tate_residual(u, a.terms, &r));
        check(tq_tate_direct_residual(u, a.compare_terms, a.q, &x, &y));
        eq = std::max(eq, r);
        xe = std::max(xe, x);
        ye = std::max(ye, y);
    }
    const bool pass = eq < 1e-8 && xe < 1e-8 && ye < 1e-8;
    json j;
    j["order"] = a.order;
    j["samples"] = a.samples;
    j["seed"] = a.seed;
    j["terms"] = a.terms;
    j["compare_terms"] = a.compare_terms;
    j["q"] = a.q;
    j["equation_max"] = eq;
    j["x_direct_max"] = xe;
    j["y_direct_max"] = ye;
    j["status"] = pass ? "pass" : "fail";
    if (a.json_out) {
        emit(j);
    } else {
        std::cout << "curve equation residual:  " << fmt(eq) << "\n"
                  << "X series vs direct sum:   " << fmt(xe) << "\n"
                  << "Y series vs direct sum:   " << fmt(ye) << "\n"
                  << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitFail;
}

// ---- curve-verify ----

int run_curve(int case_number, int samples, std::uint64_t seed, bool json_out)
{
    tq_curve_report *raw = nullptr;
    check(tq_curve_verify(case_number, samples, seed, &raw));
    std::unique_ptr<tq_curve_report, decltype(&tq_curve_report_free)> r(raw, tq_curve_report_free);
    tq_curve_summary s{};
    check(tq_curve_report_summary(r.get(), &s));
    json j;
    j["case"] = s.case_number;
    j["model"] = s.model;
    j["samples"] = s.samples;
    j["seed"] = s.seed;
    json cs = json::array();
    for (std::size_t i = 0; i < s.constant_count; ++i) {
        double re = 0, im = 0;
        check(tq_curve_report_constant(r.get(), i, &re, &im));
        json c = {{"re", re}, {"im", im}};
        if (const char *tag = match_label(re, im)) {
            c["tag"] = tag;
        }
        cs.push_back(c);
    }
    j["constants"] = cs;
    j["expected"] = s.expected;
    j["constant_error"] = s.constant_error;
    j["max_spread"] = s.max_spread;
    json res = json::object();
    for (std::size_t i = 0; i < s.residual_count; ++i) {
        const char *name = nullptr;
        double v = 0;
        check(tq_curve_report_residual(r.get(), i, &name, &v));
        res[name] = v;
    }
    j["residuals"] = res;
    j["tol"] = s.tol;
    j["status"] = s.pass ? "pass" : "fail";
    if (json_out) {
        emit(j);
    } else {
        std::cout << "case " << s.case_number << " (" << s.model << " model, " << s.samples << " samples)\n";
        for (const auto &c : cs) {
            std::cout << "  constant " << fmt(c["re"]) << (c.contains("tag") ? " = " + c["tag"].get<std::string>() : "")
                      << "\n";
        }
        std::cout << "  max spread " << fmt(s.max_spread) << ", constant error " << fmt(s.constant_error) << "\n";
        for (const auto &[name, v] : res.items()) {
            std::cout << "  " << name << " " << fmt(v) << "\n";
        }
        std::cout << (s.pass ? "PASS" : "FAIL") << "\n";
    }
    return s.pass ? kExitOk : kExitFail;
}

// ---- delta ----

int run_delta(const std::string &quad, int terms, double tol, bool json_out)
{
    QuadPtr q = parse(quad);
    tq_delta_summary d{};
    check(tq_delta(q.get(), terms, tol, &d));
    const bool ok = d.gamma_in_delta && d.delta_is_subgroup;
    json j;
    j["quad"] = text_of(q.get());
    j["n"] = d.n;
    j["terms"] = d.terms;
    j["tol"] = d.tol;
    j["convention"] = d.transpose_convention ? "transpose" : "direct";
    j["gamma_S_order_mod_pm"] = d.gamma_order_mod_pm;
    j["delta_S_order_mod_pm"] = d.delta_order_mod_pm;
    j["gamma_S_size"] = d.gamma_size;
    j["delta_S_size"] = d.delta_size;
    j["delta_is_subgroup"] = static_cast<bool>(d.delta_is_subgroup);
    j["gamma_in_delta"] = static_cast<bool>(d.gamma_in_delta);
    j["other_convention"] = {{"delta_S_order_mod_pm", d.alt_delta_order_mod_pm},
                             {"gamma_in_delta", static_cast<bool>(d.alt_gamma_in_delta)}};
    j["status"] = ok ? "pass" : "fail";
    if (json_out) {
        emit(j);
    } else {
        std::cout << j["quad"].get<std::string>() << " (n = " << d.n << ", q^" << d.terms << ", tol " << fmt(d.tol)
                  << ", " << j["convention"].get<std::string>() << " convention)\n"
                  << "  |Gamma_S / +-Gamma(n)| = " << d.gamma_order_mod_pm << "\n"
                  << "  |Delta_S / +-Gamma(n)| = " << d.delta_order_mod_pm << "\n"
                  << "  Delta_S closed: " << (d.delta_is_subgroup ? "yes" : "no")
                  << ", contains Gamma_S: " << (d.gamma_in_delta ? "yes" : "no") << "\n";
    }
    return ok ? kExitOk : kExitFail;
}

// ---- orbit / minrep ----

int run_orbit(const std::string &quad, bool json_out)
{
    QuadPtr q = parse(quad);
    tq_quad_list *raw = nullptr;
    check(tq_orbit(q.get(), &raw));
    ListPtr list(raw, tq_quad_list_free);
    json arr = json::array();
    for (std::size_t i = 0; i < tq_quad_list_size(list.get()); ++i) {
        const tq_quad *e = nullptr;
        check(tq_quad_list_get(list.get(), i, &e));
        arr.push_back(text_of(e));
    }
    if (json_out) {
        emit(json{{"quad", text_of(q.get())}, {"size", arr.size()}, {"orbit", arr}});
    } else {
        for (const auto &s : arr) {
            std::cout << s.get<std::string>() << "\n";
        }
        std::cout << arr.size() << " quads\n";
    }
    return kExitOk;
}

int run_minrep(const std::string &quad, bool json_out)
{
    QuadPtr q = parse(quad);
    tq_quad *raw = nullptr;
    std::int64_t m[4] = {};
    check(tq_minimal_representative(q.get(), &raw, m));
    QuadPtr mn(raw, tq_quad_free);
    if (json_out) {
        emit(json{{"quad", text_of(q.get())}, {"minimal", text_of(mn.get())}, {"witness", matrix_text(m)}});
    } else {
        std::cout << text_of(mn.get()) << "\n" << "witness " << matrix_text(m) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Torsion quadruples with constant cross ratio"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tq_version());

    ClassifyArgs ca;
    auto *classify = app.add_subcommand("classify", "List non-good minimal quads up to a common order");
    classify->add_option("--max-order,-N", ca.max_order, "Largest common order")->capture_default_str();
    classify->add_flag("--no-prune", ca.no_prune, "Scan every residue without the pruning filters");
    classify->add_flag("--json", ca.json_out, "JSON output");

    std::string quad;
    bool json_out = false;
    auto add_quad = [&](CLI::App *sub) {
        sub->add_option("--quad,-q", quad, "Quad as r,theta;r,theta;r,theta;r,theta")->required();
        sub->add_flag("--json", json_out, "JSON output");
    };

    auto *good = app.add_subcommand("good", "Decide goodness and print a witness");
    add_quad(good);

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Check whether mu_S is constant");
    verify->add_option("--quad,-q", va.quad, "Quad")->required();
    verify->add_option("--terms,-D", va.terms, "Truncation in powers of q")->capture_default_str()->check(CLI::Range(1, 64));
    verify->add_option("--tol", va.tol, "Constancy tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--numeric-samples", va.numeric_samples, "Direct evaluations at real q")
        ->capture_default_str()
        ->check(CLI::Range(0, 1000));
    verify->add_flag("--json", va.json_out, "JSON output");

    ThetaArgs ta;
    auto *theta = app.add_subcommand("theta-check", "Theta function identities");
    theta->add_option("--trials", ta.trials, "Random trials")->capture_default_str();
    theta->add_option("--seed", ta.seed, "Random seed")->capture_default_str();
    theta->add_option("--terms,-D", ta.terms, "Series truncation")->capture_default_str()->check(CLI::Range(1, 32));
    theta->add_flag("--json", ta.json_out, "JSON output");

    TateArgs tt;
    auto *tate = app.add_subcommand("tate-check", "Tate curve equation and direct sums at torsion points");
    tate->add_option("--order", tt.order, "Largest denominator of sampled points")->capture_default_str();
    tate->add_option("--samples", tt.samples, "Random points")->capture_default_str();
    tate->add_option("--seed", tt.seed, "Random seed")->capture_default_str();
    tate->add_option("--terms,-D", tt.terms, "Series truncation")->capture_default_str()->check(CLI::Range(1, 32));
    tate->add_option("--compare-terms", tt.compare_terms, "Series truncation for the direct comparison")
        ->capture_default_str()
        ->check(CLI::Range(1, 32));
    tate->add_option("--q", tt.q, "Real q for the direct comparison")->capture_default_str();
    tate->add_flag("--json", tt.json_out, "JSON output");

    int case_number = 0;
    int samples = 100;
    std::uint64_t seed = kDefaultSeed;
    auto *curve = app.add_subcommand("curve-verify", "Check a family on the Jacobian or Hessian model");
    curve->add_option("--case,-k", case_number, "Family number")->required()->check(CLI::Range(1, 11));
    curve->add_option("--samples", samples, "Random curve parameters")->capture_default_str()->check(CLI::Range(1, 1000000));
    curve->add_option("--seed", seed, "Random seed")->capture_default_str();
    curve->add_flag("--json", json_out, "JSON output");

    int delta_terms = 4;
    double delta_tol = 1e-8;
    auto *delta = app.add_subcommand("delta", "Compare Gamma_S and Delta_S");
    add_quad(delta);
    delta->add_option("--terms,-D", delta_terms, "Truncation in powers of q")->capture_default_str()->check(CLI::Range(1, 32));
    delta->add_option("--tol", delta_tol, "Coefficient tolerance")->capture_default_str()->check(CLI::PositiveNumber);

    auto *orbit = app.add_subcommand("orbit", "SL2 orbit of a quad");
    add_quad(orbit);
    auto *minrep = app.add_subcommand("minrep", "Lexicographically least quad in the orbit");
    add_quad(minrep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*classify) {
            return run_classify(ca);
        }
        if (*good) {
            return run_good(quad, json_out);
        }
        if (*verify) {
            return run_verify(va);
        }
        if (*theta) {
            return run_theta(ta);
        }
        if (*tate) {
            return run_tate(tt);
        }
        if (*curve) {
            return run_curve(case_number, samples, seed, json_out);
        }
        if (*delta) {
            return run_delta(quad, delta_terms, delta_tol, json_out);
        }
        if (*orbit) {
            return run_orbit(quad, json_out);
        }
        if (*minrep) {
            return run_minrep(quad, json_out);
        }
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return kExitUsage;
}
