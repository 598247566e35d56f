#include "symdiff_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <symdiff/symdiff.hpp>

#include "symdiff_cli/json.hpp"
#include "symdiff_cli/sweep.hpp"

namespace symdiff::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Output {
    Json json;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::optional<std::string> failure;
};

struct Options {
    int n = 0;
    std::int64_t m = 0;
    std::int64_t m_from = 0;
    std::int64_t m_to = -1;
    int degree = 3;
    int max_period = 12;
    bool csv = false;
    bool json = false;
    std::string cache;
    unsigned parallel = 1;
    std::string config;
    bool no_timestamp = false;
    std::string series = "hsum";
};

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

Output flat(Json j) {
    Output out;
    std::vector<std::string> row;
    for (const auto& [key, value] : j.items()) {
        out.header.push_back(key);
        row.push_back(cell(value));
    }
    out.rows.push_back(std::move(row));
    out.json = std::move(j);
    return out;
}

void check_range(const char* flag, std::int64_t v, std::int64_t lo, std::int64_t hi) {
    if (v < lo || v > hi)
        throw DomainError(std::string(flag) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "], got " + std::to_string(v));
}

Json integer_or_string(const Rational& r) {
    if (r.is_integer()) return to_int64(r.num());
    return r.str();
}

Json rational_list(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Rational rational_field(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw ParseError(std::string("field '") + key + "' must be an integer or a \"p/q\" string");
}

SurfaceConfig read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
        SurfaceConfig cfg;
        cfg.name = j.value("name", "");
        if (j.contains("s2")) cfg.s2 = rational_field(j, "s2");
        if (j.contains("c1sq")) cfg.c1sq = rational_field(j, "c1sq");
        if (j.contains("c2")) cfg.c2 = rational_field(j, "c2");
        for (const auto& s : j.value("singularities", nlohmann::json::array())) {
            SingularityEntry e;
            e.type = s.value("type", "A");
            e.n = s.at("n").get<int>();
            e.count = s.at("count").get<std::int64_t>();
            cfg.singularities.push_back(e);
        }
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed config " + path + ": " + e.what());
    }
}

Output do_hsum(const Options& o) {
    check_range("--n", o.n, 1, 1000);
    check_range("--m", o.m, 0, 20000);
    const auto value = o.parallel > 1 ? hsum_parallel(o.n, o.m, o.parallel) : hsum(o.n, o.m);
    return flat(Json{{"n", o.n}, {"m", o.m}, {"hsum", value}});
}

Output do_sweep(const Options& o) {
    check_range("--n", o.n, 1, 500);
    check_range("--m-from", o.m_from, 0, 20000);
    check_range("--m-to", o.m_to, o.m_from - 1, 20000);
    std::optional<std::filesystem::path> cache;
    if (!o.cache.empty()) cache = o.cache;
    const auto rows = sweep(o.n, o.m_from, o.m_to, o.parallel, cache);

    Output out;
    out.header = {"m", "hsum", "mu", "chi_orb", "h1"};
    Json table = Json::array();
    for (const auto& r : rows) {
        if (!out.failure && !(r.h1.is_integer() && r.h1.sign() >= 0))
            out.failure = "h1(" + std::to_string(o.n) + "," + std::to_string(r.m) +
                          ") is not a nonnegative integer: " + r.h1.str();
        Json row{{"m", r.m}, {"hsum", r.hsum}, {"mu", r.mu.str()}, {"chi_orb", r.chi_orb.str()},
                 {"h1", integer_or_string(r.h1)}};
        out.rows.push_back({cell(row["m"]), cell(row["hsum"]), cell(row["mu"]), cell(row["chi_orb"]), cell(row["h1"])});
        table.push_back(std::move(row));
    }
    out.json = Json{{"n", o.n}, {"m_from", o.m_from}, {"m_to", o.m_to}};
    if (!o.no_timestamp) out.json["generated_at"] = utc_now();
    out.json["rows"] = std::move(table);
    return out;
}

Output do_oracle(const Options& o) {
    check_range("--n", o.n, 1, 8);
    check_range("--m", o.m, 0, 24);
    const auto formula = hsum(o.n, o.m);
    const auto oracle = hsum_oracle(o.n, o.m);
    bool general = true;
    for (std::int64_t i = 0; i <= (o.n + 1) * o.m + o.n && general; ++i)
        for (std::int64_t kh = -(i + o.m) / (o.n + 1); kh * (o.n + 1) <= i + o.m && general; ++kh) {
            const TripleIndex t{o.n, kh, i, o.m};
            if (satisfies_parity(t)) general = general_position_check(t);
        }
    auto out = flat(Json{{"n", o.n},
                         {"m", o.m},
                         {"formula", formula},
                         {"oracle", oracle},
                         {"match", formula == oracle},
                         {"general_position", general}});
    if (formula != oracle)
        out.failure = "lattice sum " + std::to_string(formula) + " differs from oracle " + std::to_string(oracle);
    else if (!general)
        out.failure = "general position fails";
    return out;
}

Output do_omega(const Options& o) {
    check_range("--n", o.n, 1, 100000);
    return flat(Json{{"n", o.n}, {"h0_omega", h0_omega(o.n).str()}, {"h1_omega", h1_omega(o.n).str()}});
}

Output do_mu(const Options& o) {
    check_range("--n", o.n, 1, 500);
    check_range("--m", o.m, 0, 1000000);
    return flat(Json{{"n", o.n}, {"m", o.m}, {"mu", mu(o.n, o.m).str()}});
}

Output do_chi_orb(const Options& o) {
    check_range("--n", o.n, 1, 1000000);
    check_range("--m", o.m, 0, 1000000);
    return flat(Json{{"n", o.n}, {"m", o.m}, {"chi_orb", chi_orb(o.n, o.m).str()}});
}

Output do_h1(const Options& o) {
    check_range("--n", o.n, 1, 500);
    check_range("--m", o.m, 0, 20000);
    const Rational v = h1(o.n, o.m);
    auto out = flat(Json{{"n", o.n}, {"m", o.m}, {"h1", integer_or_string(v)}});
    if (!(v.is_integer() && v.sign() >= 0)) out.failure = "h1 is not a nonnegative integer: " + v.str();
    return out;
}

Output do_divisor(const Options& o) {
    check_range("--n", o.n, 1, 1000);
    check_range("--m", o.m, 0, 1000000);
    const auto d = divisor_D(o.n, o.m);
    Output out;
    out.json = Json{{"n", o.n}, {"m", o.m}, {"coefficients", d.a}};
    out.header = {"r", "a"};
    for (std::size_t r = 0; r < d.a.size(); ++r) out.rows.push_back({std::to_string(r + 1), std::to_string(d.a[r])});
    return out;
}

Output do_polygon(const Options& o) {
    check_range("--n", o.n, 1, 50);
    check_range("--m", o.m, 0, 200);
    Output out;
    out.header = {"x1", "x2", "weight"};
    Json points = Json::array();
    std::int64_t total = 0;
    for_each_lattice_point(Polygon(o.n, o.m), [&](const LatticePoint& p) {
        if (!parity_ok(o.n, o.m, p)) return;
        const auto w = weight(o.n, o.m, p);
        total += w;
        points.push_back(Json{{"x1", p.x1}, {"x2", p.x2}, {"weight", w}});
        out.rows.push_back({std::to_string(p.x1), std::to_string(p.x2), std::to_string(w)});
    });
    Json vertices = Json::array();
    for (const auto& v : breakpoints(o.n, Rational(o.m))) vertices.push_back(Json{{"x1", v.x1.str()}, {"x2", v.x2.str()}});
    out.json = Json{{"n", o.n}, {"m", o.m}, {"breakpoints", vertices}, {"hsum", total}, {"points", points}};
    return out;
}

Output do_fit(const Options& o) {
    check_range("--n", o.n, 1, 50);
    check_range("--m-from", o.m_from, 0, 400);
    check_range("--m-to", o.m_to, o.m_from, 400);
    check_range("--degree", o.degree, 0, 8);
    check_range("--max-period", o.max_period, 1, 60);
    std::vector<Sample> samples;
    if (o.series == "hsum") {
        for (std::int64_t m = o.m_from; m <= o.m_to; ++m) samples.push_back({m, Rational(hsum(o.n, m))});
    } else if (o.series == "mu") {
        for (std::int64_t m = o.m_from; m <= o.m_to; ++m) samples.push_back({m, mu(o.n, m)});
    } else if (o.series == "h1") {
        for (const auto& r : sweep(o.n, o.m_from, o.m_to, o.parallel)) samples.push_back({r.m, r.h1});
    } else {
        throw DomainError("--series must be one of hsum, mu, h1");
    }
    const auto result = fit({samples, o.degree, o.max_period});

    Output out;
    out.json = Json{{"n", o.n},           {"series", o.series}, {"degree", o.degree}, {"max_period", o.max_period},
                    {"m_from", o.m_from}, {"m_to", o.m_to}};
    out.header = {"residue"};
    for (int k = 0; k <= o.degree; ++k) out.header.push_back("c" + std::to_string(k));
    if (!result.ok()) {
        out.json["status"] = result.status == FitStatus::NoPeriodFits ? "no_period_fits" : "insufficient_samples";
        out.json["tested_up_to"] = result.tested_up_to;
        out.json["message"] = result.message;
        if (result.status == FitStatus::InsufficientSamples) throw DomainError(result.message);
        out.failure = result.message;
        return out;
    }
    const auto& q = *result.poly;
    out.json["status"] = "ok";
    out.json["period"] = q.period();
    Json branches = Json::array();
    for (int r = 0; r < q.period(); ++r) {
        branches.push_back(rational_list(q.branch(r)));
        std::vector<std::string> row{std::to_string(r)};
        for (const auto& c : q.branch(r)) row.push_back(c.str());
        out.rows.push_back(std::move(row));
    }
    out.json["branches"] = branches;
    Json coeffs = Json::array();
    for (const auto& d : coefficient_report(q))
        coeffs.push_back(
            Json{{"degree", d.degree}, {"values", rational_list(d.values)}, {"branch_independent", d.branch_independent}});
    out.json["coefficients"] = coeffs;
    return out;
}

Output do_integral_check(const Options& o) {
    check_range("--n", o.n, 1, 10);
    check_range("--m-from", o.m_from, 1, 200);
    check_range("--m-to", o.m_to, 4 * o.m_from, 200);
    std::vector<std::int64_t> ms;
    for (std::int64_t m = o.m_from; m <= o.m_to; m *= 2) ms.push_back(m);
    const auto rep = integral_vs_sum_check(o.n, ms);

    Output out;
    out.header = {"m", "hsum", "integral", "residual", "bound"};
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        const Rational bound = rep.constant * Rational(r.m);
        rows.push_back(Json{{"m", r.m},
                            {"hsum", r.hsum},
                            {"integral", r.integral.str()},
                            {"residual", r.residual.str()},
                            {"bound", bound.str()}});
        out.rows.push_back({std::to_string(r.m), std::to_string(r.hsum), r.integral.str(), r.residual.str(), bound.str()});
    }
    out.json = Json{{"n", o.n},
                    {"rows", rows},
                    {"slope", rep.slope.str()},
                    {"intercept", rep.intercept.str()},
                    {"constant", rep.constant.str()},
                    {"passed", rep.passed}};
    if (!rep.passed) out.failure = "|hsum - integral| exceeds C*m";
    return out;
}

Output do_bigness(const Options& o) {
    if (o.config.empty()) throw DomainError("--config is required");
    const auto v = evaluate_criterion(read_config(o.config));
    return flat(Json{{"name", v.name},
                     {"local_sum", v.local_sum.str()},
                     {"global_term", v.global_term.str()},
                     {"total", v.total.str()},
                     {"verdict", v.verdict_text()}});
}

Output do_limits(const Options& o) {
    check_range("--n", o.n, 2, 2000);
    bool increasing = true;
    Rational prev = h0_omega(1), last = prev;
    for (int k = 2; k <= o.n; ++k) {
        last = h0_omega(k);
        increasing = increasing && last > prev;
        prev = last;
    }
    const double limit = 2.0 * std::numbers::pi * std::numbers::pi / 9.0 - 2.0;
    const auto h1rep = h1_omega_limit_report(o.n, Rational(1));
    auto out = flat(Json{{"n_max", o.n},
                         {"h0_omega_increasing", increasing},
                         {"h0_omega_at_max", last.str()},
                         {"h0_omega_at_max_approx", last.to_f64()},
                         {"h0_omega_limit", limit},
                         {"gap", std::abs(last.to_f64() - limit)},
                         {"h1_omega_increasing", h1rep.strictly_increasing},
                         {"h1_omega_at_max", h1rep.value_at_max.str()},
                         {"h1_omega_growth_ratio", h1rep.growth_ratio}});
    if (!increasing) out.failure = "h0_omega is not strictly increasing";
    else if (!h1rep.strictly_increasing) out.failure = "h1_omega is not strictly increasing";
    return out;
}

void write_csv(const Output& out, std::ostream& os) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) os << ',';
            const auto& c = cells[k];
            if (c.find_first_of(",\"\n") == std::string::npos) {
                os << c;
            } else {
                os << '"';
                for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
                os << '"';
            }
        }
        os << '\n';
    };
    line(out.header);
    for (const auto& r : out.rows) line(r);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact invariants of symmetric differentials near A_n surface singularities", "symdiff"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    auto* csv = app.add_flag("--csv", o.csv, "Emit CSV with a header row");
    auto* json = app.add_flag("--json", o.json, "Emit JSON (default)");
    csv->excludes(json);
    app.add_flag("--no-timestamp", o.no_timestamp, "Omit generated_at from sweep output");
    app.add_option("--parallel", o.parallel, "Worker threads")->check(CLI::Range(1u, 256u));

    std::vector<std::pair<CLI::App*, std::function<Output(const Options&)>>> verbs;
    auto verb = [&](const char* name, const char* help, std::function<Output(const Options&)> fn) {
        auto* sub = app.add_subcommand(name, help);
        verbs.emplace_back(sub, std::move(fn));
        return sub;
    };
    auto need_n = [&](CLI::App* s) { s->add_option("--n", o.n, "Singularity index n >= 1")->required(); };
    auto need_m = [&](CLI::App* s) { s->add_option("--m", o.m, "Symmetric power m >= 0")->required(); };
    auto range = [&](CLI::App* s, bool to_required) {
        s->add_option("--m-from", o.m_from, "First m of the range");
        auto* to = s->add_option("--m-to", o.m_to, "Last m of the range");
        if (to_required) to->required();
    };

    auto* s = verb("hsum", "Weighted lattice sum for one (n, m)", do_hsum);
    need_n(s);
    need_m(s);
    s = verb("hsum-sweep", "Table of hsum, mu, chi_orb, h1 over a range of m", do_sweep);
    need_n(s);
    range(s, true);
    s->add_option("--cache", o.cache, "JSON-lines cache file");
    s = verb("oracle-verify", "Compare the lattice sum with the linear-algebra oracle", do_oracle);
    need_n(s);
    need_m(s);
    s = verb("omega", "Leading coefficients h0_omega(n) and h1_omega(n)", do_omega);
    need_n(s);
    s = verb("mu", "Group-averaged correction mu(n, m)", do_mu);
    need_n(s);
    need_m(s);
    s = verb("chi-orb", "Orbifold Euler characteristic term", do_chi_orb);
    need_n(s);
    need_m(s);
    s = verb("h1", "h1 = mu - chi_orb - hsum", do_h1);
    need_n(s);
    need_m(s);
    s = verb("divisor", "Coefficients of the extension divisor D", do_divisor);
    need_n(s);
    need_m(s);
    s = verb("polygon", "Breakpoints and weighted lattice points of the polygon", do_polygon);
    need_n(s);
    need_m(s);
    s = verb("fit", "Detect a quasi-polynomial in m (default range: (degree+3)*max_period samples)", do_fit);
    need_n(s);
    range(s, false);
    auto* fit_verb = s;
    s->add_option("--degree", o.degree, "Polynomial degree of each branch");
    s->add_option("--max-period", o.max_period, "Largest period tried");
    s->add_option("--series", o.series, "hsum, mu or h1");
    s = verb("integral-check", "Compare hsum with the exact polygon integral (m doubles from --m-from, default 6, to --m-to, default 48)", do_integral_check);
    need_n(s);
    range(s, false);
    auto* integral_check = s;
    s = verb("bigness", "Evaluate the cotangent bigness criterion for a surface", do_bigness);
    s->add_option("--config", o.config, "Surface description (JSON)")->required();
    s = verb("limits", "Monotonicity and limit of h0_omega, growth of h1_omega", do_limits);
    s->add_option("--n", o.n, "Largest n examined (default 200)");
    auto* limits = s;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }

    for (const auto& [sub, fn] : verbs) {
        if (!sub->parsed()) continue;
        if (sub == integral_check) {
            if (sub->count("--m-from") == 0) o.m_from = 6;
            if (sub->count("--m-to") == 0) o.m_to = 48;
        }
        if (sub == limits && sub->count("--n") == 0) o.n = 200;
        if (sub == fit_verb && sub->count("--m-to") == 0)
            o.m_to = o.m_from + static_cast<std::int64_t>(o.degree + 3) * o.max_period - 1;
        try {
            const Output result = fn(o);
            if (o.csv) write_csv(result, out);
            else out << result.json.dump() << '\n';
            if (result.failure) {
                err << "verification failed: " << *result.failure << '\n';
                return exit_verification_failed;
            }
            return exit_ok;
        } catch (const ArithmeticFault& e) {
            err << "verification failed: " << e.what() << '\n';
            return exit_verification_failed;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return exit_invalid_input;
        }
    }
    return exit_invalid_input;
}

} // namespace symdiff::cli
