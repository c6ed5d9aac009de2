#ifndef PMLG_HARNESS_HPP
#define PMLG_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pmlg/graph.hpp"
#include "pmlg/matcher.hpp"
#include "pmlg/ov.hpp"
#include "pmlg/reductions.hpp"

namespace pmlg {

struct InstanceSummary {
    std::size_t n = 0;
    std::size_t d = 0;
    std::optional<std::uint64_t> seed;
    std::optional<GenMode> mode;
};

struct StructuralChecks {
    std::optional<bool> deterministic; // directed artifacts only
    std::optional<bool> acyclic;       // directed artifacts only
    std::size_t max_in_plus_out = 0;
    std::size_t max_degree = 0;
    bool is_simple_path = false;
    std::size_t pattern_length = 0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
};

struct PhaseTimings {
    double build_ms = 0;
    double ov_ms = 0;
    double match_ms = 0;
};

struct VerificationReport {
    InstanceSummary instance;
    Variant variant = Variant::undirected;
    bool binary = false;
    std::optional<OvPair> ov_answer;
    std::vector<bool> match_answers;
    bool agree = false;
    bool short_circuited = false;
    StructuralChecks structural;
    PhaseTimings timings;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

} // namespace detail

struct VerifyOptions {
    bool binary = false;
};

/*
 * Build the artifact, answer OV by brute force, run the matcher on every
 * pattern and compare. A det-dag instance with an all-zero y_j is answered
 * by the short-circuit rule: agree iff OV says yes, which it always does.
 */
inline VerificationReport verify_reduction(const OvInstance& inst, Variant variant, VerifyOptions opts = {},
                                           InstanceSummary summary = {}) {
    if (opts.binary && variant == Variant::zigzag) {
        throw std::invalid_argument("binary encoding is not available for the zigzag variant");
    }
    VerificationReport r;
    r.instance = summary;
    r.instance.n = inst.n();
    r.instance.d = inst.d();
    r.variant = variant;
    r.binary = opts.binary;

    auto t = detail::Clock::now();
    r.ov_answer = solve_ov_bruteforce(inst);
    r.timings.ov_ms = detail::elapsed_ms(t);

    t = detail::Clock::now();
    std::optional<ReductionArtifact> art;
    try {
        art = build_artifact(inst, variant, opts.binary);
    } catch (const ReductionError&) {
        if (variant != Variant::det_dag || !inst.has_all_zero_y()) throw;
        r.short_circuited = true;
        r.agree = r.ov_answer.has_value();
        r.timings.build_ms = detail::elapsed_ms(t);
        return r;
    }
    r.timings.build_ms = detail::elapsed_ms(t);

    const auto& g = art->graph;
    const auto stats = degree_stats(g);
    r.structural.max_in_plus_out = stats.max_in_plus_out;
    r.structural.max_degree = stats.max_undirected_degree;
    r.structural.is_simple_path = stats.is_simple_path;
    r.structural.node_count = g.node_count();
    r.structural.edge_count = g.edge_count();
    r.structural.pattern_length = art->patterns.front().size();
    if (g.directed()) {
        r.structural.deterministic = is_deterministic(g);
        r.structural.acyclic = is_acyclic(g);
    }

    t = detail::Clock::now();
    const Matcher matcher(g);
    bool any = false;
    for (const auto& p : art->patterns) {
        const bool m = matcher.exists(p);
        r.match_answers.push_back(m);
        any = any || m;
    }
    r.timings.match_ms = detail::elapsed_ms(t);
    r.agree = any == r.ov_answer.has_value();
    return r;
}

// One key=value pair per line in a fixed order; timings last and optional.
inline std::string format_report(const VerificationReport& r, bool with_timings = false) {
    std::ostringstream out;
    auto b = [](bool v) { return v ? "true" : "false"; };
    auto opt = [&](const std::optional<bool>& v) { return v ? b(*v) : "n/a"; };
    out << "variant=" << to_string(r.variant) << '\n';
    out << "binary=" << b(r.binary) << '\n';
    out << "n=" << r.instance.n << '\n';
    out << "d=" << r.instance.d << '\n';
    out << "seed=" << (r.instance.seed ? std::to_string(*r.instance.seed) : "-") << '\n';
    out << "mode=" << (r.instance.mode ? std::string(to_string(*r.instance.mode)) : "-") << '\n';
    out << "ov_answer=";
    if (r.ov_answer) {
        out << r.ov_answer->i << ',' << r.ov_answer->j;
    } else {
        out << "none";
    }
    out << '\n';
    out << "match=";
    if (r.match_answers.empty()) out << "skipped";
    for (std::size_t k = 0; k < r.match_answers.size(); ++k) out << (k ? "," : "") << b(r.match_answers[k]);
    out << '\n';
    out << "agree=" << b(r.agree) << '\n';
    out << "short_circuited=" << b(r.short_circuited) << '\n';
    if (!r.short_circuited) {
        const auto& s = r.structural;
        out << "deterministic=" << opt(s.deterministic) << '\n';
        out << "acyclic=" << opt(s.acyclic) << '\n';
        out << "max_in_plus_out=" << s.max_in_plus_out << '\n';
        out << "simple_path=" << b(s.is_simple_path) << '\n';
        out << "pattern_length=" << s.pattern_length << '\n';
        out << "node_count=" << s.node_count << '\n';
        out << "edge_count=" << s.edge_count << '\n';
    }
    if (with_timings) {
        out << std::fixed << std::setprecision(3);
        out << "build_ms=" << r.timings.build_ms << '\n';
        out << "ov_ms=" << r.timings.ov_ms << '\n';
        out << "match_ms=" << r.timings.match_ms << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Batches
// ---------------------------------------------------------------------------

struct VerifyJob {
    std::size_t n = 1;
    std::size_t d = 1;
    std::uint64_t seed = 0;
    GenMode mode = GenMode::random;
    Variant variant = Variant::undirected;
    bool binary = false;
};

/*
 * count seeded instances; instance k draws n, d in [1, max_n] x [1, max_d]
 * and a mode from seed + k. With no variant given every variant is checked,
 * each with and without the binary encoding where that applies.
 */
inline std::vector<VerifyJob> plan_random_batch(std::size_t count, std::uint64_t seed,
                                                std::optional<Variant> variant, std::optional<bool> binary,
                                                std::size_t max_n = 6, std::size_t max_d = 6) {
    std::vector<VerifyJob> jobs;
    for (std::size_t k = 0; k < count; ++k) {
        std::mt19937_64 rng(seed + k);
        const auto n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
        const auto d = std::uniform_int_distribution<std::size_t>(1, max_d)(rng);
        const auto mode = static_cast<GenMode>(std::uniform_int_distribution<int>(0, 2)(rng));
        std::vector<Variant> variants;
        if (variant) {
            variants.push_back(*variant);
        } else {
            variants = {Variant::undirected, Variant::dag, Variant::det_dag, Variant::zigzag};
        }
        for (auto v : variants) {
            for (bool bin : {false, true}) {
                if (binary && *binary != bin) continue;
                if (bin && v == Variant::zigzag) continue;
                jobs.push_back({n, d, seed + k, mode, v, bin});
            }
        }
    }
    return jobs;
}

inline VerificationReport run_job(const VerifyJob& job) {
    const auto inst = gen_ov_instance(job.n, job.d, job.seed, job.mode);
    return verify_reduction(inst, job.variant, {job.binary}, {job.n, job.d, job.seed, job.mode});
}

// Runs jobs on a small thread pool; the result vector is in job order.
inline std::vector<VerificationReport> verify_batch(const std::vector<VerifyJob>& jobs,
                                                    std::size_t threads = std::thread::hardware_concurrency()) {
    std::vector<VerificationReport> out(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                out[i] = run_job(jobs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scaling benchmark
// ---------------------------------------------------------------------------

struct ScalingRow {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::size_t pattern_length = 0;
    double match_time_ms = 0;
};

struct ScalingResult {
    std::vector<ScalingRow> rows;
    std::optional<double> slope; // absent with fewer than two rows
};

// Least-squares slope of log(y) against log(x).
inline std::optional<double> loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0) return std::nullopt;
    return sxy / sxx;
}

inline constexpr double kMinRowMs = 5.0;
inline constexpr int kShortRowRepeats = 10;

/*
 * Match time on no-orthogonal instances (no early success) for growing n at
 * fixed d. The timed region is matcher construction plus the query. Rows
 * faster than kMinRowMs are re-run kShortRowRepeats times and averaged.
 */
inline ScalingResult bench_scaling(Variant variant, const std::vector<std::size_t>& n_series, std::size_t d,
                                   std::uint64_t seed, bool binary = false) {
    for (std::size_t i = 1; i < n_series.size(); ++i) {
        if (n_series[i] <= n_series[i - 1]) throw std::invalid_argument("n series must be strictly increasing");
    }
    ScalingResult res;
    std::vector<double> xs, ys;
    for (std::size_t n : n_series) {
        const auto inst = gen_ov_instance(n, d, seed, GenMode::no_orthogonal);
        const auto art = build_artifact(inst, variant, binary);
        auto timed = [&] {
            const auto t = detail::Clock::now();
            bool any = false;
            const Matcher m(art.graph);
            for (const auto& p : art.patterns) any = m.exists(p) || any;
            const double ms = detail::elapsed_ms(t);
            if (any) throw std::logic_error("benchmark instance unexpectedly matched");
            return ms;
        };
        double ms = timed();
        if (ms < kMinRowMs) {
            double total = 0;
            for (int k = 0; k < kShortRowRepeats; ++k) total += timed();
            ms = total / kShortRowRepeats;
        }
        res.rows.push_back({n, d, art.graph.node_count(), art.graph.edge_count(), art.patterns.front().size(), ms});
        xs.push_back(static_cast<double>(n * d));
        ys.push_back(std::max(ms, 1e-6));
    }
    res.slope = loglog_slope(xs, ys);
    return res;
}

inline std::string format_scaling(const ScalingResult& res) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "n" << std::setw(6) << "d" << std::setw(10) << "nodes" << std::setw(10)
        << "edges" << std::setw(10) << "pattern" << "match_ms\n";
    for (const auto& r : res.rows) {
        out << std::setw(8) << r.n << std::setw(6) << r.d << std::setw(10) << r.node_count << std::setw(10)
            << r.edge_count << std::setw(10) << r.pattern_length << std::fixed << std::setprecision(3)
            << r.match_time_ms << '\n';
    }
    out << "slope=";
    if (res.slope) {
        out << std::fixed << std::setprecision(3) << *res.slope;
    } else {
        out << "none";
    }
    out << '\n';
    return out.str();
}

} // namespace pmlg

#endif
