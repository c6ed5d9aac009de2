// pmlg_cli: generate OV instances, compile them to PMLG artifacts, match,
// verify and benchmark.
//
// Exit status: 0 success / agreement, 1 no match (match), 2 usage or input
// error, 3 verification disagreement.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pmlg/harness.hpp"
#include "pmlg/io.hpp"
#include "pmlg/matcher.hpp"
#include "pmlg/ov.hpp"
#include "pmlg/reductions.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNoMatch = 1;
constexpr int kUsage = 2;
constexpr int kDisagree = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

pmlg::Variant parse_variant(const std::string& s) {
    auto v = pmlg::variant_from_string(s);
    if (!v) throw UsageError("unknown variant '" + s + "'");
    return *v;
}

pmlg::GenMode parse_mode(const std::string& s) {
    auto m = pmlg::gen_mode_from_string(s);
    if (!m) throw UsageError("unknown mode '" + s + "'");
    return *m;
}

std::uint64_t parse_number(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("expected a number for ") + what + ", got '" + s + "'");
    }
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct GenArgs {
    std::size_t n = 0, d = 0;
    std::uint64_t seed = 0;
    std::string mode = "random";
    std::string out;
};

int run_gen(const GenArgs& a) {
    const auto inst = pmlg::gen_ov_instance(a.n, a.d, a.seed, parse_mode(a.mode));
    const auto text = pmlg::write_ov(inst);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        pmlg::write_file(a.out, text);
    }
    return kOk;
}

struct ReduceArgs {
    std::string instance;
    std::string variant = "undirected";
    bool binary = false;
    std::string prefix;
    std::uint64_t seed = 0;
};

int run_reduce(const ReduceArgs& a) {
    const auto variant = parse_variant(a.variant);
    if (a.binary && variant == pmlg::Variant::zigzag) throw UsageError("--binary is not available for zigzag");
    const auto inst = pmlg::read_ov(pmlg::read_file(a.instance));
    const auto art = pmlg::build_artifact(inst, variant, a.binary);
    pmlg::write_file(a.prefix + ".pmlg", pmlg::write_graph(art.graph));
    for (std::size_t k = 0; k < art.patterns.size(); ++k) {
        pmlg::write_file(a.prefix + "." + std::to_string(k + 1) + ".pat", pmlg::write_pattern(art.patterns[k]));
    }
    pmlg::write_file(a.prefix + ".meta", pmlg::format_meta(art, a.seed));
    std::cout << "nodes=" << art.graph.node_count() << " edges=" << art.graph.edge_count()
              << " patterns=" << art.patterns.size() << '\n';
    return kOk;
}

struct MatchArgs {
    std::string graph;
    std::string pattern;
    bool occurrences = false;
    std::size_t limit = 10;
};

int run_match(const MatchArgs& a) {
    const auto g = pmlg::read_graph(pmlg::read_file(a.graph));
    const auto p = pmlg::read_pattern(pmlg::read_file(a.pattern));
    pmlg::require_same_alphabet(g, p);
    const pmlg::Matcher m(g);
    if (!a.occurrences) {
        const bool found = m.exists(p);
        std::cout << "match=" << bool_str(found) << '\n';
        return found ? kOk : kNoMatch;
    }
    const auto occs = m.find(p, a.limit);
    std::cout << "match=" << bool_str(!occs.empty()) << '\n';
    for (const auto& o : occs) {
        std::cout << "start=" << o.start << ':' << o.start_offset << " end=" << o.end << ':' << o.end_offset
                  << " witness=";
        for (std::size_t i = 0; i < o.witness.size(); ++i) std::cout << (i ? "," : "") << o.witness[i];
        std::cout << '\n';
    }
    return occs.empty() ? kNoMatch : kOk;
}

struct VerifyArgs {
    std::string instance;
    std::vector<std::string> random;
    std::string variant;
    bool binary = false;
    std::size_t count = 0;
    std::uint64_t seed = 1;
    bool timings = false;
};

int run_verify(const VerifyArgs& a) {
    std::optional<pmlg::Variant> variant;
    if (!a.variant.empty() && a.variant != "all") variant = parse_variant(a.variant);
    if (a.binary && variant == pmlg::Variant::zigzag) throw UsageError("--binary is not available for zigzag");

    if (a.count > 0) {
        if (!a.instance.empty()) throw UsageError("--count cannot be combined with an instance file");
        std::vector<pmlg::VerifyJob> jobs;
        const std::optional<bool> binary = a.binary ? std::optional<bool>(true) : std::nullopt;
        if (!a.random.empty()) {
            // fixed shape: seeds seed, seed+1, ...
            const auto n = parse_number(a.random[0], "n");
            const auto d = parse_number(a.random[1], "d");
            const auto seed = parse_number(a.random[2], "seed");
            const auto mode = parse_mode(a.random[3]);
            for (const auto& j : pmlg::plan_random_batch(a.count, seed, variant, binary)) {
                jobs.push_back({n, d, j.seed, mode, j.variant, j.binary});
            }
        } else {
            jobs = pmlg::plan_random_batch(a.count, a.seed, variant, binary);
        }
        const auto reports = pmlg::verify_batch(jobs);
        std::size_t disagreements = 0;
        for (const auto& r : reports) {
            if (!r.agree) ++disagreements;
            std::cout << "variant=" << pmlg::to_string(r.variant) << " binary=" << bool_str(r.binary)
                      << " n=" << r.instance.n << " d=" << r.instance.d << " seed=" << *r.instance.seed
                      << " mode=" << pmlg::to_string(*r.instance.mode)
                      << " ov=" << bool_str(r.ov_answer.has_value()) << " agree=" << bool_str(r.agree)
                      << (r.short_circuited ? " short_circuited=true" : "") << '\n';
        }
        std::cout << "reports=" << reports.size() << " disagreements=" << disagreements << '\n';
        return disagreements == 0 ? kOk : kDisagree;
    }

    const auto v = variant.value_or(pmlg::Variant::undirected);
    std::optional<pmlg::OvInstance> inst;
    pmlg::InstanceSummary summary;
    if (!a.random.empty()) {
        if (!a.instance.empty()) throw UsageError("give either an instance file or --random, not both");
        const auto n = parse_number(a.random[0], "n");
        const auto d = parse_number(a.random[1], "d");
        const auto seed = parse_number(a.random[2], "seed");
        const auto mode = parse_mode(a.random[3]);
        inst = pmlg::gen_ov_instance(n, d, seed, mode);
        summary.seed = seed;
        summary.mode = mode;
    } else if (!a.instance.empty()) {
        inst = pmlg::read_ov(pmlg::read_file(a.instance));
    } else {
        throw UsageError("verify needs an instance file, --random or --count");
    }
    const auto report = pmlg::verify_reduction(*inst, v, {a.binary}, summary);
    std::cout << pmlg::format_report(report, a.timings);
    return report.agree ? kOk : kDisagree;
}

struct BenchArgs {
    std::string variant = "undirected";
    std::vector<std::size_t> ns{64, 128, 256, 512};
    std::size_t d = 32;
    std::uint64_t seed = 1;
    bool binary = false;
};

int run_bench(const BenchArgs& a) {
    const auto v = parse_variant(a.variant);
    if (a.binary && v == pmlg::Variant::zigzag) throw UsageError("--binary is not available for zigzag");
    std::cout << pmlg::format_scaling(pmlg::bench_scaling(v, a.ns, a.d, a.seed, a.binary));
    return kOk;
}

int run_stats(const std::string& path) {
    const auto g = pmlg::read_graph(pmlg::read_file(path));
    const auto s = pmlg::degree_stats(g);
    std::cout << "nodes=" << s.node_count << " edges=" << s.edge_count << " simple_path=" << bool_str(s.is_simple_path)
              << " max_degree=" << s.max_undirected_degree << " max_in_plus_out=" << s.max_in_plus_out;
    if (g.directed()) {
        std::cout << " deterministic=" << bool_str(pmlg::is_deterministic(g))
                  << " acyclic=" << bool_str(pmlg::is_acyclic(g));
    } else {
        std::cout << " deterministic=n/a acyclic=n/a";
    }
    std::cout << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern matching in labeled graphs: OV reductions, matcher and verification harness"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded OV instance");
    gen_cmd->add_option("--n", gen.n, "Vectors per side")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--d", gen.d, "Dimension")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("--mode", gen.mode, "random | planted-orthogonal | no-orthogonal");
    gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

    ReduceArgs reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "Compile an OV instance into graph and pattern files");
    reduce_cmd->add_option("instance", reduce.instance, "OV instance file")->required();
    reduce_cmd->add_option("--variant", reduce.variant, "undirected | dag | det-dag | zigzag");
    reduce_cmd->add_flag("--binary", reduce.binary, "Encode over the binary alphabet");
    reduce_cmd->add_option("-o,--out", reduce.prefix, "Output prefix")->required();
    reduce_cmd->add_option("--seed", reduce.seed, "Seed recorded in the metadata line");

    MatchArgs match;
    auto* match_cmd = app.add_subcommand("match", "Decide whether a pattern occurs in a graph");
    match_cmd->add_option("graph", match.graph, "Graph file")->required();
    match_cmd->add_option("pattern", match.pattern, "Pattern file")->required();
    match_cmd->add_flag("--report-occurrences", match.occurrences, "List occurrences with witness walks");
    match_cmd->add_option("--limit", match.limit, "Maximum occurrences to list");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a reduction against brute-force OV");
    verify_cmd->add_option("instance", verify.instance, "OV instance file");
    verify_cmd->add_option("--random", verify.random, "Generate the instance: n d seed mode")->expected(4);
    verify_cmd->add_option("--variant", verify.variant, "undirected | dag | det-dag | zigzag | all");
    verify_cmd->add_flag("--binary", verify.binary, "Use the binary encoding");
    verify_cmd->add_option("--count", verify.count, "Verify a batch of seeded random instances");
    verify_cmd->add_option("--seed", verify.seed, "First seed of a --count batch");
    verify_cmd->add_flag("--timings", verify.timings, "Include phase timings");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time matching on growing no-orthogonal instances");
    bench_cmd->add_option("--variant", bench.variant, "Variant to benchmark");
    bench_cmd->add_option("--n", bench.ns, "Strictly increasing n series")->delimiter(',');
    bench_cmd->add_option("--d", bench.d, "Dimension")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "RNG seed");
    bench_cmd->add_flag("--binary", bench.binary, "Use the binary encoding");

    std::string stats_path;
    auto* stats_cmd = app.add_subcommand("stats", "Degree and structure statistics of a graph file");
    stats_cmd->add_option("graph", stats_path, "Graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*reduce_cmd) return run_reduce(reduce);
        if (*match_cmd) return run_match(match);
        if (*verify_cmd) return run_verify(verify);
        if (*bench_cmd) return run_bench(bench);
        if (*stats_cmd) return run_stats(stats_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
