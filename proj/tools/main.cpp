// Command-line front end: parse tensors or graphs, dispatch the invariant
// computations, and emit deterministic text or JSON reports.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chrom/invariants.hpp"
#include "chrom/io.hpp"
#include "chrom/oracles.hpp"

using namespace chrom;
using nlohmann::json;

namespace {

struct CliOptions {
    std::uint64_t seed = 0;
    int prime_bits = 31;
    int trials = 3;
    int max_trials = 6;
    int jobs = 0;
    int limit_n = 6;
    int limit_d = 9;
    std::string format = "text";
    bool trace = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--seed", opt.seed, "random seed (default 0)");
    cmd->add_option("--prime-bits", opt.prime_bits, "prime size in bits, 30 or 31")
        ->check(CLI::Range(30, 31));
    cmd->add_option("--trials", opt.trials, "agreeing trials required per count");
    cmd->add_option("--max-trials", opt.max_trials, "total trial budget per count");
    cmd->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");
    cmd->add_option("--limit-n", opt.limit_n, "largest matrix size accepted");
    cmd->add_option("--limit-d", opt.limit_d, "largest projective dimension accepted");
    cmd->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--trace", opt.trace, "print solver statistics to stderr");
}

TrialConfig to_config(const CliOptions& opt) {
    TrialConfig cfg;
    cfg.seed = opt.seed;
    cfg.prime_bits = opt.prime_bits;
    cfg.trials = opt.trials;
    cfg.max_trials = opt.max_trials;
    cfg.jobs = opt.jobs;
    cfg.limits.n_max = opt.limit_n;
    cfg.limits.d_max = opt.limit_d;
    cfg.validate();
    return cfg;
}

const char* kind_name(InvariantKind k) {
    switch (k) {
        case InvariantKind::chromatic: return "chromatic";
        case InvariantKind::relative: return "relative";
        case InvariantKind::characteristic: return "characteristic-number";
    }
    return "?";
}

void print_trace(const char* label, const CoefficientReport& rep, int index) {
    for (std::size_t t = 0; t < rep.trials.size(); ++t) {
        const TrialRecord& r = rep.trials[t];
        std::fprintf(stderr,
                     "trace: %s[%d] trial %zu prime=%llu count=%s pairs=%llu zero_red=%llu basis=%zu maxdeg=%u\n",
                     label, index, t, static_cast<unsigned long long>(r.prime),
                     r.count ? std::to_string(*r.count).c_str() : "none",
                     static_cast<unsigned long long>(r.stats.pairs_reduced),
                     static_cast<unsigned long long>(r.stats.reductions_to_zero), r.stats.basis_size,
                     r.stats.max_degree);
    }
}

void trace_result(const CliOptions& opt, const InvariantResult& r) {
    if (!opt.trace) return;
    for (std::size_t i = 0; i < r.reports.size(); ++i)
        print_trace(kind_name(r.kind), r.reports[i], static_cast<int>(i));
}

json trials_json(const CoefficientReport& rep) {
    json arr = json::array();
    for (const TrialRecord& t : rep.trials) {
        json rec;
        rec["prime"] = t.prime;
        if (t.count)
            rec["count"] = *t.count;
        else
            rec["count"] = nullptr;
        arr.push_back(rec);
    }
    return arr;
}

json invariant_json(const InvariantResult& r) {
    json j;
    j["kind"] = kind_name(r.kind);
    j["n"] = r.n;
    j["d"] = r.d;
    j["m"] = r.m;
    j["binomial_form"] = r.binomial_form();
    j["polynomial"] = r.polynomial_string();
    j["primes"] = r.primes_used();
    j["trials_used"] = r.trials_used();
    json coeffs = json::array();
    for (std::size_t i = 0; i < r.reports.size(); ++i) {
        json c;
        c["index"] = i;
        c["value"] = r.reports[i].value;
        c["trials"] = trials_json(r.reports[i]);
        coeffs.push_back(c);
    }
    j["coefficients"] = coeffs;
    return j;
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

void print_invariant_text(const InvariantResult& r) {
    std::printf("kind: %s\n", kind_name(r.kind));
    std::printf("n: %d\nd: %d\n", r.n, r.d);
    std::printf("m: %s\n", join(r.m).c_str());
    std::printf("binomial: %s\n", join(r.binomial_form()).c_str());
    std::printf("polynomial: %s\n", r.polynomial_string().c_str());
    std::printf("primes: %s\n", join(r.primes_used()).c_str());
    std::printf("trials-used: %d\n", r.trials_used());
}

void print_header_text(const CliOptions& opt) {
    std::printf("seed: %llu\nprime-bits: %d\ntrials: %d\nmax-trials: %d\n",
                static_cast<unsigned long long>(opt.seed), opt.prime_bits, opt.trials, opt.max_trials);
}

json header_json(const CliOptions& opt) {
    json j;
    j["seed"] = opt.seed;
    j["prime_bits"] = opt.prime_bits;
    j["trials"] = opt.trials;
    j["max_trials"] = opt.max_trials;
    return j;
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

ContractionSpace load_space(const std::string& path, const CliOptions& opt) {
    Tensor T = parse_tensor_file(path);
    SplitMix64 rng = derive_stream(opt.seed, {hash_tag("cli-prime")});
    PrimeField F = random_prime(opt.prime_bits, rng);
    ContractionSpace S = contract(T, F);
    std::fprintf(stderr, "loaded %s: n=%d, a=%d, dim=%d (d=%d)\n", path.c_str(), T.n, T.a, S.dim(), S.d());
    return S;
}

int cmd_chromatic(const std::string& path, bool relative_only, bool both, const CliOptions& opt) {
    ContractionSpace S = load_space(path, opt);
    TrialConfig cfg = to_config(opt);
    Timer timer;
    json out;
    out["command"] = "chromatic";
    out["input"] = path;
    out["config"] = header_json(opt);
    if (both) {
        ChromaticComparison cmp = compare_chromatic(S, cfg);
        trace_result(opt, cmp.chromatic);
        trace_result(opt, cmp.relative);
        if (opt.format == "json") {
            out["chromatic"] = invariant_json(cmp.chromatic);
            out["relative"] = invariant_json(cmp.relative);
            out["equal"] = cmp.equal();
            out["differ_at"] = cmp.differ_at;
            emit(out);
        } else {
            print_invariant_text(cmp.chromatic);
            std::printf("\n");
            print_invariant_text(cmp.relative);
            std::printf("\nequal: %s\n", cmp.equal() ? "true" : "false");
            if (!cmp.equal()) {
                std::printf("differ-at:");
                for (int i : cmp.differ_at) std::printf(" %d", i);
                std::printf("\n");
            }
            print_header_text(opt);
        }
    } else {
        InvariantResult r = relative_only ? relative_chromatic(S, cfg) : chromatic(S, cfg);
        trace_result(opt, r);
        if (opt.format == "json") {
            out["result"] = invariant_json(r);
            emit(out);
        } else {
            print_invariant_text(r);
            print_header_text(opt);
        }
    }
    std::fprintf(stderr, "done in %.0f ms\n", timer.ms());
    return 0;
}

int cmd_charnum(const std::string& path, const std::string& b_arg, const CliOptions& opt) {
    ContractionSpace S = load_space(path, opt);
    TrialConfig cfg = to_config(opt);
    BVector b;
    std::stringstream ss(b_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            b.entries.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("--b expects a comma-separated integer list, got \"" + b_arg + "\"");
        }
    }
    Timer timer;
    CoefficientReport rep = characteristic_number_report(S, b, cfg);
    if (opt.trace) print_trace("charnum", rep, 0);
    if (opt.format == "json") {
        json out;
        out["command"] = "charnum";
        out["input"] = path;
        out["config"] = header_json(opt);
        out["b"] = b.entries;
        out["value"] = rep.value;
        out["trials"] = trials_json(rep);
        emit(out);
    } else {
        std::printf("kind: characteristic-number\nn: %d\nd: %d\n", S.n(), S.d());
        std::printf("b:");
        for (int v : b.entries) std::printf(" %d", v);
        std::printf("\nvalue: %llu\n", static_cast<unsigned long long>(rep.value));
        std::printf("trials-used: %d\n", static_cast<int>(rep.trials.size()));
        print_header_text(opt);
    }
    std::fprintf(stderr, "done in %.0f ms\n", timer.ms());
    return 0;
}

int cmd_graph(const std::string& path, bool oracle_only, const CliOptions& opt, bool limit_n_set) {
    Graph G = parse_graph_file(path);
    Timer timer;
    std::vector<std::int64_t> oracle = graph_chromatic_oracle(G);
    json out;
    out["command"] = "graph";
    out["input"] = path;
    out["vertices"] = G.vertex_count;
    out["edges"] = G.edges.size();
    out["oracle"] = oracle;
    if (oracle_only) {
        if (opt.format == "json") {
            emit(out);
        } else {
            std::printf("kind: graph-oracle\nvertices: %d\nedges: %zu\n", G.vertex_count, G.edges.size());
            std::printf("reduced-chromatic: %s\n", join(oracle).c_str());
        }
        std::fprintf(stderr, "done in %.0f ms\n", timer.ms());
        return 0;
    }

    CliOptions adjusted = opt;
    // the pencil size is the edge count; diagonal systems stay tractable
    if (!limit_n_set) adjusted.limit_n = std::max(opt.limit_n, 12);
    Tensor T = graph_to_tensor(G);
    SplitMix64 rng = derive_stream(opt.seed, {hash_tag("cli-prime")});
    PrimeField F = random_prime(opt.prime_bits, rng);
    ContractionSpace S = contract(T, F);
    TrialConfig cfg = to_config(adjusted);
    InvariantResult engine = chromatic(S, cfg);
    trace_result(opt, engine);
    bool match = engine.m.size() == oracle.size();
    for (std::size_t i = 0; match && i < oracle.size(); ++i)
        match = oracle[i] >= 0 && engine.m[i] == static_cast<std::uint64_t>(oracle[i]);
    out["config"] = header_json(opt);
    out["engine"] = invariant_json(engine);
    out["verdict"] = match ? "match" : "mismatch";
    if (opt.format == "json") {
        emit(out);
    } else {
        std::printf("kind: graph-verify\nvertices: %d\nedges: %zu\n", G.vertex_count, G.edges.size());
        std::printf("oracle: %s\n", join(oracle).c_str());
        std::printf("engine: %s\n", join(engine.m).c_str());
        std::printf("verdict: %s\n", match ? "match" : "mismatch");
        print_header_text(opt);
    }
    std::fprintf(stderr, "done in %.0f ms\n", timer.ms());
    return match ? 0 : 4;
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
    const std::size_t dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + " expects N or LO..HI, got \"" + s + "\"");
    }
}

int cmd_rank_table(int n, const std::string& r_range, const std::string& a_range,
                   const CliOptions& opt) {
    const auto [r_lo, r_hi] = parse_range(r_range, "--r-range");
    const auto [a_lo, a_hi] = parse_range(a_range.empty() ? "1.." + std::to_string(n * n) : a_range,
                                          "--a-range");
    if (n < 1 || r_lo < 1 || r_lo > r_hi || a_lo < 1 || a_lo > a_hi)
        throw ParseError("rank-table: empty n/r/a range");
    TrialConfig cfg = to_config(opt);
    Timer timer;
    json rows = json::array();
    if (opt.format == "text") {
        std::printf("b[a,n,r] = last chromatic coefficient of a generic rank-r tensor, n=%d\n", n);
        std::printf("%4s |", "r\\a");
        for (int a = a_lo; a <= a_hi; ++a) std::printf(" %6d", a);
        std::printf("\n");
    }
    for (int r = r_lo; r <= r_hi; ++r) {
        json row;
        row["r"] = r;
        json cells = json::array();
        if (opt.format == "text") std::printf("%4d |", r);
        for (int a = a_lo; a <= a_hi; ++a) {
            if (a > std::min(r, n * n)) {
                if (opt.format == "text") std::printf(" %6s", "");
                continue;
            }
            const std::uint64_t cell_seed =
                derive_stream(opt.seed, {hash_tag("rank-table"), static_cast<std::uint64_t>(n),
                                         static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(a)})
                    .next();
            Tensor T = generic_rank_r_tensor(a, n, r, cell_seed);
            SplitMix64 prng = derive_stream(cell_seed, {hash_tag("cli-prime")});
            PrimeField F = random_prime(opt.prime_bits, prng);
            ContractionSpace S = contract(T, F);
            std::vector<int> b(static_cast<std::size_t>(n - 1), 0);
            if (n >= 2) b[static_cast<std::size_t>(n - 2)] = S.d();
            const std::uint64_t value = characteristic_number(S, BVector{b}, cfg);
            if (opt.format == "text") {
                std::printf(" %6llu", static_cast<unsigned long long>(value));
                std::fflush(stdout);
            }
            json cell;
            cell["a"] = a;
            cell["value"] = value;
            cells.push_back(cell);
        }
        if (opt.format == "text") std::printf("\n");
        row["cells"] = cells;
        rows.push_back(row);
    }
    if (opt.format == "text") print_header_text(opt);
    if (opt.format == "json") {
        json out;
        out["command"] = "rank-table";
        out["n"] = n;
        out["config"] = header_json(opt);
        out["rows"] = rows;
        emit(out);
    }
    std::fprintf(stderr, "done in %.0f ms\n", timer.ms());
    return 0;
}

int cmd_euler(const std::string& path, const CliOptions& opt) {
    ContractionSpace S = load_space(path, opt);
    TrialConfig cfg = to_config(opt);
    Timer timer;
    EulerReport report = euler_complement(S, cfg);
    trace_result(opt, report.relative);
    if (opt.format == "json") {
        json out;
        out["command"] = "euler";
        out["input"] = path;
        out["config"] = header_json(opt);
        out["complement"] = report.complement;
        out["hypersurface"] = report.hypersurface;
        out["relative"] = invariant_json(report.relative);
        emit(out);
    } else {
        std::printf("kind: euler\nn: %d\nd: %d\n", S.n(), S.d());
        std::printf("relative-m: %s\n", join(report.relative.m).c_str());
        std::printf("complement-euler: %lld\n", static_cast<long long>(report.complement));
        std::printf("hypersurface-euler: %lld\n", static_cast<long long>(report.hypersurface));
        print_header_text(opt);
    }
    std::fprintf(stderr, "done in %.0f ms\n", timer.ms());
    return 0;
}

int error_exit(const char* type, const std::string& message, int code) {
    json err;
    err["error"]["type"] = type;
    err["error"]["message"] = message;
    std::printf("%s\n", err.dump().c_str());
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic numbers and chromatic polynomials of tensors by exact counting "
                 "over random prime fields"};
    app.require_subcommand(1);

    CliOptions opt;

    std::string tensor_path, b_arg, graph_path;
    bool relative_only = false, both = false, oracle_only = false, verify = false;
    int table_n = 3;
    std::string r_range, a_range;

    CLI::App* chromatic_cmd =
        app.add_subcommand("chromatic", "chromatic polynomial of a tensor file");
    chromatic_cmd->add_option("input", tensor_path, "tensor file")->required();
    chromatic_cmd->add_flag("--relative", relative_only, "compute the relative chromatic polynomial");
    chromatic_cmd->add_flag("--both", both, "compute both and compare");
    add_common_flags(chromatic_cmd, opt);

    CLI::App* charnum_cmd = app.add_subcommand("charnum", "one characteristic number T(b_1..b_{n-1})");
    charnum_cmd->add_option("input", tensor_path, "tensor file")->required();
    charnum_cmd->add_option("--b", b_arg, "comma-separated b-vector, e.g. 2,0,0,0,2")->required();
    add_common_flags(charnum_cmd, opt);

    CLI::App* graph_cmd = app.add_subcommand("graph", "reduced chromatic polynomial of a graph");
    graph_cmd->add_option("input", graph_path, "edge-list file")->required();
    graph_cmd->add_flag("--oracle-only", oracle_only, "deletion-contraction oracle only");
    graph_cmd->add_flag("--verify", verify, "run the counting engine and compare (default)");
    add_common_flags(graph_cmd, opt);

    CLI::App* table_cmd = app.add_subcommand("rank-table", "b[a,n,r] for generic rank-r tensors");
    table_cmd->add_option("--n", table_n, "matrix size n")->required();
    table_cmd->add_option("--r-range", r_range, "rank range LO..HI")->required();
    table_cmd->add_option("--a-range", a_range, "slice-count range LO..HI (default 1..n^2)");
    add_common_flags(table_cmd, opt);

    CLI::App* euler_cmd =
        app.add_subcommand("euler", "Euler characteristics from the relative chromatic polynomial");
    euler_cmd->add_option("input", tensor_path, "tensor file")->required();
    add_common_flags(euler_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        return error_exit("parse", e.what(), 2);
    }

    try {
        if (app.got_subcommand(chromatic_cmd))
            return cmd_chromatic(tensor_path, relative_only, both, opt);
        if (app.got_subcommand(charnum_cmd)) return cmd_charnum(tensor_path, b_arg, opt);
        if (app.got_subcommand(graph_cmd))
            return cmd_graph(graph_path, oracle_only, opt, graph_cmd->count("--limit-n") > 0);
        if (app.got_subcommand(table_cmd)) return cmd_rank_table(table_n, r_range, a_range, opt);
        if (app.got_subcommand(euler_cmd)) return cmd_euler(tensor_path, opt);
    } catch (const ParseError& e) {
        return error_exit("parse", e.what(), 2);
    } catch (const PreconditionError& e) {
        return error_exit("precondition", e.what(), 3);
    } catch (const InstabilityError& e) {
        return error_exit("instability", e.what(), 4);
    } catch (const LimitError& e) {
        return error_exit("limit", e.what(), 4);
    } catch (const Error& e) {
        return error_exit("internal", e.what(), 1);
    }
    return 0;
}
