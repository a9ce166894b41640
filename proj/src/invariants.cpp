#include "chrom/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace chrom {

void TrialConfig::validate() const {
    if (trials < 1 || max_trials < trials)
        throw PreconditionError("trial config: need 1 <= trials <= max_trials");
    if (prime_bits < 30 || prime_bits > 31)
        throw PreconditionError("trial config: prime_bits must be 30 or 31");
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<std::uint64_t> InvariantResult::binomial_form() const {
    std::vector<std::uint64_t> out;
    out.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out.push_back(m[i] * binomial(d, static_cast<int>(i)));
    return out;
}

std::string InvariantResult::polynomial_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const std::uint64_t bin = binomial(d, static_cast<int>(i));
        std::string coeff;
        if (m[i] != 1) coeff = std::to_string(m[i]);
        if (bin != 1) coeff += (coeff.empty() ? "" : "·") + std::to_string(bin);
        std::string mono;
        const int ea = d - static_cast<int>(i);
        const int eb = static_cast<int>(i);
        if (ea > 0) mono += ea == 1 ? "a" : "a^" + std::to_string(ea);
        if (eb > 0) {
            if (!mono.empty()) mono += " ";
            mono += eb == 1 ? "b" : "b^" + std::to_string(eb);
        }
        if (coeff.empty() && mono.empty()) {
            os << "1";
        } else if (mono.empty()) {
            os << coeff;
        } else if (coeff.empty()) {
            os << mono;
        } else {
            os << coeff << " " << mono;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::uint64_t> InvariantResult::primes_used() const {
    std::vector<std::uint64_t> out;
    for (const CoefficientReport& r : reports)
        for (const TrialRecord& t : r.trials) out.push_back(t.prime);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int InvariantResult::trials_used() const {
    int total = 0;
    for (const CoefficientReport& r : reports) total += static_cast<int>(r.trials.size());
    return total;
}

namespace detail {

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, n);
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

namespace {

MultiPoly random_combination(const std::vector<MultiPoly>& polys, int nvars, const PolyOps& ops,
                             SplitMix64& rng) {
    MultiPoly acc(nvars);
    for (const MultiPoly& p : polys) {
        PrimeField::Elt c = ops.field().random(rng);
        if (c != 0 && !p.is_zero()) acc = ops.add(acc, ops.scale(p, c));
    }
    return acc;
}

MultiPoly extend_vars(const MultiPoly& f, int new_nvars, const PolyOps& ops) {
    std::vector<int> keep(static_cast<std::size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) keep[static_cast<std::size_t>(i)] = i;
    return ops.remap(f, keep, new_nvars);
}

MultiPoly random_chart(int dim, int nvars, const PolyOps& ops, SplitMix64& rng) {
    std::vector<Term> terms;
    for (int j = 0; j < dim; ++j)
        terms.push_back(Term{monomial_var(j), ops.field().random_nonzero(rng)});
    terms.push_back(Term{monomial_one(), ops.field().neg(1)});
    return MultiPoly::from_terms(nvars, std::move(terms), ops.field());
}

} // namespace

BuiltSystem build_charnum_system(const std::vector<FpMat>& basis, const std::vector<int>& b,
                                 const PrimeField& F, SplitMix64& rng) {
    PolyOps ops(F);
    const int dim = static_cast<int>(basis.size());  // = d + 1
    const int n = static_cast<int>(basis.at(0).size());
    const int nvars = dim + 1;                       // x_0..x_d, then t
    if (static_cast<int>(b.size()) != n - 1)
        throw PreconditionError("b-vector must have n-1 entries");
    if (nvars > kMaxVars) throw LimitError("too many variables for this build");

    BuiltSystem sys;
    sys.nvars = nvars;
    sys.gens.push_back(random_chart(dim, nvars, ops, rng));

    Pencil P = Pencil::from_basis(basis, F);
    MinorTable table(P, ops);
    for (int i = 1; i <= n - 1; ++i) {
        const int conditions = b[static_cast<std::size_t>(i - 1)];
        if (conditions < 0) throw PreconditionError("b-vector entries must be non-negative");
        if (conditions == 0) continue;
        std::vector<MultiPoly> mins = table.minors(i);
        for (int k = 0; k < conditions; ++k)
            sys.gens.push_back(extend_vars(random_combination(mins, dim, ops, rng), nvars, ops));
    }
    // 1/det chart: excludes the rank <= n-1 locus.
    MultiPoly det_t = ops.mul(extend_vars(table.det(), nvars, ops), MultiPoly::variable(nvars, dim));
    sys.gens.push_back(ops.sub(det_t, MultiPoly::constant(nvars, 1)));
    return sys;
}

BuiltSystem build_relative_system(const std::vector<FpMat>& basis, int target_conditions,
                                  const PrimeField& F, SplitMix64& rng) {
    PolyOps ops(F);
    const int dim = static_cast<int>(basis.size());
    const int d = dim - 1;
    const int nvars = dim + 1; // x_0..x_d, then s
    if (target_conditions < 0 || target_conditions > d)
        throw PreconditionError("relative system: bad coefficient index");
    if (nvars > kMaxVars) throw LimitError("too many variables for this build");

    BuiltSystem sys;
    sys.nvars = nvars;
    sys.gens.push_back(random_chart(dim, nvars, ops, rng));

    Pencil P = Pencil::from_basis(basis, F);
    MinorTable table(P, ops);
    std::vector<MultiPoly> grad = gradient_components(table, basis, ops);
    bool any_nonzero = false;
    for (const MultiPoly& g : grad)
        if (!g.is_zero()) any_nonzero = true;
    if (!any_nonzero)
        throw PreconditionError("gradient of det vanishes identically on the pencil");

    for (int k = 0; k < d - target_conditions; ++k) {
        std::vector<Term> terms;
        for (int j = 0; j < dim; ++j) {
            PrimeField::Elt c = F.random(rng);
            if (c != 0) terms.push_back(Term{monomial_var(j), c});
        }
        sys.gens.push_back(MultiPoly::from_terms(nvars, std::move(terms), F));
    }
    for (int k = 0; k < target_conditions; ++k)
        sys.gens.push_back(extend_vars(random_combination(grad, dim, ops, rng), nvars, ops));

    MultiPoly mu_combo(dim);
    while (mu_combo.is_zero()) mu_combo = random_combination(grad, dim, ops, rng);
    MultiPoly sat = ops.mul(extend_vars(mu_combo, nvars, ops), MultiPoly::variable(nvars, dim));
    sys.gens.push_back(ops.sub(sat, MultiPoly::constant(nvars, 1)));
    return sys;
}

std::optional<std::uint64_t> solve_count(const BuiltSystem& system, const PolyOps& ops,
                                         const SolveOptions& opts, GroebnerStats* stats) {
    std::vector<MultiPoly> gens = system.gens;
    int nvars = system.nvars;
    std::vector<bool> eliminated(static_cast<std::size_t>(nvars), false);

    if (opts.pre_eliminate) {
        // Substitute affine-linear generators away; this is an exact ring
        // isomorphism on the quotient, so the count is unchanged.
        for (;;) {
            int pick = -1;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                if (gens[g].is_zero()) {
                    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(g));
                    --g;
                    continue;
                }
                if (gens[g].degree() == 0) return 0; // nonzero constant: empty variety
                if (gens[g].degree() == 1) { pick = static_cast<int>(g); break; }
            }
            if (pick < 0) break;
            MultiPoly lin = gens[static_cast<std::size_t>(pick)];
            gens.erase(gens.begin() + pick);
            int var = -1;
            PrimeField::Elt coeff = 0;
            for (const Term& t : lin.terms()) {
                if (t.m.deg != 1) continue;
                for (int v = nvars - 1; v >= 0; --v) {
                    if (t.m.e[v] == 1 && v > var) { var = v; coeff = t.c; }
                }
            }
            // substitution polynomial: x_var = -(lin - coeff*x_var)/coeff
            std::vector<Term> rest;
            for (const Term& t : lin.terms())
                if (!(t.m.deg == 1 && t.m.e[var] == 1)) rest.push_back(t);
            MultiPoly q = MultiPoly::from_terms(nvars, std::move(rest), ops.field());
            q = ops.scale(q, ops.field().neg(ops.field().inv(coeff)));
            for (MultiPoly& g : gens) g = ops.substitute(g, var, q);
            eliminated[static_cast<std::size_t>(var)] = true;
        }
        std::vector<int> keep(static_cast<std::size_t>(nvars), -1);
        int next = 0;
        for (int v = 0; v < nvars; ++v)
            if (!eliminated[static_cast<std::size_t>(v)]) keep[static_cast<std::size_t>(v)] = next++;
        if (next != nvars) {
            for (MultiPoly& g : gens) g = ops.remap(g, keep, next);
            nvars = next;
        }
    }

    if (gens.empty())
        return nvars == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;

    // Sugar selection first under a work budget; some dense generic
    // systems run far better under the plain normal strategy, so retry
    // with it before giving up. Both attempts are deterministic.
    GroebnerBasis gb;
    GroebnerConfig first = opts.groebner;
    first.strategy = PairStrategy::sugar;
    if (first.max_term_ops == 0 || first.max_term_ops > opts.sugar_term_budget)
        first.max_term_ops = opts.sugar_term_budget;
    try {
        gb = buchberger(gens, ops, first);
    } catch (const LimitError&) {
        GroebnerConfig second = opts.groebner;
        second.strategy = PairStrategy::normal;
        gb = buchberger(std::move(gens), ops, second);
    }
    if (stats) *stats = gb.stats;
    StaircaseCount sc = count_standard_monomials(gb);
    if (!sc.is_zero_dimensional) return std::nullopt;
    return sc.standard_monomial_count;
}

namespace {

std::uint64_t key_of_b(const std::vector<int>& b) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int v : b) h = (h ^ static_cast<std::uint64_t>(v + 1)) * 0x100000001b3ULL;
    return h;
}

const char* kind_tag(InvariantKind k) {
    switch (k) {
        case InvariantKind::chromatic: return "chromatic";
        case InvariantKind::relative: return "relative";
        case InvariantKind::characteristic: return "charnum";
    }
    return "?";
}

} // namespace

CoefficientReport run_coefficient(const ContractionSpace& S, InvariantKind kind,
                                  const std::vector<int>& b_or_index, int coeff_index,
                                  const TrialConfig& cfg) {
    CoefficientReport report;
    std::map<std::uint64_t, int> agreement;
    const std::uint64_t tag = hash_tag(kind_tag(kind));
    const std::uint64_t bkey =
        kind == InvariantKind::characteristic ? key_of_b(b_or_index) : static_cast<std::uint64_t>(coeff_index);

    for (int trial = 0; trial < cfg.max_trials; ++trial) {
        SplitMix64 prime_rng =
            derive_stream(cfg.seed, {hash_tag("prime"), tag, bkey, static_cast<std::uint64_t>(trial)});
        SplitMix64 coeff_rng =
            derive_stream(cfg.seed, {hash_tag("coeffs"), tag, bkey, static_cast<std::uint64_t>(trial)});

        TrialRecord record;
        std::optional<std::uint64_t> count;
        for (int attempt = 0; attempt < 10; ++attempt) {
            PrimeField F = random_prime(cfg.prime_bits, prime_rng);
            std::vector<FpMat> basis;
            try {
                basis = S.basis_mod(F);
            } catch (const PreconditionError&) {
                continue; // rank dropped at this prime; draw another
            }
            record.prime = F.modulus();
            PolyOps ops(F);
            BuiltSystem sys = kind == InvariantKind::relative
                                  ? build_relative_system(basis, coeff_index, F, coeff_rng)
                                  : build_charnum_system(basis, b_or_index, F, coeff_rng);
            SolveOptions opts;
            opts.groebner = cfg.limits.groebner;
            count = solve_count(sys, ops, opts, &record.stats);
            break;
        }
        if (record.prime == 0)
            throw PreconditionError("could not find a prime realizing the contraction rank");
        record.count = count;
        report.trials.push_back(record);
        if (count) {
            int seen = ++agreement[*count];
            if (seen >= cfg.trials) {
                report.value = *count;
                return report;
            }
        }
    }
    if (agreement.empty())
        throw PreconditionError(
            "degenerate input: system not zero-dimensional after " +
            std::to_string(cfg.max_trials) + " trials (coefficient " + std::to_string(coeff_index) + ")");
    std::ostringstream os;
    os << "unstable count at coefficient " << coeff_index << ": observed {";
    bool first = true;
    for (const auto& [v, times] : agreement) {
        if (!first) os << ", ";
        first = false;
        os << v << " x" << times;
    }
    os << "} without " << cfg.trials << " agreeing trials";
    throw InstabilityError(os.str());
}

} // namespace detail

namespace {

void check_limits(const ContractionSpace& S, const TrialConfig& cfg) {
    cfg.validate();
    if (S.n() > cfg.limits.n_max)
        throw LimitError("matrix size n=" + std::to_string(S.n()) + " exceeds limit " +
                         std::to_string(cfg.limits.n_max));
    if (S.d() > cfg.limits.d_max)
        throw LimitError("projective dimension d=" + std::to_string(S.d()) + " exceeds limit " +
                         std::to_string(cfg.limits.d_max));
}

void check_rank(const ContractionSpace& S, const TrialConfig& cfg) {
    SplitMix64 rng = derive_stream(cfg.seed, {hash_tag("rank-precondition")});
    PrimeField F = random_prime(cfg.prime_bits, rng);
    if (!check_rank_precondition(S, 8, F, rng))
        throw PreconditionError("pencil appears to contain no matrix of rank >= n-2");
}

std::vector<int> chromatic_bvector(const ContractionSpace& S, int i) {
    std::vector<int> b(static_cast<std::size_t>(S.n() - 1), 0);
    if (S.n() >= 2) {
        b[0] += S.d() - i;                           // source hyperplanes
        b[static_cast<std::size_t>(S.n() - 2)] += i; // inverse-side conditions
    }
    return b;
}

InvariantResult run_vector(const ContractionSpace& S, InvariantKind kind, const TrialConfig& cfg) {
    check_limits(S, cfg);
    check_rank(S, cfg);
    InvariantResult result;
    result.kind = kind;
    result.n = S.n();
    result.d = S.d();
    const int count = S.d() + 1;
    result.m.assign(static_cast<std::size_t>(count), 0);
    result.reports.assign(static_cast<std::size_t>(count), {});
    detail::parallel_for(count, cfg.jobs, [&](int i) {
        CoefficientReport rep =
            kind == InvariantKind::relative
                ? detail::run_coefficient(S, kind, {}, i, cfg)
                : detail::run_coefficient(S, kind, chromatic_bvector(S, i), i, cfg);
        result.m[static_cast<std::size_t>(i)] = rep.value;
        result.reports[static_cast<std::size_t>(i)] = std::move(rep);
    });
    return result;
}

} // namespace

CoefficientReport characteristic_number_report(const ContractionSpace& S, const BVector& b,
                                               const TrialConfig& cfg) {
    check_limits(S, cfg);
    if (static_cast<int>(b.entries.size()) != S.n() - 1)
        throw PreconditionError("b-vector must have n-1 entries");
    long long total = 0;
    for (int v : b.entries) {
        if (v < 0) throw PreconditionError("b-vector entries must be non-negative");
        total += v;
    }
    if (total != S.d())
        throw PreconditionError("b-vector entries must sum to d=" + std::to_string(S.d()));
    check_rank(S, cfg);
    return detail::run_coefficient(S, InvariantKind::characteristic, b.entries, 0, cfg);
}

std::uint64_t characteristic_number(const ContractionSpace& S, const BVector& b,
                                    const TrialConfig& cfg) {
    return characteristic_number_report(S, b, cfg).value;
}

InvariantResult chromatic(const ContractionSpace& S, const TrialConfig& cfg) {
    return run_vector(S, InvariantKind::chromatic, cfg);
}

InvariantResult relative_chromatic(const ContractionSpace& S, const TrialConfig& cfg) {
    return run_vector(S, InvariantKind::relative, cfg);
}

EulerReport euler_complement(const ContractionSpace& S, const TrialConfig& cfg) {
    EulerReport report;
    report.relative = relative_chromatic(S, cfg);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < report.relative.m.size(); ++i) {
        const auto v = static_cast<std::int64_t>(report.relative.m[i]);
        sum += (i % 2 == 0) ? v : -v;
    }
    report.complement = sum;
    report.hypersurface = static_cast<std::int64_t>(S.d() + 1) - sum;
    return report;
}

ChromaticComparison compare_chromatic(const ContractionSpace& S, const TrialConfig& cfg) {
    ChromaticComparison cmp;
    cmp.chromatic = chromatic(S, cfg);
    cmp.relative = relative_chromatic(S, cfg);
    for (std::size_t i = 0; i < cmp.chromatic.m.size(); ++i)
        if (cmp.chromatic.m[i] != cmp.relative.m[i]) cmp.differ_at.push_back(static_cast<int>(i));
    return cmp;
}

} // namespace chrom
