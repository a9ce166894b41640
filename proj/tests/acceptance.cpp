// Acceptance suite: end-to-end checks of the counting engine against the
// combinatorial oracles and the published values for the worked spaces.
// Prints one [PASS]/[FAIL] line per criterion; exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chrom/groebner.hpp"
#include "chrom/invariants.hpp"
#include "chrom/io.hpp"
#include "chrom/oracles.hpp"
#include "fixtures.hpp"

using namespace chrom;

#ifndef CHROM_CLI_PATH
#define CHROM_CLI_PATH "./chrom"
#endif
#ifndef CHROM_DATA_DIR
#define CHROM_DATA_DIR "./data"
#endif

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
    std::printf("[%s] %d: %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool run_criterion(int idx, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "criterion %d: %.1f s\n", idx, sec);
    report(idx, ok, what + note);
    return ok;
}

PrimeField acceptance_field() {
    SplitMix64 rng(2025);
    return random_prime(31, rng);
}

TrialConfig cfg_seeded(std::uint64_t seed, int n_max = 6) {
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.limits.n_max = n_max;
    return cfg;
}

using U64Vec = std::vector<std::uint64_t>;

std::uint64_t rank_cell(int a, int n, int r, std::uint64_t seed, const PrimeField& F,
                        const TrialConfig& cfg) {
    Tensor T = generic_rank_r_tensor(a, n, r, seed);
    ContractionSpace S = contract(T, F);
    std::vector<int> b(static_cast<std::size_t>(n - 1), 0);
    if (n >= 2) b[static_cast<std::size_t>(n - 2)] = S.d();
    return characteristic_number(S, BVector{b}, cfg);
}

std::string capture_cli(const std::string& args) {
    const std::string cmd = std::string(CHROM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

// --- criterion bodies -------------------------------------------------

bool criterion_concentration_model() {
    PrimeField F = acceptance_field();
    ContractionSpace S = contract(fixtures::concentration_model_3x3(), F);
    TrialConfig cfg = cfg_seeded(101);
    InvariantResult chi = chromatic(S, cfg);
    InvariantResult rel = relative_chromatic(S, cfg);
    const U64Vec expect = {1, 2, 4, 4, 2};
    return chi.m == expect && rel.m == expect && rel.m.back() == 2;
}

bool criterion_euler() {
    PrimeField F = acceptance_field();
    ContractionSpace S = contract(fixtures::block_symmetric_3x3(), F);
    TrialConfig cfg = cfg_seeded(102);
    ChromaticComparison cmp = compare_chromatic(S, cfg);
    EulerReport euler = euler_complement(S, cfg);
    const U64Vec expect = {1, 2, 2, 1};
    return cmp.chromatic.m == expect && cmp.relative.m == expect && euler.complement == 0 &&
           euler.hypersurface == 4;
}

bool criterion_six_cycle() {
    PrimeField F = acceptance_field();
    Graph c6 = fixtures::cycle_graph(6);
    ContractionSpace S = contract(graph_to_tensor(c6), F);
    TrialConfig cfg = cfg_seeded(103);
    ChromaticComparison cmp = compare_chromatic(S, cfg);
    const U64Vec expect = {1, 5, 10, 10, 5};
    const std::vector<std::int64_t> signed_expect = {1, 5, 10, 10, 5};
    return cmp.chromatic.m == expect && cmp.equal() &&
           graph_chromatic_oracle(c6) == signed_expect &&
           matroid_characteristic_oracle(graph_incidence_matroid(c6)) == signed_expect;
}

bool criterion_quadrics() {
    PrimeField F = acceptance_field();
    ContractionSpace S = contract(fixtures::cyclic_quadrics_4x4(), F);
    TrialConfig cfg = cfg_seeded(104);
    InvariantResult chi = chromatic(S, cfg);
    InvariantResult rel = relative_chromatic(S, cfg);
    const std::uint64_t nine = characteristic_number(S, BVector{{0, 0, 7}}, cfg);
    return chi.m == U64Vec{1, 3, 9, 17, 21, 21, 17, 9} &&
           rel.m == U64Vec{1, 3, 9, 17, 21, 21, 15, 5} && nine == 9;
}

bool criterion_rank_table() {
    PrimeField F = acceptance_field();
    TrialConfig cfg = cfg_seeded(105);
    SplitMix64 seeds(900);
    const std::vector<std::vector<std::uint64_t>> n3_rows = {
        {1, 2, 1}, {1, 2, 4, 4}, {1, 2, 4, 8, 10}, {1, 2, 4, 8, 10, 8}, {1, 2, 4, 8, 10, 8}};
    for (int r = 3; r <= 7; ++r) {
        const auto& row = n3_rows[static_cast<std::size_t>(r - 3)];
        for (int a = 1; a <= static_cast<int>(row.size()); ++a) {
            if (rank_cell(a, 3, r, seeds.next(), F, cfg) != row[static_cast<std::size_t>(a - 1)])
                return false;
        }
    }
    for (int r = 2; r <= 5; ++r) {
        for (int a = 1; a <= std::min(r, 4); ++a) {
            if (rank_cell(a, 2, r, seeds.next(), F, cfg) != 1) return false;
        }
    }
    // transition at r=4 for n=3: the a=3 cell moves from 1 to its stable value 4
    return rank_cell(3, 3, 3, seeds.next(), F, cfg) == 1 &&
           rank_cell(3, 3, 4, seeds.next(), F, cfg) == 4;
}

bool criterion_generic_spaces() {
    PrimeField F = acceptance_field();
    TrialConfig cfg = cfg_seeded(106);
    return rank_cell(3, 3, 9, 61, F, cfg) == 4 && rank_cell(4, 4, 16, 62, F, cfg) == 27;
}

bool criterion_property_suite() {
    PrimeField F = acceptance_field();
    SplitMix64 rng(42424242);

    // m_0 = 1 on 20 random valid inputs
    for (int k = 0; k < 20; ++k) {
        const int n = 2 + static_cast<int>(rng.next_below(3));
        const int a = 1 + static_cast<int>(rng.next_below(4));
        ContractionSpace S = contract(generic_rank_r_tensor(a, n, a + n, rng.next()), F);
        std::vector<int> b(static_cast<std::size_t>(n - 1), 0);
        b[0] = S.d();
        if (characteristic_number(S, BVector{b}, cfg_seeded(rng.next())) != 1) return false;
    }

    // chromatic == relative on 20 random diagonal spaces (n <= 6, d <= 4)
    for (int k = 0; k < 20; ++k) {
        const int n = 3 + static_cast<int>(rng.next_below(4));
        const int dim = 2 + static_cast<int>(rng.next_below(
                                std::min<std::uint64_t>(4, static_cast<std::uint64_t>(n) - 1)));
        std::vector<IntMat> slices;
        for (int s = 0; s < dim; ++s) {
            IntMat m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
            for (int i = 0; i < n; ++i)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                    static_cast<std::int64_t>(rng.next_below(19)) - 9;
            slices.push_back(std::move(m));
        }
        ContractionSpace S = contract(model_from_matrix_space(std::move(slices)), F);
        if (!compare_chromatic(S, cfg_seeded(rng.next())).equal()) return false;
    }

    // engine/oracle agreement on 25 random connected loopless graphs
    for (int k = 0; k < 25; ++k) {
        Graph G = fixtures::random_connected_graph(rng, 6, 10);
        ContractionSpace S = contract(graph_to_tensor(G), F);
        InvariantResult engine = chromatic(S, cfg_seeded(rng.next(), /*n_max=*/12));
        std::vector<std::int64_t> oracle = graph_chromatic_oracle(G);
        if (engine.m.size() != oracle.size()) return false;
        for (std::size_t i = 0; i < oracle.size(); ++i)
            if (static_cast<std::int64_t>(engine.m[i]) != oracle[i]) return false;
    }

    // Groebner self-checks: random triangular split systems vs exhaustive
    // enumeration, plus S-polynomial reduction to zero
    PrimeField small(101);
    PolyOps ops(small);
    for (int k = 0; k < 5; ++k) {
        const int nvars = 1 + static_cast<int>(rng.next_below(3));
        std::vector<MultiPoly> gens;
        std::uint64_t expected = 1;
        for (int v = 0; v < nvars; ++v) {
            const int deg = 1 + static_cast<int>(rng.next_below(3));
            expected *= static_cast<std::uint64_t>(deg);
            std::vector<PrimeField::Elt> roots;
            while (static_cast<int>(roots.size()) < deg) {
                PrimeField::Elt r = small.random(rng);
                bool dup = false;
                for (PrimeField::Elt x : roots) dup = dup || x == r;
                if (!dup) roots.push_back(r);
            }
            MultiPoly f = MultiPoly::constant(nvars, 1);
            for (PrimeField::Elt r : roots) {
                MultiPoly lin = ops.sub(MultiPoly::variable(nvars, v), MultiPoly::constant(nvars, r));
                // shear by the next variable to couple the equations
                if (v + 1 < nvars)
                    lin = ops.add(lin, ops.scale(MultiPoly::variable(nvars, v + 1), small.random(rng)));
                f = ops.mul(f, lin);
            }
            gens.push_back(f);
        }
        GroebnerBasis gb = buchberger(gens, ops);
        StaircaseCount sc = count_standard_monomials(gb);
        if (!sc.is_zero_dimensional || *sc.standard_monomial_count != expected) return false;

        // exhaustive enumeration over F_101^nvars
        std::uint64_t brute = 0;
        std::vector<PrimeField::Elt> pt(static_cast<std::size_t>(nvars), 0);
        auto enumerate = [&](auto&& self, int v) -> void {
            if (v == nvars) {
                for (const MultiPoly& g : gens)
                    if (ops.evaluate(g, pt) != 0) return;
                ++brute;
                return;
            }
            for (std::uint64_t x = 0; x < small.modulus(); ++x) {
                pt[static_cast<std::size_t>(v)] = static_cast<PrimeField::Elt>(x);
                self(self, v + 1);
            }
        };
        enumerate(enumerate, 0);
        if (brute != expected) return false;

        for (std::size_t i = 0; i < gb.generators.size(); ++i) {
            for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
                const MultiPoly& f = gb.generators[i];
                const MultiPoly& g = gb.generators[j];
                Monomial lcm = monomial_lcm(f.leading().m, g.leading().m);
                MultiPoly sf = ops.mul_term(f, monomial_div(lcm, f.leading().m), 1);
                MultiPoly sg = ops.mul_term(g, monomial_div(lcm, g.leading().m), 1);
                if (!reduce(ops.sub(sf, sg), gb.generators, ops).is_zero()) return false;
            }
        }
    }

    // gradient components match formal partials and the Euler identity
    for (int k = 0; k < 5; ++k) {
        const int n = 2 + static_cast<int>(rng.next_below(3));
        const int a = 2 + static_cast<int>(rng.next_below(3));
        ContractionSpace S = contract(generic_rank_r_tensor(a, n, a + n, rng.next()), F);
        auto basis = S.basis_mod(F);
        Pencil P = Pencil::from_basis(basis, F);
        PolyOps pops(F);
        MinorTable table(P, pops);
        std::vector<MultiPoly> grad = gradient_components(table, basis, pops);
        const MultiPoly& det = table.det();
        MultiPoly euler(P.nvars);
        for (int j = 0; j < S.dim(); ++j) {
            if (!(grad[static_cast<std::size_t>(j)].str() == pops.partial_derivative(det, j).str()))
                return false;
            euler = pops.add(euler, pops.mul(MultiPoly::variable(P.nvars, j),
                                             grad[static_cast<std::size_t>(j)]));
        }
        if (!(euler.str() == pops.scale(det, F.from_int(n)).str())) return false;
    }
    return true;
}

bool criterion_determinism() {
    const std::string data = CHROM_DATA_DIR;
    const std::string run = "chromatic " + data + "/concentration5_3x3.tensor --both --seed 7";
    std::string first = capture_cli(run);
    std::string second = capture_cli(run);
    std::string multi = capture_cli(run + " --jobs 4");
    if (first.empty() || first.find("m: 1 2 4 4 2") == std::string::npos) return false;
    const std::string table = "rank-table --n 2 --r-range 2..3 --seed 9";
    return first == second && first == multi && capture_cli(table) == capture_cli(table);
}

} // namespace

int main() {
    run_criterion(1, "5-dim symmetric 3x3 model: chromatic = relative = (1,2,4,4,2), ML degree 2",
                  criterion_concentration_model);
    run_criterion(2, "block symmetric cubic: m = m' = (1,2,2,1), complement Euler 0, chi(X) = 4",
                  criterion_euler);
    run_criterion(3, "6-cycle: engine (1,5,10,10,5) matches deletion-contraction and matroid oracles",
                  criterion_six_cycle);
    run_criterion(4, "cyclic quadric family: chi = (1,3,9,17,21,21,17,9), chi' = (...,15,5), T(0,0,7) = 9",
                  criterion_quadrics);
    run_criterion(5, "rank table blocks n=2 (r=2..5), n=3 (r=3..7) with stabilization and r=4 transition",
                  criterion_rank_table);
    run_criterion(6, "generic spaces: b(3,3) = 4 and b(4,4) = 27", criterion_generic_spaces);
    run_criterion(7, "property suite: m_0 = 1, diagonal chi = chi', graph battery, solver self-checks",
                  criterion_property_suite);
    run_criterion(8, "determinism: repeated CLI runs with one seed are byte-identical",
                  criterion_determinism);
    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures;
}
