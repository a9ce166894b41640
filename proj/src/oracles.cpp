#include "chrom/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chrom {

int IntPoly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

bool IntPoly::is_zero() const { return degree() < 0; }

std::int64_t IntPoly::eval(std::int64_t k) const {
    std::int64_t acc = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        acc = acc * k + c[static_cast<std::size_t>(i)];
    return acc;
}

IntPoly IntPoly::div_linear(std::int64_t root) const {
    // Synthetic division by (k - root).
    const int deg = degree();
    if (deg < 1) throw PreconditionError("div_linear: degree too small");
    IntPoly q;
    q.c.assign(static_cast<std::size_t>(deg), 0);
    std::int64_t carry = 0;
    for (int i = deg; i >= 1; --i) {
        carry = c[static_cast<std::size_t>(i)] + carry * root;
        q.c[static_cast<std::size_t>(i - 1)] = carry;
    }
    if (c[0] + carry * root != 0) throw PreconditionError("div_linear: nonzero remainder");
    return q;
}

IntPoly IntPoly::monomial(int deg) {
    IntPoly p;
    p.c.assign(static_cast<std::size_t>(deg) + 1, 0);
    p.c[static_cast<std::size_t>(deg)] = 1;
    return p;
}

IntPoly intpoly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] -= b.c[i];
    }
    return r;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Normalized undirected simple edge list (chromatic polynomials ignore
// orientation and edge multiplicity once loops are ruled out).
EdgeList simplify(int vertices, const EdgeList& edges, bool& loop) {
    loop = false;
    EdgeList out;
    for (auto [u, v] : edges) {
        if (u == v) { loop = true; return {}; }
        if (u > v) std::swap(u, v);
        out.emplace_back(u, v);
    }
    (void)vertices;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Lexicographically smallest relabeling over all vertex permutations;
// exact but factorial, so only attempted for small vertex counts.
EdgeList canonical_form(int vertices, const EdgeList& edges) {
    std::vector<int> perm(static_cast<std::size_t>(vertices));
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best;
    bool have = false;
    do {
        EdgeList mapped;
        mapped.reserve(edges.size());
        for (auto [u, v] : edges) {
            int a = perm[static_cast<std::size_t>(u)];
            int b = perm[static_cast<std::size_t>(v)];
            if (a > b) std::swap(a, b);
            mapped.emplace_back(a, b);
        }
        std::sort(mapped.begin(), mapped.end());
        if (!have || mapped < best) {
            best = std::move(mapped);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct ChromaticMemo {
    std::map<std::pair<int, EdgeList>, IntPoly> table;
};

IntPoly chromatic_rec(int vertices, const EdgeList& edges, ChromaticMemo& memo) {
    bool loop = false;
    EdgeList simple = simplify(vertices, edges, loop);
    if (loop) return IntPoly{};
    if (simple.empty()) return IntPoly::monomial(vertices);

    const bool use_memo = vertices <= 8;
    std::pair<int, EdgeList> key;
    if (use_memo) {
        key = {vertices, canonical_form(vertices, simple)};
        auto it = memo.table.find(key);
        if (it != memo.table.end()) return it->second;
    }

    // chi(G) = chi(G - e) - chi(G / e) on the last edge.
    auto [u, v] = simple.back();
    EdgeList deleted(simple.begin(), simple.end() - 1);
    IntPoly del = chromatic_rec(vertices, deleted, memo);

    EdgeList contracted;
    contracted.reserve(deleted.size());
    auto relabel = [&](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    for (auto [x, y] : deleted) contracted.emplace_back(relabel(x), relabel(y));
    IntPoly con = chromatic_rec(vertices - 1, contracted, memo);

    IntPoly result = intpoly_sub(del, con);
    if (use_memo) memo.table.emplace(std::move(key), result);
    return result;
}

std::vector<std::int64_t> abs_coeffs_descending(const IntPoly& p, int expect_degree) {
    if (p.degree() != expect_degree)
        throw PreconditionError("oracle: unexpected reduced degree");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(expect_degree) + 1);
    for (int i = expect_degree; i >= 0; --i)
        out.push_back(std::llabs(p.c[static_cast<std::size_t>(i)]));
    return out;
}

__int128 igcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact rank over Q by fraction-free elimination with gcd-normalized
// rows; entries stay within __int128 for the sizes the oracle accepts.
int exact_rank(const std::vector<std::vector<std::int64_t>>& matrix,
               const std::vector<int>& cols) {
    if (cols.empty()) return 0;
    std::vector<std::vector<__int128>> m;
    for (const auto& row : matrix) {
        std::vector<__int128> r;
        r.reserve(cols.size());
        for (int c : cols) r.push_back(row[static_cast<std::size_t>(c)]);
        m.push_back(std::move(r));
    }
    const std::size_t ncols = cols.size();
    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(m.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const auto& prow = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const __int128 f = m[r][col];
            const __int128 p = prow[col];
            __int128 g = 0;
            for (std::size_t c = col; c < ncols; ++c) {
                m[r][c] = m[r][c] * p - prow[c] * f;
                __int128 v = m[r][c] < 0 ? -m[r][c] : m[r][c];
                if (v >= (__int128{1} << 100)) throw LimitError("matroid rank: entries too large");
                g = igcd(g, v);
            }
            if (g > 1)
                for (std::size_t c = col; c < ncols; ++c) m[r][c] /= g;
        }
        ++rank;
    }
    return rank;
}

} // namespace

IntPoly graph_chromatic_polynomial(const Graph& G) {
    G.validate();
    ChromaticMemo memo;
    return chromatic_rec(G.vertex_count, G.edges, memo);
}

std::vector<std::int64_t> graph_chromatic_oracle(const Graph& G) {
    G.validate();
    if (G.edges.empty()) throw PreconditionError("graph oracle: need at least one edge");
    if (G.has_loop()) throw PreconditionError("loop: chromatic polynomial is zero");
    if (!G.connected()) throw PreconditionError("graph oracle: graph must be connected");
    IntPoly chi = graph_chromatic_polynomial(G);
    IntPoly reduced = chi.div_linear(0).div_linear(1);
    return abs_coeffs_descending(reduced, G.vertex_count - 2);
}

IntPoly matroid_characteristic_polynomial(const Matroid& M) {
    const int m = M.ground_size();
    if (m == 0) throw PreconditionError("matroid: empty ground set");
    if (m > 20) throw LimitError("matroid: ground set larger than 20");
    for (int c = 0; c < m; ++c) {
        bool zero = true;
        for (const auto& row : M.matrix)
            if (row[static_cast<std::size_t>(c)] != 0) zero = false;
        if (zero) throw PreconditionError("loop: zero column makes the characteristic polynomial vanish");
    }
    std::vector<int> all(static_cast<std::size_t>(m));
    std::iota(all.begin(), all.end(), 0);
    const int full_rank = exact_rank(M.matrix, all);

    IntPoly chi;
    chi.c.assign(static_cast<std::size_t>(full_rank) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> cols;
        for (int c = 0; c < m; ++c)
            if (mask & (1u << c)) cols.push_back(c);
        const int r = exact_rank(M.matrix, cols);
        const int sign = (__builtin_popcount(mask) % 2 == 0) ? 1 : -1;
        chi.c[static_cast<std::size_t>(full_rank - r)] += sign;
    }
    return chi;
}

std::vector<std::int64_t> matroid_characteristic_oracle(const Matroid& M) {
    IntPoly chi = matroid_characteristic_polynomial(M);
    const int rank = chi.degree(); // leading term is k^{r(E)}
    IntPoly reduced = chi.div_linear(1);
    return abs_coeffs_descending(reduced, rank - 1);
}

} // namespace chrom
