#include "chrom/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chrom {

namespace {

// Geobucket accumulator: terms live in slots of geometrically growing
// capacity so each reduction step costs O(|reducer| + carries) instead of
// rewriting the whole work polynomial.
class Geobucket {
public:
    explicit Geobucket(const PrimeField& F) : F_(F) {}

    void push(std::vector<Term> v) {
        if (v.empty()) return;
        work_ += v.size();
        std::size_t level = 0;
        while (cap(level) < v.size()) ++level;
        for (;;) {
            if (level >= slots_.size()) slots_.resize(level + 1);
            Slot& s = slots_[level];
            if (s.pos >= s.terms.size()) {
                s.terms = std::move(v);
                s.pos = 0;
                return;
            }
            v = merge(s, v);
            s.terms.clear();
            s.pos = 0;
            if (v.empty()) return;
            if (v.size() <= cap(level)) {
                s.terms = std::move(v);
                return;
            }
            ++level;
        }
    }

    // Combined leading term across slots; false when exhausted. The
    // returned term is removed.
    bool pop_lead(Term& out) {
        for (;;) {
            int best = -1;
            for (std::size_t i = 0; i < slots_.size(); ++i) {
                Slot& s = slots_[i];
                if (s.pos >= s.terms.size()) continue;
                if (best < 0 ||
                    grevlex_compare(s.terms[s.pos].m, slots_[static_cast<std::size_t>(best)]
                                                          .terms[slots_[static_cast<std::size_t>(best)].pos]
                                                          .m) > 0)
                    best = static_cast<int>(i);
            }
            if (best < 0) return false;
            const Monomial lead = slots_[static_cast<std::size_t>(best)]
                                      .terms[slots_[static_cast<std::size_t>(best)].pos]
                                      .m;
            PrimeField::Elt c = 0;
            for (Slot& s : slots_) {
                if (s.pos < s.terms.size() && s.terms[s.pos].m == lead) {
                    c = F_.add(c, s.terms[s.pos].c);
                    ++s.pos;
                }
            }
            if (c != 0) {
                out = Term{lead, c};
                return true;
            }
        }
    }

    std::uint64_t work() const { return work_; }

private:
    struct Slot {
        std::vector<Term> terms; // sorted descending from pos
        std::size_t pos = 0;
    };

    static std::size_t cap(std::size_t level) { return std::size_t{16} << (2 * level); }

    std::vector<Term> merge(const Slot& s, const std::vector<Term>& v) {
        std::vector<Term> out;
        out.reserve(s.terms.size() - s.pos + v.size());
        std::size_t ia = s.pos, ib = 0;
        while (ia < s.terms.size() || ib < v.size()) {
            if (ia == s.terms.size()) {
                out.push_back(v[ib++]);
            } else if (ib == v.size()) {
                out.push_back(s.terms[ia++]);
            } else {
                int cmp = grevlex_compare(s.terms[ia].m, v[ib].m);
                if (cmp > 0) {
                    out.push_back(s.terms[ia++]);
                } else if (cmp < 0) {
                    out.push_back(v[ib++]);
                } else {
                    PrimeField::Elt c = F_.add(s.terms[ia].c, v[ib].c);
                    if (c != 0) out.push_back(Term{s.terms[ia].m, c});
                    ++ia;
                    ++ib;
                }
            }
        }
        work_ += out.size();
        return out;
    }

    const PrimeField& F_;
    std::vector<Slot> slots_;
    std::uint64_t work_ = 0;
};

std::vector<Term> scaled_shifted_tail(const std::vector<Term>& g, const Monomial& m,
                                      PrimeField::Elt c, const PrimeField& F) {
    std::vector<Term> out;
    out.reserve(g.size() - 1);
    for (std::size_t i = 1; i < g.size(); ++i)
        out.push_back(Term{monomial_mul(g[i].m, m), F.mul(g[i].c, c)});
    return out;
}

// Exponent-threshold bitmask: a monomial can only divide another when its
// mask bits are a subset, which filters most candidates with one AND.
std::uint64_t divmask(const Monomial& m) {
    std::uint64_t mask = 0;
    for (int v = 0; v < kMaxVars; ++v) {
        const unsigned e = m.e[static_cast<std::size_t>(v)];
        std::uint64_t bits = (e >= 1 ? 1u : 0u) | (e >= 2 ? 2u : 0u) | (e >= 4 ? 4u : 0u) |
                             (e >= 7 ? 8u : 0u);
        mask |= bits << (4 * v);
    }
    return mask;
}

// Normal form; when `sugar` is given it is updated through every
// reduction step: sugar := max(sugar, deg(m) + sugar(reducer)). A nonzero
// `budget` bounds term operations, counting work already accumulated in
// *term_ops.
std::vector<Term> normal_form(const std::vector<Term>& f,
                              const std::vector<std::vector<Term>>& basis,
                              const std::vector<Monomial>& lms,
                              const std::vector<PrimeField::Elt>& lead_inv,
                              const PrimeField& F,
                              std::uint64_t* term_ops = nullptr,
                              std::uint64_t budget = 0,
                              const std::vector<std::uint32_t>* sugars = nullptr,
                              std::uint32_t* sugar = nullptr) {
    std::vector<std::uint64_t> masks(lms.size());
    for (std::size_t k = 0; k < lms.size(); ++k) masks[k] = divmask(lms[k]);
    const std::uint64_t base_ops = term_ops ? *term_ops : 0;
    Geobucket work(F);
    work.push(f);
    std::vector<Term> done;
    Term lt;
    while (work.pop_lead(lt)) {
        if (budget != 0 && base_ops + work.work() > budget) {
            if (term_ops) *term_ops = base_ops + work.work();
            throw LimitError("buchberger: term-operation budget exceeded");
        }
        const std::uint64_t ltmask = ~divmask(lt.m);
        int reducer = -1;
        for (std::size_t k = 0; k < lms.size(); ++k) {
            if (lms[k].deg > lt.m.deg || (masks[k] & ltmask) != 0) continue;
            if (monomial_divides(lms[k], lt.m)) { reducer = static_cast<int>(k); break; }
        }
        if (reducer < 0) {
            done.push_back(lt);
            continue;
        }
        const auto k = static_cast<std::size_t>(reducer);
        // lt cancels against c*m*lead(g); push the negated scaled tail
        PrimeField::Elt c = F.mul(lt.c, lead_inv[k]);
        Monomial m = monomial_div(lt.m, lms[k]);
        if (sugar && sugars) *sugar = std::max(*sugar, m.deg + (*sugars)[k]);
        work.push(scaled_shifted_tail(basis[k], m, F.neg(c), F));
    }
    if (term_ops) *term_ops += work.work();
    return done;
}

struct PairKey {
    std::uint32_t sugar; // homogenizing degree of the S-polynomial
    std::uint32_t deg;
    Monomial lcm;
    std::uint32_t i, j;
};

struct PairLess {
    bool use_sugar = true;

    bool operator()(const PairKey& a, const PairKey& b) const {
        if (use_sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.deg != b.deg) return a.deg < b.deg;
        int cmp = grevlex_compare(a.lcm, b.lcm);
        if (cmp != 0) return cmp < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

bool is_coprime(const Monomial& a, const Monomial& b) {
    for (int v = 0; v < kMaxVars; ++v)
        if (a.e[v] != 0 && b.e[v] != 0) return false;
    return true;
}

} // namespace

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis, const PolyOps& ops) {
    const PrimeField& F = ops.field();
    std::vector<std::vector<Term>> rows;
    std::vector<Monomial> lms;
    std::vector<PrimeField::Elt> lead_inv;
    for (const MultiPoly& g : basis) {
        if (g.is_zero()) continue;
        rows.push_back(g.terms());
        lms.push_back(g.leading().m);
        lead_inv.push_back(F.inv(g.leading().c));
    }
    std::vector<Term> nf = normal_form(f.terms(), rows, lms, lead_inv, F);
    return MultiPoly::from_terms(f.nvars(), std::move(nf), F);
}

GroebnerBasis buchberger(std::vector<MultiPoly> gens, const PolyOps& ops, const GroebnerConfig& cfg) {
    if (gens.empty()) throw PreconditionError("buchberger: empty generator list");
    const PrimeField& F = ops.field();
    const int nvars = gens[0].nvars();
    for (const MultiPoly& g : gens)
        if (g.nvars() != nvars) throw PreconditionError("buchberger: mixed variable counts");

    GroebnerBasis result;
    result.nvars = nvars;
    GroebnerStats& st = result.stats;

    std::vector<std::vector<Term>> basis;   // monic generators
    std::vector<std::uint32_t> sugars;      // homogenizing degree per generator
    std::vector<Monomial> lms;
    std::vector<PrimeField::Elt> lead_inv;  // all 1, kept for normal_form's interface
    std::set<PairKey, PairLess> pairs(PairLess{cfg.strategy == PairStrategy::sugar});

    auto unit_ideal = [&]() {
        result.generators = {MultiPoly::constant(nvars, 1)};
        result.stats.basis_size = 1;
        return result;
    };

    auto check_budget = [&]() {
        if (cfg.max_term_ops != 0 && st.term_ops > cfg.max_term_ops)
            throw LimitError("buchberger: term-operation budget exceeded");
    };

    auto insert_element = [&](std::vector<Term> terms, std::uint32_t sugar) {
        const std::uint32_t t = static_cast<std::uint32_t>(basis.size());
        const Monomial lm_t = terms[0].m;
        sugar = std::max(sugar, terms[0].m.deg);
        st.max_degree = std::max(st.max_degree, lm_t.deg);

        // Chain criterion on queued pairs: (i,j) is redundant once the new
        // leading term divides lcm(i,j) while neither mixed lcm equals it.
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (monomial_divides(lm_t, it->lcm)) {
                Monomial li = monomial_lcm(lms[it->i], lm_t);
                Monomial lj = monomial_lcm(lms[it->j], lm_t);
                if (!(li == it->lcm) && !(lj == it->lcm)) {
                    ++st.pairs_skipped;
                    it = pairs.erase(it);
                    continue;
                }
            }
            ++it;
        }

        // New pairs, pruned by the Gebauer-Moeller M/F steps and the
        // coprimality criterion.
        std::vector<Monomial> cand(t);
        std::vector<bool> drop(t, false);
        for (std::uint32_t k = 0; k < t; ++k) cand[k] = monomial_lcm(lms[k], lm_t);
        for (std::uint32_t k = 0; k < t; ++k) {
            if (drop[k]) continue;
            for (std::uint32_t l = 0; l < t; ++l) {
                if (l == k || drop[l]) continue;
                if (monomial_divides(cand[l], cand[k]) && !(cand[l] == cand[k])) {
                    drop[k] = true;
                    break;
                }
            }
        }
        std::map<Monomial, std::vector<std::uint32_t>, decltype([](const Monomial& a, const Monomial& b) {
                     return grevlex_compare(a, b) < 0;
                 })>
            classes;
        for (std::uint32_t k = 0; k < t; ++k)
            if (!drop[k]) classes[cand[k]].push_back(k);
        for (auto& [lcm, members] : classes) {
            bool coprime_class = false;
            for (std::uint32_t k : members)
                if (is_coprime(lms[k], lm_t)) { coprime_class = true; break; }
            if (coprime_class) {
                st.pairs_skipped += members.size();
                continue;
            }
            ++st.pairs_generated;
            const std::uint32_t k = members.front();
            const std::uint32_t s = std::max(sugars[k] + lcm.deg - lms[k].deg,
                                             sugar + lcm.deg - lm_t.deg);
            pairs.insert(PairKey{s, lcm.deg, lcm, k, t});
            st.pairs_skipped += members.size() - 1;
        }

        basis.push_back(std::move(terms));
        sugars.push_back(sugar);
        lms.push_back(lm_t);
        lead_inv.push_back(1);
        if (basis.size() > cfg.max_basis)
            throw LimitError("buchberger: basis size cap exceeded");
        if (pairs.size() > cfg.max_pairs)
            throw LimitError("buchberger: pair queue cap exceeded");
    };

    // Seed with the normal forms of the inputs so the basis starts
    // interreduced enough to keep early pairs cheap.
    for (MultiPoly& g : gens) {
        if (g.is_zero()) continue;
        std::vector<Term> nf =
            normal_form(g.terms(), basis, lms, lead_inv, F, &st.term_ops, cfg.max_term_ops);
        if (nf.empty()) continue;
        if (nf[0].m.deg == 0) return unit_ideal();
        PrimeField::Elt ic = F.inv(nf[0].c);
        for (Term& term : nf) term.c = F.mul(term.c, ic);
        insert_element(std::move(nf), g.degree());
    }

    std::uint64_t reductions = 0;
    while (!pairs.empty()) {
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        ++st.pairs_reduced;
        if (++reductions > cfg.max_reductions)
            throw LimitError("buchberger: reduction budget exceeded");
        check_budget();

        // S-polynomial of the monic pair, reduced to normal form.
        const Monomial mi = monomial_div(pk.lcm, lms[pk.i]);
        const Monomial mj = monomial_div(pk.lcm, lms[pk.j]);
        std::vector<Term> spoly;
        spoly.reserve(basis[pk.i].size() + basis[pk.j].size());
        {
            const std::vector<Term>& fi = basis[pk.i];
            const std::vector<Term>& fj = basis[pk.j];
            std::size_t ia = 1, ib = 1;
            while (ia < fi.size() || ib < fj.size()) {
                if (ib == fj.size()) {
                    spoly.push_back(Term{monomial_mul(fi[ia].m, mi), fi[ia].c});
                    ++ia;
                    continue;
                }
                Term tb{monomial_mul(fj[ib].m, mj), F.neg(fj[ib].c)};
                if (ia == fi.size()) {
                    spoly.push_back(tb);
                    ++ib;
                    continue;
                }
                Term ta{monomial_mul(fi[ia].m, mi), fi[ia].c};
                int cmp = grevlex_compare(ta.m, tb.m);
                if (cmp > 0) {
                    spoly.push_back(ta);
                    ++ia;
                } else if (cmp < 0) {
                    spoly.push_back(tb);
                    ++ib;
                } else {
                    PrimeField::Elt c = F.add(ta.c, tb.c);
                    if (c != 0) spoly.push_back(Term{ta.m, c});
                    ++ia;
                    ++ib;
                }
            }
        }
        std::uint32_t sugar = pk.sugar;
        std::vector<Term> nf = normal_form(spoly, basis, lms, lead_inv, F, &st.term_ops,
                                           cfg.max_term_ops, &sugars, &sugar);
        if (nf.empty()) {
            ++st.reductions_to_zero;
            continue;
        }
        if (nf[0].m.deg == 0) return unit_ideal();
        PrimeField::Elt ic = F.inv(nf[0].c);
        for (Term& term : nf) term.c = F.mul(term.c, ic);
        insert_element(std::move(nf), sugar);
    }

    // Interreduce: keep generators with minimal leading terms, then tail
    // reduce each against the rest.
    std::vector<std::size_t> order(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return grevlex_compare(lms[a], lms[b]) < 0;
    });
    std::vector<std::size_t> kept;
    for (std::size_t k : order) {
        bool redundant = false;
        for (std::size_t j : kept)
            if (monomial_divides(lms[j], lms[k])) { redundant = true; break; }
        if (!redundant) kept.push_back(k);
    }
    std::vector<std::vector<Term>> final_rows;
    std::vector<Monomial> final_lms;
    std::vector<PrimeField::Elt> final_inv;
    for (std::size_t k : kept) {
        final_rows.push_back(basis[k]);
        final_lms.push_back(lms[k]);
        final_inv.push_back(1);
    }
    for (std::size_t k = 0; k < final_rows.size(); ++k) {
        std::vector<Term> self = std::move(final_rows[k]);
        std::vector<std::vector<Term>> others;
        std::vector<Monomial> other_lms;
        std::vector<PrimeField::Elt> other_inv;
        for (std::size_t j = 0; j < final_rows.size(); ++j) {
            if (j == k) continue;
            others.push_back(final_rows[j]);
            other_lms.push_back(final_lms[j]);
            other_inv.push_back(1);
        }
        final_rows[k] = normal_form(self, others, other_lms, other_inv, F, &st.term_ops);
    }
    for (std::vector<Term>& row : final_rows)
        result.generators.push_back(MultiPoly::from_terms(nvars, std::move(row), F));
    std::sort(result.generators.begin(), result.generators.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                  return grevlex_compare(a.leading().m, b.leading().m) < 0;
              });
    st.basis_size = result.generators.size();
    return result;
}

StaircaseCount count_standard_monomials(const GroebnerBasis& basis) {
    StaircaseCount out;
    const int nvars = basis.nvars;
    if (nvars == 0) {
        out.is_zero_dimensional = true;
        bool unit = false;
        for (const MultiPoly& g : basis.generators)
            if (!g.is_zero()) unit = true;
        out.standard_monomial_count = unit ? 0 : 1;
        return out;
    }
    std::vector<Monomial> lms;
    for (const MultiPoly& g : basis.generators) {
        if (g.is_zero()) continue;
        if (g.leading().m.deg == 0) {
            // Unit ideal: empty staircase.
            out.is_zero_dimensional = true;
            out.standard_monomial_count = 0;
            return out;
        }
        lms.push_back(g.leading().m);
    }
    std::vector<int> pure(static_cast<std::size_t>(nvars), -1);
    for (const Monomial& m : lms) {
        for (int v = 0; v < nvars; ++v) {
            if (m.e[v] == m.deg && m.deg > 0) {
                if (pure[static_cast<std::size_t>(v)] < 0 || int(m.deg) < pure[static_cast<std::size_t>(v)])
                    pure[static_cast<std::size_t>(v)] = static_cast<int>(m.deg);
            }
        }
    }
    for (int v = 0; v < nvars; ++v) {
        if (pure[static_cast<std::size_t>(v)] < 0) return out; // positive-dimensional
    }
    // Group leading monomials by the last variable in their support; a
    // partial assignment up to v can only be divisible by those groups.
    std::vector<std::vector<Monomial>> by_maxvar(static_cast<std::size_t>(nvars));
    for (const Monomial& m : lms) {
        int mv = 0;
        for (int v = 0; v < nvars; ++v)
            if (m.e[v] != 0) mv = v;
        by_maxvar[static_cast<std::size_t>(mv)].push_back(m);
    }
    std::uint64_t count = 0;
    std::array<std::uint8_t, kMaxVars> cur{};
    auto divisible_here = [&](int v) {
        for (const Monomial& m : by_maxvar[static_cast<std::size_t>(v)]) {
            bool div = true;
            for (int i = 0; i <= v; ++i)
                if (m.e[i] > cur[static_cast<std::size_t>(i)]) { div = false; break; }
            if (div) return true;
        }
        return false;
    };
    // Depth-first enumeration bounded by the pure powers.
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == nvars) {
            ++count;
            return;
        }
        for (int e = 0; e < pure[static_cast<std::size_t>(v)]; ++e) {
            cur[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
            if (!divisible_here(v)) self(self, v + 1);
        }
        cur[static_cast<std::size_t>(v)] = 0;
    };
    recurse(recurse, 0);
    out.is_zero_dimensional = true;
    out.standard_monomial_count = count;
    return out;
}

} // namespace chrom
