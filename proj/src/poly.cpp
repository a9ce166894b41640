#include "chrom/poly.hpp"

#include <algorithm>

namespace chrom {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(a.e[i]) + b.e[i];
        if (s > 255) throw LimitError("monomial degree exceeds representation cap");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = a.deg + b.deg;
    return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    r.deg = a.deg - b.deg;
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

Monomial monomial_one() { return Monomial{}; }

Monomial monomial_var(int v, int exp) {
    Monomial r;
    r.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(exp);
    r.deg = static_cast<std::uint32_t>(exp);
    return r;
}

MultiPoly MultiPoly::constant(int nvars, PrimeField::Elt c) {
    MultiPoly f(nvars);
    if (c != 0) f.terms_.push_back(Term{monomial_one(), c});
    return f;
}

MultiPoly MultiPoly::variable(int nvars, int v) {
    MultiPoly f(nvars);
    f.terms_.push_back(Term{monomial_var(v), 1});
    return f;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms, const PrimeField& F) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return grevlex_compare(a.m, b.m) > 0;
    });
    MultiPoly f(nvars);
    for (const Term& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().m == t.m) {
            f.terms_.back().c = F.add(f.terms_.back().c, t.c);
            if (f.terms_.back().c == 0) f.terms_.pop_back();
        } else if (t.c != 0) {
            f.terms_.push_back(t);
        }
    }
    return f;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (int v = 0; v < nvars_; ++v) {
            if (t.m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(v);
            if (t.m.e[v] > 1) mono += "^" + std::to_string(int(t.m.e[v]));
        }
        if (mono.empty()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += mono;
        } else {
            out += std::to_string(t.c) + "*" + mono;
        }
    }
    return out;
}

namespace {

// Merges two descending term streams, combining equal monomials in F.
void merge_into(std::vector<Term>& out, const std::vector<Term>& a, std::size_t ia,
                const std::vector<Term>& b, std::size_t ib, const PrimeField& F,
                PrimeField::Elt bscale, const Monomial* bshift) {
    while (ia < a.size() || ib < b.size()) {
        if (ib == b.size()) {
            out.push_back(a[ia++]);
            continue;
        }
        Term tb = b[ib];
        if (bshift) tb.m = monomial_mul(tb.m, *bshift);
        tb.c = F.mul(tb.c, bscale);
        if (ia == a.size()) {
            if (tb.c != 0) out.push_back(tb);
            ++ib;
            continue;
        }
        int cmp = grevlex_compare(a[ia].m, tb.m);
        if (cmp > 0) {
            out.push_back(a[ia++]);
        } else if (cmp < 0) {
            if (tb.c != 0) out.push_back(tb);
            ++ib;
        } else {
            PrimeField::Elt c = F.add(a[ia].c, tb.c);
            if (c != 0) out.push_back(Term{a[ia].m, c});
            ++ia;
            ++ib;
        }
    }
}

} // namespace

MultiPoly PolyOps::add(const MultiPoly& f, const MultiPoly& g) const {
    MultiPoly r(f.nvars());
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    merge_into(r.terms_, f.terms_, 0, g.terms_, 0, F_, 1, nullptr);
    return r;
}

MultiPoly PolyOps::sub(const MultiPoly& f, const MultiPoly& g) const {
    MultiPoly r(f.nvars());
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    merge_into(r.terms_, f.terms_, 0, g.terms_, 0, F_, F_.neg(1), nullptr);
    return r;
}

MultiPoly PolyOps::scale(const MultiPoly& f, PrimeField::Elt c) const {
    MultiPoly r(f.nvars());
    if (c == 0) return r;
    r.terms_ = f.terms_;
    for (Term& t : r.terms_) t.c = F_.mul(t.c, c);
    return r;
}

MultiPoly PolyOps::mul_term(const MultiPoly& f, const Monomial& m, PrimeField::Elt c) const {
    MultiPoly r(f.nvars());
    if (c == 0) return r;
    r.terms_.reserve(f.terms_.size());
    for (const Term& t : f.terms_)
        r.terms_.push_back(Term{monomial_mul(t.m, m), F_.mul(t.c, c)});
    return r;
}

MultiPoly PolyOps::sub_mul(const MultiPoly& f, PrimeField::Elt c, const Monomial& m,
                           const MultiPoly& g, bool drop_lead) const {
    MultiPoly r(f.nvars());
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    merge_into(r.terms_, f.terms_, drop_lead ? 1 : 0, g.terms_, drop_lead ? 1 : 0, F_,
               F_.neg(c), &m);
    return r;
}

MultiPoly PolyOps::mul(const MultiPoly& f, const MultiPoly& g) const {
    // Accumulate f term-by-term into a sorted merge; quadratic in the
    // smaller factor but the factors here are modest.
    const MultiPoly& small = f.term_count() <= g.term_count() ? f : g;
    const MultiPoly& big = f.term_count() <= g.term_count() ? g : f;
    std::vector<Term> acc;
    for (const Term& t : small.terms_) {
        std::vector<Term> next;
        next.reserve(acc.size() + big.terms_.size());
        merge_into(next, acc, 0, big.terms_, 0, F_, t.c, &t.m);
        acc.swap(next);
    }
    MultiPoly r(f.nvars());
    r.terms_ = std::move(acc);
    return r;
}

MultiPoly PolyOps::monic(const MultiPoly& f) const {
    if (f.is_zero() || f.leading().c == 1) return f;
    return scale(f, F_.inv(f.leading().c));
}

MultiPoly PolyOps::partial_derivative(const MultiPoly& f, int v) const {
    MultiPoly r(f.nvars());
    for (const Term& t : f.terms_) {
        if (t.m.e[v] == 0) continue;
        Term d = t;
        d.c = F_.mul(t.c, F_.from_int(t.m.e[v]));
        d.m.e[v] -= 1;
        d.m.deg -= 1;
        if (d.c != 0) r.terms_.push_back(d);
    }
    // Lowering one exponent preserves relative grevlex order within the
    // surviving terms, so the list stays sorted.
    return r;
}

MultiPoly PolyOps::substitute(const MultiPoly& f, int v, const MultiPoly& q) const {
    int maxexp = 0;
    for (const Term& t : f.terms_) maxexp = std::max(maxexp, int(t.m.e[v]));
    // Collect f = sum_k x_v^k * f_k with the v-exponent stripped.
    std::vector<std::vector<Term>> layers(static_cast<std::size_t>(maxexp) + 1);
    for (const Term& t : f.terms_) {
        Term s = t;
        int k = s.m.e[v];
        s.m.deg -= s.m.e[v];
        s.m.e[v] = 0;
        layers[static_cast<std::size_t>(k)].push_back(s);
    }
    MultiPoly result(f.nvars());
    for (int k = maxexp; k >= 0; --k) {
        if (k != maxexp) result = mul(result, q);
        MultiPoly layer = MultiPoly::from_terms(f.nvars(), std::move(layers[static_cast<std::size_t>(k)]), F_);
        result = add(result, layer);
    }
    return result;
}

MultiPoly PolyOps::remap(const MultiPoly& f, const std::vector<int>& keep, int new_nvars) const {
    std::vector<Term> terms;
    terms.reserve(f.terms_.size());
    for (const Term& t : f.terms_) {
        Term s;
        s.c = t.c;
        for (int v = 0; v < f.nvars(); ++v) {
            if (t.m.e[v] == 0) continue;
            int nv = keep[static_cast<std::size_t>(v)];
            if (nv < 0) throw Error("remap: dropped variable still occurs");
            s.m.e[nv] = t.m.e[v];
        }
        s.m.deg = t.m.deg;
        terms.push_back(s);
    }
    return MultiPoly::from_terms(new_nvars, std::move(terms), F_);
}

PrimeField::Elt PolyOps::evaluate(const MultiPoly& f, const std::vector<PrimeField::Elt>& point) const {
    PrimeField::Elt acc = 0;
    for (const Term& t : f.terms_) {
        PrimeField::Elt v = t.c;
        for (int i = 0; i < f.nvars(); ++i)
            if (t.m.e[i] != 0) v = F_.mul(v, F_.pow(point[static_cast<std::size_t>(i)], t.m.e[i]));
        acc = F_.add(acc, v);
    }
    return acc;
}

} // namespace chrom
