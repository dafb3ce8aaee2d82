// Laurent polynomials in an auxiliary unit m with coefficients in a ring C.
// A symmetric element (invariant under m -> 1/m) rewrites exactly as a
// polynomial in t = m + 1/m; symmetrize() inverts that substitution.
#pragma once

#include <map>

#include "charvar/unipoly.hpp"

namespace charvar {

template <class C>
class Laurent {
public:
    Laurent() = default;

    void add_term(int e, const C& a) {
        if (is_zero(a)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, a);
        } else {
            it->second = it->second + a;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }
    static Laurent term(const C& a, int e) {
        Laurent l;
        l.add_term(e, a);
        return l;
    }

    const std::map<int, C>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

private:
    std::map<int, C> terms_;
};

template <class C> bool is_zero(const Laurent<C>& l) { return l.zero(); }

template <class C>
Laurent<C> operator+(const Laurent<C>& a, const Laurent<C>& b) {
    Laurent<C> r = a;
    for (const auto& [e, v] : b.terms()) r.add_term(e, v);
    return r;
}

template <class C>
Laurent<C> operator-(const Laurent<C>& a) {
    Laurent<C> r;
    for (const auto& [e, v] : a.terms()) r.add_term(e, -v);
    return r;
}

template <class C>
Laurent<C> operator-(const Laurent<C>& a, const Laurent<C>& b) { return a + (-b); }

template <class C>
Laurent<C> operator*(const Laurent<C>& a, const Laurent<C>& b) {
    Laurent<C> r;
    for (const auto& [ea, va] : a.terms())
        for (const auto& [eb, vb] : b.terms())
            r.add_term(ea + eb, va * vb);
    return r;
}

template <class C>
bool is_symmetric(const Laurent<C>& l) {
    for (const auto& [e, v] : l.terms()) {
        auto it = l.terms().find(-e);
        if (it == l.terms().end() || !(it->second == v)) return false;
    }
    return true;
}

// the asymmetric residue L(m) - L(1/m), empty exactly when L is symmetric
template <class C>
Laurent<C> asymmetry_residue(const Laurent<C>& l) {
    Laurent<C> r;
    for (const auto& [e, v] : l.terms()) {
        r.add_term(e, v);
        r.add_term(-e, -v);
    }
    return r;
}

// Rewrites a symmetric Laurent element as Q(t) with Q(m + 1/m) = L(m),
// peeling m^d + m^-d = T_d(t) from the top (T_0 = 2, T_1 = t,
// T_d = t T_{d-1} - T_{d-2}).
template <class C>
UniPoly<C> symmetrize(const Laurent<C>& l) {
    if (l.zero()) return UniPoly<C>();
    if (!is_symmetric(l))
        throw symmetry_error("symmetrize: input is not invariant under m -> 1/m");
    const C& sample = l.terms().begin()->second;
    C one = one_like(sample);
    int d = l.max_exp();
    // Chebyshev-like basis in t
    std::vector<UniPoly<C>> basis(static_cast<size_t>(d + 1));
    basis[0] = UniPoly<C>::constant(one + one);
    if (d >= 1) basis[1] = UniPoly<C>::monomial(one, 1);
    UniPoly<C> tpoly = UniPoly<C>::monomial(one, 1);
    for (int i = 2; i <= d; ++i) basis[i] = tpoly * basis[i - 1] - basis[i - 2];

    UniPoly<C> out;
    for (const auto& [e, v] : l.terms()) {
        if (e > 0) {
            out = out + basis[e] * v;
        } else if (e == 0) {
            out = out + UniPoly<C>::constant(v);
        }
    }
    return out;
}

// substitution t = m + 1/m into Q(t); exact inverse of symmetrize
template <class C>
Laurent<C> substitute_t(const UniPoly<C>& q) {
    Laurent<C> l;
    if (q.zero()) return l;
    C one = one_like(q.lc());
    Laurent<C> t;
    t.add_term(1, one);
    t.add_term(-1, one);
    Laurent<C> acc = Laurent<C>::term(q.lc(), 0);
    for (int i = q.degree() - 1; i >= 0; --i) {
        acc = acc * t;
        acc.add_term(0, q[i]);
    }
    return acc;
}

} // namespace charvar
