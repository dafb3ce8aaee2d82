// Sparse bivariate polynomials. The default variable pair is (t, x), the
// two-bridge curve coordinates; conversions to nested dense form feed the
// generic univariate machinery.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "charvar/unipoly.hpp"

namespace charvar {

template <class R>
class BiPoly {
public:
    using Key = std::pair<int, int>; // (e_first, e_second) exponents

    BiPoly() = default;
    BiPoly(std::string v1, std::string v2) : vars_{std::move(v1), std::move(v2)} {}

    static BiPoly constant(const R& a, std::string v1 = "t", std::string v2 = "x") {
        BiPoly f(std::move(v1), std::move(v2));
        if (!is_zero(a)) f.terms_[{0, 0}] = a;
        return f;
    }
    static BiPoly term(const R& a, int e1, int e2, std::string v1 = "t", std::string v2 = "x") {
        BiPoly f(std::move(v1), std::move(v2));
        if (!is_zero(a)) f.terms_[{e1, e2}] = a;
        return f;
    }

    const std::map<Key, R>& terms() const { return terms_; }
    const std::pair<std::string, std::string>& vars() const { return vars_; }
    void set_vars(std::string v1, std::string v2) { vars_ = {std::move(v1), std::move(v2)}; }

    bool zero() const { return terms_.empty(); }
    void add_term(int e1, int e2, const R& a) {
        if (is_zero(a)) return;
        auto it = terms_.find({e1, e2});
        if (it == terms_.end()) {
            terms_.emplace(Key{e1, e2}, a);
        } else {
            it->second = it->second + a;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    int degree_in(int which) const { // 0: first var, 1: second var
        int d = -1;
        for (const auto& [k, v] : terms_)
            d = std::max(d, which == 0 ? k.first : k.second);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }
    bool even_in_first() const {
        for (const auto& [k, v] : terms_)
            if (k.first % 2 != 0) return false;
        return true;
    }

    const R* sample() const { return terms_.empty() ? nullptr : &terms_.begin()->second; }

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

private:
    std::map<Key, R> terms_;
    std::pair<std::string, std::string> vars_{"t", "x"};
};

template <class R> bool is_zero(const BiPoly<R>& f) { return f.zero(); }

template <class R>
BiPoly<R> operator+(const BiPoly<R>& a, const BiPoly<R>& b) {
    BiPoly<R> r = a;
    for (const auto& [k, v] : b.terms()) r.add_term(k.first, k.second, v);
    return r;
}

template <class R>
BiPoly<R> operator-(const BiPoly<R>& a) {
    BiPoly<R> r(a.vars().first, a.vars().second);
    for (const auto& [k, v] : a.terms()) r.add_term(k.first, k.second, -v);
    return r;
}

template <class R>
BiPoly<R> operator-(const BiPoly<R>& a, const BiPoly<R>& b) { return a + (-b); }

template <class R>
BiPoly<R> operator*(const BiPoly<R>& a, const BiPoly<R>& b) {
    BiPoly<R> r(a.vars().first, a.vars().second);
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms())
            r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

template <class R>
BiPoly<R> operator*(const BiPoly<R>& a, const R& s) {
    BiPoly<R> r(a.vars().first, a.vars().second);
    for (const auto& [k, v] : a.terms()) r.add_term(k.first, k.second, v * s);
    return r;
}

// nested form: outer variable = second (x), inner = first (t)
template <class R>
UniPoly<UniPoly<R>> nested_outer_second(const BiPoly<R>& f) {
    std::vector<UniPoly<R>> out(static_cast<size_t>(std::max(0, f.degree_in(1) + 1)));
    for (const auto& [k, v] : f.terms()) {
        auto& inner = out[k.second];
        inner = inner + UniPoly<R>::monomial(v, k.first);
    }
    return UniPoly<UniPoly<R>>(std::move(out));
}

// nested form: outer variable = first (t), inner = second (x)
template <class R>
UniPoly<UniPoly<R>> nested_outer_first(const BiPoly<R>& f) {
    std::vector<UniPoly<R>> out(static_cast<size_t>(std::max(0, f.degree_in(0) + 1)));
    for (const auto& [k, v] : f.terms()) {
        auto& inner = out[k.first];
        inner = inner + UniPoly<R>::monomial(v, k.second);
    }
    return UniPoly<UniPoly<R>>(std::move(out));
}

template <class R>
BiPoly<R> from_nested_outer_second(const UniPoly<UniPoly<R>>& f,
                                   std::string v1 = "t", std::string v2 = "x") {
    BiPoly<R> r(std::move(v1), std::move(v2));
    for (int j = 0; j <= f.degree(); ++j)
        for (int i = 0; i <= f[j].degree(); ++i)
            r.add_term(i, j, f[j][i]);
    return r;
}

template <class R>
BiPoly<R> from_nested_outer_first(const UniPoly<UniPoly<R>>& f,
                                  std::string v1 = "t", std::string v2 = "x") {
    BiPoly<R> r(std::move(v1), std::move(v2));
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= f[i].degree(); ++j)
            r.add_term(i, j, f[i][j]);
    return r;
}

template <class R>
UniPoly<R> substitute_first(const BiPoly<R>& f, const R& a) { // t = a, poly in x
    UniPoly<R> r;
    for (const auto& [k, v] : f.terms()) {
        R c = v;
        for (int i = 0; i < k.first; ++i) c = c * a;
        r = r + UniPoly<R>::monomial(c, k.second);
    }
    return r;
}

template <class R>
UniPoly<R> substitute_second(const BiPoly<R>& f, const R& a) { // x = a, poly in t
    UniPoly<R> r;
    for (const auto& [k, v] : f.terms()) {
        R c = v;
        for (int i = 0; i < k.second; ++i) c = c * a;
        r = r + UniPoly<R>::monomial(c, k.first);
    }
    return r;
}

template <class R>
R eval(const BiPoly<R>& f, const R& a, const R& b) {
    R acc = zero_like(a);
    for (const auto& [k, v] : f.terms()) {
        R c = v;
        for (int i = 0; i < k.first; ++i) c = c * a;
        for (int i = 0; i < k.second; ++i) c = c * b;
        acc = acc + c;
    }
    return acc;
}

template <class R>
BiPoly<R> derivative_in(const BiPoly<R>& f, int which) {
    BiPoly<R> r(f.vars().first, f.vars().second);
    for (const auto& [k, v] : f.terms()) {
        int e = which == 0 ? k.first : k.second;
        if (e == 0) continue;
        R c = zero_like(v);
        for (int i = 0; i < e; ++i) c = c + v;
        if (which == 0)
            r.add_term(k.first - 1, k.second, c);
        else
            r.add_term(k.first, k.second - 1, c);
    }
    return r;
}

template <class R, class S, class Fn>
BiPoly<S> map_coeffs_bi(const BiPoly<R>& f, Fn&& fn) {
    BiPoly<S> r(f.vars().first, f.vars().second);
    for (const auto& [k, v] : f.terms()) r.add_term(k.first, k.second, fn(v));
    return r;
}

// homogeneous part of top total degree (restriction to the line at infinity)
template <class R>
BiPoly<R> top_form(const BiPoly<R>& f) {
    int d = f.total_degree();
    BiPoly<R> r(f.vars().first, f.vars().second);
    for (const auto& [k, v] : f.terms())
        if (k.first + k.second == d) r.add_term(k.first, k.second, v);
    return r;
}

// ---- BiPoly as a coefficient ring (for resultants with parameters) ----------

template <class R>
BiPoly<R> zero_like(const BiPoly<R>& f) {
    return BiPoly<R>(f.vars().first, f.vars().second);
}
template <class R>
BiPoly<R> one_like(const BiPoly<R>& f) {
    if (f.zero()) throw degenerate_input_error("one_like: zero bivariate sample");
    return BiPoly<R>::constant(one_like(*f.sample()), f.vars().first, f.vars().second);
}
template <class R>
bool try_exact_div(const BiPoly<R>& a, const BiPoly<R>& b, BiPoly<R>& q) {
    if (b.zero()) return false;
    if (a.zero()) { q = zero_like(a); return true; }
    UniPoly<UniPoly<R>> qq;
    if (!try_exact_div(nested_outer_second(a), nested_outer_second(b), qq)) return false;
    q = from_nested_outer_second(qq, a.vars().first, a.vars().second);
    return true;
}
template <class R>
BiPoly<R> exact_div(const BiPoly<R>& a, const BiPoly<R>& b) {
    BiPoly<R> q;
    if (!try_exact_div(a, b, q)) throw error("exact_div: bivariate division not exact");
    return q;
}
template <class R>
BiPoly<R> ring_gcd(const BiPoly<R>& a, const BiPoly<R>& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    auto g = gcd_ufd(nested_outer_second(a), nested_outer_second(b));
    return from_nested_outer_second(g, a.vars().first, a.vars().second);
}

// Res along one variable of the pair; `eliminate` = 0 (first) or 1 (second).
// The result is univariate in the kept variable.
template <class R>
UniPoly<R> resultant_bivar(const BiPoly<R>& f, const BiPoly<R>& g, int eliminate) {
    if (f.zero() || g.zero())
        throw degenerate_input_error("resultant_bivar: zero input");
    if (f.degree_in(eliminate) <= 0 && g.degree_in(eliminate) <= 0)
        throw degenerate_input_error("resultant_bivar: both inputs constant in the eliminated variable");
    auto nf = eliminate == 1 ? nested_outer_second(f) : nested_outer_first(f);
    auto ng = eliminate == 1 ? nested_outer_second(g) : nested_outer_first(g);
    return resultant(nf, ng);
}

// ---- Int-specific normalization --------------------------------------------

inline Int content_bi(const BiPoly<Int>& f) {
    Int c(0);
    for (const auto& [k, v] : f.terms()) c = ring_gcd(c, v);
    return c;
}

// canonical print/leading order: exponent of the second variable first,
// then the first (matches the emitted term order)
inline BiPoly<Int>::Key leading_key(const BiPoly<Int>& f) {
    BiPoly<Int>::Key best{-1, -1};
    bool have = false;
    for (const auto& [k, v] : f.terms()) {
        if (!have || std::make_pair(k.second, k.first) > std::make_pair(best.second, best.first)) {
            best = k;
            have = true;
        }
    }
    return best;
}

// content 1 and positive leading coefficient in the canonical term order
inline BiPoly<Int> normalize_curve(const BiPoly<Int>& f) {
    if (f.zero()) return f;
    Int c = content_bi(f);
    BiPoly<Int> g = map_coeffs_bi<Int, Int>(f, [&](const Int& a) { return exact_div(a, c); });
    if (sgn(g.terms().at(leading_key(g))) < 0) g = -g;
    return g;
}

} // namespace charvar
