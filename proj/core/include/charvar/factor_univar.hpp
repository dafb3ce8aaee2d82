// Univariate factorization over finite fields: squarefree decomposition
// (inseparable case included), distinct-degree splitting, Cantor-Zassenhaus
// equal-degree splitting, root finding, and roots in bounded extensions of
// F_p standing in for the algebraic closure. Generic over the field K
// (F_p or F_{p^k}).
#pragma once

#include <random>
#include <vector>

#include "charvar/ext_field.hpp"
#include "charvar/fp.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

inline Fp random_like(const Fp& a, std::mt19937_64& rng) { return Fp(rng() % a.p, a.p); }
inline Ext random_like(const Ext& a, std::mt19937_64& rng) {
    std::vector<uint64_t> c(a.k());
    for (auto& x : c) x = rng() % a.p();
    return Ext(a.ctx(), std::move(c));
}

// deterministic enumeration of field elements, used to pick specializations
inline Fp kth_element(const Fp& sample, uint64_t i) { return Fp(i % sample.p, sample.p); }
inline Ext kth_element(const Ext& sample, uint64_t i) {
    std::vector<uint64_t> c(sample.k());
    for (unsigned j = 0; j < sample.k(); ++j) {
        c[j] = i % sample.p();
        i /= sample.p();
    }
    return Ext(sample.ctx(), std::move(c));
}

template <class K>
UniPoly<K> powmod(const UniPoly<K>& base, const Int& e, const UniPoly<K>& mod) {
    UniPoly<K> b = divmod_field(base, mod).second;
    UniPoly<K> acc = UniPoly<K>::constant(one_like(mod.lc()));
    if (sgn(e) == 0) return acc;
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = divmod_field(acc * acc, mod).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = divmod_field(acc * b, mod).second;
    }
    return acc;
}

// extended Euclid over K[x]: returns (g, u, v), u*a + v*b = g, g monic
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> xgcd_field(UniPoly<K> a, UniPoly<K> b) {
    if (a.zero() && b.zero()) return {UniPoly<K>(), UniPoly<K>(), UniPoly<K>()};
    K one = one_like(a.zero() ? b.lc() : a.lc());
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> u0 = UniPoly<K>::constant(one), u1;
    UniPoly<K> v0, v1 = UniPoly<K>::constant(one);
    while (!r1.zero()) { // invariant: u0*a + v0*b = r0, u1*a + v1*b = r1
        auto [q, r] = divmod_field(r0, r1);
        UniPoly<K> u2 = u0 - q * u1;
        UniPoly<K> v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    K li = inv(r0.lc());
    return {r0 * li, u0 * li, v0 * li};
}

// f(x) = g(x^p); returns g, taking p-th roots of coefficients
template <class K>
UniPoly<K> extract_pth_root(const UniPoly<K>& f) {
    uint64_t p = field_char(f.lc());
    std::vector<K> c;
    c.reserve(f.degree() / p + 1);
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        c.push_back(frobenius_inv(f[i]));
    return UniPoly<K>(std::move(c));
}

// monic squarefree decomposition; product of g^e equals monic(f)
template <class K>
std::vector<std::pair<UniPoly<K>, int>> squarefree_decompose(const UniPoly<K>& fin) {
    if (fin.zero()) throw degenerate_input_error("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly<K>, int>> res;
    UniPoly<K> f = make_monic(fin);
    if (f.degree() < 1) return res;
    uint64_t p = field_char(f.lc());
    UniPoly<K> fd = derivative(f);
    if (fd.zero()) {
        for (auto& [g, e] : squarefree_decompose(extract_pth_root(f)))
            res.emplace_back(g, e * static_cast<int>(p));
        return res;
    }
    UniPoly<K> c = gcd_field(f, fd);
    UniPoly<K> w = exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
        UniPoly<K> y = gcd_field(w, c);
        UniPoly<K> z = exact_div(w, y);
        if (z.degree() > 0) res.emplace_back(make_monic(z), i);
        c = exact_div(c, y);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_decompose(extract_pth_root(c)))
            res.emplace_back(g, e * static_cast<int>(p));
    }
    return res;
}

// monic product of the distinct irreducible factors
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
    UniPoly<K> r = UniPoly<K>::constant(one_like(f.lc()));
    for (auto& [g, e] : squarefree_decompose(f)) r = r * g;
    return r;
}

// distinct-degree splitting of a monic squarefree f
template <class K>
std::vector<std::pair<UniPoly<K>, int>> ddf(const UniPoly<K>& f) {
    std::vector<std::pair<UniPoly<K>, int>> res;
    Int q = field_card(f.lc());
    K one = one_like(f.lc());
    UniPoly<K> x = UniPoly<K>::monomial(one, 1);
    UniPoly<K> h = divmod_field(x, f).second;
    UniPoly<K> fstar = f;
    int d = 0;
    while (fstar.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, q, fstar);
        UniPoly<K> g = gcd_field(h - x, fstar);
        if (g.degree() > 0) {
            res.emplace_back(g, d);
            fstar = exact_div(fstar, g);
            if (fstar.degree() == 0) return res;
            h = divmod_field(h, fstar).second;
        }
    }
    if (fstar.degree() > 0) res.emplace_back(fstar, fstar.degree());
    return res;
}

// equal-degree splitting (Cantor-Zassenhaus, odd characteristic)
template <class K>
void edf(const UniPoly<K>& f, int d, std::vector<UniPoly<K>>& out, std::mt19937_64& rng) {
    if (f.degree() == d) {
        out.push_back(make_monic(f));
        return;
    }
    Int q = field_card(f.lc());
    Int qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    Int e = (qd - 1) / 2;
    K one = one_like(f.lc());
    while (true) {
        std::vector<K> rc(f.degree());
        for (auto& c : rc) c = random_like(one, rng);
        UniPoly<K> r(std::move(rc));
        if (r.zero() || r.degree() == 0) continue;
        UniPoly<K> g = gcd_field(r, f);
        if (g.degree() == 0 || g.degree() == f.degree()) {
            UniPoly<K> rp = powmod(r, e, f) - UniPoly<K>::constant(one);
            g = gcd_field(rp, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, out, rng);
            edf(exact_div(f, g), d, out, rng);
            return;
        }
    }
}

template <class K>
struct UniFactorization {
    K unit;
    std::vector<std::pair<UniPoly<K>, int>> factors; // monic irreducible, multiplicity
};

template <class K>
bool uni_factor_less(const std::pair<UniPoly<K>, int>& a, const std::pair<UniPoly<K>, int>& b) {
    if (poly_less(a.first, b.first, [](const K& x, const K& y) { return field_less(x, y); }))
        return true;
    if (poly_less(b.first, a.first, [](const K& x, const K& y) { return field_less(x, y); }))
        return false;
    return a.second < b.second;
}

template <class K>
UniFactorization<K> factor_uni(const UniPoly<K>& f) {
    if (f.zero()) throw degenerate_input_error("factorization of zero polynomial");
    UniFactorization<K> res;
    res.unit = f.lc();
    if (f.degree() == 0) return res;
    std::mt19937_64 rng(0x5eedULL);
    for (auto& [g, e] : squarefree_decompose(f)) {
        for (auto& [h, d] : ddf(g)) {
            std::vector<UniPoly<K>> irr;
            edf(h, d, irr, rng);
            for (auto& u : irr) res.factors.emplace_back(std::move(u), e);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), uni_factor_less<K>);
    return res;
}

// all roots of f lying in the coefficient field, with multiplicities
template <class K>
std::vector<std::pair<K, int>> roots_in_field(const UniPoly<K>& f) {
    std::vector<std::pair<K, int>> res;
    if (f.zero()) throw degenerate_input_error("roots of zero polynomial");
    if (f.degree() == 0) return res;
    Int q = field_card(f.lc());
    K one = one_like(f.lc());
    std::mt19937_64 rng(0xb0075ULL);
    for (auto& [g, e] : squarefree_decompose(f)) {
        UniPoly<K> x = UniPoly<K>::monomial(one, 1);
        UniPoly<K> h = powmod(x, q, g) - divmod_field(x, g).second;
        UniPoly<K> lin = gcd_field(h, g);
        if (lin.degree() == 0) continue;
        std::vector<UniPoly<K>> ls;
        edf(lin, 1, ls, rng);
        for (auto& l : ls) res.emplace_back(-l[0], e);
    }
    std::sort(res.begin(), res.end(), [](const auto& a, const auto& b) {
        return field_less(a.first, b.first);
    });
    return res;
}

// ---- roots in the algebraic closure (bounded extension degree) -------------

struct ClosureRoots {
    std::vector<std::pair<Ext, int>> roots; // root (in F_{p^d}, d = its degree), multiplicity
    bool complete = true;
    std::vector<std::pair<UniPoly<Fp>, int>> residual; // factors of degree > k_max
};

inline ClosureRoots roots_over_closure(const UniPoly<Fp>& f, unsigned k_max) {
    if (f.zero()) throw degenerate_input_error("roots of zero polynomial");
    ClosureRoots out;
    if (f.degree() == 0) return out;
    uint64_t p = f.lc().p;
    auto fac = factor_uni(f);
    for (auto& [h, e] : fac.factors) {
        unsigned d = static_cast<unsigned>(h.degree());
        if (d > k_max) {
            out.complete = false;
            out.residual.emplace_back(h, e);
            continue;
        }
        auto ctx = get_ext_ctx(p, d);
        UniPoly<Ext> he = map_coeffs<Fp, Ext>(h, [&](const Fp& a) { return Ext::from_fp(a, ctx); });
        for (auto& [r, m] : roots_in_field(he))
            out.roots.emplace_back(r, m * e);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
        if (a.first.k() != b.first.k()) return a.first.k() < b.first.k();
        return field_less(a.first, b.first);
    });
    return out;
}

// ---- characteristic-zero squarefree decomposition (Yun) ---------------------

inline std::vector<std::pair<UniPoly<Rat>, int>> squarefree_decompose_q(const UniPoly<Rat>& fin) {
    if (fin.zero()) throw degenerate_input_error("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly<Rat>, int>> res;
    UniPoly<Rat> f = make_monic(fin);
    if (f.degree() < 1) return res;
    UniPoly<Rat> fd = derivative(f);
    UniPoly<Rat> a = gcd_field(f, fd);
    UniPoly<Rat> b = exact_div(f, a);
    UniPoly<Rat> c = exact_div(fd, a);
    UniPoly<Rat> d = c - derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        UniPoly<Rat> g = gcd_field(b, d);
        if (g.degree() > 0) res.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - derivative(b);
        ++i;
    }
    return res;
}

inline UniPoly<Rat> squarefree_part_q(const UniPoly<Rat>& f) {
    UniPoly<Rat> r = UniPoly<Rat>::constant(Rat(1));
    for (auto& [g, e] : squarefree_decompose_q(f)) r = r * g;
    return r;
}

} // namespace charvar
