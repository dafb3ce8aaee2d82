// Bivariate factorization over a finite field. Squarefree reduction first;
// the squarefree part is factored by specializing the parameter at a point
// where the image stays squarefree and degree-preserving, factoring the
// image, Hensel-lifting the factors (t-t0)-adically past the parameter
// degree, and recombining factor subsets by trial division. Small fields
// fall back to a bounded extension, merging Frobenius orbits at the end.
#pragma once

#include "charvar/bipoly.hpp"
#include "charvar/factor_univar.hpp"

namespace charvar {

template <class K>
struct BiFactorization {
    K unit;
    std::vector<std::pair<BiPoly<K>, int>> factors;
};

namespace bfdetail {

template <class K>
using XP = UniPoly<UniPoly<K>>; // polynomial in x over K[s]

template <class K>
UniPoly<K> strunc(const UniPoly<K>& f, int N) {
    if (f.degree() < N) return f;
    std::vector<K> c(f.coeffs().begin(), f.coeffs().begin() + N);
    return UniPoly<K>(std::move(c));
}

template <class K>
XP<K> xp_trunc(const XP<K>& f, int N) {
    return map_coeffs<UniPoly<K>, UniPoly<K>>(f, [&](const UniPoly<K>& c) { return strunc(c, N); });
}

template <class K>
XP<K> xp_mul(const XP<K>& a, const XP<K>& b, int N) {
    return xp_trunc(a * b, N);
}

// division by g monic in x, coefficients in K[s]/(s^N)
template <class K>
std::pair<XP<K>, XP<K>> xp_divmod_monic(const XP<K>& f, const XP<K>& g, int N) {
    if (g.zero() || g.lc().degree() != 0)
        throw error("xp_divmod_monic: divisor must be monic in x");
    if (f.degree() < g.degree()) return {XP<K>(), xp_trunc(f, N)};
    std::vector<UniPoly<K>> rem(f.coeffs());
    std::vector<UniPoly<K>> quo(f.degree() - g.degree() + 1);
    for (int i = f.degree(); i >= g.degree(); --i) {
        UniPoly<K> c = strunc(rem[i], N);
        if (c.zero()) continue;
        quo[i - g.degree()] = c;
        for (int j = 0; j <= g.degree(); ++j)
            rem[i - g.degree() + j] = strunc(rem[i - g.degree() + j] - c * g[j], N);
    }
    return {XP<K>(std::move(quo)), xp_trunc(XP<K>(std::move(rem)), N)};
}

template <class K>
XP<K> embed_x(const UniPoly<K>& u) { // K[x] -> (K[s])[x]
    return map_coeffs<K, UniPoly<K>>(u, [](const K& a) { return UniPoly<K>::constant(a); });
}

// One quadratic Hensel step m -> m2 for f = g*h with Bezout pair (sg, th).
template <class K>
void hensel_step(const XP<K>& f, XP<K>& g, XP<K>& h, XP<K>& sg, XP<K>& th, int m2) {
    XP<K> e = xp_trunc(f - xp_mul(g, h, m2), m2);
    auto [q, r] = xp_divmod_monic(xp_mul(sg, e, m2), h, m2);
    XP<K> g2 = xp_trunc(g + xp_mul(th, e, m2) + xp_mul(q, g, m2), m2);
    XP<K> h2 = xp_trunc(h + r, m2);
    XP<K> one = XP<K>::constant(UniPoly<K>::constant(one_like(h2.lc().lc())));
    XP<K> b = xp_trunc(xp_mul(sg, g2, m2) + xp_mul(th, h2, m2) - one, m2);
    auto [c, d] = xp_divmod_monic(xp_mul(sg, b, m2), h2, m2);
    XP<K> sg2 = xp_trunc(sg - d, m2);
    XP<K> th2 = xp_trunc(th - xp_mul(th, b, m2) - xp_mul(c, g2, m2), m2);
    if (g2.degree() != g.degree() || h2.degree() != h.degree())
        throw error("hensel_step: degree drift");
    g = std::move(g2);
    h = std::move(h2);
    sg = std::move(sg2);
    th = std::move(th2);
}

// lifts the pairwise-coprime univariate factors gs of f(0,x) to factors of
// f mod s^N; f monic in x
template <class K>
std::vector<XP<K>> hensel_tree(const XP<K>& f, const std::vector<UniPoly<K>>& gs, int N) {
    if (gs.size() == 1) return {xp_trunc(f, N)};
    size_t half = gs.size() / 2;
    UniPoly<K> g0 = gs[0];
    for (size_t i = 1; i < half; ++i) g0 = g0 * gs[i];
    UniPoly<K> h0 = gs[half];
    for (size_t i = half + 1; i < gs.size(); ++i) h0 = h0 * gs[i];
    auto [d, u, v] = xgcd_field(g0, h0);
    if (d.degree() != 0) throw error("hensel_tree: modular factors not coprime");
    // normalize Bezout degrees: sg = u mod h0, th = (1 - sg*g0)/h0
    UniPoly<K> sg0 = divmod_field(u, h0).second;
    UniPoly<K> one = UniPoly<K>::constant(one_like(d.lc()));
    UniPoly<K> th0 = exact_div(one - sg0 * g0, h0);

    XP<K> g = embed_x(g0), h = embed_x(h0), sg = embed_x(sg0), th = embed_x(th0);
    XP<K> ftr = xp_trunc(f, N);
    int m = 1;
    while (m < N) {
        int m2 = std::min(2 * m, N);
        hensel_step(ftr, g, h, sg, th, m2);
        m = m2;
    }
    std::vector<UniPoly<K>> left(gs.begin(), gs.begin() + half);
    std::vector<UniPoly<K>> right(gs.begin() + half, gs.end());
    auto lres = hensel_tree(g, left, N);
    auto rres = hensel_tree(h, right, N);
    lres.insert(lres.end(), rres.begin(), rres.end());
    return lres;
}

template <class K>
BiPoly<K> transpose_bi(const BiPoly<K>& f) {
    BiPoly<K> r(f.vars().second, f.vars().first);
    for (const auto& [k, v] : f.terms()) r.add_term(k.second, k.first, v);
    return r;
}

// leading coefficient in the canonical term order (e_second, e_first) desc
template <class K>
K leading_coeff_bi(const BiPoly<K>& f) {
    const K* best = nullptr;
    std::pair<int, int> bk{-1, -1};
    for (const auto& [k, v] : f.terms()) {
        std::pair<int, int> kk{k.second, k.first};
        if (!best || kk > bk) {
            bk = kk;
            best = &v;
        }
    }
    if (!best) throw degenerate_input_error("leading coefficient of zero polynomial");
    return *best;
}

template <class K>
BiPoly<K> normalize_bi_monic(const BiPoly<K>& f) {
    K li = inv(leading_coeff_bi(f));
    return map_coeffs_bi<K, K>(f, [&](const K& a) { return a * li; });
}

template <class K>
bool bi_less(const BiPoly<K>& a, const BiPoly<K>& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (a.degree_in(1) != b.degree_in(1)) return a.degree_in(1) < b.degree_in(1);
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (field_less(ia->second, ib->second)) return true;
        if (field_less(ib->second, ia->second)) return false;
    }
    return false;
}

// gcd as elements of (K[t])[x], primitive result
template <class K>
BiPoly<K> bigcd(const BiPoly<K>& a, const BiPoly<K>& b) {
    auto g = gcd_ufd(nested_outer_second(a), nested_outer_second(b));
    return from_nested_outer_second(g, a.vars().first, a.vars().second);
}

template <class K>
BiPoly<K> pth_root_bi(const BiPoly<K>& f) {
    uint64_t p = field_char(*f.sample());
    BiPoly<K> r(f.vars().first, f.vars().second);
    for (const auto& [k, v] : f.terms()) {
        if (k.first % p != 0 || k.second % p != 0)
            throw error("pth_root_bi: exponent not divisible by p");
        r.add_term(k.first / static_cast<int>(p), k.second / static_cast<int>(p), frobenius_inv(v));
    }
    return r;
}

// factors a squarefree poly given a good specialization point a for the
// first variable; F is primitive nested form (outer x, inner t)
template <class K>
std::vector<BiPoly<K>> hensel_factor_at(const XP<K>& F, const K& a,
                                        const std::string& v1, const std::string& v2) {
    K one = one_like(a);
    // shift t = a + s
    UniPoly<K> shift_in({a, one});    // a + s
    UniPoly<K> shift_out({-a, one});  // t - a
    XP<K> Fs = map_coeffs<UniPoly<K>, UniPoly<K>>(F, [&](const UniPoly<K>& c) {
        return compose(c, shift_in);
    });
    const UniPoly<K> L = Fs.lc();
    int n = Fs.degree();
    // monicize: Fm = sum_i c_i L^(n-1-i) x^i, x^n coefficient 1
    std::vector<UniPoly<K>> mc(n + 1);
    {
        std::vector<UniPoly<K>> Lpow(n + 1);
        Lpow[0] = UniPoly<K>::constant(one);
        for (int i = 1; i <= n; ++i) Lpow[i] = Lpow[i - 1] * L;
        for (int i = 0; i < n; ++i) mc[i] = Fs.coeff_or(i, L) * Lpow[n - 1 - i];
        mc[n] = UniPoly<K>::constant(one);
    }
    XP<K> Fm(std::move(mc));
    // factor the specialized image
    std::vector<K> u0c;
    for (int i = 0; i <= n; ++i) u0c.push_back(eval(Fm.coeff_or(i, L), zero_like(a)));
    UniPoly<K> u0(std::move(u0c));
    auto fac0 = factor_uni(u0);
    std::vector<UniPoly<K>> gs;
    for (auto& [g, e] : fac0.factors) {
        if (e != 1) throw error("hensel_factor_at: specialization not squarefree");
        gs.push_back(g);
    }
    auto unshift = [&](const XP<K>& P) {
        XP<K> Q = map_coeffs<UniPoly<K>, UniPoly<K>>(P, [&](const UniPoly<K>& c) {
            return compose(c, shift_out);
        });
        return from_nested_outer_second(Q, v1, v2);
    };
    if (gs.size() == 1) return {unshift(Fs)};

    int N = 1;
    for (int i = 0; i <= Fm.degree(); ++i) N = std::max(N, Fm[i].degree() + 1);
    auto lifted = hensel_tree(Fm, gs, N);

    // recombination by trial division
    std::vector<BiPoly<K>> out;
    std::vector<size_t> remaining(lifted.size());
    for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    XP<K> Fwork = Fs;
    size_t sz = 1;
    while (2 * sz <= remaining.size()) {
        bool found = false;
        std::vector<size_t> pick(sz);
        // iterate subsets of `remaining` of size sz in lexicographic order
        std::vector<size_t> idx(sz);
        for (size_t i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            XP<K> P = lifted[remaining[idx[0]]];
            for (size_t i = 1; i < sz; ++i) P = xp_mul(P, lifted[remaining[idx[i]]], N);
            // un-monicize: x -> L*x, then primitive part in s
            std::vector<UniPoly<K>> cc(P.degree() + 1);
            {
                UniPoly<K> Lp = UniPoly<K>::constant(one);
                for (int i = 0; i <= P.degree(); ++i) {
                    cc[i] = P.coeff_or(i, L) * Lp;
                    Lp = Lp * L;
                }
            }
            XP<K> C0(std::move(cc));
            UniPoly<K> cont = content(C0);
            XP<K> C = map_coeffs<UniPoly<K>, UniPoly<K>>(C0, [&](const UniPoly<K>& c) {
                return exact_div(c, cont);
            });
            XP<K> quo;
            if (try_exact_div(Fwork, C, quo)) {
                out.push_back(unshift(C));
                Fwork = quo;
                std::vector<size_t> keep;
                for (size_t i = 0, j = 0; i < remaining.size(); ++i) {
                    if (j < sz && idx[j] == i) { ++j; continue; }
                    keep.push_back(remaining[i]);
                }
                remaining = std::move(keep);
                found = true;
                break;
            }
            // next subset
            size_t i = sz;
            while (i > 0) {
                --i;
                if (idx[i] != i + remaining.size() - sz) {
                    ++idx[i];
                    for (size_t j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) { idx.clear(); break; }
            }
            if (idx.empty() || sz > remaining.size()) break;
        }
        if (!found) ++sz;
    }
    if (Fwork.degree() > 0) out.push_back(unshift(Fwork));
    return out;
}

template <class K>
std::vector<BiPoly<K>> factor_squarefree_bi(const BiPoly<K>& w, bool allow_swap,
                                            bool allow_ext);

// Fp-only fallback: factor over F_{p^e} and merge Frobenius orbits.
std::vector<BiPoly<Fp>> factor_squarefree_via_extension(const BiPoly<Fp>& w);
template <class K>
std::vector<BiPoly<K>> factor_squarefree_via_extension(const BiPoly<K>&) {
    throw capacity_error("bivariate factorization: no usable specialization point");
}

template <class K>
std::vector<BiPoly<K>> factor_squarefree_bi(const BiPoly<K>& w, bool allow_swap,
                                            bool allow_ext) {
    std::vector<BiPoly<K>> out;
    if (w.zero()) throw degenerate_input_error("factor of zero polynomial");
    const std::string v1 = w.vars().first, v2 = w.vars().second;
    XP<K> F = nested_outer_second(w);
    K sample = *w.sample();
    // factor out the content in t
    UniPoly<K> cont = content(F);
    if (cont.degree() > 0) {
        for (auto& [h, e] : factor_uni(cont).factors) {
            (void)e; // squarefree input: multiplicity 1
            BiPoly<K> b(v1, v2);
            for (int i = 0; i <= h.degree(); ++i) b.add_term(i, 0, h[i]);
            out.push_back(std::move(b));
        }
        F = map_coeffs<UniPoly<K>, UniPoly<K>>(F, [&](const UniPoly<K>& c) {
            return exact_div(c, cont);
        });
    }
    if (F.degree() <= 0) return out;
    if (F.degree() == 1) {
        out.push_back(from_nested_outer_second(F, v1, v2));
        return out;
    }
    // pure x polynomial
    bool pure_x = true;
    for (int i = 0; i <= F.degree(); ++i)
        if (F[i].degree() > 0) pure_x = false;
    if (pure_x) {
        std::vector<K> c;
        for (int i = 0; i <= F.degree(); ++i) c.push_back(F[i].zero() ? zero_like(sample) : F[i][0]);
        for (auto& [h, e] : factor_uni(UniPoly<K>(std::move(c))).factors) {
            (void)e;
            BiPoly<K> b(v1, v2);
            for (int i = 0; i <= h.degree(); ++i) b.add_term(0, i, h[i]);
            out.push_back(std::move(b));
        }
        return out;
    }
    // search for a degree-preserving squarefree specialization
    Int card = field_card(sample);
    uint64_t limit = card > Int(1u << 20) ? (1u << 20) : card.get_ui();
    for (uint64_t i = 0; i < limit; ++i) {
        K a = kth_element(sample, i);
        if (is_zero(eval(F.lc(), a))) continue;
        std::vector<K> u0c;
        for (int j = 0; j <= F.degree(); ++j) u0c.push_back(eval(F.coeff_or(j, F.lc()), a));
        UniPoly<K> u0(std::move(u0c));
        UniPoly<K> u0d = derivative(u0);
        if (u0d.zero() || gcd_field(u0, u0d).degree() > 0) continue;
        auto got = hensel_factor_at(F, a, v1, v2);
        out.insert(out.end(), got.begin(), got.end());
        return out;
    }
    if (allow_swap) {
        auto got = factor_squarefree_bi(transpose_bi(w), false, allow_ext);
        out.clear();
        // re-factor the t-content contribution too: transpose returns everything
        for (auto& g : got) out.push_back(transpose_bi(g));
        return out;
    }
    if (allow_ext) {
        return factor_squarefree_via_extension(w);
    }
    throw capacity_error("bivariate factorization: specialization exhausted");
}

} // namespace bfdetail

// Exact factorization into irreducibles over the coefficient field, with
// multiplicities; the product of unit * factors^mult is re-checked against
// the input before returning.
template <class K>
BiFactorization<K> factor_bi(const BiPoly<K>& fin, int degree_bound = 40) {
    using namespace bfdetail;
    if (fin.zero()) throw degenerate_input_error("factorization of zero polynomial");
    if (fin.total_degree() > degree_bound)
        throw capacity_error("bivariate factorization: total degree exceeds bound");
    BiFactorization<K> res;
    K sample = *fin.sample();
    res.unit = one_like(sample);
    BiPoly<K> W = fin;
    while (W.total_degree() > 0) {
        BiPoly<K> dx = derivative_in(W, 1);
        BiPoly<K> dt = derivative_in(W, 0);
        if (dx.zero() && dt.zero()) {
            uint64_t p = field_char(sample);
            auto sub = factor_bi(pth_root_bi(W), degree_bound);
            for (auto& [c, e] : sub.factors)
                res.factors.emplace_back(c, e * static_cast<int>(p));
            K u = one_like(sample);
            for (uint64_t i = 0; i < p; ++i) u = u * sub.unit;
            res.unit = res.unit * u;
            W = BiPoly<K>::constant(one_like(sample), W.vars().first, W.vars().second);
            break;
        }
        BiPoly<K> w;
        if (!dx.zero()) {
            BiPoly<K> g = bigcd(W, dx);
            auto q = exact_div(nested_outer_second(W), nested_outer_second(g));
            w = from_nested_outer_second(q, W.vars().first, W.vars().second);
        }
        if ((w.zero() || w.total_degree() == 0) && !dt.zero()) {
            BiPoly<K> g = bigcd(W, dt);
            auto q = exact_div(nested_outer_second(W), nested_outer_second(g));
            w = from_nested_outer_second(q, W.vars().first, W.vars().second);
        }
        if (w.zero() || w.total_degree() == 0)
            throw error("factor_bi: squarefree reduction failed");
        auto irr = factor_squarefree_bi(w, true, true);
        for (auto& C : irr) {
            BiPoly<K> Cn = normalize_bi_monic(C);
            int mult = 0;
            while (true) {
                XP<K> quo;
                if (!try_exact_div(nested_outer_second(W), nested_outer_second(Cn), quo)) break;
                W = from_nested_outer_second(quo, W.vars().first, W.vars().second);
                ++mult;
            }
            if (mult == 0) throw error("factor_bi: candidate factor does not divide input");
            res.factors.emplace_back(std::move(Cn), mult);
        }
    }
    if (!W.zero() && W.total_degree() == 0) res.unit = res.unit * W.terms().begin()->second;
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return bi_less(a.first, b.first);
        return a.second < b.second;
    });
    // product check, exact
    BiPoly<K> check = BiPoly<K>::constant(res.unit, fin.vars().first, fin.vars().second);
    for (auto& [c, e] : res.factors)
        for (int i = 0; i < e; ++i) check = check * c;
    if (!(check == fin)) throw consistency_error("factor_bi: product check failed");
    return res;
}

// squarefree part (radical): product of the distinct irreducible factors
template <class K>
BiPoly<K> squarefree_part_bi(const BiPoly<K>& f, int degree_bound = 40) {
    auto fac = factor_bi(f, degree_bound);
    BiPoly<K> r = BiPoly<K>::constant(one_like(*f.sample()), f.vars().first, f.vars().second);
    for (auto& [c, e] : fac.factors) r = r * c;
    return r;
}

} // namespace charvar
