// Dense univariate polynomials over a generic coefficient ring R.
// R supplies is_zero / zero_like / one_like / exact_div / ring_gcd via
// overloads (see rings.hpp, fp.hpp, ext_field.hpp); fields also supply inv().
#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "charvar/rings.hpp"

namespace charvar {

template <class R> struct is_field : std::false_type {};
template <> struct is_field<Rat> : std::true_type {};
struct Fp;
template <> struct is_field<Fp> : std::true_type {};
template <class R> inline constexpr bool is_field_v = is_field<R>::value;

template <class R>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static UniPoly constant(const R& a) {
        UniPoly f;
        if (!is_zero(a)) f.c_.push_back(a);
        return f;
    }
    // c * x^k
    static UniPoly monomial(const R& a, int k) {
        UniPoly f;
        if (!is_zero(a)) {
            f.c_.assign(k + 1, zero_like(a));
            f.c_[k] = a;
        }
        return f;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const R& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    const R& operator[](size_t i) const { return c_[i]; }
    // coefficient of x^i, tolerant of i > degree (needs a sample for the zero)
    R coeff_or(size_t i, const R& sample) const {
        return i < c_.size() ? c_[i] : zero_like(sample);
    }
    const std::vector<R>& coeffs() const { return c_; }
    std::vector<R>& coeffs_mut() { return c_; }

    void normalize() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

private:
    std::vector<R> c_; // low degree first, no trailing zeros
};

template <class R> bool is_zero(const UniPoly<R>& f) { return f.zero(); }
template <class R> UniPoly<R> zero_like(const UniPoly<R>&) { return UniPoly<R>(); }
template <class R> UniPoly<R> one_like(const UniPoly<R>& f) {
    if (f.zero()) throw degenerate_input_error("one_like: no sample coefficient in zero polynomial");
    return UniPoly<R>::constant(one_like(f.lc()));
}

template <class R>
UniPoly<R> operator+(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    const R& sample = a.lc();
    std::vector<R> c(std::max(a.coeffs().size(), b.coeffs().size()), zero_like(sample));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] = c[i] + b[i];
    return UniPoly<R>(std::move(c));
}

template <class R>
UniPoly<R> operator-(const UniPoly<R>& a) {
    std::vector<R> c(a.coeffs());
    for (auto& x : c) x = -x;
    return UniPoly<R>(std::move(c));
}

template <class R>
UniPoly<R> operator-(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.zero()) return a;
    if (a.zero()) return -b;
    const R& sample = a.lc();
    std::vector<R> c(std::max(a.coeffs().size(), b.coeffs().size()), zero_like(sample));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] = c[i] - b[i];
    return UniPoly<R>(std::move(c));
}

template <class R>
UniPoly<R> operator*(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (a.zero() || b.zero()) return UniPoly<R>();
    std::vector<R> c(a.coeffs().size() + b.coeffs().size() - 1, zero_like(a.lc()));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (is_zero(a[i])) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = c[i + j] + a[i] * b[j];
    }
    return UniPoly<R>(std::move(c));
}

template <class R>
UniPoly<R> operator*(const UniPoly<R>& a, const R& s) {
    if (a.zero() || is_zero(s)) return UniPoly<R>();
    std::vector<R> c(a.coeffs());
    for (auto& x : c) x = x * s;
    return UniPoly<R>(std::move(c));
}

template <class R>
UniPoly<R> shift_up(const UniPoly<R>& a, int k) { // multiply by x^k
    if (a.zero() || k == 0) return a;
    std::vector<R> c(a.coeffs().size() + k, zero_like(a.lc()));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i + k] = a[i];
    return UniPoly<R>(std::move(c));
}

template <class R>
UniPoly<R> derivative(const UniPoly<R>& a) {
    if (a.degree() < 1) return UniPoly<R>();
    std::vector<R> c;
    c.reserve(a.degree());
    for (int i = 1; i <= a.degree(); ++i) {
        R x = a[i];
        R acc = zero_like(x);
        for (int j = 0; j < i; ++j) acc = acc + x; // i * a_i, valid in any ring
        c.push_back(acc);
    }
    return UniPoly<R>(std::move(c));
}

template <class R>
R eval(const UniPoly<R>& f, const R& x) {
    if (f.zero()) return zero_like(x);
    R acc = f.lc();
    for (int i = f.degree() - 1; i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

// Horner composition f(g(x)).
template <class R>
UniPoly<R> compose(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (f.zero()) return UniPoly<R>();
    UniPoly<R> acc = UniPoly<R>::constant(f.lc());
    for (int i = f.degree() - 1; i >= 0; --i)
        acc = acc * g + UniPoly<R>::constant(f[i]);
    return acc;
}

template <class R, class S, class Fn>
UniPoly<S> map_coeffs(const UniPoly<R>& f, Fn&& fn) {
    std::vector<S> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(fn(a));
    return UniPoly<S>(std::move(c));
}

// ---- division --------------------------------------------------------------

// Division with remainder over a field (or any R where lc(g) is invertible).
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divmod_field(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (g.zero()) throw degenerate_input_error("divmod: division by zero polynomial");
    if (f.degree() < g.degree()) return {UniPoly<R>(), f};
    R lg_inv = inv(g.lc());
    std::vector<R> rem(f.coeffs());
    std::vector<R> quo(f.degree() - g.degree() + 1, zero_like(f.lc()));
    for (int i = f.degree(); i >= g.degree(); --i) {
        if (is_zero(rem[i])) continue;
        R q = rem[i] * lg_inv;
        quo[i - g.degree()] = q;
        for (int j = 0; j <= g.degree(); ++j)
            rem[i - g.degree() + j] = rem[i - g.degree() + j] - q * g[j];
    }
    return {UniPoly<R>(std::move(quo)), UniPoly<R>(std::move(rem))};
}

// Exact division where it exists in R[x]; returns false if not divisible.
template <class R>
bool try_exact_div(const UniPoly<R>& f, const UniPoly<R>& g, UniPoly<R>& q_out) {
    if (g.zero()) return false;
    if (f.zero()) { q_out = UniPoly<R>(); return true; }
    if (f.degree() < g.degree()) return false;
    std::vector<R> rem(f.coeffs());
    std::vector<R> quo(f.degree() - g.degree() + 1, zero_like(f.lc()));
    for (int i = f.degree(); i >= g.degree(); --i) {
        if (is_zero(rem[i])) continue;
        R q;
        if (!try_exact_div(rem[i], g.lc(), q)) return false;
        quo[i - g.degree()] = q;
        for (int j = 0; j <= g.degree(); ++j)
            rem[i - g.degree() + j] = rem[i - g.degree() + j] - q * g[j];
    }
    for (const auto& r : rem)
        if (!is_zero(r)) return false;
    q_out = UniPoly<R>(std::move(quo));
    return true;
}

template <class R>
UniPoly<R> exact_div(const UniPoly<R>& f, const UniPoly<R>& g) {
    UniPoly<R> q;
    if (!try_exact_div(f, g, q)) throw error("exact_div: polynomial division not exact");
    return q;
}

// Pseudo-remainder: rem(lc(g)^(deg f - deg g + 1) * f, g). Also exposes the
// pseudo-quotient when needed.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> pseudo_divmod(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (g.zero()) throw degenerate_input_error("pseudo_divmod: zero divisor");
    if (f.degree() < g.degree()) return {UniPoly<R>(), f};
    int k = f.degree() - g.degree() + 1;
    UniPoly<R> rem = f, quo;
    const R& lg = g.lc();
    while (!rem.zero() && rem.degree() >= g.degree()) {
        int d = rem.degree() - g.degree();
        UniPoly<R> term = UniPoly<R>::monomial(rem.lc(), d);
        quo = quo * lg + term;
        rem = rem * lg - term * g;
        --k;
    }
    // scale remaining factor so the identity lc^(df-dg+1) f = q g + r holds
    R scale = one_like(lg);
    for (int i = 0; i < k; ++i) scale = scale * lg;
    return {quo * scale, rem * scale};
}

// ---- content, gcd ----------------------------------------------------------

template <class R>
R content(const UniPoly<R>& f) {
    if (f.zero()) throw degenerate_input_error("content of zero polynomial");
    R c = f[0];
    for (int i = 1; i <= f.degree(); ++i) c = ring_gcd(c, f[i]);
    if (is_zero(c)) c = ring_gcd(f.lc(), f.lc());
    return c;
}

template <class R>
UniPoly<R> primitive_part(const UniPoly<R>& f) {
    if (f.zero()) return f;
    R c = content(f);
    return map_coeffs<R, R>(f, [&](const R& a) { return exact_div(a, c); });
}

template <class R>
UniPoly<R> make_monic(const UniPoly<R>& f) {
    if (f.zero()) return f;
    R li = inv(f.lc());
    return map_coeffs<R, R>(f, [&](const R& a) { return a * li; });
}

// gcd over a field: Euclid, monic result.
template <class R>
UniPoly<R> gcd_field(UniPoly<R> a, UniPoly<R> b) {
    while (!b.zero()) {
        auto [q, r] = divmod_field(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.zero()) return a;
    return make_monic(a);
}

// gcd over a UFD whose own gcd is available: primitive PRS.
template <class R>
UniPoly<R> gcd_ufd(UniPoly<R> a, UniPoly<R> b) {
    if constexpr (is_field_v<R>) {
        return gcd_field(std::move(a), std::move(b));
    } else {
        if (a.zero()) return b;
        if (b.zero()) return a;
        R ca = content(a), cb = content(b);
        R cg = ring_gcd(ca, cb);
        a = map_coeffs<R, R>(a, [&](const R& x) { return exact_div(x, ca); });
        b = map_coeffs<R, R>(b, [&](const R& x) { return exact_div(x, cb); });
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.zero() && b.degree() > 0) {
            auto [q, r] = pseudo_divmod(a, b);
            (void)q;
            a = std::move(b);
            if (r.zero()) { b = UniPoly<R>(); break; }
            b = primitive_part(r);
        }
        UniPoly<R> g = b.zero() ? a : UniPoly<R>::constant(one_like(cg));
        g = map_coeffs<R, R>(g, [&](const R& x) { return x * cg; });
        return g;
    }
}

template <class R>
UniPoly<R> ring_gcd(const UniPoly<R>& a, const UniPoly<R>& b) { return gcd_ufd(a, b); }

// ---- resultant and discriminant --------------------------------------------

// Subresultant PRS resultant (Cohen, "A Course in Computational Algebraic
// Number Theory", Alg. 3.3.7). Works over any integral domain with exact_div.
template <class R>
R resultant(UniPoly<R> a, UniPoly<R> b) {
    if (a.zero() || b.zero()) {
        if (a.zero() && b.zero()) throw degenerate_input_error("resultant of zero polynomials");
        return zero_like(a.zero() ? b.lc() : a.lc());
    }
    if (a.degree() == 0 && b.degree() == 0)
        throw degenerate_input_error("resultant: both inputs constant");
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) { // res(a, c) = c^(deg a)
        R r = one_like(b.lc());
        for (int i = 0; i < a.degree(); ++i) r = r * b.lc();
        return sign < 0 ? -r : r;
    }
    R g = one_like(a.lc());
    R h = one_like(a.lc());
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        auto [q, r] = pseudo_divmod(a, b);
        (void)q;
        a = std::move(b);
        // divide the pseudo-remainder by g*h^delta
        R div = g;
        for (int i = 0; i < delta; ++i) div = div * h;
        if (!r.zero())
            r = map_coeffs<R, R>(r, [&](const R& x) { return exact_div(x, div); });
        b = std::move(r);
        g = a.lc();
        // h = h^(1-delta) * g^delta
        R gnum = one_like(g);
        for (int i = 0; i < delta; ++i) gnum = gnum * g;
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gnum;
        } else {
            R hden = one_like(h);
            for (int i = 0; i < delta - 1; ++i) hden = hden * h;
            h = exact_div(gnum, hden);
        }
        if (b.zero()) return zero_like(g);
        if (b.degree() == 0) {
            // res = sign * lc(b)^(deg a) / h^(deg a - 1)
            int da2 = a.degree();
            R num = one_like(h);
            for (int i = 0; i < da2; ++i) num = num * b.lc();
            R den = one_like(h);
            for (int i = 0; i < da2 - 1; ++i) den = den * h;
            R res = exact_div(num, den);
            return sign < 0 ? -res : res;
        }
    }
}

// disc(f) = (-1)^(d(d-1)/2) Res_{d,d-1}(f, f') / lc(f), with the formal
// degree-(d-1) convention for f' (matters in characteristic p).
template <class R>
R discriminant(const UniPoly<R>& f) {
    int d = f.degree();
    if (d < 1) throw degenerate_input_error("discriminant: degree must be >= 1");
    UniPoly<R> fp = derivative(f);
    if (fp.zero()) return zero_like(f.lc());
    R res = resultant(f, fp);
    // pad: Res_{d,d-1}(f,f') = lc(f)^(d-1-deg f') * Res(f,f')
    int pad = (d - 1) - fp.degree();
    for (int i = 0; i < pad; ++i) res = res * f.lc();
    R disc = exact_div(res, f.lc());
    long e = static_cast<long>(d) * (d - 1) / 2;
    return (e % 2) ? -disc : disc;
}

// deterministic total order on polynomials: degree, then coefficients from
// the top down (used to fix factor order in reports)
template <class R, class Less>
bool poly_less(const UniPoly<R>& a, const UniPoly<R>& b, Less less) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (less(a[i], b[i])) return true;
        if (less(b[i], a[i])) return false;
    }
    return false;
}

} // namespace charvar
