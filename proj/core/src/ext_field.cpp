#include "charvar/ext_field.hpp"

#include <map>
#include <mutex>

namespace charvar {

namespace {

UniPoly<Fp> x_power_mod(const UniPoly<Fp>& f, const Int& e, const UniPoly<Fp>& mod) {
    // x^e mod `mod`, computed by square-and-multiply on the exponent bits
    Fp one(1, f.lc().p);
    UniPoly<Fp> base = UniPoly<Fp>::monomial(one, 1);
    base = divmod_field(base, mod).second;
    UniPoly<Fp> acc = UniPoly<Fp>::constant(one);
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = divmod_field(acc * acc, mod).second;
        if (mpz_tstbit(e.get_mpz_t(), i))
            acc = divmod_field(acc * base, mod).second;
    }
    return acc;
}

} // namespace

bool is_irreducible_fp(const UniPoly<Fp>& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    uint64_t p = f.lc().p;
    UniPoly<Fp> g = make_monic(f);
    Fp one(1, p);
    UniPoly<Fp> x = UniPoly<Fp>::monomial(one, 1);
    // x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for primes q | n
    Int pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
    if (x_power_mod(g, pn, g) != divmod_field(x, g).second) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool qprime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) { qprime = false; break; }
        if (!qprime) continue;
        Int pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, n / q);
        UniPoly<Fp> h = x_power_mod(g, pe, g) - divmod_field(x, g).second;
        if (gcd_field(h, g).degree() > 0) return false;
    }
    return true;
}

std::shared_ptr<const ExtCtx> get_ext_ctx(uint64_t p, unsigned k) {
    check_odd_prime(p);
    if (k < 1) throw degenerate_input_error("extension degree must be >= 1");
    static std::mutex mu;
    static std::map<std::pair<uint64_t, unsigned>, std::shared_ptr<const ExtCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;

    // smallest monic irreducible in lex order on (c_{k-1}, ..., c_0)
    Fp one(1, p);
    std::vector<uint64_t> digits(k, 0);
    while (true) {
        // digits[0] is the most significant counter digit and maps to c_{k-1},
        // so low-degree-first coefficients are digits reversed
        std::vector<Fp> c;
        c.reserve(k + 1);
        for (unsigned i = 0; i < k; ++i) c.push_back(Fp(digits[k - 1 - i], p));
        c.push_back(one);
        UniPoly<Fp> cand{std::vector<Fp>(c)};
        if (is_irreducible_fp(cand)) {
            auto ctx = std::make_shared<ExtCtx>(ExtCtx{p, k, cand});
            cache[{p, k}] = ctx;
            return ctx;
        }
        // increment base-p counter, least significant digit = c_0 (last slot)
        int i = static_cast<int>(k) - 1;
        while (i >= 0) {
            if (++digits[i] < p) break;
            digits[i] = 0;
            --i;
        }
        if (i < 0)
            throw error("no irreducible polynomial found (unreachable)");
    }
}

namespace {

void check_same_ext(const Ext& a, const Ext& b) {
    if (a.p() != b.p() || a.k() != b.k())
        throw modulus_error("mixed extension fields in arithmetic");
}

UniPoly<Fp> to_poly(const Ext& a) {
    std::vector<Fp> c;
    c.reserve(a.k());
    for (auto v : a.coords()) c.emplace_back(v, a.p());
    return UniPoly<Fp>(std::move(c));
}

Ext from_poly(const UniPoly<Fp>& f, const std::shared_ptr<const ExtCtx>& ctx) {
    std::vector<uint64_t> c(ctx->k, 0);
    for (int i = 0; i <= f.degree(); ++i) c[i] = f[i].v;
    return Ext(ctx, std::move(c));
}

} // namespace

Ext operator+(const Ext& a, const Ext& b) {
    check_same_ext(a, b);
    std::vector<uint64_t> c(a.k());
    for (unsigned i = 0; i < a.k(); ++i) {
        uint64_t s = a.coords()[i] + b.coords()[i];
        c[i] = s >= a.p() ? s - a.p() : s;
    }
    return Ext(a.ctx(), std::move(c));
}

Ext operator-(const Ext& a, const Ext& b) {
    check_same_ext(a, b);
    std::vector<uint64_t> c(a.k());
    for (unsigned i = 0; i < a.k(); ++i) {
        uint64_t av = a.coords()[i], bv = b.coords()[i];
        c[i] = av >= bv ? av - bv : av + a.p() - bv;
    }
    return Ext(a.ctx(), std::move(c));
}

Ext operator-(const Ext& a) {
    std::vector<uint64_t> c(a.k());
    for (unsigned i = 0; i < a.k(); ++i)
        c[i] = a.coords()[i] == 0 ? 0 : a.p() - a.coords()[i];
    return Ext(a.ctx(), std::move(c));
}

Ext operator*(const Ext& a, const Ext& b) {
    check_same_ext(a, b);
    UniPoly<Fp> prod = to_poly(a) * to_poly(b);
    return from_poly(divmod_field(prod, a.ctx()->modulus).second, a.ctx());
}

Ext inv(const Ext& a) {
    if (is_zero(a)) throw degenerate_input_error("inv: zero element of F_{p^k}");
    // extended Euclid in F_p[w]
    UniPoly<Fp> r0 = a.ctx()->modulus, r1 = to_poly(a);
    Fp one(1, a.p());
    UniPoly<Fp> s0, s1 = UniPoly<Fp>::constant(one);
    while (!r1.zero()) {
        auto [q, r] = divmod_field(r0, r1);
        UniPoly<Fp> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant, since the modulus is irreducible)
    Fp c = inv(r0.lc());
    UniPoly<Fp> res = s0 * c;
    return from_poly(divmod_field(res, a.ctx()->modulus).second, a.ctx());
}

Ext operator/(const Ext& a, const Ext& b) { return a * inv(b); }

Ext pow(const Ext& a, const Int& e) {
    if (sgn(e) < 0) return pow(inv(a), -e);
    Ext acc = one_like(a);
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = acc * acc;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * a;
    }
    if (sgn(e) == 0) return one_like(a);
    return acc;
}

bool is_zero(const Ext& a) {
    for (auto v : a.coords())
        if (v != 0) return false;
    return true;
}

Ext zero_like(const Ext& a) { return Ext(a.ctx(), std::vector<uint64_t>(a.k(), 0)); }

Ext one_like(const Ext& a) {
    std::vector<uint64_t> c(a.k(), 0);
    c[0] = 1;
    return Ext(a.ctx(), std::move(c));
}

Ext exact_div(const Ext& a, const Ext& b) { return a / b; }

bool try_exact_div(const Ext& a, const Ext& b, Ext& q) {
    if (is_zero(b)) return false;
    q = a / b;
    return true;
}

Ext ring_gcd(const Ext& a, const Ext& b) {
    if (is_zero(a) && is_zero(b)) return zero_like(a);
    return one_like(a);
}

bool field_less(const Ext& a, const Ext& b) {
    for (int i = static_cast<int>(a.k()) - 1; i >= 0; --i) {
        if (a.coords()[i] != b.coords()[i]) return a.coords()[i] < b.coords()[i];
    }
    return false;
}

Int field_card(const Ext& a) {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), a.p(), a.k());
    return q;
}

Ext frobenius(const Ext& a) { return pow(a, Int(a.p())); }

Ext frobenius_inv(const Ext& a) {
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), a.p(), a.k() - 1);
    return pow(a, e);
}

unsigned min_degree(const Ext& a) {
    Ext b = frobenius(a);
    unsigned e = 1;
    while (!(b == a)) {
        b = frobenius(b);
        ++e;
    }
    return e;
}

bool to_prime_field(const Ext& a, Fp& out) {
    for (unsigned i = 1; i < a.k(); ++i)
        if (a.coords()[i] != 0) return false;
    out = Fp(a.coords()[0], a.p());
    return true;
}

std::string to_string(const Ext& a) {
    if (a.k() == 1) return std::to_string(a.coords()[0]);
    std::string s = "[";
    for (unsigned i = 0; i < a.k(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.coords()[i]);
    }
    return s + "]";
}

} // namespace charvar
