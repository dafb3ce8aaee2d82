// Extension fields F_{p^k}, realized as F_p[w]/(m(w)) with m the
// lexicographically smallest monic irreducible of degree k (deterministic, so
// reports are reproducible). Bounded-degree extensions stand in for the
// algebraic closure.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "charvar/fp.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

struct ExtCtx {
    uint64_t p;
    unsigned k;
    UniPoly<Fp> modulus; // monic irreducible of degree k over F_p
};

// Cached, thread-safe. Verifies irreducibility of the modulus it builds.
std::shared_ptr<const ExtCtx> get_ext_ctx(uint64_t p, unsigned k);

bool is_irreducible_fp(const UniPoly<Fp>& f);

class Ext {
public:
    Ext() = default;
    Ext(std::shared_ptr<const ExtCtx> ctx, std::vector<uint64_t> coords)
        : F_(std::move(ctx)), c_(std::move(coords)) {
        c_.resize(F_->k, 0);
        for (auto& x : c_) x %= F_->p;
    }
    static Ext from_fp(const Fp& a, std::shared_ptr<const ExtCtx> ctx) {
        std::vector<uint64_t> c(ctx->k, 0);
        c[0] = a.v % ctx->p;
        return Ext(std::move(ctx), std::move(c));
    }
    static Ext generator(std::shared_ptr<const ExtCtx> ctx) {
        std::vector<uint64_t> c(ctx->k, 0);
        if (ctx->k > 1) c[1] = 1; // w; for k = 1 the generator is 0 = root of w
        return Ext(std::move(ctx), std::move(c));
    }

    const std::shared_ptr<const ExtCtx>& ctx() const { return F_; }
    const std::vector<uint64_t>& coords() const { return c_; }
    uint64_t p() const { return F_->p; }
    unsigned k() const { return F_->k; }
    bool valid() const { return static_cast<bool>(F_); }

    bool operator==(const Ext& o) const {
        return F_->p == o.F_->p && F_->k == o.F_->k && c_ == o.c_;
    }
    bool operator!=(const Ext& o) const { return !(*this == o); }

private:
    std::shared_ptr<const ExtCtx> F_;
    std::vector<uint64_t> c_; // coordinates w.r.t. 1, w, ..., w^(k-1)
};

template <> struct is_field<Ext> : std::true_type {};

Ext operator+(const Ext& a, const Ext& b);
Ext operator-(const Ext& a, const Ext& b);
Ext operator-(const Ext& a);
Ext operator*(const Ext& a, const Ext& b);
Ext inv(const Ext& a);
Ext operator/(const Ext& a, const Ext& b);
Ext pow(const Ext& a, const Int& e);

bool is_zero(const Ext& a);
Ext zero_like(const Ext& a);
Ext one_like(const Ext& a);
Ext exact_div(const Ext& a, const Ext& b);
bool try_exact_div(const Ext& a, const Ext& b, Ext& q);
Ext ring_gcd(const Ext& a, const Ext& b);
bool field_less(const Ext& a, const Ext& b);

inline uint64_t field_char(const Ext& a) { return a.p(); }
Int field_card(const Ext& a);
Ext frobenius(const Ext& a);
Ext frobenius_inv(const Ext& a);

// degree of F_p(a) over F_p: least e >= 1 with a^(p^e) = a
unsigned min_degree(const Ext& a);

// true when a lies in the prime field; fills out its F_p value
bool to_prime_field(const Ext& a, Fp& out);

std::string to_string(const Ext& a);

} // namespace charvar
