// Prime field F_p for odd p in 64-bit range. Elements carry their modulus so
// values from different fields cannot be mixed silently.
#pragma once

#include <cstdint>
#include <string>

#include "charvar/rings.hpp"

namespace charvar {

// Validates an odd prime modulus. All constructions of F_p go through this.
inline uint64_t check_odd_prime(uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw modulus_error("modulus must be an odd prime, got " + std::to_string(p));
    return p;
}

struct Fp {
    uint64_t v = 0;
    uint64_t p = 0; // 0 only for the default-constructed placeholder

    Fp() = default;
    Fp(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}
    static Fp from_int(const Int& a, uint64_t prime) {
        Int r = a % Int(Int(prime));
        if (sgn(r) < 0) r += Int(prime);
        return Fp(r.get_ui(), prime);
    }

    bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
};

inline void check_same_field(const Fp& a, const Fp& b) {
    if (a.p != b.p) throw modulus_error("mixed moduli in F_p arithmetic");
}

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline Fp zero_like(const Fp& a) { return Fp(0, a.p); }
inline Fp one_like(const Fp& a) { return Fp(1, a.p); }

inline Fp operator+(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return Fp{s, a.p};
}
inline Fp operator-(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return Fp{s, a.p};
}
inline Fp operator-(const Fp& a) { return Fp{a.v == 0 ? 0 : a.p - a.v, a.p}; }
inline Fp operator*(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    return Fp{mulmod_u64(a.v, b.v, a.p), a.p};
}

inline Fp inv(const Fp& a) {
    if (a.v == 0) throw degenerate_input_error("inv: zero element of F_p");
    return Fp{powmod_u64(a.v, a.p - 2, a.p), a.p};
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

inline Fp pow(const Fp& a, uint64_t e) { return Fp{powmod_u64(a.v, e, a.p), a.p}; }

inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
inline bool try_exact_div(const Fp& a, const Fp& b, Fp& q) {
    if (b.v == 0) return false;
    q = a / b;
    return true;
}
inline Fp ring_gcd(const Fp& a, const Fp& b) {
    if (is_zero(a) && is_zero(b)) return zero_like(a);
    return one_like(a);
}

// deterministic total order, used to sort factor lists
inline bool field_less(const Fp& a, const Fp& b) { return a.v < b.v; }

inline uint64_t field_char(const Fp& a) { return a.p; }
inline Int field_card(const Fp& a) { return Int(a.p); }
// p-th root (Frobenius is the identity on the prime field)
inline Fp frobenius_inv(const Fp& a) { return a; }

inline std::string to_string(const Fp& a) { return std::to_string(a.v); }

} // namespace charvar
