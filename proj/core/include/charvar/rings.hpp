// Base coefficient rings and the small ring-trait vocabulary used by the
// generic polynomial code: is_zero / zero_like / one_like / exact_div /
// ring_gcd, plus 64-bit modular arithmetic and primality.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace charvar {

using Int = mpz_class;
using Rat = mpq_class;

// ---- error hierarchy ------------------------------------------------------

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct modulus_error : error { using error::error; };
struct degenerate_input_error : error { using error::error; };
struct capacity_error : error { using error::error; };
struct symmetry_error : error { using error::error; };
struct construction_error : error { using error::error; };
struct consistency_error : error { using error::error; };
struct not_knot_group_error : error { using error::error; };

// ---- 64-bit modular arithmetic --------------------------------------------

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// ---- ring traits for Int --------------------------------------------------

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline Int zero_like(const Int&) { return Int(0); }
inline Int one_like(const Int&) { return Int(1); }

inline Int exact_div(const Int& a, const Int& b) {
    if (is_zero(b)) throw degenerate_input_error("exact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw error("exact_div: inexact integer division");
    return q;
}

inline bool try_exact_div(const Int& a, const Int& b, Int& q) {
    if (is_zero(b)) return false;
    Int r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return sgn(r) == 0;
}

inline Int ring_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// ---- ring traits for Rat (a field) ----------------------------------------

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inv(const Rat& a) {
    if (is_zero(a)) throw degenerate_input_error("inv: zero element");
    return Rat(1) / a;
}
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline bool try_exact_div(const Rat& a, const Rat& b, Rat& q) {
    if (is_zero(b)) return false;
    q = a / b;
    return true;
}
inline Rat ring_gcd(const Rat& a, const Rat& b) {
    if (is_zero(a) && is_zero(b)) return Rat(0);
    return Rat(1);
}

inline std::string to_string(const Int& a) { return a.get_str(); }

} // namespace charvar
