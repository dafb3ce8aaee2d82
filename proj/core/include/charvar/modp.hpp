// Reductions mod odd primes and Z <-> Q coefficient conversions.
#pragma once

#include "charvar/bipoly.hpp"
#include "charvar/fp.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

inline UniPoly<Fp> reduce_mod_p(const UniPoly<Int>& f, uint64_t p) {
    check_odd_prime(p);
    return map_coeffs<Int, Fp>(f, [&](const Int& a) { return Fp::from_int(a, p); });
}

inline BiPoly<Fp> reduce_mod_p(const BiPoly<Int>& f, uint64_t p) {
    check_odd_prime(p);
    return map_coeffs_bi<Int, Fp>(f, [&](const Int& a) { return Fp::from_int(a, p); });
}

inline Fp reduce_mod_p(const Int& a, uint64_t p) {
    check_odd_prime(p);
    return Fp::from_int(a, p);
}

inline UniPoly<Rat> to_rat(const UniPoly<Int>& f) {
    return map_coeffs<Int, Rat>(f, [](const Int& a) { return Rat(a); });
}

// clears denominators and makes the integer content 1, keeping the sign of
// the leading coefficient
inline UniPoly<Int> primitive_from_rat(const UniPoly<Rat>& f) {
    if (f.zero()) return UniPoly<Int>();
    Int l(1);
    for (const auto& c : f.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) {
        Rat s = q * Rat(l);
        c.push_back(s.get_num());
    }
    UniPoly<Int> g(std::move(c));
    return primitive_part(g);
}

inline UniPoly<Int> positive_lc(UniPoly<Int> f) {
    if (!f.zero() && sgn(f.lc()) < 0) f = -f;
    return f;
}

} // namespace charvar
