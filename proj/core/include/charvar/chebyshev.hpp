// The Phi_k / Psi_k family: integer polynomials whose roots are traces of
// SL2 elements of order dividing k (A^k = Id, resp. A^k = -Id), built from
// the coupled first-order recursions, plus their factored congruence shapes
// mod an odd prime.
#pragma once

#include "charvar/fp.hpp"
#include "charvar/laurent.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

enum class PhiPsi { phi, psi };

UniPoly<Int> phi(int k);
UniPoly<Int> psi(int k);

// the defining Laurent expressions (used to cross-check the recursions)
Laurent<Int> phi_defining_laurent(int k);
Laurent<Int> psi_defining_laurent(int k);

// k = p^r k' with r maximal; mod p the polynomial factors as
// base^(p^r) * cofactor with base = Phi_{k'} (resp. Psi_{k'}) and cofactor
// one of (u-2)^((p^r-1)/2), (u^2-4)^((p^r-1)/2), (u+2)^((p^r-1)/2), 1.
struct PhiPsiModPForm {
    int k_prime = 1;
    int r = 0;
    Int exponent{1}; // p^r
    UniPoly<Fp> base;
    UniPoly<Fp> cofactor;
};

PhiPsiModPForm phi_psi_mod_p_form(PhiPsi kind, int k, uint64_t p);

} // namespace charvar
