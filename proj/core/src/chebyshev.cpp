#include "charvar/chebyshev.hpp"

#include <memory>
#include <mutex>
#include <vector>

#include "charvar/modp.hpp"

namespace charvar {

namespace {

struct Table {
    std::vector<UniPoly<Int>> phi, psi; // index k, slot 0 unused
};

// Phi_1 = Phi_2 = Psi_1 = 1, Psi_2 = x, and
//   Phi_{2k} = Phi_{2k-1} - Phi_{2k-2},   Phi_{2k+1} = (x+2) Phi_{2k} - Phi_{2k-1}
//   Psi_{2k} = (x+2) Psi_{2k-1} - Psi_{2k-2}, Psi_{2k+1} = Psi_{2k} - Psi_{2k-1}
std::shared_ptr<const Table> build(int kmax) {
    auto t = std::make_shared<Table>();
    int n = std::max(kmax, 2);
    t->phi.resize(n + 1);
    t->psi.resize(n + 1);
    UniPoly<Int> one = UniPoly<Int>::constant(Int(1));
    UniPoly<Int> x = UniPoly<Int>::monomial(Int(1), 1);
    UniPoly<Int> xp2 = x + UniPoly<Int>::constant(Int(2));
    t->phi[1] = one;
    t->phi[2] = one;
    t->psi[1] = one;
    t->psi[2] = x;
    for (int k = 3; k <= n; ++k) {
        if (k % 2 == 0) {
            t->phi[k] = t->phi[k - 1] - t->phi[k - 2];
            t->psi[k] = xp2 * t->psi[k - 1] - t->psi[k - 2];
        } else {
            t->phi[k] = xp2 * t->phi[k - 1] - t->phi[k - 2];
            t->psi[k] = t->psi[k - 1] - t->psi[k - 2];
        }
    }
    return t;
}

std::shared_ptr<const Table> table_upto(int k) {
    static std::mutex mu;
    static std::shared_ptr<const Table> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || static_cast<int>(cache->phi.size()) <= k) cache = build(k + 16);
    return cache;
}

} // namespace

UniPoly<Int> phi(int k) {
    if (k < 1) throw degenerate_input_error("phi: k must be >= 1");
    return table_upto(k)->phi[k];
}

UniPoly<Int> psi(int k) {
    if (k < 1) throw degenerate_input_error("psi: k must be >= 1");
    return table_upto(k)->psi[k];
}

Laurent<Int> phi_defining_laurent(int k) {
    if (k < 1) throw degenerate_input_error("phi: k must be >= 1");
    Laurent<Int> l;
    if (k % 2 == 1) { // lambda^j for j = -(k-1)/2 .. (k-1)/2
        for (int j = -(k - 1) / 2; j <= (k - 1) / 2; ++j) l.add_term(j, Int(1));
    } else { // lambda^j, j = -k/2+1 .. k/2-1 in steps of 2
        for (int j = -k / 2 + 1; j <= k / 2 - 1; j += 2) l.add_term(j, Int(1));
    }
    return l;
}

Laurent<Int> psi_defining_laurent(int k) {
    if (k < 1) throw degenerate_input_error("psi: k must be >= 1");
    Laurent<Int> l;
    if (k % 2 == 1) { // alternating sum lambda^((k-1)/2 - i) (-1)^i
        for (int i = 0; i < k; ++i) l.add_term((k - 1) / 2 - i, Int(i % 2 ? -1 : 1));
    } else {
        l.add_term(k / 2, Int(1));
        l.add_term(-k / 2, Int(1));
    }
    return l;
}

PhiPsiModPForm phi_psi_mod_p_form(PhiPsi kind, int k, uint64_t p) {
    check_odd_prime(p);
    if (k < 1) throw degenerate_input_error("phi_psi_mod_p_form: k must be >= 1");
    PhiPsiModPForm out;
    long kp = k;
    Int pr(1);
    while (kp % static_cast<long>(p) == 0) {
        kp /= static_cast<long>(p);
        pr *= static_cast<long>(p);
        ++out.r;
    }
    out.k_prime = static_cast<int>(kp);
    out.exponent = pr;
    out.base = reduce_mod_p(kind == PhiPsi::phi ? phi(out.k_prime) : psi(out.k_prime), p);
    Fp one(1, p);
    UniPoly<Fp> cof = UniPoly<Fp>::constant(one);
    if (out.r > 0) {
        Int half = (pr - 1) / 2;
        if (!half.fits_slong_p() || half.get_si() > 4096)
            throw capacity_error("phi_psi_mod_p_form: cofactor degree too large");
        long h = half.get_si();
        UniPoly<Fp> u2, base_lin;
        bool odd = (k % 2 == 1);
        if (kind == PhiPsi::phi && odd) // (u-2)^((p^r-1)/2)
            base_lin = UniPoly<Fp>(std::vector<Fp>{-Fp(2, p), one});
        else if (kind == PhiPsi::phi) // (u^2-4)^((p^r-1)/2)
            base_lin = UniPoly<Fp>(std::vector<Fp>{-Fp(4, p), Fp(0, p), one});
        else if (odd) // Psi, odd: (u+2)^((p^r-1)/2)
            base_lin = UniPoly<Fp>(std::vector<Fp>{Fp(2, p), one});
        else // Psi, even: 1
            base_lin = UniPoly<Fp>::constant(one);
        for (long i = 0; i < h; ++i) cof = cof * base_lin;
    }
    out.cofactor = cof;
    return out;
}

} // namespace charvar
