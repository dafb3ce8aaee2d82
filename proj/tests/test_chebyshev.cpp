#include <doctest.h>

#include <random>

#include "charvar/chebyshev.hpp"
#include "charvar/factor_univar.hpp"
#include "charvar/mat2.hpp"
#include "charvar/modp.hpp"
#include "charvar/poly_io.hpp"

using namespace charvar;

namespace {

UniPoly<Fp> fp_lin(long c0, uint64_t p) { // x + c0
    return UniPoly<Fp>(std::vector<Fp>{Fp::from_int(Int(c0), p), Fp(1, p)});
}

} // namespace

TEST_CASE("phi/psi table matches the reference values up to k = 10") {
    auto P = [](const char* s) { return parse_unipoly(s, "x"); };
    CHECK(phi(1) == P("1"));
    CHECK(phi(2) == P("1"));
    CHECK(phi(3) == P("x + 1"));
    CHECK(phi(4) == P("x"));
    CHECK(phi(5) == P("x^2 + x + (-1)"));
    CHECK(phi(6) == P("x^2 + (-1)"));
    CHECK(phi(7) == P("x^3 + x^2 + (-2)*x + (-1)"));
    CHECK(phi(8) == P("x^3 + (-2)*x"));
    CHECK(phi(9) == P("x^4 + x^3 + (-3)*x^2 + (-2)*x + 1"));
    CHECK(phi(10) == P("x^4 + (-3)*x^2 + 1"));
    CHECK(psi(1) == P("1"));
    CHECK(psi(2) == P("x"));
    CHECK(psi(3) == P("x + (-1)"));
    CHECK(psi(4) == P("x^2 + (-2)"));
    CHECK(psi(5) == P("x^2 + (-1)*x + (-1)"));
    CHECK(psi(6) == P("x^3 + (-3)*x"));
    CHECK(psi(7) == P("x^3 + (-1)*x^2 + (-2)*x + 1"));
    CHECK(psi(8) == P("x^4 + (-4)*x^2 + 2"));
    CHECK(psi(9) == P("x^4 + (-1)*x^3 + (-3)*x^2 + 2*x + 1"));
    CHECK(psi(10) == P("x^5 + (-5)*x^3 + 5*x"));
    CHECK_THROWS_AS(phi(0), degenerate_input_error);
}

TEST_CASE("defining Laurent expressions and both recursions agree") {
    for (int k = 1; k <= 20; ++k) {
        CHECK(symmetrize(phi_defining_laurent(k)) == phi(k));
        CHECK(symmetrize(psi_defining_laurent(k)) == psi(k));
    }
    // second-order recursions
    for (int k = 5; k <= 60; ++k) {
        UniPoly<Int> x = UniPoly<Int>::monomial(Int(1), 1);
        CHECK(phi(k) == x * phi(k - 2) - phi(k - 4));
        CHECK(psi(k) == x * psi(k - 2) - psi(k - 4));
    }
    // expected degrees
    for (int k = 3; k <= 40; ++k) {
        int dphi = (k % 2) ? (k - 1) / 2 : k / 2 - 1;
        int dpsi = (k % 2) ? (k - 1) / 2 : k / 2;
        CHECK(phi(k).degree() == dphi);
        CHECK(psi(k).degree() == dpsi);
    }
}

TEST_CASE("Psi_2k(x) -+ 2 factor identities for k <= 30") {
    UniPoly<Int> x = UniPoly<Int>::monomial(Int(1), 1);
    UniPoly<Int> two = UniPoly<Int>::constant(Int(2));
    for (int k = 1; k <= 30; ++k) {
        UniPoly<Int> lhs_minus = psi(2 * k) - two;
        UniPoly<Int> lhs_plus = psi(2 * k) + two;
        if (k % 2 == 1) {
            CHECK(lhs_minus == (x - two) * phi(k) * phi(k));
            CHECK(lhs_plus == (x + two) * psi(k) * psi(k));
        } else {
            CHECK(lhs_minus == (x * x - two - two) * phi(k) * phi(k));
            CHECK(lhs_plus == psi(k) * psi(k));
        }
    }
}

TEST_CASE("Psi_2k(tr A) = tr(A^k) on random SL2 matrices") {
    std::mt19937_64 rng(31337);
    const uint64_t p = 10007;
    for (int trial = 0; trial < 100; ++trial) {
        Fp a(rng() % p, p), b(rng() % p, p), c(rng() % p, p);
        if (is_zero(a)) continue;
        Fp d = (one_like(a) + b * c) / a;
        Mat2<Fp> A{a, b, c, d};
        Mat2<Fp> Ak = Mat2<Fp>::identity_like(a);
        for (int k = 1; k <= 30; ++k) {
            Ak = Ak * A;
            Fp want = Ak.trace();
            Fp got = eval(reduce_mod_p(psi(2 * k), p), A.trace());
            CHECK(got == want);
        }
    }
}

TEST_CASE("Phi_k vanishes exactly on traces of order-k elements") {
    // diagonal matrices with eigenvalues of exact order k over F_p, p = 1 mod 2k
    for (int k = 3; k <= 12; ++k) {
        uint64_t p = 0;
        for (uint64_t cand = static_cast<uint64_t>(2 * k) + 1;; cand += 2 * k) {
            if (is_prime_u64(cand)) { p = cand; break; }
        }
        // find an element of exact multiplicative order k
        uint64_t lambda = 0;
        for (uint64_t g = 2; g < p; ++g) {
            uint64_t cand = powmod_u64(g, (p - 1) / k, p);
            bool exact = cand != 1;
            for (int d = 2; d < k && exact; ++d)
                if (k % d == 0 && powmod_u64(cand, d, p) == 1) exact = false;
            if (exact && cand != p - 1) { lambda = cand; break; }
        }
        REQUIRE(lambda != 0);
        Fp tr = Fp(lambda, p) + inv(Fp(lambda, p));
        CHECK(is_zero(eval(reduce_mod_p(phi(k), p), tr)));
        // an element of order 2k has Phi_k(trace) != 0 but Psi_k(trace) = 0
        uint64_t mu = 0;
        if ((p - 1) % (2 * k) == 0) {
            for (uint64_t g = 2; g < p; ++g) {
                uint64_t cand = powmod_u64(g, (p - 1) / (2 * k), p);
                if (powmod_u64(cand, k, p) == p - 1) { mu = cand; break; }
            }
        }
        REQUIRE(mu != 0);
        Fp trmu = Fp(mu, p) + inv(Fp(mu, p));
        CHECK(!is_zero(eval(reduce_mod_p(phi(k), p), trmu)));
        CHECK(is_zero(eval(reduce_mod_p(psi(k), p), trmu)));
    }
}

TEST_CASE("mod-p congruence forms") {
    // Phi_9 = Phi_1^9 (u-2)^4 = (u-2)^4 mod 3
    auto f93 = phi_psi_mod_p_form(PhiPsi::phi, 9, 3);
    CHECK(f93.r == 2);
    CHECK(f93.exponent == 9);
    CHECK(f93.base == UniPoly<Fp>::constant(Fp(1, 3)));
    UniPoly<Fp> expect = UniPoly<Fp>::constant(Fp(1, 3));
    for (int i = 0; i < 4; ++i) expect = expect * fp_lin(-2, 3);
    CHECK(f93.cofactor == expect);
    // Psi_10 = Psi_2^5 = x^5 mod 5
    auto f105 = phi_psi_mod_p_form(PhiPsi::psi, 10, 5);
    CHECK(f105.exponent == 5);
    CHECK(f105.base == reduce_mod_p(psi(2), 5));
    CHECK(f105.cofactor == UniPoly<Fp>::constant(Fp(1, 5)));
    // Phi_25 = (u-2)^12 mod 5
    auto f255 = phi_psi_mod_p_form(PhiPsi::phi, 25, 5);
    CHECK(f255.exponent == 25);
    CHECK(f255.base == UniPoly<Fp>::constant(Fp(1, 5)));
    CHECK(f255.cofactor.degree() == 12);
    // trivial case p coprime to k
    auto triv = phi_psi_mod_p_form(PhiPsi::phi, 9, 5);
    CHECK(triv.r == 0);
    CHECK(triv.base == reduce_mod_p(phi(9), 5));
    CHECK(triv.cofactor == UniPoly<Fp>::constant(Fp(1, 5)));

    // expanding the congruence form reproduces the reduction, for many (k, p)
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        for (int k = 1; k <= 50; ++k) {
            for (auto kind : {PhiPsi::phi, PhiPsi::psi}) {
                auto form = phi_psi_mod_p_form(kind, k, p);
                UniPoly<Fp> prod = form.cofactor;
                Int e = form.exponent;
                UniPoly<Fp> basepow = UniPoly<Fp>::constant(Fp(1, p));
                for (Int i(0); i < e; ++i) basepow = basepow * form.base;
                prod = prod * basepow;
                CHECK(prod == reduce_mod_p(kind == PhiPsi::phi ? phi(k) : psi(k), p));
            }
        }
    }
}

TEST_CASE("squarefree part of Phi_45 mod 3") {
    // Phi_45 = Phi_5^9 (x-2)^4 mod 3, so the squarefree part is Phi_5 (x-2)
    auto f = reduce_mod_p(phi(45), 3);
    auto sf = squarefree_part(f);
    auto expected = make_monic(reduce_mod_p(phi(5), 3) * fp_lin(-2, 3));
    CHECK(sf == expected);
}

TEST_CASE("the quintic from the cable-knot component is Psi_11") {
    CHECK(psi(11) == parse_unipoly(
        "x^5 + (-1)*x^4 + (-4)*x^3 + 3*x^2 + 3*x + (-1)", "x"));
}
