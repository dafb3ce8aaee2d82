#include "charvar/knots.hpp"

#include <numeric>

#include "charvar/laurent.hpp"
#include "charvar/mat2.hpp"

namespace charvar {

TwoBridgeFraction TwoBridgeFraction::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw degenerate_input_error("two-bridge fraction: expected beta/alpha, got '" + s + "'");
    try {
        long b = std::stol(s.substr(0, slash));
        long a = std::stol(s.substr(slash + 1));
        return TwoBridgeFraction(b, a);
    } catch (const std::invalid_argument&) {
        throw degenerate_input_error("two-bridge fraction: bad integer in '" + s + "'");
    } catch (const std::out_of_range&) {
        throw degenerate_input_error("two-bridge fraction: integer out of range in '" + s + "'");
    }
}

Word Presentation::relator() const {
    return Word(std::vector<int8_t>{1}) * w * Word(std::vector<int8_t>{-2}) * w.inverse();
}

Presentation two_bridge_presentation(const TwoBridgeFraction& f) {
    std::vector<int8_t> letters;
    letters.reserve(f.alpha - 1);
    for (long i = 1; i < f.alpha; ++i) {
        long eps = ((i * f.beta) / f.alpha) % 2 == 0 ? 1 : -1;
        int8_t gen = (i % 2 == 1) ? 2 : 1; // alternate b, a, b, a, ...
        letters.push_back(static_cast<int8_t>(eps * gen));
    }
    Word w(std::move(letters));
    if (static_cast<long>(w.size()) != f.alpha - 1)
        throw construction_error("two-bridge word unexpectedly reduced");
    return Presentation{std::move(w), f.text()};
}

namespace {

using C = UniPoly<Int>;  // integer polynomials in x
using LC = Laurent<C>;   // Laurent in m over Z[x]

LC lterm(const C& c, int e) { return LC::term(c, e); }

C cints(std::vector<long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return C(std::move(c));
}

Mat2<LC> letter_matrix(int8_t letter) {
    C one = cints({1});
    C zero;
    C two_minus_x = cints({2, -1});
    C x_minus_2 = cints({-2, 1});
    switch (letter) {
        case 1: // A
            return {lterm(one, 1), lterm(one, 0), LC(), lterm(one, -1)};
        case -1: // A^-1
            return {lterm(one, -1), lterm(-one, 0), LC(), lterm(one, 1)};
        case 2: // B
            return {lterm(one, 1), LC(), lterm(two_minus_x, 0), lterm(one, -1)};
        case -2: // B^-1
            return {lterm(one, -1), LC(), lterm(x_minus_2, 0), lterm(one, 1)};
        default:
            throw degenerate_input_error("letter_matrix: bad letter");
    }
}

// Laurent in m over Z[x] -> bivariate in (m, x) after multiplying by a power
// of m to clear negative exponents
BiPoly<Int> laurent_to_mx(const LC& l) {
    BiPoly<Int> out("m", "x");
    int shift = -l.min_exp();
    for (const auto& [e, c] : l.terms())
        for (int j = 0; j <= c.degree(); ++j) out.add_term(e + shift, j, c[j]);
    return out;
}

// recenter a polynomial in (m, x) as a Laurent in m and rewrite symmetric
// powers through t = m + 1/m
BiPoly<Int> symmetrize_mx(const BiPoly<Int>& g) {
    int lo = g.degree_in(0), hi = 0;
    for (const auto& [k, c] : g.terms()) {
        lo = std::min(lo, k.first);
        hi = std::max(hi, k.first);
    }
    if ((lo + hi) % 2 != 0)
        throw symmetry_error("curve extraction: m-support cannot be centered");
    int center = (lo + hi) / 2;
    LC l;
    for (const auto& [k, c] : g.terms())
        l.add_term(k.first - center, C::monomial(c, k.second));
    if (!is_symmetric(l)) {
        std::string diag = "curve extraction: entry not symmetric under m -> 1/m";
        throw symmetry_error(diag);
    }
    UniPoly<C> q = symmetrize(l); // polynomial in t with Z[x] coefficients
    return from_nested_outer_first(q, "t", "x");
}

} // namespace

CharacterCurve character_curve(const Presentation& pres) {
    Mat2<LC> A = letter_matrix(1);
    Mat2<LC> B = letter_matrix(2);
    Mat2<LC> W{lterm(cints({1}), 0), LC(), LC(), lterm(cints({1}), 0)};
    for (int8_t letter : pres.w.letters()) W = W * letter_matrix(letter);
    Mat2<LC> E = A * W - W * B;

    const LC* entries[4] = {&E.a, &E.b, &E.c, &E.d};

    // primary route: the (1,1) entry, when nonzero
    BiPoly<Int> primary;
    bool have_primary = false;
    if (!E.a.zero()) {
        primary = normalize_curve(symmetrize_mx(laurent_to_mx(E.a)));
        have_primary = true;
    }

    // fallback route: gcd of all nonzero entries as elements of (Z[m])[x]
    BiPoly<Int> g("m", "x");
    for (const LC* e : entries) {
        if (e->zero()) continue;
        g = ring_gcd(g, laurent_to_mx(*e));
    }
    if (g.zero())
        throw construction_error("curve extraction: A W - W B vanished identically");
    // strip the m-content (powers of m and pure-m factors are artifacts of
    // denominator clearing)
    {
        auto nested = nested_outer_second(g);
        UniPoly<Int> cont = content(nested);
        nested = map_coeffs<UniPoly<Int>, UniPoly<Int>>(
            nested, [&](const UniPoly<Int>& c) { return exact_div(c, cont); });
        g = from_nested_outer_second(nested, "m", "x");
    }
    BiPoly<Int> fallback = normalize_curve(symmetrize_mx(g));

    if (have_primary && !(primary == fallback))
        throw construction_error(
            "curve extraction: (1,1)-entry route and entry-gcd route disagree for " + pres.source);

    BiPoly<Int> P = fallback;
    if (!P.even_in_first())
        throw construction_error("curve extraction: P is not a polynomial in t^2");
    CharacterCurve out;
    out.P = std::move(P);
    out.source = pres.source;
    return out;
}

AlexanderPoly alexander_poly(const Presentation& pres) {
    Word r = pres.relator();
    long total = 0;
    for (int8_t l : r.letters()) total += (l > 0) ? 1 : -1;
    if (total != 0)
        throw not_knot_group_error("relator has nonzero exponent sum under abelianization");
    // Fox derivative d/da, abelianized a, b -> T
    Laurent<Int> d;
    int exp = 0;
    for (int8_t l : r.letters()) {
        switch (l) {
            case 1:
                d.add_term(exp, Int(1));
                ++exp;
                break;
            case -1:
                --exp;
                d.add_term(exp, Int(-1));
                break;
            case 2: ++exp; break;
            case -2: --exp; break;
        }
    }
    UniPoly<Int> delta;
    if (d.zero()) {
        delta = UniPoly<Int>::constant(Int(1));
    } else {
        int lo = d.min_exp();
        std::vector<Int> c(d.max_exp() - lo + 1, Int(0));
        for (const auto& [e, v] : d.terms()) c[e - lo] = v;
        delta = UniPoly<Int>(std::move(c));
    }
    Int at1 = eval(delta, Int(1));
    if (at1 != 1 && at1 != -1)
        throw not_knot_group_error("Fox derivative does not normalize to delta(1) = 1");
    if (at1 == -1) delta = -delta;
    return AlexanderPoly{delta};
}

Int knot_determinant(const Presentation& pres) {
    Int v = eval(alexander_poly(pres).delta, Int(-1));
    return sgn(v) < 0 ? Int(-v) : v;
}

} // namespace charvar
