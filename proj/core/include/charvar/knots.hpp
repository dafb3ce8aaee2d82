// Two-bridge knot presentations, the character-variety plane curve P(t, x)
// obtained by generic-matrix elimination, and Alexander polynomials by Fox
// calculus.
#pragma once

#include <numeric>
#include <string>

#include "charvar/bipoly.hpp"
#include "charvar/trace_words.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

struct TwoBridgeFraction {
    long beta;
    long alpha;

    TwoBridgeFraction(long beta_, long alpha_) : beta(beta_), alpha(alpha_) {
        if (alpha < 3 || alpha % 2 == 0)
            throw degenerate_input_error("two-bridge fraction: alpha must be odd and >= 3");
        if (beta <= 0 || beta >= alpha)
            throw degenerate_input_error("two-bridge fraction: need 0 < beta < alpha");
        if (std::gcd(beta, alpha) != 1)
            throw degenerate_input_error("two-bridge fraction: beta and alpha must be coprime");
    }
    static TwoBridgeFraction parse(const std::string& s);
    std::string text() const { return std::to_string(beta) + "/" + std::to_string(alpha); }
};

// relator a w b^-1 w^-1, i.e. a w = w b, with a and b meridians
struct Presentation {
    Word w;
    Word relator() const;
    std::string source; // e.g. the fraction text
};

// w = b^(e_1) a^(e_2) b^(e_3) ... a^(e_{alpha-1}), e_i = (-1)^floor(i beta / alpha)
Presentation two_bridge_presentation(const TwoBridgeFraction& f);

struct CharacterCurve {
    BiPoly<Int> P; // content 1, positive leading coefficient, even in t
    std::string normalization = "primitive, positive leading coefficient";
    std::string source;
};

// Generic matrices A = [[m,1],[0,1/m]], B = [[m,0],[2-x,1/m]] (so that
// tr A = tr B = m + 1/m and tr(A B^-1) = x); the defining polynomial of the
// irreducible-character curve is read off A W - W B, symmetrized in m.
CharacterCurve character_curve(const Presentation& pres);

struct AlexanderPoly {
    UniPoly<Int> delta; // normalized: delta(1) = 1, lowest coefficient nonzero
};

AlexanderPoly alexander_poly(const Presentation& pres);

// |Delta(-1)|, the order of the homology of the double branched cover
Int knot_determinant(const Presentation& pres);

} // namespace charvar
