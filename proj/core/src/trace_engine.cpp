#include "charvar/trace_engine.hpp"

namespace charvar {

TriplePoly operator+(const TriplePoly& a, const TriplePoly& b) {
    TriplePoly r = a;
    for (const auto& [k, c] : b.terms()) r.add_term(k, c);
    return r;
}

TriplePoly operator-(const TriplePoly& a) {
    TriplePoly r;
    for (const auto& [k, c] : a.terms()) r.add_term(k, -c);
    return r;
}

TriplePoly operator-(const TriplePoly& a, const TriplePoly& b) { return a + (-b); }

TriplePoly operator*(const TriplePoly& a, const TriplePoly& b) {
    TriplePoly r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return r;
}

BiPoly<Int> to_knot_coords(const TriplePoly& q) {
    BiPoly<Int> out("t", "x");
    for (const auto& [k, c] : q.terms()) {
        int st = k[0] + k[1]; // s and u both become t
        int kv = k[2];
        // (t^2 - x)^kv expanded binomially
        for (int m = 0; m <= kv; ++m) {
            Int bin;
            mpz_bin_uiui(bin.get_mpz_t(), kv, m);
            Int coef = c * bin;
            if ((kv - m) % 2 != 0) coef = -coef;
            out.add_term(st + 2 * m, kv - m, coef);
        }
    }
    return out;
}

TriplePoly TraceEngine::trace_of_word(const Word& w) {
    Word c = w.cyclically_reduced();
    std::string key = c.canonical_class_key();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    TriplePoly res = compute(c);
    memo_.emplace(std::move(key), res);
    return res;
}

TriplePoly TraceEngine::compute(const Word& w) {
    const auto& l = w.letters();
    size_t L = l.size();
    if (L == 0) return TriplePoly::constant(Int(2));
    if (L == 1) return TriplePoly::variable(std::abs(l[0]) == 1 ? 0 : 1);

    // adjacent equal letters (cyclically): tr(x * xR) = tr(x) tr(xR) - tr(R)
    for (size_t i = 0; i < L; ++i) {
        if (l[i] == l[(i + 1) % L]) {
            Word v = w.rotated(i);
            Word x(std::vector<int8_t>{v.letters()[0]});
            Word xR(std::vector<int8_t>(v.letters().begin() + 1, v.letters().end()));
            Word R(std::vector<int8_t>(v.letters().begin() + 2, v.letters().end()));
            return trace_of_word(x) * trace_of_word(xR) - trace_of_word(R);
        }
    }

    // a generator appearing with both signs: w ~ x U x^-1 V, split there
    for (size_t i = 0; i < L; ++i) {
        bool both = false;
        for (size_t j = 0; j < L; ++j)
            if (l[j] == -l[i]) both = true;
        if (!both) continue;
        Word v = w.rotated(i);
        const auto& vl = v.letters();
        size_t j = 1;
        while (j < vl.size() && vl[j] != -vl[0]) ++j;
        if (j >= vl.size()) continue; // rotation reduced; try next pivot
        Word X(std::vector<int8_t>(vl.begin(), vl.begin() + j));
        Word Y(std::vector<int8_t>(vl.begin() + j, vl.end()));
        return trace_of_word(X) * trace_of_word(Y) - trace_of_word(X * Y.inverse());
    }

    // single-signed alternation: w = (x y)^n with x, y in {a,A} x {b,B}
    if (L == 2) {
        bool mixed_sign = (l[0] > 0) != (l[1] > 0);
        TriplePoly v = TriplePoly::variable(2);
        if (!mixed_sign) return v; // tr(ab) = tr(a^-1 b^-1 cyclic inverse) = v
        TriplePoly s = TriplePoly::variable(0), u = TriplePoly::variable(1);
        return s * u - v; // tr(a b^-1) = su - v
    }
    Word M(std::vector<int8_t>(l.begin(), l.begin() + 2));
    Word Mn1(std::vector<int8_t>(l.begin(), l.end() - 2));
    Word Mn2(std::vector<int8_t>(l.begin(), l.end() - 4));
    return trace_of_word(M) * trace_of_word(Mn1) - trace_of_word(Mn2);
}

} // namespace charvar
