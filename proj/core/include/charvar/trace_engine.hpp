// Fricke trace calculus: the trace of any word in two SL2 generators as an
// integer polynomial in s = tr a, u = tr b, v = tr ab, computed by memoized
// rewriting with tr(XY) = tr(X)tr(Y) - tr(XY^-1), tr(X^-1) = tr(X) and
// cyclic invariance.
#pragma once

#include <array>
#include <map>
#include <string>

#include "charvar/bipoly.hpp"
#include "charvar/mat2.hpp"
#include "charvar/trace_words.hpp"

namespace charvar {

class TriplePoly {
public:
    using Key = std::array<int, 3>; // exponents of (s, u, v)

    TriplePoly() = default;
    static TriplePoly constant(const Int& c) {
        TriplePoly q;
        q.add_term({0, 0, 0}, c);
        return q;
    }
    static TriplePoly variable(int which) { // 0:s 1:u 2:v
        TriplePoly q;
        Key k{0, 0, 0};
        k[which] = 1;
        q.add_term(k, Int(1));
        return q;
    }

    void add_term(const Key& k, const Int& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }
    const std::map<Key, Int>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    int total_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k[0] + k[1] + k[2]);
        return d;
    }
    bool operator==(const TriplePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TriplePoly& o) const { return !(*this == o); }

private:
    std::map<Key, Int> terms_;
};

TriplePoly operator+(const TriplePoly& a, const TriplePoly& b);
TriplePoly operator-(const TriplePoly& a, const TriplePoly& b);
TriplePoly operator-(const TriplePoly& a);
TriplePoly operator*(const TriplePoly& a, const TriplePoly& b);

// substitutes s = u = t, v = t^2 - x (so x becomes tr(a b^-1))
BiPoly<Int> to_knot_coords(const TriplePoly& q);

template <class K, class Conv>
K eval_triple(const TriplePoly& q, const K& s, const K& u, const K& v, Conv to_k) {
    K acc = zero_like(s);
    for (const auto& [k, c] : q.terms()) {
        K term = to_k(c);
        for (int i = 0; i < k[0]; ++i) term = term * s;
        for (int i = 0; i < k[1]; ++i) term = term * u;
        for (int i = 0; i < k[2]; ++i) term = term * v;
        acc = acc + term;
    }
    return acc;
}

// Memo cache is per-instance; distinct instances are safe to use from
// concurrent threads.
class TraceEngine {
public:
    TriplePoly trace_of_word(const Word& w);

private:
    TriplePoly compute(const Word& w);
    std::map<std::string, TriplePoly> memo_;
};

// trace of the literal matrix product w(A, B); throws on det != 1
template <class K>
K eval_word_numeric(const Word& w, const Mat2<K>& A, const Mat2<K>& B) {
    K one = one_like(A.a);
    if (!(A.det() == one) || !(B.det() == one))
        throw degenerate_input_error("eval_word_numeric: input matrix not in SL2");
    Mat2<K> acc = Mat2<K>::identity_like(A.a);
    for (int8_t x : w.letters()) {
        switch (x) {
            case 1: acc = acc * A; break;
            case -1: acc = acc * A.sl2_inverse(); break;
            case 2: acc = acc * B; break;
            case -2: acc = acc * B.sl2_inverse(); break;
        }
    }
    return acc.trace();
}

} // namespace charvar
