#include <doctest.h>

#include <random>

#include "charvar/poly_io.hpp"
#include "charvar/trace_engine.hpp"

using namespace charvar;

namespace {

Mat2<Fp> random_sl2(uint64_t p, std::mt19937_64& rng) {
    while (true) {
        Fp a(rng() % p, p), b(rng() % p, p), c(rng() % p, p);
        if (is_zero(a)) continue;
        Fp d = (one_like(a) + b * c) / a;
        return Mat2<Fp>{a, b, c, d};
    }
}

Word random_word(int maxlen, std::mt19937_64& rng) {
    int len = 1 + static_cast<int>(rng() % maxlen);
    std::vector<int8_t> l;
    for (int i = 0; i < len; ++i) {
        static const int8_t alphabet[4] = {1, -1, 2, -2};
        l.push_back(alphabet[rng() % 4]);
    }
    return Word(std::move(l));
}

Fp fp_of(const Int& c, uint64_t p) { return Fp::from_int(c, p); }

Fp eval_at(const TriplePoly& q, const Mat2<Fp>& A, const Mat2<Fp>& B) {
    uint64_t p = A.a.p;
    return eval_triple(q, A.trace(), B.trace(), (A * B).trace(),
                       [p](const Int& c) { return fp_of(c, p); });
}

} // namespace

TEST_CASE("word parsing and reduction") {
    CHECK(Word::parse("aA").empty());
    CHECK(Word::parse("abBA").empty());
    CHECK(Word::parse("abAB").size() == 4);
    CHECK(Word::parse("ab").inverse().text() == "BA");
    CHECK((Word::parse("ab") * Word::parse("BA")).empty());
    CHECK(Word::parse("Bab").cyclically_reduced().text() == "a");
    CHECK_THROWS_AS(Word::parse("abc"), degenerate_input_error);
}

TEST_CASE("basic traces") {
    TraceEngine eng;
    CHECK(to_canonical(eng.trace_of_word(Word::parse(""))) == "2");
    CHECK(to_canonical(eng.trace_of_word(Word::parse("a"))) == "s");
    CHECK(to_canonical(eng.trace_of_word(Word::parse("b"))) == "u");
    CHECK(to_canonical(eng.trace_of_word(Word::parse("ab"))) == "v");
    CHECK(to_canonical(eng.trace_of_word(Word::parse("aB"))) == "s*u + (-1)*v");
    CHECK(to_canonical(eng.trace_of_word(Word::parse("aa"))) == "s^2 + (-2)");
    // commutator: the reducibility polynomial shifted by 2
    CHECK(to_canonical(eng.trace_of_word(Word::parse("abAB"))) ==
          "s^2 + (-1)*s*u*v + u^2 + v^2 + (-2)");
}

TEST_CASE("numeric oracle: 200 random words x 20 random SL2 pairs") {
    TraceEngine eng;
    std::mt19937_64 rng(2024);
    const uint64_t p = 10007;
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(12, rng);
        TriplePoly q = eng.trace_of_word(w);
        CHECK(q.total_degree() <= static_cast<int>(w.size()));
        for (int j = 0; j < 20; ++j) {
            Mat2<Fp> A = random_sl2(p, rng), B = random_sl2(p, rng);
            CHECK(eval_at(q, A, B) == eval_word_numeric(w, A, B));
        }
    }
}

TEST_CASE("trace identities as polynomial identities") {
    TraceEngine eng;
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
        Word w = random_word(10, rng);
        CHECK(eng.trace_of_word(w) == eng.trace_of_word(w.inverse()));
        Word g = random_word(5, rng);
        CHECK(eng.trace_of_word(g * w * g.inverse()) == eng.trace_of_word(w));
        Word v = random_word(10, rng);
        // tr(uv) + tr(uv^-1) = tr(u) tr(v)
        CHECK(eng.trace_of_word(w * v) + eng.trace_of_word(w * v.inverse()) ==
              eng.trace_of_word(w) * eng.trace_of_word(v));
    }
}

TEST_CASE("eval_word_numeric rejects non-unimodular input") {
    Mat2<Fp> M{Fp(2, 7), Fp(0, 7), Fp(0, 7), Fp(2, 7)}; // det 4
    Mat2<Fp> I = Mat2<Fp>::identity_like(Fp(0, 7));
    CHECK_THROWS_AS(eval_word_numeric(Word::parse("a"), M, I), degenerate_input_error);
    CHECK(eval_word_numeric(Word::parse("a"), I, I) == Fp(2, 7));
    CHECK(eval_word_numeric(Word::parse("ab"), I, I) == Fp(2, 7));
}

TEST_CASE("to_knot_coords") {
    TraceEngine eng;
    // v -> t^2 - x
    CHECK(to_canonical(to_knot_coords(TriplePoly::variable(2))) == "(-1)*x + t^2");
    // su - v -> x
    CHECK(to_canonical(to_knot_coords(eng.trace_of_word(Word::parse("aB")))) == "x");
    // commutator - reducibility locus in knot coordinates
    BiPoly<Int> red = to_knot_coords(eng.trace_of_word(Word::parse("abAB")));
    CHECK(red == parse_bipoly("x^2 + (-1)*t^2*x + 2*t^2 + (-2)"));
    // minus 2 factors through the abelian line
    BiPoly<Int> shifted = red - BiPoly<Int>::constant(Int(2));
    BiPoly<Int> ab = parse_bipoly("x + (-2)");
    BiPoly<Int> other = parse_bipoly("x + 2 + (-1)*t^2");
    CHECK(shifted == ab * other);
}
