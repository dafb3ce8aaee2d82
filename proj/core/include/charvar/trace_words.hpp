// Freely reduced words in the free group on two generators a, b.
// Text syntax: `a`, `A` (= a^-1), `b`, `B`, concatenated, e.g. "abAB".
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charvar/rings.hpp"

namespace charvar {

class Word {
public:
    // letter codes: a = 1, a^-1 = -1, b = 2, b^-1 = -2
    Word() = default;
    explicit Word(std::vector<int8_t> letters) : l_(reduce(std::move(letters))) {}

    static Word parse(const std::string& s) {
        std::vector<int8_t> l;
        l.reserve(s.size());
        for (char c : s) {
            switch (c) {
                case 'a': l.push_back(1); break;
                case 'A': l.push_back(-1); break;
                case 'b': l.push_back(2); break;
                case 'B': l.push_back(-2); break;
                case ' ': break;
                default:
                    throw degenerate_input_error(std::string("word syntax: unexpected character '") + c + "'");
            }
        }
        return Word(std::move(l));
    }

    std::string text() const {
        std::string s;
        s.reserve(l_.size());
        for (int8_t x : l_) {
            switch (x) {
                case 1: s += 'a'; break;
                case -1: s += 'A'; break;
                case 2: s += 'b'; break;
                case -2: s += 'B'; break;
            }
        }
        return s;
    }

    const std::vector<int8_t>& letters() const { return l_; }
    size_t size() const { return l_.size(); }
    bool empty() const { return l_.empty(); }

    Word inverse() const {
        std::vector<int8_t> r;
        r.reserve(l_.size());
        for (auto it = l_.rbegin(); it != l_.rend(); ++it) r.push_back(-*it);
        return Word(std::move(r));
    }

    Word operator*(const Word& o) const {
        std::vector<int8_t> r = l_;
        r.insert(r.end(), o.l_.begin(), o.l_.end());
        return Word(std::move(r));
    }

    Word rotated(size_t k) const { // cyclic rotation, then free reduction
        if (l_.empty()) return *this;
        k %= l_.size();
        std::vector<int8_t> r(l_.begin() + k, l_.end());
        r.insert(r.end(), l_.begin(), l_.begin() + k);
        return Word(std::move(r));
    }

    Word cyclically_reduced() const {
        std::vector<int8_t> r = l_;
        while (r.size() >= 2 && r.front() == -r.back()) {
            r.erase(r.begin());
            r.pop_back();
        }
        return Word(std::move(r));
    }

    // minimum over all cyclic rotations of the word and of its inverse;
    // trace is a class function invariant under inversion
    std::string canonical_class_key() const {
        Word c = cyclically_reduced();
        if (c.empty()) return "";
        std::string best;
        for (const Word& base : {c, c.inverse()}) {
            for (size_t k = 0; k < base.size(); ++k) {
                std::string t = base.rotated(k).text();
                if (best.empty() || t < best) best = t;
            }
        }
        return best;
    }

    bool operator==(const Word& o) const { return l_ == o.l_; }

private:
    static std::vector<int8_t> reduce(std::vector<int8_t> in) {
        std::vector<int8_t> out;
        out.reserve(in.size());
        for (int8_t x : in) {
            if (x == 0) throw degenerate_input_error("word letter code 0");
            if (!out.empty() && out.back() == -x)
                out.pop_back();
            else
                out.push_back(x);
        }
        return out;
    }

    std::vector<int8_t> l_;
};

} // namespace charvar
