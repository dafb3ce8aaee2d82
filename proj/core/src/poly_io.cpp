#include "charvar/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace charvar {

namespace {

std::string coeff_str(const Int& c) {
    if (sgn(c) < 0) return "(" + c.get_str() + ")";
    return c.get_str();
}

// one term from integer coefficient and (name, exponent) factors
std::string term_str(const Int& c, const std::vector<std::pair<std::string, int>>& mono) {
    std::string m;
    for (const auto& [name, e] : mono) {
        if (e == 0) continue;
        if (!m.empty()) m += "*";
        m += name;
        if (e != 1) m += "^" + std::to_string(e);
    }
    if (m.empty()) return coeff_str(c);
    if (c == 1) return m;
    return coeff_str(c) + "*" + m;
}

std::string join_terms(std::vector<std::string> terms) {
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
    return out;
}

} // namespace

std::string to_canonical(const UniPoly<Int>& f, const std::string& var) {
    std::vector<std::string> terms;
    for (int i = f.degree(); i >= 0; --i) {
        if (is_zero(f[i])) continue;
        terms.push_back(term_str(f[i], {{var, i}}));
    }
    return join_terms(std::move(terms));
}

std::string to_canonical(const BiPoly<Int>& f) {
    // sort by exponent of the second variable desc, then first desc
    std::vector<std::pair<std::pair<int, int>, Int>> items(f.terms().begin(), f.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::vector<std::string> terms;
    for (const auto& [k, c] : items)
        terms.push_back(term_str(c, {{f.vars().first, k.first}, {f.vars().second, k.second}}));
    return join_terms(std::move(terms));
}

std::string to_canonical(const TriplePoly& f) {
    std::vector<std::pair<TriplePoly::Key, Int>> items(f.terms().begin(), f.terms().end());
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::string> terms;
    for (const auto& [k, c] : items)
        terms.push_back(term_str(c, {{"s", k[0]}, {"u", k[1]}, {"v", k[2]}}));
    return join_terms(std::move(terms));
}

std::string to_canonical(const UniPoly<Fp>& f, const std::string& var) {
    return to_canonical(map_coeffs<Fp, Int>(f, [](const Fp& a) { return Int(a.v); }), var);
}

std::string to_canonical(const BiPoly<Fp>& f) {
    return to_canonical(map_coeffs_bi<Fp, Int>(f, [](const Fp& a) { return Int(a.v); }));
}

namespace {

struct ParsedTerm {
    Int coeff{1};
    std::map<std::string, int> exps;
};

std::vector<ParsedTerm> parse_terms(const std::string& input,
                                    const std::vector<std::string>& vars) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw degenerate_input_error("polynomial syntax: empty input");
    // split on '+' outside parentheses
    std::vector<std::string> raw;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            raw.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    raw.push_back(cur);

    std::vector<ParsedTerm> out;
    for (const auto& term : raw) {
        if (term.empty()) throw degenerate_input_error("polynomial syntax: empty term");
        if (term == "0") continue;
        ParsedTerm t;
        // split on '*' outside parens
        std::vector<std::string> factors;
        depth = 0;
        cur.clear();
        for (char c : term) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == '*' && depth == 0) {
                factors.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        factors.push_back(cur);
        for (std::string f : factors) {
            if (f.size() >= 2 && f.front() == '(' && f.back() == ')')
                f = f.substr(1, f.size() - 2);
            if (f.empty()) throw degenerate_input_error("polynomial syntax: empty factor");
            if (f[0] == '-' || std::isdigit(static_cast<unsigned char>(f[0]))) {
                for (size_t i = (f[0] == '-' ? 1 : 0); i < f.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(f[i])))
                        throw degenerate_input_error("polynomial syntax: bad integer '" + f + "'");
                if (f == "-") throw degenerate_input_error("polynomial syntax: bare sign");
                t.coeff *= Int(f);
            } else {
                std::string name = f;
                int e = 1;
                auto caret = f.find('^');
                if (caret != std::string::npos) {
                    name = f.substr(0, caret);
                    std::string es = f.substr(caret + 1);
                    if (es.empty()) throw degenerate_input_error("polynomial syntax: missing exponent");
                    for (char c : es)
                        if (!std::isdigit(static_cast<unsigned char>(c)))
                            throw degenerate_input_error("polynomial syntax: bad exponent '" + es + "'");
                    e = std::stoi(es);
                }
                if (std::find(vars.begin(), vars.end(), name) == vars.end())
                    throw degenerate_input_error("polynomial syntax: unknown variable '" + name + "'");
                t.exps[name] += e;
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

UniPoly<Int> parse_unipoly(const std::string& s, const std::string& var) {
    UniPoly<Int> f;
    for (const auto& t : parse_terms(s, {var})) {
        int e = t.exps.count(var) ? t.exps.at(var) : 0;
        f = f + UniPoly<Int>::monomial(t.coeff, e);
    }
    return f;
}

BiPoly<Int> parse_bipoly(const std::string& s, const std::string& v1, const std::string& v2) {
    BiPoly<Int> f(v1, v2);
    for (const auto& t : parse_terms(s, {v1, v2})) {
        int e1 = t.exps.count(v1) ? t.exps.at(v1) : 0;
        int e2 = t.exps.count(v2) ? t.exps.at(v2) : 0;
        f.add_term(e1, e2, t.coeff);
    }
    return f;
}

} // namespace charvar
