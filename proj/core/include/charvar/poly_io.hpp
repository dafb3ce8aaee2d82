// Canonical polynomial text format, emitted and parsed bit-exactly.
// Terms are sorted descending by exponent of the last-declared variable,
// then earlier ones; `*` is explicit; negative integers are parenthesized:
//   x^2 + (-1)*t^2*x + x + t^2 + (-1)
#pragma once

#include <string>

#include "charvar/bipoly.hpp"
#include "charvar/fp.hpp"
#include "charvar/trace_engine.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

std::string to_canonical(const UniPoly<Int>& f, const std::string& var);
std::string to_canonical(const BiPoly<Int>& f);
std::string to_canonical(const TriplePoly& f);
std::string to_canonical(const UniPoly<Fp>& f, const std::string& var);
std::string to_canonical(const BiPoly<Fp>& f);

UniPoly<Int> parse_unipoly(const std::string& s, const std::string& var);
BiPoly<Int> parse_bipoly(const std::string& s, const std::string& v1 = "t",
                         const std::string& v2 = "x");

} // namespace charvar
