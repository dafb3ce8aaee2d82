#include "charvar/factor_bivar.hpp"

#include <algorithm>

namespace charvar {
namespace bfdetail {

namespace {

BiPoly<Ext> frob_bi(const BiPoly<Ext>& f) {
    return map_coeffs_bi<Ext, Ext>(f, [](const Ext& a) { return frobenius(a); });
}

} // namespace

std::vector<BiPoly<Fp>> factor_squarefree_via_extension(const BiPoly<Fp>& w) {
    uint64_t p = w.sample()->p;
    for (unsigned e = 2; e <= 4; ++e) {
        auto ctx = get_ext_ctx(p, e);
        BiPoly<Ext> we = map_coeffs_bi<Fp, Ext>(w, [&](const Fp& a) { return Ext::from_fp(a, ctx); });
        std::vector<BiPoly<Ext>> facs;
        try {
            facs = factor_squarefree_bi(we, true, false);
        } catch (const capacity_error&) {
            continue;
        }
        std::vector<BiPoly<Ext>> pool;
        pool.reserve(facs.size());
        for (auto& f : facs) pool.push_back(normalize_bi_monic(f));
        std::vector<BiPoly<Fp>> out;
        while (!pool.empty()) {
            BiPoly<Ext> start = pool.front();
            pool.erase(pool.begin());
            BiPoly<Ext> prod = start;
            BiPoly<Ext> cur = frob_bi(start);
            while (!(cur == start)) {
                auto it = std::find(pool.begin(), pool.end(), cur);
                if (it == pool.end())
                    throw error("bivariate factorization: frobenius orbit incomplete");
                prod = prod * cur;
                pool.erase(it);
                cur = frob_bi(cur);
            }
            BiPoly<Fp> g(w.vars().first, w.vars().second);
            for (const auto& [k, v] : prod.terms()) {
                Fp a;
                if (!to_prime_field(v, a))
                    throw error("bivariate factorization: orbit product has irrational coefficient");
                g.add_term(k.first, k.second, a);
            }
            out.push_back(std::move(g));
        }
        return out;
    }
    throw capacity_error("bivariate factorization: extension fallback exhausted");
}

} // namespace bfdetail
} // namespace charvar
