#include "cdu/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cdu {

UniPoly normalize_poly(const Field& f, UniPoly p) {
    const std::uint32_t q = f.q();
    std::map<std::uint32_t, Fe> acc;
    for (auto [e, c] : p.terms) {
        if (c == 0) continue;
        f.check_element(c);
        std::uint32_t er = e;
        if (er >= q) er = (er - 1) % (q - 1) + 1;  // preserves the induced map
        auto [it, fresh] = acc.try_emplace(er, c);
        if (!fresh) {
            it->second = f.add(it->second, c);
            if (it->second == 0) acc.erase(it);
        }
    }
    UniPoly out;
    out.terms.assign(acc.begin(), acc.end());
    return out;
}

Fe eval_poly(const Field& f, const UniPoly& p, Fe x) {
    Fe acc = 0;
    for (auto [e, c] : p.terms) acc = f.add(acc, f.mul(c, f.pow(x, e)));
    return acc;
}

unsigned algebraic_degree(const Field& f, const UniPoly& p) {
    unsigned best = 0;
    for (auto [e, c] : p.terms) {
        if (c == 0 || e == 0) continue;
        unsigned w = 0;
        std::uint32_t v = e;
        while (v) {
            w += v % f.p();
            v /= f.p();
        }
        best = std::max(best, w);
    }
    return best;
}

Fe eval_linearized(const Field& f, const LinearizedPoly& l, Fe x) {
    if (l.a.size() != f.n()) throw std::invalid_argument("linearized polynomial has wrong length");
    Fe acc = 0;
    for (unsigned i = 0; i < l.a.size(); ++i)
        if (l.a[i] != 0) acc = f.add(acc, f.mul(l.a[i], f.frobenius(x, i)));
    return acc;
}

UniPoly linearized_to_poly(const Field& f, const LinearizedPoly& l) {
    UniPoly p;
    std::uint32_t e = 1;
    for (unsigned i = 0; i < l.a.size(); ++i) {
        if (l.a[i] != 0) p.terms.emplace_back(e, l.a[i]);
        e *= f.p();
    }
    return normalize_poly(f, p);
}

LinSupport linearized_support(const Field& f, const LinearizedPoly& l) {
    if (l.a.size() != f.n()) throw std::invalid_argument("linearized polynomial has wrong length");
    if (l.is_zero()) throw std::domain_error("support of the zero polynomial is undefined");
    LinSupport s;
    for (unsigned i = 0; i < l.a.size(); ++i)
        if (l.a[i] != 0) s.indices.push_back(i);
    unsigned g = 0;
    for (unsigned i : s.indices) g = std::gcd(g, i);
    s.support_gcd = g;
    s.delta = std::gcd(g, f.n());
    return s;
}

}  // namespace cdu
