#pragma once

// Brute-force reference implementations used as test oracles. These must stay
// independent of the code paths they check: everything here counts or sums by
// direct enumeration.

#include <cstdint>
#include <map>
#include <vector>

#include "cdu/cdiff.hpp"
#include "cdu/field.hpp"

namespace oracle {

// roots of sum_i coeffs[i] x^i by evaluating at every field element
inline std::vector<cdu::Fe> poly_roots(const cdu::Field& f, const std::vector<cdu::Fe>& coeffs) {
    std::vector<cdu::Fe> roots;
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        cdu::Fe acc = 0, xp = 1;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            acc = f.add(acc, f.mul(coeffs[i], xp));
            xp = f.mul(xp, cdu::Fe(x));
        }
        if (acc == 0) roots.push_back(cdu::Fe(x));
    }
    return roots;
}

// #{x : F(x+a) - c F(x) = b} by direct enumeration
inline std::uint32_t cddt_count(const cdu::FnTable& F, cdu::Fe c, cdu::Fe a, cdu::Fe b) {
    const cdu::Field& f = *F.field;
    std::uint32_t cnt = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        cdu::Fe lhs = f.sub(F.values[f.add(cdu::Fe(x), a)], f.mul(c, F.values[x]));
        if (lhs == b) ++cnt;
    }
    return cnt;
}

// delta_{F,c} via per-(a,b) counting, the slow way
inline std::uint32_t cdu_direct(const cdu::FnTable& F, cdu::Fe c) {
    const cdu::Field& f = *F.field;
    std::uint32_t best = 0;
    std::uint32_t a0 = (c == 1) ? 1 : 0;
    for (std::uint32_t a = a0; a < f.q(); ++a)
        for (std::uint32_t b = 0; b < f.q(); ++b)
            best = std::max(best, cddt_count(F, c, cdu::Fe(a), cdu::Fe(b)));
    return best;
}

}  // namespace oracle
