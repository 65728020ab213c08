#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cdu/field.hpp"

namespace cdu {

// Reduced univariate polynomial over GF(p^n): exponents < q, strictly
// increasing, coefficients nonzero. Two reduced polynomials induce the same
// map iff they are identical.
struct UniPoly {
    std::vector<std::pair<std::uint32_t, Fe>> terms;  // (exponent, coefficient)

    static UniPoly monomial(std::uint32_t e, Fe coeff = 1) {
        UniPoly p;
        if (coeff != 0) p.terms.emplace_back(e, coeff);
        return p;
    }
};

// Sorts, merges duplicate exponents, folds exponents >= q into [1, q-1]
// (x^e and x^(e mod^* (q-1)) agree as maps, with e = 0 kept as the constant).
UniPoly normalize_poly(const Field& f, UniPoly p);

Fe eval_poly(const Field& f, const UniPoly& p, Fe x);

// Max base-p digit sum over exponents with nonzero coefficient; 0 for
// constants and the zero polynomial.
unsigned algebraic_degree(const Field& f, const UniPoly& p);

// L(x) = sum a[i] x^(p^i), an F_p-linear map; a has length exactly n.
struct LinearizedPoly {
    std::vector<Fe> a;

    static LinearizedPoly zero(unsigned n) { return {std::vector<Fe>(n, 0)}; }
    static LinearizedPoly identity(unsigned n) {
        LinearizedPoly l = zero(n);
        l.a[0] = 1;
        return l;
    }
    static LinearizedPoly frob_monomial(unsigned n, unsigned i, Fe coeff = 1) {
        LinearizedPoly l = zero(n);
        l.a.at(i) = coeff;
        return l;
    }
    bool is_zero() const {
        for (Fe c : a)
            if (c != 0) return false;
        return true;
    }
};

Fe eval_linearized(const Field& f, const LinearizedPoly& l, Fe x);

// Equivalent UniPoly (exponents p^i), for reporting and degree checks.
UniPoly linearized_to_poly(const Field& f, const LinearizedPoly& l);

struct LinSupport {
    std::vector<unsigned> indices;  // sorted i with a_i != 0
    unsigned delta = 0;             // gcd of the indices together with n
    unsigned support_gcd = 0;       // gcd of the indices alone (0 if support = {0})
};

// Throws std::domain_error for the zero polynomial.
LinSupport linearized_support(const Field& f, const LinearizedPoly& l);

}  // namespace cdu
