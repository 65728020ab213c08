#pragma once

#include <cstdint>
#include <vector>

#include "cdu/field.hpp"
#include "cdu/poly.hpp"

namespace cdu {

// Full lookup table of an (n,n)-function over its field; values[x] = F(x).
struct FnTable {
    FieldPtr field;
    std::vector<Fe> values;

    bool is_permutation() const;
    void validate() const;  // length q, entries in range, field present
};

// x -> x^(q-2); maps 0 to 0 and otherwise inverts
FnTable tabulate_inverse(FieldPtr f);
FnTable tabulate_monomial(FieldPtr f, std::uint64_t e);
// x^(q-2) + x^(p^t)
FnTable tabulate_inverse_plus_frob(FieldPtr f, unsigned t);
FnTable tabulate_poly(FieldPtr f, const UniPoly& p);
FnTable tabulate_linearized(FieldPtr f, const LinearizedPoly& l);
// x^(q-2) + L(x)
FnTable tabulate_inverse_plus_linearized(FieldPtr f, const LinearizedPoly& l);
FnTable table_from_values(FieldPtr f, std::vector<Fe> values);

// pointwise field addition of x^(p^i) into F
FnTable add_frob_monomial(const FnTable& F, unsigned i);
FnTable add_pointwise(const FnTable& F, const FnTable& G);

// Lagrange interpolation over the full domain: the unique reduced polynomial
// of degree <= q-1 with eval = F everywhere. O(q^2).
UniPoly interpolate(const FnTable& F);

}  // namespace cdu
