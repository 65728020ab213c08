#include "cdu/fn_table.hpp"

#include <stdexcept>

namespace cdu {

void FnTable::validate() const {
    if (!field) throw std::invalid_argument("function table has no field");
    if (values.size() != field->q())
        throw std::invalid_argument("function table must cover the whole field");
    for (Fe v : values) field->check_element(v);
}

bool FnTable::is_permutation() const {
    std::vector<bool> seen(values.size(), false);
    for (Fe v : values) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

FnTable tabulate_inverse(FieldPtr f) {
    FnTable t{std::move(f), {}};
    t.values.resize(t.field->q());
    t.values[0] = 0;
    for (std::uint32_t x = 1; x < t.field->q(); ++x) t.values[x] = t.field->inv(Fe(x));
    return t;
}

FnTable tabulate_monomial(FieldPtr f, std::uint64_t e) {
    FnTable t{std::move(f), {}};
    t.values.resize(t.field->q());
    for (std::uint32_t x = 0; x < t.field->q(); ++x) t.values[x] = t.field->pow(Fe(x), e);
    return t;
}

FnTable tabulate_inverse_plus_frob(FieldPtr f, unsigned t) {
    FnTable out = tabulate_inverse(f);
    return add_frob_monomial(out, t);
}

FnTable tabulate_poly(FieldPtr f, const UniPoly& p) {
    FnTable t{std::move(f), {}};
    t.values.resize(t.field->q());
    for (std::uint32_t x = 0; x < t.field->q(); ++x) t.values[x] = eval_poly(*t.field, p, Fe(x));
    return t;
}

FnTable tabulate_linearized(FieldPtr f, const LinearizedPoly& l) {
    FnTable t{std::move(f), {}};
    t.values.resize(t.field->q());
    for (std::uint32_t x = 0; x < t.field->q(); ++x)
        t.values[x] = eval_linearized(*t.field, l, Fe(x));
    return t;
}

FnTable tabulate_inverse_plus_linearized(FieldPtr f, const LinearizedPoly& l) {
    FnTable t = tabulate_inverse(f);
    for (std::uint32_t x = 0; x < t.field->q(); ++x)
        t.values[x] = t.field->add(t.values[x], eval_linearized(*t.field, l, Fe(x)));
    return t;
}

FnTable table_from_values(FieldPtr f, std::vector<Fe> values) {
    FnTable t{std::move(f), std::move(values)};
    t.validate();
    return t;
}

FnTable add_frob_monomial(const FnTable& F, unsigned i) {
    const Field& f = *F.field;
    std::uint64_t e = 1;
    for (unsigned k = 0; k < i % f.n(); ++k) e *= f.p();
    FnTable out{F.field, F.values};
    for (std::uint32_t x = 0; x < f.q(); ++x)
        out.values[x] = f.add(out.values[x], f.pow(Fe(x), e));
    return out;
}

FnTable add_pointwise(const FnTable& F, const FnTable& G) {
    if (!F.field || !G.field || !(F.field->spec() == G.field->spec()))
        throw std::invalid_argument("function tables live in different fields");
    FnTable out{F.field, F.values};
    for (std::size_t x = 0; x < out.values.size(); ++x)
        out.values[x] = F.field->add(out.values[x], G.values[x]);
    return out;
}

UniPoly interpolate(const FnTable& F) {
    F.validate();
    const Field& f = *F.field;
    const std::uint32_t q = f.q();
    // over the full domain the interpolating polynomial collapses to
    //   c_0 = F(0),   c_j = -sum_{a!=0} F(a) a^(q-1-j)  (1 <= j <= q-2),
    //   c_{q-1} = -sum_a F(a)
    UniPoly p;
    if (F.values[0] != 0) p.terms.emplace_back(0, F.values[0]);
    for (std::uint32_t j = 1; j + 1 < q; ++j) {
        Fe s = 0;
        for (std::uint32_t a = 1; a < q; ++a) {
            if (F.values[a] == 0) continue;
            s = f.add(s, f.mul(F.values[a], f.exp(std::uint64_t(f.dlog(Fe(a))) * (q - 1 - j))));
        }
        if (s != 0) p.terms.emplace_back(j, f.neg(s));
    }
    Fe s = 0;
    for (std::uint32_t a = 0; a < q; ++a) s = f.add(s, F.values[a]);
    if (s != 0) p.terms.emplace_back(q - 1, f.neg(s));
    return p;
}

}  // namespace cdu
