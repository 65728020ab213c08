#include "cdu/cdiff.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdu/parallel.hpp"

namespace cdu {

namespace {

// One full row pass for a fixed (c, a): histogram b = F(x+a) - c F(x) over x,
// then pick the largest count with the smallest b. neg_cf[x] = -c F(x).
inline void scan_row_char2(const Fe* T, const Fe* neg_cf, std::uint32_t q, std::uint32_t a,
                           std::uint32_t* hist) {
    for (std::uint32_t x = 0; x < q; ++x) ++hist[T[x ^ a] ^ neg_cf[x]];
}

RowWitness scan_c(const FnTable& F, Fe c) {
    const Field& f = *F.field;
    const std::uint32_t q = f.q();
    const Fe* T = F.values.data();

    std::vector<Fe> neg_cf(q);
    for (std::uint32_t x = 0; x < q; ++x) neg_cf[x] = f.neg(f.mul(c, T[x]));

    std::vector<std::uint32_t> hist(q);
    RowWitness best;
    const std::uint32_t a_begin = (c == 1) ? 1 : 0;
    const bool char2 = f.p() == 2;

    for (std::uint32_t a = a_begin; a < q; ++a) {
        std::fill(hist.begin(), hist.end(), 0u);
        if (char2) {
            scan_row_char2(T, neg_cf.data(), q, a, hist.data());
        } else {
            for (std::uint32_t x = 0; x < q; ++x)
                ++hist[f.add(T[f.add(Fe(x), Fe(a))], neg_cf[x])];
        }
        std::uint32_t row_max = 0, row_b = 0;
        for (std::uint32_t b = 0; b < q; ++b)
            if (hist[b] > row_max) {
                row_max = hist[b];
                row_b = b;
            }
        if (row_max > best.value) best = RowWitness{row_max, Fe(a), Fe(row_b)};
    }
    return best;
}

std::vector<Fe> range_to_cs(const Field& f, CRange range) {
    std::vector<Fe> cs;
    cs.reserve(f.q());
    for (std::uint32_t c = 0; c < f.q(); ++c) {
        if (range != CRange::All && c == 1) continue;
        if (range == CRange::ExcludeZeroOne && c == 0) continue;
        cs.push_back(Fe(c));
    }
    return cs;
}

}  // namespace

std::uint32_t cddt_entry(const FnTable& F, Fe c, Fe a, Fe b) {
    const Field& f = *F.field;
    std::uint32_t cnt = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if (f.sub(F.values[f.add(Fe(x), a)], f.mul(c, F.values[x])) == b) ++cnt;
    return cnt;
}

Cddt cddt_table(const FnTable& F, Fe c) {
    const Field& f = *F.field;
    const std::uint32_t q = f.q();
    if (q > 4096) throw std::length_error("full c-DDT dump is limited to q <= 4096");
    Cddt t{c, q, std::vector<std::uint32_t>(std::size_t(q) * q, 0)};
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint32_t* row = &t.counts[std::size_t(a) * q];
        for (std::uint32_t x = 0; x < q; ++x)
            ++row[f.sub(F.values[f.add(Fe(x), Fe(a))], f.mul(c, F.values[x]))];
    }
    return t;
}

RowWitness c_uniformity_witness(const FnTable& F, Fe c) { return scan_c(F, c); }

std::uint32_t c_uniformity(const FnTable& F, Fe c) { return scan_c(F, c).value; }

std::uint32_t uniformity(const FnTable& F) { return c_uniformity(F, 1); }

std::uint32_t CduReport::delta_for(Fe c) const {
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    if (it == cs.end() || *it != c) throw std::out_of_range("c was not scanned");
    return delta[std::size_t(it - cs.begin())];
}

CduReport cdu_spectrum(const FnTable& F, const std::vector<Fe>& cs_in, unsigned threads) {
    CduReport r;
    r.cs = cs_in;
    std::sort(r.cs.begin(), r.cs.end());
    r.cs.erase(std::unique(r.cs.begin(), r.cs.end()), r.cs.end());
    r.delta.assign(r.cs.size(), 0);
    r.row.assign(r.cs.size(), RowWitness{});

    parallel_for(r.cs.size(), threads, [&](std::size_t i) {
        r.row[i] = scan_c(F, r.cs[i]);
        r.delta[i] = r.row[i].value;
    });

    bool have1 = false, have01 = false;
    for (std::size_t i = 0; i < r.cs.size(); ++i) {
        r.max_scanned = std::max(r.max_scanned, r.delta[i]);
        if (r.cs[i] != 1) {
            if (!have1 || r.delta[i] > r.max_c_ne_1) {
                r.max_c_ne_1 = r.delta[i];
                r.witness_ne_1 = SpectrumWitness{r.cs[i], r.row[i].a, r.row[i].b};
                have1 = true;
            }
        }
        if (r.cs[i] != 0 && r.cs[i] != 1) {
            if (!have01 || r.delta[i] > r.max_c_ne_01) {
                r.max_c_ne_01 = r.delta[i];
                r.witness_ne_01 = SpectrumWitness{r.cs[i], r.row[i].a, r.row[i].b};
                have01 = true;
            }
        }
    }
    return r;
}

CduReport cdu_spectrum(const FnTable& F, CRange range, unsigned threads) {
    return cdu_spectrum(F, range_to_cs(*F.field, range), threads);
}

MonomialScan scan_monomials(const FnTable& F, unsigned threads) {
    const Field& f = *F.field;
    MonomialScan out;
    for (unsigned i = 0; i < f.n(); ++i) {
        FnTable G = add_frob_monomial(F, i);
        CduReport rep = cdu_spectrum(G, CRange::ExcludeOne, threads);
        out.per_i.push_back(MonomialScanEntry{i, rep.max_c_ne_1, rep.witness_ne_1});
        if (i == 0 || rep.max_c_ne_1 > out.max_c_ne_1) {
            out.max_c_ne_1 = rep.max_c_ne_1;
            out.argmax_i = i;
        }
        if (i == 0 || rep.max_c_ne_1 < out.min_c_ne_1) {
            out.min_c_ne_1 = rep.max_c_ne_1;
            out.argmin_i = i;
        }
    }
    return out;
}

Classification classify(const FnTable& F, Fe c) {
    std::uint32_t d = c_uniformity(F, c);
    Classification out{CClass::Uniform, d};
    if (d == 1) out.kind = CClass::PcN;
    else if (d == 2) out.kind = CClass::APcN;
    return out;
}

bool pcn_by_permutation_test(const FnTable& F, Fe c) {
    const Field& f = *F.field;
    const std::uint32_t q = f.q();
    std::vector<bool> seen(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t x = 0; x < q; ++x) {
            Fe v = f.sub(F.values[f.add(Fe(x), Fe(a))], f.mul(c, F.values[x]));
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

}  // namespace cdu
