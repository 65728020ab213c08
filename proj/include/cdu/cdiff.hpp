#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdu/fn_table.hpp"

namespace cdu {

// ---- c-difference distribution tables and c-differential uniformity ----
//
// For the c-derivative x -> F(x+a) - c F(x), the c-DDT entry at (a,b) counts
// its solutions; delta_{F,c} is the max entry, with a != 0 required exactly
// when c = 1. Scans are deterministic for any thread count: per-c results are
// computed independently and merged in ascending c order, and witnesses are
// the lexicographically smallest (c, a, b) attaining the max.

std::uint32_t cddt_entry(const FnTable& F, Fe c, Fe a, Fe b);

struct Cddt {
    Fe c = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> counts;  // q x q, row-major in a

    std::uint32_t at(Fe a, Fe b) const { return counts[std::size_t(a) * q + b]; }
};

// Full q x q table; materialized only on explicit request (memory q^2).
Cddt cddt_table(const FnTable& F, Fe c);

struct RowWitness {
    std::uint32_t value = 0;
    Fe a = 0;
    Fe b = 0;
};

// delta_{F,c} together with the lexicographically smallest (a,b) witness.
RowWitness c_uniformity_witness(const FnTable& F, Fe c);
std::uint32_t c_uniformity(const FnTable& F, Fe c);

// classical differential uniformity, delta_F = delta_{F,1}
std::uint32_t uniformity(const FnTable& F);

enum class CRange { All, ExcludeOne, ExcludeZeroOne };

struct SpectrumWitness {
    Fe c = 0;
    Fe a = 0;
    Fe b = 0;
};

struct CduReport {
    std::vector<Fe> cs;                    // scanned c values, ascending
    std::vector<std::uint32_t> delta;      // delta_{F,c}, parallel to cs
    std::vector<RowWitness> row;           // per-c witness, parallel to cs
    std::uint32_t max_scanned = 0;         // max over every scanned c
    std::uint32_t max_c_ne_1 = 0;          // max over scanned c != 1
    std::uint32_t max_c_ne_01 = 0;         // max over scanned c not in {0,1}
    SpectrumWitness witness_ne_1{};
    SpectrumWitness witness_ne_01{};

    std::uint32_t delta_for(Fe c) const;
};

CduReport cdu_spectrum(const FnTable& F, CRange range, unsigned threads = 0);
CduReport cdu_spectrum(const FnTable& F, const std::vector<Fe>& cs, unsigned threads = 0);

struct MonomialScanEntry {
    unsigned i = 0;                 // perturbation x^(p^i)
    std::uint32_t max_c_ne_1 = 0;
    SpectrumWitness witness{};
};

struct MonomialScan {
    std::vector<MonomialScanEntry> per_i;
    std::uint32_t max_c_ne_1 = 0;   // max over i of the per-i spectrum max
    unsigned argmax_i = 0;
    std::uint32_t min_c_ne_1 = 0;   // smallest per-i spectrum max (drops happen)
    unsigned argmin_i = 0;
};

// c-spectrum max (c != 1) of F + x^(p^i) for each i in [0, n)
MonomialScan scan_monomials(const FnTable& F, unsigned threads = 0);

enum class CClass { PcN, APcN, Uniform };

struct Classification {
    CClass kind = CClass::Uniform;
    std::uint32_t delta = 0;
};

Classification classify(const FnTable& F, Fe c);

// Cross-check predicate: for c != 1, F is PcN at c iff every c-derivative
// x -> F(x+a) - c F(x) is a permutation.
bool pcn_by_permutation_test(const FnTable& F, Fe c);

}  // namespace cdu
