#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdu/cdiff.hpp"

namespace cdu {

struct SboxRecord {
    std::string name;
    unsigned width = 0;        // n bits
    std::vector<Fe> table;     // 2^n entries, each < 2^n
    std::string provenance;
    bool bijective = false;    // computed on construction / load

    void validate() const;     // throws with the offending index on bad entries
};

// The pinned analysis field per table width: the lexicographically smallest
// irreducible modulus (for width 8 that is the AES polynomial).
FieldPtr sbox_field(unsigned width);

FnTable sbox_fn(const SboxRecord& s);

// The six built-in S-boxes: Rectangle (4), Serpent #3 (4), an APN permutation
// (6), a second 6-bit APN representative, AES (8), Skipjack (8).
const std::vector<SboxRecord>& builtin_corpus();

struct SboxReport {
    std::string name;
    unsigned width = 0;
    std::uint32_t du = 0;            // classical differential uniformity
    std::uint32_t cdu_max = 0;       // max over c != 1
    std::uint32_t cdu_mono_max = 0;  // max over i in [0,n) and c != 1 of S + x^(2^i)
    unsigned mono_argmax = 0;
    bool bijective = false;
    std::vector<unsigned> modulus;   // field the report was computed in
};

SboxReport sbox_report(const SboxRecord& s, unsigned threads = 0);

}  // namespace cdu
