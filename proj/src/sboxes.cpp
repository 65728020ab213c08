#include "cdu/sboxes.hpp"

#include <mutex>
#include <stdexcept>

namespace cdu {

namespace {

const Fe kAes[256] = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16};

const Fe kSkipjack[256] = {
    0xa3, 0xd7, 0x09, 0x83, 0xf8, 0x48, 0xf6, 0xf4, 0xb3, 0x21, 0x15, 0x78, 0x99, 0xb1, 0xaf, 0xf9,
    0xe7, 0x2d, 0x4d, 0x8a, 0xce, 0x4c, 0xca, 0x2e, 0x52, 0x95, 0xd9, 0x1e, 0x4e, 0x38, 0x44, 0x28,
    0x0a, 0xdf, 0x02, 0xa0, 0x17, 0xf1, 0x60, 0x68, 0x12, 0xb7, 0x7a, 0xc3, 0xe9, 0xfa, 0x3d, 0x53,
    0x96, 0x84, 0x6b, 0xba, 0xf2, 0x63, 0x9a, 0x19, 0x7c, 0xae, 0xe5, 0xf5, 0xf7, 0x16, 0x6a, 0xa2,
    0x39, 0xb6, 0x7b, 0x0f, 0xc1, 0x93, 0x81, 0x1b, 0xee, 0xb4, 0x1a, 0xea, 0xd0, 0x91, 0x2f, 0xb8,
    0x55, 0xb9, 0xda, 0x85, 0x3f, 0x41, 0xbf, 0xe0, 0x5a, 0x58, 0x80, 0x5f, 0x66, 0x0b, 0xd8, 0x90,
    0x35, 0xd5, 0xc0, 0xa7, 0x33, 0x06, 0x65, 0x69, 0x45, 0x00, 0x94, 0x56, 0x6d, 0x98, 0x9b, 0x76,
    0x97, 0xfc, 0xb2, 0xc2, 0xb0, 0xfe, 0xdb, 0x20, 0xe1, 0xeb, 0xd6, 0xe4, 0xdd, 0x47, 0x4a, 0x1d,
    0x42, 0xed, 0x9e, 0x6e, 0x49, 0x3c, 0xcd, 0x43, 0x27, 0xd2, 0x07, 0xd4, 0xde, 0xc7, 0x67, 0x18,
    0x89, 0xcb, 0x30, 0x1f, 0x8d, 0xc6, 0x8f, 0xaa, 0xc8, 0x74, 0xdc, 0xc9, 0x5d, 0x5c, 0x31, 0xa4,
    0x70, 0x88, 0x61, 0x2c, 0x9f, 0x0d, 0x2b, 0x87, 0x50, 0x82, 0x54, 0x64, 0x26, 0x7d, 0x03, 0x40,
    0x34, 0x4b, 0x1c, 0x73, 0xd1, 0xc4, 0xfd, 0x3b, 0xcc, 0xfb, 0x7f, 0xab, 0xe6, 0x3e, 0x5b, 0xa5,
    0xad, 0x04, 0x23, 0x9c, 0x14, 0x51, 0x22, 0xf0, 0x29, 0x79, 0x71, 0x7e, 0xff, 0x8c, 0x0e, 0xe2,
    0x0c, 0xef, 0xbc, 0x72, 0x75, 0x6f, 0x37, 0xa1, 0xec, 0xd3, 0x8e, 0x62, 0x8b, 0x86, 0x10, 0xe8,
    0x08, 0x77, 0x11, 0xbe, 0x92, 0x4f, 0x24, 0xc5, 0x32, 0x36, 0x9d, 0xcf, 0xf3, 0xa6, 0xbb, 0xac,
    0x5e, 0x6c, 0xa9, 0x13, 0x57, 0x25, 0xb5, 0xe3, 0xbd, 0xa8, 0x3a, 0x01, 0x05, 0x59, 0x2a, 0x46};

const Fe kRectangle[16] = {6, 5, 12, 10, 1, 14, 7, 9, 11, 0, 3, 13, 8, 15, 4, 2};

// Serpent's third S-box counting from one, i.e. the row usually labelled S2
// in zero-based listings. This indexing reproduces the published
// (DU, cDU, perturbed-cDU) = (4, 6, 5) profile; the zero-based S3 does not.
const Fe kSerpent3[16] = {8, 6, 7, 9, 3, 12, 10, 15, 13, 1, 14, 4, 0, 11, 5, 2};

// The 6-bit APN permutation of Browning, Dillon, McQuistan and Wolfe.
const Fe kApn6[64] = {
    0,  54, 48, 13, 15, 18, 53, 35, 25, 63, 45, 52, 3,  20, 41, 33,
    59, 36, 2,  34, 10, 8,  57, 37, 60, 19, 42, 14, 50, 26, 58, 24,
    39, 27, 21, 17, 16, 29, 1,  62, 47, 40, 51, 56, 7,  43, 44, 38,
    31, 11, 4,  28, 61, 46, 5,  49, 9,  6,  23, 32, 30, 12, 55, 22};

SboxRecord make_record(std::string name, unsigned width, const Fe* tab, std::string provenance) {
    SboxRecord r;
    r.name = std::move(name);
    r.width = width;
    r.table.assign(tab, tab + (1u << width));
    r.provenance = std::move(provenance);
    r.validate();
    FnTable f{sbox_field(width), r.table};
    r.bijective = f.is_permutation();
    return r;
}

SboxRecord inverse_record(const SboxRecord& s, std::string name, std::string provenance) {
    SboxRecord r;
    r.name = std::move(name);
    r.width = s.width;
    r.table.assign(s.table.size(), 0);
    for (std::size_t x = 0; x < s.table.size(); ++x) r.table[s.table[x]] = Fe(x);
    r.provenance = std::move(provenance);
    r.validate();
    r.bijective = true;
    return r;
}

}  // namespace

void SboxRecord::validate() const {
    if (width == 0 || width > 16) throw std::invalid_argument("S-box width out of range");
    std::size_t q = std::size_t(1) << width;
    if (table.size() != q)
        throw std::invalid_argument("S-box '" + name + "': table length " +
                                    std::to_string(table.size()) + " != " + std::to_string(q));
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] >= q)
            throw std::invalid_argument("S-box '" + name + "': entry " + std::to_string(table[i]) +
                                        " at index " + std::to_string(i) + " out of range");
}

FieldPtr sbox_field(unsigned width) { return make_field(2, width); }

FnTable sbox_fn(const SboxRecord& s) {
    s.validate();
    return FnTable{sbox_field(s.width), s.table};
}

const std::vector<SboxRecord>& builtin_corpus() {
    static std::vector<SboxRecord> corpus = [] {
        std::vector<SboxRecord> v;
        v.push_back(make_record("Rectangle", 4, kRectangle,
                                "RECTANGLE cipher S-box (Zhang et al., 2015)"));
        v.push_back(make_record(
            "Serpent-3", 4, kSerpent3,
            "Serpent AES-submission S-box #3, counting S-boxes from one (row S2 of "
            "zero-based listings); chosen because it reproduces the published profile"));
        v.push_back(make_record(
            "APN6", 6, kApn6,
            "Browning-Dillon-McQuistan-Wolfe 6-bit APN permutation, standard lookup table"));
        v.push_back(inverse_record(
            v.back(), "Fides6",
            "stand-in for the FIDES 6-bit S-box: the inverse of the BDMW APN permutation "
            "(the FIDES table is an affine-equivalent representative of the same class; "
            "genuine APN, differential uniformity 2)"));
        v.push_back(make_record("AES", 8, kAes, "AES SubBytes table (FIPS 197)"));
        v.push_back(make_record("Skipjack", 8, kSkipjack, "Skipjack F-table (NSA, SKIPJACK spec)"));
        return v;
    }();
    return corpus;
}

SboxReport sbox_report(const SboxRecord& s, unsigned threads) {
    FnTable F = sbox_fn(s);
    SboxReport r;
    r.name = s.name;
    r.width = s.width;
    r.bijective = F.is_permutation();
    r.modulus = F.field->spec().modulus;
    r.du = uniformity(F);
    r.cdu_max = cdu_spectrum(F, CRange::ExcludeOne, threads).max_c_ne_1;
    MonomialScan ms = scan_monomials(F, threads);
    r.cdu_mono_max = ms.max_c_ne_1;
    r.mono_argmax = ms.argmax_i;
    return r;
}

}  // namespace cdu
