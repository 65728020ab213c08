#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdu {

// Canonical element encoding: an integer in [0, q) whose base-p digits are
// the polynomial-basis coordinates, least-significant digit = constant term.
using Fe = std::uint16_t;

struct FieldSpec {
    unsigned p = 2;
    unsigned n = 1;
    std::vector<unsigned> modulus;  // n+1 residues mod p, increasing degree, monic
    Fe generator = 0;

    bool operator==(const FieldSpec&) const = default;
};

// GF(p^n) for q = p^n <= 2^16. Multiplication, inversion, powers, discrete
// logs and Frobenius all run off exp/log tables built once at construction;
// the object is immutable afterwards and safe to share across threads.
class Field {
public:
    // Default modulus: the lexicographically smallest monic irreducible of
    // degree n over F_p (smallest integer encoding). For p=2, n=8 this is
    // x^8+x^4+x^3+x+1, i.e. the AES polynomial.
    static Field make(unsigned p, unsigned n);
    static Field make(unsigned p, unsigned n, const std::vector<unsigned>& modulus);
    static Field make(const FieldSpec& spec);
    static Field aes_byte_field() { return make(2, 8); }

    static std::vector<unsigned> default_modulus(unsigned p, unsigned n);
    // index = 0 gives the default modulus, index = 1 the next irreducible in
    // encoding order, and so on.
    static std::vector<unsigned> irreducible_modulus(unsigned p, unsigned n, unsigned index);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint32_t q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }
    Fe generator() const { return spec_.generator; }

    Fe add(Fe a, Fe b) const {
        if (p_ == 2) return a ^ b;
        if (!addtab_.empty()) return addtab_[std::size_t(a) * q_ + b];
        return add_digits(a, b);
    }
    Fe neg(Fe a) const { return negtab_[a]; }
    Fe sub(Fe a, Fe b) const {
        if (p_ == 2) return a ^ b;
        return add(a, negtab_[b]);
    }
    Fe mul(Fe a, Fe b) const {
        if (a == 0 || b == 0) return 0;
        return exptab_[std::uint32_t(logtab_[a]) + logtab_[b]];
    }
    Fe inv(Fe a) const {
        if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
        return exptab_[(q_ - 1) - logtab_[a]];
    }
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    // 0^0 = 1; 0^e = 0 for e > 0; exponents reduced mod q-1 for x != 0.
    Fe pow(Fe x, std::uint64_t e) const {
        if (x == 0) return e == 0 ? 1 : 0;
        std::uint64_t r = e % (q_ - 1);
        return exp_at(std::uint64_t(logtab_[x]) * r);
    }
    // x^(p^i), i taken mod n
    Fe frobenius(Fe x, unsigned i) const {
        if (x == 0) return 0;
        return exp_at(std::uint64_t(logtab_[x]) * frob_exp_[i % n_]);
    }
    unsigned trace(Fe x) const { return tracetab_[x]; }

    std::uint32_t dlog(Fe x) const {
        if (x == 0) throw std::domain_error("Field::dlog: log of zero");
        return logtab_[x];
    }
    // generator^k for any k (reduced mod q-1)
    Fe exp(std::uint64_t k) const { return exp_at(k); }

    // True iff x = y^k for some y; requires x != 0.
    bool is_kth_power(Fe x, std::uint64_t k) const {
        if (x == 0) throw std::domain_error("Field::is_kth_power: zero input");
        std::uint64_t g = std::gcd(k % (q_ - 1), std::uint64_t(q_ - 1));
        return logtab_[x] % g == 0;
    }
    // p odd: quadratic-residue test (0 counts as a square)
    bool is_square(Fe x) const { return x == 0 || logtab_[x] % 2 == 0; }
    // Square root. Unique for p = 2; for p odd returns nullopt on non-squares.
    std::optional<Fe> sqrt(Fe x) const {
        if (x == 0) return Fe(0);
        if (p_ == 2) return pow(x, q_ / 2);
        std::uint32_t l = logtab_[x];
        if (l % 2 != 0) return std::nullopt;
        // both exp(l/2) and its negative are roots; return the smaller encoding
        Fe r = exp_at(l / 2);
        return std::min(r, negtab_[r]);
    }
    // p = 2: a solution y of y^2 + y = v, or nullopt when Tr(v) = 1.
    std::optional<Fe> artin_schreier_root(Fe v) const {
        if (tracetab_[v] != 0) return std::nullopt;
        return astab_[v];
    }

    unsigned digit(Fe x, unsigned i) const { return (x / ppow_[i]) % p_; }
    Fe from_digits(const std::vector<unsigned>& d) const;
    // embed an integer as a prime-subfield constant
    Fe from_int(std::uint64_t v) const { return Fe(v % p_); }

    void check_element(Fe x) const {
        if (std::uint32_t(x) >= q_)
            throw std::invalid_argument("field element " + std::to_string(x) +
                                        " out of range for q=" + std::to_string(q_));
    }

private:
    Field() = default;
    void build(const FieldSpec& spec);
    Fe add_digits(Fe a, Fe b) const;
    Fe exp_at(std::uint64_t k) const { return exptab_[k % (q_ - 1)]; }

    FieldSpec spec_;
    unsigned p_ = 2, n_ = 1;
    std::uint32_t q_ = 2;
    std::vector<Fe> exptab_;          // size 2(q-1), doubled to skip one reduction
    std::vector<std::uint32_t> logtab_;
    std::vector<Fe> negtab_;
    std::vector<Fe> addtab_;          // odd p, q <= 1024 only
    std::vector<Fe> tracetab_;
    std::vector<Fe> astab_;           // p = 2: one root of y^2+y = v per Tr-0 v
    std::vector<std::uint32_t> ppow_; // p^i for i <= n
    std::vector<std::uint32_t> frob_exp_;  // p^i mod (q-1)
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(unsigned p, unsigned n) {
    return std::make_shared<const Field>(Field::make(p, n));
}
inline FieldPtr make_field(unsigned p, unsigned n, const std::vector<unsigned>& modulus) {
    return std::make_shared<const Field>(Field::make(p, n, modulus));
}

// F_{p^{2n}} together with the embedding of the base field. Needed for the
// cube tests of the char-2 cubic criterion when n is odd.
class QuadraticExtension {
public:
    explicit QuadraticExtension(const Field& base);
    const Field& field() const { return ext_; }
    Fe embed(Fe x) const { return embed_[x]; }

private:
    Field ext_;
    std::vector<Fe> embed_;
};

// ---- small-degree root machinery (Lemma-style criteria) ----

struct QuadRoots {
    int count = 0;            // 0, 1 or 2
    std::array<Fe, 2> roots{};
};

// a x^2 + b x + c over the field; a != 0. The count follows the trace /
// discriminant criterion; roots are materialized by closed form.
QuadRoots solve_quadratic(const Field& f, Fe a, Fe b, Fe c);

struct CubicRoots {
    int count = 0;            // criterion-based count: 0, 1 or 3
    std::vector<Fe> roots;    // roots found by evaluation over the field
};

// x^3 + a x + b over F_{2^n}, b != 0. Count comes from the trace + cube-test
// criterion (cube tests in F_{2^{2n}} for n odd, via `ext`).
int cubic_root_count_char2(const Field& f, const QuadraticExtension& ext, Fe a, Fe b);
CubicRoots cubic_roots_char2(const Field& f, const QuadraticExtension& ext, Fe a, Fe b);

// #roots of x^(p^t + 1) = -1, by closed form gcd when solvable (0 otherwise).
std::uint32_t count_pow_pt1_eq_minus1(const Field& f, unsigned t);

}  // namespace cdu
