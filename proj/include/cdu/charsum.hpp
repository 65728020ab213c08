#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdu/field.hpp"
#include "cdu/poly.hpp"

namespace cdu {

using Cplx = std::complex<double>;

// Additive and multiplicative characters of GF(q), with cached roots of
// unity. The additive character is chi_1(x) = e^(2*pi*i*Tr(x)/p); the k-th
// multiplicative character sends g^l to e^(2*pi*i*k*l/(q-1)).
class CharContext {
public:
    explicit CharContext(FieldPtr f);

    const Field& field() const { return *f_; }
    FieldPtr field_ptr() const { return f_; }

    Cplx additive(Fe x) const { return zeta_p_[f_->trace(x)]; }
    Cplx multiplicative(std::uint32_t k, Fe x) const;  // throws on x = 0

    // G(psi_k, chi_1) over F_q^*; |G| = sqrt(q) for k != 0
    Cplx gauss_sum(std::uint32_t k) const;

private:
    FieldPtr f_;
    std::vector<Cplx> zeta_p_;    // e^(2 pi i j / p)
    std::vector<Cplx> zeta_q1_;   // e^(2 pi i j / (q-1))
};

// S_alpha = sum_x chi_1(alpha x L(x)), the Weil sum of the DO polynomial
// alpha x L(x), by direct summation.
Cplx weil_sum_xl(const CharContext& ctx, const LinearizedPoly& l, Fe alpha);

struct KernelCount {
    std::uint64_t n_alpha = 0;  // #solutions of T_n(w) = 0
    unsigned log_p = 0;         // log_p(N_alpha); kernels are F_p-subspaces
    std::optional<unsigned> gamma;  // gamma with N = p^(delta*gamma), when integral
};

// Kernel size of the F_p-linear adjoint map controlling |S_alpha|:
//   T_n(w) = 2 c_0 w + sum_{i>=1} [ c_i w^(p^i) + (c_i w)^(p^(n-i)) ],
// with c_i = alpha a_i. Computed by rank over F_p. `delta` is the support
// gcd of L (with n); pass 0 to skip the gamma decomposition.
KernelCount tn_kernel_count(const Field& f, const LinearizedPoly& l, Fe alpha, unsigned delta);

struct WeilReport {
    Fe alpha = 0;
    Cplx s{};
    std::uint64_t n_alpha = 0;
    std::optional<unsigned> gamma;
    std::optional<int> mu;  // sign when S_alpha is real (|Im| below tolerance)
};

std::vector<WeilReport> weil_reports(const CharContext& ctx, const LinearizedPoly& l);

struct WeilIdentityCheck {
    bool pass = false;
    double worst_rel_err = 0.0;
    std::vector<Fe> failures;  // alpha where | |S|^2 - q N | > tol * q N
};

// | |S_alpha|^2 - q N_alpha | <= 1e-6 * q N_alpha for every alpha != 0
WeilIdentityCheck verify_weil_identity(const CharContext& ctx, const LinearizedPoly& l);

struct Thm41Bounds {
    bool degenerate = false;   // L = 0
    unsigned delta = 0;        // gcd(support, n)
    unsigned epsilon = 0;      // gcd {2 s_0, s_0+s_i, s_0+n-s_i, n}, reported only
    std::uint64_t n_max = 1;   // max_{alpha != 0} N_alpha
    double upper = 0.0;        // (p N)^(n/2)
    bool c2_satisfied = false;
    std::string c2_reason;
    std::optional<double> lower;   // real part of the signed character sum
    double lower_imag = 0.0;       // must vanish under the conditions
    std::vector<std::string> anomalies;
};

Thm41Bounds thm41_bounds(const CharContext& ctx, const LinearizedPoly& l);

struct Thm41Observed {
    Thm41Bounds bounds;
    std::uint32_t observed = 0;  // brute-force max_{c != 1} delta_{G,c}, G = x^(q-2) + L
    bool upper_holds = false;
    bool lower_holds = true;     // vacuous when no lower bound
};

Thm41Observed thm41_check(FieldPtr f, const LinearizedPoly& l, unsigned threads = 0);

}  // namespace cdu
