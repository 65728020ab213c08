#include "cdu/field.hpp"

#include <algorithm>
#include <numeric>

namespace cdu {

namespace {

// ---- dense polynomials over F_p, used only during field setup ----

using PolyP = std::vector<unsigned>;  // coefficients mod p, increasing degree

void ptrim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    // p prime, a != 0
    unsigned r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

PolyP pmul(const PolyP& a, const PolyP& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

PolyP pmod(PolyP a, const PolyP& m, unsigned p) {
    // m monic
    while (a.size() >= m.size()) {
        unsigned lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) {
                unsigned sub = (lead * m[i]) % p;
                a[shift + i] = (a[shift + i] + p - sub % p) % p;
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PolyP psub(PolyP a, const PolyP& b, unsigned p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    ptrim(a);
    return a;
}

// x^e mod m
PolyP ppow_x(std::uint64_t e, const PolyP& m, unsigned p) {
    PolyP result{1};
    PolyP base = pmod(PolyP{0, 1}, m, p);
    while (e) {
        if (e & 1) result = pmod(pmul(result, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

PolyP pgcd(PolyP a, PolyP b, unsigned p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        unsigned li = inv_mod_p(b.back(), p);
        PolyP bm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) bm[i] = (b[i] * li) % p;
        PolyP r = pmod(a, bm, p);
        a = b;
        b = r;
    }
    return a;
}

std::vector<unsigned> prime_factors(std::uint64_t v) {
    std::vector<unsigned> fs;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(unsigned(d));
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(unsigned(v));
    return fs;
}

bool is_prime(unsigned v) {
    if (v < 2) return false;
    for (unsigned d = 2; std::uint64_t(d) * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool poly_is_irreducible(const PolyP& f, unsigned p) {
    std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= p;
    // x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for each prime r | n
    PolyP x{0, 1};
    if (pmod(psub(ppow_x(pn, f, p), x, p), f, p) != PolyP{}) return false;
    for (unsigned r : prime_factors(n)) {
        std::uint64_t e = 1;
        for (std::size_t i = 0; i < n / r; ++i) e *= p;
        PolyP g = pgcd(f, psub(ppow_x(e, f, p), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

// multiplication of encoded elements straight off the modulus; used to
// bootstrap the exp/log tables
Fe slow_mul(Fe a, Fe b, unsigned p, unsigned n, const std::vector<unsigned>& modulus,
            const std::vector<std::uint32_t>& ppow) {
    if (p == 2) {
        std::uint32_t acc = 0, aa = a, bb = b;
        std::uint32_t modmask = 0;
        for (unsigned i = 0; i < n; ++i)
            if (modulus[i]) modmask |= 1u << i;
        while (bb) {
            if (bb & 1) acc ^= aa;
            bb >>= 1;
            aa <<= 1;
            if (aa & (1u << n)) aa = (aa ^ (1u << n)) ^ modmask;
        }
        return Fe(acc);
    }
    std::vector<unsigned> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        unsigned da = (a / ppow[i]) % p;
        if (!da) continue;
        for (unsigned j = 0; j < n; ++j) {
            unsigned db = (b / ppow[j]) % p;
            prod[i + j] = (prod[i + j] + da * db) % p;
        }
    }
    // reduce: x^n == -(modulus minus leading term)
    for (unsigned k = 2 * n - 2; k >= n; --k) {
        unsigned c = prod[k];
        if (c) {
            prod[k] = 0;
            for (unsigned i = 0; i < n; ++i)
                prod[k - n + i] = (prod[k - n + i] + (p - modulus[i] % p) * c) % p;
        }
        if (k == n) break;
    }
    std::uint32_t v = 0;
    for (unsigned i = 0; i < n; ++i) v += prod[i] * ppow[i];
    return Fe(v);
}

Fe slow_pow(Fe x, std::uint64_t e, unsigned p, unsigned n, const std::vector<unsigned>& mod,
            const std::vector<std::uint32_t>& ppow) {
    Fe r = 1, b = x;
    while (e) {
        if (e & 1) r = slow_mul(r, b, p, n, mod, ppow);
        b = slow_mul(b, b, p, n, mod, ppow);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::vector<unsigned> Field::irreducible_modulus(unsigned p, unsigned n, unsigned index) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) {
        qn *= p;
        if (qn > 65536) throw std::invalid_argument("q = p^n exceeds 2^16");
    }
    // candidates in increasing integer encoding of the non-leading coefficients
    for (std::uint64_t enc = 0; enc < qn; ++enc) {
        PolyP f(n + 1, 0);
        std::uint64_t v = enc;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = unsigned(v % p);
            v /= p;
        }
        f[n] = 1;
        if (poly_is_irreducible(f, p)) {
            if (index == 0) return f;
            --index;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<unsigned> Field::default_modulus(unsigned p, unsigned n) {
    return irreducible_modulus(p, n, 0);
}

Field Field::make(unsigned p, unsigned n) {
    FieldSpec s;
    s.p = p;
    s.n = n;
    s.modulus = default_modulus(p, n);
    s.generator = 0;  // filled in by build()
    Field f;
    f.build(s);
    return f;
}

Field Field::make(unsigned p, unsigned n, const std::vector<unsigned>& modulus) {
    FieldSpec s;
    s.p = p;
    s.n = n;
    s.modulus = modulus;
    s.generator = 0;
    Field f;
    f.build(s);
    return f;
}

Field Field::make(const FieldSpec& spec) {
    Field f;
    f.build(spec);
    return f;
}

void Field::build(const FieldSpec& spec) {
    p_ = spec.p;
    n_ = spec.n;
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
    if (n_ < 1 || n_ > 16) throw std::invalid_argument("extension degree out of range");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n_; ++i) {
        q *= p_;
        if (q > 65536) throw std::invalid_argument("q = p^n exceeds 2^16");
    }
    q_ = std::uint32_t(q);

    if (spec.modulus.size() != n_ + 1)
        throw std::invalid_argument("modulus must have n+1 coefficients");
    PolyP f(spec.modulus.begin(), spec.modulus.end());
    for (auto& c : f) c %= p_;
    if (f[n_] != 1) throw std::invalid_argument("modulus must be monic");
    if (!poly_is_irreducible(f, p_)) throw std::invalid_argument("modulus is not irreducible");

    spec_ = spec;
    spec_.modulus.assign(f.begin(), f.end());

    ppow_.resize(n_ + 1);
    ppow_[0] = 1;
    for (unsigned i = 1; i <= n_; ++i) ppow_[i] = ppow_[i - 1] * p_;

    // generator: validate the given one, or take the smallest primitive element
    auto factors = prime_factors(q_ - 1);
    auto is_generator = [&](Fe g) {
        if (g == 0) return false;
        if (q_ == 2) return g == 1;
        if (slow_pow(g, q_ - 1, p_, n_, spec_.modulus, ppow_) != 1) return false;
        for (unsigned r : factors)
            if (slow_pow(g, (q_ - 1) / r, p_, n_, spec_.modulus, ppow_) == 1) return false;
        return true;
    };
    if (spec.generator != 0) {
        if (std::uint32_t(spec.generator) >= q_ || !is_generator(spec.generator))
            throw std::invalid_argument("declared generator is not primitive");
    } else {
        Fe g = 1;
        while (!is_generator(g)) ++g;
        spec_.generator = g;
    }

    // exp/log
    exptab_.assign(2 * (q_ - 1), 0);
    logtab_.assign(q_, 0);
    Fe cur = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        exptab_[k] = cur;
        exptab_[k + (q_ - 1)] = cur;
        logtab_[cur] = k;
        cur = slow_mul(cur, spec_.generator, p_, n_, spec_.modulus, ppow_);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");

    negtab_.assign(q_, 0);
    for (std::uint32_t v = 0; v < q_; ++v) {
        std::uint32_t r = 0;
        for (unsigned i = 0; i < n_; ++i) {
            unsigned d = (v / ppow_[i]) % p_;
            r += ((p_ - d) % p_) * ppow_[i];
        }
        negtab_[v] = Fe(r);
    }

    if (p_ != 2 && q_ <= 1024) {
        addtab_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                addtab_[std::size_t(a) * q_ + b] = add_digits(Fe(a), Fe(b));
    }

    frob_exp_.resize(n_);
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t e = 1;
        for (unsigned k = 0; k < i; ++k) e = (e * p_) % (q_ - 1);
        frob_exp_[i] = std::uint32_t(e % (q_ - 1));
    }

    tracetab_.assign(q_, 0);
    for (std::uint32_t v = 0; v < q_; ++v) {
        Fe acc = Fe(v), y = Fe(v);
        for (unsigned i = 1; i < n_; ++i) {
            y = frobenius(y, 1);
            acc = add(acc, y);
        }
        if (std::uint32_t(acc) >= p_) throw std::logic_error("trace left the prime field");
        tracetab_[v] = acc;
    }

    if (p_ == 2) {
        astab_.assign(q_, 0);
        for (std::uint32_t y = 0; y < q_; ++y) {
            Fe v = mul(Fe(y), Fe(y)) ^ Fe(y);
            if (astab_[v] == 0) astab_[v] = Fe(y);  // keep smallest nonzero; v=0 -> y=0 fine
        }
    }
}

Fe Field::add_digits(Fe a, Fe b) const {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < n_; ++i) {
        unsigned d = ((a / ppow_[i]) + (b / ppow_[i])) % p_;
        r += d * ppow_[i];
    }
    return Fe(r);
}

Fe Field::from_digits(const std::vector<unsigned>& d) const {
    if (d.size() > n_) throw std::invalid_argument("too many digits");
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < d.size(); ++i) v += (d[i] % p_) * ppow_[i];
    return Fe(v);
}

// ---- quadratic extension ----

QuadraticExtension::QuadraticExtension(const Field& base)
    : ext_(Field::make(base.p(), 2 * base.n())) {
    const unsigned n = base.n();
    // find a root of the base modulus inside the extension
    Fe rho = 0;
    bool found = false;
    for (std::uint32_t cand = 0; cand < ext_.q(); ++cand) {
        Fe acc = 0, xp = 1;
        for (unsigned i = 0; i <= n; ++i) {
            acc = ext_.add(acc, ext_.mul(ext_.from_int(base.spec().modulus[i]), xp));
            if (i < n) xp = ext_.mul(xp, Fe(cand));
        }
        if (acc == 0) {
            rho = Fe(cand);
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("base modulus has no root in the quadratic extension");
    std::vector<Fe> rho_pow(n, 1);
    for (unsigned i = 1; i < n; ++i) rho_pow[i] = ext_.mul(rho_pow[i - 1], rho);
    embed_.assign(base.q(), 0);
    for (std::uint32_t v = 0; v < base.q(); ++v) {
        Fe acc = 0;
        for (unsigned i = 0; i < n; ++i) {
            unsigned d = base.digit(Fe(v), i);
            if (d) acc = ext_.add(acc, ext_.mul(ext_.from_int(d), rho_pow[i]));
        }
        embed_[v] = acc;
    }
}

// ---- small-degree solvers ----

QuadRoots solve_quadratic(const Field& f, Fe a, Fe b, Fe c) {
    if (a == 0) throw std::invalid_argument("solve_quadratic: leading coefficient is zero");
    QuadRoots out;
    if (f.p() == 2) {
        if (b == 0) {
            // a x^2 = -c has the unique root sqrt(c/a)
            out.count = 1;
            out.roots[0] = *f.sqrt(f.div(c, a));
            return out;
        }
        Fe d = f.div(f.mul(a, c), f.mul(b, b));
        if (f.trace(d) != 0) return out;  // no roots
        Fe scale = f.div(b, a);
        Fe y = *f.artin_schreier_root(d);
        out.count = 2;
        out.roots[0] = f.mul(scale, y);
        out.roots[1] = f.mul(scale, f.add(y, 1));
        if (out.roots[0] > out.roots[1]) std::swap(out.roots[0], out.roots[1]);
        return out;
    }
    Fe disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(a, c)));
    Fe inv2a = f.inv(f.mul(f.from_int(2), a));
    if (disc == 0) {
        out.count = 1;
        out.roots[0] = f.mul(f.neg(b), inv2a);
        return out;
    }
    if (!f.is_square(disc)) return out;
    Fe s = *f.sqrt(disc);
    out.count = 2;
    out.roots[0] = f.mul(f.add(f.neg(b), s), inv2a);
    out.roots[1] = f.mul(f.sub(f.neg(b), s), inv2a);
    if (out.roots[0] > out.roots[1]) std::swap(out.roots[0], out.roots[1]);
    return out;
}

namespace {

// cube predicate with the 0-is-a-cube convention
bool is_cube_or_zero(const Field& f, Fe x) {
    return x == 0 || f.is_kth_power(x, 3);
}

}  // namespace

int cubic_root_count_char2(const Field& f, const QuadraticExtension& ext, Fe a, Fe b) {
    if (f.p() != 2) throw std::invalid_argument("cubic criterion requires characteristic 2");
    if (b == 0) throw std::invalid_argument("cubic criterion requires b != 0");
    const unsigned n = f.n();
    Fe a3 = f.pow(a, 3);
    unsigned tr = f.trace(f.div(a3, f.mul(b, b)));
    unsigned tr1 = f.trace(1);
    if (tr != tr1) return 1;
    // resolvent t^2 + b t + a^3; roots live in the base field iff n is even here
    if (n % 2 == 0) {
        QuadRoots res = solve_quadratic(f, 1, b, a3);
        // Tr(a^3/b^2) = 0 guarantees solvability in the base field
        Fe t1 = res.roots[0];
        Fe t2 = res.count == 2 ? res.roots[1] : res.roots[0];
        return (is_cube_or_zero(f, t1) && is_cube_or_zero(f, t2)) ? 3 : 0;
    }
    const Field& e = ext.field();
    QuadRoots res = solve_quadratic(e, 1, ext.embed(b), ext.embed(a3));
    Fe t1 = res.roots[0];
    Fe t2 = res.count == 2 ? res.roots[1] : res.roots[0];
    return (is_cube_or_zero(e, t1) && is_cube_or_zero(e, t2)) ? 3 : 0;
}

CubicRoots cubic_roots_char2(const Field& f, const QuadraticExtension& ext, Fe a, Fe b) {
    CubicRoots out;
    out.count = cubic_root_count_char2(f, ext, a, b);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        Fe v = f.add(f.add(f.pow(Fe(x), 3), f.mul(a, Fe(x))), b);
        if (v == 0) out.roots.push_back(Fe(x));
    }
    return out;
}

std::uint32_t count_pow_pt1_eq_minus1(const Field& f, unsigned t) {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < t; ++i) e *= f.p();
    e += 1;  // p^t + 1
    std::uint64_t g = std::gcd(e % (f.q() - 1), std::uint64_t(f.q() - 1));
    Fe minus1 = f.neg(1);
    if (minus1 == 1) {
        // characteristic 2: x^(p^t+1) = 1
        return std::uint32_t(g);
    }
    return f.dlog(minus1) % g == 0 ? std::uint32_t(g) : 0;
}

}  // namespace cdu
