// cdu: c-differential uniformity toolkit for small finite fields.
//
// Exit codes: 0 success / all verifications passed, 1 verification failure,
// 2 usage or format error. Machine-readable output goes to stdout,
// diagnostics and progress to stderr.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "cdu/json_io.hpp"
#include "cdu/parallel.hpp"

using namespace cdu;

namespace {

struct FieldArgs {
    std::string p_str = "2";
    std::string n_str = "8";
    std::string modulus;
    bool aes_field = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p_str, "field characteristic (prime)");
        cmd->add_option("--n", n_str, "extension degree");
        cmd->add_option("--modulus", modulus,
                        "modulus, hex mask (0x11b) or comma list of coefficients c0,..,cn");
        cmd->add_flag("--aes-field", aes_field, "use GF(2^8) with the AES polynomial");
    }

    FieldPtr build() const {
        if (aes_field) return std::make_shared<const Field>(Field::aes_byte_field());
        unsigned p = unsigned(parse_int(p_str));
        unsigned n = unsigned(parse_int(n_str));
        if (modulus.empty()) return make_field(p, n);
        std::vector<unsigned> coeffs;
        if (modulus.find(',') != std::string::npos) {
            std::stringstream ss(modulus);
            std::string item;
            while (std::getline(ss, item, ',')) coeffs.push_back(unsigned(parse_int(item)));
        } else {
            std::uint64_t mask = parse_int(modulus);
            for (unsigned i = 0; i <= n; ++i) coeffs.push_back(unsigned((mask >> i) & 1));
        }
        return make_field(p, n, coeffs);
    }
};

// --fn mini-language: inv | mono:<e> | inv+mono:<t> | inv+lin:<file> |
// table:<file> | poly:<file>
FnTable build_fn(FieldPtr f, const std::string& spec) {
    auto starts = [&](const char* pfx) { return spec.rfind(pfx, 0) == 0; };
    if (spec == "inv") return tabulate_inverse(f);
    if (starts("mono:")) return tabulate_monomial(f, parse_int(spec.substr(5)));
    if (starts("inv+mono:")) {
        unsigned t = unsigned(parse_int(spec.substr(9)));
        if (t >= f->n()) throw std::invalid_argument("inv+mono: Frobenius index t must be < n");
        return tabulate_inverse_plus_frob(f, t);
    }
    if (starts("inv+lin:")) {
        std::ifstream in(spec.substr(8));
        if (!in) throw std::invalid_argument("cannot open " + spec.substr(8));
        json j;
        in >> j;
        return tabulate_inverse_plus_linearized(f, linpoly_from_json(j));
    }
    if (starts("table:")) {
        SboxRecord s = load_sbox_file(spec.substr(6));
        if (f->q() != (1u << s.width) || f->p() != 2)
            throw std::invalid_argument("table width does not match the field");
        return FnTable{f, s.table};
    }
    if (starts("poly:")) {
        std::ifstream in(spec.substr(5));
        if (!in) throw std::invalid_argument("cannot open " + spec.substr(5));
        json j;
        in >> j;
        return tabulate_poly(f, normalize_poly(*f, unipoly_from_json(j)));
    }
    throw std::invalid_argument("unknown --fn spec: " + spec);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
}

void emit_json(const json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

std::vector<Fe> parse_c_range(const Field& f, const std::string& c_str, bool all_c,
                              bool exclude_zero) {
    std::vector<Fe> cs;
    if (!c_str.empty()) {
        std::uint64_t c = parse_int(c_str);
        f.check_element(Fe(c));
        cs.push_back(Fe(c));
        return cs;
    }
    for (std::uint32_t c = 0; c < f.q(); ++c) {
        if (!all_c && c == 1) continue;
        if (exclude_zero && c == 0) continue;
        cs.push_back(Fe(c));
    }
    return cs;
}

int run_verify_gcd(const std::string& out_path) {
    json grid = json::array();
    bool all_ok = true;
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned t = 1; t <= 12; ++t)
            for (unsigned n = 1; n <= 12; ++n) {
                std::uint64_t closed = gcd_closed_form(p, t, n);
                std::uint64_t pt = 1, pn = 1;
                for (unsigned i = 0; i < t; ++i) pt *= p;
                for (unsigned i = 0; i < n; ++i) pn *= p;
                std::uint64_t direct = std::gcd(pt + 1, pn - 1);
                bool ok = closed == direct;
                all_ok &= ok;
                if (!ok)
                    grid.push_back(json{{"params", {{"p", p}, {"t", t}, {"n", n}}},
                                        {"closed", closed},
                                        {"direct", direct},
                                        {"verdict", "fail"}});
            }
    json j{{"suite", "gcd"}, {"checked", 3 * 12 * 12}, {"grid", grid},
           {"verdict", all_ok ? "pass" : "fail"}};
    emit_json(j, out_path);
    return all_ok ? 0 : 1;
}

int run_verify_bluher(const std::string& out_path) {
    json grid = json::array();
    bool all_ok = true;
    for (unsigned p : {2u, 3u}) {
        for (unsigned n = 1;; ++n) {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < n; ++i) q *= p;
            if (q > 1024) break;
            Field f = Field::make(p, n);
            for (unsigned t = 1; t <= n; ++t) {
                BluherCensus c = bluher_census(f, t);
                all_ok &= c.match();
                grid.push_back(to_json(c));
            }
        }
    }
    emit_json(json{{"suite", "bluher"}, {"grid", grid}, {"verdict", all_ok ? "pass" : "fail"}},
              out_path);
    return all_ok ? 0 : 1;
}

int run_verify_lemma_roots(unsigned max_q, const std::string& out_path) {
    json grid = json::array();
    bool all_ok = true;
    for (unsigned p = 2; p <= max_q; ++p) {
        if (![](unsigned v) {
                for (unsigned d = 2; d * d <= v; ++d)
                    if (v % d == 0) return false;
                return v >= 2;
            }(p))
            continue;
        for (unsigned n = 1;; ++n) {
            std::uint64_t q = 1;
            bool over = false;
            for (unsigned i = 0; i < n; ++i) {
                q *= p;
                if (q > max_q) over = true;
            }
            if (over) break;
            auto f = make_field(p, n);
            std::uint64_t quad_bad = 0, cubic_bad = 0;
            // quadratic: histogram oracle per (a,b), criterion per (a,b,c)
            {
                std::vector<std::uint32_t> cnt(f->q());
                for (std::uint32_t a = 1; a < f->q(); ++a)
                    for (std::uint32_t b = 0; b < f->q(); ++b) {
                        std::fill(cnt.begin(), cnt.end(), 0u);
                        for (std::uint32_t x = 0; x < f->q(); ++x) {
                            Fe v = f->add(f->mul(Fe(a), f->mul(Fe(x), Fe(x))), f->mul(Fe(b), Fe(x)));
                            ++cnt[f->neg(v)];
                        }
                        for (std::uint32_t c = 0; c < f->q(); ++c)
                            if (std::uint32_t(solve_quadratic(*f, Fe(a), Fe(b), Fe(c)).count) !=
                                cnt[c])
                                ++quad_bad;
                    }
            }
            if (f->p() == 2 && 2 * f->n() <= 16) {
                QuadraticExtension ext(*f);
                std::vector<std::uint32_t> cnt(f->q());
                for (std::uint32_t a = 0; a < f->q(); ++a) {
                    std::fill(cnt.begin(), cnt.end(), 0u);
                    for (std::uint32_t x = 0; x < f->q(); ++x)
                        ++cnt[f->add(f->mul(Fe(x), f->mul(Fe(x), Fe(x))), f->mul(Fe(a), Fe(x)))];
                    for (std::uint32_t b = 1; b < f->q(); ++b)
                        if (std::uint32_t(cubic_root_count_char2(*f, ext, Fe(a), Fe(b))) != cnt[b])
                            ++cubic_bad;
                }
            }
            bool ok = quad_bad == 0 && cubic_bad == 0;
            all_ok &= ok;
            grid.push_back(json{{"params", {{"p", p}, {"n", n}}},
                                {"quadratic_mismatches", quad_bad},
                                {"cubic_mismatches", cubic_bad},
                                {"verdict", ok ? "pass" : "fail"}});
        }
    }
    emit_json(json{{"suite", "lemma-roots"}, {"grid", grid}, {"verdict", all_ok ? "pass" : "fail"}},
              out_path);
    return all_ok ? 0 : 1;
}

int run_verify_main_thm(bool single, unsigned p, unsigned n, unsigned t, unsigned threads,
                        const std::string& out_path) {
    json grid = json::array();
    bool any_fail = false;
    auto push = [&](const BoundCheck& b) {
        grid.push_back(to_json(b));
        if (b.verdict == Verdict::Fail) any_fail = true;
        std::cerr << "main-thm p=" << b.p << " n=" << b.n << " t=" << b.t << ": observed "
                  << b.observed << " in [" << b.lower << ", " << b.upper << "] -> "
                  << (b.verdict == Verdict::Pass ? "pass"
                      : b.verdict == Verdict::Fail ? "FAIL" : "skipped")
                  << "\n";
    };
    if (single) {
        push(verify_main_thm(p, n, t, threads));
    } else {
        for (unsigned nn = 4; nn <= 10; ++nn)
            for (unsigned tt = 1; tt < nn; ++tt) push(verify_main_thm(2, nn, tt, threads));
        push(verify_main_thm(3, 4, 2, threads));
        push(verify_main_thm(3, 6, 3, threads));
    }
    emit_json(json{{"suite", "main-thm"}, {"grid", grid}, {"verdict", any_fail ? "fail" : "pass"}},
              out_path);
    return any_fail ? 1 : 0;
}

int run_verify_second_thm(bool single, unsigned n, int variant, unsigned threads,
                          const std::string& out_path) {
    json grid = json::array();
    bool any_fail = false;
    auto push = [&](const SecondThmCheck& c) {
        grid.push_back(to_json(c));
        if (c.verdict == Verdict::Fail) any_fail = true;
    };
    if (single) {
        if (variant < 0) {
            push(verify_second_thm(n, 0, threads));
            push(verify_second_thm(n, 1, threads));
        } else {
            push(verify_second_thm(n, unsigned(variant), threads));
        }
    } else {
        for (unsigned nn = 4; nn <= 9; ++nn) {
            push(verify_second_thm(nn, 0, threads));
            push(verify_second_thm(nn, 1, threads));
        }
    }
    emit_json(
        json{{"suite", "second-thm"}, {"grid", grid}, {"verdict", any_fail ? "fail" : "pass"}},
        out_path);
    return any_fail ? 1 : 0;
}

int run_verify_weil(unsigned samples, unsigned threads, const std::string& out_path) {
    (void)threads;
    json grid = json::array();
    bool all_ok = true;
    std::mt19937 rng(20240817);
    for (unsigned p : {3u, 5u})
        for (unsigned n : {2u, 3u, 4u}) {
            auto f = make_field(p, n);
            CharContext ctx(f);
            std::vector<LinearizedPoly> ls = {LinearizedPoly::identity(n),
                                              LinearizedPoly::frob_monomial(n, n - 1),
                                              LinearizedPoly::zero(n)};
            for (unsigned i = 0; i < samples; ++i) {
                LinearizedPoly l = LinearizedPoly::zero(n);
                for (auto& c : l.a) c = Fe(rng() % f->q());
                ls.push_back(l);
            }
            double worst = 0.0;
            std::uint64_t failures = 0, tested = 0;
            for (const auto& l : ls) {
                if (l.is_zero()) continue;  // S_alpha = q, N = q: identity is degenerate
                auto chk = verify_weil_identity(ctx, l);
                worst = std::max(worst, chk.worst_rel_err);
                failures += chk.failures.size();
                ++tested;
            }
            bool ok = failures == 0;
            all_ok &= ok;
            grid.push_back(json{{"params", {{"p", p}, {"n", n}}},
                                {"polys", tested},
                                {"worst_rel_err", worst},
                                {"failures", failures},
                                {"verdict", ok ? "pass" : "fail"}});
        }
    emit_json(json{{"suite", "weil"}, {"grid", grid}, {"verdict", all_ok ? "pass" : "fail"}},
              out_path);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"c-differential uniformity toolkit for small finite fields"};
    app.require_subcommand(1);
    app.fallthrough();  // --threads / --json are accepted after any subcommand
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
    bool json_flag = false, csv_flag = false;
    app.add_flag("--json", json_flag, "machine-readable JSON output (default where applicable)");
    app.add_flag("--csv", csv_flag, "CSV output (default for cddt and report)");

    // ---- field ----
    auto* cmd_field = app.add_subcommand("field", "print the field spec as JSON");
    FieldArgs fa_field;
    fa_field.attach(cmd_field);
    std::string out_field;
    cmd_field->add_option("--out", out_field);

    // ---- cddt ----
    auto* cmd_cddt = app.add_subcommand("cddt", "dump the full c-DDT");
    FieldArgs fa_cddt;
    fa_cddt.attach(cmd_cddt);
    std::string cddt_fn = "inv", cddt_c = "0", out_cddt;
    bool cddt_json = false;
    cmd_cddt->add_option("--fn", cddt_fn, "function spec");
    cmd_cddt->add_option("--c", cddt_c, "the multiplier c");
    cmd_cddt->add_option("--out", out_cddt);
    cmd_cddt->add_flag("--json", cddt_json, "JSON instead of CSV");

    // ---- cdu / spectrum ----
    auto* cmd_cdu = app.add_subcommand("cdu", "c-differential uniformity");
    auto* cmd_spectrum = app.add_subcommand("spectrum", "full per-c report");
    FieldArgs fa_cdu, fa_spec;
    fa_cdu.attach(cmd_cdu);
    fa_spec.attach(cmd_spectrum);
    std::string cdu_fn = "inv", cdu_c, out_cdu, spec_fn = "inv", out_spec;
    bool cdu_all = false, cdu_ex0 = false, spec_ex0 = false;
    cmd_cdu->add_option("--fn", cdu_fn, "function spec");
    cmd_cdu->add_option("--c", cdu_c, "single c");
    cmd_cdu->add_flag("--all-c", cdu_all, "scan every c including 1");
    cmd_cdu->add_flag("--exclude-zero", cdu_ex0, "scan c outside {0,1}");
    cmd_cdu->add_option("--out", out_cdu);
    cmd_spectrum->add_option("--fn", spec_fn, "function spec");
    cmd_spectrum->add_flag("--exclude-zero", spec_ex0);
    cmd_spectrum->add_option("--out", out_spec);

    // ---- scan-monomials ----
    auto* cmd_scan = app.add_subcommand("scan-monomials", "spectra of F + x^(p^i) for all i");
    FieldArgs fa_scan;
    fa_scan.attach(cmd_scan);
    std::string scan_fn = "inv", scan_sbox, out_scan;
    cmd_scan->add_option("--fn", scan_fn, "function spec");
    cmd_scan->add_option("--sbox", scan_sbox, "S-box JSON file instead of --fn");
    cmd_scan->add_option("--out", out_scan);

    // ---- interpolate ----
    auto* cmd_interp = app.add_subcommand("interpolate", "univariate polynomial of a table");
    FieldArgs fa_interp;
    fa_interp.attach(cmd_interp);
    std::string interp_sbox, interp_fn, out_interp;
    cmd_interp->add_option("--sbox", interp_sbox, "S-box JSON file");
    cmd_interp->add_option("--fn", interp_fn, "function spec");
    cmd_interp->add_option("--out", out_interp);

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "verification suites");
    cmd_verify->require_subcommand(1);
    std::string out_verify;
    cmd_verify->add_option("--out", out_verify);
    auto* v_gcd = cmd_verify->add_subcommand("gcd", "closed-form gcd vs integer gcd");
    auto* v_bluher = cmd_verify->add_subcommand("bluher", "root census vs closed formula");
    auto* v_lemma = cmd_verify->add_subcommand("lemma-roots", "root-count criteria vs enumeration");
    unsigned lemma_max_q = 256;
    v_lemma->add_option("--max-q", lemma_max_q, "largest field size to sweep");
    auto* v_main = cmd_verify->add_subcommand("main-thm", "perturbed-inverse bounds");
    std::string vm_p, vm_n, vm_t;
    v_main->add_option("--p", vm_p);
    v_main->add_option("--n", vm_n);
    v_main->add_option("--t", vm_t);
    auto* v_second = cmd_verify->add_subcommand("second-thm", "t = 0, 1 exact values");
    std::string vs_n;
    int vs_variant = -1;
    v_second->add_option("--n", vs_n);
    v_second->add_option("--variant", vs_variant, "0 for +x, 1 for +x^2 (default both)");
    auto* v_weil = cmd_verify->add_subcommand("weil", "|S|^2 = qN identity");
    unsigned weil_samples = 50;
    v_weil->add_option("--samples", weil_samples, "random polynomials per field");
    auto* v_all = cmd_verify->add_subcommand("all", "run every suite");

    // ---- report ----
    auto* cmd_report = app.add_subcommand("report", "DU / cDU / perturbed-cDU table");
    bool report_corpus = false, report_json = false;
    std::vector<std::string> report_sboxes;
    std::string out_report;
    cmd_report->add_flag("--corpus", report_corpus, "include the built-in corpus");
    cmd_report->add_option("--sbox", report_sboxes, "additional S-box JSON files");
    cmd_report->add_flag("--json", report_json);
    cmd_report->add_option("--out", out_report);

    // ---- charsum ----
    auto* cmd_charsum = app.add_subcommand("charsum", "character sums");
    cmd_charsum->require_subcommand(1);
    auto* ch_gauss = cmd_charsum->add_subcommand("gauss", "Gauss sums");
    FieldArgs fa_gauss;
    fa_gauss.attach(ch_gauss);
    std::string gauss_k, out_gauss;
    ch_gauss->add_option("--k", gauss_k, "single character index (default: all)");
    ch_gauss->add_option("--out", out_gauss);
    auto* ch_weil = cmd_charsum->add_subcommand("weil", "Weil sums of x L(x)");
    FieldArgs fa_weil;
    fa_weil.attach(ch_weil);
    std::string weil_lin, weil_alpha, out_weil;
    ch_weil->add_option("--lin", weil_lin, "LinearizedPoly JSON file")->required();
    ch_weil->add_option("--alpha", weil_alpha, "single alpha (default: all)");
    ch_weil->add_option("--out", out_weil);
    auto* ch_bounds = cmd_charsum->add_subcommand("bounds", "character-sum bounds vs brute force");
    FieldArgs fa_bounds;
    fa_bounds.attach(ch_bounds);
    std::string bounds_lin, out_bounds;
    ch_bounds->add_option("--lin", bounds_lin, "LinearizedPoly JSON file")->required();
    ch_bounds->add_option("--out", out_bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_field) {
            emit_json(to_json(fa_field.build()->spec()), out_field);
            return 0;
        }
        if (*cmd_cddt) {
            auto f = fa_cddt.build();
            FnTable F = build_fn(f, cddt_fn);
            Fe c = Fe(parse_int(cddt_c));
            f->check_element(c);
            Cddt t = cddt_table(F, c);
            if (cddt_json) {
                json rows = json::array();
                for (std::uint32_t a = 0; a < t.q; ++a) {
                    json row = json::array();
                    for (std::uint32_t b = 0; b < t.q; ++b) row.push_back(t.at(Fe(a), Fe(b)));
                    rows.push_back(row);
                }
                emit_json(json{{"c", c}, {"q", t.q}, {"counts", rows}}, out_cddt);
            } else {
                emit(cddt_csv(t), out_cddt);
            }
            return 0;
        }
        if (*cmd_cdu) {
            auto f = fa_cdu.build();
            FnTable F = build_fn(f, cdu_fn);
            if (!cdu_c.empty()) {
                Fe c = Fe(parse_int(cdu_c));
                f->check_element(c);
                RowWitness w = c_uniformity_witness(F, c);
                emit_json(json{{"c", c},
                               {"delta", w.value},
                               {"witness", {{"a", w.a}, {"b", w.b}}}},
                          out_cdu);
                return 0;
            }
            auto cs = parse_c_range(*f, "", cdu_all, cdu_ex0);
            CduReport rep = cdu_spectrum(F, cs, threads);
            emit_json(to_json(rep), out_cdu);
            return 0;
        }
        if (*cmd_spectrum) {
            auto f = fa_spec.build();
            FnTable F = build_fn(f, spec_fn);
            CduReport rep =
                cdu_spectrum(F, spec_ex0 ? CRange::ExcludeZeroOne : CRange::All, threads);
            emit_json(to_json(rep), out_spec);
            return 0;
        }
        if (*cmd_scan) {
            FnTable F = scan_sbox.empty() ? build_fn(fa_scan.build(), scan_fn)
                                          : sbox_fn(load_sbox_file(scan_sbox));
            MonomialScan ms = scan_monomials(F, threads);
            json per_i = json::array();
            for (const auto& e : ms.per_i)
                per_i.push_back(json{{"i", e.i},
                                     {"max_c_ne_1", e.max_c_ne_1},
                                     {"witness",
                                      {{"c", e.witness.c}, {"a", e.witness.a}, {"b", e.witness.b}}}});
            emit_json(json{{"per_i", per_i},
                           {"max", ms.max_c_ne_1},
                           {"argmax_i", ms.argmax_i},
                           {"min", ms.min_c_ne_1},
                           {"argmin_i", ms.argmin_i}},
                      out_scan);
            return 0;
        }
        if (*cmd_interp) {
            FnTable F = interp_sbox.empty() ? build_fn(fa_interp.build(), interp_fn)
                                            : sbox_fn(load_sbox_file(interp_sbox));
            UniPoly p = interpolate(F);
            json j = to_json(p);
            j["algebraic_degree"] = algebraic_degree(*F.field, p);
            emit_json(j, out_interp);
            return 0;
        }
        if (*cmd_report) {
            std::vector<SboxReport> rows;
            if (report_corpus || report_sboxes.empty())
                for (const auto& s : builtin_corpus()) {
                    std::cerr << "report: " << s.name << "\n";
                    rows.push_back(sbox_report(s, threads));
                }
            for (const auto& path : report_sboxes) {
                SboxRecord s = load_sbox_file(path);
                std::cerr << "report: " << s.name << "\n";
                rows.push_back(sbox_report(s, threads));
            }
            if (report_json) {
                json j = json::array();
                for (const auto& r : rows) j.push_back(to_json(r));
                emit_json(j, out_report);
            } else {
                emit(corpus_csv(rows), out_report);
            }
            return 0;
        }
        if (*cmd_verify) {
            if (*v_gcd) return run_verify_gcd(out_verify);
            if (*v_bluher) return run_verify_bluher(out_verify);
            if (*v_lemma) return run_verify_lemma_roots(lemma_max_q, out_verify);
            if (*v_main) {
                bool single = !vm_p.empty() || !vm_n.empty() || !vm_t.empty();
                unsigned p = vm_p.empty() ? 2 : unsigned(parse_int(vm_p));
                unsigned n = vm_n.empty() ? 8 : unsigned(parse_int(vm_n));
                unsigned t = vm_t.empty() ? 4 : unsigned(parse_int(vm_t));
                return run_verify_main_thm(single, p, n, t, threads, out_verify);
            }
            if (*v_second) {
                bool single = !vs_n.empty();
                unsigned n = vs_n.empty() ? 4 : unsigned(parse_int(vs_n));
                return run_verify_second_thm(single, n, vs_variant, threads, out_verify);
            }
            if (*v_weil) return run_verify_weil(weil_samples, threads, out_verify);
            if (*v_all) {
                int rc = 0;
                rc |= run_verify_gcd("");
                rc |= run_verify_bluher("");
                rc |= run_verify_lemma_roots(256, "");
                rc |= run_verify_main_thm(false, 0, 0, 0, threads, "");
                rc |= run_verify_second_thm(false, 0, -1, threads, "");
                rc |= run_verify_weil(50, threads, "");
                return rc ? 1 : 0;
            }
        }
        if (*cmd_charsum) {
            if (*ch_gauss) {
                auto f = fa_gauss.build();
                CharContext ctx(f);
                json arr = json::array();
                auto one = [&](std::uint32_t k) {
                    Cplx g = ctx.gauss_sum(k);
                    arr.push_back(json{{"k", k},
                                       {"G", {{"re", g.real()}, {"im", g.imag()}}},
                                       {"abs", std::abs(g)}});
                };
                if (!gauss_k.empty())
                    one(std::uint32_t(parse_int(gauss_k)));
                else
                    for (std::uint32_t k = 0; k < f->q() - 1; ++k) one(k);
                emit_json(arr, out_gauss);
                return 0;
            }
            if (*ch_weil) {
                auto f = fa_weil.build();
                CharContext ctx(f);
                std::ifstream in(weil_lin);
                if (!in) throw std::invalid_argument("cannot open " + weil_lin);
                json jl;
                in >> jl;
                LinearizedPoly l = linpoly_from_json(jl);
                json arr = json::array();
                if (!weil_alpha.empty()) {
                    Fe a = Fe(parse_int(weil_alpha));
                    f->check_element(a);
                    WeilReport r;
                    r.alpha = a;
                    r.s = weil_sum_xl(ctx, l, a);
                    r.n_alpha = tn_kernel_count(*f, l, a, 0).n_alpha;
                    arr.push_back(to_json(r));
                } else {
                    for (const auto& r : weil_reports(ctx, l)) arr.push_back(to_json(r));
                }
                emit_json(arr, out_weil);
                return 0;
            }
            if (*ch_bounds) {
                auto f = fa_bounds.build();
                std::ifstream in(bounds_lin);
                if (!in) throw std::invalid_argument("cannot open " + bounds_lin);
                json jl;
                in >> jl;
                Thm41Observed res = thm41_check(f, linpoly_from_json(jl), threads);
                emit_json(to_json(res), out_bounds);
                return res.upper_holds && res.lower_holds ? 0 : 1;
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
