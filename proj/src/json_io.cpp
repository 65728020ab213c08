#include "cdu/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cdu {

json to_json(const FieldSpec& s) {
    return json{{"p", s.p}, {"n", s.n}, {"modulus", s.modulus}, {"generator", s.generator}};
}

FieldSpec field_spec_from_json(const json& j) {
    FieldSpec s;
    s.p = j.at("p").get<unsigned>();
    s.n = j.at("n").get<unsigned>();
    s.modulus = j.at("modulus").get<std::vector<unsigned>>();
    if (j.contains("generator")) s.generator = j.at("generator").get<Fe>();
    return s;
}

json to_json(const UniPoly& p) {
    json terms = json::array();
    for (auto [e, c] : p.terms) terms.push_back(json{{"e", e}, {"c", c}});
    return json{{"terms", terms}};
}

UniPoly unipoly_from_json(const json& j) {
    UniPoly p;
    for (const auto& t : j.at("terms"))
        p.terms.emplace_back(t.at("e").get<std::uint32_t>(), t.at("c").get<Fe>());
    return p;
}

json to_json(const LinearizedPoly& l) { return json{{"a", l.a}}; }

LinearizedPoly linpoly_from_json(const json& j) {
    return LinearizedPoly{j.at("a").get<std::vector<Fe>>()};
}

json to_json(const SboxRecord& s) {
    return json{{"name", s.name},
                {"n", s.width},
                {"table", s.table},
                {"provenance", s.provenance},
                {"bijective", s.bijective}};
}

SboxRecord sbox_from_json(const json& j) {
    SboxRecord s;
    s.name = j.value("name", "sbox");
    s.width = j.at("n").get<unsigned>();
    s.table = j.at("table").get<std::vector<Fe>>();
    if (j.contains("provenance")) s.provenance = j.at("provenance").get<std::string>();
    s.validate();
    s.bijective = FnTable{sbox_field(s.width), s.table}.is_permutation();
    return s;
}

SboxRecord load_sbox_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open S-box file: " + path);
    json j;
    in >> j;
    return sbox_from_json(j);
}

json to_json(const CduReport& r) {
    json per_c = json::object();
    for (std::size_t i = 0; i < r.cs.size(); ++i) per_c[std::to_string(r.cs[i])] = r.delta[i];
    json witness{{"c", r.witness_ne_1.c}, {"a", r.witness_ne_1.a}, {"b", r.witness_ne_1.b}};
    return json{{"per_c", per_c},
                {"max_scanned", r.max_scanned},
                {"max_c_ne_1", r.max_c_ne_1},
                {"max_c_ne_01", r.max_c_ne_01},
                {"witness", witness}};
}

json to_json(const SboxReport& r) {
    return json{{"name", r.name},         {"n", r.width},
                {"DU", r.du},             {"cDU", r.cdu_max},
                {"cDU_w_linearized_monomial", r.cdu_mono_max},
                {"mono_argmax_i", r.mono_argmax},
                {"bijective", r.bijective},
                {"modulus", r.modulus}};
}

static const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "skipped";
    }
}

json to_json(const BoundCheck& b) {
    json j{{"params", json{{"p", b.p}, {"n", b.n}, {"t", b.t}}},
           {"admissible", b.admissible},
           {"lower", b.lower},
           {"upper", b.upper},
           {"observed", b.observed},
           {"observed_c_ne_01", b.observed_c_ne_01},
           {"bounds_hold", b.bounds_hold},
           {"verdict", verdict_str(b.verdict)}};
    if (!b.skip_reason.empty()) j["skip_reason"] = b.skip_reason;
    if (b.witness_c) j["witness_c"] = *b.witness_c;
    return j;
}

json to_json(const SecondThmCheck& c) {
    json j{{"params", json{{"n", c.n}, {"variant", c.variant}}},
           {"max_delta", c.max_delta},
           {"verdict", verdict_str(c.verdict)},
           {"detail", c.detail}};
    if (c.witness_c) j["witness_c"] = *c.witness_c;
    if (!c.qualifying_a.empty()) j["qualifying_a_count"] = c.qualifying_a.size();
    if (!c.failed_a.empty()) j["failed_a"] = c.failed_a;
    if (c.prescribed_total > 0) {
        j["prescribed_c_total"] = c.prescribed_total;
        j["prescribed_c_delta5"] = c.prescribed_delta5;
    }
    return j;
}

json to_json(const BluherCensus& c) {
    return json{{"params", json{{"p", c.p}, {"n", c.n}, {"t", c.t}}},
                {"Q", c.q_sub},
                {"m", c.m},
                {"brute_count", c.brute_count},
                {"formula", c.formula},
                {"verdict", c.match() ? "pass" : "fail"}};
}

static json complex_json(Cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const WeilReport& w) {
    json j{{"alpha", w.alpha}, {"S", complex_json(w.s)}, {"N", w.n_alpha}};
    if (w.gamma) j["gamma"] = *w.gamma;
    if (w.mu) j["mu"] = *w.mu;
    return j;
}

json to_json(const Thm41Observed& t) {
    json b{{"degenerate", t.bounds.degenerate},
           {"delta", t.bounds.delta},
           {"epsilon", t.bounds.epsilon},
           {"N_max", t.bounds.n_max},
           {"upper", t.bounds.upper},
           {"c2_satisfied", t.bounds.c2_satisfied}};
    if (!t.bounds.c2_reason.empty()) b["c2_reason"] = t.bounds.c2_reason;
    if (t.bounds.lower) {
        b["lower"] = *t.bounds.lower;
        b["lower_imag"] = t.bounds.lower_imag;
    }
    if (!t.bounds.anomalies.empty()) b["anomalies"] = t.bounds.anomalies;
    return json{{"bounds", b},
                {"observed", t.observed},
                {"upper_holds", t.upper_holds},
                {"lower_holds", t.lower_holds}};
}

std::string cddt_csv(const Cddt& t) {
    std::ostringstream out;
    out << "a\\b";
    for (std::uint32_t b = 0; b < t.q; ++b) out << ',' << b;
    out << '\n';
    for (std::uint32_t a = 0; a < t.q; ++a) {
        out << a;
        for (std::uint32_t b = 0; b < t.q; ++b) out << ',' << t.at(Fe(a), Fe(b));
        out << '\n';
    }
    return out.str();
}

std::string corpus_csv(const std::vector<SboxReport>& rows) {
    std::ostringstream out;
    out << "name,DU,cDU,cDU_w_linearized_monomial\n";
    for (const auto& r : rows)
        out << r.name << ',' << r.du << ',' << r.cdu_max << ',' << r.cdu_mono_max << '\n';
    return out.str();
}

std::uint64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    std::uint64_t v;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
        v = std::stoull(s.substr(2), &pos, 16), pos += 2;
    else
        v = std::stoull(s, &pos, 10);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

}  // namespace cdu
