#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "cdu/json_io.hpp"
#include "cdu/sboxes.hpp"

using namespace cdu;

TEST_CASE("corpus shape") {
    const auto& corpus = builtin_corpus();
    CHECK(corpus.size() == 6);
    for (const auto& s : corpus) {
        CHECK(!s.provenance.empty());
        CHECK_NOTHROW(s.validate());
    }
    CHECK(corpus[0].name == "Rectangle");
    CHECK(corpus[4].name == "AES");
}

TEST_CASE("classical uniformities of the corpus") {
    for (const auto& s : builtin_corpus()) {
        FnTable F = sbox_fn(s);
        std::uint32_t du = uniformity(F);
        if (s.name == "AES") CHECK(du == 4);
        if (s.name == "Skipjack") CHECK(du == 12);
        if (s.name == "Rectangle") CHECK(du == 4);
        if (s.name == "Serpent-3") CHECK(du == 4);
        if (s.name == "APN6") CHECK(du == 2);
        if (s.name == "Fides6") CHECK(du == 2);
    }
}

TEST_CASE("6-bit entries are genuine APN permutations") {
    for (const auto& s : builtin_corpus()) {
        if (s.width != 6) continue;
        FnTable F = sbox_fn(s);
        CHECK(F.is_permutation());
        CHECK(uniformity(F) == 2);
    }
}

TEST_CASE("4-bit reports reproduce the published profile") {
    for (const auto& s : builtin_corpus()) {
        if (s.width != 4) continue;
        SboxReport r = sbox_report(s, 2);
        if (s.name == "Rectangle") {
            CHECK(r.du == 4);
            CHECK(r.cdu_max == 5);
            CHECK(r.cdu_mono_max == 7);
        } else {
            CHECK(r.du == 4);
            CHECK(r.cdu_max == 6);
            CHECK(r.cdu_mono_max == 5);
        }
    }
}

TEST_CASE("pinned fields") {
    CHECK(sbox_field(8)->spec().modulus == std::vector<unsigned>{1, 1, 0, 1, 1, 0, 0, 0, 1});
    CHECK(sbox_field(4)->spec().modulus == std::vector<unsigned>{1, 1, 0, 0, 1});
}

TEST_CASE("field spec json round trip") {
    Field f = Field::make(3, 3);
    FieldSpec back = field_spec_from_json(to_json(f.spec()));
    CHECK(back == f.spec());
    Field g = Field::make(back);
    CHECK(g.generator() == f.generator());
    // a declared non-primitive generator is rejected
    json bad = to_json(f.spec());
    bad["generator"] = 1;
    CHECK_THROWS_AS(Field::make(field_spec_from_json(bad)), std::invalid_argument);
}

TEST_CASE("json round trip and file loading") {
    const auto& aes = builtin_corpus()[4];
    json j = to_json(aes);
    SboxRecord back = sbox_from_json(j);
    CHECK(back.table == aes.table);
    CHECK(back.bijective);

    std::string path = "test_sbox_tmp.json";
    {
        std::ofstream out(path);
        out << json{{"name", "identity4"}, {"n", 4},
                    {"table", std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}}};
    }
    SboxRecord id = load_sbox_file(path);
    CHECK(id.bijective);
    CHECK(id.width == 4);
    std::remove(path.c_str());

    // malformed: wrong length
    json bad{{"name", "bad"}, {"n", 4}, {"table", std::vector<int>(15, 0)}};
    CHECK_THROWS_WITH_AS(sbox_from_json(bad), doctest::Contains("length"), std::invalid_argument);
    // malformed: entry out of range, message names the index
    std::vector<int> oor(16, 0);
    oor[7] = 16;
    json bad2{{"name", "bad2"}, {"n", 4}, {"table", oor}};
    CHECK_THROWS_WITH_AS(sbox_from_json(bad2), doctest::Contains("index 7"), std::invalid_argument);
}

TEST_CASE("perturbation by x keeps the interpolation affine-consistent") {
    const auto& rect = builtin_corpus()[0];
    FnTable F = sbox_fn(rect);
    FnTable G = add_frob_monomial(F, 0);
    UniPoly pf = interpolate(F), pg = interpolate(G);
    // adding x changes only the degree-1 coefficient
    auto coeff = [](const UniPoly& p, std::uint32_t e) -> Fe {
        for (auto [ee, c] : p.terms)
            if (ee == e) return c;
        return 0;
    };
    const Field& f = *F.field;
    for (std::uint32_t e = 0; e < f.q(); ++e) {
        Fe want = e == 1 ? f.add(coeff(pf, e), 1) : coeff(pf, e);
        CHECK(coeff(pg, e) == want);
    }
}

TEST_CASE("AES table interpolates and round-trips") {
    const auto& aes = builtin_corpus()[4];
    FnTable F = sbox_fn(aes);
    UniPoly p = interpolate(F);
    // affine layer on top of x^254 collapses to 9 terms: the constant plus
    // the eight exponents 254 * 2^i mod 255
    CHECK(p.terms.size() == 9);
    for (std::uint32_t x = 0; x < 256; ++x) CHECK(eval_poly(*F.field, p, Fe(x)) == F.values[x]);
    CHECK(algebraic_degree(*F.field, p) == 7);
}

TEST_CASE("tables of the wrong length are rejected") {
    auto f = make_field(2, 4);
    FnTable bad{f, std::vector<Fe>(15, 0)};
    CHECK_THROWS_AS(interpolate(bad), std::invalid_argument);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("row sums hold on corpus scans") {
    const auto& corpus = builtin_corpus();
    for (const auto& s : corpus) {
        if (s.width > 4) continue;
        FnTable F = sbox_fn(s);
        for (std::uint32_t c = 0; c < F.field->q(); ++c) {
            Cddt t = cddt_table(F, Fe(c));
            for (std::uint32_t a = 0; a < t.q; ++a) {
                std::uint32_t sum = 0;
                for (std::uint32_t b = 0; b < t.q; ++b) sum += t.at(Fe(a), Fe(b));
                REQUIRE(sum == t.q);
            }
        }
    }
}

TEST_CASE("c = 0 on every bijective corpus table gives delta 1") {
    for (const auto& s : builtin_corpus()) {
        if (!s.bijective) continue;
        FnTable F = sbox_fn(s);
        CHECK(c_uniformity(F, 0) == 1);
    }
}

TEST_CASE("csv output shape") {
    std::vector<SboxReport> rows;
    for (const auto& s : builtin_corpus())
        if (s.width == 4) rows.push_back(sbox_report(s, 2));
    std::string csv = corpus_csv(rows);
    CHECK(csv.find("name,DU,cDU,cDU_w_linearized_monomial\n") == 0);
    CHECK(csv.find("Rectangle,4,5,7") != std::string::npos);
}
