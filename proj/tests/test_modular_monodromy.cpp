#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ellmod/errors.hpp"
#include "ellmod/j_profile.hpp"
#include "ellmod/modular_monodromy.hpp"

using namespace ellmod;

namespace {

const IntMatrix2 kSinv{0, 1, -1, 0};
const IntMatrix2 kTinv{1, -1, 0, 1};
const IntMatrix2 kMinusId{-1, 0, 0, -1};

bool nilpotent(const IntMatrix2& m) {
    // 2x2 nilpotent iff trace 0 and det 0
    return m.trace() == 0 && m.det() == 0;
}

IntMatrix2 minus(const IntMatrix2& x, const IntMatrix2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
IntMatrix2 plus(const IntMatrix2& x, const IntMatrix2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

CongruenceTable table_from(const std::string& text) {
    std::istringstream in(text);
    return CongruenceTable::parse(in, "inline");
}

std::filesystem::path sample_table() { return std::filesystem::path(ELLMOD_SOURCE_DIR) / "data" / "congruence_genus0_sample.txt"; }

}  // namespace

TEST_CASE("matrix arithmetic examples") {
    CHECK(mat_mul(kT, kT) == IntMatrix2{1, 2, 0, 1});
    CHECK(mat_inv({1, 5, 0, 1}) == IntMatrix2{1, -5, 0, 1});
    CHECK(mat_conj(kT, kS) == IntMatrix2{1, 0, -1, 1});
    CHECK(mat_trace(kS) == 0);
    CHECK_THROWS_AS(mat_mul({2, 0, 0, 1}, kT), DomainError);
}

TEST_CASE("abelianization images of the generators") {
    CHECK(abelianization_image(kIdentity) == 0);
    CHECK(abelianization_image(kT) == 1);
    CHECK(abelianization_image(kS) == 9);
    CHECK(abelianization_image(kSinv) == 3);
    CHECK(abelianization_image(kMinusId) == 6);
    CHECK(abelianization_image({1, 36, 0, 1}) == 0);
    CHECK(abelianization_image({-1, -9, 0, -1}) == 3);
}

TEST_CASE("property: abelianization is a homomorphism on random words") {
    std::mt19937_64 rng(12);
    const IntMatrix2 letters[] = {kT, kTinv, kS, kSinv};
    const Int images[] = {1, 11, 9, 3};
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        IntMatrix2 w = kIdentity;
        Int expected = 0;
        const int len = 1 + trial % 24;
        for (int i = 0; i < len; ++i) {
            const int k = pick(rng);
            w = mat_mul(w, letters[k]);
            expected = (expected + images[k]) % 12;
        }
        CHECK(abelianization_image(w) == expected);
    }
}

TEST_CASE("property: abelianization is invariant under conjugation") {
    std::mt19937_64 rng(7);
    const IntMatrix2 letters[] = {kT, kTinv, kS, kSinv};
    std::uniform_int_distribution<int> pick(0, 3);
    auto random_word = [&](int len) {
        IntMatrix2 w = kIdentity;
        for (int i = 0; i < len; ++i) w = mat_mul(w, letters[pick(rng)]);
        return w;
    };
    for (int trial = 0; trial < 500; ++trial) {
        const IntMatrix2 g = random_word(1 + trial % 10), h = random_word(1 + trial % 13);
        CHECK(abelianization_image(mat_conj(g, h)) == abelianization_image(g));
    }
}

TEST_CASE("gamma_presentation examples") {
    const auto p2 = gamma_presentation(2);
    REQUIRE(p2.classes.size() == 11);
    CHECK(p2.classes.front().name == "A_0");
    CHECK(p2.classes.front().rep == IntMatrix2{1, 36, 0, 1});
    for (std::size_t i = 1; i <= 9; ++i) CHECK(p2.classes[i].rep == kT);
    CHECK(p2.classes.back().name == "A_inf");
    CHECK(p2.classes.back().rep == IntMatrix2{-1, -9, 0, -1});
    const auto p3 = gamma_presentation(3);
    CHECK(p3.classes.front().rep == IntMatrix2{1, 108, 0, 1});
    CHECK(p3.classes.back().rep == IntMatrix2{-1, -27, 0, -1});
    CHECK(p3.classes.size() == 29);
}

TEST_CASE("abelianization_check examples") {
    CHECK(abelianization_check(gamma_presentation(2)));
    CHECK(abelianization_sum(gamma_presentation(2)) == 0);
    CHECK(abelianization_check(gamma_presentation(3)));
    CHECK_FALSE(abelianization_check(Presentation{{{"A", kT}}}));
}

TEST_CASE("property: presentations for c = 2..6") {
    for (int c = 2; c <= 6; ++c) {
        const auto p = gamma_presentation(c);
        for (const auto& cls : p.classes) {
            CHECK(cls.rep.det() == 1);
            if (cls.name == "A_inf") CHECK(nilpotent(plus(cls.rep, kIdentity)));
            else CHECK(nilpotent(minus(cls.rep, kIdentity)));
        }
        CHECK(abelianization_check(p));
        // 6 * 3^c + 6 is 0 mod 12 because 3^c is odd
        CHECK((6 * pow3(c) + 6) % 12 == 0);
        const auto sig = cusp_signature(c);
        CHECK(sig.genus == 0);
        CHECK(sig.index == 6 * pow3(c));
        CHECK(sig.level == 4 * pow3(c));
    }
}

TEST_CASE("cusp_signature examples") {
    const auto s2 = cusp_signature(2);
    std::vector<Int> w2{36, 9};
    w2.insert(w2.end(), 9, 1);
    CHECK(s2.cusp_widths == w2);
    CHECK(s2.cusp_count == 11);
    CHECK(s2.index == 54);
    CHECK(s2.genus == 0);
    CHECK(s2.level == 36);
    const auto s3 = cusp_signature(3);
    CHECK(s3.cusp_count == 29);
    CHECK(s3.index == 162);
    CHECK(s3.genus == 0);
    CHECK(s3.level == 108);
}

TEST_CASE("property: index equals the j-degree for c = 2, 3, 4") {
    for (int c : {2, 3, 4}) CHECK(cusp_signature(c).index == j_degree(schreieder_config(c)));
}

TEST_CASE("signature_from_widths") {
    // 1 + 6/12 - 1/2 = 1
    const auto one = signature_from_widths({6});
    CHECK(one.genus == 1);
    CHECK(one.index == 6);
    const auto g2 = signature_from_widths({2, 2, 2});
    CHECK(g2.genus == 0);
    CHECK(g2.level == 2);
    CHECK_THROWS_AS(signature_from_widths({1}), InconsistentConfiguration);
    CHECK_THROWS(signature_from_widths({}));
}

TEST_CASE("table parsing") {
    const auto t = table_from("# comment\n\nGamma(2) 2 6 0 3 2,2,2\nGamma0(4) 4 6 0 3 1,4,1\n");
    REQUIRE(t.records().size() == 2);
    CHECK(t.records()[1].cusp_widths == std::vector<Int>{4, 1, 1});
    CHECK_THROWS_AS(table_from("X 2 6 0 3 2,2\n"), TableFormatError);
    CHECK_THROWS_AS(table_from("X 2 7 0 3 2,2,2\n"), TableFormatError);
    CHECK_THROWS_AS(table_from("X 4 6 0 3 2,2,2\n"), TableFormatError);
    CHECK_THROWS_AS(table_from("X 2 6 0 3 2,a,2\n"), TableFormatError);
    CHECK_THROWS_AS(table_from("X 2 6\n"), TableFormatError);
    CHECK_THROWS_AS(table_from("X 2 6 0 3 2,2,2 extra\n"), TableFormatError);
    try {
        table_from("# c\nX 2 6 0 3 2,2\n");
    } catch (const TableFormatError& e) {
        CHECK(std::string(e.what()).find("inline:2") != std::string::npos);
    }
}

TEST_CASE("congruence lookup against the sample table") {
    const auto t = CongruenceTable::load(sample_table());
    CHECK(t.records().size() > 10);
    CHECK_FALSE(congruence_lookup(cusp_signature(2), &t));
    CHECK_FALSE(congruence_lookup(cusp_signature(3), &t));
    const auto control = signature_from_widths({2, 2, 2});
    CHECK(congruence_lookup(control, &t));
    CHECK(congruence_match(control, &t)->name == "Gamma(2)");
    CHECK_THROWS_AS(congruence_lookup(cusp_signature(2), nullptr), TableUnavailable);
    CHECK_THROWS_AS(CongruenceTable::load("/nonexistent/table.txt"), TableUnavailable);
}

TEST_CASE("sample records respect the torsion-free genus bound") {
    // Elliptic points only lower the genus below 1 + index/12 - cusps/2.
    const auto t = CongruenceTable::load(sample_table());
    for (const auto& r : t.records()) {
        const Rational torsion_free = Rational(1) + Rational(r.index, 12) - Rational(r.cusp_count, 2);
        CHECK(torsion_free >= Rational(r.genus));
        if (r.name == "Gamma(2)") CHECK(torsion_free == Rational(r.genus));
    }
}
