#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidcert/braidword.hpp"

using namespace braidcert;

TEST_CASE("parsing basics") {
    BraidWord w = parse_braid("s1^3", 2);
    REQUIRE(w.syllables().size() == 1);
    CHECK(w.syllables()[0] == Syllable{1, 3});

    // D^2 s1^-1 free-reduces to s1 s2 s1^2 s2
    BraidWord v = parse_braid("D^2 s1^-1", 3);
    std::vector<Syllable> expect{{1, 1}, {2, 1}, {1, 2}, {2, 1}};
    CHECK(v.syllables() == expect);

    CHECK_THROWS_AS(parse_braid("s3^1", 3), input_error);
    CHECK_THROWS_AS(parse_braid("D", 2), input_error);
    CHECK_THROWS_AS(parse_braid("s1^0", 2), input_error);
    CHECK_THROWS_AS(parse_braid("x7", 2), input_error);
}

TEST_CASE("array form parsing") {
    BraidWord w = parse_braid("[1,1,1,-2]", 3);
    std::vector<Syllable> expect{{1, 3}, {2, -1}};
    CHECK(w.syllables() == expect);
    CHECK(parse_braid("[]", 3).empty());
    CHECK_THROWS_AS(parse_braid("[1,0]", 3), input_error);
}

TEST_CASE("canonical form reparse round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        int strands = 2 + static_cast<int>(rng() % 3);
        std::vector<int> letters;
        int len = static_cast<int>(rng() % 12);
        for (int i = 0; i < len; i++) {
            int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
            letters.push_back((rng() & 1) ? g : -g);
        }
        BraidWord w = BraidWord::from_letters(strands, letters);
        BraidWord re = parse_braid(w.str() == "e" ? "" : w.str(), strands);
        CHECK(re == w);
    }
}

TEST_CASE("syllable classes and dealternating bound") {
    BraidWord w = parse_braid("s1^3 s2^-2 s1^2", 3);
    auto c = syllable_classes(w);
    CHECK(c == SyllableClassCounts{0, 1, 2, 0});
    CHECK(dealt_bound_syllables(w) == 0); // min(0+0, 1+2)

    CHECK(syllable_classes(parse_braid("s1^3 s2^2", 3)) == SyllableClassCounts{1, 0, 1, 0});
    CHECK(dealt_bound_syllables(parse_braid("s1^3 s2^2", 3)) == 1);
    CHECK(syllable_classes(BraidWord(3)) == SyllableClassCounts{0, 0, 0, 0});
    CHECK(dealt_bound_syllables(parse_braid("s2^5", 3)) == 0);
}

TEST_CASE("dealt bound is mirror invariant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; trial++) {
        std::vector<int> letters;
        for (int i = 0; i < 10; i++) {
            int g = 1 + static_cast<int>(rng() % 2);
            letters.push_back((rng() & 1) ? g : -g);
        }
        BraidWord w = BraidWord::from_letters(3, letters);
        CHECK(dealt_bound_syllables(w) == dealt_bound_syllables(w.mirror()));
    }
}

TEST_CASE("permutation and components") {
    CHECK(component_count(parse_braid("s1^3", 2)) == 1);
    CHECK(component_count(parse_braid("s1^3 s2^3", 3)) == 1);
    CHECK(component_count(parse_braid("s1^2 s2^2", 3)) == 3);
    CHECK(component_count(BraidWord(3)) == 3);
    CHECK(closure_is_knot(parse_braid("s1 s2", 3)));
}

TEST_CASE("burau relations") {
    BraidWord lhs = parse_braid("s1 s2 s1", 3);
    BraidWord rhs = parse_braid("s2 s1 s2", 3);
    CHECK(burau(lhs) == burau(rhs));
    CHECK(braid_equal_3(lhs, rhs));

    CHECK(braid_equal_3(parse_braid("D^2 s1", 3), parse_braid("s1 D^2", 3)));
    CHECK_FALSE(braid_equal_3(parse_braid("s1", 3), parse_braid("s2", 3)));
    CHECK_THROWS_AS(braid_equal_3(parse_braid("s1", 2), parse_braid("s1", 2)), input_error);
}

TEST_CASE("burau on random words: inverse and determinant") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; trial++) {
        std::vector<int> letters;
        int len = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < len; i++) {
            int g = 1 + static_cast<int>(rng() % 2);
            letters.push_back((rng() & 1) ? g : -g);
        }
        BraidWord w = BraidWord::from_letters(3, letters);
        BraidWord id = w * w.inverse();
        CHECK(burau(id) == BurauMatrix::identity());
        // det is +- t^k
        Laurent1 det = burau(w).det();
        CHECK(det.terms().size() == 1);
        i64 c = det.terms().begin()->second;
        CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("component count invariant under braid moves") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; trial++) {
        std::vector<int> letters;
        int len = 2 + static_cast<int>(rng() % 8);
        for (int i = 0; i < len; i++) {
            int g = 1 + static_cast<int>(rng() % 2);
            letters.push_back((rng() & 1) ? g : -g);
        }
        BraidWord w = BraidWord::from_letters(3, letters);
        // insert a cancelling pair at a random spot
        size_t pos = rng() % (letters.size() + 1);
        int g = 1 + static_cast<int>(rng() % 2);
        std::vector<int> ins = letters;
        ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(pos), {g, -g});
        CHECK(component_count(BraidWord::from_letters(3, ins)) == component_count(w));
    }
    // braid relation preserves components
    CHECK(component_count(parse_braid("s1 s2 s1 s2^4", 3)) ==
          component_count(parse_braid("s2 s1 s2 s2^4", 3)));
}

TEST_CASE("omega words") {
    OmegaForm f1{OmegaClass::O1, 1, 0, 0, {}};
    BraidWord w1 = omega_word(f1);
    CHECK(w1.letter_count() == 8);
    CHECK(w1 == parse_braid("D^2 s1 s2", 3));

    OmegaForm f4{OmegaClass::O4, 0, 3, 0, {}};
    CHECK(omega_word(f4) == parse_braid("s1^-3", 3));

    OmegaForm f6{OmegaClass::O6, 0, 0, 0, {{2, 2}}};
    CHECK(omega_word(f6) == parse_braid("s1^-2 s2^2", 3));

    OmegaForm bad{OmegaClass::O4, 0, 0, 0, {}};
    CHECK_THROWS_AS(omega_word(bad), input_error);
}

TEST_CASE("omega mirror closes up") {
    // the closure of the mirror word equals the closure of omega_word(mirror(f))
    // up to conjugacy; exponent sums must match exactly
    std::vector<OmegaForm> forms = {
        {OmegaClass::O0, 2, 0, 0, {}},          {OmegaClass::O1, -2, 0, 0, {}},
        {OmegaClass::O2, 1, 0, 0, {}},          {OmegaClass::O3, -1, 0, 0, {}},
        {OmegaClass::O4, 2, 3, 0, {}},          {OmegaClass::O5, -1, 0, 2, {}},
        {OmegaClass::O6, 1, 0, 0, {{2, 3}, {1, 2}}},
    };
    for (const auto& f : forms) {
        OmegaForm m = f.mirror();
        m.validate();
        CHECK(omega_word(m).exponent_sum() == -omega_word(f).exponent_sum());
        CHECK(component_count(omega_word(m)) == component_count(omega_word(f)));
    }
}
