#include <catch2/catch_amalgamated.hpp>

#include "grayiso/ring.hpp"
#include "oracles.hpp"

using namespace grayiso;

TEST_CASE("modulus accepts exactly the powers of two up to 2^16") {
    CHECK(Modulus(2).exponent() == 1);
    CHECK(Modulus(8).exponent() == 3);
    CHECK(Modulus(65536).exponent() == 16);
    CHECK(Modulus::from_exponent(4).value() == 16);
    CHECK_THROWS_AS(Modulus(0), std::domain_error);
    CHECK_THROWS_AS(Modulus(1), std::domain_error);
    CHECK_THROWS_AS(Modulus(6), std::domain_error);
    CHECK_THROWS_AS(Modulus(131072), std::domain_error);
    CHECK_THROWS_AS(Modulus::from_exponent(0), std::domain_error);
    CHECK_THROWS_AS(Modulus::from_exponent(17), std::domain_error);
}

TEST_CASE("ring words keep residues canonical") {
    const Modulus z8(8);
    CHECK_THROWS_AS(RingWord(z8, {8}), std::domain_error);
    CHECK_THROWS_AS(RingWord(z8, {1, 200}), std::domain_error);
    const RingWord w(z8, {7, 0, 3});
    CHECK(w.size() == 3);
    CHECK(w[0] == 7);
    CHECK_FALSE(w.is_zero());
    CHECK(RingWord::zeros(z8, 4).is_zero());
}

TEST_CASE("two-adic expansion") {
    const BitExpansion e = two_adic_expansion(5, 3);
    CHECK(e.bits() == std::vector<std::uint8_t>{1, 0, 1});
    CHECK(two_adic_expansion(0, 3).bits() == std::vector<std::uint8_t>{0, 0, 0});
    CHECK(two_adic_expansion(6, 3).bits() == std::vector<std::uint8_t>{0, 1, 1});
    CHECK_THROWS_AS(two_adic_expansion(8, 3), std::domain_error);
    CHECK_THROWS_AS(two_adic_expansion(0, 0), std::domain_error);
    CHECK_THROWS_AS(two_adic_expansion(0, 17), std::domain_error);

    SECTION("round trip reconstructs every residue for every exponent") {
        for (unsigned k = 1; k <= 16; ++k) {
            for (std::uint32_t u = 0; u < (std::uint32_t{1} << k); ++u) {
                const BitExpansion bits = two_adic_expansion(u, k);
                REQUIRE(bits.exponent() == k);
                REQUIRE(bits.value() == u);
            }
        }
    }

    SECTION("distinct residues give distinct expansions") {
        std::set<std::vector<std::uint8_t>> seen;
        for (std::uint32_t u = 0; u < 256; ++u) seen.insert(two_adic_expansion(u, 8).bits());
        CHECK(seen.size() == 256);
    }
}

TEST_CASE("hamming weight counts nonzero components") {
    CHECK(hamming_weight(parse_binary_word("0110")) == 2);
    CHECK(hamming_weight(BinaryWord::zeros(4)) == 0);
    CHECK(hamming_weight(RingWord(Modulus(8), {6, 6, 6})) == 3);
}

TEST_CASE("lee weight on Z_4") {
    for (std::uint32_t x = 0; x < 4; ++x) {
        CHECK(lee_weight(x) == std::min<std::size_t>(x, 4 - x));
        CHECK(lee_weight(x) == oracles::lee_z4[x]);
    }
    CHECK(lee_weight(RingWord(Modulus(4), {2, 2})) == 4);
    CHECK(lee_weight(RingWord(Modulus(4), {0, 0})) == 0);
    CHECK(lee_weight(RingWord(Modulus(4), {1, 2, 3})) == 4);
    CHECK_THROWS_AS(lee_weight(5), std::domain_error);
    CHECK_THROWS_AS(lee_weight(RingWord(Modulus(8), {1})), std::domain_error);
}

TEST_CASE("homogeneous weight") {
    const Modulus z8(8);
    SECTION("matches the Z_8 table on all eight residues") {
        for (std::uint32_t x = 0; x < 8; ++x)
            CHECK(homogeneous_weight(x, z8) == oracles::hom_z8[x]);
    }
    CHECK(homogeneous_weight(4, z8) == 4);
    CHECK(homogeneous_weight(7, z8) == 2);
    CHECK(homogeneous_weight(RingWord(z8, {6, 6, 6})) == 6);

    SECTION("general exponent: 0 at zero, 2^{k-1} at the half point, else 2^{k-2}") {
        const Modulus z16(16);
        CHECK(homogeneous_weight(0u, z16) == 0);
        CHECK(homogeneous_weight(8, z16) == 8);
        for (std::uint32_t x = 1; x < 16; ++x)
            if (x != 8) CHECK(homogeneous_weight(x, z16) == 4);
        // k = 2 reduces to the Lee weight on Z_4
        for (std::uint32_t x = 0; x < 4; ++x)
            CHECK(homogeneous_weight(x, Modulus(4)) == lee_weight(x));
        // k = 1 reduces to the Hamming weight on Z_2
        CHECK(homogeneous_weight(0u, Modulus(2)) == 0);
        CHECK(homogeneous_weight(1, Modulus(2)) == 1);
    }
    CHECK_THROWS_AS(homogeneous_weight(8, z8), std::domain_error);
}

TEST_CASE("word arithmetic is componentwise mod m") {
    const Modulus z4(4);
    const Modulus z8(8);
    const RingWord a(z4, {2, 0, 2, 0, 2, 0});
    const RingWord b(z4, {3, 1, 2, 0, 1, 1});
    CHECK(a + b == RingWord(z4, {1, 1, 0, 0, 3, 1}));
    CHECK(0 * b == RingWord::zeros(z4, 6));
    CHECK(7 * RingWord(z8, {1, 2, 7}) == RingWord(z8, {7, 6, 1}));
    CHECK(a - a == RingWord::zeros(z4, 6));
    CHECK(-RingWord(z8, {1, 0, 5}) == RingWord(z8, {7, 0, 3}));

    CHECK_THROWS_AS(a + RingWord(z4, {1}), std::domain_error);
    CHECK_THROWS_AS(a + RingWord(z8, {0, 0, 0, 0, 0, 0}), std::domain_error);

    SECTION("associative, commutative, distributive over small rings") {
        for (std::uint32_t va = 0; va < 16; ++va) {
            const RingWord x(z4, {va / 4, va % 4});
            for (std::uint32_t vb = 0; vb < 16; ++vb) {
                const RingWord y(z4, {vb / 4, vb % 4});
                CHECK(x + y == y + x);
                for (std::uint32_t vc = 0; vc < 16; ++vc) {
                    const RingWord z(z4, {vc / 4, vc % 4});
                    CHECK((x + y) + z == x + (y + z));
                }
                for (std::uint32_t s = 0; s < 4; ++s)
                    CHECK(s * (x + y) == s * x + s * y);
            }
        }
    }
}

TEST_CASE("weights are additive under concatenation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const RingWord u = oracles::random_word(rng, Modulus(4), 1 + trial % 5);
        const RingWord v = oracles::random_word(rng, Modulus(4), 1 + (trial * 3) % 7);
        const RingWord uv = concat(u, v);
        CHECK(hamming_weight(uv) == hamming_weight(u) + hamming_weight(v));
        CHECK(lee_weight(uv) == lee_weight(u) + lee_weight(v));
        CHECK(homogeneous_weight(uv) == homogeneous_weight(u) + homogeneous_weight(v));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const RingWord u = oracles::random_word(rng, Modulus(8), 1 + trial % 5);
        const RingWord v = oracles::random_word(rng, Modulus(8), 1 + (trial * 3) % 7);
        CHECK(homogeneous_weight(concat(u, v)) ==
              homogeneous_weight(u) + homogeneous_weight(v));
    }
    // length 0 concatenates as the identity
    const RingWord w(Modulus(4), {1, 2});
    CHECK(concat(w, RingWord::zeros(Modulus(4), 0)) == w);
}

TEST_CASE("text forms round-trip") {
    const Modulus z8(8);
    CHECK(to_string(RingWord(z8, {6, 6, 6})) == "6,6,6");
    CHECK(parse_ring_word("6,6,6", z8) == RingWord(z8, {6, 6, 6}));
    CHECK(parse_ring_word("5", z8) == RingWord(z8, {5}));
    CHECK(to_string(parse_binary_word("0110")) == "0110");

    CHECK_THROWS_AS(parse_ring_word("", z8), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_word("1,,2", z8), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_word("1, 2", z8), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_word("x", z8), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_word("8", z8), std::domain_error);
    CHECK_THROWS_AS(parse_binary_word("012"), std::invalid_argument);
    CHECK_THROWS_AS(parse_binary_word(""), std::invalid_argument);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const RingWord w = oracles::random_word(rng, Modulus(16), 1 + trial % 6);
        CHECK(parse_ring_word(to_string(w), Modulus(16)) == w);
    }
}

TEST_CASE("binary and Z_2 words convert both ways") {
    const BinaryWord b = parse_binary_word("0110");
    CHECK(to_binary_word(to_ring_word(b)) == b);
    CHECK_THROWS_AS(to_binary_word(RingWord(Modulus(4), {1})), std::domain_error);
    CHECK_THROWS_AS(BinaryWord({0, 2}), std::domain_error);
}

TEST_CASE("codeword ordering is lexicographic by residue sequence") {
    const Modulus z4(4);
    std::vector<RingWord> words = {RingWord(z4, {3, 0}), RingWord(z4, {0, 2}),
                                   RingWord(z4, {0, 1}), RingWord(z4, {2, 3})};
    std::sort(words.begin(), words.end());
    CHECK(to_string(words[0]) == "0,1");
    CHECK(to_string(words[1]) == "0,2");
    CHECK(to_string(words[2]) == "2,3");
    CHECK(to_string(words[3]) == "3,0");
}
