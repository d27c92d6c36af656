#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "nanoread/bch.hpp"
#include "nanoread/gf2m.hpp"
#include "nanoread/inner_code.hpp"
#include "nanoread/read_vector.hpp"

using namespace nanoread;

TEST_CASE("field tables generate the full multiplicative group") {
    for (int m = 2; m <= 12; ++m) {
        const FieldContext f(m);
        CHECK(f.degree() == m);
        CHECK(f.alpha_pow(0) == 1);
        CHECK(f.alpha_pow(f.group_order()) == 1);
        CHECK(f.alpha_pow(-1) == f.inv(2));

        // Distinct powers up to the group order.
        std::set<std::uint32_t> seen;
        for (std::uint32_t e = 0; e < f.group_order(); ++e) {
            const std::uint32_t v = f.alpha_pow(e);
            CHECK(v != 0);
            CHECK(v < f.field_size());
            CHECK(f.log(v) == e);
            seen.insert(v);
        }
        CHECK(seen.size() == f.group_order());
    }
}

TEST_CASE("field arithmetic identities") {
    std::mt19937_64 rng(31337);
    for (int m : {3, 5, 8, 11}) {
        const FieldContext f(m);
        for (int iter = 0; iter < 200; ++iter) {
            const std::uint32_t a = 1 + std::uint32_t(rng() % f.group_order());
            const std::uint32_t b = 1 + std::uint32_t(rng() % f.group_order());
            const std::uint32_t c = 1 + std::uint32_t(rng() % f.group_order());
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.div(f.mul(a, b), b) == a);
            // Frobenius: squaring distributes over sums.
            CHECK(f.mul(f.add(a, b), f.add(a, b)) == f.add(f.mul(a, a), f.mul(b, b)));
        }
        CHECK(f.mul(0, 5 % f.field_size()) == 0);
        CHECK_THROWS_AS(f.inv(0), std::domain_error);
        CHECK_THROWS_AS(f.div(1, 0), std::domain_error);
    }
}

TEST_CASE("non primitive moduli are rejected") {
    // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5.
    CHECK_THROWS_AS(FieldContext(4, 0b11111), std::invalid_argument);
    // (x^2 + x + 1)^2 is reducible.
    CHECK_THROWS_AS(FieldContext(4, 0b10101), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext(13), std::invalid_argument);
    // Wrong degree mask.
    CHECK_THROWS_AS(FieldContext(4, 0b1011), std::invalid_argument);
}

TEST_CASE("classic code parameters") {
    const BchCode c15(4, 2);
    CHECK(c15.length() == 15);
    CHECK(c15.dimension() == 7);
    CHECK(c15.redundancy() == 8);
    // Generator 1 + x^4 + x^6 + x^7 + x^8, coefficients in ascending degree.
    const std::vector<std::uint8_t> gen(c15.generator());
    REQUIRE(gen.size() == 9);
    std::string coeffs;
    for (std::uint8_t g : gen) coeffs += char('0' + g);
    CHECK(coeffs == "100010111");

    CHECK(BchCode(5, 2).dimension() == 21);
    CHECK(BchCode(6, 2).redundancy() == 12);
    CHECK(BchCode(6, 2).dimension() == 51);
    CHECK(BchCode(7, 2).dimension() == 113);
    CHECK(BchCode(8, 2).dimension() == 239);
    CHECK(BchCode(4, 3).dimension() == 5);
}

TEST_CASE("encoding is systematic") {
    const BchCode code(4, 2);
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        const BinaryWord msg = BinaryWord::from_uint(rng(), code.dimension());
        const BinaryWord cw = code.encode(msg);
        REQUIRE(cw.size() == code.length());
        CHECK(code.is_codeword(cw));
        // Message bits ride in the high positions after the parity block.
        for (std::size_t i = 0; i < msg.size(); ++i) {
            CHECK(cw[code.redundancy() + i] == msg[i]);
        }
    }
}

TEST_CASE("decoding corrects every pattern within the design radius") {
    const BchCode code(4, 2);
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 25; ++iter) {
        const BinaryWord msg = BinaryWord::from_uint(rng(), code.dimension());
        const BinaryWord cw = code.encode(msg);
        const int n = int(code.length());
        for (int a = -1; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                BinaryWord r = cw;
                unsigned weight = 0;
                if (a >= 0) { r[std::size_t(a)] ^= 1; ++weight; }
                r[std::size_t(b)] ^= 1;
                ++weight;
                const BchCode::DecodeResult res = code.decode(r);
                REQUIRE(res.ok);
                REQUIRE(res.codeword == cw);
                REQUIRE(res.message == msg);
                REQUIRE(res.corrections == weight);
            }
        }
        // The all-clean read decodes with zero corrections.
        const BchCode::DecodeResult clean = code.decode(cw);
        REQUIRE(clean.ok);
        REQUIRE(clean.corrections == 0);
    }
}

TEST_CASE("decoding agrees with brute force nearest codeword") {
    const BchCode code(4, 2);
    std::vector<BinaryWord> codewords;
    for (std::uint64_t v = 0; v < (1u << code.dimension()); ++v) {
        codewords.push_back(code.encode(BinaryWord::from_uint(v, code.dimension())));
    }
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        const BinaryWord r = BinaryWord::from_uint(rng(), code.length());
        int best = 1 << 30;
        const BinaryWord* winner = nullptr;
        for (const BinaryWord& cw : codewords) {
            const int d = hamming_distance(r, cw);
            if (d < best) {
                best = d;
                winner = &cw;
            }
        }
        const BchCode::DecodeResult res = code.decode(r);
        if (best <= code.design_t()) {
            // Within the packing radius the nearest codeword is unique, so
            // the algebraic decoder must find exactly it.
            REQUIRE(res.ok);
            REQUIRE(res.codeword == *winner);
            REQUIRE(int(res.corrections) == best);
        } else if (res.ok) {
            // Miscorrections land on some codeword within the radius.
            CHECK(code.is_codeword(res.codeword));
            CHECK(hamming_distance(r, res.codeword) <= code.design_t());
        }
    }
}

TEST_CASE("shortened codes drop leading message bits") {
    const BchCode code(4, 2, 4);
    CHECK(code.length() == 11);
    CHECK(code.dimension() == 3);
    CHECK(code.redundancy() == 8);
    std::mt19937_64 rng(5);
    for (std::uint64_t v = 0; v < 8; ++v) {
        const BinaryWord msg = BinaryWord::from_uint(v, 3);
        const BinaryWord cw = code.encode(msg);
        for (int reps = 0; reps < 20; ++reps) {
            BinaryWord r = cw;
            const std::size_t i = rng() % code.length();
            std::size_t j = rng() % code.length();
            while (j == i) j = rng() % code.length();
            r[i] ^= 1;
            r[j] ^= 1;
            const BchCode::DecodeResult res = code.decode(r);
            REQUIRE(res.ok);
            REQUIRE(res.message == msg);
        }
    }
    CHECK_THROWS_AS(BchCode(4, 2, 7), std::invalid_argument);
}

TEST_CASE("code family constructors validate shapes") {
    CHECK_THROWS_AS(BchCode(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(BchCode(4, 0), std::invalid_argument);
    // t too large for the length.
    CHECK_THROWS_AS(BchCode(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(InnerCode::repetition(0), std::invalid_argument);
    CHECK_THROWS_AS(InnerCode::identity(0), std::invalid_argument);
}

TEST_CASE("repetition code majority behavior") {
    const InnerCode rep = InnerCode::repetition(5);
    CHECK(rep.length() == 5);
    CHECK(rep.dimension() == 1);
    CHECK(rep.design_errors() == 2);
    CHECK(rep.encode(BinaryWord::from_string("1")).to_string() == "11111");

    const InnerCode::Decoded two = rep.decode(BinaryWord::from_string("10011"));
    CHECK(two.ok);
    CHECK(two.message.to_string() == "1");
    CHECK(two.corrections == 2);

    // An even split has no majority; the decoder reports failure.
    const InnerCode tie = InnerCode::repetition(4);
    CHECK_FALSE(tie.decode(BinaryWord::from_string("0011")).ok);
    CHECK(tie.decode(BinaryWord::from_string("0111")).ok);
}

TEST_CASE("identity code passes words through") {
    const InnerCode id = InnerCode::identity(6);
    CHECK(id.dimension() == 6);
    CHECK(id.design_errors() == 0);
    const BinaryWord w = BinaryWord::from_string("010011");
    CHECK(id.encode(w) == w);
    const InnerCode::Decoded res = id.decode(w);
    CHECK(res.ok);
    CHECK(res.message == w);
    CHECK(res.corrections == 0);
}

TEST_CASE("code descriptions are stable") {
    CHECK(InnerCode::bch(4, 2).describe() == "bch(15,7,t=2)");
    CHECK(InnerCode::repetition(5).describe() == "repetition(5)");
    CHECK(InnerCode::identity(3).describe() == "identity(3)");
}

TEST_CASE("exhaustive minimum distance") {
    CHECK(InnerCode::repetition(5).min_distance_exhaustive() == 5);
    CHECK(InnerCode::identity(4).min_distance_exhaustive() == 1);
    // Designed distance 2t + 1 = 5 is the true minimum here.
    CHECK(InnerCode::bch(4, 2).min_distance_exhaustive() == 5);
    CHECK(InnerCode::bch(5, 2).min_distance_exhaustive() == 5);
    CHECK_THROWS_AS(InnerCode::bch(6, 1).min_distance_exhaustive(), std::invalid_argument);
}
