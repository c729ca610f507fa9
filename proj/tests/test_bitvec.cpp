#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracle_lens/bitvec.hpp"

using namespace oracle_lens;

TEST_CASE("dot_mod2 definition") {
    CHECK(dot_mod2(HiddenString{1, 0, 1}, BitString{0, 1, 1, 1}) == 0);
    CHECK(dot_mod2(HiddenString{0, 0}, BitString{1, 1, 1}) == 0);
    CHECK(dot_mod2(HiddenString{0, 0}, BitString{0, 0, 0}) == 0);
    CHECK(dot_mod2(HiddenString{1}, BitString{1, 1}) == 1);

    // x0 is ignored by definition
    CHECK(dot_mod2(HiddenString{1, 1}, BitString{0, 1, 0}) ==
          dot_mod2(HiddenString{1, 1}, BitString{1, 1, 0}));

    CHECK_THROWS_AS(dot_mod2(HiddenString{1, 0}, BitString{1, 0}), std::invalid_argument);
}

TEST_CASE("index encodings, x0 least significant") {
    CHECK(encode_index(BitString{1, 0, 1}) == 5);
    CHECK(encode_index(BitString{0, 0, 0}) == 0);
    CHECK(encode_index(BitString{0, 1}) == 2);

    CHECK(decode_index(5, 3) == BitString{1, 0, 1});
    CHECK(decode_index(0, 4) == BitString{0, 0, 0, 0});
    CHECK(decode_index(3, 2) == BitString{1, 1});

    CHECK_THROWS_AS(decode_index(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(BitString(0), std::invalid_argument);
}

TEST_CASE("encode/decode round trip for all m <= 16") {
    for (std::size_t m = 1; m <= 16; ++m) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
            CHECK(encode_index(decode_index(i, m)) == i);
        }
    }
}

TEST_CASE("dot_mod2 is linear over GF(2), exhaustive for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t m = n + 1;
        for (std::uint64_t ki = 0; ki < (std::uint64_t{1} << n); ++ki) {
            const HiddenString k = HiddenString::from_index(ki, n);
            for (std::uint64_t xi = 0; xi < (std::uint64_t{1} << m); ++xi) {
                const BitString x = decode_index(xi, m);
                for (std::uint64_t yi = 0; yi < (std::uint64_t{1} << m); ++yi) {
                    const BitString y = decode_index(yi, m);
                    REQUIRE((dot_mod2(k, x) ^ dot_mod2(k, y)) == dot_mod2(k, x ^ y));
                }
            }
        }
    }
}

TEST_CASE("text form is x0 first") {
    CHECK(BitString::from_text("101") == BitString{1, 0, 1});
    CHECK(BitString{1, 0, 1}.text() == "101");
    CHECK(HiddenString::from_text("01").text() == "01");
    CHECK(HiddenString::from_text("01").bit(0) == 0);  // k_1
    CHECK_THROWS_AS(BitString::from_text("10x"), std::invalid_argument);
    CHECK_THROWS_AS(BitString::from_text(""), std::invalid_argument);
}
