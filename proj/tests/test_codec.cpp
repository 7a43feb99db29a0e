#include <doctest.h>

#include <set>

#include "kclab/codec.hpp"

using namespace kclab;

namespace {

// Independent oracle for the numeric value of a word: 2^n - 1 + sum x_i 2^i
// evaluated digit by digit (x_{n-1} is the leftmost symbol).
Natural numeric_value_oracle(const Word& w) {
    const std::size_t n = w.size();
    Natural value = 0;
    Natural pow = 1;
    for (std::size_t i = 0; i < n; ++i) {
        value += pow; // accumulates 2^n - 1
        if (w[n - 1 - i] == '1') {
            Natural bit = 1;
            for (std::size_t k = 0; k < i; ++k) bit *= 2;
            value += bit;
        }
        pow *= 2;
    }
    return value;
}

std::vector<Word> all_words_up_to(std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            out.push_back(out[i] + '0');
            out.push_back(out[i] + '1');
        }
        begin = end;
    }
    return out;
}

} // namespace

TEST_CASE("bijection anchor values") {
    CHECK(word_of_nat(0) == "");      // base case
    CHECK(word_of_nat(3) == "00");    // '3' is both the number and the string 00
    CHECK(word_of_nat(5) == "10");
    CHECK(nat_of_word("10") == 5);
    CHECK(nat_of_word("") == 0);
    CHECK(word_of_nat(6) == "11");
    CHECK(word_of_nat(7) == "000");
}

TEST_CASE("bijection agrees with the numeric formula and round-trips") {
    for (const Word& w : all_words_up_to(16)) {
        const Natural n = numeric_value_oracle(w);
        CHECK(nat_of_word(w) == n);
        CHECK(word_of_nat(n) == w);
    }
    for (Natural n = 0; n < 4096; ++n) {
        CHECK(nat_of_word(word_of_nat(n)) == n);
    }
}

TEST_CASE("bijection is an order isomorphism onto length-lex") {
    Word prev = word_of_nat(0);
    for (Natural n = 1; n < 2048; ++n) {
        const Word cur = word_of_nat(n);
        CHECK(length_lex_less(prev, cur));
        CHECK(!length_lex_less(cur, prev));
        prev = cur;
    }
}

TEST_CASE("derived length matches floor(log(x+1))") {
    for (std::size_t x = 0; x < 1000; ++x) {
        std::size_t bits = 0;
        while ((std::size_t{1} << (bits + 1)) <= x + 1) ++bits; // floor(log2(x+1))
        CHECK(nat_length(Natural(x)) == bits);
        CHECK(word_of_nat(Natural(x)).size() == bits);
    }
}

TEST_CASE("self-delimiting code anchor values") {
    CHECK(self_delim("01011") == "1101001011");
    CHECK(self_delim("") == "0");
    CHECK(self_delim("1") == "1001");
    CHECK(bar_code("01011") == "111110" "01011");
}

TEST_CASE("self-delimiting decode splits and reports truncation") {
    const auto p = self_delim_decode("1101001011" "111");
    CHECK(p.payload == "01011");
    CHECK(p.rest == "111");

    CHECK_THROWS_WITH_AS(self_delim_decode("111"), doctest::Contains("run of 1s"), Error);
    CHECK_THROWS_WITH_AS(self_delim_decode("110"), doctest::Contains("length field"), Error);
    CHECK_THROWS_WITH_AS(self_delim_decode("11010010"), doctest::Contains("payload"), Error);
}

TEST_CASE("self-delimiting codes are prefix-free and obey the length law") {
    std::vector<Word> codes;
    for (const Word& w : all_words_up_to(7)) codes.push_back(self_delim(w));
    for (std::size_t i = 0; i < codes.size(); ++i) {
        for (std::size_t j = 0; j < codes.size(); ++j) {
            if (i == j) continue;
            const bool is_prefix = codes[i].size() <= codes[j].size() &&
                                   codes[j].compare(0, codes[i].size(), codes[i]) == 0;
            CHECK(!is_prefix);
        }
    }
    for (const Word& w : all_words_up_to(12)) {
        std::size_t log_term = 0;
        while ((std::size_t{1} << (log_term + 1)) <= w.size() + 1) ++log_term;
        CHECK(self_delim(w).size() == w.size() + 2 * log_term + 1);
        CHECK(self_delim_length(w.size()) == self_delim(w).size());
    }
}

TEST_CASE("pairing anchor values and inversion") {
    CHECK(pair_encode("", "") == 1);
    CHECK(pair_encode("1", "0") == 49);
    const Unpaired p = pair_decode(49);
    CHECK(p.first == "1");
    CHECK(p.second == "0");

    for (const Word& x : all_words_up_to(4)) {
        for (const Word& y : all_words_up_to(4)) {
            const Unpaired q = pair_decode(pair_encode(x, y));
            CHECK(q.first == x);
            CHECK(q.second == y);
        }
    }
}

TEST_CASE("pair decode rejects naturals outside the image") {
    // word_of_nat(14) = "111": no separator 0 ever shows up
    CHECK_THROWS_WITH_AS(pair_decode(14), doctest::Contains("outside the pairing image"), Error);
}

TEST_CASE("triples nest right-associatively") {
    const Natural t = triple_encode("01", "1", "001");
    CHECK(t == pair_encode("01", word_of_nat(pair_encode("1", "001"))));
    const Untripled u = triple_decode(t);
    CHECK(u.first == "01");
    CHECK(u.second == "1");
    CHECK(u.third == "001");
}

TEST_CASE("generalized length-lex order") {
    CHECK(length_lex_word(0, "01") == "");
    CHECK(length_lex_word(3, "01") == "00");
    CHECK(length_lex_word(0, "012") == "");
    CHECK(length_lex_word(3, "012") == "2");
    CHECK(length_lex_word(4, "012") == "00");
    for (Natural i = 0; i < 512; ++i) {
        CHECK(length_lex_word(i, "01") == word_of_nat(i));
        CHECK(length_lex_index(length_lex_word(i, "012"), "012") == i);
    }
}

TEST_CASE("binary validation names the offending position") {
    CHECK_THROWS_WITH_AS(nat_of_word("01a1"), doctest::Contains("position 2"), Error);
}
