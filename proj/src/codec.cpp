#include "kclab/codec.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace kclab {

void require_binary(const Word& w, std::string_view what) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != '0' && w[i] != '1') {
            std::ostringstream os;
            os << what << ": symbol '" << w[i] << "' at position " << i << " is not binary";
            throw Error(os.str());
        }
    }
}

std::size_t to_size(const Natural& n, std::string_view what) {
    if (n < 0 || n > std::numeric_limits<std::size_t>::max()) {
        std::ostringstream os;
        os << what << ": value " << n << " out of machine range";
        throw Error(os.str());
    }
    return static_cast<std::size_t>(n);
}

Word word_of_nat(const Natural& n) {
    if (n < 0) throw Error("word_of_nat: negative input");
    Natural m = n + 1;
    const std::size_t top = boost::multiprecision::msb(m); // m >= 1
    Word w;
    w.reserve(top);
    for (std::size_t i = top; i-- > 0;) {
        w.push_back(boost::multiprecision::bit_test(m, static_cast<unsigned>(i)) ? '1' : '0');
    }
    return w;
}

Natural nat_of_word(const Word& w) {
    require_binary(w, "nat_of_word");
    Natural m = 1;
    for (char c : w) {
        m <<= 1;
        if (c == '1') m += 1;
    }
    return m - 1;
}

std::size_t nat_length(const Natural& n) {
    if (n < 0) throw Error("nat_length: negative input");
    Natural m = n + 1;
    return boost::multiprecision::msb(m);
}

bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Word length_lex_word(const Natural& index, std::string_view alphabet) {
    if (alphabet.empty()) throw Error("length_lex_word: empty alphabet");
    if (index < 0) throw Error("length_lex_word: negative index");
    const Natural k = alphabet.size();
    // Find the length block containing index: words of length L start at
    // (k^L - 1)/(k - 1) for k > 1, or at L for k == 1.
    Natural remaining = index;
    std::size_t len = 0;
    Natural block = 1;
    while (remaining >= block) {
        remaining -= block;
        block *= k;
        ++len;
    }
    Word w(len, alphabet[0]);
    for (std::size_t i = len; i-- > 0;) {
        Natural digit = remaining % k;
        remaining /= k;
        w[i] = alphabet[to_size(digit, "length_lex_word digit")];
    }
    return w;
}

Natural length_lex_index(const Word& w, std::string_view alphabet) {
    if (alphabet.empty()) throw Error("length_lex_index: empty alphabet");
    const Natural k = alphabet.size();
    Natural start = 0;
    Natural block = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        start += block;
        block *= k;
    }
    Natural offset = 0;
    for (char c : w) {
        const auto pos = alphabet.find(c);
        if (pos == std::string_view::npos) {
            std::ostringstream os;
            os << "length_lex_index: symbol '" << c << "' not in alphabet \"" << alphabet << "\"";
            throw Error(os.str());
        }
        offset = offset * k + static_cast<unsigned>(pos);
    }
    return start + offset;
}

Word bar_code(const Word& x) {
    Word w(x.size(), '1');
    w.push_back('0');
    w += x;
    return w;
}

Word self_delim(const Word& x) {
    require_binary(x, "self_delim");
    return bar_code(word_of_nat(Natural(x.size()))) + x;
}

SelfDelimParse self_delim_decode(const Word& s) {
    require_binary(s, "self_delim_decode");
    std::size_t i = 0;
    while (i < s.size() && s[i] == '1') ++i;
    if (i == s.size()) {
        throw Error("self_delim_decode: input ends inside the leading run of 1s (missing separator 0)");
    }
    const std::size_t ones = i;
    ++i; // the separator '0'
    if (s.size() - i < ones) {
        throw Error("self_delim_decode: input ends inside the length field");
    }
    const Word length_word = s.substr(i, ones);
    i += ones;
    const Natural payload_len = nat_of_word(length_word);
    if (payload_len > Natural(s.size() - i)) {
        throw Error("self_delim_decode: input ends inside the payload");
    }
    const std::size_t plen = to_size(payload_len, "self_delim payload length");
    return SelfDelimParse{s.substr(i, plen), s.substr(i + plen)};
}

std::size_t self_delim_length(std::size_t payload_len) {
    return payload_len + 2 * nat_length(Natural(payload_len)) + 1;
}

Natural pair_encode(const Word& x, const Word& y) {
    require_binary(y, "pair_encode second component");
    return nat_of_word(self_delim(x) + y);
}

Unpaired pair_decode(const Natural& n) {
    const Word w = word_of_nat(n);
    try {
        SelfDelimParse p = self_delim_decode(w);
        return Unpaired{p.payload, p.rest};
    } catch (const Error& e) {
        std::ostringstream os;
        os << "pair_decode: natural " << n << " is outside the pairing image ("
           << e.what() << ")";
        throw Error(os.str());
    }
}

Natural triple_encode(const Word& x, const Word& y, const Word& z) {
    return pair_encode(x, word_of_nat(pair_encode(y, z)));
}

Untripled triple_decode(const Natural& n) {
    Unpaired outer = pair_decode(n);
    Unpaired inner = pair_decode(nat_of_word(outer.second));
    return Untripled{outer.first, inner.first, inner.second};
}

} // namespace kclab
