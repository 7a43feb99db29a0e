#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "kclab/error.hpp"

namespace kclab {

/// A finite word; symbols are single chars, binary words use '0'/'1'.
using Word = std::string;

/// Arbitrary-precision nonnegative integer. Composed encodings overflow
/// 64 bits quickly, so everything numeric goes through this type.
using Natural = boost::multiprecision::cpp_int;

/// Bijection N <-> {0,1}*: 0 <-> eps, 1 <-> "0", 2 <-> "1", 3 <-> "00", ...
/// The word for n is the binary expansion of n+1 with the leading 1 dropped.
Word word_of_nat(const Natural& n);
Natural nat_of_word(const Word& w);

/// l(n): length of the word associated with n, i.e. floor(log2(n+1)).
std::size_t nat_length(const Natural& n);

/// Length-lex order: first by length, then lexicographically; eps first.
bool length_lex_less(const Word& a, const Word& b);

/// Generalized length-lex bijection over an arbitrary ordered alphabet.
/// index 0 -> eps. For alphabet "01" this agrees with word_of_nat.
Word length_lex_word(const Natural& index, std::string_view alphabet);
Natural length_lex_index(const Word& w, std::string_view alphabet);

/// bar(x) = 1^{l(x)} 0 x.
Word bar_code(const Word& x);

/// Self-delimiting code x' = bar(word_of_nat(l(x))) ++ x. Prefix-free.
Word self_delim(const Word& x);

struct SelfDelimParse {
    Word payload;
    Word rest;
};

/// Splits s into the unique leading self-delimiting code and the remainder.
/// Throws Error naming the missing field if s ends mid-code.
SelfDelimParse self_delim_decode(const Word& s);

/// l(self_delim(x)) as a function of l(x): l(x) + 2*floor(log2(l(x)+1)) + 1.
std::size_t self_delim_length(std::size_t payload_len);

/// Pairing <x,y> = nat_of_word(self_delim(x) ++ y); injective.
Natural pair_encode(const Word& x, const Word& y);

struct Unpaired {
    Word first;
    Word second;
};

/// Inverts pair_encode; throws on naturals outside the image, reporting
/// the parse position.
Unpaired pair_decode(const Natural& n);

/// <x,y,z> = <x,<y,z>> (right-associative nesting).
Natural triple_encode(const Word& x, const Word& y, const Word& z);

struct Untripled {
    Word first;
    Word second;
    Word third;
};

Untripled triple_decode(const Natural& n);

/// Throws unless every symbol of w is '0' or '1'.
void require_binary(const Word& w, std::string_view what);

/// Narrows a Natural to size_t, throwing on overflow.
std::size_t to_size(const Natural& n, std::string_view what);

} // namespace kclab
