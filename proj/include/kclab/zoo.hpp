#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kclab/automata.hpp"
#include "kclab/codec.hpp"

namespace kclab {

enum class LanguageClass {
    Regular,
    DcflNotRegular,
    CflNotDcfl,
    CsNotCfl,
    Recursive,
    ReBounded,
};

std::string to_string(LanguageClass c);

/// Total membership predicate for one example language, with the class the
/// language is certified to occupy. Membership is decided directly (string
/// scans, arithmetic), never by an automaton.
struct LanguageOracle {
    std::string name;
    std::string alphabet;
    LanguageClass certified_class = LanguageClass::Recursive;
    std::function<bool(const Word&)> member;

    bool certified_regular() const { return certified_class == LanguageClass::Regular; }
};

/// Stable identifiers: eq01, unary-prime, binary-prime, xxrw, neq01, gcd1,
/// sigma-star, odd-ones, palindrome, xxr, xx, eq-or-double, halfmark, ijk,
/// pattern-match.
const std::vector<std::string>& zoo_identifiers();
const LanguageOracle& zoo_oracle(const std::string& name);

/// Reference machine for the regular zoo entries (sigma-star, odd-ones).
std::optional<Dfa> reference_dfa(const std::string& name);

/// Effective order of (a subset of) Sigma*; 1-indexed and injective.
/// locate is the optional inverse: the index at which a word occurs, if it
/// occurs at all. Scans fall back to budgeted enumeration without it.
struct Enumerator {
    std::string name;
    std::function<Word(const Natural& index)> order;
    std::function<std::optional<Natural>(const Word&)> locate;
};

/// eps, 0, 1, 00, 01, ... over {0,1}; the i-th word is word_of_nat(i-1).
const Enumerator& length_lex_enumerator();

/// i -> standard binary representation of the i-th prime. Backed by a
/// deterministic sieve; indexes beyond the sieve throw an out-of-sieve Error.
const Enumerator& prime_enumerator();

Word enumerate_word(const Enumerator& e, const Natural& index);

/// Deterministic primality for small values (sieve-backed, trial division
/// beyond the sieve).
bool is_prime(const Natural& n);

struct ResidualHit {
    Word word;
    Natural enumeration_index;
};

/// The nth y in enumeration order with member(x ++ y) == !complement,
/// optionally skipping eps. Throws a budget Error carrying the number of
/// hits found when the enumeration budget is exhausted.
ResidualHit nth_in_residual_hit(const LanguageOracle& L, const Word& x, std::size_t nth,
                                const Enumerator& e, bool complement = false,
                                bool include_empty = false, std::size_t budget = 1u << 20);

Word nth_in_residual(const LanguageOracle& L, const Word& x, std::size_t nth,
                     const Enumerator& e, bool complement = false,
                     bool include_empty = false, std::size_t budget = 1u << 20);

} // namespace kclab
