#include "kclab/zoo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kclab {

namespace {

constexpr std::size_t kSieveBound = 1u << 20;

const std::vector<std::uint32_t>& sieve_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kSieveBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::size_t p = 2; p <= kSieveBound; ++p) {
            if (composite[p]) continue;
            out.push_back(static_cast<std::uint32_t>(p));
            for (std::size_t q = p * p; q <= kSieveBound; q += p) composite[q] = true;
        }
        return out;
    }();
    return primes;
}

// Parses w as 0^i 1^j; nullopt when w is not of that shape.
std::optional<std::pair<std::size_t, std::size_t>> zeros_then_ones(const Word& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == '0') ++i;
    std::size_t j = i;
    while (j < w.size() && w[j] == '1') ++j;
    if (j != w.size()) return std::nullopt;
    return std::make_pair(i, j - i);
}

bool is_palindrome(const Word& w) {
    return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

LanguageOracle make(const std::string& name, const std::string& alphabet, LanguageClass cls,
                    std::function<bool(const Word&)> member) {
    return LanguageOracle{name, alphabet, cls, std::move(member)};
}

const std::map<std::string, LanguageOracle>& oracle_table() {
    static const std::map<std::string, LanguageOracle> table = [] {
        std::map<std::string, LanguageOracle> t;
        const auto add = [&t](LanguageOracle o) { t.emplace(o.name, std::move(o)); };

        add(make("sigma-star", "01", LanguageClass::Regular,
                 [](const Word&) { return true; }));

        add(make("odd-ones", "01", LanguageClass::Regular, [](const Word& w) {
            return std::count(w.begin(), w.end(), '1') % 2 == 1;
        }));

        // {0^k 1^k : k >= 1}
        add(make("eq01", "01", LanguageClass::DcflNotRegular, [](const Word& w) {
            const auto ij = zeros_then_ones(w);
            return ij && ij->first >= 1 && ij->first == ij->second;
        }));

        // {0^i 1^j : i != j}
        add(make("neq01", "01", LanguageClass::DcflNotRegular, [](const Word& w) {
            const auto ij = zeros_then_ones(w);
            return ij && ij->first != ij->second;
        }));

        // {1^p : p prime}
        add(make("unary-prime", "01", LanguageClass::CsNotCfl, [](const Word& w) {
            if (w.find('0') != Word::npos) return false;
            return is_prime(Natural(w.size()));
        }));

        // {w : w is the standard binary representation of a prime}
        add(make("binary-prime", "01", LanguageClass::CsNotCfl, [](const Word& w) {
            if (w.empty() || w[0] != '1') return false;
            Natural v = 0;
            for (char c : w) v = v * 2 + (c == '1' ? 1 : 0);
            return is_prime(v);
        }));

        // {0^i 1^j : gcd(i, j) = 1}, with gcd(0, j) = j
        add(make("gcd1", "01", LanguageClass::CsNotCfl, [](const Word& w) {
            const auto ij = zeros_then_ones(w);
            return ij && std::gcd(ij->first, ij->second) == 1;
        }));

        // {x x^R w : x, w nonempty}
        add(make("xxrw", "01", LanguageClass::CflNotDcfl, [](const Word& w) {
            for (std::size_t k = 1; 2 * k < w.size(); ++k) {
                bool mirror = true;
                for (std::size_t i = 0; i < k && mirror; ++i) {
                    mirror = w[i] == w[2 * k - 1 - i];
                }
                if (mirror) return true;
            }
            return false;
        }));

        add(make("palindrome", "01", LanguageClass::CflNotDcfl, is_palindrome));

        // {x x^R}
        add(make("xxr", "01", LanguageClass::CflNotDcfl, [](const Word& w) {
            return w.size() % 2 == 0 && is_palindrome(w);
        }));

        // {x x}
        add(make("xx", "01", LanguageClass::CsNotCfl, [](const Word& w) {
            if (w.size() % 2 != 0) return false;
            const std::size_t h = w.size() / 2;
            return std::equal(w.begin(), w.begin() + h, w.begin() + h);
        }));

        // {0^n 1^m : m = n or m = 2n}
        add(make("eq-or-double", "01", LanguageClass::CflNotDcfl, [](const Word& w) {
            const auto ij = zeros_then_ones(w);
            return ij && (ij->second == ij->first || ij->second == 2 * ij->first);
        }));

        // {x y : l(x) = l(y), y contains a '1'}
        add(make("halfmark", "01", LanguageClass::CflNotDcfl, [](const Word& w) {
            if (w.size() % 2 != 0) return false;
            return w.find('1', w.size() / 2) != Word::npos;
        }));

        // {0^i 1^j 2^k : i = j or j = k}
        add(make("ijk", "012", LanguageClass::CflNotDcfl, [](const Word& w) {
            std::size_t i = 0;
            while (i < w.size() && w[i] == '0') ++i;
            std::size_t j = i;
            while (j < w.size() && w[j] == '1') ++j;
            std::size_t k = j;
            while (k < w.size() && w[k] == '2') ++k;
            if (k != w.size()) return false;
            return i == j - i || j - i == k - j;
        }));

        // {x # y x^R z}
        add(make("pattern-match", "01#", LanguageClass::CflNotDcfl, [](const Word& w) {
            const auto hash = w.find('#');
            if (hash == Word::npos || w.find('#', hash + 1) != Word::npos) return false;
            const Word x(w.begin(), w.begin() + hash);
            const Word rx(x.rbegin(), x.rend());
            return w.find(rx, hash + 1) != Word::npos;
        }));

        return t;
    }();
    return table;
}

} // namespace

std::string to_string(LanguageClass c) {
    switch (c) {
        case LanguageClass::Regular: return "regular";
        case LanguageClass::DcflNotRegular: return "dcfl-not-regular";
        case LanguageClass::CflNotDcfl: return "cfl-not-dcfl";
        case LanguageClass::CsNotCfl: return "cs-not-cfl";
        case LanguageClass::Recursive: return "recursive";
        case LanguageClass::ReBounded: return "re-bounded";
    }
    return "?";
}

const std::vector<std::string>& zoo_identifiers() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [name, oracle] : oracle_table()) v.push_back(name);
        return v;
    }();
    return ids;
}

const LanguageOracle& zoo_oracle(const std::string& name) {
    const auto& table = oracle_table();
    const auto it = table.find(name);
    if (it == table.end()) {
        std::ostringstream os;
        os << "unknown zoo language '" << name << "'; available:";
        for (const auto& id : zoo_identifiers()) os << ' ' << id;
        throw Error(os.str());
    }
    return it->second;
}

std::optional<Dfa> reference_dfa(const std::string& name) {
    if (name == "sigma-star") {
        Dfa a;
        a.alphabet = "01";
        a.states = 1;
        a.start = 0;
        a.accepting = {1};
        a.delta = {0, 0};
        return a;
    }
    if (name == "odd-ones") {
        Dfa a;
        a.alphabet = "01";
        a.states = 2;
        a.start = 0;
        a.accepting = {0, 1};
        a.delta = {0, 1, 1, 0}; // state*2 + symbol: '0' keeps parity, '1' flips
        return a;
    }
    return std::nullopt;
}

bool is_prime(const Natural& n) {
    if (n < 2) return false;
    if (n <= kSieveBound) {
        const auto& primes = sieve_primes();
        const std::uint32_t v = static_cast<std::uint32_t>(n);
        return std::binary_search(primes.begin(), primes.end(), v);
    }
    for (const std::uint32_t p : sieve_primes()) {
        const Natural pp = p;
        if (pp * pp > n) return true;
        if (n % pp == 0) return false;
    }
    // Beyond sieve^2 we would need more machinery; the zoo never gets here.
    throw Error("is_prime: value too large for deterministic check");
}

const Enumerator& length_lex_enumerator() {
    static const Enumerator e{
        "length-lex",
        [](const Natural& index) {
            if (index < 1) throw Error("length-lex enumerator: index must be >= 1");
            return word_of_nat(index - 1);
        },
        [](const Word& w) -> std::optional<Natural> { return nat_of_word(w) + 1; }};
    return e;
}

const Enumerator& prime_enumerator() {
    static const Enumerator e{
        "prime",
        [](const Natural& index) {
            if (index < 1) throw Error("prime enumerator: index must be >= 1");
            const auto& primes = sieve_primes();
            if (index > Natural(primes.size())) {
                std::ostringstream os;
                os << "prime enumerator: index " << index << " beyond sieve (max "
                   << primes.size() << " primes below " << kSieveBound << ")";
                throw Error(os.str());
            }
            const std::uint32_t p = primes[to_size(index - 1, "prime index")];
            Word w;
            for (std::uint32_t m = p; m > 0; m >>= 1) w.push_back(m & 1 ? '1' : '0');
            std::reverse(w.begin(), w.end());
            return w;
        },
        [](const Word& w) -> std::optional<Natural> {
            if (w.empty() || w[0] != '1' || w.size() > 20) return std::nullopt;
            std::uint32_t v = 0;
            for (char c : w) {
                if (c != '0' && c != '1') return std::nullopt;
                v = v * 2 + (c == '1');
            }
            const auto& primes = sieve_primes();
            const auto it = std::lower_bound(primes.begin(), primes.end(), v);
            if (it == primes.end() || *it != v) return std::nullopt;
            return Natural(it - primes.begin() + 1);
        }};
    return e;
}

Word enumerate_word(const Enumerator& e, const Natural& index) { return e.order(index); }

ResidualHit nth_in_residual_hit(const LanguageOracle& L, const Word& x, std::size_t nth,
                                const Enumerator& e, bool complement, bool include_empty,
                                std::size_t budget) {
    if (nth == 0) throw Error("nth_in_residual: n must be >= 1");
    std::size_t found = 0;
    for (std::size_t i = 1; i <= budget; ++i) {
        const Word y = e.order(Natural(i));
        if (!include_empty && y.empty()) continue;
        if (L.member(x + y) != complement) {
            if (++found == nth) return ResidualHit{y, Natural(i)};
        }
    }
    std::ostringstream os;
    os << "nth_in_residual: enumeration budget " << budget << " exhausted for language '"
       << L.name << "' with x=\"" << x << "\"; found " << found << " of " << nth << " hits";
    throw Error(os.str());
}

Word nth_in_residual(const LanguageOracle& L, const Word& x, std::size_t nth,
                     const Enumerator& e, bool complement, bool include_empty,
                     std::size_t budget) {
    return nth_in_residual_hit(L, x, nth, e, complement, include_empty, budget).word;
}

} // namespace kclab
