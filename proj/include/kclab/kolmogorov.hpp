#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kclab/automata.hpp"
#include "kclab/codec.hpp"
#include "kclab/zoo.hpp"

namespace kclab {

/// Conditional side information (the y of C(x|y)), always a natural here:
/// l(x) for the copy decoder, n for sequence prefixes.
using Side = std::optional<Natural>;

/// One total decoder of a fixed suite. decode must be deterministic; it may
/// fail (malformed program) but must never diverge, so implementations take
/// an output-size cap. candidates produces the programs the decoder itself
/// would use to describe `target` (parameter-directed synthesis); every
/// candidate is replay-verified by the estimator before it counts.
class Decoder {
public:
    virtual ~Decoder() = default;
    virtual const std::string& name() const = 0;
    virtual std::optional<Word> decode(const Word& program, const Side& side,
                                       std::size_t max_out) const = 0;
    virtual std::vector<Word> candidates(const Word& target, const Side& side) const = 0;
};

struct Witness {
    std::string decoder;
    Word tag;
    Word program;
};

/// An upper bound on C relative to the suite: value = l(tag) + l(program),
/// and replaying the witness reproduces the described word exactly.
struct ComplexityEstimate {
    std::size_t value = 0;
    Witness witness;
    Side side;
};

/// A fixed, versioned family of prefix-free-tagged decoders. Decoder i is
/// tagged with self_delim(word_of_nat(i)), so tags form a prefix-free set
/// and the suite version changes with order or membership.
class DecoderSuite {
public:
    /// v1 built-ins, in registration order: literal, literal-given-length,
    /// run-length, lz78, rank.
    static DecoderSuite standard();

    DecoderSuite with(std::shared_ptr<const Decoder> d) const;

    std::size_t size() const { return decoders_.size(); }
    const Decoder& at(std::size_t i) const { return *decoders_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    Word tag(std::size_t i) const;
    std::size_t tag_length(std::size_t i) const { return tag(i).size(); }
    const std::string& version() const { return version_; }

    /// Minimum tagged description length of x over the suite, by direct
    /// per-decoder synthesis. The literal decoder guarantees success.
    ComplexityEstimate estimate(const Word& x, const Side& side = {}) const;

    /// Replays a witness; nullopt if it no longer decodes.
    std::optional<Word> replay(const Witness& w, const Side& side, std::size_t max_out) const;

    /// Decodes a tag-prefixed program (tag parsed prefix-free, then the
    /// named decoder runs on the remainder).
    std::optional<Word> decode_tagged(const Word& bits, const Side& side, std::size_t max_out) const;

    /// Exhaustive description enumeration: every (tag, program) pair with
    /// total length <= max_total_bits is decoded; the map holds the cheapest
    /// description per output. This is the suite's true minimum on its
    /// domain, used by the counting operations.
    std::map<Word, ComplexityEstimate> enumerate_up_to(std::size_t max_total_bits, const Side& side,
                                                       std::size_t max_out) const;

private:
    std::vector<std::shared_ptr<const Decoder>> decoders_;
    std::string version_;
};

/// Residual-rank decoder: program = self_delim(state index) ++ self_delim(n);
/// output = the n-th word of the enumeration (eps skipped) accepted by
/// `machine` from that state. Installing it makes C-hat(y) <= C-hat(n) + c_A
/// checkable. The overload without an enumerator uses length-lex over the
/// machine's own alphabet.
DecoderSuite install_residual_decoder(const DecoderSuite& suite, Dfa machine,
                                      Enumerator enumerator, std::string label,
                                      std::size_t enum_budget = 1u << 16);
DecoderSuite install_residual_decoder(const DecoderSuite& suite, Dfa machine,
                                      std::string label, std::size_t enum_budget = 1u << 16);

/// Characterization-style decoder: program = self_delim(state index)
/// [++ self_delim(n) when unconditioned]; output = the characteristic row
/// chi_{1:n} computed by running `machine` from that state over the
/// length-lex enumeration of its alphabet.
DecoderSuite install_row_decoder(const DecoderSuite& suite, Dfa machine, std::string label);

/// The machine constant of the residual decoder for `machine` within a
/// suite whose residual tag has tag_bits: tag + worst-case state field.
std::size_t residual_machine_constant(const Dfa& machine, std::size_t tag_bits);

/// Least (length-lex) word of length n not produced by any description of
/// total length < n; such a word exists by counting and has C-hat >= n.
Word find_incompressible(std::size_t n, const DecoderSuite& suite, const Side& side = {});

struct SubstringBoundReport {
    Word x;
    std::size_t u_len = 0, v_len = 0, w_len = 0;
    std::size_t c_v = 0;              // C-hat(v)
    std::size_t l_uw = 0;
    std::size_t composite_total = 0;  // tagged length of the composite description
    std::size_t log_term = 0;         // composite_total - c_v - l_uw
    std::size_t c_x = 0;              // C-hat(x) with the composite installed
    std::size_t c_x_base = 0;         // C-hat(x) on the base suite
    bool replay_ok = false;
    std::string suite_version;
    std::string text() const;
    std::string csv() const;
};

/// Builds the three-part description (self_delim'd witness of v,
/// self_delim'd l(u), literal uw), installs the matching composite decoder,
/// verifies the replay and reports both sides of the inequality.
SubstringBoundReport substring_bound_check(const DecoderSuite& suite, const Word& x,
                                           std::size_t u_len, std::size_t v_len);

struct CensusCell {
    std::size_t n = 0;
    std::size_t c = 0;
    std::size_t threshold = 0;      // floor(log(n+1)) + c
    std::size_t d_an = 0;           // |{x in {0,1}^n : C-hat(x) <= threshold}|
    std::size_t prefix_closed = 0;  // length-n words all of whose prefixes stay under their thresholds
};

struct CensusReport {
    std::size_t n_max = 0;
    std::vector<std::size_t> c_values;
    std::vector<CensusCell> cells;   // ordered by (n, c)
    std::string suite_version;
    std::string text() const;
    std::string csv() const;
};

/// The A_n census: exhaustive over {0,1}^n for n <= n_max (n_max <= 18).
CensusReport a_n_census(std::size_t n_max, const std::vector<std::size_t>& c_values,
                        const DecoderSuite& suite);

/// Witness dump helpers: "<bit count>:<hex nibbles>" with bits left-aligned.
std::string bits_to_hex(const Word& bits);
Word hex_to_bits(const std::string& dump);

} // namespace kclab
