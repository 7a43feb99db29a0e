#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kclab/codec.hpp"
#include "kclab/kolmogorov.hpp"
#include "kclab/zoo.hpp"

namespace kclab {

/// A fixed tiny register machine standing in for "the i-th Turing machine"
/// at desk scale. Programs are strings over the instruction alphabet,
/// enumerated length-lex; every report names the interpreter version.
///
/// One accumulator A (starts at the input value, never negative); one step
/// per executed instruction, falling off the end costs one step too:
///   i  A += 1          d  A = max(A-1, 0)
///   z  skip the next instruction when A == 0
///   b  jump back to the start of the program
///   h  halt
namespace toy {

constexpr std::string_view kAlphabet = "idzbh";
constexpr std::string_view kVersion = "toy-rm v1";

/// 1-indexed length-lex enumeration; program 1 is the empty program.
std::string nth_program(const Natural& index);

/// Steps until the program halts on the given input, if that happens
/// within the budget.
std::optional<std::size_t> halt_time(const std::string& program, const Natural& input,
                                     std::size_t budget);

/// Does the i-th program halt on input i within T steps?
bool halts_within(std::size_t i, std::size_t T);

} // namespace toy

struct BitSequencePrefix {
    std::string provenance;
    Word bits;
};

struct LambdaReport {
    BitSequencePrefix seq;
    std::size_t cost_given_n = 0; // C-hat(lambda_{1:n} | n)
    std::string suite_version;
};

/// lambda = chi of the empty prefix; shares the chi_prefix implementation.
LambdaReport lambda_prefix(const LanguageOracle& L, std::size_t n, const DecoderSuite& suite);

/// Bounded-halting bits k^T_{1:n}: bit i is 1 iff the i-th toy program
/// halts on input i within T steps. Pointwise monotone in T.
BitSequencePrefix halting_prefix(std::size_t T, std::size_t n);

/// h = k_1 0^2 k_2 0^4 ... : k-bit positions follow pos(1) = 1,
/// pos(i+1) = pos(i) + 2^i + 1; every other position is 0.
BitSequencePrefix sparse_sequence(const Word& kbits, std::size_t n);

/// Positions of the k-bits within h (1-based).
std::vector<std::size_t> sparse_positions(std::size_t n);

/// Membership of the i-th enumerated word discoverable within a step
/// budget; monotone in the budget.
struct BoundedSemiDecider {
    std::string name;
    std::function<bool(std::size_t index, std::size_t budget)> accepts_within;
};

BoundedSemiDecider halting_semi_decider();
BoundedSemiDecider empty_semi_decider();
BoundedSemiDecider sigma_star_semi_decider();

struct ReProbeReport {
    std::string semi_name;
    std::size_t n = 0;
    std::size_t T = 0;
    std::size_t members_found = 0;        // m
    Word lambda_t;                        // lambda^T_{1:n}
    std::size_t bound_bits = 0;           // C-hat(lambda^T | n) via the count decoder
    std::size_t fixed_width_bits = 0;     // tagged cost with m in l(n) bits given n
    std::size_t floor_log_n = 0;          // l(n) = floor(log2(n+1))
    bool witness_ok = false;
    std::string suite_version;

    std::string text() const;
};

/// The classic r.e. upper bound made executable: install a decoder that
/// reconstructs lambda^T_{1:n} from n and the member count m by dovetailing
/// the semi-decider, then report C-hat(lambda^T_{1:n} | n) <= ~log n + c.
ReProbeReport re_upperbound_probe(const BoundedSemiDecider& semi, std::size_t n, std::size_t T,
                                  const DecoderSuite& suite, std::size_t dovetail_cap = 1u << 16);

/// The count decoder used by the probe, installable on its own.
DecoderSuite install_count_decoder(const DecoderSuite& suite, const BoundedSemiDecider& semi,
                                   std::size_t dovetail_cap = 1u << 16);

} // namespace kclab
