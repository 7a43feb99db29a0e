#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kclab/automata.hpp"
#include "kclab/codec.hpp"
#include "kclab/kolmogorov.hpp"
#include "kclab/zoo.hpp"

namespace kclab {

/// Stack height record of one run. Heights count stack symbols including
/// the bottom marker; entry i-1 is taken after consuming symbol i, once the
/// eps-moves that follow it settle.
struct StackProfile {
    Word input;
    std::vector<std::size_t> heights;
    /// Right-to-left running minima: level below which the stack never dips
    /// again from this point on ("never popped again" levels).
    std::vector<std::size_t> never_pop_floor;
    std::string final_stack;
    RunOutcome outcome = RunOutcome::Rejected;

    std::string sparkline() const; // heights as digits mod 10
};

StackProfile stack_profile(const Dpda& m, const Word& w);

enum class StackCase { Case1, Case2 };

struct CaseEvidence {
    StackCase kind = StackCase::Case2;
    std::size_t height_after_u = 0;
    /// Case1: v-symbols consumed when the height first dipped to <= c1
    /// (0 when the stack was already that low before v).
    std::size_t v_position = 0;
    /// Minimum height seen anywhere in the v phase (every configuration,
    /// eps-steps included).
    std::size_t min_height_in_v = 0;
    RunOutcome v_outcome = RunOutcome::Rejected;
};

/// The Case 1 / Case 2 dichotomy: does processing v pop the u-stack down
/// to at most c1 symbols, or does the stack stay high?
CaseEvidence case_classify(const Dpda& m, const Word& u, const Word& v, std::size_t c1);

/// Repetition of a (state, offset-in-y, stack top) triple at never-popped-
/// again levels while reading y-blocks; its recurrence is the periodic
/// stack growth of the pumping construction.
struct CycleReport {
    std::size_t preamble_blocks = 0;  // full blocks before the first occurrence
    std::size_t period_blocks = 0;
    std::size_t growth_per_period = 0; // stack symbols
    std::size_t state = 0;
    std::size_t offset_in_y = 0;       // 1-based position within y
    char stack_top = 0;
    std::size_t first_height = 0;
    std::size_t triples_seen = 0;
};

/// Simulates m on y^k (the reading order of a suffix of ...yyx) for up to
/// max_blocks blocks. Returns nullopt when the stack stays bounded (the
/// machine cycles through configurations or gets stuck); throws a horizon
/// Error when no repetition shows up within max_blocks.
std::optional<CycleReport> cycle_detect(const Dpda& m, const Word& x, const Word& y,
                                        std::size_t max_blocks);

struct ExperimentOptions {
    std::size_t u_blocks = 4;          // u = y^{u_blocks} ++ x
    std::size_t max_blocks = 256;      // cycle detection horizon
    std::size_t residual_budget = 1u << 14;
    std::optional<std::size_t> c1;     // default |Gamma| + 1
    const LanguageOracle* oracle = nullptr; // consistency precheck when given
    std::size_t oracle_check_len = 8;
};

struct ExperimentReport {
    std::string machine_note;
    Word x, y, v;
    std::size_t u_blocks = 0;
    std::size_t c1 = 0;
    StackCase kind = StackCase::Case1;
    CaseEvidence evidence;
    std::string stack_after_u;
    std::string profile_sparkline;
    /// Item (i)'s observation channel: acceptance bit of u ++ v_{1:i} for
    /// i = 0..n.
    Word acceptance_stream;
    // Case 2 pumping data
    std::optional<CycleReport> cycle;
    std::size_t u_prime_blocks = 0;
    std::size_t c_uprime_blocks_cost = 0; // C-hat of the block count word
    std::string stack_after_u_prime;
    bool same_state = false;
    bool same_top_segment = false;
    std::size_t top_segment_len = 0;
    // residual probe
    std::optional<Word> first_residual_word; // first w with uv w accepted
    std::size_t c_v = 0;
    std::size_t c_w = 0;
    std::size_t stack_bits_per_symbol = 0; // ceil(log2 |Gamma|)
    std::string suite_version;

    std::string text() const;
    std::string csv() const;
};

/// The pumping experiment: classify uv, and in Case 2 build u' from the
/// detected cycle and verify the same-state / same-top-segment claim
/// symbol-for-symbol. Reading order: u is fed as y-blocks then x.
ExperimentReport kcdcfl_experiment(const Dpda& m, const Word& x, const Word& y,
                                   const Word& omega_prefix, std::size_t n, const DecoderSuite& suite,
                                   const ExperimentOptions& opts = {});

struct DiffResult {
    std::optional<Word> disagreement;
    bool machine_accepts = false;
    bool oracle_accepts = false;
    std::size_t words_checked = 0;

    bool agree() const { return !disagreement.has_value(); }
};

/// Length-lex scan of every word with l(w) < max_len; returns the first
/// word where machine acceptance differs from oracle membership, or an
/// agreement certificate carrying the count of words checked.
DiffResult dpda_vs_oracle_diff(const Dpda& m, const LanguageOracle& L, std::size_t max_len);

} // namespace kclab
