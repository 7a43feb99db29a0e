#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "kclab/codec.hpp"

namespace kclab {

/// Deterministic finite automaton with a total transition function.
/// States are numbered 0..states-1; the alphabet is kept sorted.
struct Dfa {
    std::string alphabet;
    std::size_t states = 0;
    std::size_t start = 0;
    std::vector<char> accepting;        // one flag per state
    std::vector<std::size_t> delta;     // delta[q * alphabet.size() + symbol_index]

    std::size_t symbol_index(char c) const;     // throws on foreign symbols
    std::size_t step(std::size_t q, char c) const;

    struct RunResult {
        std::size_t state;
        bool accepted;
    };

    /// Extended transition delta'(w, start); run of eps returns the start state.
    /// Throws naming the offending position if a symbol is outside the alphabet.
    RunResult run(std::string_view w) const;
    std::size_t state_after(std::string_view w) const { return run(w).state; }
    bool accepts(std::string_view w) const { return run(w).accepted; }

    void validate() const;              // totality and index ranges
};

enum class DfaCombineOp { Complement, Union, Intersection };

/// Complement flips the accepting set; union/intersection build the product.
/// Union/intersection require identical alphabets.
Dfa dfa_combine(DfaCombineOp op, const Dfa& a, const Dfa* b = nullptr);

/// Unique minimal machine (up to renaming; states are renumbered in BFS
/// order so equal-language inputs minimize to identical structures).
Dfa dfa_minimize(const Dfa& a);

/// Language equality. Machines over different alphabets are never equal.
bool dfa_equiv(const Dfa& a, const Dfa& b);

/// First word (length-lex) where the two machines disagree, if any.
std::optional<Word> dfa_first_difference(const Dfa& a, const Dfa& b, std::size_t max_len = 32);

constexpr char kEpsilon = '\0';

/// Deterministic pushdown automaton. Transitions map (state, input-or-eps,
/// stack top) to (state, push string). Push strings are stored bottom-first,
/// so the last char of `push` becomes the new stack top. Acceptance is by
/// final state after consuming the whole input.
struct Dpda {
    std::string alphabet;
    std::string stack_alphabet;
    char bottom = 'Z';
    std::size_t states = 0;
    std::size_t start = 0;
    std::vector<char> accepting;

    struct Target {
        std::size_t to;
        std::string push;               // bottom-first; empty means pop
    };
    std::map<std::tuple<std::size_t, char, char>, Target> transitions;

    const Target* find(std::size_t q, char input, char top) const;
    bool has_eps(std::size_t q, char top) const { return find(q, kEpsilon, top) != nullptr; }

    /// Default cap on consecutive eps-moves: 10 * |Q| * |Gamma|.
    std::size_t default_eps_limit() const { return 10 * states * stack_alphabet.size(); }

    /// Determinism: an eps-move at (q, top) excludes all input moves there,
    /// and there is at most one move per (q, a, top). The bottom marker stays
    /// at the bottom: it is re-pushed exactly when it was the popped top and
    /// never appears elsewhere in a push string. Throws on violation.
    void validate() const;
};

enum class RunOutcome { Accepted, Rejected, Stuck };

/// One machine step: either consumes the input symbol at `input_pos`
/// (consumed = true, 1-based position) or is an eps-move.
struct RunStep {
    std::size_t input_pos;
    std::size_t state;
    std::size_t height;
    bool consumed;
};

struct DpdaRunTrace {
    std::vector<RunStep> steps;
    std::size_t final_state = 0;
    bool accepted = false;
    RunOutcome outcome = RunOutcome::Rejected;
    std::string final_stack;                        // bottom-first
    /// Stack height after each consumed symbol, sampled once the eps-moves
    /// that follow it settle; index i-1 belongs to symbol i.
    std::vector<std::size_t> heights_after_symbol;
    /// Full stacks at the same checkpoints; filled when record_stacks is set.
    std::vector<std::string> stacks_after_symbol;
    std::size_t consumed = 0;
};

struct DpdaRunOptions {
    std::optional<std::size_t> eps_limit;           // overrides default_eps_limit
    bool record_stacks = false;
    std::optional<std::size_t> start_state;         // continuation support
    std::optional<std::string> start_stack;
};

/// Deterministic run of m on w. Stuck configurations reject (flagged in
/// outcome); hitting the eps budget throws an eps-loop Error.
DpdaRunTrace dpda_run(const Dpda& m, std::string_view w, const DpdaRunOptions& opts = {});

/// --- Automaton text format ---------------------------------------------
/// Line-oriented, '#' comments, whitespace-separated tokens:
///   type dfa|dpda
///   alphabet <symbols...>          (single-char symbols)
///   states <count>                 (states named 0..count-1)
///   start <q>
///   accept <q...>
///   dfa:  trans <q> <symbol> <q'>
///   dpda: stack <symbols...>, bottom <symbol>,
///         trans <q> <symbol|eps> <top> <q'> <push-string|->
///         push-string is written top-last; '-' pops (pushes nothing).
/// The first validation failure is reported with its line number.

std::variant<Dfa, Dpda> parse_automaton(std::istream& in);
std::variant<Dfa, Dpda> parse_automaton_text(const std::string& text);
std::variant<Dfa, Dpda> load_automaton(const std::string& path);
Dfa load_dfa(const std::string& path);
Dpda load_dpda(const std::string& path);

std::string format_automaton(const Dfa& a);
std::string format_automaton(const Dpda& m);

} // namespace kclab
