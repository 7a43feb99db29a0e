#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kclab/automata.hpp"
#include "kclab/codec.hpp"
#include "kclab/kolmogorov.hpp"
#include "kclab/zoo.hpp"

namespace kclab {

/// Characteristic sequence of the residual L_x along the length-lex order:
/// bit i is the membership of x ++ y_i, with y_1 = eps.
struct CharSeq {
    Word base;
    std::string oracle;
    Word bits;
};

CharSeq chi_prefix(const LanguageOracle& L, const Word& x, std::size_t n);

/// chi rows for every x with l(x) <= max_prefix_len over the oracle's
/// alphabet, labels in length-lex order.
struct ResidualTable {
    std::string oracle;
    std::size_t max_prefix_len = 0;
    std::size_t columns = 0;
    std::vector<Word> labels;
    std::vector<Word> rows;

    std::size_t distinct_rows() const;
    /// Distinct rows among labels of length <= p only.
    std::size_t distinct_rows_up_to(std::size_t p) const;
};

ResidualTable residual_table(const LanguageOracle& L, std::size_t max_prefix_len, std::size_t columns,
                             std::size_t cell_budget = std::size_t{1} << 22);

struct SynthesisResult {
    std::optional<Dfa> dfa;
    std::string failure;        // why the table was inconclusive
    Word failing_label;         // witness label, when one exists
    std::size_t distinct = 0;

    bool ok() const { return dfa.has_value(); }
};

/// Observation-table synthesis: states are the distinct chi rows. Succeeds
/// only when the table is closed and consistent and the built machine agrees
/// with the oracle on every word of length <= max_prefix_len + 1.
SynthesisResult synthesize_dfa(const LanguageOracle& L, std::size_t max_prefix_len,
                               std::size_t columns,
                               std::size_t cell_budget = std::size_t{1} << 22);

struct VerdictOptions {
    /// Strict growth across this many consecutive P values counts as
    /// nonregular evidence.
    std::size_t growth_window = 3;
    std::size_t cell_budget = std::size_t{1} << 22;
};

struct VerdictLevel {
    std::size_t prefix_len = 0;
    std::size_t labels = 0;
    std::size_t distinct = 0;
};

struct VerdictReport {
    std::string oracle;
    std::size_t p_max = 0;
    std::size_t columns = 0;
    std::vector<VerdictLevel> levels;
    std::string verdict;                     // regular-evidence | nonregular-evidence | inconclusive
    std::optional<std::size_t> hypothesis_states;
    std::string synthesis_failure;
    std::size_t max_row_cost = 0;            // max over distinct rows of C-hat(chi)
    std::size_t max_row_cost_given_n = 0;    // ... of C-hat(chi | n)
    std::string suite_version;

    std::string text() const;
    std::string csv() const;
};

/// Row growth + synthesis + per-row complexity bounds. When synthesis
/// succeeds, the synthesized machine's row decoder joins the suite before
/// the per-row bounds are measured, which is what makes C-hat(chi|n) flat
/// for regular languages. The verdict is heuristic and labeled as such.
VerdictReport regularity_verdict(const LanguageOracle& L, std::size_t p_max, std::size_t columns,
                                 const DecoderSuite& suite, const VerdictOptions& opts = {});

} // namespace kclab
