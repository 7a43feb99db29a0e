#include "kclab/charseq.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace kclab {

namespace {

std::vector<Word> enumeration_columns(const std::string& alphabet, std::size_t n) {
    std::vector<Word> cols;
    cols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cols.push_back(length_lex_word(Natural(i), alphabet));
    return cols;
}

Word row_for(const LanguageOracle& L, const Word& x, const std::vector<Word>& cols) {
    Word bits(cols.size(), '0');
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (L.member(x + cols[i])) bits[i] = '1';
    }
    return bits;
}

std::vector<Word> labels_up_to(const std::string& alphabet, std::size_t max_len) {
    std::vector<Word> labels{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = labels.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (char c : alphabet) labels.push_back(labels[i] + c);
        }
        level_begin = level_end;
    }
    return labels;
}

std::size_t label_count(std::size_t alphabet_size, std::size_t max_len) {
    std::size_t total = 0;
    std::size_t level = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        total += level;
        level *= alphabet_size;
    }
    return total;
}

} // namespace

CharSeq chi_prefix(const LanguageOracle& L, const Word& x, std::size_t n) {
    if (n == 0) throw Error("chi_prefix: n must be >= 1");
    const auto cols = enumeration_columns(L.alphabet, n);
    return CharSeq{x, L.name, row_for(L, x, cols)};
}

std::size_t ResidualTable::distinct_rows() const {
    return std::set<Word>(rows.begin(), rows.end()).size();
}

std::size_t ResidualTable::distinct_rows_up_to(std::size_t p) const {
    std::set<Word> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].size() <= p) seen.insert(rows[i]);
    }
    return seen.size();
}

ResidualTable residual_table(const LanguageOracle& L, std::size_t max_prefix_len,
                             std::size_t columns, std::size_t cell_budget) {
    if (columns == 0) throw Error("residual_table: need at least one column");
    const std::size_t n_labels = label_count(L.alphabet.size(), max_prefix_len);
    if (n_labels * columns > cell_budget) {
        std::ostringstream os;
        os << "residual_table: " << n_labels << " rows x " << columns
           << " columns exceeds the cell budget of " << cell_budget
           << "; lower P or n";
        throw Error(os.str());
    }
    ResidualTable t;
    t.oracle = L.name;
    t.max_prefix_len = max_prefix_len;
    t.columns = columns;
    t.labels = labels_up_to(L.alphabet, max_prefix_len);
    const auto cols = enumeration_columns(L.alphabet, columns);
    t.rows.reserve(t.labels.size());
    for (const Word& x : t.labels) t.rows.push_back(row_for(L, x, cols));
    return t;
}

SynthesisResult synthesize_dfa(const LanguageOracle& L, std::size_t max_prefix_len,
                               std::size_t columns, std::size_t cell_budget) {
    // Rows for every label up to length P+1; the extra level provides the
    // one-symbol extensions for the closedness and consistency checks.
    const std::size_t n_labels = label_count(L.alphabet.size(), max_prefix_len + 1);
    if (n_labels * columns > cell_budget) {
        std::ostringstream os;
        os << "synthesize_dfa: " << n_labels << " rows x " << columns
           << " columns exceeds the cell budget of " << cell_budget;
        throw Error(os.str());
    }
    const auto cols = enumeration_columns(L.alphabet, columns);
    const auto labels = labels_up_to(L.alphabet, max_prefix_len + 1);
    std::map<Word, Word> row_of; // label -> row
    for (const Word& x : labels) row_of[x] = row_for(L, x, cols);

    SynthesisResult result;

    // Distinct rows among base labels, in first-seen (length-lex) order.
    std::vector<Word> row_order;
    std::map<Word, std::size_t> row_index;
    std::map<Word, Word> representative;
    for (const Word& x : labels) {
        if (x.size() > max_prefix_len) break;
        const Word& r = row_of[x];
        if (!row_index.count(r)) {
            row_index[r] = row_order.size();
            row_order.push_back(r);
            representative[r] = x;
        }
    }
    result.distinct = row_order.size();

    // Closed: every one-symbol extension row already appears.
    for (const Word& x : labels) {
        if (x.size() > max_prefix_len) break;
        for (char c : L.alphabet) {
            if (!row_index.count(row_of[x + c])) {
                result.failure = "table not closed: the row of \"" + x + c + "\" is new";
                result.failing_label = x + c;
                return result;
            }
        }
    }

    // Consistent: labels sharing a row must keep sharing after any symbol.
    std::map<Word, std::vector<const Word*>> groups;
    for (const Word& x : labels) {
        if (x.size() > max_prefix_len) break;
        groups[row_of[x]].push_back(&x);
    }
    for (const auto& [row, members] : groups) {
        for (char c : L.alphabet) {
            const Word& first_ext = row_of[*members.front() + c];
            for (const Word* x : members) {
                if (row_of[*x + c] != first_ext) {
                    result.failure = "table inconsistent: \"" + *members.front() + "\" and \"" + *x +
                                     "\" share a row but diverge on '" + c + "'";
                    result.failing_label = *x;
                    return result;
                }
            }
        }
    }

    Dfa a;
    a.alphabet = L.alphabet;
    a.states = row_order.size();
    a.accepting.resize(a.states);
    a.delta.resize(a.states * a.alphabet.size());
    a.start = row_index.at(row_of.at(Word{}));
    for (std::size_t q = 0; q < a.states; ++q) {
        a.accepting[q] = row_order[q][0] == '1'; // chi_1 is membership of the label itself
        const Word& rep = representative.at(row_order[q]);
        for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
            a.delta[q * a.alphabet.size() + s] = row_index.at(row_of.at(rep + a.alphabet[s]));
        }
    }
    a.validate();

    // The machine must agree with the oracle on everything the table saw.
    for (const Word& x : labels) {
        if (a.accepts(x) != L.member(x)) {
            result.failure = "synthesized machine disagrees with the oracle on \"" + x + "\"";
            result.failing_label = x;
            return result;
        }
    }

    result.dfa = std::move(a);
    return result;
}

VerdictReport regularity_verdict(const LanguageOracle& L, std::size_t p_max, std::size_t columns,
                                 const DecoderSuite& suite, const VerdictOptions& opts) {
    if (p_max == 0) throw Error("regularity_verdict: p_max must be >= 1");
    const ResidualTable table = residual_table(L, p_max, columns, opts.cell_budget);

    VerdictReport report;
    report.oracle = L.name;
    report.p_max = p_max;
    report.columns = columns;
    report.suite_version = suite.version();

    for (std::size_t p = 1; p <= p_max; ++p) {
        VerdictLevel level;
        level.prefix_len = p;
        level.labels = label_count(L.alphabet.size(), p);
        level.distinct = table.distinct_rows_up_to(p);
        report.levels.push_back(level);
    }

    const bool stable = report.levels.size() >= 2 &&
                        report.levels[report.levels.size() - 1].distinct ==
                            report.levels[report.levels.size() - 2].distinct;

    SynthesisResult synth = synthesize_dfa(L, p_max, columns, opts.cell_budget);
    report.synthesis_failure = synth.failure;

    bool growth_window = false;
    if (report.levels.size() >= opts.growth_window) {
        for (std::size_t i = 0; i + opts.growth_window <= report.levels.size(); ++i) {
            bool strict = true;
            for (std::size_t j = 1; j < opts.growth_window && strict; ++j) {
                strict = report.levels[i + j - 1].distinct < report.levels[i + j].distinct;
            }
            if (strict) {
                growth_window = true;
                break;
            }
        }
    }

    DecoderSuite measuring = suite;
    if (stable && synth.ok()) {
        report.verdict = "regular-evidence";
        report.hypothesis_states = synth.dfa->states;
        measuring = install_row_decoder(suite, *synth.dfa, L.name);
        report.suite_version = measuring.version();
    } else if (growth_window) {
        report.verdict = "nonregular-evidence";
    } else {
        report.verdict = "inconclusive";
    }

    std::set<Word> distinct(table.rows.begin(), table.rows.end());
    for (const Word& row : distinct) {
        report.max_row_cost = std::max(report.max_row_cost, measuring.estimate(row).value);
        report.max_row_cost_given_n =
            std::max(report.max_row_cost_given_n,
                     measuring.estimate(row, Natural(row.size())).value);
    }
    return report;
}

std::string VerdictReport::text() const {
    std::ostringstream os;
    os << "regularity verdict for '" << oracle << "' (P_max=" << p_max << ", n=" << columns
       << ", suite " << suite_version << ")\n";
    os << std::setw(4) << "P" << std::setw(8) << "rows" << std::setw(10) << "distinct" << '\n';
    for (const auto& level : levels) {
        os << std::setw(4) << level.prefix_len << std::setw(8) << level.labels << std::setw(10)
           << level.distinct << '\n';
    }
    os << "verdict: " << verdict;
    if (hypothesis_states) os << " (hypothesis: " << *hypothesis_states << " states)";
    os << " [heuristic]\n";
    if (!synthesis_failure.empty()) os << "synthesis: " << synthesis_failure << '\n';
    os << "max over rows: C(chi) = " << max_row_cost << ", C(chi|n) = " << max_row_cost_given_n
       << '\n';
    return os.str();
}

std::string VerdictReport::csv() const {
    std::ostringstream os;
    os << "P,rows,distinct,verdict\n";
    for (const auto& level : levels) {
        os << level.prefix_len << ',' << level.labels << ',' << level.distinct << ',' << verdict
           << '\n';
    }
    return os.str();
}

} // namespace kclab
