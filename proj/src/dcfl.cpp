#include "kclab/dcfl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kclab {

namespace {

struct UPhase {
    std::size_t state;
    std::string stack;
};

UPhase run_u_phase(const Dpda& m, const Word& u) {
    const DpdaRunTrace trace = dpda_run(m, u);
    if (trace.outcome == RunOutcome::Stuck) {
        throw Error("dcfl: the machine gets stuck while reading the u part (\"" + u + "\")");
    }
    return UPhase{trace.final_state, trace.final_stack};
}

Word repeat_blocks(const Word& y, std::size_t k, const Word& x) {
    Word u;
    u.reserve(y.size() * k + x.size());
    for (std::size_t i = 0; i < k; ++i) u += y;
    u += x;
    return u;
}

std::size_t ceil_log2(std::size_t v) {
    std::size_t bits = 0;
    std::size_t pow = 1;
    while (pow < v) {
        pow *= 2;
        ++bits;
    }
    return bits;
}

} // namespace

std::string StackProfile::sparkline() const {
    std::string s;
    s.reserve(heights.size());
    for (std::size_t h : heights) s.push_back(static_cast<char>('0' + h % 10));
    return s;
}

StackProfile stack_profile(const Dpda& m, const Word& w) {
    const DpdaRunTrace trace = dpda_run(m, w);
    StackProfile p;
    p.input = w;
    p.heights = trace.heights_after_symbol;
    p.final_stack = trace.final_stack;
    p.outcome = trace.outcome;
    p.never_pop_floor.resize(p.heights.size());
    std::size_t floor = p.heights.empty() ? 0 : p.heights.back();
    for (std::size_t i = p.heights.size(); i-- > 0;) {
        floor = std::min(floor, p.heights[i]);
        p.never_pop_floor[i] = floor;
    }
    return p;
}

CaseEvidence case_classify(const Dpda& m, const Word& u, const Word& v, std::size_t c1) {
    if (c1 == 0) throw Error("case_classify: c1 must be >= 1 (the bottom marker never leaves)");
    const UPhase after_u = run_u_phase(m, u);

    CaseEvidence e;
    e.height_after_u = after_u.stack.size();
    e.min_height_in_v = after_u.stack.size();
    if (after_u.stack.size() <= c1) {
        e.kind = StackCase::Case1;
        e.v_position = 0;
        e.v_outcome = RunOutcome::Accepted; // vacuous, nothing of v needed
        if (!v.empty()) {
            const DpdaRunTrace t =
                dpda_run(m, v, DpdaRunOptions{{}, false, after_u.state, after_u.stack});
            e.v_outcome = t.outcome;
        }
        return e;
    }

    DpdaRunOptions opts;
    opts.start_state = after_u.state;
    opts.start_stack = after_u.stack;
    const DpdaRunTrace t = dpda_run(m, v, opts);
    e.v_outcome = t.outcome;
    // Scan every configuration of the v phase, eps-steps included.
    for (const RunStep& step : t.steps) {
        e.min_height_in_v = std::min(e.min_height_in_v, step.height);
        if (step.height <= c1) {
            e.kind = StackCase::Case1;
            e.v_position = step.input_pos;
            return e;
        }
    }
    e.kind = StackCase::Case2;
    return e;
}

std::optional<CycleReport> cycle_detect(const Dpda& m, const Word& x, const Word& y,
                                        std::size_t max_blocks) {
    if (y.empty()) throw Error("cycle_detect: y must be nonempty");
    for (char c : y) {
        if (m.alphabet.find(c) == std::string::npos) {
            throw Error(std::string("cycle_detect: y symbol '") + c + "' not in the machine alphabet");
        }
    }
    for (char c : x) {
        if (m.alphabet.find(c) == std::string::npos) {
            throw Error(std::string("cycle_detect: x symbol '") + c + "' not in the machine alphabet");
        }
    }

    const std::size_t eps_limit = m.default_eps_limit();
    std::size_t state = m.start;
    std::string stack(1, m.bottom);
    std::size_t eps_run = 0;

    struct Snapshot {
        std::size_t block;      // 1-based
        std::size_t offset;     // 1-based position within y
        std::size_t state;
        char top;
        std::size_t height;
        std::size_t step_index; // position in the global height sequence
    };
    std::vector<Snapshot> snapshots;
    std::vector<std::size_t> step_heights;

    const auto note_height = [&]() { step_heights.push_back(stack.size()); };

    const auto closure = [&]() {
        for (;;) {
            if (stack.empty()) return;
            const Dpda::Target* t = m.find(state, kEpsilon, stack.back());
            if (t == nullptr) return;
            if (++eps_run > eps_limit) {
                throw Error("cycle_detect: eps-move budget exhausted while reading y-blocks");
            }
            stack.pop_back();
            stack += t->push;
            state = t->to;
            note_height();
        }
    };

    std::map<std::pair<std::size_t, std::string>, std::size_t> block_configs;
    bool stuck = false;

    closure();
    note_height();
    for (std::size_t block = 1; block <= max_blocks && !stuck; ++block) {
        const auto config = std::make_pair(state, stack);
        if (block_configs.count(config)) {
            return std::nullopt; // exact configuration repeats: bounded stack
        }
        block_configs.emplace(config, block);
        for (std::size_t j = 0; j < y.size(); ++j) {
            snapshots.push_back(
                Snapshot{block, j + 1, state, stack.back(), stack.size(), step_heights.size() - 1});
            const Dpda::Target* t = m.find(state, y[j], stack.back());
            if (t == nullptr) {
                stuck = true; // the y-stream jams: the stack stays bounded
                break;
            }
            stack.pop_back();
            stack += t->push;
            state = t->to;
            eps_run = 0;
            note_height();
            closure();
        }
    }
    if (stuck) return std::nullopt;

    // Suffix minima over every configuration height; a snapshot sits at a
    // never-popped-again level when nothing later dips below it.
    std::vector<std::size_t> suffix_min(step_heights.size());
    std::size_t running = step_heights.back();
    for (std::size_t i = step_heights.size(); i-- > 0;) {
        running = std::min(running, step_heights[i]);
        suffix_min[i] = running;
    }

    std::map<std::tuple<std::size_t, std::size_t, char>, const Snapshot*> first_seen;
    std::size_t npa_count = 0;
    for (const Snapshot& snap : snapshots) {
        if (suffix_min[snap.step_index] < snap.height) continue; // popped later
        ++npa_count;
        const auto key = std::make_tuple(snap.state, snap.offset, snap.top);
        const auto it = first_seen.find(key);
        if (it == first_seen.end()) {
            first_seen.emplace(key, &snap);
            continue;
        }
        const Snapshot& first = *it->second;
        const std::size_t period = snap.block - first.block;
        if (period == 0) continue;
        if (snap.height < first.height) continue;
        const std::size_t growth = snap.height - first.height;
        if (growth == 0) continue; // no net growth; wait for a growing repeat
        // Confirm one more period ahead before reporting.
        const std::size_t confirm_block = first.block + 2 * period;
        bool confirmed = false;
        for (const Snapshot& later : snapshots) {
            if (later.block == confirm_block && later.offset == first.offset &&
                later.state == first.state && later.top == first.top &&
                later.height == first.height + 2 * growth &&
                suffix_min[later.step_index] >= later.height) {
                confirmed = true;
                break;
            }
        }
        if (!confirmed) continue;
        CycleReport r;
        r.preamble_blocks = first.block - 1;
        r.period_blocks = period;
        r.growth_per_period = growth;
        r.state = first.state;
        r.offset_in_y = first.offset;
        r.stack_top = first.top;
        r.first_height = first.height;
        r.triples_seen = npa_count;
        // pigeonhole over the (state, offset, top) space
        const std::size_t triple_space = m.states * m.stack_alphabet.size() * y.size();
        if (r.preamble_blocks + r.period_blocks > triple_space) {
            throw Error("cycle_detect: repetition later than the triple space allows (detector bug)");
        }
        return r;
    }

    std::ostringstream os;
    os << "cycle_detect: no repeating triple within " << max_blocks << " blocks ("
       << npa_count << " never-popped-again triples observed)";
    throw Error(os.str());
}

ExperimentReport kcdcfl_experiment(const Dpda& m, const Word& x, const Word& y,
                                   const Word& omega_prefix, std::size_t n,
                                   const DecoderSuite& suite, const ExperimentOptions& opts) {
    if (y.empty()) throw Error("kcdcfl_experiment: y must be nonempty");
    if (omega_prefix.size() < n) {
        throw Error("kcdcfl_experiment: omega prefix shorter than the requested n");
    }
    if (opts.oracle != nullptr) {
        const DiffResult diff = dpda_vs_oracle_diff(m, *opts.oracle, opts.oracle_check_len);
        if (!diff.agree()) {
            throw Error("kcdcfl_experiment: machine disagrees with oracle '" + opts.oracle->name +
                        "' on \"" + *diff.disagreement + "\"");
        }
    }

    ExperimentReport r;
    r.x = x;
    r.y = y;
    r.u_blocks = opts.u_blocks;
    r.c1 = opts.c1.value_or(m.stack_alphabet.size() + 1);
    r.v = omega_prefix.substr(0, n);
    r.stack_bits_per_symbol = ceil_log2(m.stack_alphabet.size());
    r.suite_version = suite.version();
    {
        std::ostringstream os;
        os << m.states << " states, stack {" << m.stack_alphabet
           << "}; reading order: y-blocks then x";
        r.machine_note = os.str();
    }

    const Word u = repeat_blocks(y, opts.u_blocks, x);
    const UPhase after_u = run_u_phase(m, u);
    r.stack_after_u = after_u.stack;

    r.evidence = case_classify(m, u, r.v, r.c1);
    r.kind = r.evidence.kind;

    const StackProfile profile = stack_profile(m, u + r.v);
    r.profile_sparkline = profile.sparkline();

    r.acceptance_stream.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const DpdaRunTrace t = dpda_run(m, u + r.v.substr(0, i));
        r.acceptance_stream.push_back(t.accepted ? '1' : '0');
    }

    if (r.kind == StackCase::Case2) {
        r.cycle = cycle_detect(m, x, y, opts.max_blocks);
        if (r.cycle) {
            if (opts.u_blocks + r.cycle->period_blocks > opts.max_blocks) {
                throw Error("kcdcfl_experiment: no admissible u' block count within the horizon");
            }
            // Prefer a pumped block count whose own description is short,
            // mirroring the cheap choice of l(u').
            std::size_t best_blocks = 0;
            std::size_t best_cost = 0;
            for (std::size_t j = 1; j <= 8; ++j) {
                const std::size_t k = opts.u_blocks + j * r.cycle->period_blocks;
                if (k > opts.max_blocks) break;
                const std::size_t cost = suite.estimate(word_of_nat(Natural(k))).value;
                if (best_blocks == 0 || cost < best_cost) {
                    best_blocks = k;
                    best_cost = cost;
                }
            }
            r.u_prime_blocks = best_blocks;
            r.c_uprime_blocks_cost = best_cost;
            const Word u_prime = repeat_blocks(y, r.u_prime_blocks, x);
            const UPhase after_u_prime = run_u_phase(m, u_prime);
            r.stack_after_u_prime = after_u_prime.stack;
            r.same_state = after_u.state == after_u_prime.state;
            r.top_segment_len =
                after_u.stack.size() > r.c1 ? after_u.stack.size() - r.c1 : 0;
            if (after_u_prime.stack.size() >= r.top_segment_len) {
                r.same_top_segment =
                    after_u.stack.substr(after_u.stack.size() - r.top_segment_len) ==
                    after_u_prime.stack.substr(after_u_prime.stack.size() - r.top_segment_len);
            }
        }
    }

    for (std::size_t i = 0; i < opts.residual_budget; ++i) {
        const Word cand = length_lex_word(Natural(i), m.alphabet);
        const DpdaRunTrace t = dpda_run(m, u + r.v + cand);
        if (t.accepted) {
            r.first_residual_word = cand;
            break;
        }
    }

    const auto binary = [](const Word& w) {
        return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
    };
    if (binary(r.v)) r.c_v = suite.estimate(r.v).value;
    if (r.first_residual_word && binary(*r.first_residual_word)) {
        r.c_w = suite.estimate(*r.first_residual_word).value;
    }
    return r;
}

std::string ExperimentReport::text() const {
    std::ostringstream os;
    os << "kc-dcfl experiment (suite " << suite_version << ")\n"
       << "machine: " << machine_note << "\n"
       << "parameters: x=\"" << x << "\" y=\"" << y << "\" u=y^" << u_blocks << " x, n=" << v.size()
       << ", c1=" << c1 << " (stack symbols; ceil(log|Gamma|)=" << stack_bits_per_symbol
       << " bits/symbol)\n"
       << "profile: " << profile_sparkline << "\n"
       << "classification: " << (kind == StackCase::Case1 ? "Case1" : "Case2");
    if (kind == StackCase::Case1) {
        os << " at v-position " << evidence.v_position;
    } else {
        os << " (min height in v = " << evidence.min_height_in_v << ")";
    }
    os << "; height after u = " << evidence.height_after_u << "\n"
       << "acceptance stream over omega prefix: " << acceptance_stream << "\n";
    if (cycle) {
        os << "cycle: preamble " << cycle->preamble_blocks << " blocks, period "
           << cycle->period_blocks << " blocks, growth " << cycle->growth_per_period
           << " symbols, triple (q" << cycle->state << ", offset " << cycle->offset_in_y << ", '"
           << cycle->stack_top << "')\n"
           << "u' = y^" << u_prime_blocks << " x (block count cost " << c_uprime_blocks_cost
           << " bits)\n"
           << "verification: same state " << (same_state ? "yes" : "NO") << ", same top "
           << top_segment_len << " symbols " << (same_top_segment ? "yes" : "NO") << "\n";
    } else if (kind == StackCase::Case2) {
        os << "cycle: none (bounded stack; reduces to Case1 with v = eps)\n";
    }
    if (first_residual_word) {
        os << "first residual word after uv: \"" << *first_residual_word << "\"\n";
    } else {
        os << "first residual word after uv: none within budget\n";
    }
    os << "C table: C(v) = " << c_v << ", C(w) = " << c_w << "\n";
    return os.str();
}

std::string ExperimentReport::csv() const {
    std::ostringstream os;
    os << "case," << (kind == StackCase::Case1 ? 1 : 2) << "\n"
       << "c1," << c1 << "\n"
       << "height_after_u," << evidence.height_after_u << "\n"
       << "v_position," << evidence.v_position << "\n"
       << "min_height_in_v," << evidence.min_height_in_v << "\n"
       << "cycle_found," << (cycle ? 1 : 0) << "\n";
    if (cycle) {
        os << "preamble_blocks," << cycle->preamble_blocks << "\n"
           << "period_blocks," << cycle->period_blocks << "\n"
           << "growth_per_period," << cycle->growth_per_period << "\n"
           << "u_prime_blocks," << u_prime_blocks << "\n"
           << "same_state," << (same_state ? 1 : 0) << "\n"
           << "same_top_segment," << (same_top_segment ? 1 : 0) << "\n"
           << "top_segment_len," << top_segment_len << "\n";
    }
    os << "first_residual_word," << (first_residual_word ? *first_residual_word : "-") << "\n"
       << "c_v," << c_v << "\n"
       << "c_w," << c_w << "\n";
    return os.str();
}

DiffResult dpda_vs_oracle_diff(const Dpda& m, const LanguageOracle& L, std::size_t max_len) {
    std::string oracle_alphabet = L.alphabet;
    std::sort(oracle_alphabet.begin(), oracle_alphabet.end());
    if (m.alphabet != oracle_alphabet) {
        throw Error("dpda_vs_oracle_diff: machine alphabet \"" + m.alphabet +
                    "\" differs from oracle alphabet \"" + L.alphabet + "\"");
    }
    DiffResult r;
    for (Natural i = 0;; ++i) {
        const Word w = length_lex_word(i, m.alphabet);
        if (w.size() >= max_len) break;
        ++r.words_checked;
        const bool machine = dpda_run(m, w).accepted;
        const bool oracle = L.member(w);
        if (machine != oracle) {
            r.disagreement = w;
            r.machine_accepts = machine;
            r.oracle_accepts = oracle;
            return r;
        }
    }
    return r;
}

} // namespace kclab
