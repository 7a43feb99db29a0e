// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line
// each, every tolerance pinned in code. Exit status is the failure count.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "kclab/charseq.hpp"
#include "kclab/cli.hpp"
#include "kclab/codec.hpp"
#include "kclab/dcfl.hpp"
#include "kclab/kolmogorov.hpp"
#include "kclab/rec.hpp"
#include "kclab/zoo.hpp"

using namespace kclab;

namespace {

const std::string kData = KCLAB_DATA_DIR;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome out;

    void require(bool cond, const std::string& what) {
        if (!cond && out.pass) {
            out.pass = false;
            out.detail = what;
        }
    }
    void note(const std::string& what) {
        if (out.pass && out.detail.empty()) out.detail = what;
    }
};

std::vector<Word> all_words_up_to(std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            out.push_back(out[i] + '0');
            out.push_back(out[i] + '1');
        }
        begin = end;
    }
    return out;
}

std::size_t floor_log2(std::size_t n) {
    std::size_t b = 0;
    while ((std::size_t{1} << (b + 1)) <= n) ++b;
    return b;
}

// C1: codec fidelity -------------------------------------------------------
Outcome codec_fidelity() {
    Check c;
    c.require(word_of_nat(3) == "00" && nat_of_word("00") == 3, "3 <-> 00");
    c.require(self_delim("01011") == "1101001011", "self_delim(01011)");

    for (std::uint64_t n = 0; n < (1u << 20); ++n) {
        const Word w = word_of_nat(Natural(n));
        if (nat_of_word(w) != Natural(n)) {
            c.require(false, "round-trip failed at n=" + std::to_string(n));
            break;
        }
    }

    std::vector<Word> codes;
    for (const Word& w : all_words_up_to(10)) codes.push_back(self_delim(w));
    std::sort(codes.begin(), codes.end());
    for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
        const Word& a = codes[i];
        const Word& b = codes[i + 1];
        if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0) {
            c.require(false, "prefix collision between " + a + " and " + b);
            break;
        }
    }
    c.note("2^20 round-trips, 2047 codes prefix-free");
    return c.out;
}

// C2: Myhill-Nerode machinery ----------------------------------------------
Outcome myhill_nerode() {
    Check c;
    const Dfa mini = dfa_minimize(load_dfa(kData + "/machines/parity4.dfa"));
    c.require(mini.states == 2, "minimized parity machine must have 2 states");

    for (const char* name : {"sigma-star", "odd-ones"}) {
        const Dfa ref = dfa_minimize(*reference_dfa(name));
        const std::size_t distinct = residual_table(zoo_oracle(name), 8, 64).distinct_rows();
        c.require(distinct <= ref.states,
                  std::string(name) + ": rows " + std::to_string(distinct) + " > states");
    }

    const SynthesisResult synth = synthesize_dfa(zoo_oracle("odd-ones"), 8, 64);
    c.require(synth.ok(), "odd-ones synthesis failed");
    if (synth.ok()) {
        c.require(dfa_equiv(*synth.dfa, *reference_dfa("odd-ones")),
                  "synthesized odd-ones machine differs from the reference");
    }
    return c.out;
}

// C3: regularity separation over the zoo ------------------------------------
Outcome regularity_separation() {
    Check c;
    const DecoderSuite suite = DecoderSuite::standard();
    const std::set<std::string> regular = {"sigma-star", "odd-ones"};
    const std::set<std::string> nonregular = {"eq01", "unary-prime", "xxrw",
                                              "neq01", "gcd1", "binary-prime"};
    std::size_t checked = 0;
    for (const auto& name : zoo_identifiers()) {
        const VerdictReport r = regularity_verdict(zoo_oracle(name), 8, 64, suite);
        const std::string expected =
            regular.count(name) ? "regular-evidence" : "nonregular-evidence";
        c.require(r.verdict == expected, name + ": verdict '" + r.verdict + "', expected '" +
                                             expected + "'");
        ++checked;
    }
    c.note(std::to_string(checked) + " zoo languages classified");
    return c.out;
}

// C4: operational KC-Regularity (the lemma made executable) ------------------
Outcome kc_regularity_lemma() {
    Check c;
    const Dfa parity = load_dfa(kData + "/machines/parity.dfa");
    const DecoderSuite suite =
        install_residual_decoder(DecoderSuite::standard(), parity, "parity");
    const std::size_t tag_bits = suite.tag_length(suite.size() - 1);
    const std::size_t machine_constant = residual_machine_constant(parity, tag_bits);

    const auto& oracle = zoo_oracle("odd-ones");
    const Enumerator& e = length_lex_enumerator();

    const auto measure_max_slack = [&]() {
        std::size_t max_slack = 0;
        for (const Word& x : all_words_up_to(8)) {
            for (std::size_t n = 1; n <= 32; ++n) {
                const Word y = nth_in_residual(oracle, x, n, e);
                const std::size_t cost = suite.estimate(y).value;
                const std::size_t frame = self_delim_length(word_of_nat(Natural(n)).size());
                if (cost > frame + machine_constant) {
                    return std::make_pair(std::size_t(0), false);
                }
                if (cost >= frame && cost - frame > max_slack) max_slack = cost - frame;
            }
        }
        return std::make_pair(max_slack, true);
    };

    const auto [slack_a, ok_a] = measure_max_slack();
    c.require(ok_a, "C(y_n) exceeded l(self_delim(n)) + c_A somewhere on the grid");
    const auto [slack_b, ok_b] = measure_max_slack();
    c.require(ok_b && slack_a == slack_b, "measured constant unstable across passes");
    c.note("c_A = " + std::to_string(machine_constant) + ", measured max slack = " +
           std::to_string(slack_a));
    return c.out;
}

// C5: counting laws ----------------------------------------------------------
Outcome counting_laws() {
    Check c;
    const DecoderSuite suite = DecoderSuite::standard();

    const auto described = suite.enumerate_up_to(13, {}, 14);
    for (std::size_t n = 1; n <= 14; ++n) {
        std::size_t below = 0;
        for (const auto& [word, est] : described) {
            if (word.size() == n && est.value < n) ++below;
        }
        if (below >= (std::size_t{1} << n)) {
            c.require(false, "counting floor violated at n=" + std::to_string(n));
        }
    }

    const CensusReport census = a_n_census(16, {0, 1, 2, 3, 4}, suite);
    for (const CensusCell& cell : census.cells) {
        const std::size_t bound = std::size_t{1} << (floor_log2(cell.n) + cell.c + 1);
        if (cell.d_an >= bound) {
            c.require(false, "census bound violated at n=" + std::to_string(cell.n) +
                                 ", c=" + std::to_string(cell.c));
        }
    }
    c.note("floors to n=14, census to n=16, c<=4");
    return c.out;
}

// C6: substring bound ---------------------------------------------------------
Outcome substring_bound() {
    Check c;
    const DecoderSuite suite = DecoderSuite::standard();
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> bit(0, 1);
    const std::size_t len = 64;
    const std::size_t log_cap = 4 * floor_log2(len) + 8; // pinned: 4*floor(log l(x)) + 8
    for (int trial = 0; trial < 100; ++trial) {
        Word x(len, '0');
        for (char& ch : x) ch = bit(rng) ? '1' : '0';
        std::uniform_int_distribution<std::size_t> cut(0, len);
        std::size_t a = cut(rng), b = cut(rng);
        if (a > b) std::swap(a, b);
        const SubstringBoundReport r = substring_bound_check(suite, x, a, b - a);
        if (!r.replay_ok) {
            c.require(false, "composite replay failed at trial " + std::to_string(trial));
            break;
        }
        if (r.c_x > r.c_v + r.l_uw + r.log_term) {
            c.require(false, "inequality violated at trial " + std::to_string(trial));
            break;
        }
        if (r.log_term > log_cap) {
            c.require(false, "log-term " + std::to_string(r.log_term) + " above the cap " +
                                 std::to_string(log_cap));
            break;
        }
    }
    c.note("100 random 64-bit words, log-term cap " + std::to_string(log_cap));
    return c.out;
}

// C7: KC-DCFL structure --------------------------------------------------------
Outcome dcfl_structure() {
    Check c;
    const Dpda eq01 = load_dpda(kData + "/machines/eq01.dpda");
    for (std::size_t n = 4; n <= 200; ++n) {
        const CaseEvidence e = case_classify(eq01, Word(n, '0'), Word(n, '1'), 1);
        if (e.kind != StackCase::Case1 || e.v_position != n) {
            c.require(false, "eq01 not Case1 at n=" + std::to_string(n));
            break;
        }
    }

    const Dpda push = load_dpda(kData + "/machines/push_always.dpda");
    const Dpda flip = load_dpda(kData + "/machines/flip_push.dpda");
    const DecoderSuite suite = DecoderSuite::standard();

    const auto cycle = cycle_detect(push, "", "01", 64);
    c.require(cycle.has_value(), "push-always cycle not found");
    if (cycle) {
        const std::size_t pigeonhole = push.states * push.stack_alphabet.size() * 2;
        c.require(cycle->period_blocks <= pigeonhole, "cycle period above the pigeonhole bound");
    }

    for (const Dpda* m : {&push, &flip}) {
        ExperimentOptions opts;
        opts.u_blocks = 8; // the flip machine grows one symbol per two blocks
        const ExperimentReport r =
            kcdcfl_experiment(*m, "", "01", Word(32, '0'), 16, suite, opts);
        c.require(r.kind == StackCase::Case2, "pushing machine not Case2");
        c.require(r.same_state, "pumped run lands in a different state");
        c.require(r.same_top_segment, "top segments differ symbol-for-symbol");
    }
    c.note("eq01 Case1 for n in 4..200; both pushing machines keep their top segments");
    return c.out;
}

// C8: refuter -------------------------------------------------------------------
Outcome refuter() {
    Check c;
    const Dpda eq01 = load_dpda(kData + "/machines/eq01.dpda");
    const DiffResult bad = dpda_vs_oracle_diff(eq01, zoo_oracle("palindrome"), 12);
    c.require(!bad.agree(), "palindrome oracle should disagree");
    if (!bad.agree()) {
        c.require(bad.disagreement->size() <= 2,
                  "first palindrome disagreement at length > 2");
    }
    const DiffResult good = dpda_vs_oracle_diff(eq01, zoo_oracle("eq01"), 12);
    c.require(good.agree(), "eq01 oracle should agree");
    c.require(good.words_checked == 4095,
              "expected 4095 words checked, got " + std::to_string(good.words_checked));
    return c.out;
}

// C9: section-5 sequences ---------------------------------------------------------
Outcome rec_sequences() {
    Check c;
    const std::vector<std::size_t> grid = {0, 10, 100, 1000};
    std::vector<Word> prefixes;
    for (std::size_t t : grid) prefixes.push_back(halting_prefix(t, 64).bits);
    for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
        for (std::size_t i = 0; i < 64; ++i) {
            if (prefixes[g][i] > prefixes[g + 1][i]) {
                c.require(false, "halting bits not monotone at T=" + std::to_string(grid[g]));
            }
        }
    }

    c.require(sparse_positions(20) == std::vector<std::size_t>{1, 4, 9, 18},
              "sparse positions must be 1, 4, 9, 18");

    const DecoderSuite suite = DecoderSuite::standard();
    std::set<std::size_t> constants;
    for (std::size_t n : {16u, 64u, 256u}) {
        const ReProbeReport r = re_upperbound_probe(halting_semi_decider(), n, 100, suite);
        c.require(r.witness_ok, "probe witness failed at n=" + std::to_string(n));
        c.require(r.bound_bits >= r.floor_log_n, "bound below floor(log n)");
        constants.insert(r.bound_bits - r.floor_log_n);
    }
    c.require(constants.size() == 1, "probe constant varies across the grid");
    if (constants.size() == 1) {
        c.note("probe constant c = " + std::to_string(*constants.begin()));
    }
    return c.out;
}

// C10: determinism ------------------------------------------------------------------
Outcome cli_determinism() {
    Check c;
    const std::vector<std::vector<std::string>> matrix = {
        {"encode", "bij", "123456"},
        {"encode", "selfdelim", "01011"},
        {"encode", "pair", "1", "0"},
        {"decode", "pair", "49"},
        {"dfa", "run", "--file", kData + "/machines/parity.dfa", "--input", "1101"},
        {"dfa", "combine", "--op", "intersection", "--file", kData + "/machines/parity.dfa",
         "--file2", kData + "/machines/sigma_star.dfa"},
        {"dfa", "minimize", "--file", kData + "/machines/parity4.dfa"},
        {"dfa", "equiv", "--file", kData + "/machines/parity.dfa", "--file2",
         kData + "/machines/parity4.dfa"},
        {"dpda", "run", "--file", kData + "/machines/eq01.dpda", "--input", "000111", "--trace"},
        {"zoo", "list"},
        {"zoo", "member", "--lang", "pattern-match", "--word", "10#00101"},
        {"zoo", "nth", "--lang", "unary-prime", "--x", "111", "--n", "1"},
        {"zoo", "nth", "--lang", "sigma-star", "--x", "", "--n", "3", "--enum", "prime"},
        {"chi", "--lang", "odd-ones", "--x", "", "--n", "7"},
        {"table", "--lang", "odd-ones", "--p", "3", "--n", "8", "--csv"},
        {"synth", "--lang", "odd-ones", "--p", "2", "--n", "8"},
        {"verdict", "--lang", "gcd1", "--pmax", "8", "--n", "64"},
        {"kc", "estimate", "--word", "000000000000000000000000"},
        {"kc", "incompressible", "--n", "10"},
        {"kc", "census", "--nmax", "12", "--c", "0,1,2,3,4", "--csv"},
        {"kc", "substring", "--word", "0000000011111111", "--u-len", "0", "--v-len", "8"},
        {"dcfl", "profile", "--file", kData + "/machines/eq01.dpda", "--input", "00001111"},
        {"dcfl", "classify", "--file", kData + "/machines/eq01.dpda", "--u", "00000000", "--v",
         "11111111", "--c1", "1"},
        {"dcfl", "cycle", "--file", kData + "/machines/flip_push.dpda", "--y", "01"},
        {"dcfl", "experiment", "--file", kData + "/machines/push_always.dpda", "--y", "01",
         "--omega", "0000000000000000", "--n", "8", "--csv"},
        {"dcfl", "experiment", "--file", kData + "/machines/eq01.dpda", "--y", "0",
         "--u-blocks", "8", "--omega", "1111111111111111", "--n", "8", "--c1", "1",
         "--oracle", "eq01"},
        {"dcfl", "diff", "--file", kData + "/machines/eq01.dpda", "--lang", "eq01",
         "--max-len", "10"},
        {"rec", "lambda", "--lang", "odd-ones", "--n", "32"},
        {"rec", "halting", "--t", "100", "--n", "64"},
        {"rec", "sparse", "--kbits", "111", "--n", "9"},
        {"rec", "reprobe", "--semi", "halting", "--n", "64", "--t", "100"},
    };
    std::size_t ran = 0;
    for (const auto& args : matrix) {
        std::ostringstream out1, err1, out2, err2;
        const int code1 = cli::run(args, out1, err1);
        const int code2 = cli::run(args, out2, err2);
        std::ostringstream name;
        for (const auto& a : args) name << a << ' ';
        c.require(code1 == 0, "invocation failed: " + name.str() + "(" + err1.str() + ")");
        c.require(code1 == code2 && out1.str() == out2.str(),
                  "output differs across runs: " + name.str());
        ++ran;
    }
    c.note(std::to_string(ran) + " invocations, each run twice");
    return c.out;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"C1 codec fidelity", codec_fidelity},
        {"C2 Myhill-Nerode machinery", myhill_nerode},
        {"C3 regularity separation", regularity_separation},
        {"C4 operational KC-regularity", kc_regularity_lemma},
        {"C5 counting laws", counting_laws},
        {"C6 substring bound", substring_bound},
        {"C7 KC-DCFL structure", dcfl_structure},
        {"C8 refuter", refuter},
        {"C9 section-5 sequences", rec_sequences},
        {"C10 determinism", cli_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criterion.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << criterion.name << " (" << ms << " ms)";
        if (!out.detail.empty()) std::cout << " -- " << out.detail;
        std::cout << std::endl;
        if (!out.pass) ++failures;
    }
    return failures;
}
