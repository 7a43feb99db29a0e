#include <doctest.h>

#include "kclab/dcfl.hpp"

using namespace kclab;

namespace {

const std::string kData = KCLAB_DATA_DIR;

Dpda eq01_machine() { return load_dpda(kData + "/machines/eq01.dpda"); }
Dpda push_always() { return load_dpda(kData + "/machines/push_always.dpda"); }
Dpda flip_push() { return load_dpda(kData + "/machines/flip_push.dpda"); }
Dpda const_stack() { return load_dpda(kData + "/machines/const_stack.dpda"); }

} // namespace

TEST_CASE("stack profiles trace the push-pop shape") {
    const StackProfile updown = stack_profile(eq01_machine(), "00001111");
    CHECK(updown.heights == std::vector<std::size_t>{2, 3, 4, 5, 4, 3, 2, 1});
    CHECK(updown.outcome == RunOutcome::Accepted);

    const StackProfile rise = stack_profile(eq01_machine(), "0000");
    CHECK(rise.heights == std::vector<std::size_t>{2, 3, 4, 5});
    CHECK(rise.final_stack.size() == 5);

    const StackProfile steady = stack_profile(push_always(), "010101");
    CHECK(std::is_sorted(steady.heights.begin(), steady.heights.end()));
    CHECK(steady.heights.front() == 2);
    CHECK(steady.heights.back() == 7);
}

TEST_CASE("never-popped-again floors are the suffix minima") {
    const StackProfile p = stack_profile(eq01_machine(), "0001");
    CHECK(p.heights == std::vector<std::size_t>{2, 3, 4, 3});
    CHECK(p.never_pop_floor == std::vector<std::size_t>{2, 3, 3, 3});
    const StackProfile q = stack_profile(eq01_machine(), "0011");
    CHECK(q.heights == std::vector<std::size_t>{2, 3, 2, 1});
    CHECK(q.never_pop_floor == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("case classification separates popping and pushing machines") {
    const CaseEvidence pop = case_classify(eq01_machine(), Word(8, '0'), Word(8, '1'), 1);
    CHECK(pop.kind == StackCase::Case1);
    CHECK(pop.v_position == 8);
    CHECK(pop.height_after_u == 9);

    for (std::size_t c1 = 1; c1 <= 8; ++c1) {
        const CaseEvidence grow = case_classify(push_always(), Word(8, '0'), Word(8, '1'), c1);
        CHECK(grow.kind == StackCase::Case2);
        CHECK(grow.min_height_in_v == 9);
    }
}

TEST_CASE("empty v classifies by the height after u alone") {
    const CaseEvidence low = case_classify(eq01_machine(), "00001111", "", 1);
    CHECK(low.kind == StackCase::Case1);
    CHECK(low.v_position == 0);

    const CaseEvidence high = case_classify(eq01_machine(), "0000", "", 1);
    CHECK(high.kind == StackCase::Case2);
    CHECK(high.height_after_u == 5);
}

TEST_CASE("case1 evidence is the first qualifying position") {
    const CaseEvidence e = case_classify(eq01_machine(), Word(8, '0'), Word(8, '1'), 3);
    CHECK(e.kind == StackCase::Case1);
    // heights during v: 8 7 6 5 4 3 ... -> first <= 3 after six pops
    CHECK(e.v_position == 6);
}

TEST_CASE("cycle detection finds the repeating triples") {
    const auto one = cycle_detect(push_always(), "", "01", 64);
    REQUIRE(one.has_value());
    CHECK(one->period_blocks == 1);
    CHECK(one->growth_per_period == 2);

    const auto two = cycle_detect(flip_push(), "", "01", 64);
    REQUIRE(two.has_value());
    CHECK(two->period_blocks == 2);
    CHECK(two->growth_per_period == 1);

    CHECK(!cycle_detect(const_stack(), "", "01", 64).has_value());
    // the pop machine jams on an endless 1-stream once the stack clears
    CHECK(!cycle_detect(eq01_machine(), "", "1", 64).has_value());
}

TEST_CASE("detected cycles respect the pigeonhole budget") {
    const auto r = cycle_detect(flip_push(), "", "01", 64);
    REQUIRE(r.has_value());
    const Dpda m = flip_push();
    CHECK(r->preamble_blocks + r->period_blocks <=
          m.states * m.stack_alphabet.size() * std::size_t{2});
}

TEST_CASE("cycle horizon exhaustion is a loud error") {
    CHECK_THROWS_WITH_AS(cycle_detect(push_always(), "", "01", 2),
                         doctest::Contains("within 2 blocks"), Error);
}

TEST_CASE("experiment on the pop machine lands in Case1 with a trivial residual") {
    const DecoderSuite suite = DecoderSuite::standard();
    ExperimentOptions opts;
    opts.u_blocks = 8;
    opts.c1 = 1;
    const ExperimentReport r =
        kcdcfl_experiment(eq01_machine(), "", "0", Word(16, '1'), 8, suite, opts);
    CHECK(r.kind == StackCase::Case1);
    CHECK(r.evidence.v_position == 8);
    REQUIRE(r.first_residual_word.has_value());
    CHECK(*r.first_residual_word == "");
    CHECK(r.c_w == 2);
    CHECK(r.acceptance_stream == "000000001");
}

TEST_CASE("experiment on a pushing machine verifies the same-top-segment claim") {
    const DecoderSuite suite = DecoderSuite::standard();
    const ExperimentReport r =
        kcdcfl_experiment(push_always(), "", "01", Word(16, '0'), 8, suite);
    CHECK(r.kind == StackCase::Case2);
    REQUIRE(r.cycle.has_value());
    CHECK(r.same_state);
    CHECK(r.same_top_segment);
    CHECK(r.top_segment_len == r.evidence.height_after_u - r.c1);

    // the flip machine grows by one symbol per two blocks, so it needs a
    // longer u to clear the default threshold of |Gamma| + 1
    ExperimentOptions slow;
    slow.u_blocks = 8;
    const ExperimentReport f =
        kcdcfl_experiment(flip_push(), "", "01", Word(16, '0'), 8, suite, slow);
    CHECK(f.kind == StackCase::Case2);
    REQUIRE(f.cycle.has_value());
    CHECK(f.same_state);
    CHECK(f.same_top_segment);
}

TEST_CASE("degenerate experiment with an empty v") {
    const DecoderSuite suite = DecoderSuite::standard();
    ExperimentOptions opts;
    opts.u_blocks = 8;
    opts.c1 = 1;
    const ExperimentReport r = kcdcfl_experiment(eq01_machine(), "", "0", "", 0, suite, opts);
    CHECK(r.kind == StackCase::Case2); // nine symbols of stack never drop with no v to pop them
    CHECK(r.evidence.height_after_u == 9);
}

TEST_CASE("experiments are deterministic") {
    const DecoderSuite suite = DecoderSuite::standard();
    const ExperimentReport a =
        kcdcfl_experiment(push_always(), "", "01", Word(16, '0'), 8, suite);
    const ExperimentReport b =
        kcdcfl_experiment(push_always(), "", "01", Word(16, '0'), 8, suite);
    CHECK(a.text() == b.text());
    CHECK(a.csv() == b.csv());
}

TEST_CASE("experiment oracle precheck rejects inconsistent pairs") {
    const DecoderSuite suite = DecoderSuite::standard();
    ExperimentOptions opts;
    opts.u_blocks = 4;
    opts.oracle = &zoo_oracle("palindrome");
    CHECK_THROWS_WITH_AS(kcdcfl_experiment(eq01_machine(), "", "0", Word(8, '1'), 4, suite, opts),
                         doctest::Contains("disagrees with oracle"), Error);
}

TEST_CASE("experiment construction fails when the horizon blocks pumping") {
    const DecoderSuite suite = DecoderSuite::standard();
    ExperimentOptions opts;
    opts.u_blocks = 4;
    opts.max_blocks = 4; // no room for u' = u + period
    CHECK_THROWS_WITH_AS(kcdcfl_experiment(push_always(), "", "01", Word(8, '0'), 4, suite, opts),
                         doctest::Contains("admissible u'"), Error);
}

TEST_CASE("refuter separates machines from foreign oracles") {
    const DiffResult same = dpda_vs_oracle_diff(eq01_machine(), zoo_oracle("eq01"), 12);
    CHECK(same.agree());
    CHECK(same.words_checked == 4095);

    const DiffResult diff = dpda_vs_oracle_diff(eq01_machine(), zoo_oracle("palindrome"), 12);
    REQUIRE(!diff.agree());
    CHECK(diff.disagreement->size() <= 2);
    CHECK(!diff.machine_accepts);
    CHECK(diff.oracle_accepts);
}

TEST_CASE("a machine agrees with its own traced language") {
    const Dpda m = eq01_machine();
    LanguageOracle traced{"traced-eq01", "01", LanguageClass::DcflNotRegular,
                          [m](const Word& w) { return dpda_run(m, w).accepted; }};
    CHECK(dpda_vs_oracle_diff(m, traced, 10).agree());
}

TEST_CASE("refuter requires a shared alphabet") {
    CHECK_THROWS_WITH_AS(dpda_vs_oracle_diff(eq01_machine(), zoo_oracle("ijk"), 6),
                         doctest::Contains("alphabet"), Error);
}
