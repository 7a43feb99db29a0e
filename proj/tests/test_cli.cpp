#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "kclab/cli.hpp"

namespace {

const std::string kData = KCLAB_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = kclab::cli::run(args, out, err);
    return Result{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("every operation is reachable from exactly one subcommand") {
    const auto& registry = kclab::cli::operation_registry();
    std::set<std::string> ops;
    std::set<std::string> bound_subcommands;
    for (const auto& binding : registry) {
        CHECK(ops.insert(std::string(binding.operation)).second); // unique operations
        bound_subcommands.insert(std::string(binding.subcommand));
    }

    const auto leaves_vec = kclab::cli::leaf_subcommands();
    const std::set<std::string> leaves(leaves_vec.begin(), leaves_vec.end());
    // every binding points at a real leaf, and every leaf hosts something
    for (const auto& sub : bound_subcommands) {
        CHECK_MESSAGE(leaves.count(sub) == 1, "missing leaf: ", sub);
    }
    for (const auto& leaf : leaves) {
        CHECK_MESSAGE(bound_subcommands.count(leaf) == 1, "unbound leaf: ", leaf);
    }

    // the module operations the registry must cover
    const std::vector<std::string> required = {
        "codec.nat_str_bijection", "codec.self_delim", "codec.pair",
        "automata.dfa_run", "automata.dfa_combine", "automata.dfa_minimize",
        "automata.dfa_equiv", "automata.dpda_run",
        "zoo.zoo_oracle", "zoo.enumerate", "zoo.nth_in_residual",
        "charseq.chi_prefix", "charseq.residual_table", "charseq.synthesize_dfa",
        "charseq.regularity_verdict",
        "kolmogorov.estimate_C", "kolmogorov.install_residual_decoder",
        "kolmogorov.find_incompressible", "kolmogorov.substring_bound_check",
        "kolmogorov.a_n_census",
        "dcfl.stack_profile", "dcfl.case_classify", "dcfl.cycle_detect",
        "dcfl.kcdcfl_experiment", "dcfl.dpda_vs_oracle_diff",
        "rec.lambda_prefix", "rec.halting_prefix", "rec.sparse_sequence",
        "rec.re_upperbound_probe",
    };
    for (const auto& op : required) {
        CHECK_MESSAGE(ops.count(op) == 1, "unregistered operation: ", op);
    }
}

TEST_CASE("worked example invocations") {
    CHECK(invoke({"encode", "selfdelim", "01011"}).out == "1101001011\n");
    CHECK(invoke({"chi", "--lang", "odd-ones", "--x", "", "--n", "7"}).out == "0010110\n");
    const Result zoo = invoke({"zoo", "list"});
    CHECK(zoo.code == 0);
    for (const char* id : {"eq01", "unary-prime", "pattern-match", "sigma-star"}) {
        CHECK(zoo.out.find(id) != std::string::npos);
    }
}

TEST_CASE("exit codes: success, domain error, usage error") {
    CHECK(invoke({"encode", "bij", "5"}).code == 0);

    const Result domain = invoke({"zoo", "member", "--lang", "nope", "--word", "0"});
    CHECK(domain.code == 1);
    CHECK(domain.err.find("unknown zoo language") != std::string::npos);

    const Result usage = invoke({"frobnicate"});
    CHECK(usage.code == 2);
    const Result missing = invoke({"chi", "--lang", "odd-ones"});
    CHECK(missing.code == 2);
}

TEST_CASE("reports carry a suite header with the invocation echo") {
    const Result r = invoke({"verdict", "--lang", "odd-ones", "--pmax", "4", "--n", "16"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# kclab verdict --lang odd-ones --pmax 4 --n 16 | suite v1", 0) == 0);
}

TEST_CASE("estimates can install machine decoders") {
    const Result r = invoke({"kc", "estimate", "--word", "0010110011010010",
                             "--row-dfa", kData + "/machines/parity.dfa", "--given-length"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dfa-row") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::vector<std::vector<std::string>> matrix = {
        {"encode", "pair", "1", "0"},
        {"verdict", "--lang", "eq01", "--pmax", "6", "--n", "32"},
        {"kc", "census", "--nmax", "8", "--c", "0,2,4"},
        {"dcfl", "experiment", "--file", kData + "/machines/push_always.dpda", "--y", "01",
         "--omega", "00000000", "--n", "8"},
        {"rec", "reprobe", "--semi", "halting", "--n", "32", "--t", "50"},
    };
    for (const auto& args : matrix) {
        const Result a = invoke(args);
        const Result b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("dpda run exposes the trace") {
    const Result r = invoke({"dpda", "run", "--file", kData + "/machines/eq01.dpda",
                             "--input", "0011", "--trace"});
    CHECK(r.code == 0);
    CHECK(r.out.find("accept") != std::string::npos);
    CHECK(r.out.find("height") != std::string::npos);
}
