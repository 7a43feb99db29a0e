#include "kclab/cli.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kclab/charseq.hpp"
#include "kclab/codec.hpp"
#include "kclab/dcfl.hpp"
#include "kclab/kolmogorov.hpp"
#include "kclab/rec.hpp"
#include "kclab/zoo.hpp"

namespace kclab::cli {

namespace {

Natural parse_natural(const std::string& s) {
    if (s.empty()) throw Error("expected a decimal natural number, got an empty string");
    for (char c : s) {
        if (c < '0' || c > '9') throw Error("expected a decimal natural number, got '" + s + "'");
    }
    return Natural(s);
}

const Enumerator& enumerator_by_name(const std::string& name) {
    if (name == "length-lex") return length_lex_enumerator();
    if (name == "prime") return prime_enumerator();
    throw Error("unknown enumerator '" + name + "' (length-lex, prime)");
}

BoundedSemiDecider semi_by_name(const std::string& name) {
    if (name == "halting") return halting_semi_decider();
    if (name == "empty") return empty_semi_decider();
    if (name == "sigma-star") return sigma_star_semi_decider();
    throw Error("unknown semi-decider '" + name + "' (halting, empty, sigma-star)");
}

std::string outcome_name(RunOutcome o) {
    switch (o) {
        case RunOutcome::Accepted: return "accept";
        case RunOutcome::Rejected: return "reject";
        case RunOutcome::Stuck: return "reject (stuck)";
    }
    return "?";
}

// Shared state of one invocation.
struct Ctx {
    std::ostream* out = nullptr;
    std::string invocation;

    // option storage (one bag; each leaf reads what it declared)
    std::string word, word2, x, y, v, lang, file, file2, op;
    std::string enum_name = "length-lex";
    std::string semi = "halting";
    std::string kbits, omega, u, input;
    std::string c_list = "0,1,2,3,4";
    std::string nat_arg;
    std::size_t n = 0, p = 0, pmax = 0, t = 0, c1 = 0, nmax = 0;
    std::size_t u_len = 0, v_len = 0, max_len = 12, max_blocks = 256, u_blocks = 4, budget = 1u << 20;
    bool csv = false, complement = false, include_empty = false, given_length = false, trace = false;
    std::string residual_dfa, row_dfa, oracle_name;

    void reset_header(const DecoderSuite& suite) const {
        (*out) << "# kclab " << invocation << " | suite " << suite.version() << "\n";
    }
};

void cmd_encode_bij(Ctx& c) { (*c.out) << word_of_nat(parse_natural(c.nat_arg)) << "\n"; }

void cmd_decode_bij(Ctx& c) {
    (*c.out) << nat_of_word(c.word) << "\n";
}

void cmd_encode_selfdelim(Ctx& c) { (*c.out) << self_delim(c.word) << "\n"; }

void cmd_decode_selfdelim(Ctx& c) {
    const SelfDelimParse p = self_delim_decode(c.word);
    (*c.out) << p.payload << "\n";
    if (!p.rest.empty()) (*c.out) << "rest " << p.rest << "\n";
}

void cmd_encode_pair(Ctx& c) { (*c.out) << pair_encode(c.word, c.word2) << "\n"; }

void cmd_decode_pair(Ctx& c) {
    const Unpaired p = pair_decode(parse_natural(c.nat_arg));
    (*c.out) << p.first << "\n" << p.second << "\n";
}

void cmd_dfa_run(Ctx& c) {
    const Dfa a = load_dfa(c.file);
    const Dfa::RunResult r = a.run(c.input);
    (*c.out) << "state " << r.state << " " << (r.accepted ? "accept" : "reject") << "\n";
}

void cmd_dfa_combine(Ctx& c) {
    const Dfa a = load_dfa(c.file);
    DfaCombineOp op;
    if (c.op == "complement") op = DfaCombineOp::Complement;
    else if (c.op == "union") op = DfaCombineOp::Union;
    else if (c.op == "intersection") op = DfaCombineOp::Intersection;
    else throw Error("unknown combine op '" + c.op + "' (complement, union, intersection)");
    if (op == DfaCombineOp::Complement) {
        (*c.out) << format_automaton(dfa_combine(op, a));
    } else {
        if (c.file2.empty()) throw Error("union/intersection need --file2");
        const Dfa b = load_dfa(c.file2);
        (*c.out) << format_automaton(dfa_combine(op, a, &b));
    }
}

void cmd_dfa_minimize(Ctx& c) {
    (*c.out) << format_automaton(dfa_minimize(load_dfa(c.file)));
}

void cmd_dfa_equiv(Ctx& c) {
    const bool eq = dfa_equiv(load_dfa(c.file), load_dfa(c.file2));
    (*c.out) << (eq ? "equivalent" : "different") << "\n";
}

void cmd_dpda_run(Ctx& c) {
    const Dpda m = load_dpda(c.file);
    DpdaRunOptions opts;
    opts.record_stacks = c.trace;
    const DpdaRunTrace t = dpda_run(m, c.input, opts);
    (*c.out) << "state " << t.final_state << " " << outcome_name(t.outcome) << " stack "
             << t.final_stack << "\n";
    if (c.trace) {
        for (std::size_t i = 0; i < t.heights_after_symbol.size(); ++i) {
            (*c.out) << i + 1 << " height " << t.heights_after_symbol[i] << " stack "
                     << t.stacks_after_symbol[i] << "\n";
        }
    }
}

void cmd_zoo_list(Ctx& c) {
    for (const auto& id : zoo_identifiers()) {
        const LanguageOracle& o = zoo_oracle(id);
        (*c.out) << id << " alphabet " << o.alphabet << " class " << to_string(o.certified_class)
                 << "\n";
    }
}

void cmd_zoo_member(Ctx& c) {
    const LanguageOracle& o = zoo_oracle(c.lang);
    (*c.out) << (o.member(c.word) ? "member" : "non-member") << "\n";
}

void cmd_zoo_nth(Ctx& c) {
    const LanguageOracle& o = zoo_oracle(c.lang);
    const Enumerator& e = enumerator_by_name(c.enum_name);
    (*c.out) << nth_in_residual(o, c.x, c.n, e, c.complement, c.include_empty, c.budget) << "\n";
}

void cmd_chi(Ctx& c) {
    (*c.out) << chi_prefix(zoo_oracle(c.lang), c.x, c.n).bits << "\n";
}

void cmd_table(Ctx& c) {
    const ResidualTable t = residual_table(zoo_oracle(c.lang), c.p, c.n);
    const DecoderSuite suite = DecoderSuite::standard();
    c.reset_header(suite);
    if (c.csv) {
        (*c.out) << "label,row\n";
        for (std::size_t i = 0; i < t.labels.size(); ++i) {
            (*c.out) << t.labels[i] << ',' << t.rows[i] << "\n";
        }
    } else {
        for (std::size_t i = 0; i < t.labels.size(); ++i) {
            (*c.out) << (t.labels[i].empty() ? "(eps)" : t.labels[i]) << " " << t.rows[i] << "\n";
        }
    }
    (*c.out) << "distinct " << t.distinct_rows() << "\n";
}

void cmd_synth(Ctx& c) {
    const SynthesisResult r = synthesize_dfa(zoo_oracle(c.lang), c.p, c.n);
    if (r.ok()) {
        (*c.out) << format_automaton(*r.dfa);
    } else {
        (*c.out) << "inconclusive: " << r.failure << "\n";
    }
}

void cmd_verdict(Ctx& c) {
    const DecoderSuite suite = DecoderSuite::standard();
    const VerdictReport r = regularity_verdict(zoo_oracle(c.lang), c.pmax, c.n, suite);
    c.reset_header(suite);
    (*c.out) << (c.csv ? r.csv() : r.text());
}

void cmd_kc_estimate(Ctx& c) {
    DecoderSuite suite = DecoderSuite::standard();
    if (!c.residual_dfa.empty()) {
        suite = install_residual_decoder(suite, load_dfa(c.residual_dfa), c.residual_dfa);
    }
    if (!c.row_dfa.empty()) {
        suite = install_row_decoder(suite, load_dfa(c.row_dfa), c.row_dfa);
    }
    const Side side = c.given_length ? Side(Natural(c.word.size())) : Side{};
    const ComplexityEstimate est = suite.estimate(c.word, side);
    c.reset_header(suite);
    (*c.out) << "C " << est.value << " bits decoder " << est.witness.decoder << " tag "
             << bits_to_hex(est.witness.tag) << " program " << bits_to_hex(est.witness.program)
             << "\n";
}

void cmd_kc_incompressible(Ctx& c) {
    const DecoderSuite suite = DecoderSuite::standard();
    c.reset_header(suite);
    (*c.out) << find_incompressible(c.n, suite) << "\n";
}

void cmd_kc_census(Ctx& c) {
    std::vector<std::size_t> cs;
    std::istringstream is(c.c_list);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) cs.push_back(std::stoul(tok));
    }
    const DecoderSuite suite = DecoderSuite::standard();
    const CensusReport r = a_n_census(c.nmax, cs, suite);
    c.reset_header(suite);
    (*c.out) << (c.csv ? r.csv() : r.text());
}

void cmd_kc_substring(Ctx& c) {
    const DecoderSuite suite = DecoderSuite::standard();
    const SubstringBoundReport r = substring_bound_check(suite, c.word, c.u_len, c.v_len);
    c.reset_header(suite);
    (*c.out) << (c.csv ? r.csv() : r.text());
}

void cmd_dcfl_profile(Ctx& c) {
    const Dpda m = load_dpda(c.file);
    const StackProfile p = stack_profile(m, c.input);
    (*c.out) << "heights " << p.sparkline() << "\n";
    (*c.out) << "outcome " << outcome_name(p.outcome) << " final-stack " << p.final_stack << "\n";
}

void cmd_dcfl_classify(Ctx& c) {
    const Dpda m = load_dpda(c.file);
    const CaseEvidence e = case_classify(m, c.u, c.v, c.c1);
    if (e.kind == StackCase::Case1) {
        (*c.out) << "Case1 at v-position " << e.v_position << "\n";
    } else {
        (*c.out) << "Case2 min-height " << e.min_height_in_v << "\n";
    }
}

void cmd_dcfl_cycle(Ctx& c) {
    const Dpda m = load_dpda(c.file);
    const auto r = cycle_detect(m, c.x, c.y, c.max_blocks);
    if (!r) {
        (*c.out) << "none (bounded stack)\n";
        return;
    }
    (*c.out) << "preamble " << r->preamble_blocks << " period " << r->period_blocks << " growth "
             << r->growth_per_period << " triple (q" << r->state << "," << r->offset_in_y << ",'"
             << r->stack_top << "')\n";
}

void cmd_dcfl_experiment(Ctx& c) {
    const Dpda m = load_dpda(c.file);
    const DecoderSuite suite = DecoderSuite::standard();
    ExperimentOptions opts;
    opts.u_blocks = c.u_blocks;
    opts.max_blocks = c.max_blocks;
    if (c.c1 > 0) opts.c1 = c.c1;
    std::optional<LanguageOracle> oracle;
    if (!c.oracle_name.empty()) {
        oracle = zoo_oracle(c.oracle_name);
        opts.oracle = &*oracle;
    }
    const ExperimentReport r = kcdcfl_experiment(m, c.x, c.y, c.omega, c.n, suite, opts);
    c.reset_header(suite);
    (*c.out) << (c.csv ? r.csv() : r.text());
}

void cmd_dcfl_diff(Ctx& c) {
    const Dpda m = load_dpda(c.file);
    const DiffResult r = dpda_vs_oracle_diff(m, zoo_oracle(c.lang), c.max_len);
    if (r.agree()) {
        (*c.out) << "agree " << r.words_checked << " words\n";
    } else {
        (*c.out) << "disagree \"" << *r.disagreement << "\" machine "
                 << (r.machine_accepts ? "accepts" : "rejects") << " oracle "
                 << (r.oracle_accepts ? "accepts" : "rejects") << "\n";
    }
}

void cmd_rec_lambda(Ctx& c) {
    const DecoderSuite suite = DecoderSuite::standard();
    const LambdaReport r = lambda_prefix(zoo_oracle(c.lang), c.n, suite);
    (*c.out) << "# " << r.seq.provenance << " | suite " << r.suite_version << " | C(lambda|n) "
             << r.cost_given_n << "\n";
    (*c.out) << r.seq.bits << "\n";
}

void cmd_rec_halting(Ctx& c) {
    const BitSequencePrefix p = halting_prefix(c.t, c.n);
    (*c.out) << "# " << p.provenance << "\n" << p.bits << "\n";
}

void cmd_rec_sparse(Ctx& c) {
    const BitSequencePrefix p = sparse_sequence(c.kbits, c.n);
    (*c.out) << "# " << p.provenance << "\n" << p.bits << "\n";
}

void cmd_rec_reprobe(Ctx& c) {
    const DecoderSuite suite = DecoderSuite::standard();
    const ReProbeReport r = re_upperbound_probe(semi_by_name(c.semi), c.n, c.t, suite);
    (*c.out) << "# kclab " << c.invocation << " | suite " << r.suite_version << "\n";
    (*c.out) << r.text();
}

struct AppBundle {
    CLI::App app{"desk-scale laboratory for complexity analysis of formal languages", "kclab"};
    Ctx ctx;
    std::function<void()> action;
};

void build(AppBundle& b) {
    Ctx& c = b.ctx;
    b.app.require_subcommand(1);

    const auto leaf = [&](CLI::App* cmd, void (*fn)(Ctx&)) {
        cmd->callback([&b, fn] { b.action = [&b, fn] { fn(b.ctx); }; });
    };

    CLI::App* encode = b.app.add_subcommand("encode", "string/number codecs");
    encode->require_subcommand(1);
    {
        CLI::App* bij = encode->add_subcommand("bij", "natural -> word bijection");
        bij->add_option("natural", c.nat_arg, "decimal natural")->required();
        leaf(bij, cmd_encode_bij);
        CLI::App* sd = encode->add_subcommand("selfdelim", "self-delimiting code");
        sd->add_option("word", c.word, "binary word");
        leaf(sd, cmd_encode_selfdelim);
        CLI::App* pr = encode->add_subcommand("pair", "pairing <x,y>");
        pr->add_option("x", c.word, "first word");
        pr->add_option("y", c.word2, "second word");
        leaf(pr, cmd_encode_pair);
    }
    CLI::App* decode = b.app.add_subcommand("decode", "inverse codecs");
    decode->require_subcommand(1);
    {
        CLI::App* bij = decode->add_subcommand("bij", "word -> natural bijection");
        bij->add_option("word", c.word, "binary word");
        leaf(bij, cmd_decode_bij);
        CLI::App* sd = decode->add_subcommand("selfdelim", "split a self-delimiting code");
        sd->add_option("word", c.word, "binary code")->required();
        leaf(sd, cmd_decode_selfdelim);
        CLI::App* pr = decode->add_subcommand("pair", "invert the pairing");
        pr->add_option("natural", c.nat_arg, "decimal natural")->required();
        leaf(pr, cmd_decode_pair);
    }

    CLI::App* dfa = b.app.add_subcommand("dfa", "finite automata");
    dfa->require_subcommand(1);
    {
        CLI::App* run = dfa->add_subcommand("run", "run a dfa on a word");
        run->add_option("--file", c.file, "automaton file")->required();
        run->add_option("--input", c.input, "input word");
        leaf(run, cmd_dfa_run);
        CLI::App* comb = dfa->add_subcommand("combine", "complement/union/intersection");
        comb->add_option("--op", c.op, "complement|union|intersection")->required();
        comb->add_option("--file", c.file, "first machine")->required();
        comb->add_option("--file2", c.file2, "second machine");
        leaf(comb, cmd_dfa_combine);
        CLI::App* mini = dfa->add_subcommand("minimize", "minimal equivalent machine");
        mini->add_option("--file", c.file, "automaton file")->required();
        leaf(mini, cmd_dfa_minimize);
        CLI::App* eq = dfa->add_subcommand("equiv", "language equality");
        eq->add_option("--file", c.file, "first machine")->required();
        eq->add_option("--file2", c.file2, "second machine")->required();
        leaf(eq, cmd_dfa_equiv);
    }

    CLI::App* dpda = b.app.add_subcommand("dpda", "deterministic pushdown automata");
    dpda->require_subcommand(1);
    {
        CLI::App* run = dpda->add_subcommand("run", "run a dpda on a word");
        run->add_option("--file", c.file, "automaton file")->required();
        run->add_option("--input", c.input, "input word");
        run->add_flag("--trace", c.trace, "print per-symbol heights and stacks");
        leaf(run, cmd_dpda_run);
    }

    CLI::App* zoo = b.app.add_subcommand("zoo", "example languages");
    zoo->require_subcommand(1);
    {
        CLI::App* list = zoo->add_subcommand("list", "stable identifiers");
        leaf(list, cmd_zoo_list);
        CLI::App* member = zoo->add_subcommand("member", "membership query");
        member->add_option("--lang", c.lang, "language id")->required();
        member->add_option("--word", c.word, "word");
        leaf(member, cmd_zoo_member);
        CLI::App* nth = zoo->add_subcommand("nth", "n-th word enumerated in (or out of) a residual");
        nth->add_option("--lang", c.lang, "language id")->required();
        nth->add_option("--x", c.x, "residual prefix");
        nth->add_option("--n", c.n, "rank, 1-indexed")->required();
        nth->add_option("--enum", c.enum_name, "length-lex|prime");
        nth->add_flag("--complement", c.complement, "enumerate the complement");
        nth->add_flag("--include-empty", c.include_empty, "count eps as a hit");
        nth->add_option("--budget", c.budget, "enumeration budget");
        leaf(nth, cmd_zoo_nth);
    }

    CLI::App* chi = b.app.add_subcommand("chi", "characteristic sequence of a residual");
    chi->add_option("--lang", c.lang, "language id")->required();
    chi->add_option("--x", c.x, "residual prefix");
    chi->add_option("--n", c.n, "prefix length")->required();
    leaf(chi, cmd_chi);

    CLI::App* table = b.app.add_subcommand("table", "residual table");
    table->add_option("--lang", c.lang, "language id")->required();
    table->add_option("--p", c.p, "max label length")->required();
    table->add_option("--n", c.n, "columns")->required();
    table->add_flag("--csv", c.csv, "machine-readable output");
    leaf(table, cmd_table);

    CLI::App* synth = b.app.add_subcommand("synth", "dfa synthesis from the residual table");
    synth->add_option("--lang", c.lang, "language id")->required();
    synth->add_option("--p", c.p, "max label length")->required();
    synth->add_option("--n", c.n, "columns")->required();
    leaf(synth, cmd_synth);

    CLI::App* verdict = b.app.add_subcommand("verdict", "empirical regularity verdict");
    verdict->add_option("--lang", c.lang, "language id")->required();
    verdict->add_option("--pmax", c.pmax, "max label length")->required();
    verdict->add_option("--n", c.n, "columns")->required();
    verdict->add_flag("--csv", c.csv, "machine-readable output");
    leaf(verdict, cmd_verdict);

    CLI::App* kc = b.app.add_subcommand("kc", "complexity estimator");
    kc->require_subcommand(1);
    {
        CLI::App* est = kc->add_subcommand("estimate", "C-hat of a word");
        est->add_option("--word", c.word, "binary word");
        est->add_flag("--given-length", c.given_length, "condition on l(x)");
        est->add_option("--residual-dfa", c.residual_dfa, "install the residual-rank decoder of this dfa");
        est->add_option("--row-dfa", c.row_dfa, "install the row decoder of this dfa");
        leaf(est, cmd_kc_estimate);
        CLI::App* inc = kc->add_subcommand("incompressible", "least word of length n with C-hat >= n");
        inc->add_option("--n", c.n, "word length (<= 20)")->required();
        leaf(inc, cmd_kc_incompressible);
        CLI::App* census = kc->add_subcommand("census", "the A_n census");
        census->add_option("--nmax", c.nmax, "max word length (<= 18)")->required();
        census->add_option("--c", c.c_list, "comma-separated c values");
        census->add_flag("--csv", c.csv, "machine-readable output");
        leaf(census, cmd_kc_census);
        CLI::App* sub = kc->add_subcommand("substring", "substring bound check");
        sub->add_option("--word", c.word, "binary word")->required();
        sub->add_option("--u-len", c.u_len, "length of u")->required();
        sub->add_option("--v-len", c.v_len, "length of v")->required();
        sub->add_flag("--csv", c.csv, "machine-readable output");
        leaf(sub, cmd_kc_substring);
    }

    CLI::App* dcfl = b.app.add_subcommand("dcfl", "dpda analysis");
    dcfl->require_subcommand(1);
    {
        CLI::App* prof = dcfl->add_subcommand("profile", "stack height profile");
        prof->add_option("--file", c.file, "dpda file")->required();
        prof->add_option("--input", c.input, "input word");
        leaf(prof, cmd_dcfl_profile);
        CLI::App* cls = dcfl->add_subcommand("classify", "Case1/Case2 dichotomy");
        cls->add_option("--file", c.file, "dpda file")->required();
        cls->add_option("--u", c.u, "u part");
        cls->add_option("--v", c.v, "v part");
        cls->add_option("--c1", c.c1, "height threshold")->required();
        leaf(cls, cmd_dcfl_classify);
        CLI::App* cyc = dcfl->add_subcommand("cycle", "repeating-triple detection over y-blocks");
        cyc->add_option("--file", c.file, "dpda file")->required();
        cyc->add_option("--y", c.y, "block word")->required();
        cyc->add_option("--x", c.x, "suffix word");
        cyc->add_option("--max-blocks", c.max_blocks, "horizon in blocks");
        leaf(cyc, cmd_dcfl_cycle);
        CLI::App* exp = dcfl->add_subcommand("experiment", "the pumping experiment");
        exp->add_option("--file", c.file, "dpda file")->required();
        exp->add_option("--y", c.y, "block word")->required();
        exp->add_option("--x", c.x, "suffix word");
        exp->add_option("--omega", c.omega, "recursive sequence prefix")->required();
        exp->add_option("--n", c.n, "v length")->required();
        exp->add_option("--u-blocks", c.u_blocks, "blocks in u");
        exp->add_option("--c1", c.c1, "height threshold (default |Gamma|+1)");
        exp->add_option("--max-blocks", c.max_blocks, "cycle horizon");
        exp->add_option("--oracle", c.oracle_name, "consistency-check oracle");
        exp->add_flag("--csv", c.csv, "machine-readable output");
        leaf(exp, cmd_dcfl_experiment);
        CLI::App* diff = dcfl->add_subcommand("diff", "machine vs oracle refuter");
        diff->add_option("--file", c.file, "dpda file")->required();
        diff->add_option("--lang", c.lang, "oracle id")->required();
        diff->add_option("--max-len", c.max_len, "scan words with l(w) < max-len");
        leaf(diff, cmd_dcfl_diff);
    }

    CLI::App* rec = b.app.add_subcommand("rec", "recursive/r.e. sequence machinery");
    rec->require_subcommand(1);
    {
        CLI::App* lam = rec->add_subcommand("lambda", "characteristic sequence of a language");
        lam->add_option("--lang", c.lang, "language id")->required();
        lam->add_option("--n", c.n, "prefix length")->required();
        leaf(lam, cmd_rec_lambda);
        CLI::App* halt = rec->add_subcommand("halting", "bounded halting bits k^T");
        halt->add_option("--t", c.t, "step budget")->required();
        halt->add_option("--n", c.n, "prefix length")->required();
        leaf(halt, cmd_rec_halting);
        CLI::App* sparse = rec->add_subcommand("sparse", "the sparse sequence h");
        sparse->add_option("--kbits", c.kbits, "k bits to embed")->required();
        sparse->add_option("--n", c.n, "prefix length")->required();
        leaf(sparse, cmd_rec_sparse);
        CLI::App* probe = rec->add_subcommand("reprobe", "r.e. upper-bound probe");
        probe->add_option("--semi", c.semi, "halting|empty|sigma-star");
        probe->add_option("--n", c.n, "prefix length")->required();
        probe->add_option("--t", c.t, "semi-decider budget")->required();
        leaf(probe, cmd_rec_reprobe);
    }
}

void collect_leaves(const CLI::App* app, const std::string& prefix, std::vector<std::string>& out) {
    const auto subs = app->get_subcommands([](const CLI::App*) { return true; });
    if (subs.empty() && !prefix.empty()) {
        out.push_back(prefix);
        return;
    }
    for (const CLI::App* sub : subs) {
        collect_leaves(sub, prefix.empty() ? sub->get_name() : prefix + " " + sub->get_name(), out);
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    AppBundle b;
    b.ctx.out = &out;
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) os << ' ';
            os << args[i];
        }
        b.ctx.invocation = os.str();
    }
    build(b);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        b.app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << b.app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    try {
        if (b.action) b.action();
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

const std::vector<OperationBinding>& operation_registry() {
    static const std::vector<OperationBinding> registry = {
        {"codec.nat_str_bijection", "encode bij"},
        {"codec.nat_str_bijection.inverse", "decode bij"},
        {"codec.self_delim", "encode selfdelim"},
        {"codec.self_delim.decode", "decode selfdelim"},
        {"codec.pair", "encode pair"},
        {"codec.pair.decode", "decode pair"},
        {"automata.dfa_run", "dfa run"},
        {"automata.dfa_combine", "dfa combine"},
        {"automata.dfa_minimize", "dfa minimize"},
        {"automata.dfa_equiv", "dfa equiv"},
        {"automata.dpda_run", "dpda run"},
        {"zoo.identifiers", "zoo list"},
        {"zoo.zoo_oracle", "zoo member"},
        {"zoo.enumerate", "zoo nth"},
        {"zoo.nth_in_residual", "zoo nth"},
        {"charseq.chi_prefix", "chi"},
        {"charseq.residual_table", "table"},
        {"charseq.synthesize_dfa", "synth"},
        {"charseq.regularity_verdict", "verdict"},
        {"kolmogorov.estimate_C", "kc estimate"},
        {"kolmogorov.install_residual_decoder", "kc estimate"},
        {"kolmogorov.find_incompressible", "kc incompressible"},
        {"kolmogorov.substring_bound_check", "kc substring"},
        {"kolmogorov.a_n_census", "kc census"},
        {"dcfl.stack_profile", "dcfl profile"},
        {"dcfl.case_classify", "dcfl classify"},
        {"dcfl.cycle_detect", "dcfl cycle"},
        {"dcfl.kcdcfl_experiment", "dcfl experiment"},
        {"dcfl.dpda_vs_oracle_diff", "dcfl diff"},
        {"rec.lambda_prefix", "rec lambda"},
        {"rec.halting_prefix", "rec halting"},
        {"rec.sparse_sequence", "rec sparse"},
        {"rec.re_upperbound_probe", "rec reprobe"},
    };
    return registry;
}

std::vector<std::string> leaf_subcommands() {
    AppBundle b;
    std::ostringstream sink;
    b.ctx.out = &sink;
    build(b);
    std::vector<std::string> leaves;
    collect_leaves(&b.app, "", leaves);
    return leaves;
}

} // namespace kclab::cli
