#include "kclab/automata.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace kclab {

namespace {

std::string sorted_unique(std::string s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

[[noreturn]] void fail(const std::string& msg) { throw Error(msg); }

} // namespace

std::size_t Dfa::symbol_index(char c) const {
    const auto pos = alphabet.find(c);
    if (pos == std::string::npos) {
        std::ostringstream os;
        os << "symbol '" << c << "' not in alphabet \"" << alphabet << "\"";
        fail(os.str());
    }
    return pos;
}

std::size_t Dfa::step(std::size_t q, char c) const {
    return delta[q * alphabet.size() + symbol_index(c)];
}

Dfa::RunResult Dfa::run(std::string_view w) const {
    std::size_t q = start;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto pos = alphabet.find(w[i]);
        if (pos == std::string::npos) {
            std::ostringstream os;
            os << "dfa_run: symbol '" << w[i] << "' at position " << i + 1
               << " not in alphabet \"" << alphabet << "\"";
            fail(os.str());
        }
        q = delta[q * alphabet.size() + pos];
    }
    return RunResult{q, accepting[q] != 0};
}

void Dfa::validate() const {
    if (states == 0) fail("dfa: no states");
    if (alphabet.empty()) fail("dfa: empty alphabet");
    if (start >= states) fail("dfa: start state out of range");
    if (accepting.size() != states) fail("dfa: accepting flags malformed");
    if (delta.size() != states * alphabet.size()) fail("dfa: transition table not total");
    for (std::size_t t : delta) {
        if (t >= states) fail("dfa: transition target out of range");
    }
}

Dfa dfa_combine(DfaCombineOp op, const Dfa& a, const Dfa* b) {
    a.validate();
    if (op == DfaCombineOp::Complement) {
        Dfa r = a;
        for (auto& f : r.accepting) f = !f;
        return r;
    }
    if (b == nullptr) fail("dfa_combine: union/intersection need a second machine");
    b->validate();
    if (a.alphabet != b->alphabet) {
        fail("dfa_combine: alphabet mismatch (\"" + a.alphabet + "\" vs \"" + b->alphabet + "\")");
    }
    Dfa r;
    r.alphabet = a.alphabet;
    r.states = a.states * b->states;
    r.start = a.start * b->states + b->start;
    r.accepting.resize(r.states);
    r.delta.resize(r.states * r.alphabet.size());
    for (std::size_t qa = 0; qa < a.states; ++qa) {
        for (std::size_t qb = 0; qb < b->states; ++qb) {
            const std::size_t q = qa * b->states + qb;
            const bool fa = a.accepting[qa] != 0;
            const bool fb = b->accepting[qb] != 0;
            r.accepting[q] = (op == DfaCombineOp::Union) ? (fa || fb) : (fa && fb);
            for (std::size_t s = 0; s < r.alphabet.size(); ++s) {
                const std::size_t ta = a.delta[qa * a.alphabet.size() + s];
                const std::size_t tb = b->delta[qb * b->alphabet.size() + s];
                r.delta[q * r.alphabet.size() + s] = ta * b->states + tb;
            }
        }
    }
    return r;
}

Dfa dfa_minimize(const Dfa& a) {
    a.validate();
    const std::size_t k = a.alphabet.size();

    // Reachable part first (the Myhill-Nerode index only sees reachable behavior).
    std::vector<std::size_t> order;
    std::vector<std::size_t> remap(a.states, a.states);
    std::deque<std::size_t> queue{a.start};
    remap[a.start] = 0;
    order.push_back(a.start);
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < k; ++s) {
            const std::size_t t = a.delta[q * k + s];
            if (remap[t] == a.states) {
                remap[t] = order.size();
                order.push_back(t);
                queue.push_back(t);
            }
        }
    }
    const std::size_t n = order.size();
    std::vector<std::size_t> delta(n * k);
    std::vector<char> accepting(n);
    for (std::size_t i = 0; i < n; ++i) {
        accepting[i] = a.accepting[order[i]];
        for (std::size_t s = 0; s < k; ++s) {
            delta[i * k + s] = remap[a.delta[order[i] * k + s]];
        }
    }

    // Moore partition refinement to a fixpoint.
    std::vector<std::size_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = accepting[i] ? 1 : 0;
    std::size_t classes = 2;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> sig_to_class;
        std::vector<std::size_t> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[i]);
            for (std::size_t s = 0; s < k; ++s) sig.push_back(cls[delta[i * k + s]]);
            const auto [it, inserted] = sig_to_class.emplace(std::move(sig), sig_to_class.size());
            next[i] = it->second;
            (void)inserted;
        }
        if (sig_to_class.size() == classes) {
            cls = std::move(next);
            break;
        }
        classes = sig_to_class.size();
        cls = std::move(next);
    }

    // Canonical numbering: BFS over classes from the start class.
    std::vector<std::size_t> class_rep(classes, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (class_rep[cls[i]] == n) class_rep[cls[i]] = i;
    }
    std::vector<std::size_t> class_new(classes, classes);
    std::vector<std::size_t> class_order;
    std::deque<std::size_t> cqueue{cls[0]};
    class_new[cls[0]] = 0;
    class_order.push_back(cls[0]);
    while (!cqueue.empty()) {
        const std::size_t c = cqueue.front();
        cqueue.pop_front();
        const std::size_t rep = class_rep[c];
        for (std::size_t s = 0; s < k; ++s) {
            const std::size_t t = cls[delta[rep * k + s]];
            if (class_new[t] == classes) {
                class_new[t] = class_order.size();
                class_order.push_back(t);
                cqueue.push_back(t);
            }
        }
    }

    Dfa r;
    r.alphabet = a.alphabet;
    r.states = classes;
    r.start = class_new[cls[0]];
    r.accepting.resize(classes);
    r.delta.resize(classes * k);
    for (std::size_t c = 0; c < classes; ++c) {
        const std::size_t rep = class_rep[class_order[c]];
        r.accepting[c] = accepting[rep];
        for (std::size_t s = 0; s < k; ++s) {
            r.delta[c * k + s] = class_new[cls[delta[rep * k + s]]];
        }
    }
    return r;
}

std::optional<Word> dfa_first_difference(const Dfa& a, const Dfa& b, std::size_t max_len) {
    if (a.alphabet != b.alphabet) return Word{};
    // BFS over the product; the first differing pair in BFS order gives the
    // length-lex least witness because symbols are explored in sorted order.
    const std::size_t k = a.alphabet.size();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::deque<std::tuple<std::size_t, std::size_t, Word>> queue;
    queue.emplace_back(a.start, b.start, Word{});
    seen.insert({a.start, b.start});
    while (!queue.empty()) {
        auto [qa, qb, w] = queue.front();
        queue.pop_front();
        if ((a.accepting[qa] != 0) != (b.accepting[qb] != 0)) return w;
        if (w.size() >= max_len) continue;
        for (std::size_t s = 0; s < k; ++s) {
            const std::size_t ta = a.delta[qa * k + s];
            const std::size_t tb = b.delta[qb * k + s];
            if (seen.insert({ta, tb}).second) {
                queue.emplace_back(ta, tb, w + a.alphabet[s]);
            }
        }
    }
    return std::nullopt;
}

bool dfa_equiv(const Dfa& a, const Dfa& b) {
    a.validate();
    b.validate();
    if (a.alphabet != b.alphabet) return false;
    // The product has at most |Qa|*|Qb| pairs, so an unbounded BFS terminates.
    return !dfa_first_difference(a, b, a.states * b.states + 1).has_value();
}

const Dpda::Target* Dpda::find(std::size_t q, char input, char top) const {
    const auto it = transitions.find({q, input, top});
    return it == transitions.end() ? nullptr : &it->second;
}

void Dpda::validate() const {
    if (states == 0) fail("dpda: no states");
    if (alphabet.empty()) fail("dpda: empty alphabet");
    if (stack_alphabet.empty()) fail("dpda: empty stack alphabet");
    if (stack_alphabet.find(bottom) == std::string::npos) fail("dpda: bottom marker not in stack alphabet");
    if (start >= states) fail("dpda: start state out of range");
    if (accepting.size() != states) fail("dpda: accepting flags malformed");
    for (const auto& [key, target] : transitions) {
        const auto [q, input, top] = key;
        std::ostringstream ctx;
        ctx << "dpda transition (" << q << ", "
            << (input == kEpsilon ? std::string("eps") : std::string(1, input)) << ", " << top << ")";
        if (q >= states || target.to >= states) fail(ctx.str() + ": state out of range");
        if (input != kEpsilon && alphabet.find(input) == std::string::npos) {
            fail(ctx.str() + ": input symbol not in alphabet");
        }
        if (stack_alphabet.find(top) == std::string::npos) {
            fail(ctx.str() + ": stack top not in stack alphabet");
        }
        for (char c : target.push) {
            if (stack_alphabet.find(c) == std::string::npos) {
                fail(ctx.str() + ": push symbol not in stack alphabet");
            }
        }
        const std::size_t bottoms = std::count(target.push.begin(), target.push.end(), bottom);
        if (top == bottom) {
            if (target.push.empty() || target.push.front() != bottom || bottoms != 1) {
                fail(ctx.str() + ": the bottom marker must be re-pushed exactly once, deepest");
            }
        } else if (bottoms != 0) {
            fail(ctx.str() + ": the bottom marker may not be pushed above the bottom");
        }
        if (input != kEpsilon && find(q, kEpsilon, top) != nullptr) {
            fail(ctx.str() + ": input move conflicts with an eps-move at the same (state, top)");
        }
    }
}

DpdaRunTrace dpda_run(const Dpda& m, std::string_view w, const DpdaRunOptions& opts) {
    const std::size_t eps_limit = opts.eps_limit.value_or(m.default_eps_limit());
    std::size_t state = opts.start_state.value_or(m.start);
    std::string stack = opts.start_stack.value_or(std::string(1, m.bottom));
    if (stack.empty()) fail("dpda_run: empty start stack");

    DpdaRunTrace trace;
    trace.heights_after_symbol.reserve(w.size());
    std::size_t consumed = 0;
    std::size_t eps_run = 0;
    bool accepted_after_input = false;

    const auto apply = [&](const Dpda::Target& t) {
        stack.pop_back();
        stack += t.push;
        state = t.to;
    };

    // Runs eps-moves to quiescence. Acceptance means: some configuration
    // reached at or after full input consumption is accepting.
    const auto advance_eps = [&](bool trailing) {
        for (;;) {
            if (trailing && m.accepting[state]) accepted_after_input = true;
            if (stack.empty()) return;
            const Dpda::Target* t = m.find(state, kEpsilon, stack.back());
            if (t == nullptr) return;
            if (++eps_run > eps_limit) {
                std::ostringstream os;
                os << "dpda_run: eps-move budget of " << eps_limit
                   << " consecutive moves exhausted after consuming " << consumed << " symbol(s)";
                throw Error(os.str());
            }
            apply(*t);
            trace.steps.push_back(RunStep{consumed, state, stack.size(), false});
        }
    };

    const auto finish = [&](RunOutcome outcome, bool accepted) {
        trace.final_state = state;
        trace.accepted = accepted;
        trace.outcome = outcome;
        trace.final_stack = stack;
        trace.consumed = consumed;
        return trace;
    };

    advance_eps(w.empty());
    if (w.empty()) {
        return finish(accepted_after_input ? RunOutcome::Accepted : RunOutcome::Rejected,
                      accepted_after_input);
    }

    for (std::size_t i = 0; i < w.size(); ++i) {
        const char c = w[i];
        if (m.alphabet.find(c) == std::string::npos) {
            std::ostringstream os;
            os << "dpda_run: symbol '" << c << "' at position " << i + 1
               << " not in alphabet \"" << m.alphabet << "\"";
            fail(os.str());
        }
        const Dpda::Target* t = stack.empty() ? nullptr : m.find(state, c, stack.back());
        if (t == nullptr) {
            return finish(RunOutcome::Stuck, false);
        }
        apply(*t);
        ++consumed;
        eps_run = 0;
        trace.steps.push_back(RunStep{consumed, state, stack.size(), true});
        advance_eps(i + 1 == w.size());
        trace.heights_after_symbol.push_back(stack.size());
        if (opts.record_stacks) trace.stacks_after_symbol.push_back(stack);
    }
    return finish(accepted_after_input ? RunOutcome::Accepted : RunOutcome::Rejected,
                  accepted_after_input);
}

// --- text format ---------------------------------------------------------

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail_line(std::size_t number, const std::string& msg) {
    std::ostringstream os;
    os << "line " << number << ": " << msg;
    throw Error(os.str());
}

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(Line{number, std::move(tokens)});
    }
    return lines;
}

char single_char(const Line& line, const std::string& tok, const char* what) {
    if (tok.size() != 1) fail_line(line.number, std::string(what) + " '" + tok + "' must be a single character");
    return tok[0];
}

std::size_t parse_state(const Line& line, const std::string& tok, std::size_t states) {
    std::size_t value = 0;
    try {
        std::size_t pos = 0;
        value = std::stoul(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        fail_line(line.number, "expected a state number, got '" + tok + "'");
    }
    if (states > 0 && value >= states) {
        fail_line(line.number, "state " + tok + " out of range (states " + std::to_string(states) + ")");
    }
    return value;
}

} // namespace

std::variant<Dfa, Dpda> parse_automaton(std::istream& in) {
    const std::vector<Line> lines = tokenize(in);
    if (lines.empty()) throw Error("line 1: empty automaton description");
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "type") {
        fail_line(head.number, "expected 'type dfa' or 'type dpda'");
    }
    const bool is_dfa = head.tokens[1] == "dfa";
    if (!is_dfa && head.tokens[1] != "dpda") {
        fail_line(head.number, "unknown automaton type '" + head.tokens[1] + "'");
    }

    std::string alphabet;
    std::string stack_alphabet;
    std::optional<char> bottom;
    std::size_t states = 0;
    bool states_seen = false;
    std::optional<std::size_t> start;
    std::vector<std::size_t> accept;
    struct RawTrans {
        std::size_t line;
        std::vector<std::string> tokens;
    };
    std::vector<RawTrans> raw_trans;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& key = line.tokens[0];
        if (key == "alphabet") {
            if (line.tokens.size() < 2) fail_line(line.number, "alphabet needs at least one symbol");
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                alphabet.push_back(single_char(line, line.tokens[i], "alphabet symbol"));
            }
        } else if (key == "states") {
            if (line.tokens.size() != 2) fail_line(line.number, "states takes one count");
            states = parse_state(line, line.tokens[1], 0);
            if (states == 0) fail_line(line.number, "state count must be positive");
            states_seen = true;
        } else if (key == "start") {
            if (line.tokens.size() != 2) fail_line(line.number, "start takes one state");
            start = parse_state(line, line.tokens[1], states);
        } else if (key == "accept") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                accept.push_back(parse_state(line, line.tokens[i], states));
            }
        } else if (key == "stack") {
            if (is_dfa) fail_line(line.number, "stack declaration in a dfa");
            if (line.tokens.size() < 2) fail_line(line.number, "stack needs at least one symbol");
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                stack_alphabet.push_back(single_char(line, line.tokens[i], "stack symbol"));
            }
        } else if (key == "bottom") {
            if (is_dfa) fail_line(line.number, "bottom declaration in a dfa");
            if (line.tokens.size() != 2) fail_line(line.number, "bottom takes one symbol");
            bottom = single_char(line, line.tokens[1], "bottom symbol");
        } else if (key == "trans") {
            raw_trans.push_back(RawTrans{li, {}});
            raw_trans.back().tokens = line.tokens;
        } else {
            fail_line(line.number, "unknown directive '" + key + "'");
        }
    }

    if (!states_seen) throw Error("missing 'states' declaration");
    if (!start) throw Error("missing 'start' declaration");
    if (alphabet.empty()) throw Error("missing 'alphabet' declaration");
    alphabet = sorted_unique(alphabet);

    if (is_dfa) {
        Dfa a;
        a.alphabet = alphabet;
        a.states = states;
        a.start = *start;
        a.accepting.assign(states, 0);
        for (std::size_t q : accept) a.accepting[q] = 1;
        a.delta.assign(states * alphabet.size(), states); // sentinel: undefined
        for (const RawTrans& rt : raw_trans) {
            const Line& line = lines[rt.line];
            if (rt.tokens.size() != 4) fail_line(line.number, "dfa trans takes: <q> <symbol> <q'>");
            const std::size_t q = parse_state(line, rt.tokens[1], states);
            const char c = single_char(line, rt.tokens[2], "input symbol");
            if (alphabet.find(c) == std::string::npos) {
                fail_line(line.number, std::string("symbol '") + c + "' not in alphabet");
            }
            const std::size_t to = parse_state(line, rt.tokens[3], states);
            std::size_t& cell = a.delta[q * alphabet.size() + alphabet.find(c)];
            if (cell != states) {
                fail_line(line.number, "duplicate transition for state " + rt.tokens[1] + " on '" + c + "'");
            }
            cell = to;
        }
        for (std::size_t q = 0; q < states; ++q) {
            for (std::size_t s = 0; s < alphabet.size(); ++s) {
                if (a.delta[q * alphabet.size() + s] == states) {
                    const std::size_t last = lines.back().number;
                    std::ostringstream os;
                    os << "line " << last << ": transition table not total, missing (state "
                       << q << ", '" << alphabet[s] << "')";
                    throw Error(os.str());
                }
            }
        }
        a.validate();
        return a;
    }

    Dpda m;
    m.alphabet = alphabet;
    if (stack_alphabet.empty()) throw Error("missing 'stack' declaration");
    m.stack_alphabet = sorted_unique(stack_alphabet);
    if (!bottom) throw Error("missing 'bottom' declaration");
    m.bottom = *bottom;
    m.states = states;
    m.start = *start;
    m.accepting.assign(states, 0);
    for (std::size_t q : accept) m.accepting[q] = 1;
    for (const RawTrans& rt : raw_trans) {
        const Line& line = lines[rt.line];
        if (rt.tokens.size() != 6) {
            fail_line(line.number, "dpda trans takes: <q> <symbol|eps> <top> <q'> <push|->");
        }
        const std::size_t q = parse_state(line, rt.tokens[1], states);
        const char input = rt.tokens[2] == "eps" ? kEpsilon : single_char(line, rt.tokens[2], "input symbol");
        const char top = single_char(line, rt.tokens[3], "stack top");
        const std::size_t to = parse_state(line, rt.tokens[4], states);
        std::string push = rt.tokens[5] == "-" ? std::string{} : rt.tokens[5];
        const auto key = std::make_tuple(q, input, top);
        if (m.transitions.count(key)) {
            fail_line(line.number, "duplicate transition");
        }
        m.transitions[key] = Dpda::Target{to, std::move(push)};
    }
    try {
        m.validate();
    } catch (const Error& e) {
        const std::size_t last = lines.back().number;
        std::ostringstream os;
        os << "line " << last << ": " << e.what();
        throw Error(os.str());
    }
    return m;
}

std::variant<Dfa, Dpda> parse_automaton_text(const std::string& text) {
    std::istringstream in(text);
    return parse_automaton(in);
}

std::variant<Dfa, Dpda> load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open automaton file: " + path);
    return parse_automaton(in);
}

Dfa load_dfa(const std::string& path) {
    auto v = load_automaton(path);
    if (auto* a = std::get_if<Dfa>(&v)) return *a;
    throw Error(path + ": expected a dfa, found a dpda");
}

Dpda load_dpda(const std::string& path) {
    auto v = load_automaton(path);
    if (auto* m = std::get_if<Dpda>(&v)) return *m;
    throw Error(path + ": expected a dpda, found a dfa");
}

std::string format_automaton(const Dfa& a) {
    std::ostringstream os;
    os << "type dfa\nalphabet";
    for (char c : a.alphabet) os << ' ' << c;
    os << "\nstates " << a.states << "\nstart " << a.start << "\naccept";
    for (std::size_t q = 0; q < a.states; ++q) {
        if (a.accepting[q]) os << ' ' << q;
    }
    os << '\n';
    for (std::size_t q = 0; q < a.states; ++q) {
        for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
            os << "trans " << q << ' ' << a.alphabet[s] << ' ' << a.delta[q * a.alphabet.size() + s] << '\n';
        }
    }
    return os.str();
}

std::string format_automaton(const Dpda& m) {
    std::ostringstream os;
    os << "type dpda\nalphabet";
    for (char c : m.alphabet) os << ' ' << c;
    os << "\nstates " << m.states << "\nstart " << m.start << "\naccept";
    for (std::size_t q = 0; q < m.states; ++q) {
        if (m.accepting[q]) os << ' ' << q;
    }
    os << "\nstack";
    for (char c : m.stack_alphabet) os << ' ' << c;
    os << "\nbottom " << m.bottom << '\n';
    for (const auto& [key, target] : m.transitions) {
        const auto [q, input, top] = key;
        os << "trans " << q << ' '
           << (input == kEpsilon ? std::string("eps") : std::string(1, input)) << ' ' << top << ' '
           << target.to << ' ' << (target.push.empty() ? "-" : target.push) << '\n';
    }
    return os.str();
}

} // namespace kclab
