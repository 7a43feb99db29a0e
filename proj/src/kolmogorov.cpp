#include "kclab/kolmogorov.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace kclab {

namespace {

class LiteralDecoder final : public Decoder {
public:
    const std::string& name() const override {
        static const std::string n = "literal";
        return n;
    }
    std::optional<Word> decode(const Word& program, const Side&, std::size_t max_out) const override {
        try {
            SelfDelimParse p = self_delim_decode(program);
            if (!p.rest.empty() || p.payload.size() > max_out) return std::nullopt;
            return p.payload;
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    std::vector<Word> candidates(const Word& target, const Side&) const override {
        return {self_delim(target)};
    }
};

// The copy machine: valid only when the side information equals the output
// length, in which case the program is the word itself.
class LiteralGivenLengthDecoder final : public Decoder {
public:
    const std::string& name() const override {
        static const std::string n = "literal-given-length";
        return n;
    }
    std::optional<Word> decode(const Word& program, const Side& side, std::size_t max_out) const override {
        if (!side || *side != Natural(program.size()) || program.size() > max_out) return std::nullopt;
        return program;
    }
    std::vector<Word> candidates(const Word& target, const Side& side) const override {
        if (side && *side == Natural(target.size())) return {target};
        return {};
    }
};

class RunLengthDecoder final : public Decoder {
public:
    const std::string& name() const override {
        static const std::string n = "run-length";
        return n;
    }
    std::optional<Word> decode(const Word& program, const Side&, std::size_t max_out) const override {
        try {
            SelfDelimParse unit = self_delim_decode(program);
            SelfDelimParse count = self_delim_decode(unit.rest);
            if (!count.rest.empty()) return std::nullopt;
            if (unit.payload.empty()) return Word{};
            const Natural reps = nat_of_word(count.payload);
            if (reps * Natural(unit.payload.size()) > Natural(max_out)) return std::nullopt;
            Word out;
            const std::size_t k = to_size(reps, "run-length count");
            out.reserve(k * unit.payload.size());
            for (std::size_t i = 0; i < k; ++i) out += unit.payload;
            return out;
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    std::vector<Word> candidates(const Word& target, const Side&) const override {
        std::vector<Word> out;
        const std::size_t n = target.size();
        for (std::size_t p = 1; p <= n; ++p) {
            if (n % p != 0) continue;
            bool periodic = true;
            for (std::size_t i = p; i < n && periodic; ++i) periodic = target[i] == target[i - p];
            if (!periodic) continue;
            out.push_back(self_delim(target.substr(0, p)) + self_delim(word_of_nat(Natural(n / p))));
        }
        return out;
    }
};

// LZ78 parse. Each phrase is self_delim(previous phrase index) plus one
// symbol; a trailing index field with no symbol closes the last (possibly
// repeated) phrase.
class Lz78Decoder final : public Decoder {
public:
    const std::string& name() const override {
        static const std::string n = "lz78";
        return n;
    }
    std::optional<Word> decode(const Word& program, const Side&, std::size_t max_out) const override {
        std::vector<Word> dict{Word{}};
        Word out;
        Word rest = program;
        while (!rest.empty()) {
            SelfDelimParse field;
            try {
                field = self_delim_decode(rest);
            } catch (const Error&) {
                return std::nullopt;
            }
            Natural idx;
            try {
                idx = nat_of_word(field.payload);
            } catch (const Error&) {
                return std::nullopt;
            }
            if (idx >= Natural(dict.size())) return std::nullopt;
            const Word& prev = dict[to_size(idx, "lz78 index")];
            if (field.rest.empty()) {
                out += prev;
                if (out.size() > max_out) return std::nullopt;
                return out;
            }
            const char c = field.rest[0];
            rest = field.rest.substr(1);
            Word phrase = prev + c;
            out += phrase;
            if (out.size() > max_out) return std::nullopt;
            dict.push_back(std::move(phrase));
        }
        return out;
    }
    std::vector<Word> candidates(const Word& target, const Side&) const override {
        std::map<Word, std::size_t> dict{{Word{}, 0}};
        Word program;
        Word current;
        for (char c : target) {
            Word extended = current + c;
            const auto it = dict.find(extended);
            if (it != dict.end()) {
                current = std::move(extended);
                continue;
            }
            program += self_delim(word_of_nat(Natural(dict.at(current))));
            program.push_back(c);
            dict.emplace(std::move(extended), dict.size());
            current.clear();
        }
        if (!current.empty()) {
            program += self_delim(word_of_nat(Natural(dict.at(current))));
        }
        return {program};
    }
};

// Describes a word by its length-lex rank n: payload self_delim(word(n)),
// output word_of_nat(n). Through the bijection the program bits coincide
// with the literal code; kept as the rank view of the same mapping.
class RankDecoder final : public Decoder {
public:
    const std::string& name() const override {
        static const std::string n = "rank";
        return n;
    }
    std::optional<Word> decode(const Word& program, const Side&, std::size_t max_out) const override {
        try {
            SelfDelimParse p = self_delim_decode(program);
            if (!p.rest.empty()) return std::nullopt;
            Word out = word_of_nat(nat_of_word(p.payload));
            if (out.size() > max_out) return std::nullopt;
            return out;
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    std::vector<Word> candidates(const Word& target, const Side&) const override {
        return {self_delim(word_of_nat(nat_of_word(target)))};
    }
};

class ResidualRankDecoder final : public Decoder {
public:
    ResidualRankDecoder(Dfa machine, Enumerator enumerator, std::string label, std::size_t budget)
        : machine_(std::move(machine)), enumerator_(std::move(enumerator)), budget_(budget),
          name_("residual-rank(" + label + ")") {}

    const std::string& name() const override { return name_; }

    std::optional<Word> decode(const Word& program, const Side&, std::size_t max_out) const override {
        std::size_t q = 0;
        Natural nth;
        Word rest;
        try {
            SelfDelimParse state_field = self_delim_decode(program);
            const Natural qn = nat_of_word(state_field.payload);
            if (qn >= Natural(machine_.states)) return std::nullopt;
            q = to_size(qn, "residual state");
            SelfDelimParse n_field = self_delim_decode(state_field.rest);
            nth = nat_of_word(n_field.payload);
            rest = n_field.rest;
        } catch (const Error&) {
            return std::nullopt;
        }
        if (!rest.empty() || nth < 1) return std::nullopt;
        Natural count = 0;
        for (std::size_t i = 1; i <= budget_; ++i) {
            const Word y = enumerator_.order(Natural(i));
            if (y.empty()) continue; // ranks skip eps, matching nth_in_residual
            if (accepts_from(q, y)) {
                if (++count == nth) {
                    if (y.size() > max_out) return std::nullopt;
                    return y;
                }
            }
        }
        return std::nullopt;
    }

    std::vector<Word> candidates(const Word& target, const Side&) const override {
        if (target.empty()) return {};
        std::size_t scan_to = budget_;
        if (enumerator_.locate) {
            const auto idx = enumerator_.locate(target);
            if (!idx || *idx > Natural(budget_)) return {};
            scan_to = to_size(*idx, "residual scan bound");
        }
        std::vector<Word> out;
        std::vector<Natural> counts(machine_.states, 0);
        for (std::size_t i = 1; i <= scan_to; ++i) {
            Word y;
            try {
                y = enumerator_.order(Natural(i));
            } catch (const Error&) {
                break; // enumeration ran dry (finite or sieve-bounded order)
            }
            if (y.empty()) continue;
            const bool hit = y == target;
            for (std::size_t q = 0; q < machine_.states; ++q) {
                if (!accepts_from(q, y)) continue;
                ++counts[q];
                if (hit) {
                    out.push_back(self_delim(word_of_nat(Natural(q))) +
                                  self_delim(word_of_nat(counts[q])));
                }
            }
            if (hit) break;
        }
        return out;
    }

private:
    bool accepts_from(std::size_t q, const Word& y) const {
        std::size_t s = q;
        for (char c : y) {
            if (machine_.alphabet.find(c) == std::string::npos) return false;
            s = machine_.step(s, c);
        }
        return machine_.accepting[s] != 0;
    }

    Dfa machine_;
    Enumerator enumerator_;
    std::size_t budget_;
    std::string name_;
};

class DfaRowDecoder final : public Decoder {
public:
    DfaRowDecoder(Dfa machine, std::string label)
        : machine_(std::move(machine)), name_("dfa-row(" + label + ")") {}

    const std::string& name() const override { return name_; }

    std::optional<Word> decode(const Word& program, const Side& side, std::size_t max_out) const override {
        std::size_t q = 0;
        Natural n;
        try {
            SelfDelimParse state_field = self_delim_decode(program);
            const Natural qn = nat_of_word(state_field.payload);
            if (qn >= Natural(machine_.states)) return std::nullopt;
            q = to_size(qn, "row state");
            if (state_field.rest.empty()) {
                if (!side) return std::nullopt;
                n = *side;
            } else {
                SelfDelimParse n_field = self_delim_decode(state_field.rest);
                if (!n_field.rest.empty()) return std::nullopt;
                n = nat_of_word(n_field.payload);
            }
        } catch (const Error&) {
            return std::nullopt;
        }
        if (n > Natural(max_out)) return std::nullopt;
        return row(q, to_size(n, "row length"));
    }

    std::vector<Word> candidates(const Word& target, const Side& side) const override {
        std::vector<Word> out;
        for (std::size_t q = 0; q < machine_.states; ++q) {
            if (row(q, target.size()) != target) continue;
            const Word state_field = self_delim(word_of_nat(Natural(q)));
            if (side && *side == Natural(target.size())) {
                out.push_back(state_field);
            }
            out.push_back(state_field + self_delim(word_of_nat(Natural(target.size()))));
        }
        return out;
    }

private:
    Word row(std::size_t q, std::size_t n) const {
        Word bits(n, '0');
        for (std::size_t i = 0; i < n; ++i) {
            const Word y = length_lex_word(Natural(i), machine_.alphabet);
            std::size_t s = q;
            for (char c : y) s = machine_.step(s, c);
            if (machine_.accepting[s]) bits[i] = '1';
        }
        return bits;
    }

    Dfa machine_;
    std::string name_;
};

// Replays a (witness-of-v, l(u), uw) description against a frozen base suite.
class CompositeSubstringDecoder final : public Decoder {
public:
    explicit CompositeSubstringDecoder(DecoderSuite base) : base_(std::move(base)) {}

    const std::string& name() const override {
        static const std::string n = "composite-substring";
        return n;
    }

    std::optional<Word> decode(const Word& program, const Side&, std::size_t max_out) const override {
        try {
            SelfDelimParse witness_field = self_delim_decode(program);
            SelfDelimParse lu_field = self_delim_decode(witness_field.rest);
            const Word& uw = lu_field.rest;
            const Natural lu = nat_of_word(lu_field.payload);
            if (lu > Natural(uw.size())) return std::nullopt;
            const std::size_t u_len = to_size(lu, "composite u length");
            const auto v = base_.decode_tagged(witness_field.payload, {}, max_out);
            if (!v) return std::nullopt;
            Word out = uw.substr(0, u_len) + *v + uw.substr(u_len);
            if (out.size() > max_out) return std::nullopt;
            return out;
        } catch (const Error&) {
            return std::nullopt;
        }
    }

    std::vector<Word> candidates(const Word&, const Side&) const override {
        return {}; // built explicitly by substring_bound_check
    }

private:
    DecoderSuite base_;
};

} // namespace

DecoderSuite DecoderSuite::standard() {
    DecoderSuite s;
    s.version_ = "v1";
    s.decoders_.push_back(std::make_shared<LiteralDecoder>());
    s.decoders_.push_back(std::make_shared<LiteralGivenLengthDecoder>());
    s.decoders_.push_back(std::make_shared<RunLengthDecoder>());
    s.decoders_.push_back(std::make_shared<Lz78Decoder>());
    s.decoders_.push_back(std::make_shared<RankDecoder>());
    return s;
}

DecoderSuite DecoderSuite::with(std::shared_ptr<const Decoder> d) const {
    DecoderSuite s = *this;
    s.version_ += "+" + d->name();
    s.decoders_.push_back(std::move(d));
    return s;
}

std::optional<std::size_t> DecoderSuite::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < decoders_.size(); ++i) {
        if (decoders_[i]->name() == name) return i;
    }
    return std::nullopt;
}

Word DecoderSuite::tag(std::size_t i) const { return self_delim(word_of_nat(Natural(i))); }

ComplexityEstimate DecoderSuite::estimate(const Word& x, const Side& side) const {
    require_binary(x, "estimate");
    std::optional<ComplexityEstimate> best;
    for (std::size_t i = 0; i < decoders_.size(); ++i) {
        const std::size_t tag_bits = tag_length(i);
        for (const Word& program : decoders_[i]->candidates(x, side)) {
            const std::size_t cost = tag_bits + program.size();
            if (best && cost >= best->value) continue;
            const auto replayed = decoders_[i]->decode(program, side, x.size());
            if (!replayed || *replayed != x) continue;
            best = ComplexityEstimate{cost, Witness{decoders_[i]->name(), tag(i), program}, side};
        }
    }
    if (!best) throw Error("estimate: no decoder produced a witness (literal should always succeed)");
    return *best;
}

std::optional<Word> DecoderSuite::replay(const Witness& w, const Side& side, std::size_t max_out) const {
    for (std::size_t i = 0; i < decoders_.size(); ++i) {
        if (decoders_[i]->name() == w.decoder) {
            return decoders_[i]->decode(w.program, side, max_out);
        }
    }
    return std::nullopt;
}

std::optional<Word> DecoderSuite::decode_tagged(const Word& bits, const Side& side,
                                                std::size_t max_out) const {
    try {
        SelfDelimParse tag_field = self_delim_decode(bits);
        const Natural idx = nat_of_word(tag_field.payload);
        if (idx >= Natural(decoders_.size())) return std::nullopt;
        return decoders_[to_size(idx, "decoder tag")]->decode(tag_field.rest, side, max_out);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::map<Word, ComplexityEstimate> DecoderSuite::enumerate_up_to(std::size_t max_total_bits,
                                                                 const Side& side,
                                                                 std::size_t max_out) const {
    std::map<Word, ComplexityEstimate> best;
    for (std::size_t i = 0; i < decoders_.size(); ++i) {
        const std::size_t tag_bits = tag_length(i);
        if (tag_bits > max_total_bits) continue;
        const std::size_t max_program = max_total_bits - tag_bits;
        for (std::size_t len = 0; len <= max_program; ++len) {
            Word program(len, '0');
            for (std::uint64_t counter = 0;; ++counter) {
                for (std::size_t b = 0; b < len; ++b) {
                    program[len - 1 - b] = (counter >> b) & 1 ? '1' : '0';
                }
                const auto out = decoders_[i]->decode(program, side, max_out);
                if (out) {
                    const std::size_t cost = tag_bits + len;
                    const auto it = best.find(*out);
                    if (it == best.end() || cost < it->second.value) {
                        best[*out] = ComplexityEstimate{
                            cost, Witness{decoders_[i]->name(), tag(i), program}, side};
                    }
                }
                if (len == 0 || counter + 1 == (std::uint64_t{1} << len)) break;
            }
        }
    }
    return best;
}

DecoderSuite install_residual_decoder(const DecoderSuite& suite, Dfa machine,
                                      Enumerator enumerator, std::string label,
                                      std::size_t enum_budget) {
    machine.validate();
    return suite.with(std::make_shared<ResidualRankDecoder>(
        std::move(machine), std::move(enumerator), std::move(label), enum_budget));
}

DecoderSuite install_residual_decoder(const DecoderSuite& suite, Dfa machine, std::string label,
                                      std::size_t enum_budget) {
    const std::string alphabet = machine.alphabet;
    Enumerator lenlex{
        "length-lex(" + alphabet + ")",
        [alphabet](const Natural& i) {
            if (i < 1) throw Error("length-lex enumerator: index must be >= 1");
            return length_lex_word(i - 1, alphabet);
        },
        [alphabet](const Word& w) -> std::optional<Natural> {
            try {
                return length_lex_index(w, alphabet) + 1;
            } catch (const Error&) {
                return std::nullopt;
            }
        }};
    return install_residual_decoder(suite, std::move(machine), std::move(lenlex), std::move(label),
                                    enum_budget);
}

DecoderSuite install_row_decoder(const DecoderSuite& suite, Dfa machine, std::string label) {
    machine.validate();
    return suite.with(std::make_shared<DfaRowDecoder>(std::move(machine), std::move(label)));
}

std::size_t residual_machine_constant(const Dfa& machine, std::size_t tag_bits) {
    std::size_t worst = 0;
    for (std::size_t q = 0; q < machine.states; ++q) {
        worst = std::max(worst, self_delim(word_of_nat(Natural(q))).size());
    }
    return tag_bits + worst;
}

Word find_incompressible(std::size_t n, const DecoderSuite& suite, const Side& side) {
    if (n == 0 || n > 20) throw Error("find_incompressible: n must be in 1..20 (exhaustive regime)");
    const auto described = suite.enumerate_up_to(n - 1, side, n);
    // Fewer than 2^n descriptions of length < n exist, so some word is free.
    Word w(n, '0');
    for (std::uint64_t counter = 0;; ++counter) {
        for (std::size_t b = 0; b < n; ++b) {
            w[n - 1 - b] = (counter >> b) & 1 ? '1' : '0';
        }
        if (!described.count(w)) return w;
        if (counter + 1 == (std::uint64_t{1} << n)) break;
    }
    throw Error("find_incompressible: counting argument violated (suite bug)");
}

SubstringBoundReport substring_bound_check(const DecoderSuite& suite, const Word& x,
                                           std::size_t u_len, std::size_t v_len) {
    require_binary(x, "substring_bound_check");
    if (u_len + v_len > x.size()) throw Error("substring_bound_check: split exceeds the word");
    const Word u = x.substr(0, u_len);
    const Word v = x.substr(u_len, v_len);
    const Word w = x.substr(u_len + v_len);

    const ComplexityEstimate est_v = suite.estimate(v);
    const Word v_blob = est_v.witness.tag + est_v.witness.program;

    const DecoderSuite installed = suite.with(std::make_shared<CompositeSubstringDecoder>(suite));
    const std::size_t composite_index = installed.size() - 1;
    const Word program = self_delim(v_blob) + self_delim(word_of_nat(Natural(u_len))) + u + w;
    const std::size_t total = installed.tag_length(composite_index) + program.size();

    SubstringBoundReport r;
    r.x = x;
    r.u_len = u_len;
    r.v_len = v_len;
    r.w_len = w.size();
    r.c_v = est_v.value;
    r.l_uw = u.size() + w.size();
    r.composite_total = total;
    r.log_term = total - r.c_v - r.l_uw;
    const auto replayed = installed.at(composite_index).decode(program, {}, x.size());
    r.replay_ok = replayed && *replayed == x;
    r.c_x_base = suite.estimate(x).value;
    r.c_x = std::min(r.c_x_base, total);
    r.suite_version = installed.version();
    return r;
}

std::string SubstringBoundReport::text() const {
    std::ostringstream os;
    os << "substring bound (suite " << suite_version << ")\n"
       << "  l(x) = " << x.size() << ", split u/v/w = " << u_len << "/" << v_len << "/" << w_len << "\n"
       << "  C(v) = " << c_v << ", l(uw) = " << l_uw << ", composite = " << composite_total
       << ", log-term = " << log_term << "\n"
       << "  C(x) = " << c_x << " <= C(v) + l(uw) + log-term = " << (c_v + l_uw + log_term) << "\n"
       << "  replay " << (replay_ok ? "ok" : "FAILED") << "\n";
    return os.str();
}

std::string SubstringBoundReport::csv() const {
    std::ostringstream os;
    os << "l_x," << x.size() << "\nu_len," << u_len << "\nv_len," << v_len << "\nw_len," << w_len
       << "\nc_v," << c_v << "\nl_uw," << l_uw << "\ncomposite_total," << composite_total
       << "\nlog_term," << log_term << "\nc_x," << c_x << "\nc_x_base," << c_x_base
       << "\nreplay_ok," << (replay_ok ? 1 : 0) << "\n";
    return os.str();
}

CensusReport a_n_census(std::size_t n_max, const std::vector<std::size_t>& c_values,
                        const DecoderSuite& suite) {
    if (n_max == 0 || n_max > 18) throw Error("a_n_census: n_max must be in 1..18 (exhaustive regime)");
    if (c_values.empty()) throw Error("a_n_census: no c values");
    std::size_t max_threshold = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t c : c_values) {
            max_threshold = std::max(max_threshold, nat_length(Natural(n)) + c);
        }
    }
    const auto described = suite.enumerate_up_to(max_threshold, {}, n_max);

    CensusReport report;
    report.n_max = n_max;
    report.c_values = c_values;
    report.suite_version = suite.version();

    // cost lookup per word, grouped by length
    std::vector<std::map<Word, std::size_t>> by_len(n_max + 1);
    for (const auto& [word, est] : described) {
        if (word.size() <= n_max) by_len[word.size()][word] = est.value;
    }

    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t c : c_values) {
            CensusCell cell;
            cell.n = n;
            cell.c = c;
            cell.threshold = nat_length(Natural(n)) + c;
            for (const auto& [word, cost] : by_len[n]) {
                if (cost <= cell.threshold) ++cell.d_an;
            }
            // prefix-closed: extend members level by level
            std::vector<Word> survivors{Word{}};
            for (std::size_t i = 1; i <= n; ++i) {
                const std::size_t level_threshold = nat_length(Natural(i)) + c;
                std::vector<Word> next;
                for (const Word& s : survivors) {
                    for (char b : {'0', '1'}) {
                        const Word t = s + b;
                        const auto it = by_len[i].find(t);
                        if (it != by_len[i].end() && it->second <= level_threshold) {
                            next.push_back(t);
                        }
                    }
                }
                survivors = std::move(next);
                if (survivors.empty()) break;
            }
            cell.prefix_closed = survivors.size();
            report.cells.push_back(cell);
        }
    }
    return report;
}

std::string CensusReport::text() const {
    std::ostringstream os;
    os << "A_n census (suite " << suite_version << "; threshold floor(log(n+1)) + c)\n";
    os << std::setw(4) << "n" << std::setw(4) << "c" << std::setw(6) << "thr" << std::setw(8)
       << "d(A_n)" << std::setw(10) << "prefix" << '\n';
    for (const auto& cell : cells) {
        os << std::setw(4) << cell.n << std::setw(4) << cell.c << std::setw(6) << cell.threshold
           << std::setw(8) << cell.d_an << std::setw(10) << cell.prefix_closed << '\n';
    }
    return os.str();
}

std::string CensusReport::csv() const {
    std::ostringstream os;
    os << "n,c,threshold,d_an,prefix_closed\n";
    for (const auto& cell : cells) {
        os << cell.n << ',' << cell.c << ',' << cell.threshold << ',' << cell.d_an << ','
           << cell.prefix_closed << '\n';
    }
    return os.str();
}

std::string bits_to_hex(const Word& bits) {
    require_binary(bits, "bits_to_hex");
    static const char* digits = "0123456789abcdef";
    std::ostringstream os;
    os << bits.size() << ':';
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            nibble <<= 1;
            if (i + b < bits.size() && bits[i + b] == '1') nibble |= 1;
        }
        os << digits[nibble];
    }
    return os.str();
}

Word hex_to_bits(const std::string& dump) {
    const auto colon = dump.find(':');
    if (colon == std::string::npos) throw Error("hex_to_bits: missing ':' separator");
    std::size_t count = 0;
    try {
        count = std::stoul(dump.substr(0, colon));
    } catch (const std::exception&) {
        throw Error("hex_to_bits: malformed bit count");
    }
    Word bits;
    bits.reserve(count);
    for (std::size_t i = colon + 1; i < dump.size(); ++i) {
        const char c = dump[i];
        unsigned nibble = 0;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = 10 + (c - 'a');
        else throw Error("hex_to_bits: bad hex digit");
        for (std::size_t b = 0; b < 4 && bits.size() < count; ++b) {
            bits.push_back((nibble >> (3 - b)) & 1 ? '1' : '0');
        }
    }
    if (bits.size() != count) throw Error("hex_to_bits: dump shorter than its bit count");
    return bits;
}

} // namespace kclab
