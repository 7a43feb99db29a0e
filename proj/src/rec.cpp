#include "kclab/rec.hpp"

#include <algorithm>
#include <sstream>

#include "kclab/charseq.hpp"

namespace kclab {

namespace toy {

std::string nth_program(const Natural& index) {
    if (index < 1) throw Error("toy program enumeration is 1-indexed");
    return length_lex_word(index - 1, kAlphabet);
}

std::optional<std::size_t> halt_time(const std::string& program, const Natural& input,
                                     std::size_t budget) {
    Natural acc = input;
    std::size_t pc = 0;
    for (std::size_t steps = 1; steps <= budget; ++steps) {
        if (pc >= program.size()) return steps; // falling off the end halts
        switch (program[pc]) {
            case 'i':
                ++acc;
                ++pc;
                break;
            case 'd':
                if (acc > 0) --acc;
                ++pc;
                break;
            case 'z':
                pc += (acc == 0) ? 2 : 1;
                break;
            case 'b':
                pc = 0;
                break;
            case 'h':
                return steps;
            default:
                throw Error(std::string("toy interpreter: unknown instruction '") + program[pc] + "'");
        }
    }
    return std::nullopt;
}

bool halts_within(std::size_t i, std::size_t T) {
    return halt_time(nth_program(Natural(i)), Natural(i), T).has_value();
}

} // namespace toy

LambdaReport lambda_prefix(const LanguageOracle& L, std::size_t n, const DecoderSuite& suite) {
    const CharSeq chi = chi_prefix(L, Word{}, n);
    LambdaReport r;
    r.seq.provenance = "lambda(" + L.name + ")";
    r.seq.bits = chi.bits;
    r.cost_given_n = suite.estimate(chi.bits, Natural(n)).value;
    r.suite_version = suite.version();
    return r;
}

BitSequencePrefix halting_prefix(std::size_t T, std::size_t n) {
    BitSequencePrefix p;
    {
        std::ostringstream os;
        os << "halting(" << toy::kVersion << ", T=" << T << ")";
        p.provenance = os.str();
    }
    p.bits.resize(n, '0');
    for (std::size_t i = 1; i <= n; ++i) {
        if (toy::halts_within(i, T)) p.bits[i - 1] = '1';
    }
    return p;
}

std::vector<std::size_t> sparse_positions(std::size_t n) {
    std::vector<std::size_t> out;
    std::size_t pos = 1;
    std::size_t gap = 2;
    while (pos <= n) {
        out.push_back(pos);
        pos += gap + 1;
        gap *= 2;
    }
    return out;
}

BitSequencePrefix sparse_sequence(const Word& kbits, std::size_t n) {
    require_binary(kbits, "sparse_sequence kbits");
    BitSequencePrefix p;
    p.provenance = "sparse(" + std::to_string(n) + ")";
    p.bits.assign(n, '0');
    std::size_t pos = 1;
    std::size_t gap = 2;
    for (std::size_t i = 1; pos <= n; ++i) {
        if (i > kbits.size()) {
            std::ostringstream os;
            os << "sparse_sequence: kbits ends before k-position " << i << " (offset " << pos << ")";
            throw Error(os.str());
        }
        p.bits[pos - 1] = kbits[i - 1];
        pos += gap + 1;
        gap *= 2;
    }
    return p;
}

BoundedSemiDecider halting_semi_decider() {
    return BoundedSemiDecider{"halting", [](std::size_t index, std::size_t budget) {
        return toy::halts_within(index, budget);
    }};
}

BoundedSemiDecider empty_semi_decider() {
    return BoundedSemiDecider{"empty", [](std::size_t, std::size_t) { return false; }};
}

BoundedSemiDecider sigma_star_semi_decider() {
    return BoundedSemiDecider{"sigma-star", [](std::size_t, std::size_t) { return true; }};
}

namespace {

std::size_t bit_width(std::size_t n) {
    std::size_t bits = 0;
    while (n > 0) {
        ++bits;
        n >>= 1;
    }
    return bits;
}

// Reconstructs lambda^T_{1:n} from n (side) and the member count m: dovetail
// the semi-decider budget upward until exactly m members of v_1..v_n have
// appeared; by monotonicity that member set equals the budget-T one. The
// program carries m either self-delimited or in floor(log n)+1 raw bits.
class CountDecoder final : public Decoder {
public:
    CountDecoder(BoundedSemiDecider semi, std::size_t cap)
        : semi_(std::move(semi)), cap_(cap), name_("re-count(" + semi_.name + ")") {}

    const std::string& name() const override { return name_; }

    std::optional<Word> decode(const Word& program, const Side& side, std::size_t max_out) const override {
        if (!side || *side < 1 || *side > Natural(max_out)) return std::nullopt;
        const std::size_t n = to_size(*side, "count decoder n");
        std::optional<Natural> m;
        try {
            SelfDelimParse p = self_delim_decode(program);
            if (p.rest.empty()) m = nat_of_word(p.payload);
        } catch (const Error&) {
        }
        if (!m && program.size() == bit_width(n)) {
            Natural raw = 0;
            for (char c : program) raw_shift(raw, c);
            m = raw;
        }
        if (!m || *m > Natural(n)) return std::nullopt;
        const std::size_t count = to_size(*m, "count decoder m");

        std::vector<std::size_t> times(n + 1, 0); // 0 = not discovered within cap
        std::vector<std::size_t> finite;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!semi_.accepts_within(i, cap_)) continue;
            std::size_t lo = 1, hi = cap_;
            while (lo < hi) { // first budget that discovers i (monotone)
                const std::size_t mid = lo + (hi - lo) / 2;
                if (semi_.accepts_within(i, mid)) hi = mid;
                else lo = mid + 1;
            }
            times[i] = lo;
            finite.push_back(lo);
        }
        if (finite.size() < count) return std::nullopt;
        std::size_t cutoff = 0;
        if (count > 0) {
            std::nth_element(finite.begin(), finite.begin() + (count - 1), finite.end());
            cutoff = finite[count - 1];
        }
        Word bits(n, '0');
        for (std::size_t i = 1; i <= n; ++i) {
            if (times[i] != 0 && times[i] <= cutoff) bits[i - 1] = '1';
        }
        return bits;
    }

    std::vector<Word> candidates(const Word& target, const Side& side) const override {
        if (!side || *side != Natural(target.size())) return {};
        const std::size_t n = target.size();
        const std::size_t m = std::count(target.begin(), target.end(), '1');
        std::vector<Word> out;
        out.push_back(self_delim(word_of_nat(Natural(m))));
        Word raw(bit_width(n), '0');
        for (std::size_t b = 0; b < raw.size(); ++b) {
            if ((m >> (raw.size() - 1 - b)) & 1) raw[b] = '1';
        }
        out.push_back(raw);
        return out;
    }

private:
    static void raw_shift(Natural& value, char c) { value = value * 2 + (c == '1' ? 1 : 0); }

    BoundedSemiDecider semi_;
    std::size_t cap_;
    std::string name_;
};

} // namespace

DecoderSuite install_count_decoder(const DecoderSuite& suite, const BoundedSemiDecider& semi,
                                   std::size_t dovetail_cap) {
    return suite.with(std::make_shared<CountDecoder>(semi, dovetail_cap));
}

ReProbeReport re_upperbound_probe(const BoundedSemiDecider& semi, std::size_t n, std::size_t T,
                                  const DecoderSuite& suite, std::size_t dovetail_cap) {
    if (n == 0) throw Error("re_upperbound_probe: n must be >= 1");
    if (T > dovetail_cap) throw Error("re_upperbound_probe: T exceeds the dovetail cap");

    ReProbeReport r;
    r.semi_name = semi.name;
    r.n = n;
    r.T = T;
    r.lambda_t.assign(n, '0');
    for (std::size_t i = 1; i <= n; ++i) {
        if (semi.accepts_within(i, T)) r.lambda_t[i - 1] = '1';
    }
    r.members_found = std::count(r.lambda_t.begin(), r.lambda_t.end(), '1');

    const DecoderSuite installed = install_count_decoder(suite, semi, dovetail_cap);
    const std::size_t decoder_index = installed.size() - 1;
    const std::size_t tag_bits = installed.tag_length(decoder_index);
    const Decoder& decoder = installed.at(decoder_index);

    r.bound_bits = 0;
    for (const Word& program : decoder.candidates(r.lambda_t, Natural(n))) {
        const auto replayed = decoder.decode(program, Natural(n), n);
        if (!replayed || *replayed != r.lambda_t) continue;
        const std::size_t cost = tag_bits + program.size();
        if (r.bound_bits == 0 || cost < r.bound_bits) {
            r.bound_bits = cost;
            r.witness_ok = true;
        }
    }
    r.fixed_width_bits = tag_bits + bit_width(n);
    r.floor_log_n = bit_width(n) - 1; // floor(log2 n) for n >= 1
    r.suite_version = installed.version();
    return r;
}

std::string ReProbeReport::text() const {
    std::ostringstream os;
    os << "r.e. upper-bound probe (suite " << suite_version << ")\n"
       << "semi-decider: " << semi_name << ", n=" << n << ", T=" << T << "\n"
       << "lambda^T: " << lambda_t << "\n"
       << "members m = " << members_found << "\n"
       << "C(lambda^T | n) <= " << bound_bits << " bits via the count decoder (witness "
       << (witness_ok ? "ok" : "FAILED") << ")\n"
       << "fixed-width route: " << fixed_width_bits << " = tag + floor(log n) + 1; floor(log n) = "
       << floor_log_n << "\n";
    return os.str();
}

} // namespace kclab
