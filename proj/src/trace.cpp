#include "mel/trace.hpp"

#include <algorithm>
#include <bit>

#include "mel/error.hpp"

namespace mel {

Alphabet::Alphabet() : names_(std::make_shared<const std::vector<std::string>>()) {}

Alphabet::Alphabet(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.size() > kMaxAtoms)
        throw ValidationError("alphabet has " + std::to_string(names.size()) +
                              " atoms; at most 64 are supported");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_->begin(), names_->end(), name);
    if (it == names_->end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
}

int AtomSet::count() const { return std::popcount(bits_); }

AtomSet AtomSet::of(const Alphabet& alphabet, const std::vector<std::string>& names) {
    AtomSet s;
    for (const auto& n : names) {
        auto i = alphabet.index_of(n);
        if (!i) throw ValidationError("atom '" + n + "' is not in the alphabet");
        s = s.with(*i);
    }
    return s;
}

std::vector<std::string> AtomSet::names(const Alphabet& alphabet) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (contains(i)) out.push_back(alphabet[i]);
    return out;
}

class TraceBuilder {
public:
    static TimedHTTrace build(Alphabet a, std::vector<HTState> s, std::vector<Time> t) {
        TimedHTTrace m;
        m.alphabet_ = std::move(a);
        m.states_ = std::move(s);
        m.times_ = std::move(t);
        return m;
    }
};

bool TimedHTTrace::is_total() const {
    return std::all_of(states_.begin(), states_.end(),
                       [](const HTState& s) { return s.here == s.there; });
}

bool TimedHTTrace::is_strict() const {
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (times_[i - 1] >= times_[i]) return false;
    return true;
}

TimedHTTrace make_trace(Alphabet alphabet, std::vector<HTState> states, std::vector<Time> times) {
    if (states.empty()) throw ValidationError("a trace needs at least one state");
    if (states.size() != times.size())
        throw ValidationError("trace has " + std::to_string(states.size()) + " states but " +
                              std::to_string(times.size()) + " time points");
    const std::uint64_t universe =
        alphabet.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << alphabet.size()) - 1;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!states[i].here.subset_of(states[i].there))
            throw ValidationError("here-set is not a subset of there-set at state " +
                                  std::to_string(i));
        if ((states[i].there.bits() & ~universe) != 0)
            throw ValidationError("state " + std::to_string(i) + " uses atoms outside the alphabet");
    }
    if (times[0] != 0) throw ValidationError("time of state 0 must be 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] < times[i - 1])
            throw ValidationError("time decreases at state " + std::to_string(i));
    return TraceBuilder::build(std::move(alphabet), std::move(states), std::move(times));
}

TimedHTTrace make_trace(Alphabet alphabet, const std::vector<NamedState>& states,
                        std::vector<Time> times) {
    std::vector<HTState> sets;
    sets.reserve(states.size());
    for (const auto& s : states)
        sets.push_back({AtomSet::of(alphabet, s.here), AtomSet::of(alphabet, s.there)});
    return make_trace(std::move(alphabet), std::move(sets), std::move(times));
}

TimedHTTrace make_total_trace(Alphabet alphabet, const std::vector<std::vector<std::string>>& states,
                              std::vector<Time> times) {
    std::vector<HTState> sets;
    sets.reserve(states.size());
    for (const auto& s : states) {
        const AtomSet t = AtomSet::of(alphabet, s);
        sets.push_back({t, t});
    }
    return make_trace(std::move(alphabet), std::move(sets), std::move(times));
}

TimedHTTrace total_part(const TimedHTTrace& m) {
    std::vector<HTState> states = m.states();
    for (auto& s : states) s.here = s.there;
    return TraceBuilder::build(m.alphabet(), std::move(states), m.times());
}

TimedHTTrace reverse_trace(const TimedHTTrace& m) {
    const std::size_t n = m.length();
    std::vector<HTState> states(m.states().rbegin(), m.states().rend());
    std::vector<Time> times(n);
    const Time last = m.time(n - 1);
    for (std::size_t i = 0; i < n; ++i) times[i] = last - m.time(n - 1 - i);
    return TraceBuilder::build(m.alphabet(), std::move(states), std::move(times));
}

TimedHTTrace with_here(const TimedHTTrace& m, const std::vector<AtomSet>& here) {
    if (here.size() != m.length()) throw ValidationError("here-trace length mismatch");
    std::vector<HTState> states = m.states();
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!here[i].subset_of(states[i].there))
            throw ValidationError("here-set is not a subset of there-set at state " +
                                  std::to_string(i));
        states[i].here = here[i];
    }
    return TraceBuilder::build(m.alphabet(), std::move(states), m.times());
}

void EnumerationBounds::validate() const {
    if (max_len == 0) throw ValidationError("max_len must be at least 1");
    if (min_len == 0 || min_len > max_len)
        throw ValidationError("min_len must lie in [1, max_len]");
}

namespace {

void time_maps_rec(std::vector<Time>& cur, std::size_t length, Time max_time, bool strict,
                   std::vector<std::vector<Time>>& out) {
    if (cur.size() == length) {
        out.push_back(cur);
        return;
    }
    const Time from = cur.back() + (strict ? 1 : 0);
    for (Time t = from; t <= max_time; ++t) {
        cur.push_back(t);
        time_maps_rec(cur, length, max_time, strict, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Time>> enumerate_time_maps(std::size_t length, Time max_time, bool strict) {
    std::vector<std::vector<Time>> out;
    if (length == 0) return out;
    std::vector<Time> cur{0};
    time_maps_rec(cur, length, max_time, strict, out);
    return out;
}

bool for_each_total_trace(const EnumerationBounds& bounds, const TraceVisitor& visit) {
    bounds.validate();
    const std::uint64_t per_state = std::uint64_t{1} << bounds.alphabet.size();
    if (bounds.alphabet.size() >= 63)
        throw ValidationError("alphabet too large for exhaustive enumeration");
    for (std::size_t len = bounds.min_len; len <= bounds.max_len; ++len) {
        for (const auto& times : enumerate_time_maps(len, bounds.max_time, bounds.strict_only)) {
            std::vector<std::uint64_t> digits(len, 0);
            for (;;) {
                std::vector<HTState> states(len);
                for (std::size_t i = 0; i < len; ++i)
                    states[i] = {AtomSet(digits[i]), AtomSet(digits[i])};
                if (!visit(TraceBuilder::build(bounds.alphabet, std::move(states), times)))
                    return false;
                std::size_t pos = len;
                while (pos > 0) {
                    --pos;
                    if (++digits[pos] < per_state) break;
                    digits[pos] = 0;
                    if (pos == 0) {
                        pos = len + 1;
                        break;
                    }
                }
                if (pos == len + 1) break;
            }
        }
    }
    return true;
}

std::vector<TimedHTTrace> enumerate_total_traces(const EnumerationBounds& bounds) {
    std::vector<TimedHTTrace> out;
    for_each_total_trace(bounds, [&](const TimedHTTrace& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

bool for_each_refinement(const TimedHTTrace& m, const TraceVisitor& visit) {
    if (!m.is_total()) throw PreconditionError("refinements require a total trace");
    const std::size_t len = m.length();
    std::vector<std::uint64_t> here(len, 0);
    for (;;) {
        bool all_equal = true;
        std::vector<HTState> states(len);
        for (std::size_t i = 0; i < len; ++i) {
            states[i] = {AtomSet(here[i]), m.there(i)};
            all_equal = all_equal && here[i] == m.there(i).bits();
        }
        // H == T is the last combination in this order.
        if (all_equal) return true;
        if (!visit(TraceBuilder::build(m.alphabet(), std::move(states), m.times()))) return false;
        std::size_t pos = len;
        while (pos > 0) {
            --pos;
            const std::uint64_t t = m.there(pos).bits();
            if (here[pos] != t) {
                here[pos] = (here[pos] - t) & t;  // next submask of t
                break;
            }
            here[pos] = 0;
        }
    }
}

std::vector<TimedHTTrace> refinements(const TimedHTTrace& m) {
    std::vector<TimedHTTrace> out;
    for_each_refinement(m, [&](const TimedHTTrace& r) {
        out.push_back(r);
        return true;
    });
    return out;
}

}  // namespace mel
