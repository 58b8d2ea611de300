// Timed here-and-there traces and bounded enumeration over them.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mel/interval.hpp"

namespace mel {

/// Lexicographically ordered, duplicate-free set of atom names (at most 64).
/// Copies share storage.
class Alphabet {
public:
    static constexpr std::size_t kMaxAtoms = 64;

    Alphabet();
    /// Sorts and removes duplicates. Throws ValidationError past kMaxAtoms.
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    bool empty() const { return names_->empty(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// Subset of an alphabet; bit i stands for the i-th atom.
class AtomSet {
public:
    constexpr AtomSet() = default;
    constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool empty() const { return bits_ == 0; }
    int count() const;
    AtomSet with(std::size_t i) const { return AtomSet(bits_ | (std::uint64_t{1} << i)); }
    AtomSet without(std::size_t i) const { return AtomSet(bits_ & ~(std::uint64_t{1} << i)); }

    friend constexpr bool operator==(AtomSet, AtomSet) = default;
    friend constexpr auto operator<=>(AtomSet, AtomSet) = default;

    static AtomSet of(const Alphabet& alphabet, const std::vector<std::string>& names);
    std::vector<std::string> names(const Alphabet& alphabet) const;

private:
    std::uint64_t bits_ = 0;
};

struct HTState {
    AtomSet here;
    AtomSet there;
    friend bool operator==(const HTState&, const HTState&) = default;
};

/// A finite timed HT-trace: states (H_i, T_i) with H_i <= T_i and a
/// non-decreasing time map with time(0) == 0. Length is always at least one.
class TimedHTTrace {
public:
    std::size_t length() const { return states_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<HTState>& states() const { return states_; }
    const std::vector<Time>& times() const { return times_; }
    AtomSet here(std::size_t i) const { return states_[i].here; }
    AtomSet there(std::size_t i) const { return states_[i].there; }
    Time time(std::size_t i) const { return times_[i]; }

    bool is_total() const;
    bool is_strict() const;

    friend bool operator==(const TimedHTTrace&, const TimedHTTrace&) = default;

private:
    friend TimedHTTrace make_trace(Alphabet, std::vector<HTState>, std::vector<Time>);
    friend class TraceBuilder;
    TimedHTTrace() = default;

    Alphabet alphabet_;
    std::vector<HTState> states_;
    std::vector<Time> times_;
};

/// Validates and builds a trace. Throws ValidationError when lengths differ
/// or are zero, when some H_i is not a subset of T_i, when an atom lies
/// outside the alphabet, when time(0) != 0 or when times decrease.
TimedHTTrace make_trace(Alphabet alphabet, std::vector<HTState> states, std::vector<Time> times);

struct NamedState {
    std::vector<std::string> here;
    std::vector<std::string> there;
};
TimedHTTrace make_trace(Alphabet alphabet, const std::vector<NamedState>& states,
                        std::vector<Time> times);
/// Total trace from the there-sets only.
TimedHTTrace make_total_trace(Alphabet alphabet, const std::vector<std::vector<std::string>>& states,
                              std::vector<Time> times);

/// Replaces every H_i by T_i.
TimedHTTrace total_part(const TimedHTTrace& m);

/// Reverses the states; time'(i) = time(L-1) - time(L-1-i).
TimedHTTrace reverse_trace(const TimedHTTrace& m);

/// Same timing and there-sets with the given here-sets (validated).
TimedHTTrace with_here(const TimedHTTrace& m, const std::vector<AtomSet>& here);

struct EnumerationBounds {
    Alphabet alphabet;
    std::size_t min_len = 1;
    std::size_t max_len = 1;
    Time max_time = 0;
    bool strict_only = true;

    /// Throws ValidationError for max_len == 0 or min_len outside [1, max_len].
    void validate() const;
};

/// Return false from a visitor to stop the enumeration early.
using TraceVisitor = std::function<bool(const TimedHTTrace&)>;

/// Every time map of the given length with final time <= max_time, in
/// lexicographic order.
std::vector<std::vector<Time>> enumerate_time_maps(std::size_t length, Time max_time, bool strict);

/// Visits every total trace within bounds: length ascending, then time maps,
/// then state sets (state 0 most significant, each set by its bit pattern).
/// Returns false iff the visitor stopped early.
bool for_each_total_trace(const EnumerationBounds& bounds, const TraceVisitor& visit);
std::vector<TimedHTTrace> enumerate_total_traces(const EnumerationBounds& bounds);

/// Visits every (H, T) with H_i <= T_i and H != T for a total trace,
/// lexicographically by H (state 0 most significant). Throws
/// PreconditionError when m is not total.
bool for_each_refinement(const TimedHTTrace& m, const TraceVisitor& visit);
std::vector<TimedHTTrace> refinements(const TimedHTTrace& m);

}  // namespace mel
