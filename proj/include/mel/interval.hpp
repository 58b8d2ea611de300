// Intervals over the natural numbers used to index temporal operators.
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace mel {

using Time = std::uint64_t;

/// Half-open set of naturals {i | lower <= i < upper}; upper may be omega.
class Interval {
public:
    static constexpr Time kOmega = std::numeric_limits<Time>::max();

    constexpr Interval() = default;
    constexpr Interval(Time lower, Time upper) : lower_(lower), upper_(upper) {}

    static constexpr Interval unbounded() { return {0, kOmega}; }
    static constexpr Interval from(Time lower) { return {lower, kOmega}; }
    static constexpr Interval point(Time t) { return {t, t + 1}; }

    constexpr Time lower() const { return lower_; }
    /// Only meaningful when !is_unbounded().
    constexpr Time upper() const { return upper_; }
    constexpr bool is_unbounded() const { return upper_ == kOmega; }
    constexpr bool is_full() const { return lower_ == 0 && is_unbounded(); }
    constexpr bool empty() const { return !is_unbounded() && lower_ >= upper_; }
    constexpr bool is_point() const { return !is_unbounded() && upper_ == lower_ + 1; }

    constexpr bool contains(Time d) const {
        return d >= lower_ && (is_unbounded() || d < upper_);
    }
    /// Set inclusion; every empty interval is a subset of everything.
    constexpr bool subset_of(const Interval& other) const {
        if (empty()) return true;
        if (lower_ < other.lower_) return false;
        if (other.is_unbounded()) return true;
        return !is_unbounded() && upper_ <= other.upper_;
    }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;

    /// Canonical text, e.g. "[2..4)" or "[1..w)".
    std::string str() const;

private:
    Time lower_ = 0;
    Time upper_ = kOmega;
};

/// A bracketed or abbreviated interval as it appears in source text.
struct IntervalSpec {
    enum class Shape {
        ClosedOpen,    // [m..n)
        ClosedClosed,  // [m..n]
        OpenOpen,      // (m..n)
        OpenClosed,    // (m..n]
        Point,         // [m]
        AtMost,        // <=n
        AtLeast,       // >=m
    };
    Shape shape = Shape::ClosedOpen;
    Time lower = 0;
    std::optional<Time> upper;  // nullopt stands for omega
};

/// Maps every surface shape onto the canonical half-open interval.
/// Throws mel::SyntaxError for a closed upper bound at omega or for
/// bounds that overflow.
Interval normalize_interval(const IntervalSpec& spec);

}  // namespace mel
