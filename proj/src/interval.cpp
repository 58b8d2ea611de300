#include "mel/interval.hpp"

#include "mel/error.hpp"

namespace mel {

namespace {

Time checked_succ(Time t) {
    if (t >= Interval::kOmega - 1) throw SyntaxError("interval bound too large");
    return t + 1;
}

}  // namespace

SyntaxError::SyntaxError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      message_(what),
      line_(line),
      column_(column) {}

std::string Interval::str() const {
    std::string out = "[" + std::to_string(lower_) + "..";
    out += is_unbounded() ? std::string("w") : std::to_string(upper_);
    out += ")";
    return out;
}

Interval normalize_interval(const IntervalSpec& spec) {
    using Shape = IntervalSpec::Shape;
    const bool closed_upper =
        spec.shape == Shape::ClosedClosed || spec.shape == Shape::OpenClosed ||
        spec.shape == Shape::AtMost;
    if (closed_upper && !spec.upper) throw SyntaxError("closed upper bound cannot be w");
    if (spec.lower >= Interval::kOmega) throw SyntaxError("interval bound too large");
    if (spec.upper && *spec.upper >= Interval::kOmega)
        throw SyntaxError("interval bound too large");

    const Time upper = spec.upper.value_or(Interval::kOmega);
    switch (spec.shape) {
        case Shape::ClosedOpen:
            return {spec.lower, upper};
        case Shape::ClosedClosed:
            return {spec.lower, checked_succ(upper)};
        case Shape::OpenOpen:
            return {checked_succ(spec.lower), upper};
        case Shape::OpenClosed:
            return {checked_succ(spec.lower), checked_succ(upper)};
        case Shape::Point:
            return {spec.lower, checked_succ(spec.lower)};
        case Shape::AtMost:
            return {0, checked_succ(upper)};
        case Shape::AtLeast:
            return Interval::from(spec.lower);
    }
    return Interval::unbounded();
}

}  // namespace mel
