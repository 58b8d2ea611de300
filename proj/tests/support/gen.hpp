// Seeded random generators for formulas and traces.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mel/formula.hpp"
#include "mel/trace.hpp"

namespace mel::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
    std::uint64_t bits() { return eng_(); }
    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(xs.size()) - 1))];
    }

private:
    std::mt19937_64 eng_;
};

struct FormulaSpec {
    std::vector<std::string> atoms{"p", "q", "r"};
    int max_depth = 4;
    bool implication = true;
    bool future = true;
    bool past = true;
    /// Largest finite interval bound.
    Time max_bound = 6;
    /// Chance that an interval has no upper bound.
    double omega = 0.2;
    bool allow_empty = false;
    /// Every temporal interval is [0..w).
    bool untimed = false;
    /// Binary temporal operators only get finite intervals.
    bool finite_binary = false;
    /// Mix in sugar such as top, weak next and the derived unary operators.
    bool sugar = true;
};

Interval random_interval(Rng& rng, const FormulaSpec& spec, bool finite = false);
Formula random_formula(Rng& rng, const FormulaSpec& spec);
Formula random_formula(Rng& rng, const FormulaSpec& spec, int depth);

struct TraceSpec {
    std::vector<std::string> atoms{"p", "q", "r"};
    std::size_t max_len = 4;
    Time max_time = 8;
    bool strict = true;
    /// Chance that the trace is total.
    double total = 0.3;
};

TimedHTTrace random_trace(Rng& rng, const TraceSpec& spec);

/// Same states, new random time map of the same length and strictness.
TimedHTTrace retime(Rng& rng, const TimedHTTrace& m, Time max_time, bool strict);

}  // namespace mel::testing
