// Metric equilibrium models and bounded strong-equivalence checking.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mel/formula.hpp"
#include "mel/trace.hpp"

namespace mel {

struct EquilibriumVerdict {
    bool is_equilibrium = false;
    /// A model of the theory with H < T; present iff !is_equilibrium.
    std::optional<TimedHTTrace> witness;
};

/// Checks that no refinement of a total model satisfies the theory. The
/// witness is the first satisfying refinement in refinement order. Throws
/// PreconditionError when m is not total or not a model of the theory.
EquilibriumVerdict is_equilibrium(const TimedHTTrace& m, const Theory& theory);

struct EquilibriumOptions {
    /// Append the strictness axiom when the bounds only admit strict traces.
    bool add_strictness_axiom = true;
};

/// Equilibrium models within bounds, in enumeration order.
std::vector<TimedHTTrace> enumerate_equilibrium(const Theory& theory, const EnumerationBounds& bounds,
                                                EquilibriumOptions options = {});
/// Streaming variant; return false from the visitor to stop.
bool for_each_equilibrium(const Theory& theory, const EnumerationBounds& bounds,
                          const TraceVisitor& visit, EquilibriumOptions options = {});

struct Counterexample {
    TimedHTTrace trace;
    /// Index into the theory that accepts or rejects trace differently.
    std::size_t formula_index = 0;
    /// 1 when the formula belongs to the left theory, 2 for the right one.
    int side = 1;
};

struct EquivVerdict {
    bool equivalent = true;
    std::optional<Counterexample> counterexample;
};

/// Compares the MHT models of both theories over every trace within bounds,
/// total or not. A negative verdict is conclusive; a positive one only
/// covers the bounded space. The reported formula is the first formula of
/// the theory that rejects the counterexample.
EquivVerdict bounded_equiv(const Theory& left, const Theory& right, const EnumerationBounds& bounds);

}  // namespace mel
