// Equivalence-preserving transformations of metric formulas.
//
// Passes marked "strict" are only sound on traces whose time map is
// strictly increasing. They take a RewriteOptions and throw
// PreconditionError when options.strict is false.
#pragma once

#include <string>
#include <string_view>

#include "mel/formula.hpp"

namespace mel {

struct RewriteOptions {
    /// Caller promises that only strict traces matter.
    bool strict = true;
};

/// Swaps top/bottom, and/or, until/release, since/trigger, next/weak next
/// and previous/weak previous. Throws PreconditionError on any implication
/// other than the encodings of top, weak next and weak previous.
Formula bool_dual(const Formula& f);

/// Exchanges every future connective with its past counterpart, keeping
/// intervals.
Formula time_swap(const Formula& f);

/// Rewrites ~(a op_I b) into ~a op'_I ~b for op in U, R, S, T, recursively.
Formula push_negation(const Formula& f);

/// Splits the top-level U/R/S/T node at i. Throws PreconditionError when f
/// is not such a node or i lies outside its interval. Strict.
Formula range_split(const Formula& f, Time i, RewriteOptions options = {});

/// Replaces every finite-interval U/R/S/T by Boolean combinations of
/// point-interval next/previous operators, and one-step operators over
/// [0..0] by constants. Throws PreconditionError on a binary temporal node
/// with an unbounded interval. Strict.
Formula unfold_next(const Formula& f, RewriteOptions options = {});

/// Replaces interval-indexed X/Y by always/eventually (historically/once)
/// combinations. Untimed X and Y, and those with lower bound at most one and
/// no upper bound, are kept. Strict.
Formula one_step_eliminate(const Formula& f, RewriteOptions options = {});

/// Moves every interval of U/R/S/T onto unary operators. Strict.
Formula to_unary_nf(const Formula& f, RewriteOptions options = {});

/// True iff every U/R/S/T node either carries [0..w) or is the encoding of
/// F, G, O or H.
bool in_unary_nf(const Formula& f);

/// True iff some U/R/S/T node occurs in f.
bool has_binary_temporal(const Formula& f);

/// Applies a pass by name: unf, unary, demorgan, dual, swap, onestep or
/// split:<i>. Throws PreconditionError for an unknown name.
Formula apply_pass(std::string_view name, const Formula& f, RewriteOptions options = {});

}  // namespace mel
