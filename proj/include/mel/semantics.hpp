// Satisfaction of metric formulas on timed HT-traces.
#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "mel/formula.hpp"
#include "mel/trace.hpp"

namespace mel {

enum class World : unsigned char { Here, There };

struct EvalOptions {
    /// Cache results per (node, world, step). Never changes a result.
    bool memoize = false;
};

/// Evaluates formulas against one trace. Atoms outside the trace alphabet
/// are false. Implication is evaluated by the two-world clause: at the here
/// world both the trace and its total part must validate it.
class Evaluator {
public:
    explicit Evaluator(const TimedHTTrace& trace, EvalOptions options = {});

    /// Throws std::out_of_range when step >= trace length.
    bool sat(const Formula& f, std::size_t step, World world = World::Here);

    std::size_t cache_size() const { return cache_.size(); }

private:
    bool eval(const Formula& f, std::size_t k, World w);
    bool eval_node(const Formula& f, std::size_t k, World w);
    bool atom(const Formula& f, std::size_t k, World w) const;

    struct Key {
        const void* node;
        std::size_t step;
        World world;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    const TimedHTTrace& trace_;
    EvalOptions options_;
    std::unordered_map<Key, bool, KeyHash> cache_;
    // Roots evaluated with memoization stay alive so node addresses used as
    // cache keys are never reused.
    std::vector<Formula> pinned_;
};

bool mht_sat(const TimedHTTrace& m, std::size_t step, const Formula& f, EvalOptions options = {});

/// Satisfaction of every formula at step 0.
bool is_model(const TimedHTTrace& m, const Theory& theory, EvalOptions options = {});

/// G (p | ~p) for each atom, in alphabet order.
Theory em_theory(const Alphabet& alphabet);

/// G ~X[0..0] #true: forbids two consecutive states with the same time.
Formula strictness_axiom();

}  // namespace mel
