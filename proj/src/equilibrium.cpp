#include "mel/equilibrium.hpp"

#include "mel/error.hpp"
#include "mel/semantics.hpp"

namespace mel {

EquilibriumVerdict is_equilibrium(const TimedHTTrace& m, const Theory& theory) {
    if (!m.is_total()) throw PreconditionError("equilibrium check needs a total trace");
    if (!is_model(m, theory)) throw PreconditionError("trace is not a model of the theory");
    EquilibriumVerdict v{true, std::nullopt};
    for_each_refinement(m, [&](const TimedHTTrace& r) {
        if (!is_model(r, theory)) return true;
        v = {false, r};
        return false;
    });
    return v;
}

bool for_each_equilibrium(const Theory& theory, const EnumerationBounds& bounds,
                          const TraceVisitor& visit, EquilibriumOptions options) {
    Theory gamma = theory;
    if (bounds.strict_only && options.add_strictness_axiom)
        gamma.formulas.push_back(strictness_axiom());
    return for_each_total_trace(bounds, [&](const TimedHTTrace& m) {
        if (!is_model(m, gamma)) return true;
        if (!is_equilibrium(m, gamma).is_equilibrium) return true;
        return visit(m);
    });
}

std::vector<TimedHTTrace> enumerate_equilibrium(const Theory& theory, const EnumerationBounds& bounds,
                                                EquilibriumOptions options) {
    std::vector<TimedHTTrace> out;
    for_each_equilibrium(
        theory, bounds,
        [&](const TimedHTTrace& m) {
            out.push_back(m);
            return true;
        },
        options);
    return out;
}

namespace {

std::optional<std::size_t> first_rejected(const TimedHTTrace& m, const Theory& t) {
    Evaluator ev(m);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!ev.sat(t.formulas[i], 0)) return i;
    return std::nullopt;
}

}  // namespace

EquivVerdict bounded_equiv(const Theory& left, const Theory& right, const EnumerationBounds& bounds) {
    EquivVerdict verdict;
    auto compare = [&](const TimedHTTrace& m) {
        const auto l = first_rejected(m, left);
        const auto r = first_rejected(m, right);
        if (l.has_value() == r.has_value()) return true;
        verdict.equivalent = false;
        verdict.counterexample = l ? Counterexample{m, *l, 1} : Counterexample{m, *r, 2};
        return false;
    };
    for_each_total_trace(bounds, [&](const TimedHTTrace& m) {
        if (!compare(m)) return false;
        return for_each_refinement(m, compare);
    });
    return verdict;
}

}  // namespace mel
