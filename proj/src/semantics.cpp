#include "mel/semantics.hpp"

#include <functional>
#include <stdexcept>

namespace mel {

std::size_t Evaluator::KeyHash::operator()(const Key& k) const {
    std::size_t h = std::hash<const void*>{}(k.node);
    h ^= (k.step * 2 + static_cast<std::size_t>(k.world)) * 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
    return h;
}

Evaluator::Evaluator(const TimedHTTrace& trace, EvalOptions options)
    : trace_(trace), options_(options) {}

bool Evaluator::sat(const Formula& f, std::size_t step, World world) {
    if (step >= trace_.length())
        throw std::out_of_range("step " + std::to_string(step) + " outside trace of length " +
                                std::to_string(trace_.length()));
    if (options_.memoize) pinned_.push_back(f);
    return eval(f, step, world);
}

bool Evaluator::atom(const Formula& f, std::size_t k, World w) const {
    const auto i = trace_.alphabet().index_of(f.name());
    if (!i) return false;
    return (w == World::Here ? trace_.here(k) : trace_.there(k)).contains(*i);
}

bool Evaluator::eval(const Formula& f, std::size_t k, World w) {
    if (!options_.memoize || f.op() == Op::Atom || f.op() == Op::Bottom)
        return eval_node(f, k, w);
    const Key key{f.id(), k, w};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const bool v = eval_node(f, k, w);
    cache_.emplace(key, v);
    return v;
}

bool Evaluator::eval_node(const Formula& f, std::size_t k, World w) {
    const std::size_t len = trace_.length();
    const auto& tau = trace_.times();
    switch (f.op()) {
        case Op::Bottom:
            return false;
        case Op::Atom:
            return atom(f, k, w);
        case Op::And:
            return eval(f.lhs(), k, w) && eval(f.rhs(), k, w);
        case Op::Or:
            return eval(f.lhs(), k, w) || eval(f.rhs(), k, w);
        case Op::Implies:
            if (w == World::Here && eval(f.lhs(), k, World::Here) && !eval(f.rhs(), k, World::Here))
                return false;
            return !eval(f.lhs(), k, World::There) || eval(f.rhs(), k, World::There);
        case Op::Prev:
            return k > 0 && f.interval().contains(tau[k] - tau[k - 1]) &&
                   eval(f.operand(), k - 1, w);
        case Op::Next:
            return k + 1 < len && f.interval().contains(tau[k + 1] - tau[k]) &&
                   eval(f.operand(), k + 1, w);
        case Op::Until:
            // Some j >= k in range satisfies rhs, with lhs on [k, j).
            for (std::size_t j = k; j < len; ++j) {
                if (f.interval().contains(tau[j] - tau[k]) && eval(f.rhs(), j, w)) return true;
                if (!eval(f.lhs(), j, w)) return false;
            }
            return false;
        case Op::Release:
            // Every j >= k in range satisfies rhs unless lhs held on [k, j).
            for (std::size_t j = k; j < len; ++j) {
                if (f.interval().contains(tau[j] - tau[k]) && !eval(f.rhs(), j, w)) return false;
                if (eval(f.lhs(), j, w)) return true;
            }
            return true;
        case Op::Since:
            // Some j <= k in range satisfies rhs, with lhs on (j, k].
            for (std::size_t j = k + 1; j-- > 0;) {
                if (f.interval().contains(tau[k] - tau[j]) && eval(f.rhs(), j, w)) return true;
                if (!eval(f.lhs(), j, w)) return false;
            }
            return false;
        case Op::Trigger:
            for (std::size_t j = k + 1; j-- > 0;) {
                if (f.interval().contains(tau[k] - tau[j]) && !eval(f.rhs(), j, w)) return false;
                if (eval(f.lhs(), j, w)) return true;
            }
            return true;
    }
    return false;
}

bool mht_sat(const TimedHTTrace& m, std::size_t step, const Formula& f, EvalOptions options) {
    return Evaluator(m, options).sat(f, step);
}

bool is_model(const TimedHTTrace& m, const Theory& theory, EvalOptions options) {
    Evaluator ev(m, options);
    for (const auto& f : theory.formulas)
        if (!ev.sat(f, 0)) return false;
    return true;
}

Theory em_theory(const Alphabet& alphabet) {
    Theory t;
    t.name = "EM";
    for (const auto& p : alphabet.names())
        t.formulas.push_back(always(Interval::unbounded(), disj(atom(p), neg(atom(p)))));
    return t;
}

Formula strictness_axiom() {
    return always(Interval::unbounded(), neg(next(Interval::point(0), top())));
}

}  // namespace mel
