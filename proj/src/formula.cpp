#include "mel/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mel/error.hpp"

namespace mel {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t interval_hash(const Interval& i) {
    return mix(std::hash<Time>{}(i.lower()), std::hash<Time>{}(i.upper()));
}

}  // namespace

bool is_binary_temporal(Op op) {
    return op == Op::Since || op == Op::Trigger || op == Op::Until || op == Op::Release;
}

bool is_unary_temporal(Op op) { return op == Op::Prev || op == Op::Next; }

bool is_future(Op op) { return op == Op::Next || op == Op::Until || op == Op::Release; }

Formula::Formula() : Formula(bottom()) {}

Formula Formula::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->op = Op::Atom;
    n->hash = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(Op::Atom));
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::bottom() {
    static const Formula shared = [] {
        auto n = std::make_shared<Node>();
        n->op = Op::Bottom;
        n->hash = 0x51ed270b;
        return Formula(std::move(n));
    }();
    return shared;
}

Formula Formula::make_binary(Op op, Formula lhs, Formula rhs, Interval interval) {
    auto n = std::make_shared<Node>();
    n->op = op;
    if (is_binary_temporal(op)) n->interval = interval;
    std::size_t h = mix(static_cast<std::size_t>(op) * 0x100000001b3ULL, lhs.hash());
    h = mix(h, rhs.hash());
    if (is_binary_temporal(op)) h = mix(h, interval_hash(interval));
    n->hash = h;
    n->size = 1 + lhs.size() + rhs.size();
    n->depth = 1 + std::max(lhs.depth(), rhs.depth());
    n->lhs = std::make_shared<const Formula>(std::move(lhs));
    n->rhs = std::make_shared<const Formula>(std::move(rhs));
    return Formula(std::move(n));
}

Formula Formula::make_unary(Op op, Interval interval, Formula operand) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->interval = interval;
    n->hash = mix(mix(static_cast<std::size_t>(op) * 0x100000001b3ULL, operand.hash()),
                  interval_hash(interval));
    n->size = 1 + operand.size();
    n->depth = 1 + operand.depth();
    n->rhs = std::make_shared<const Formula>(std::move(operand));
    return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.op() != b.op() || a.size() != b.size()) return false;
    switch (a.op()) {
        case Op::Atom:
            return a.name() == b.name();
        case Op::Bottom:
            return true;
        case Op::Prev:
        case Op::Next:
            return a.interval() == b.interval() && a.operand() == b.operand();
        default:
            return a.interval() == b.interval() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

Formula atom(std::string name) { return Formula::atom(std::move(name)); }
Formula bottom() { return Formula::bottom(); }
Formula conj(Formula a, Formula b) { return Formula::make_binary(Op::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return Formula::make_binary(Op::Or, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) {
    return Formula::make_binary(Op::Implies, std::move(a), std::move(b));
}
Formula prev(Interval i, Formula a) { return Formula::make_unary(Op::Prev, i, std::move(a)); }
Formula next(Interval i, Formula a) { return Formula::make_unary(Op::Next, i, std::move(a)); }
Formula since(Interval i, Formula a, Formula b) {
    return Formula::make_binary(Op::Since, std::move(a), std::move(b), i);
}
Formula trigger(Interval i, Formula a, Formula b) {
    return Formula::make_binary(Op::Trigger, std::move(a), std::move(b), i);
}
Formula until(Interval i, Formula a, Formula b) {
    return Formula::make_binary(Op::Until, std::move(a), std::move(b), i);
}
Formula release(Interval i, Formula a, Formula b) {
    return Formula::make_binary(Op::Release, std::move(a), std::move(b), i);
}

Formula top() {
    static const Formula shared = implies(bottom(), bottom());
    return shared;
}
Formula neg(Formula a) { return implies(std::move(a), bottom()); }
Formula iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }
Formula always(Interval i, Formula a) { return release(i, bottom(), std::move(a)); }
Formula eventually(Interval i, Formula a) { return until(i, top(), std::move(a)); }
Formula historically(Interval i, Formula a) { return trigger(i, bottom(), std::move(a)); }
Formula once(Interval i, Formula a) { return since(i, top(), std::move(a)); }
Formula initial() { return neg(prev(Interval::unbounded(), top())); }
Formula final_state() { return neg(next(Interval::unbounded(), top())); }
Formula weak_prev(Interval i, Formula a) {
    return disj(prev(i, std::move(a)), neg(prev(i, top())));
}
Formula weak_next(Interval i, Formula a) {
    return disj(next(i, std::move(a)), neg(next(i, top())));
}

Formula desugar(Derived op, std::span<const Formula> args, Interval interval) {
    auto want = [&](std::size_t n) {
        if (args.size() != n)
            throw PreconditionError("derived operator expects " + std::to_string(n) +
                                    " argument(s), got " + std::to_string(args.size()));
    };
    switch (op) {
        case Derived::Top: want(0); return top();
        case Derived::Not: want(1); return neg(args[0]);
        case Derived::Iff: want(2); return iff(args[0], args[1]);
        case Derived::Historically: want(1); return historically(interval, args[0]);
        case Derived::Once: want(1); return once(interval, args[0]);
        case Derived::Always: want(1); return always(interval, args[0]);
        case Derived::Eventually: want(1); return eventually(interval, args[0]);
        case Derived::Initial: want(0); return initial();
        case Derived::Final: want(0); return final_state();
        case Derived::WeakPrev: want(1); return weak_prev(interval, args[0]);
        case Derived::WeakNext: want(1); return weak_next(interval, args[0]);
    }
    throw PreconditionError("unknown derived operator");
}

bool is_top(const Formula& f) {
    return f.op() == Op::Implies && f.lhs().op() == Op::Bottom && f.rhs().op() == Op::Bottom;
}

std::optional<Formula> match_neg(const Formula& f) {
    if (f.op() == Op::Implies && f.rhs().op() == Op::Bottom) return f.lhs();
    return std::nullopt;
}

namespace {

std::optional<Formula> match_weak(const Formula& f, Op one_step) {
    if (f.op() != Op::Or || f.lhs().op() != one_step) return std::nullopt;
    auto negated = match_neg(f.rhs());
    if (!negated || negated->op() != one_step) return std::nullopt;
    if (negated->interval() != f.lhs().interval() || !is_top(negated->operand()))
        return std::nullopt;
    return f.lhs().operand();
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.op()) {
        case Op::Atom: out.insert(f.name()); return;
        case Op::Bottom: return;
        case Op::Prev:
        case Op::Next: collect_atoms(f.operand(), out); return;
        default:
            collect_atoms(f.lhs(), out);
            collect_atoms(f.rhs(), out);
    }
}

}  // namespace

std::optional<Formula> match_weak_next(const Formula& f) { return match_weak(f, Op::Next); }
std::optional<Formula> match_weak_prev(const Formula& f) { return match_weak(f, Op::Prev); }

bool is_kernel(const Formula& f) {
    switch (f.op()) {
        case Op::Atom:
        case Op::Bottom: return true;
        case Op::Prev:
        case Op::Next: return is_kernel(f.operand());
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Since:
        case Op::Trigger:
        case Op::Until:
        case Op::Release: return is_kernel(f.lhs()) && is_kernel(f.rhs());
    }
    return false;
}

bool has_implication(const Formula& f) {
    switch (f.op()) {
        case Op::Atom:
        case Op::Bottom: return false;
        case Op::Implies: return true;
        case Op::Prev:
        case Op::Next: return has_implication(f.operand());
        default: return has_implication(f.lhs()) || has_implication(f.rhs());
    }
}

std::vector<std::string> atoms_of(const Formula& f) {
    std::set<std::string> names;
    collect_atoms(f, names);
    return {names.begin(), names.end()};
}

std::vector<std::string> atoms_of(const Theory& t) {
    std::set<std::string> names;
    for (const auto& f : t.formulas) collect_atoms(f, names);
    return {names.begin(), names.end()};
}

}  // namespace mel
