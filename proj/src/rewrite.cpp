#include "mel/rewrite.hpp"

#include <charconv>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mel/error.hpp"

namespace mel {

namespace {

void require_strict(const RewriteOptions& o, const char* pass) {
    if (!o.strict)
        throw PreconditionError(std::string(pass) + " is only sound on strict traces");
}

// Constructors that fold Boolean constants. Each fold is an MHT equivalence.
Formula f_and(const Formula& a, const Formula& b) {
    if (a.op() == Op::Bottom || b.op() == Op::Bottom) return bottom();
    if (is_top(a)) return b;
    if (is_top(b)) return a;
    return conj(a, b);
}

Formula f_or(const Formula& a, const Formula& b) {
    if (is_top(a) || is_top(b)) return top();
    if (a.op() == Op::Bottom) return b;
    if (b.op() == Op::Bottom) return a;
    return disj(a, b);
}

Formula f_implies(const Formula& a, const Formula& b) {
    if (a.op() == Op::Bottom || is_top(b)) return top();
    if (is_top(a)) return b;
    return implies(a, b);
}

Formula f_step(Op op, Interval i, const Formula& a) {
    if (a.op() == Op::Bottom || i.empty()) return bottom();
    return Formula::make_unary(op, i, a);
}

Formula f_weak_step(Op op, Interval i, const Formula& a) {
    if (is_top(a)) return top();
    return f_or(f_step(op, i, a), f_implies(f_step(op, i, top()), bottom()));
}

Formula fold_left(const std::vector<Formula>& items, bool conjunctive) {
    Formula acc = conjunctive ? top() : bottom();
    for (const auto& f : items) acc = conjunctive ? f_and(acc, f) : f_or(acc, f);
    return acc;
}

Op swap_op(Op op) {
    switch (op) {
        case Op::Next: return Op::Prev;
        case Op::Prev: return Op::Next;
        case Op::Until: return Op::Since;
        case Op::Since: return Op::Until;
        case Op::Release: return Op::Trigger;
        case Op::Trigger: return Op::Release;
        default: return op;
    }
}

Op dual_op(Op op) {
    switch (op) {
        case Op::And: return Op::Or;
        case Op::Or: return Op::And;
        case Op::Until: return Op::Release;
        case Op::Release: return Op::Until;
        case Op::Since: return Op::Trigger;
        case Op::Trigger: return Op::Since;
        default: return op;
    }
}

bool is_existential(Op op) { return op == Op::Until || op == Op::Since; }

Formula rebuild(const Formula& f, const Formula& lhs, const Formula& rhs) {
    if (f.op() == Op::And) return f_and(lhs, rhs);
    if (f.op() == Op::Or) return f_or(lhs, rhs);
    if (f.op() == Op::Implies) return f_implies(lhs, rhs);
    return Formula::make_binary(f.op(), lhs, rhs, f.interval());
}

// Bottom-up map with sharing: each distinct node is transformed once.
template <class Fn>
class Mapper {
public:
    explicit Mapper(Fn fn) : fn_(std::move(fn)) {}

    Formula operator()(const Formula& f) {
        if (auto it = done_.find(f.id()); it != done_.end()) return it->second;
        Formula out;
        switch (f.op()) {
            case Op::Atom:
            case Op::Bottom: out = fn_(f, f, f); break;
            case Op::Next:
            case Op::Prev: {
                Formula a = (*this)(f.operand());
                out = fn_(f, a, a);
                break;
            }
            default: {
                Formula l = (*this)(f.lhs());
                Formula r = (*this)(f.rhs());
                out = fn_(f, l, r);
            }
        }
        keep_.push_back(f);
        done_.emplace(f.id(), out);
        return out;
    }

private:
    Fn fn_;
    std::unordered_map<const void*, Formula> done_;
    std::vector<Formula> keep_;
};

template <class Fn>
Formula map_bottom_up(const Formula& f, Fn fn) {
    return Mapper<Fn>(std::move(fn))(f);
}

}  // namespace

Formula bool_dual(const Formula& f) {
    if (is_top(f)) return bottom();
    switch (f.op()) {
        case Op::Bottom: return top();
        case Op::Atom: return f;
        case Op::Implies:
            throw PreconditionError("duality is only defined for formulas without implication");
        case Op::Next: return weak_next(f.interval(), bool_dual(f.operand()));
        case Op::Prev: return weak_prev(f.interval(), bool_dual(f.operand()));
        case Op::Or:
            if (auto a = match_weak_next(f)) return next(f.lhs().interval(), bool_dual(*a));
            if (auto a = match_weak_prev(f)) return prev(f.lhs().interval(), bool_dual(*a));
            [[fallthrough]];
        default:
            return Formula::make_binary(dual_op(f.op()), bool_dual(f.lhs()), bool_dual(f.rhs()),
                                        f.interval());
    }
}

Formula time_swap(const Formula& f) {
    return map_bottom_up(f, [](const Formula& n, const Formula& l, const Formula& r) {
        switch (n.op()) {
            case Op::Atom:
            case Op::Bottom: return n;
            case Op::Next:
            case Op::Prev: return Formula::make_unary(swap_op(n.op()), n.interval(), l);
            default: return Formula::make_binary(swap_op(n.op()), l, r, n.interval());
        }
    });
}

Formula push_negation(const Formula& f) {
    if (auto inner = match_neg(f); inner && is_binary_temporal(inner->op())) {
        return Formula::make_binary(dual_op(inner->op()), push_negation(neg(inner->lhs())),
                                    push_negation(neg(inner->rhs())), inner->interval());
    }
    switch (f.op()) {
        case Op::Atom:
        case Op::Bottom: return f;
        case Op::Next:
        case Op::Prev: return Formula::make_unary(f.op(), f.interval(), push_negation(f.operand()));
        default: {
            Formula g = Formula::make_binary(f.op(), push_negation(f.lhs()), push_negation(f.rhs()),
                                             f.interval());
            // Rewriting the antecedent may expose a new negated temporal node.
            if (auto inner = match_neg(g); inner && is_binary_temporal(inner->op()))
                return push_negation(g);
            return g;
        }
    }
}

Formula range_split(const Formula& f, Time i, RewriteOptions options) {
    require_strict(options, "range splitting");
    if (!is_binary_temporal(f.op()))
        throw PreconditionError("range splitting needs an until, release, since or trigger node");
    const Interval iv = f.interval();
    if (!iv.contains(i))
        throw PreconditionError("split point " + std::to_string(i) + " lies outside " + iv.str());
    Formula low = Formula::make_binary(f.op(), f.lhs(), f.rhs(), Interval(iv.lower(), i));
    Formula high = Formula::make_binary(f.op(), f.lhs(), f.rhs(), Interval(i, iv.upper()));
    return is_existential(f.op()) ? disj(low, high) : conj(low, high);
}

namespace {

// Unfolding of one binary temporal operator over already unfolded operands.
// Results are memoized per interval so the output is a DAG whose size is
// polynomial in the interval bounds.
class Unfolder {
public:
    Unfolder(Op op, Formula psi, Formula phi)
        : psi_(std::move(psi)),
          phi_(std::move(phi)),
          step_(is_future(op) ? Op::Next : Op::Prev),
          exists_(is_existential(op)) {}

    // Half-open [m..n).
    Formula operator()(Time m, Time n) {
        if (auto it = memo_.find({m, n}); it != memo_.end()) return it->second;
        Formula out = compute(m, n);
        memo_.emplace(std::make_pair(m, n), out);
        return out;
    }

private:
    Formula step(Time i, const Formula& a) const {
        return exists_ ? f_step(step_, Interval::point(i), a)
                       : f_weak_step(step_, Interval::point(i), a);
    }
    Formula join(const std::vector<Formula>& xs) const { return fold_left(xs, !exists_); }
    Formula meet(const Formula& a, const Formula& b) const {
        return exists_ ? f_and(a, b) : f_or(a, b);
    }
    Formula widen(const Formula& a, const Formula& b) const {
        return exists_ ? f_or(a, b) : f_and(a, b);
    }

    Formula compute(Time m, Time n) {
        if (m >= n) return exists_ ? bottom() : top();
        if (m == 0 && n == 1) return phi_;
        std::vector<Formula> parts;
        if (n == m + 1) {
            // Single point [m..m]: the next state comes i units later.
            for (Time i = 1; i <= m; ++i) parts.push_back(step(i, (*this)(m - i, m - i + 1)));
            return meet(psi_, join(parts));
        }
        if (m == 0) {
            // Closed [0..n-1].
            for (Time i = 1; i <= n - 1; ++i) parts.push_back(step(i, (*this)(0, n - i)));
            return widen(phi_, meet(psi_, join(parts)));
        }
        for (Time i = 1; i <= m; ++i) parts.push_back(step(i, (*this)(m - i, n - i)));
        for (Time i = m + 1; i <= n - 1; ++i) parts.push_back(step(i, (*this)(0, n - i)));
        return meet(psi_, join(parts));
    }

    Formula psi_;
    Formula phi_;
    Op step_;
    bool exists_;
    std::map<std::pair<Time, Time>, Formula> memo_;
};

}  // namespace

Formula unfold_next(const Formula& f, RewriteOptions options) {
    require_strict(options, "next-unfolding");
    return map_bottom_up(f, [](const Formula& n, const Formula& l, const Formula& r) -> Formula {
        switch (n.op()) {
            case Op::Atom:
            case Op::Bottom: return n;
            case Op::Next:
            case Op::Prev:
                if (n.interval().empty() || n.interval() == Interval::point(0)) return bottom();
                return f_step(n.op(), n.interval(), l);
            case Op::And:
            case Op::Or:
            case Op::Implies: return rebuild(n, l, r);
            default: break;
        }
        const Interval iv = n.interval();
        if (iv.is_unbounded())
            throw PreconditionError("cannot unfold " + iv.str() +
                                    ": the interval has no upper bound");
        return Unfolder(n.op(), l, r)(iv.lower(), iv.upper());
    });
}

namespace {

// Strict-trace definition of a one-step operator over a single gap g >= 1:
// no state strictly between, and a state exactly g later satisfying a.
Formula one_step_point(Op op, Time g, const Formula& a) {
    const bool fut = op == Op::Next;
    Formula reach = fut ? eventually(Interval::point(g), a) : once(Interval::point(g), a);
    if (g <= 1) return reach;
    Formula gap = fut ? always(Interval(1, g), bottom()) : historically(Interval(1, g), bottom());
    return conj(gap, reach);
}

}  // namespace

Formula one_step_eliminate(const Formula& f, RewriteOptions options) {
    require_strict(options, "one-step elimination");
    return map_bottom_up(f, [](const Formula& n, const Formula& l, const Formula& r) -> Formula {
        switch (n.op()) {
            case Op::Atom:
            case Op::Bottom: return n;
            case Op::Next:
            case Op::Prev: break;
            default: return Formula::make_binary(n.op(), l, r, n.interval());
        }
        const Interval iv = n.interval();
        if (iv.empty()) return bottom();
        if (iv.is_unbounded()) {
            if (iv.lower() <= 1) return Formula::make_unary(n.op(), iv, l);
            const Formula gap = n.op() == Op::Next ? always(Interval(1, iv.lower()), bottom())
                                                   : historically(Interval(1, iv.lower()), bottom());
            return conj(gap, Formula::make_unary(n.op(), Interval::unbounded(), l));
        }
        std::vector<Formula> parts;
        for (Time g = std::max<Time>(iv.lower(), 1); g < iv.upper(); ++g)
            parts.push_back(one_step_point(n.op(), g, l));
        if (parts.empty()) return bottom();
        Formula acc = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
        return acc;
    });
}

namespace {

bool is_unary_shape(const Formula& f) {
    switch (f.op()) {
        case Op::Until:
        case Op::Since: return is_top(f.lhs());
        case Op::Release:
        case Op::Trigger: return f.lhs().op() == Op::Bottom;
        default: return false;
    }
}

}  // namespace

Formula to_unary_nf(const Formula& f, RewriteOptions options) {
    require_strict(options, "unary normal form");
    return map_bottom_up(f, [](const Formula& n, const Formula& phi, const Formula& psi) -> Formula {
        switch (n.op()) {
            case Op::Atom:
            case Op::Bottom: return n;
            case Op::Next:
            case Op::Prev: return Formula::make_unary(n.op(), n.interval(), phi);
            case Op::And:
            case Op::Or:
            case Op::Implies: return Formula::make_binary(n.op(), phi, psi);
            default: break;
        }
        const Interval iv = n.interval();
        const Interval full = Interval::unbounded();
        const Formula kept = Formula::make_binary(n.op(), phi, psi, iv);
        if (iv.is_full() || is_unary_shape(kept)) return kept;
        const Time m = iv.lower();
        const Interval head(0, m);
        switch (n.op()) {
            case Op::Until:
                if (m == 0) return conj(eventually(iv, psi), until(full, phi, psi));
                return conj(eventually(iv, psi),
                            always(head, until(full, phi, conj(phi, next(full, psi)))));
            case Op::Release:
                if (m == 0) return disj(always(iv, psi), release(full, phi, psi));
                return disj(always(iv, psi),
                            eventually(head, release(full, phi, disj(phi, weak_next(full, psi)))));
            case Op::Since:
                if (m == 0) return conj(once(iv, psi), since(full, phi, psi));
                return conj(once(iv, psi),
                            historically(head, since(full, phi, conj(phi, prev(full, psi)))));
            default:
                if (m == 0) return disj(historically(iv, psi), trigger(full, phi, psi));
                return disj(historically(iv, psi),
                            once(head, trigger(full, phi, disj(phi, weak_prev(full, psi)))));
        }
    });
}

bool in_unary_nf(const Formula& f) {
    switch (f.op()) {
        case Op::Atom:
        case Op::Bottom: return true;
        case Op::Next:
        case Op::Prev: return in_unary_nf(f.operand());
        default:
            if (is_binary_temporal(f.op()) && !f.interval().is_full() && !is_unary_shape(f))
                return false;
            return in_unary_nf(f.lhs()) && in_unary_nf(f.rhs());
    }
}

bool has_binary_temporal(const Formula& f) {
    switch (f.op()) {
        case Op::Atom:
        case Op::Bottom: return false;
        case Op::Next:
        case Op::Prev: return has_binary_temporal(f.operand());
        default:
            return is_binary_temporal(f.op()) || has_binary_temporal(f.lhs()) ||
                   has_binary_temporal(f.rhs());
    }
}

Formula apply_pass(std::string_view name, const Formula& f, RewriteOptions options) {
    if (name == "unf") return unfold_next(f, options);
    if (name == "unary") return to_unary_nf(f, options);
    if (name == "demorgan") return push_negation(f);
    if (name == "dual") return bool_dual(f);
    if (name == "swap") return time_swap(f);
    if (name == "onestep") return one_step_eliminate(f, options);
    if (name.starts_with("split:")) {
        const std::string_view digits = name.substr(6);
        Time i = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
            throw PreconditionError("split needs a natural number, as in split:5");
        return range_split(f, i, options);
    }
    throw PreconditionError("unknown pass '" + std::string(name) +
                            "'; expected unf, unary, demorgan, dual, swap, onestep or split:<i>");
}

}  // namespace mel
