// Metric formulas: an immutable, structurally shared abstract syntax tree.
//
// The kernel has eleven constructors. Every derived operator (top, negation,
// equivalence, always/eventually in both directions, initial, final, weak
// next/previous) is expanded into the kernel when it is built, so evaluators
// and rewriters only ever see kernel nodes. Sugar is recovered by pattern
// matching when printing.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mel/interval.hpp"

namespace mel {

enum class Op : unsigned char {
    Atom,
    Bottom,
    And,
    Or,
    Implies,
    Prev,
    Since,
    Trigger,
    Next,
    Until,
    Release,
};

bool is_binary_temporal(Op op);
bool is_unary_temporal(Op op);
bool is_future(Op op);

class Formula {
public:
    /// A default-constructed formula is bottom.
    Formula();

    Op op() const { return node_->op; }
    const std::string& name() const { return node_->name; }
    const Interval& interval() const { return node_->interval; }
    /// Left operand of binary connectives.
    const Formula& lhs() const { return *node_->lhs; }
    /// Right operand of binary connectives; the operand of Prev/Next.
    const Formula& rhs() const { return *node_->rhs; }
    const Formula& operand() const { return *node_->rhs; }

    std::size_t hash() const { return node_->hash; }
    std::size_t size() const { return node_->size; }
    std::size_t depth() const { return node_->depth; }
    /// Identity of the shared node; stable while any copy is alive.
    const void* id() const { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    // Kernel constructors.
    static Formula atom(std::string name);
    static Formula bottom();
    static Formula make_binary(Op op, Formula lhs, Formula rhs,
                               Interval interval = Interval::unbounded());
    static Formula make_unary(Op op, Interval interval, Formula operand);

private:
    struct Node {
        Op op = Op::Bottom;
        std::string name;
        Interval interval;
        std::shared_ptr<const Formula> lhs;
        std::shared_ptr<const Formula> rhs;
        std::size_t hash = 0;
        std::size_t size = 1;
        std::size_t depth = 1;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Kernel.
Formula atom(std::string name);
Formula bottom();
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula prev(Interval i, Formula a);
Formula next(Interval i, Formula a);
Formula since(Interval i, Formula a, Formula b);
Formula trigger(Interval i, Formula a, Formula b);
Formula until(Interval i, Formula a, Formula b);
Formula release(Interval i, Formula a, Formula b);

// Derived operators, expanded on construction.
Formula top();
Formula neg(Formula a);
Formula iff(Formula a, Formula b);
Formula always(Interval i, Formula a);        // bottom R_I a
Formula eventually(Interval i, Formula a);    // top U_I a
Formula historically(Interval i, Formula a);  // bottom T_I a
Formula once(Interval i, Formula a);          // top S_I a
Formula initial();                            // ~Y top
Formula final_state();                        // ~X top
Formula weak_prev(Interval i, Formula a);     // Y_I a | ~Y_I top
Formula weak_next(Interval i, Formula a);     // X_I a | ~X_I top

enum class Derived {
    Top,
    Not,
    Iff,
    Historically,
    Once,
    Always,
    Eventually,
    Initial,
    Final,
    WeakPrev,
    WeakNext,
};

/// Expands a derived operator into kernel constructors. Throws
/// PreconditionError when the argument count does not match the operator.
Formula desugar(Derived op, std::span<const Formula> args,
                Interval interval = Interval::unbounded());

// Pattern recognisers for printing and duality.
bool is_top(const Formula& f);
std::optional<Formula> match_neg(const Formula& f);
/// Matches X_I a | ~X_I top (or the Y version) and returns a.
std::optional<Formula> match_weak_next(const Formula& f);
std::optional<Formula> match_weak_prev(const Formula& f);

/// True iff every node is one of the eleven kernel constructors; always
/// holds for values of this type, exposed for tests.
bool is_kernel(const Formula& f);
bool has_implication(const Formula& f);
/// Sorted, duplicate-free atom names occurring in f.
std::vector<std::string> atoms_of(const Formula& f);

struct Theory {
    std::string name;
    std::vector<Formula> formulas;

    std::size_t size() const { return formulas.size(); }
    bool empty() const { return formulas.empty(); }
};

std::vector<std::string> atoms_of(const Theory& t);

}  // namespace mel
