// First-order metric sentences: monadic predicates over time points plus
// difference atoms `t1 <={d} t2` meaning t1 - t2 <= d, their here-and-there
// semantics, and the translation from metric formulas.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mel/formula.hpp"
#include "mel/trace.hpp"

namespace mel::fom {

/// A variable or a ground time point. The constant 0 is the point 0.
struct Term {
    enum class Kind : unsigned char { Var, Point };
    Kind kind = Kind::Point;
    std::string var;
    Time point = 0;

    static Term variable(std::string name) { return {Kind::Var, std::move(name), 0}; }
    static Term at(Time t) { return {Kind::Point, {}, t}; }
    bool is_var() const { return kind == Kind::Var; }

    friend bool operator==(const Term&, const Term&) = default;
    std::string str() const { return is_var() ? var : std::to_string(point); }
};

/// Integer bound of a difference atom, or omega.
struct Bound {
    bool omega = false;
    std::int64_t value = 0;

    static Bound of(std::int64_t v) { return {false, v}; }
    static Bound infinite() { return {true, 0}; }
    friend bool operator==(const Bound&, const Bound&) = default;
    std::string str() const { return omega ? "w" : std::to_string(value); }
};

enum class Kind : unsigned char { Top, Bottom, Pred, Diff, And, Or, Implies, Forall, Exists };

class Sentence {
public:
    /// Default-constructed sentences are bottom.
    Sentence();

    Kind kind() const { return node_->kind; }
    /// Predicate name, or the bound variable of a quantifier.
    const std::string& name() const { return node_->name; }
    /// Argument of a predicate; left term of a difference atom.
    const Term& term() const { return node_->a; }
    const Term& right_term() const { return node_->b; }
    const Bound& bound() const { return node_->bound; }
    /// Conjuncts, disjuncts, {antecedent, consequent} or {body}.
    const std::vector<Sentence>& children() const { return node_->kids; }
    const Sentence& body() const { return node_->kids.front(); }

    friend bool operator==(const Sentence& a, const Sentence& b);
    friend bool operator!=(const Sentence& a, const Sentence& b) { return !(a == b); }

    static Sentence top();
    static Sentence bottom();
    static Sentence pred(std::string name, Term t);
    static Sentence diff(Term a, Term b, Bound d);
    /// N-ary; an empty list gives top (for and) or bottom (for or).
    static Sentence conj(std::vector<Sentence> xs);
    static Sentence disj(std::vector<Sentence> xs);
    static Sentence implies(Sentence a, Sentence b);
    static Sentence neg(Sentence a) { return implies(std::move(a), bottom()); }
    static Sentence forall(std::string var, Sentence body);
    static Sentence exists(std::string var, Sentence body);

private:
    struct Node {
        Kind kind = Kind::Bottom;
        std::string name;
        Term a;
        Term b;
        Bound bound;
        std::vector<Sentence> kids;
    };
    explicit Sentence(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Sentence make(Node n);

    std::shared_ptr<const Node> node_;
};

/// Variables occurring free, sorted.
std::vector<std::string> free_variables(const Sentence& s);

/// Translation of a metric formula at term x. Quantified variables are named
/// y<d> and z<d> where d is the temporal nesting depth. Throws
/// PreconditionError on an empty interval or when x is a variable whose name
/// has that shape.
Sentence translate(const Formula& f, const Term& x);

/// Equivalence-preserving cleanup: truth constants, omega bounds, negated
/// difference atoms, static negations, flattening, duplicate and subsumed
/// difference atoms, currying, vacuous quantifiers, then renaming of bound
/// variables to x, y, z, u, v, w, x1, ... by quantifier depth.
Sentence simplify(const Sentence& s);

/// `!x (...)`, `?x (...)`, `t1 <={d} t2`, `p(t)`, `~`, `&`, `|`, `->`,
/// `#true`, `#false`.
std::string print(const Sentence& s);
/// Inverse of print. Throws SyntaxError.
Sentence parse(std::string_view text);

struct GroundAtom {
    std::string pred;
    Time point = 0;
    friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
    std::string str() const { return pred + "(" + std::to_string(point) + ")"; }
};

using AtomSetG = std::set<GroundAtom>;

/// A domain containing 0 and two nested sets of ground atoms over it.
struct Interpretation {
    std::set<Time> domain;
    AtomSetG here;
    AtomSetG there;

    /// Throws ValidationError when 0 is missing, here is not a subset of
    /// there, or an atom uses a point outside the domain.
    void validate() const;
};

/// Satisfaction at the here world. Free variables are not allowed. Throws
/// ValidationError when a ground term lies outside the domain.
bool sat(const Interpretation& m, const Sentence& s);

/// Domain of time points, atoms p(time(i)). Throws PreconditionError for a
/// non-strict trace.
Interpretation induced_interpretation(const TimedHTTrace& m);

struct EquilibriumResult {
    /// Whether <D,T,T> satisfies the sentence at all.
    bool total_model = false;
    bool equilibrium = false;
    /// First strictly smaller here-set that still satisfies the sentence,
    /// in increasing bitmask order over the sorted there-atoms.
    std::optional<AtomSetG> witness;
};

/// Throws PreconditionError when |there| exceeds max_atoms.
EquilibriumResult check_equilibrium(const std::set<Time>& domain, const AtomSetG& there,
                                    const Sentence& s, std::size_t max_atoms = 20);

std::string interpretation_to_json(const Interpretation& m);
/// {"domain":[0,5],"here":["red(0)"],"there":["red(0)","push(5)"]}; "here"
/// defaults to "there". Throws ValidationError.
Interpretation interpretation_from_json(std::string_view text);

}  // namespace mel::fom
