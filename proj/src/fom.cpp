#include "mel/fom.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>

#include <json.hpp>

#include "mel/error.hpp"

namespace mel::fom {

// ---------------------------------------------------------------------------
// Construction

Sentence::Sentence() : Sentence(bottom()) {}

Sentence Sentence::make(Node n) { return Sentence(std::make_shared<const Node>(std::move(n))); }

Sentence Sentence::top() {
    static const Sentence s = make({Kind::Top, {}, {}, {}, {}, {}});
    return s;
}

Sentence Sentence::bottom() {
    static const Sentence s = make({Kind::Bottom, {}, {}, {}, {}, {}});
    return s;
}

Sentence Sentence::pred(std::string name, Term t) {
    return make({Kind::Pred, std::move(name), std::move(t), {}, {}, {}});
}

Sentence Sentence::diff(Term a, Term b, Bound d) {
    return make({Kind::Diff, {}, std::move(a), std::move(b), d, {}});
}

Sentence Sentence::conj(std::vector<Sentence> xs) {
    if (xs.empty()) return top();
    if (xs.size() == 1) return xs.front();
    return make({Kind::And, {}, {}, {}, {}, std::move(xs)});
}

Sentence Sentence::disj(std::vector<Sentence> xs) {
    if (xs.empty()) return bottom();
    if (xs.size() == 1) return xs.front();
    return make({Kind::Or, {}, {}, {}, {}, std::move(xs)});
}

Sentence Sentence::implies(Sentence a, Sentence b) {
    return make({Kind::Implies, {}, {}, {}, {}, {std::move(a), std::move(b)}});
}

Sentence Sentence::forall(std::string var, Sentence body) {
    return make({Kind::Forall, std::move(var), {}, {}, {}, {std::move(body)}});
}

Sentence Sentence::exists(std::string var, Sentence body) {
    return make({Kind::Exists, std::move(var), {}, {}, {}, {std::move(body)}});
}

bool operator==(const Sentence& a, const Sentence& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.name == y.name && x.a == y.a && x.b == y.b &&
           x.bound == y.bound && x.kids == y.kids;
}

namespace {

void collect_free(const Sentence& s, std::vector<std::string>& bound, std::set<std::string>& out) {
    auto term = [&](const Term& t) {
        if (t.is_var() && std::find(bound.begin(), bound.end(), t.var) == bound.end())
            out.insert(t.var);
    };
    switch (s.kind()) {
        case Kind::Top:
        case Kind::Bottom: return;
        case Kind::Pred: term(s.term()); return;
        case Kind::Diff:
            term(s.term());
            term(s.right_term());
            return;
        case Kind::Forall:
        case Kind::Exists:
            bound.push_back(s.name());
            collect_free(s.body(), bound, out);
            bound.pop_back();
            return;
        default:
            for (const auto& k : s.children()) collect_free(k, bound, out);
    }
}

bool mentions_var(const Sentence& s, const std::string& v) {
    std::vector<std::string> bound;
    std::set<std::string> free;
    collect_free(s, bound, free);
    return free.count(v) > 0;
}

}  // namespace

std::vector<std::string> free_variables(const Sentence& s) {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(s, bound, out);
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Translation

namespace {

using S = Sentence;

S le(const Term& a, const Term& b) { return S::diff(a, b, Bound::of(0)); }
S eq(const Term& a, const Term& b) { return S::conj({le(a, b), le(b, a)}); }
S lt(const Term& a, const Term& b) { return S::conj({le(a, b), S::neg(eq(a, b))}); }
// a - b < n; every difference is below omega.
S prec(const Term& a, const Term& b, const Interval& iv) {
    if (iv.is_unbounded()) return S::top();
    return S::neg(S::diff(b, a, Bound::of(-static_cast<std::int64_t>(iv.upper()))));
}
S lower(const Term& a, const Term& b, const Interval& iv) {
    return S::diff(a, b, Bound::of(-static_cast<std::int64_t>(iv.lower())));
}

bool reserved_name(const std::string& v) {
    return v.size() > 1 && (v[0] == 'y' || v[0] == 'z') &&
           std::all_of(v.begin() + 1, v.end(), [](unsigned char c) { return std::isdigit(c); });
}

S tr(const Formula& f, const Term& x, std::size_t depth) {
    switch (f.op()) {
        case Op::Bottom: return S::bottom();
        case Op::Atom: return S::pred(f.name(), x);
        case Op::And: return S::conj({tr(f.lhs(), x, depth), tr(f.rhs(), x, depth)});
        case Op::Or: return S::disj({tr(f.lhs(), x, depth), tr(f.rhs(), x, depth)});
        case Op::Implies: return S::implies(tr(f.lhs(), x, depth), tr(f.rhs(), x, depth));
        default: break;
    }
    const Interval iv = f.interval();
    if (iv.empty()) throw PreconditionError("cannot translate the empty interval " + iv.str());
    const std::string yn = "y" + std::to_string(depth);
    const std::string zn = "z" + std::to_string(depth);
    const Term y = Term::variable(yn);
    const Term z = Term::variable(zn);
    const std::size_t d = depth + 1;
    switch (f.op()) {
        case Op::Next:
            return S::exists(yn, S::conj({lt(x, y), S::neg(S::exists(zn, S::conj({lt(x, z), lt(z, y)}))),
                                          lower(x, y, iv), prec(y, x, iv), tr(f.operand(), y, d)}));
        case Op::Prev:
            return S::exists(yn, S::conj({lt(y, x), S::neg(S::exists(zn, S::conj({lt(y, z), lt(z, x)}))),
                                          prec(x, y, iv), lower(y, x, iv), tr(f.operand(), y, d)}));
        case Op::Until:
            return S::exists(
                yn, S::conj({le(x, y), lower(x, y, iv), prec(y, x, iv), tr(f.rhs(), y, d),
                             S::forall(zn, S::implies(S::conj({le(x, z), lt(z, y)}), tr(f.lhs(), z, d)))}));
        case Op::Release:
            return S::forall(
                yn, S::implies(S::conj({le(x, y), lower(x, y, iv), prec(y, x, iv)}),
                               S::disj({tr(f.rhs(), y, d),
                                        S::exists(zn, S::conj({le(x, z), lt(z, y), tr(f.lhs(), z, d)}))})));
        case Op::Since:
            return S::exists(
                yn, S::conj({le(y, x), prec(x, y, iv), lower(y, x, iv), tr(f.rhs(), y, d),
                             S::forall(zn, S::implies(S::conj({lt(y, z), le(z, x)}), tr(f.lhs(), z, d)))}));
        default:  // Trigger
            return S::forall(
                yn, S::implies(S::conj({le(y, x), prec(x, y, iv), lower(y, x, iv)}),
                               S::disj({tr(f.rhs(), y, d),
                                        S::exists(zn, S::conj({lt(y, z), le(z, x), tr(f.lhs(), z, d)}))})));
    }
}

}  // namespace

Sentence translate(const Formula& f, const Term& x) {
    if (x.is_var() && reserved_name(x.var))
        throw PreconditionError("variable name '" + x.var + "' is reserved for quantifiers");
    return tr(f, x, 0);
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

bool is_static(const Sentence& s) {
    if (s.kind() == Kind::Pred) return false;
    return std::all_of(s.children().begin(), s.children().end(), is_static);
}

bool is_neg(const Sentence& s) {
    return s.kind() == Kind::Implies && s.children()[1].kind() == Kind::Bottom;
}

// Classical negation of a static sentence. Static sentences do not depend on
// the world, so their negation behaves classically.
S negate_static(const S& s) {
    switch (s.kind()) {
        case Kind::Top: return S::bottom();
        case Kind::Bottom: return S::top();
        case Kind::Diff:
            if (s.bound().omega) return S::bottom();
            return S::diff(s.right_term(), s.term(), Bound::of(-s.bound().value - 1));
        case Kind::And: {
            std::vector<S> xs;
            for (const auto& k : s.children()) xs.push_back(negate_static(k));
            return S::disj(std::move(xs));
        }
        case Kind::Or: {
            std::vector<S> xs;
            for (const auto& k : s.children()) xs.push_back(negate_static(k));
            return S::conj(std::move(xs));
        }
        case Kind::Implies:
            return S::conj({s.children()[0], negate_static(s.children()[1])});
        case Kind::Forall: return S::exists(s.name(), negate_static(s.body()));
        case Kind::Exists: return S::forall(s.name(), negate_static(s.body()));
        default: return S::neg(s);
    }
}

struct PairKey {
    Term a, b;
    bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
};

// Merges difference atoms on the same ordered pair, keeping the tighter
// bound (conjunction) or the looser one (disjunction) at the first position.
// Returns true when an opposite pair makes the whole junction constant.
bool merge_diffs(std::vector<S>& xs, bool conjunctive) {
    std::vector<S> out;
    for (const auto& x : xs) {
        if (x.kind() != Kind::Diff) {
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
            continue;
        }
        bool merged = false;
        for (auto& o : out) {
            if (o.kind() != Kind::Diff) continue;
            if (o.term() == x.term() && o.right_term() == x.right_term()) {
                const auto a = o.bound().value;
                const auto b = x.bound().value;
                o = S::diff(o.term(), o.right_term(),
                            Bound::of(conjunctive ? std::min(a, b) : std::max(a, b)));
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(x);
    }
    xs = std::move(out);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].kind() != Kind::Diff) continue;
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[j].kind() != Kind::Diff) continue;
            if (!(xs[i].term() == xs[j].right_term() && xs[i].right_term() == xs[j].term())) continue;
            const auto sum = xs[i].bound().value + xs[j].bound().value;
            // a-b <= d1 and b-a <= d2 need d1+d2 >= 0; one of them always
            // holds over the integers when d1+d2 >= -1.
            if (conjunctive ? sum < 0 : sum >= -1) return true;
        }
    }
    return false;
}

S simp(const S& s);

S simp_junction(const S& s) {
    const bool conjunctive = s.kind() == Kind::And;
    const Kind unit = conjunctive ? Kind::Top : Kind::Bottom;
    const Kind zero = conjunctive ? Kind::Bottom : Kind::Top;
    std::vector<S> xs;
    std::function<void(const S&)> add = [&](const S& k) {
        if (k.kind() == s.kind()) {
            for (const auto& c : k.children()) add(c);
        } else if (k.kind() != unit) {
            xs.push_back(k);
        }
    };
    for (const auto& k : s.children()) add(simp(k));
    for (const auto& x : xs)
        if (x.kind() == zero) return conjunctive ? S::bottom() : S::top();
    if (merge_diffs(xs, conjunctive)) return conjunctive ? S::bottom() : S::top();
    return conjunctive ? S::conj(std::move(xs)) : S::disj(std::move(xs));
}

S simp_implies(const S& s) {
    S a = simp(s.children()[0]);
    S b = simp(s.children()[1]);
    // a -> (c -> d) is (a & c) -> d.
    while (b.kind() == Kind::Implies && b.children()[1].kind() != Kind::Bottom) {
        a = simp(S::conj({a, b.children()[0]}));
        b = b.children()[1];
    }
    if (a.kind() == Kind::Bottom || b.kind() == Kind::Top) return S::top();
    if (a.kind() == Kind::Top) return b;
    if (b.kind() == Kind::Bottom && is_static(a)) return simp(negate_static(a));
    if (b.kind() == Kind::Implies) return simp(S::neg(S::conj({a, b.children()[0]})));
    return S::implies(a, b);
}

S simp(const S& s) {
    switch (s.kind()) {
        case Kind::Top:
        case Kind::Bottom:
        case Kind::Pred: return s;
        case Kind::Diff: {
            const Bound& d = s.bound();
            if (d.omega) return S::top();
            const Term& a = s.term();
            const Term& b = s.right_term();
            if (a == b) return d.value >= 0 ? S::top() : S::bottom();
            if (!a.is_var() && !b.is_var()) {
                const auto diff = static_cast<std::int64_t>(a.point) - static_cast<std::int64_t>(b.point);
                return diff <= d.value ? S::top() : S::bottom();
            }
            return s;
        }
        case Kind::And:
        case Kind::Or: return simp_junction(s);
        case Kind::Implies: return simp_implies(s);
        default: {
            S body = simp(s.body());
            if (body.kind() == Kind::Top || body.kind() == Kind::Bottom) return body;
            if (!mentions_var(body, s.name())) return body;
            return s.kind() == Kind::Forall ? S::forall(s.name(), body) : S::exists(s.name(), body);
        }
    }
}

std::string canonical_name(std::size_t depth) {
    static const char* const base[] = {"x", "y", "z", "u", "v", "w"};
    const std::size_t round = depth / 6;
    std::string n = base[depth % 6];
    if (round > 0) n += std::to_string(round);
    return n;
}

Term rename_term(const Term& t, const std::vector<std::pair<std::string, std::string>>& env) {
    if (!t.is_var()) return t;
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == t.var) return Term::variable(it->second);
    return t;
}

S rename(const S& s, std::vector<std::pair<std::string, std::string>>& env, std::size_t& depth,
         const std::set<std::string>& taken) {
    switch (s.kind()) {
        case Kind::Top:
        case Kind::Bottom: return s;
        case Kind::Pred: return S::pred(s.name(), rename_term(s.term(), env));
        case Kind::Diff:
            return S::diff(rename_term(s.term(), env), rename_term(s.right_term(), env), s.bound());
        case Kind::And:
        case Kind::Or:
        case Kind::Implies: {
            std::vector<S> xs;
            for (const auto& k : s.children()) xs.push_back(rename(k, env, depth, taken));
            if (s.kind() == Kind::Implies) return S::implies(xs[0], xs[1]);
            return s.kind() == Kind::And ? S::conj(std::move(xs)) : S::disj(std::move(xs));
        }
        default: {
            std::size_t slot = depth;
            std::string name = canonical_name(slot);
            while (taken.count(name)) name = canonical_name(++slot);
            const std::size_t saved = depth;
            depth = slot + 1;
            env.emplace_back(s.name(), name);
            S body = rename(s.body(), env, depth, taken);
            env.pop_back();
            depth = saved;
            return s.kind() == Kind::Forall ? S::forall(name, body) : S::exists(name, body);
        }
    }
}

}  // namespace

Sentence simplify(const Sentence& s) {
    const S out = simp(s);
    const auto free = free_variables(out);
    const std::set<std::string> taken(free.begin(), free.end());
    std::vector<std::pair<std::string, std::string>> env;
    std::size_t depth = 0;
    return rename(out, env, depth, taken);
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace {

int level(const S& s) {
    switch (s.kind()) {
        case Kind::Implies: return is_neg(s) ? 3 : 0;
        case Kind::Or: return 1;
        case Kind::And: return 2;
        default: return 3;
    }
}

void print_rec(const S& s, std::string& out);

void print_at(const S& s, int min_level, std::string& out) {
    if (level(s) < min_level) {
        out += '(';
        print_rec(s, out);
        out += ')';
    } else {
        print_rec(s, out);
    }
}

bool is_atomic(const S& s) {
    return s.kind() == Kind::Top || s.kind() == Kind::Bottom || s.kind() == Kind::Pred ||
           s.kind() == Kind::Diff;
}

void print_rec(const S& s, std::string& out) {
    switch (s.kind()) {
        case Kind::Top: out += "#true"; return;
        case Kind::Bottom: out += "#false"; return;
        case Kind::Pred: out += s.name() + "(" + s.term().str() + ")"; return;
        case Kind::Diff:
            out += s.term().str() + " <={" + s.bound().str() + "} " + s.right_term().str();
            return;
        case Kind::And:
        case Kind::Or: {
            const char* sep = s.kind() == Kind::And ? " & " : " | ";
            const int need = level(s) + 1;
            for (std::size_t i = 0; i < s.children().size(); ++i) {
                if (i) out += sep;
                print_at(s.children()[i], need, out);
            }
            return;
        }
        case Kind::Implies:
            if (is_neg(s)) {
                out += '~';
                print_at(s.children()[0], 3, out);
                return;
            }
            print_at(s.children()[0], 1, out);
            out += " -> ";
            print_at(s.children()[1], 0, out);
            return;
        default:
            out += s.kind() == Kind::Forall ? '!' : '?';
            out += s.name();
            out += ' ';
            if (is_atomic(s.body())) {
                print_rec(s.body(), out);
            } else {
                out += '(';
                print_rec(s.body(), out);
                out += ')';
            }
    }
}

class FomParser {
public:
    explicit FomParser(std::string_view text) : src_(text) {}

    S parse_all() {
        S s = implication();
        skip_ws();
        if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(msg, line, col);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (src_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    static bool ident_start(char c) { return std::islower(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    std::string ident() {
        skip_ws();
        if (pos_ >= src_.size() || !ident_start(src_[pos_])) fail("expected a name");
        const std::size_t start = pos_;
        while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    std::int64_t integer(bool allow_negative) {
        skip_ws();
        const std::size_t start = pos_;
        if (allow_negative && pos_ < src_.size() && src_[pos_] == '-') ++pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (ec != std::errc() || p != src_.data() + pos_ || pos_ == start) {
            pos_ = start;
            fail("expected a number");
        }
        return v;
    }

    Term term() {
        skip_ws();
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            return Term::at(static_cast<Time>(integer(false)));
        return Term::variable(ident());
    }

    S implication() {
        S lhs = disjunction();
        if (accept("->")) return S::implies(lhs, implication());
        return lhs;
    }

    S disjunction() {
        std::vector<S> xs{conjunction()};
        while (accept("|")) xs.push_back(conjunction());
        return S::disj(std::move(xs));
    }

    S conjunction() {
        std::vector<S> xs{unary()};
        while (accept("&")) xs.push_back(unary());
        return S::conj(std::move(xs));
    }

    S unary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        if (accept("~")) return S::neg(unary());
        if (accept("!")) {
            std::string v = ident();
            return S::forall(std::move(v), unary());
        }
        if (accept("?")) {
            std::string v = ident();
            return S::exists(std::move(v), unary());
        }
        if (accept("#true")) return S::top();
        if (accept("#false")) return S::bottom();
        if (accept("(")) {
            S s = implication();
            expect(")");
            return s;
        }
        const std::size_t save = pos_;
        if (ident_start(src_[pos_])) {
            std::string name = ident();
            if (accept("(")) {
                Term t = term();
                expect(")");
                return S::pred(std::move(name), std::move(t));
            }
            pos_ = save;
        }
        Term a = term();
        expect("<={");
        Bound d;
        if (accept("w")) {
            d = Bound::infinite();
        } else {
            d = Bound::of(integer(true));
        }
        expect("}");
        Term b = term();
        return S::diff(std::move(a), std::move(b), d);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string print(const Sentence& s) {
    std::string out;
    print_rec(s, out);
    return out;
}

Sentence parse(std::string_view text) { return FomParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Semantics

void Interpretation::validate() const {
    if (!domain.count(0)) throw ValidationError("the domain must contain 0");
    for (const auto& a : there)
        if (!domain.count(a.point))
            throw ValidationError("atom " + a.str() + " uses a point outside the domain");
    for (const auto& a : here)
        if (!there.count(a)) throw ValidationError("here-atom " + a.str() + " is missing from there");
}

namespace {

class QhtEvaluator {
public:
    QhtEvaluator(const std::set<Time>& domain, const AtomSetG& here, const AtomSetG& there)
        : domain_(domain), here_(here), there_(there) {}

    bool eval(const S& s, bool here_world) {
        switch (s.kind()) {
            case Kind::Top: return true;
            case Kind::Bottom: return false;
            case Kind::Pred: {
                const GroundAtom a{s.name(), value(s.term())};
                return (here_world ? here_ : there_).count(a) > 0;
            }
            case Kind::Diff: {
                const Time a = value(s.term());
                const Time b = value(s.right_term());
                if (s.bound().omega) return true;
                return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b) <= s.bound().value;
            }
            case Kind::And:
                for (const auto& k : s.children())
                    if (!eval(k, here_world)) return false;
                return true;
            case Kind::Or:
                for (const auto& k : s.children())
                    if (eval(k, here_world)) return true;
                return false;
            case Kind::Implies:
                if (here_world && eval(s.children()[0], true) && !eval(s.children()[1], true))
                    return false;
                return !eval(s.children()[0], false) || eval(s.children()[1], false);
            default: {
                const bool universal = s.kind() == Kind::Forall;
                env_.emplace_back(s.name(), 0);
                bool result = universal;
                for (Time t : domain_) {
                    env_.back().second = t;
                    if (eval(s.body(), here_world) != universal) {
                        result = !universal;
                        break;
                    }
                }
                env_.pop_back();
                return result;
            }
        }
    }

private:
    Time value(const Term& t) const {
        if (t.is_var()) {
            for (auto it = env_.rbegin(); it != env_.rend(); ++it)
                if (it->first == t.var) return it->second;
            throw PreconditionError("free variable '" + t.var + "'");
        }
        if (!domain_.count(t.point))
            throw ValidationError("point " + std::to_string(t.point) + " is not in the domain");
        return t.point;
    }

    const std::set<Time>& domain_;
    const AtomSetG& here_;
    const AtomSetG& there_;
    std::vector<std::pair<std::string, Time>> env_;
};

}  // namespace

bool sat(const Interpretation& m, const Sentence& s) {
    return QhtEvaluator(m.domain, m.here, m.there).eval(s, true);
}

Interpretation induced_interpretation(const TimedHTTrace& m) {
    if (!m.is_strict()) throw PreconditionError("induced interpretations need a strict trace");
    Interpretation out;
    for (std::size_t i = 0; i < m.length(); ++i) {
        const Time t = m.time(i);
        out.domain.insert(t);
        for (const auto& p : m.here(i).names(m.alphabet())) out.here.insert({p, t});
        for (const auto& p : m.there(i).names(m.alphabet())) out.there.insert({p, t});
    }
    return out;
}

EquilibriumResult check_equilibrium(const std::set<Time>& domain, const AtomSetG& there,
                                    const Sentence& s, std::size_t max_atoms) {
    if (there.size() > max_atoms)
        throw PreconditionError("there-set has " + std::to_string(there.size()) +
                                " atoms; the exhaustive check allows at most " +
                                std::to_string(max_atoms));
    Interpretation total{domain, there, there};
    total.validate();
    EquilibriumResult r;
    r.total_model = sat(total, s);
    if (!r.total_model) return r;
    const std::vector<GroundAtom> atoms(there.begin(), there.end());
    const std::uint64_t full = (std::uint64_t{1} << atoms.size()) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
        AtomSetG here;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if ((mask >> i) & 1U) here.insert(atoms[i]);
        if (QhtEvaluator(domain, here, there).eval(s, true)) {
            r.witness = std::move(here);
            return r;
        }
    }
    r.equilibrium = true;
    return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

GroundAtom parse_ground(const std::string& text) {
    const auto open = text.find('(');
    if (open == std::string::npos || open == 0 || text.back() != ')')
        throw ValidationError("ground atom '" + text + "' is not of the form p(n)");
    const std::string digits = text.substr(open + 1, text.size() - open - 2);
    Time t = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
    if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size())
        throw ValidationError("ground atom '" + text + "' needs a natural number argument");
    return {text.substr(0, open), t};
}

AtomSetG atoms_from(const json& j, const char* field) {
    if (!j.is_array()) throw ValidationError(std::string("\"") + field + "\" must be an array");
    AtomSetG out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ValidationError(std::string("\"") + field + "\" must hold strings");
        out.insert(parse_ground(e.get<std::string>()));
    }
    return out;
}

}  // namespace

std::string interpretation_to_json(const Interpretation& m) {
    json doc;
    doc["domain"] = std::vector<Time>(m.domain.begin(), m.domain.end());
    json here = json::array();
    for (const auto& a : m.here) here.push_back(a.str());
    json there = json::array();
    for (const auto& a : m.there) there.push_back(a.str());
    doc["here"] = std::move(here);
    doc["there"] = std::move(there);
    return doc.dump();
}

Interpretation interpretation_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed interpretation JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("domain") || !doc.contains("there"))
        throw ValidationError("interpretation JSON needs \"domain\" and \"there\"");
    Interpretation m;
    if (!doc["domain"].is_array()) throw ValidationError("\"domain\" must be an array");
    for (const auto& e : doc["domain"]) {
        if (!e.is_number_integer() || e.get<long long>() < 0)
            throw ValidationError("domain elements must be non-negative integers");
        m.domain.insert(e.get<Time>());
    }
    m.there = atoms_from(doc["there"], "there");
    m.here = doc.contains("here") ? atoms_from(doc["here"], "here") : m.there;
    m.validate();
    return m;
}

}  // namespace mel::fom
