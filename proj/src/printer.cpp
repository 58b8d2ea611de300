#include "mel/printer.hpp"

namespace mel {

namespace {

// Binding strength, loosest first.
enum Level : int { kIff = 0, kImplies = 1, kOr = 2, kAnd = 3, kBinary = 4, kUnary = 5, kAtomic = 6 };

struct Printed {
    std::string text;
    int level;
};

std::string interval_text(const Interval& i, bool one_step) {
    if (i.is_full()) return {};
    if (one_step && i.is_point()) return "[" + std::to_string(i.lower()) + "]";
    return i.str();
}

Printed print(const Formula& f);

std::string paren(const Printed& p, bool wrap) { return wrap ? "(" + p.text + ")" : p.text; }

Printed prefix(const std::string& keyword, const Interval& i, bool one_step, const Formula& a) {
    const Printed inner = print(a);
    const bool wrap = inner.level < kUnary;
    std::string text = keyword + interval_text(i, one_step);
    if (!(wrap && one_step)) text += ' ';
    return {text + paren(inner, wrap), kUnary};
}

Printed print(const Formula& f) {
    if (f.op() == Op::Bottom) return {"#false", kAtomic};
    if (f.op() == Op::Atom) return {f.name(), kAtomic};
    if (is_top(f)) return {"#true", kAtomic};

    if (auto negated = match_neg(f)) {
        const Formula& a = *negated;
        if (a.op() == Op::Prev && a.interval().is_full() && is_top(a.operand()))
            return {"#init", kAtomic};
        if (a.op() == Op::Next && a.interval().is_full() && is_top(a.operand()))
            return {"#final", kAtomic};
        const Printed inner = print(a);
        return {"~" + paren(inner, inner.level < kUnary), kUnary};
    }
    if (auto a = match_weak_next(f)) return prefix("wX", f.lhs().interval(), true, *a);
    if (auto a = match_weak_prev(f)) return prefix("wY", f.lhs().interval(), true, *a);

    switch (f.op()) {
        case Op::And: {
            const Formula& l = f.lhs();
            const Formula& r = f.rhs();
            if (l.op() == Op::Implies && r.op() == Op::Implies && l.lhs() == r.rhs() &&
                l.rhs() == r.lhs()) {
                const Printed a = print(l.lhs());
                const Printed b = print(l.rhs());
                return {paren(a, false) + " <-> " + paren(b, b.level <= kIff), kIff};
            }
            const Printed a = print(l);
            const Printed b = print(r);
            return {paren(a, a.level < kAnd) + " & " + paren(b, b.level <= kAnd), kAnd};
        }
        case Op::Or: {
            const Printed a = print(f.lhs());
            const Printed b = print(f.rhs());
            return {paren(a, a.level < kOr || a.level == kAnd) + " | " +
                        paren(b, b.level <= kOr || b.level == kAnd),
                    kOr};
        }
        case Op::Implies: {
            const Printed a = print(f.lhs());
            const Printed b = print(f.rhs());
            return {paren(a, a.level <= kImplies) + " -> " + paren(b, b.level < kImplies),
                    kImplies};
        }
        case Op::Next: return prefix("X", f.interval(), true, f.operand());
        case Op::Prev: return prefix("Y", f.interval(), true, f.operand());
        case Op::Until:
            if (is_top(f.lhs())) return prefix("F", f.interval(), false, f.rhs());
            break;
        case Op::Release:
            if (f.lhs().op() == Op::Bottom) return prefix("G", f.interval(), false, f.rhs());
            break;
        case Op::Since:
            if (is_top(f.lhs())) return prefix("O", f.interval(), false, f.rhs());
            break;
        case Op::Trigger:
            if (f.lhs().op() == Op::Bottom) return prefix("H", f.interval(), false, f.rhs());
            break;
        default:
            break;
    }

    const char* keyword = f.op() == Op::Until     ? "U"
                          : f.op() == Op::Release ? "R"
                          : f.op() == Op::Since   ? "S"
                                                  : "T";
    const Printed a = print(f.lhs());
    const Printed b = print(f.rhs());
    return {paren(a, a.level < kUnary) + " " + keyword + interval_text(f.interval(), false) +
                " " + paren(b, b.level < kBinary),
            kBinary};
}

}  // namespace

std::string print_formula(const Formula& f) { return print(f).text; }

std::string print_theory(const Theory& t) {
    std::string out;
    for (const auto& f : t.formulas) {
        out += print_formula(f);
        out += '\n';
    }
    return out;
}

}  // namespace mel
