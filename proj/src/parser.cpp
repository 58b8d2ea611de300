#include "mel/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "mel/error.hpp"

namespace mel {

namespace {

enum class Tok {
    End,
    Atom,
    Number,
    Keyword,   // X wX Y wY G F H O U R S T
    Constant,  // #true #false #init #final
    Tilde,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    AtMost,
    AtLeast,
    LParen,
    RParen,
    LBracket,
    RBracket,
    DotDot,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

bool is_keyword(const std::string& w) {
    static const char* const kKeywords[] = {"X", "wX", "Y", "wY", "G", "F",
                                            "H", "O",  "U", "R",  "S", "T"};
    for (const char* k : kKeywords)
        if (w == k) return true;
    return false;
}

class Lexer {
public:
    Lexer(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = text_[pos_];
            if (std::islower(static_cast<unsigned char>(c))) {
                t.text = word();
                t.kind = (t.text == "wX" || t.text == "wY") ? Tok::Keyword : Tok::Atom;
            } else if (std::isupper(static_cast<unsigned char>(c))) {
                t.text = word();
                if (!is_keyword(t.text))
                    throw SyntaxError("unknown operator '" + t.text + "'", t.line, t.column);
                t.kind = Tok::Keyword;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    t.text += take();
                t.kind = Tok::Number;
            } else if (c == '#') {
                t.text = take();
                t.text += word();
                if (t.text != "#true" && t.text != "#false" && t.text != "#init" &&
                    t.text != "#final")
                    throw SyntaxError("unknown constant '" + t.text + "'", t.line, t.column);
                t.kind = Tok::Constant;
            } else if (starts_with("<->")) {
                t = symbol(t, Tok::DoubleArrow, 3);
            } else if (starts_with("->")) {
                t = symbol(t, Tok::Arrow, 2);
            } else if (starts_with("<=")) {
                t = symbol(t, Tok::AtMost, 2);
            } else if (starts_with(">=")) {
                t = symbol(t, Tok::AtLeast, 2);
            } else if (starts_with("..")) {
                t = symbol(t, Tok::DotDot, 2);
            } else {
                Tok kind;
                switch (c) {
                    case '~': kind = Tok::Tilde; break;
                    case '&': kind = Tok::Amp; break;
                    case '|': kind = Tok::Bar; break;
                    case '(': kind = Tok::LParen; break;
                    case ')': kind = Tok::RParen; break;
                    case '[': kind = Tok::LBracket; break;
                    case ']': kind = Tok::RBracket; break;
                    default:
                        throw SyntaxError(std::string("unexpected character '") + c + "'", t.line,
                                          t.column);
                }
                t = symbol(t, kind, 1);
            }
            out.push_back(std::move(t));
        }
    }

private:
    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) take();
    }

    std::string word() {
        std::string w;
        while (pos_ < text_.size()) {
            const auto c = static_cast<unsigned char>(text_[pos_]);
            if (!std::isalnum(c) && c != '_') break;
            w += take();
        }
        return w;
    }

    bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

    Token symbol(Token t, Tok kind, std::size_t n) {
        t.kind = kind;
        for (std::size_t i = 0; i < n; ++i) t.text += take();
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Formula parse_all() {
        Formula f = parse_iff();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

    Interval parse_standalone_interval() {
        auto i = try_interval();
        if (!i) fail("expected an interval");
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return *i;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        advance();
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw SyntaxError(t.kind == Tok::End ? msg + " at end of input" : msg, t.line, t.column);
    }
    void expect(Tok kind, const char* what) {
        if (!accept(kind)) fail(std::string("expected ") + what);
    }

    Formula parse_iff() {
        Formula f = parse_impl();
        while (accept(Tok::DoubleArrow)) f = iff(f, parse_impl());
        return f;
    }

    Formula parse_impl() {
        Formula f = parse_disj();
        if (accept(Tok::Arrow)) return implies(f, parse_impl());
        return f;
    }

    Formula parse_disj() {
        Formula f = parse_conj();
        while (accept(Tok::Bar)) f = disj(f, parse_conj());
        return f;
    }

    Formula parse_conj() {
        Formula f = parse_bin();
        while (accept(Tok::Amp)) f = conj(f, parse_bin());
        return f;
    }

    Formula parse_bin() {
        Formula left = parse_unary();
        const Token& t = peek();
        if (t.kind != Tok::Keyword) return left;
        Op op;
        if (t.text == "U") op = Op::Until;
        else if (t.text == "R") op = Op::Release;
        else if (t.text == "S") op = Op::Since;
        else if (t.text == "T") op = Op::Trigger;
        else return left;
        advance();
        const Interval i = try_interval().value_or(Interval::unbounded());
        Formula right = parse_bin();
        return Formula::make_binary(op, std::move(left), std::move(right), i);
    }

    Formula parse_unary() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::Tilde:
                advance();
                return neg(parse_unary());
            case Tok::Keyword: {
                if (t.text == "U" || t.text == "R" || t.text == "S" || t.text == "T")
                    fail("binary operator '" + t.text + "' is missing its left operand");
                advance();
                const Interval i = try_interval().value_or(Interval::unbounded());
                Formula a = parse_unary();
                if (t.text == "X") return next(i, a);
                if (t.text == "wX") return weak_next(i, a);
                if (t.text == "Y") return prev(i, a);
                if (t.text == "wY") return weak_prev(i, a);
                if (t.text == "G") return always(i, a);
                if (t.text == "F") return eventually(i, a);
                if (t.text == "H") return historically(i, a);
                return once(i, a);  // "O"
            }
            case Tok::Atom:
                advance();
                return atom(t.text);
            case Tok::Constant:
                advance();
                if (t.text == "#true") return top();
                if (t.text == "#false") return bottom();
                if (t.text == "#init") return initial();
                return final_state();
            case Tok::LParen: {
                advance();
                Formula f = parse_iff();
                expect(Tok::RParen, "')'");
                return f;
            }
            default:
                fail(t.kind == Tok::End ? "expected a formula" : "unexpected '" + t.text + "'");
        }
    }

    Time number() {
        const Token& t = peek();
        if (t.kind != Tok::Number) fail("malformed interval: expected a natural number");
        Time v = 0;
        for (char c : t.text) {
            const Time d = static_cast<Time>(c - '0');
            if (v > (Interval::kOmega - 1 - d) / 10) fail("malformed interval: number too large");
            v = v * 10 + d;
        }
        advance();
        return v;
    }

    std::optional<Time> number_or_omega() {
        if (peek().kind == Tok::Atom && peek().text == "w") {
            advance();
            return std::nullopt;
        }
        return number();
    }

    std::optional<Interval> try_interval() {
        using Shape = IntervalSpec::Shape;
        const Token start = peek();
        IntervalSpec spec;
        if (start.kind == Tok::AtMost || start.kind == Tok::AtLeast) {
            advance();
            if (start.kind == Tok::AtMost) {
                spec.shape = Shape::AtMost;
                spec.upper = number();
            } else {
                spec.shape = Shape::AtLeast;
                spec.lower = number();
            }
            return normalize(spec, start);
        }
        const bool bracket = start.kind == Tok::LBracket;
        const bool paren = start.kind == Tok::LParen && peek(1).kind == Tok::Number;
        if (!bracket && !paren) return std::nullopt;
        advance();
        spec.lower = number();
        if (bracket && accept(Tok::RBracket)) {
            spec.shape = Shape::Point;
            return normalize(spec, start);
        }
        if (!accept(Tok::DotDot)) fail("malformed interval: expected '..'");
        spec.upper = number_or_omega();
        if (accept(Tok::RParen)) {
            spec.shape = bracket ? Shape::ClosedOpen : Shape::OpenOpen;
        } else if (accept(Tok::RBracket)) {
            spec.shape = bracket ? Shape::ClosedClosed : Shape::OpenClosed;
        } else {
            fail("malformed interval: expected ')' or ']'");
        }
        return normalize(spec, start);
    }

    static Interval normalize(const IntervalSpec& spec, const Token& at) {
        try {
            return normalize_interval(spec);
        } catch (const SyntaxError& e) {
            throw SyntaxError("malformed interval: " + e.message(), at.line, at.column);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
    return Parser(Lexer(text, 1).run()).parse_all();
}

Interval parse_interval(std::string_view text) {
    return Parser(Lexer(text, 1).run()).parse_standalone_interval();
}

Theory parse_theory(std::string_view text, std::string name) {
    Theory theory;
    theory.name = std::move(name);

    std::string chunk;
    std::size_t chunk_line = 0;
    int depth = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;

        if (auto c = line.find('%'); c != std::string_view::npos) line = line.substr(0, c);
        const bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (chunk.empty() && blank) continue;
        if (chunk.empty())
            chunk_line = line_no;
        else
            chunk += '\n';
        chunk.append(line);
        for (char c : line) {
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
        }
        if (depth <= 0) {
            theory.formulas.push_back(Parser(Lexer(chunk, chunk_line).run()).parse_all());
            chunk.clear();
            depth = 0;
        }
    }
    if (!chunk.empty())
        throw SyntaxError("unbalanced brackets at end of theory", chunk_line, 1);
    return theory;
}

}  // namespace mel
