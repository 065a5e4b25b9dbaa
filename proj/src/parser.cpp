#include "aspfix/parser.hpp"

#include <cctype>
#include <vector>

namespace aspfix {

namespace {

enum class Tok {
    Ident,     // lowercase identifier
    Variable,  // uppercase identifier
    Integer,
    Not,       // keyword "not"
    If,        // ":-"
    Dot,
    Comma,
    Semi,
    LParen,
    RParen,
    LBrace,
    RBrace,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long long value = 0;
    SourceSpan span;
};

class Lexer {
public:
    Lexer(const std::string& text, const std::string& file) : text_(text), file_(file) {}

    Token next() {
        skip_ws();
        Token t;
        t.span = here();
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = text_[pos_];
        if (c == '.') return advance(t, Tok::Dot);
        if (c == ',') return advance(t, Tok::Comma);
        if (c == ';') return advance(t, Tok::Semi);
        if (c == '(') return advance(t, Tok::LParen);
        if (c == ')') return advance(t, Tok::RParen);
        if (c == '{') return advance(t, Tok::LBrace);
        if (c == '}') return advance(t, Tok::RBrace);
        if (c == ':') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                bump();
                bump();
                t.kind = Tok::If;
                return t;
            }
            fail(t.span, "expected ':-'");
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            std::string num;
            if (c == '-') {
                num += c;
                bump();
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                num += text_[pos_];
                bump();
            }
            t.kind = Tok::Integer;
            t.value = std::stoll(num);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_];
                bump();
            }
            if (id == "not") {
                t.kind = Tok::Not;
                return t;
            }
            t.kind = std::isupper(static_cast<unsigned char>(id[0])) ? Tok::Variable : Tok::Ident;
            t.text = std::move(id);
            return t;
        }
        fail(t.span, std::string("unexpected character '") + c + "'");
        return t;  // unreachable
    }

    [[noreturn]] void fail(SourceSpan s, const std::string& msg) const {
        throw ParseError(file_, s, msg);
    }

private:
    SourceSpan here() const { return SourceSpan{line_, col_, pos_}; }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    Token advance(Token t, Tok kind) {
        bump();
        t.kind = kind;
        return t;
    }

    const std::string& text_;
    std::string file_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(const std::string& text, const std::string& file)
        : lexer_(text, file), file_(file) {
        cur_ = lexer_.next();
    }

    Program program() {
        Program p;
        while (cur_.kind != Tok::End) {
            SourceSpan start = cur_.span;
            Rule r = statement();
            try {
                p.add_rule(std::move(r));
            } catch (const std::invalid_argument& e) {
                fail(start, e.what());
            }
        }
        return p;
    }

    Rule statement() {
        if (cur_.kind == Tok::If) {  // constraint
            eat(Tok::If);
            auto [pos, neg] = body();
            expect(Tok::Dot);
            return Rule::constraint(std::move(pos), std::move(neg));
        }
        if (cur_.kind == Tok::Integer || cur_.kind == Tok::LBrace) return choice_rule();
        // normal rule or fact
        Atom h = atom();
        if (cur_.kind == Tok::Dot) {
            eat(Tok::Dot);
            return Rule::fact(std::move(h));
        }
        expect(Tok::If);
        auto [pos, neg] = body();
        expect(Tok::Dot);
        return Rule::normal(std::move(h), std::move(pos), std::move(neg));
    }

    Atom atom() {
        Token name = cur_;
        expect(Tok::Ident);
        std::vector<Term> args;
        if (cur_.kind == Tok::LParen) {
            eat(Tok::LParen);
            args.push_back(term());
            while (cur_.kind == Tok::Comma) {
                eat(Tok::Comma);
                args.push_back(term());
            }
            expect(Tok::RParen);
        }
        return Atom(name.text, std::move(args));
    }

    bool at_end() const { return cur_.kind == Tok::End; }
    [[noreturn]] void fail(SourceSpan s, const std::string& msg) const { lexer_.fail(s, msg); }
    SourceSpan span() const { return cur_.span; }

private:
    Rule choice_rule() {
        SourceSpan start = cur_.span;
        long long bound = 0;
        if (cur_.kind == Tok::Integer) {
            bound = cur_.value;
            if (bound < 0) fail(start, "negative choice bound");
            eat(Tok::Integer);
        }
        expect(Tok::LBrace);
        std::vector<Atom> atoms;
        if (cur_.kind != Tok::RBrace) {
            atoms.push_back(choice_atom());
            while (cur_.kind == Tok::Semi) {
                eat(Tok::Semi);
                atoms.push_back(choice_atom());
            }
        }
        expect(Tok::RBrace);
        expect(Tok::Dot);
        if (static_cast<std::size_t>(bound) > atoms.size())
            fail(start, "choice bound " + std::to_string(bound) + " exceeds atom count " +
                            std::to_string(atoms.size()));
        return Rule::choice(static_cast<unsigned>(bound), std::move(atoms));
    }

    Atom choice_atom() {
        SourceSpan s = cur_.span;
        Atom a = atom();
        if (!a.is_ground()) fail(s, "choice rules must be ground: " + a.to_string());
        return a;
    }

    std::pair<std::vector<Atom>, std::vector<Atom>> body() {
        std::vector<Atom> pos, neg;
        literal(pos, neg);
        while (cur_.kind == Tok::Comma) {
            eat(Tok::Comma);
            literal(pos, neg);
        }
        return {std::move(pos), std::move(neg)};
    }

    void literal(std::vector<Atom>& pos, std::vector<Atom>& neg) {
        bool negated = false;
        if (cur_.kind == Tok::Not) {
            eat(Tok::Not);
            negated = true;
        }
        Atom a = atom();
        auto& dst = negated ? neg : pos;
        for (const auto& b : dst)
            if (b == a) return;  // bodies are sets
        dst.push_back(std::move(a));
    }

    Term term() {
        Token t = cur_;
        switch (t.kind) {
            case Tok::Ident:
                eat(Tok::Ident);
                return Term::sym(t.text);
            case Tok::Variable:
                eat(Tok::Variable);
                return Term::var(t.text);
            case Tok::Integer:
                eat(Tok::Integer);
                return Term::integer(t.value);
            default:
                fail(t.span, "expected term");
        }
    }

    void eat(Tok k) { expect(k); }

    void expect(Tok k) {
        if (cur_.kind != k) fail(cur_.span, "unexpected token" + describe());
        cur_ = lexer_.next();
    }

    std::string describe() const {
        switch (cur_.kind) {
            case Tok::End: return " (end of input)";
            case Tok::Ident:
            case Tok::Variable: return " '" + cur_.text + "'";
            case Tok::Integer: return " '" + std::to_string(cur_.value) + "'";
            default: return "";
        }
    }

    Lexer lexer_;
    std::string file_;
    Token cur_;
};

}  // namespace

Program parse_program(const std::string& text, const std::string& filename) {
    Parser p(text, filename);
    return p.program();
}

Atom parse_atom(const std::string& text, const std::string& filename) {
    Parser p(text, filename);
    Atom a = p.atom();
    if (!p.at_end()) p.fail(p.span(), "trailing input after atom");
    return a;
}

Rule parse_rule(const std::string& text, const std::string& filename) {
    Parser p(text, filename);
    Rule r = p.statement();
    if (!p.at_end()) p.fail(p.span(), "trailing input after rule");
    return r;
}

}  // namespace aspfix
