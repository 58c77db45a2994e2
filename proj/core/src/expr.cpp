#include "bnconcur/expr.hpp"

#include <unordered_map>

namespace bnconcur {

ExprPtr make_const(bool v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Const;
    e->value = v;
    return e;
}

ExprPtr make_var(int index) {
    if (index < 0) throw InputError("negative variable index");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Var;
    e->var = index;
    return e;
}

ExprPtr make_not(ExprPtr k) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Not;
    e->kids.push_back(std::move(k));
    return e;
}

ExprPtr make_and(std::vector<ExprPtr> kids) {
    if (kids.empty()) return make_const(true);
    if (kids.size() == 1) return kids[0];
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::And;
    e->kids = std::move(kids);
    return e;
}

ExprPtr make_or(std::vector<ExprPtr> kids) {
    if (kids.empty()) return make_const(false);
    if (kids.size() == 1) return kids[0];
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Or;
    e->kids = std::move(kids);
    return e;
}

bool eval(const Expr& e, const Config& x) {
    switch (e.kind) {
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Var:
        if (e.var >= x.n)
            throw InputError("variable index " + std::to_string(e.var + 1) +
                             " out of range for dimension " + std::to_string(x.n));
        return x.get(e.var);
    case Expr::Kind::Not: return !eval(*e.kids[0], x);
    case Expr::Kind::And:
        for (const auto& k : e.kids)
            if (!eval(*k, x)) return false;
        return true;
    case Expr::Kind::Or:
        for (const auto& k : e.kids)
            if (eval(*k, x)) return true;
        return false;
    }
    throw Error("unreachable expression kind");
}

bool eval(const ExprPtr& e, const Config& x) { return eval(*e, x); }

std::uint32_t support(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Const: return 0;
    case Expr::Kind::Var: return 1u << e.var;
    default: {
        std::uint32_t m = 0;
        for (const auto& k : e.kids) m |= support(*k);
        return m;
    }
    }
}

ExprPtr substitute(const ExprPtr& e, const std::vector<ExprPtr>& map) {
    switch (e->kind) {
    case Expr::Kind::Const: return e;
    case Expr::Kind::Var:
        if (e->var < static_cast<int>(map.size()) && map[e->var]) return map[e->var];
        return e;
    case Expr::Kind::Not: return make_not(substitute(e->kids[0], map));
    case Expr::Kind::And:
    case Expr::Kind::Or: {
        std::vector<ExprPtr> kids;
        kids.reserve(e->kids.size());
        for (const auto& k : e->kids) kids.push_back(substitute(k, map));
        return e->kind == Expr::Kind::And ? make_and(std::move(kids))
                                          : make_or(std::move(kids));
    }
    }
    throw Error("unreachable expression kind");
}

namespace {

// Precedence levels for printing: Or=0, And=1, Not/atom=2.
int prec(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Or: return 0;
    case Expr::Kind::And: return 1;
    default: return 2;
    }
}

void print(const Expr& e, const std::vector<std::string>& names, int parent,
           std::string& out) {
    int p = prec(e);
    bool need = p < parent;
    if (need) out += '(';
    switch (e.kind) {
    case Expr::Kind::Const: out += e.value ? '1' : '0'; break;
    case Expr::Kind::Var:
        if (e.var >= static_cast<int>(names.size()))
            throw InputError("variable index " + std::to_string(e.var + 1) +
                             " has no name");
        out += names[e.var];
        break;
    case Expr::Kind::Not:
        out += '!';
        print(*e.kids[0], names, 2, out);
        break;
    case Expr::Kind::And:
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
            if (i) out += " & ";
            print(*e.kids[i], names, 2, out);
        }
        break;
    case Expr::Kind::Or:
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
            if (i) out += " | ";
            print(*e.kids[i], names, 1, out);
        }
        break;
    }
    if (need) out += ')';
}

struct Token {
    enum class Kind { Ident, Const, Not, And, Or, LParen, RParen, End };
    Kind kind;
    std::string text;
    bool value = false;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= s_.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        char c = s_[pos_];
        if (c == '!') { advance(); t.kind = Token::Kind::Not; return t; }
        if (c == '&') { advance(); t.kind = Token::Kind::And; return t; }
        if (c == '|') { advance(); t.kind = Token::Kind::Or; return t; }
        if (c == '(') { advance(); t.kind = Token::Kind::LParen; return t; }
        if (c == ')') { advance(); t.kind = Token::Kind::RParen; return t; }
        if (c == '0' || c == '1') {
            advance();
            t.kind = Token::Kind::Const;
            t.value = c == '1';
            return t;
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                id += s_[pos_];
                advance();
            }
            t.kind = Token::Kind::Ident;
            t.text = std::move(id);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

  private:
    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }
    void skip() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& names)
        : lex_(text) {
        for (std::size_t i = 0; i < names.size(); ++i)
            index_[names[i]] = static_cast<int>(i);
        cur_ = lex_.next();
    }

    ExprPtr parse() {
        ExprPtr e = parse_or();
        if (cur_.kind != Token::Kind::End)
            throw ParseError("unexpected trailing input", cur_.line, cur_.col);
        return e;
    }

  private:
    ExprPtr parse_or() {
        std::vector<ExprPtr> kids{parse_and()};
        while (cur_.kind == Token::Kind::Or) {
            cur_ = lex_.next();
            kids.push_back(parse_and());
        }
        return make_or(std::move(kids));
    }
    ExprPtr parse_and() {
        std::vector<ExprPtr> kids{parse_unary()};
        while (cur_.kind == Token::Kind::And) {
            cur_ = lex_.next();
            kids.push_back(parse_unary());
        }
        return make_and(std::move(kids));
    }
    ExprPtr parse_unary() {
        if (cur_.kind == Token::Kind::Not) {
            cur_ = lex_.next();
            return make_not(parse_unary());
        }
        return parse_atom();
    }
    ExprPtr parse_atom() {
        switch (cur_.kind) {
        case Token::Kind::Const: {
            bool v = cur_.value;
            cur_ = lex_.next();
            return make_const(v);
        }
        case Token::Kind::Ident: {
            auto it = index_.find(cur_.text);
            if (it == index_.end())
                throw ParseError("unknown identifier \"" + cur_.text + "\"",
                                 cur_.line, cur_.col);
            cur_ = lex_.next();
            return make_var(it->second);
        }
        case Token::Kind::LParen: {
            cur_ = lex_.next();
            ExprPtr e = parse_or();
            if (cur_.kind != Token::Kind::RParen)
                throw ParseError("expected ')'", cur_.line, cur_.col);
            cur_ = lex_.next();
            return e;
        }
        default:
            throw ParseError("expected expression", cur_.line, cur_.col);
        }
    }

    Lexer lex_;
    Token cur_{Token::Kind::End, "", false, 1, 1};
    std::unordered_map<std::string, int> index_;
};

} // namespace

std::string to_string(const Expr& e, const std::vector<std::string>& names) {
    std::string out;
    print(e, names, 0, out);
    return out;
}

ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

} // namespace bnconcur
