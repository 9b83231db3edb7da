#pragma once

// Text syntax for clique-width expressions:
//
//   expr    := leaf | union | join | recolor
//   leaf    := (v colorset [w= rational])
//   union   := (u expr expr)
//   join    := (j int int expr expr)
//   recolor := (r {rule, ...} expr)      rule := colorset -> colorset
//   colorset:= {int, ...}
//
// Whitespace is insignificant and '#' starts a comment. Parsing and printing
// are iterative, so arbitrarily deep expressions are fine.

#include "tga/error.hpp"
#include "tga/expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tga {

namespace detail {

class ExprLexer {
public:
    enum class Kind { lparen, rparen, lbrace, rbrace, comma, arrow, word, number, end };

    struct Token {
        Kind kind = Kind::end;
        std::string_view text;
        std::size_t line = 1;
        std::size_t column = 1;
    };

    explicit ExprLexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) return t;
        const std::size_t start = pos_;
        const char c = text_[pos_];
        auto single = [&](Kind k) {
            advance();
            t.kind = k;
            t.text = text_.substr(start, 1);
            return t;
        };
        switch (c) {
            case '(': return single(Kind::lparen);
            case ')': return single(Kind::rparen);
            case '{': return single(Kind::lbrace);
            case '}': return single(Kind::rbrace);
            case ',': return single(Kind::comma);
            default: break;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            advance();
            advance();
            t.kind = Kind::arrow;
            t.text = text_.substr(start, 2);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) advance();
            if (pos_ < text_.size() && text_[pos_] == '=') advance();
            t.kind = Kind::word;
            t.text = text_.substr(start, pos_ - start);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            advance();
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (!(std::isdigit(static_cast<unsigned char>(d)) || d == '/' || d == '.')) break;
                advance();
            }
            t.kind = Kind::number;
            t.text = text_.substr(start, pos_ - start);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class ExprParser {
public:
    using Kind = ExprLexer::Kind;
    using Token = ExprLexer::Token;

    ExprParser(std::string_view text, std::optional<int> k) : lex_(text), k_(k.value_or(kMaxColors)) {}

    CwExpr run() {
        std::optional<ExprBuilder::Id> root;
        Token t = lex_.next();
        while (true) {
            if (t.kind == Kind::end) {
                if (!frames_.empty()) fail("unexpected end of input, missing ')'", t);
                if (!root) fail("empty input", t);
                return builder_.build(*root);
            }
            if (root && frames_.empty()) fail("trailing input after expression", t);
            if (t.kind == Kind::lparen) {
                if (!frames_.empty() && frames_.back().children.size() == frames_.back().arity)
                    fail("too many operands", t);
                if (auto leaf = open(t)) attach(*leaf, root);
            } else if (t.kind == Kind::rparen) {
                if (frames_.empty()) fail("unbalanced ')'", t);
                Frame f = std::move(frames_.back());
                frames_.pop_back();
                if (f.children.size() != f.arity) fail("expected " + std::to_string(f.arity) + " operands", t);
                ExprBuilder::Id id = 0;
                if (f.head == 'u') id = builder_.unite(f.children[0], f.children[1]);
                if (f.head == 'j') id = builder_.join(f.i, f.j, f.children[0], f.children[1]);
                if (f.head == 'r') id = builder_.recolor(f.rho, f.children[0]);
                attach(id, root);
            } else {
                fail("expected '(' or ')', found '" + std::string(t.text) + "'", t);
            }
            t = lex_.next();
        }
    }

private:
    struct Frame {
        char head = 0;
        std::size_t arity = 0;
        int i = 0;
        int j = 0;
        Recoloring rho;
        std::vector<ExprBuilder::Id> children;
    };

    [[noreturn]] static void fail(const std::string& what, const Token& t) { throw ParseError(what, t.line, t.column); }

    Token expect(Kind kind, const char* what) {
        Token t = lex_.next();
        if (t.kind != kind) fail(std::string("expected ") + what, t);
        return t;
    }

    int color(const Token& t) {
        int c = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), c);
        if (t.kind != Kind::number || ec != std::errc() || ptr != t.text.data() + t.text.size())
            fail("expected a color, found '" + std::string(t.text) + "'", t);
        if (c < 1 || c > k_) fail("color out of range: " + std::string(t.text), t);
        return c;
    }

    // After '{' has been consumed when `opened`, otherwise reads it.
    ColorSet colorset(bool opened = false) {
        if (!opened) expect(Kind::lbrace, "'{'");
        ColorSet s;
        Token t = lex_.next();
        if (t.kind == Kind::rbrace) return s;
        while (true) {
            s.insert(color(t));
            t = lex_.next();
            if (t.kind == Kind::rbrace) return s;
            if (t.kind != Kind::comma) fail("expected ',' or '}'", t);
            t = lex_.next();
        }
    }

    // Reads the head of a node after '('. Leaves are complete and returned;
    // other heads push a frame.
    std::optional<ExprBuilder::Id> open(const Token& paren) {
        Token head = lex_.next();
        if (head.kind != Kind::word) fail("expected v, u, j or r after '('", head);
        if (head.text == "v") {
            ColorSet c = colorset();
            Token t = lex_.next();
            std::optional<Rational> weight;
            if (t.kind == Kind::word && t.text == "w=") {
                Token num = lex_.next();
                try {
                    if (num.kind != Kind::number) throw std::invalid_argument("not a number");
                    weight = Rational::parse(num.text);
                } catch (const std::exception&) {
                    fail("expected a rational weight", num);
                }
                t = lex_.next();
            }
            if (t.kind != Kind::rparen) fail("expected ')' closing leaf", t);
            return builder_.leaf(c, weight);
        }
        Frame f;
        if (head.text == "u") {
            f.head = 'u';
            f.arity = 2;
        } else if (head.text == "j") {
            f.head = 'j';
            f.arity = 2;
            Token ti = lex_.next();
            f.i = color(ti);
            Token tj = lex_.next();
            f.j = color(tj);
            if (f.i == f.j) fail("join requires distinct colors", tj);
        } else if (head.text == "r") {
            f.head = 'r';
            f.arity = 1;
            expect(Kind::lbrace, "'{' opening recoloring rules");
            std::map<ColorSet, ColorSet> rules;
            Token t = lex_.next();
            while (t.kind != Kind::rbrace) {
                if (t.kind != Kind::lbrace) fail("expected a rule 'colorset -> colorset'", t);
                ColorSet from = colorset(true);
                expect(Kind::arrow, "'->'");
                ColorSet to = colorset();
                if (!rules.emplace(from, to).second) fail("duplicate recoloring rule for " + from.to_string(), t);
                t = lex_.next();
                if (t.kind == Kind::comma) {
                    t = lex_.next();
                } else if (t.kind != Kind::rbrace) {
                    fail("expected ',' or '}'", t);
                }
            }
            f.rho = Recoloring(std::move(rules));
        } else {
            fail("unknown node kind '" + std::string(head.text) + "'", head);
        }
        (void)paren;
        frames_.push_back(std::move(f));
        return std::nullopt;
    }

    void attach(ExprBuilder::Id id, std::optional<ExprBuilder::Id>& root) {
        if (frames_.empty()) {
            root = id;
        } else {
            frames_.back().children.push_back(id);
        }
    }

    ExprLexer lex_;
    int k_;
    ExprBuilder builder_;
    std::vector<Frame> frames_;
};

}  // namespace detail

/// Parses an expression. With k given, colors above k are rejected.
inline CwExpr parse_expr(std::string_view text, std::optional<int> k = std::nullopt) {
    return detail::ExprParser(text, k).run();
}

inline std::string serialize_expr(const CwExpr& e) {
    std::string out;
    // Each entry is a node id plus how many of its children have been printed.
    std::vector<std::pair<std::uint32_t, int>> stack{{e.root(), 0}};
    while (!stack.empty()) {
        auto& [id, done] = stack.back();
        const ExprNode& n = e.node(id);
        if (n.kind == NodeKind::leaf) {
            out += "(v " + n.colors.to_string();
            if (n.weight) out += " w=" + n.weight->to_string();
            out += ')';
            stack.pop_back();
            continue;
        }
        const int arity = n.kind == NodeKind::recolor ? 1 : 2;
        if (done == 0) {
            if (n.kind == NodeKind::unite) out += "(u";
            if (n.kind == NodeKind::join) out += "(j " + std::to_string(n.i) + ' ' + std::to_string(n.j);
            if (n.kind == NodeKind::recolor) {
                out += "(r {";
                bool first = true;
                for (const auto& [from, to] : e.recolorings()[n.rho].rules()) {
                    if (!first) out += ", ";
                    out += from.to_string() + "->" + to.to_string();
                    first = false;
                }
                out += '}';
            }
        }
        if (done == arity) {
            out += ')';
            stack.pop_back();
            continue;
        }
        out += ' ';
        const std::uint32_t child = done == 0 ? n.left : n.right;
        ++done;
        stack.emplace_back(child, 0);
    }
    return out;
}

}  // namespace tga
