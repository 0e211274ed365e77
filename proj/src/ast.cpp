#include "nnasp/ast.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace nnasp {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::Position: return "PositionError";
        case ErrorKind::NotPositiveHorn: return "NotPositiveHorn";
        case ErrorKind::BadHandle: return "BadHandle";
        case ErrorKind::NotNNP: return "NotNNP";
        case ErrorKind::InconsistentResult: return "InconsistentResult";
        case ErrorKind::ConstraintFired: return "ConstraintFired";
        case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
        case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
        case ErrorKind::NotSN: return "NotSN";
        case ErrorKind::NotNFNP: return "NotNFNP";
        case ErrorKind::NotSplittable: return "NotSplittable";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::NoUnit: return "NoUnit";
        case ErrorKind::NotCNF: return "NotCNF";
        case ErrorKind::NotNotFree: return "NotNotFree";
        case ErrorKind::Io: return "IoError";
    }
    return "Error";
}

static std::string located(const std::string& what, int line, int column) {
    if (line == 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
}

Error::Error(ErrorKind kind, const std::string& what, int line, int column)
    : std::runtime_error(located(what, line, column)), kind_(kind), line_(line), column_(column) {}

namespace {

struct AtomTable {
    std::mutex mu;
    std::deque<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

AtomTable& atom_table() {
    static AtomTable t;
    return t;
}

}  // namespace

Atom Atom::intern(std::string_view name) {
    auto& t = atom_table();
    std::lock_guard lock(t.mu);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return Atom{it->second};
    auto id = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(std::string(name), id);
    return Atom{id};
}

const std::string& Atom::name() const {
    auto& t = atom_table();
    std::lock_guard lock(t.mu);
    return t.names.at(id);
}

Literal lit(std::string_view text) {
    bool neg = !text.empty() && text.front() == '-';
    if (neg) text.remove_prefix(1);
    if (text.empty()) throw Error(ErrorKind::Syntax, "empty literal");
    return {Atom::intern(text), neg};
}

std::string to_string(Literal l) { return (l.negated ? "-" : "") + l.atom.name(); }

std::string to_string(const Elementary& e) {
    switch (e.kind) {
        case ElemKind::Top: return "top";
        case ElemKind::Bot: return "bot";
        case ElemKind::Lit: return to_string(e.literal);
        case ElemKind::Default: return "not " + to_string(e.literal);
    }
    return "?";
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    if (a.is_leaf()) return a.elem == b.elem;
    return a.kids == b.kids;
}

std::vector<Atom> Program::base() const {
    std::set<Atom> atoms;
    for (auto l : literals_of(*this)) atoms.insert(l.atom);
    return {atoms.begin(), atoms.end()};
}

std::string to_string(const Handle& h) {
    std::string s = "[";
    for (std::size_t i = 0; i < h.path.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(h.path[i]);
    }
    return s + "]";
}

const Expr& at(const Expr& root, const Handle& h) {
    const Expr* cur = &root;
    for (auto i : h.path) {
        if (cur->is_leaf() || i >= cur->kids.size())
            throw Error(ErrorKind::BadHandle, "handle " + to_string(h) + " does not resolve");
        cur = &cur->kids[i];
    }
    return *cur;
}

static void collect_subexpressions(const Expr& e, Handle& h, std::vector<std::pair<Handle, Expr>>& out) {
    out.emplace_back(h, e);
    for (std::size_t i = 0; i < e.kids.size(); ++i) {
        h.path.push_back(i);
        collect_subexpressions(e.kids[i], h, out);
        h.path.pop_back();
    }
}

std::vector<std::pair<Handle, Expr>> subexpressions(const Expr& e) {
    std::vector<std::pair<Handle, Expr>> out;
    Handle h;
    collect_subexpressions(e, h, out);
    return out;
}

// ---- constants ----

namespace {

// Truth reading of a simplified node if it is a constant.
std::optional<bool> constant_value(const Expr& e) {
    if (!e.is_leaf() || !e.elem.is_constant()) return std::nullopt;
    return e.elem.kind == ElemKind::Top;
}

Expr constant(bool value, bool overlined) {
    auto c = value ? Elementary::top() : Elementary::bot();
    return overlined ? Expr::over(c) : Expr::of(c);
}

Expr simplify(const Expr& e, Side side) {
    if (e.is_leaf()) return e;
    bool is_and = e.kind == NodeKind::And;
    bool head = side == Side::Head;
    // a child equal to this value decides the whole node
    bool absorbing = !is_and;
    std::vector<Expr> kids;
    bool absorbed = false, absorbed_positive = false;
    bool dropped = false, dropped_positive = false;
    for (const auto& k : e.kids) {
        Expr s = simplify(k, side);
        auto v = constant_value(s);
        bool positive = s.kind == NodeKind::Elem;
        if (v && *v == absorbing) {
            absorbed = true;
            absorbed_positive = absorbed_positive || positive;
        } else if (v && !(head && !is_and && positive)) {
            dropped = true;
            dropped_positive = dropped_positive || positive;
        } else {
            kids.push_back(std::move(s));
        }
    }
    if (absorbed) return constant(absorbing, head && !absorbed_positive);
    if (kids.empty()) return constant(is_and, head && dropped && !dropped_positive);
    if (kids.size() == 1) return std::move(kids.front());
    return Expr{e.kind, {}, std::move(kids)};
}

}  // namespace

Expr simplify_constants(const Expr& e, Side side) { return simplify(e, side); }

static void collect_literals(const Expr& e, std::set<Literal>& out) {
    if (e.is_leaf()) {
        if (!e.elem.is_constant()) out.insert(e.elem.literal);
        return;
    }
    for (const auto& k : e.kids) collect_literals(k, out);
}

std::vector<Literal> literals_of(const Expr& e) {
    std::set<Literal> s;
    collect_literals(e, s);
    return {s.begin(), s.end()};
}

std::vector<Literal> literals_of(const Program& p) {
    std::set<Literal> s;
    for (const auto& r : p.rules) {
        collect_literals(r.head, s);
        collect_literals(r.body, s);
    }
    return {s.begin(), s.end()};
}

bool has_default(const Expr& e) {
    if (e.is_leaf()) return e.elem.kind == ElemKind::Default;
    return std::any_of(e.kids.begin(), e.kids.end(), [](const Expr& k) { return has_default(k); });
}

std::size_t leaf_count(const Expr& e) {
    if (e.is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& k : e.kids) n += leaf_count(k);
    return n;
}

std::size_t connective_count(const Expr& e) {
    if (e.is_leaf()) return 0;
    std::size_t n = 1;
    for (const auto& k : e.kids) n += connective_count(k);
    return n;
}

std::size_t node_count(const Expr& e) { return leaf_count(e) + connective_count(e); }

// ---- parsing ----

namespace {

enum class Tok { Ident, Minus, Tilde, LBrack, RBrack, LParen, RParen, Comma, Arrow, Dot, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip();
            int l = line_, c = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", l, c});
                return out;
            }
            char ch = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    advance();
                out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), l, c});
                continue;
            }
            if (ch == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                advance();
                advance();
                out.push_back({Tok::Arrow, "<-", l, c});
                continue;
            }
            Tok k;
            switch (ch) {
                case '-': k = Tok::Minus; break;
                case '~': k = Tok::Tilde; break;
                case '[': k = Tok::LBrack; break;
                case ']': k = Tok::RBrack; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case ',': k = Tok::Comma; break;
                case '.': k = Tok::Dot; break;
                default: throw Error(ErrorKind::Syntax, std::string("unexpected character '") + ch + "'", l, c);
            }
            advance();
            out.push_back({k, std::string(1, ch), l, c});
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip() {
        while (pos_ < src_.size()) {
            char ch = src_[pos_];
            if (ch == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool is_keyword(const std::string& s) {
    return s == "and" || s == "or" || s == "not" || s == "top" || s == "bot";
}

enum class Mode { Free, Head, Body };

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

    Program program() {
        Program p;
        while (peek().kind != Tok::End) p.rules.push_back(rule());
        return p;
    }

    Rule rule() {
        Rule r;
        r.head = expr(Mode::Head);
        if (peek().kind == Tok::Arrow) {
            next();
            r.body = expr(Mode::Body);
        }
        expect(Tok::Dot, "'.'");
        return r;
    }

    Expr whole(Mode m) {
        Expr e = expr(m);
        if (peek().kind == Tok::Dot) next();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw Error(ErrorKind::Syntax, msg + ", found " + found, t.line, t.column);
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(peek(), std::string("expected ") + what);
        next();
    }

    Expr expr(Mode m) {
        const Token& t = peek();
        if (t.kind == Tok::Ident && t.text == "and") {
            next();
            expect(Tok::LBrack, "'['");
            return Expr::conj(list(Tok::RBrack, m));
        }
        if (t.kind == Tok::Ident && t.text == "or") {
            next();
            expect(Tok::LParen, "'('");
            return Expr::disj(list(Tok::RParen, m));
        }
        if (t.kind == Tok::Tilde) {
            next();
            Elementary inner = elementary();
            if (m == Mode::Body) throw Error(ErrorKind::Position, "overline in a body", t.line, t.column);
            return Expr::over(inner);
        }
        Elementary e = elementary();
        if (m == Mode::Head && e.kind == ElemKind::Default)
            throw Error(ErrorKind::Position, "default literal in a head must be overlined", t.line, t.column);
        if (m == Mode::Body && e.kind == ElemKind::Bot)
            throw Error(ErrorKind::Position, "bot in a body", t.line, t.column);
        return Expr::of(e);
    }

    std::vector<Expr> list(Tok close, Mode m) {
        std::vector<Expr> kids;
        if (peek().kind == close) {
            next();
            return kids;
        }
        for (;;) {
            kids.push_back(expr(m));
            if (peek().kind == Tok::Comma) {
                next();
                continue;
            }
            expect(close, close == Tok::RBrack ? "',' or ']'" : "',' or ')'");
            return kids;
        }
    }

    Elementary elementary() {
        const Token& t = peek();
        if (t.kind == Tok::Ident && t.text == "top") {
            next();
            return Elementary::top();
        }
        if (t.kind == Tok::Ident && t.text == "bot") {
            next();
            return Elementary::bot();
        }
        if (t.kind == Tok::Ident && t.text == "not") {
            next();
            return Elementary::naf(literal());
        }
        return Elementary::of(literal());
    }

    Literal literal() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            next();
            neg = true;
        }
        const Token& t = peek();
        if (t.kind != Tok::Ident || is_keyword(t.text)) fail(t, "expected a literal");
        next();
        return {Atom::intern(t.text), neg};
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void check(const Expr& e, Side side) {
    if (e.is_leaf()) {
        if (side == Side::Body) {
            if (e.kind == NodeKind::Over) throw Error(ErrorKind::Position, "overline in a body");
            if (e.is_bot()) throw Error(ErrorKind::Position, "bot in a body");
        } else if (e.kind == NodeKind::Elem && e.elem.kind == ElemKind::Default) {
            throw Error(ErrorKind::Position, "default literal in a head must be overlined");
        }
        return;
    }
    for (const auto& k : e.kids) check(k, side);
}

}  // namespace

Program parse(std::string_view text) { return Parser(text).program(); }
Expr parse_expr(std::string_view text) { return Parser(text).whole(Mode::Free); }
Expr parse_head(std::string_view text) { return Parser(text).whole(Mode::Head); }
Expr parse_body(std::string_view text) { return Parser(text).whole(Mode::Body); }

Rule parse_rule(std::string_view text) {
    Program p = parse(text);
    if (p.rules.size() != 1) throw Error(ErrorKind::Syntax, "expected exactly one rule");
    return p.rules.front();
}

Program parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
        return program_from_json(text);
    return parse(text);
}

void check_head(const Expr& e) { check(e, Side::Head); }
void check_body(const Expr& e) { check(e, Side::Body); }

// ---- rendering ----

using nlohmann::json;

static json elem_json(const Elementary& e) {
    switch (e.kind) {
        case ElemKind::Top: return json{{"top", true}};
        case ElemKind::Bot: return json{{"bot", true}};
        case ElemKind::Lit:
            if (e.literal.negated) return json{{"lit", to_string(e.literal)}};
            return json{{"atom", e.literal.atom.name()}};
        case ElemKind::Default: return json{{"not", elem_json(Elementary::of(e.literal))}};
    }
    return {};
}

static json expr_json(const Expr& e) {
    switch (e.kind) {
        case NodeKind::Elem: return elem_json(e.elem);
        case NodeKind::Over: return json{{"over", elem_json(e.elem)}};
        case NodeKind::And:
        case NodeKind::Or: {
            json arr = json::array();
            for (const auto& k : e.kids) arr.push_back(expr_json(k));
            return json{{e.kind == NodeKind::And ? "and" : "or", arr}};
        }
    }
    return {};
}

static json rule_json(const Rule& r) { return json{{"head", expr_json(r.head)}, {"body", expr_json(r.body)}}; }

static void render_text(const Expr& e, std::string& out) {
    switch (e.kind) {
        case NodeKind::Elem: out += to_string(e.elem); return;
        case NodeKind::Over: out += "~" + to_string(e.elem); return;
        case NodeKind::And:
        case NodeKind::Or: {
            bool a = e.kind == NodeKind::And;
            out += a ? "and[" : "or(";
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) out += ", ";
                render_text(e.kids[i], out);
            }
            out += a ? "]" : ")";
            return;
        }
    }
}

std::string render(const Expr& e, Format f) {
    if (f == Format::Json) return expr_json(e).dump();
    std::string out;
    render_text(e, out);
    return out;
}

std::string render(const Rule& r, Format f) {
    if (f == Format::Json) return rule_json(r).dump();
    std::string out = render(r.head);
    if (!r.body.is_top()) out += " <- " + render(r.body);
    return out + ".";
}

std::string render(const Program& p, Format f) {
    if (f == Format::Json) {
        json arr = json::array();
        for (const auto& r : p.rules) arr.push_back(rule_json(r));
        return json{{"rules", arr}}.dump();
    }
    std::string out;
    for (const auto& r : p.rules) out += render(r) + "\n";
    return out;
}

static Elementary elem_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw Error(ErrorKind::Syntax, "malformed JSON elementary");
    auto it = j.begin();
    const std::string& tag = it.key();
    if (tag == "top") return Elementary::top();
    if (tag == "bot") return Elementary::bot();
    if (tag == "atom") return Elementary::of(Literal{Atom::intern(it.value().get<std::string>()), false});
    if (tag == "lit") return Elementary::of(lit(it.value().get<std::string>()));
    if (tag == "not") {
        Elementary inner = elem_from_json(it.value());
        if (inner.kind != ElemKind::Lit) throw Error(ErrorKind::Syntax, "'not' must wrap a literal");
        return Elementary::naf(inner.literal);
    }
    throw Error(ErrorKind::Syntax, "unknown JSON tag '" + tag + "'");
}

static Expr expr_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw Error(ErrorKind::Syntax, "malformed JSON expression");
    auto it = j.begin();
    const std::string& tag = it.key();
    if (tag == "and" || tag == "or") {
        std::vector<Expr> kids;
        for (const auto& k : it.value()) kids.push_back(expr_from_json(k));
        return tag == "and" ? Expr::conj(std::move(kids)) : Expr::disj(std::move(kids));
    }
    if (tag == "over") return Expr::over(elem_from_json(it.value()));
    return Expr::of(elem_from_json(j));
}

Program program_from_json(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Syntax, std::string("invalid JSON: ") + e.what());
    }
    const json& rules = j.is_object() && j.contains("rules") ? j["rules"] : j;
    if (!rules.is_array()) throw Error(ErrorKind::Syntax, "expected an array of rules");
    Program p;
    try {
        for (const auto& r : rules) {
            Rule rule;
            rule.head = expr_from_json(r.at("head"));
            rule.body = r.contains("body") ? expr_from_json(r.at("body")) : Expr::top();
            check_head(rule.head);
            check_body(rule.body);
            p.rules.push_back(std::move(rule));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Syntax, std::string("malformed JSON rule: ") + e.what());
    }
    return p;
}

}  // namespace nnasp
