#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nnasp {

enum class ErrorKind {
    Syntax,
    Position,
    NotPositiveHorn,
    BadHandle,
    NotNNP,
    InconsistentResult,
    ConstraintFired,
    UniverseTooLarge,
    SizeBudgetExceeded,
    NotSN,
    NotNFNP,
    NotSplittable,
    NotApplicable,
    NoUnit,
    NotCNF,
    NotNotFree,
    Io,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, int line = 0, int column = 0);
    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

// Interned atom; ids follow first-seen order, which is the canonical order.
struct Atom {
    std::uint32_t id = 0;

    static Atom intern(std::string_view name);
    const std::string& name() const;

    friend auto operator<=>(Atom, Atom) = default;
};

struct Literal {
    Atom atom;
    bool negated = false;

    Literal complement() const { return {atom, !negated}; }
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

Literal lit(std::string_view text);  // "a" or "-a"
std::string to_string(Literal l);

enum class ElemKind : std::uint8_t { Top, Bot, Lit, Default };

struct Elementary {
    ElemKind kind = ElemKind::Top;
    Literal literal{};

    static Elementary top() { return {ElemKind::Top, {}}; }
    static Elementary bot() { return {ElemKind::Bot, {}}; }
    static Elementary of(Literal l) { return {ElemKind::Lit, l}; }
    static Elementary naf(Literal l) { return {ElemKind::Default, l}; }

    bool is_constant() const { return kind == ElemKind::Top || kind == ElemKind::Bot; }
    friend bool operator==(const Elementary& a, const Elementary& b) {
        if (a.kind != b.kind) return false;
        return a.is_constant() || a.literal == b.literal;
    }
};

std::string to_string(const Elementary& e);

enum class NodeKind : std::uint8_t { Elem, Over, And, Or };

struct Expr {
    NodeKind kind = NodeKind::Elem;
    Elementary elem{};
    std::vector<Expr> kids;

    static Expr of(Elementary e) { return {NodeKind::Elem, e, {}}; }
    static Expr over(Elementary e) { return {NodeKind::Over, e, {}}; }
    static Expr top() { return of(Elementary::top()); }
    static Expr bot() { return of(Elementary::bot()); }
    static Expr literal(Literal l) { return of(Elementary::of(l)); }
    static Expr conj(std::vector<Expr> kids) { return {NodeKind::And, {}, std::move(kids)}; }
    static Expr disj(std::vector<Expr> kids) { return {NodeKind::Or, {}, std::move(kids)}; }

    bool is_leaf() const { return kind == NodeKind::Elem || kind == NodeKind::Over; }
    bool is_connective() const { return !is_leaf(); }
    bool is(ElemKind k) const { return kind == NodeKind::Elem && elem.kind == k; }
    bool is_top() const { return is(ElemKind::Top); }
    bool is_bot() const { return is(ElemKind::Bot); }

    friend bool operator==(const Expr& a, const Expr& b);
};

struct Rule {
    Expr head;
    Expr body = Expr::top();
    friend bool operator==(const Rule&, const Rule&) = default;
};

struct Program {
    std::vector<Rule> rules;

    // Atoms occurring in the rules, in canonical order.
    std::vector<Atom> base() const;
    friend bool operator==(const Program&, const Program&) = default;
};

// Path of child indices from an expression root; identifies one occurrence.
struct Handle {
    std::vector<std::size_t> path;
    friend auto operator<=>(const Handle&, const Handle&) = default;
};

std::string to_string(const Handle& h);

// Throws BadHandle when the path does not resolve.
const Expr& at(const Expr& root, const Handle& h);

std::vector<std::pair<Handle, Expr>> subexpressions(const Expr& e);

enum class Side { Body, Head };

// Constant propagation. In heads a positive bot inside a disjunction is kept
// since it marks a constraint; overlined constants are read as falsified (bot)
// or never falsified (top).
Expr simplify_constants(const Expr& e, Side side = Side::Body);

// Occurring literals (from Lit, Default and Over leaves) in canonical order.
std::vector<Literal> literals_of(const Expr& e);
std::vector<Literal> literals_of(const Program& p);

bool has_default(const Expr& e);
std::size_t leaf_count(const Expr& e);
std::size_t connective_count(const Expr& e);
std::size_t node_count(const Expr& e);

// Parsing. parse_expr performs no position checks; parse_head/parse_body do.
Program parse(std::string_view text);
Expr parse_expr(std::string_view text);
Expr parse_head(std::string_view text);
Expr parse_body(std::string_view text);
Rule parse_rule(std::string_view text);
Program parse_file(const std::string& path);

void check_head(const Expr& e);
void check_body(const Expr& e);

enum class Format { Text, Json };

std::string render(const Expr& e, Format f = Format::Text);
std::string render(const Rule& r, Format f = Format::Text);
std::string render(const Program& p, Format f = Format::Text);

Program program_from_json(std::string_view json_text);

}  // namespace nnasp
