#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nnasp/ast.hpp"
#include "nnasp/semantics.hpp"

namespace nnasp {

enum class StepRule { NUR, NHUR, OrBot, AndBot, Unwrap, Splice };

const char* to_string(StepRule r);
bool is_simplification(StepRule r);

struct TraceStep {
    StepRule rule;
    std::optional<Literal> literal;
    std::optional<Handle> path;  // absent when paths are not recorded
    std::size_t size_after = 0;  // live literal leaves
};

struct DerivationTrace {
    std::vector<TraceStep> steps;

    std::size_t count(StepRule r) const;
    std::size_t resolution_steps() const;
    std::size_t simplification_steps() const;
};

class HornWork;

struct UrOptions {
    bool record_paths = true;
    std::function<void(const HornWork&, const TraceStep&)> observer;
};

struct UrResult {
    bool consistent = true;
    std::vector<Literal> model;  // order of the final expression
    DerivationTrace trace;
    Expr final_expr;
    std::size_t initial_leaves = 0;
    std::size_t initial_connectives = 0;
    std::size_t initial_bot_leaves = 0;

    Interpretation model_set() const { return {model.begin(), model.end()}; }
};

UrResult ur_least_model(HornWork w, const UrOptions& opts = {});

// Scope of an overlined occurrence: the child of the nearest disjunction above it
// reached through conjunctions only, and the other disjuncts.
struct Scope {
    bool top_level = false;
    Handle delta;
    std::vector<Handle> sigma;
};

// Mutable working expression for the unit-resolution calculus. Overlined literals
// are the negated occurrences; real negative literals stay ordinary literals.
class HornWork {
public:
    explicit HornWork(const Expr& e);

    Expr expr() const;
    bool is_bot() const;
    std::size_t literal_count() const { return live_literals_; }
    std::size_t leaf_count() const;
    std::size_t connective_count() const;

    // Literal leaves that are conjuncts of the root, or the root itself, in expression order.
    std::vector<Literal> top_level_units() const;
    bool is_top_level_unit(Literal l) const;
    // Overlined occurrences of l in document order.
    std::vector<Handle> occurrences(Literal l) const;

    Scope neg_scope(const Handle& occ) const;

    // One rule application each; no simplification afterwards.
    void apply_nur(Literal unit, const Handle& occ);
    void apply_nhur(const std::vector<Literal>& units);
    // Leftmost-innermost simplification; false when none applies.
    bool simplify_step();
    // Simplify bottom-up until no rule applies.
    void normalize();

    DerivationTrace trace;
    bool record_paths = true;
    std::function<void(const HornWork&, const TraceStep&)> observer;

private:
    friend UrResult ur_least_model(HornWork w, const UrOptions& opts);

    struct Node {
        NodeKind kind = NodeKind::Elem;
        Elementary elem{};
        int parent = -1;
        std::vector<int> kids;
        bool alive = true;
    };

    std::vector<Node> nodes_;
    int root_ = -1;
    std::size_t live_literals_ = 0;
    std::vector<int> fresh_units_;
    std::map<Literal, std::vector<int>> occ_index_;

    int build(const Expr& e, int parent);
    Expr export_node(int id) const;
    bool is_false(int id) const;
    bool is_literal_leaf(int id) const;
    Handle path_of(int id) const;
    int resolve(const Handle& h) const;
    std::size_t index_in_parent(int id) const;
    void kill(int id);
    void replace(int id, int with);
    void note_top_level(int id);
    int scope_of(int leaf) const;  // -1 for top level
    void remove_scope(int leaf);
    void record(StepRule r, std::optional<Literal> l, int at);
    void record_path(StepRule r, std::optional<Literal> l, std::optional<Handle> path);
    // Applies one rule at n. Returns the node that now stands in n's place, or -1.
    int apply_local(int n, bool& applied);
    void settle(int start);
    std::vector<int> post_order() const;
};

// Working form of a not-free program: per rule the head, or head v shifted body.
Expr horn_expression(const Program& p);
HornWork to_horn_expression(const Program& p);

UrResult ur_least_model(const Program& p, const UrOptions& opts = {});

}  // namespace nnasp
