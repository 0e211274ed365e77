#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nnasp/ast.hpp"
#include "nnasp/delta.hpp"

namespace nnasp {

using Interpretation = std::set<Literal>;

bool is_consistent(const Interpretation& i);
Interpretation parse_interpretation(std::string_view text);  // "a, -b, c"
std::string to_string(const Interpretation& i);
std::string to_string(const std::vector<Literal>& ordered);

// Body-position truth; throws Position on an overlined leaf.
bool satisfies(const Interpretation& i, const Expr& body);
// Head-position truth: an overlined literal holds when the literal does not,
// an overlined constant keeps its own value.
bool satisfies_head(const Interpretation& i, const Expr& head);
bool satisfies(const Interpretation& i, const Rule& r);
bool satisfies(const Interpretation& i, const Program& p);

// Falsification through the body image; falsifies_direct is the leafwise definition.
bool falsifies(const Interpretation& i, const Expr& e);
bool falsifies_direct(const Interpretation& i, const Expr& e);

// Model check through the (h v delta) pairs; throws NotNNP.
bool satisfies_rule(const Interpretation& i, const Rule& r);

struct ReductPair {
    HeadItem h;
    Expr delta;
    friend bool operator==(const ReductPair&, const ReductPair&) = default;
};

struct ReductRule {
    Expr body;
    std::vector<ReductPair> pairs;
};

struct ReductProgram {
    std::vector<ReductRule> rules;
    Program to_program() const;
};

// Pairs computed once; defaults still present. reduct() specialises it to an interpretation.
struct PreparedProgram {
    std::vector<ReductRule> rules;
};

PreparedProgram prepare(const Program& p);  // throws NotNNP
ReductProgram reduct(const PreparedProgram& p, const Interpretation& i);
ReductProgram reduct(const Program& p, const Interpretation& i);
// Not-free program as pairs; throws NotNotFree.
ReductProgram as_reduct(const Program& p);

bool is_closed(const Interpretation& i, const Program& p);
bool is_supported(const Interpretation& i, const Program& p);

// Heads whose body holds and whose delta is falsified; nullopt stands for bot.
std::set<HeadItem> nt_step(const ReductProgram& p, const Interpretation& i);

// Iterates nt_step from the empty set. When order is given it receives the
// literals in derivation order.
Interpretation least_model_fixpoint(const ReductProgram& p, std::vector<Literal>* order = nullptr);
Interpretation least_model_fixpoint(const Program& p, std::vector<Literal>* order = nullptr);

// Consistent subsets of the universe, by cardinality then canonical order.
std::vector<Interpretation> consistent_subsets(const std::vector<Literal>& universe);

std::vector<Interpretation> minimal_models(const Program& p, const std::vector<Literal>& universe,
                                           std::size_t max_universe = 20);
std::vector<Interpretation> minimal_models(const Program& p);

struct AnswerSetOptions {
    std::size_t max_universe = 20;
    bool all = true;
};

std::vector<Interpretation> answer_sets(const Program& p, const AnswerSetOptions& opts = {});

// Leaf reduct of any program: defaults, plain or overlined, become constants.
Expr reduce_defaults(const Expr& e, const Interpretation& i);
Program reduce_defaults(const Program& p, const Interpretation& i);

struct EquivalenceResult {
    bool equivalent = true;
    std::optional<std::pair<Interpretation, Interpretation>> witness;  // (I, J)
};

EquivalenceResult strongly_equivalent(const Program& a, const Program& b, std::size_t max_atoms = 6);
EquivalenceResult strongly_equivalent(const Program& a, const Program& b, const std::vector<Literal>& universe);

}  // namespace nnasp
