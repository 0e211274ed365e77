#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "nnasp/ast.hpp"
#include "nnasp/delta.hpp"

namespace nnasp {

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

// Flat forms as lists of leaves; constants are removed first.
using Term = std::vector<Expr>;
std::vector<Term> dnf_terms(const Expr& e, std::size_t budget = kDefaultNodeBudget);
std::vector<Term> cnf_clauses(const Expr& e, std::size_t budget = kDefaultNodeBudget);
Expr dnf(const Expr& e, std::size_t budget = kDefaultNodeBudget);
Expr cnf(const Expr& e, std::size_t budget = kDefaultNodeBudget);

// Classical rule: a literal or bot as head, a conjunction of literals and defaults as body.
struct NormalRule {
    HeadItem head;
    std::vector<Elementary> body;
    Rule to_rule() const;
};

struct NormalProgram {
    std::vector<NormalRule> rules;

    Program to_program() const;
    // Rules with sorted bodies, rendered; order and duplicates ignored.
    std::set<std::string> canonical() const;
};

NormalProgram sn_of(const Program& p);
NormalProgram fn_of(const Program& p, std::size_t budget = kDefaultNodeBudget);
NormalProgram nn_of(const Program& p, std::size_t budget = kDefaultNodeBudget);
NormalProgram nn1_of(const Program& p, std::size_t budget = kDefaultNodeBudget);

// Choice of one positive disjunct at every non-Horn disjunction; programs in
// leftmost-choice-first order, deduplicated.
std::vector<Program> split_dnp(const Program& p, std::size_t max_programs = 10'000);

enum class Law { SplitConjHead, SplitDisjBody, Shift };

const char* to_string(Law l);
std::vector<Rule> rewrite_rule(const Rule& r, Law law);
// Rules sharing a body become one rule with a conjunctive head; rules sharing a
// head become one rule with a disjunctive body.
Rule merge_rules(const std::vector<Rule>& rules);

struct Succinctness {
    std::size_t literal_occurrences = 0;
    std::size_t connectives = 0;
    std::uint64_t np_rules = 0;  // counted from the term structure, saturating
    bool np_built = false;       // false when the translation exceeded the budget
    std::size_t np_literal_occurrences = 0;
    std::size_t np_connectives = 0;
};

std::size_t literal_occurrences(const Program& p);
std::size_t connectives(const Program& p);
Succinctness succinctness_report(const Program& p, std::size_t budget = kDefaultNodeBudget);

}  // namespace nnasp
