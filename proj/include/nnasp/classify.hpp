#pragma once

#include <string>
#include <vector>

#include "nnasp/ast.hpp"

namespace nnasp {

struct ExprClass {
    bool negative = false;
    bool horn = false;
    bool positive_horn = false;
    bool positive_non_horn = false;
    bool flat_cnf = false;
    bool flat_dnf = false;
    bool atom_only = false;
};

// One post-order pass. When visits is given it receives the number of nodes visited.
ExprClass classify_expr(const Expr& e, std::size_t* visits = nullptr);

bool is_negative(const Expr& e);
bool is_horn(const Expr& e);
bool is_positive_horn(const Expr& e);
bool is_positive_non_horn(const Expr& e);

enum class RuleKind { NNP, DNP, OtherHead };

const char* to_string(RuleKind k);

struct RuleClass {
    RuleKind kind = RuleKind::OtherHead;
    bool extended = false;
    bool flat = false;
    bool is_fact = false;
    bool contains_fact = false;
    bool is_constraint = false;
    bool contains_constraint = false;
    bool is_not_free = false;
    bool partially_not_free = false;
    std::vector<std::string> diagnostics;
};

RuleClass classify_rule(const Rule& r);

struct HeadConsistency {
    bool consistent = true;
    std::vector<Literal> head_literals;  // positive head occurrences other than bot, deduplicated
    std::vector<Literal> clashes;        // literals whose complement also occurs
};

HeadConsistency head_consistency(const Program& p);
bool is_head_consistent(const Program& p);

bool is_nnp(const Program& p);
bool is_not_free(const Program& p);

}  // namespace nnasp
