#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nnasp/ast.hpp"
#include "nnasp/semantics.hpp"
#include "nnasp/translate.hpp"

namespace nnasp::testkit {

enum class GenClass { Negative, Horn, PositiveHorn, PositiveNonHorn, NnpRule, DnpRule, NpRule, NotFree };

const char* to_string(GenClass c);
GenClass gen_class_from(const std::string& name);  // throws Error(Syntax) on unknown names

struct GenConfig {
    GenClass target = GenClass::PositiveHorn;
    std::uint64_t seed = 0;
    std::size_t atom_count = 4;
    std::size_t max_depth = 3;
    std::size_t max_width = 3;
    std::size_t rule_count = 3;
    bool extended = true;     // classically negated literals
    bool defaults = true;     // default literals (ignored for NotFree)
    bool constraints = true;  // bot as a positive head item
    // Head literals keep one sign per atom, so programs are head-consistent.
    bool head_consistent = false;
};

std::string atom_name(std::size_t i);

class Generator {
public:
    explicit Generator(const GenConfig& cfg);

    Expr negative(std::size_t depth);
    Expr horn(std::size_t depth);
    Expr positive_horn(std::size_t depth);
    Expr positive_non_horn(std::size_t depth);
    Expr body(std::size_t depth);
    Rule nnp_rule();
    Rule dnp_rule();
    Rule np_rule();
    Program program();

private:
    GenConfig cfg_;
    std::mt19937_64 rng_;
    std::vector<bool> head_sign_;

    std::size_t pick(std::size_t n);
    bool chance(double p);
    Literal literal();
    Literal head_literal();
    std::size_t width();
    Expr negative_leaf();
    Expr positive_leaf();
};

// Expression for the expression classes, a single-rule program for the rule
// classes, and a program for NotFree.
Expr gen_expr(const GenConfig& cfg);
Rule gen_rule(const GenConfig& cfg);
Program gen_program(const GenConfig& cfg);

// Oracles below share no evaluation code with the engine.

// Truth of an expression: an overlined literal holds when the literal does not,
// an overlined constant keeps its own value.
bool oracle_holds(const Expr& e, const Interpretation& i);
bool oracle_model(const Program& p, const Interpretation& i);

std::vector<Interpretation> brute_models(const Expr& e, const std::vector<Literal>& universe, std::size_t bound = 14);
std::vector<Interpretation> brute_models(const Program& p, const std::vector<Literal>& universe,
                                         std::size_t bound = 14);
// Least model of a not-free program by intersecting all models; nullopt when none.
std::optional<Interpretation> brute_least_model(const Program& p, std::size_t bound = 14);

struct PropagationResult {
    Interpretation units;
    bool conflict = false;
};

// Flat clauses of literals, overlined literals and bot.
PropagationResult classical_unit_propagation(const Expr& cnf);

// Classical immediate consequences; nullopt stands for bot.
std::set<HeadItem> textbook_tp(const NormalProgram& p, const Interpretation& i);
std::vector<Interpretation> gl_reference_answer_sets(const NormalProgram& p, std::size_t bound = 14);
// Any program: I is kept when it is a minimal model of the program with defaults read at I.
std::vector<Interpretation> brute_answer_sets(const Program& p, std::size_t bound = 14);

}  // namespace nnasp::testkit
