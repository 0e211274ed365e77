// Command-line front end. Exit codes: 0 ok, 1 negative or inconsistent result,
// 2 usage or input error, 3 size or universe budget exceeded.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nnasp/calculus.hpp"
#include "nnasp/classify.hpp"
#include "nnasp/delta.hpp"
#include "nnasp/semantics.hpp"
#include "nnasp/testkit.hpp"
#include "nnasp/translate.hpp"

using namespace nnasp;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct Output {
    bool as_json = false;
    json payload;
    std::string text;
    int code = kOk;

    void line(const std::string& s) { text += s + "\n"; }
    int emit(const std::string& command) {
        if (as_json) {
            payload["command"] = command;
            payload["exit_code"] = code;
            std::cout << payload.dump(2) << "\n";
        } else {
            std::cout << text;
        }
        return code;
    }
};

json literal_list(const std::vector<Literal>& ls) {
    json out = json::array();
    for (auto l : ls) out.push_back(to_string(l));
    return out;
}

json literal_list(const Interpretation& i) { return literal_list(std::vector<Literal>(i.begin(), i.end())); }

json program_json(const Program& p) { return json::parse(render(p, Format::Json)); }

std::string trimmed(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

void run_classify(const Program& p, Output& out) {
    out.payload["rules"] = json::array();
    for (const auto& r : p.rules) {
        RuleClass k = classify_rule(r);
        json j{{"rule", render(r)},
               {"kind", to_string(k.kind)},
               {"extended", k.extended},
               {"flat", k.flat},
               {"fact", k.is_fact},
               {"contains_fact", k.contains_fact},
               {"constraint", k.is_constraint},
               {"contains_constraint", k.contains_constraint},
               {"not_free", k.is_not_free},
               {"partially_not_free", k.partially_not_free},
               {"diagnostics", k.diagnostics}};
        out.payload["rules"].push_back(j);
        std::string flags;
        for (auto [name, on] : {std::pair{"extended", k.extended}, {"flat", k.flat}, {"fact", k.is_fact},
                                {"constraint", k.is_constraint}, {"not-free", k.is_not_free},
                                {"partially-not-free", k.partially_not_free}})
            if (on) flags += std::string(" ") + name;
        out.line(render(r) + "  % " + to_string(k.kind) + flags);
        for (const auto& d : k.diagnostics) out.line("  " + d);
    }
    HeadConsistency hc = head_consistency(p);
    out.payload["head_consistent"] = hc.consistent;
    out.payload["clashes"] = literal_list(hc.clashes);
    out.line(std::string("head-consistent: ") + (hc.consistent ? "yes" : "no"));
    if (!hc.consistent) out.line("clashes: " + to_string(hc.clashes));
}

void run_delta(const Program& p, Output& out) {
    out.payload["rules"] = json::array();
    for (const auto& r : p.rules) {
        DeltaDecomposition d = h_delta(r.head);
        json pairs = json::array();
        out.line(render(r));
        for (const auto& pr : d.pairs) {
            pairs.push_back({{"item", to_string(pr.h)}, {"handle", to_string(pr.occurrence)}, {"delta", render(pr.delta)}});
            out.line("  " + to_string(pr.h) + " at " + to_string(pr.occurrence) + ": " + render(pr.delta));
        }
        out.line("  pairs: " + render(d.as_expr()));
        out.payload["rules"].push_back({{"rule", render(r)}, {"pairs", pairs}, {"decomposition", render(d.as_expr())}});
    }
}

void run_lm(const Program& p, const std::string& engine, Output& out) {
    std::vector<Literal> model;
    bool consistent = true;
    if (engine == "ur") {
        UrResult r = ur_least_model(p);
        consistent = r.consistent;
        model = r.model;
    } else {
        try {
            least_model_fixpoint(p, &model);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InconsistentResult && e.kind() != ErrorKind::ConstraintFired) throw;
            consistent = false;
        }
    }
    out.payload["engine"] = engine;
    out.payload["consistent"] = consistent;
    if (consistent) {
        out.payload["model"] = literal_list(model);
        out.line(to_string(model));
    } else {
        out.payload["model"] = nullptr;
        out.line("inconsistent");
        out.code = kNegative;
    }
}

void run_as(const Program& p, bool all, std::size_t max_universe, Output& out) {
    AnswerSetOptions opts;
    opts.all = all;
    opts.max_universe = max_universe;
    auto sets = answer_sets(p, opts);
    out.payload["answer_sets"] = json::array();
    for (const auto& s : sets) {
        out.payload["answer_sets"].push_back(literal_list(s));
        out.line(to_string(s));
    }
    if (sets.empty()) {
        out.line("no answer set");
        out.code = kNegative;
    }
}

void run_translate(const Program& p, const std::string& route, std::size_t budget, Output& out) {
    NormalProgram np = route == "nn1" ? nn1_of(p, budget) : nn_of(p, budget);
    Program q = np.to_program();
    out.payload["route"] = route;
    out.payload["rule_count"] = q.rules.size();
    out.payload["program"] = program_json(q);
    out.text += render(q);
}

void run_split(const Program& p, Output& out) {
    auto parts = split_dnp(p);
    out.payload["programs"] = json::array();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        out.payload["programs"].push_back(program_json(parts[k]));
        out.line("# program " + std::to_string(k + 1));
        out.text += render(parts[k]);
    }
}

void run_equiv(const Program& a, const Program& b, std::size_t max_atoms, Output& out) {
    EquivalenceResult r = strongly_equivalent(a, b, max_atoms);
    out.payload["equivalent"] = r.equivalent;
    if (r.equivalent) {
        out.payload["witness"] = nullptr;
        out.line("equivalent");
        return;
    }
    out.code = kNegative;
    if (r.witness) {
        out.payload["witness"] = {{"I", literal_list(r.witness->first)}, {"J", literal_list(r.witness->second)}};
        out.line("not equivalent: I = " + to_string(r.witness->first) + ", J = " + to_string(r.witness->second));
    } else {
        out.payload["witness"] = nullptr;
        out.line("not equivalent");
    }
}

void run_trace(const Program& p, Output& out) {
    UrResult r = ur_least_model(p);
    out.payload["steps"] = json::array();
    out.line("start: " + render(horn_expression(p)));
    for (const auto& s : r.trace.steps) {
        std::string lit_text = s.literal ? to_string(*s.literal) : "";
        std::string path = s.path ? to_string(*s.path) : "";
        out.payload["steps"].push_back(
            {{"rule", to_string(s.rule)}, {"literal", lit_text}, {"path", path}, {"size_after", s.size_after}});
        out.line(std::string(to_string(s.rule)) + (lit_text.empty() ? "" : " " + lit_text) +
                 (path.empty() ? "" : " at " + path) + "  size " + std::to_string(s.size_after));
    }
    out.payload["resolution_steps"] = r.trace.resolution_steps();
    out.payload["simplification_steps"] = r.trace.simplification_steps();
    out.payload["final"] = render(r.final_expr);
    out.payload["consistent"] = r.consistent;
    out.payload["model"] = r.consistent ? literal_list(r.model) : json(nullptr);
    out.line("final: " + render(r.final_expr));
    out.line(r.consistent ? "model: " + to_string(r.model) : "inconsistent");
    if (!r.consistent) out.code = kNegative;
}

void run_gen(const std::string& cls, std::uint64_t seed, std::size_t atoms, Output& out) {
    testkit::GenConfig c;
    c.target = testkit::gen_class_from(cls);
    c.seed = seed;
    c.atom_count = atoms;
    out.payload["class"] = testkit::to_string(c.target);
    out.payload["seed"] = seed;
    using testkit::GenClass;
    bool expression = c.target == GenClass::Negative || c.target == GenClass::Horn ||
                      c.target == GenClass::PositiveHorn || c.target == GenClass::PositiveNonHorn;
    if (expression) {
        Expr e = testkit::gen_expr(c);
        out.payload["expression"] = render(e);
        out.line(render(e));
    } else {
        Program p = testkit::gen_program(c);
        out.payload["program"] = program_json(p);
        out.text += render(p);
    }
}

int exit_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::SizeBudgetExceeded:
        case ErrorKind::UniverseTooLarge: return kBudget;
        case ErrorKind::InconsistentResult:
        case ErrorKind::ConstraintFired: return kNegative;
        default: return kUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nested normal logic programs: classification, semantics, unit resolution and translation"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.as_json, "Write JSON instead of text");

    std::string file, file_b, engine = "ur", interp, to = "np", route = "nn", cls;
    bool all = false;
    std::size_t max_universe = 20, budget = kDefaultNodeBudget, max_atoms = 6, atoms = 4;
    std::uint64_t seed = 0;

    auto with_file = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Program file")->required();
        return sub;
    };
    auto* classify = with_file("classify", "Classify every rule and check head-consistency");
    auto* delta = with_file("delta", "Print the delta pairs of every positive-Horn head");
    auto* lm = with_file("lm", "Least model of a not-free program");
    lm->add_option("--engine", engine, "ur or fixpoint")->check(CLI::IsMember({"ur", "fixpoint"}));
    auto* as = with_file("as", "Answer sets");
    as->add_flag("--all", all, "Enumerate every answer set");
    as->add_option("--max-universe", max_universe, "Largest literal universe to search");
    auto* red = with_file("reduct", "Reduct at an interpretation");
    red->add_option("--interp", interp, "Comma-separated literals, -a for the complement of a")->required();
    auto* tr = with_file("translate", "Translate to normal rules");
    tr->add_option("--to", to, "Target class")->check(CLI::IsMember({"np"}));
    tr->add_option("--route", route, "nn or nn1")->check(CLI::IsMember({"nn", "nn1"}));
    tr->add_option("--budget", budget, "Node budget for distribution");
    auto* split = with_file("split", "Split a disjunctive program into normal nested programs");
    auto* eq = app.add_subcommand("equiv", "Strong equivalence of two programs");
    eq->add_option("a", file, "First program")->required();
    eq->add_option("b", file_b, "Second program")->required();
    eq->add_option("--max-atoms", max_atoms, "Largest atom count to enumerate");
    auto* trace = with_file("trace", "Unit-resolution derivation, step by step");
    auto* gen = app.add_subcommand("gen", "Generate a random expression or program");
    gen->add_option("--class", cls, "negative, horn, positive_horn, positive_non_horn, nnp_rule, dnp_rule, np_rule, not_free")
        ->required();
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_option("--atoms", atoms, "Atom count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    std::string command = chosen->get_name();
    try {
        if (chosen == gen) {
            run_gen(cls, seed, atoms, out);
        } else {
            Program p = parse_file(file);
            if (chosen == classify) run_classify(p, out);
            else if (chosen == delta) run_delta(p, out);
            else if (chosen == lm) run_lm(p, engine, out);
            else if (chosen == as) run_as(p, all, max_universe, out);
            else if (chosen == red) {
                Program q = reduct(p, parse_interpretation(interp)).to_program();
                out.payload["program"] = program_json(q);
                out.text += render(q);
            } else if (chosen == tr) run_translate(p, route, budget, out);
            else if (chosen == split) run_split(p, out);
            else if (chosen == eq) run_equiv(p, parse_file(file_b), max_atoms, out);
            else if (chosen == trace) run_trace(p, out);
        }
    } catch (const Error& e) {
        out.code = exit_for(e.kind());
        out.payload = json{{"error", {{"kind", to_string(e.kind())}, {"message", trimmed(e.what())}}}};
        if (!out.as_json) {
            std::cerr << "error: " << e.what() << "\n";
            return out.code;
        }
    }
    return out.emit(command);
}
