#include "properties.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "nnasp/calculus.hpp"
#include "nnasp/classify.hpp"
#include "nnasp/delta.hpp"
#include "nnasp/semantics.hpp"
#include "nnasp/testkit.hpp"
#include "nnasp/translate.hpp"

namespace props {

using namespace nnasp;
using testkit::GenClass;
using testkit::GenConfig;

namespace {

GenConfig config(GenClass target, std::uint64_t seed, std::uint64_t salt) {
    GenConfig c;
    c.target = target;
    c.seed = seed * 1'000'003 + salt;
    c.atom_count = 4;
    c.max_depth = 3;
    c.max_width = 3;
    c.rule_count = 3;
    return c;
}

std::string show(const Program& p) {
    std::string s = render(p);
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::vector<Interpretation> sorted(std::vector<Interpretation> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool clashes(const std::set<HeadItem>& out, const Interpretation& i) {
    for (const auto& h : out)
        if (h && (i.count(h->complement()) || out.count(HeadItem(h->complement())))) return true;
    return false;
}

}  // namespace

SuiteResult answer_sets_match_reference(std::size_t seeds) {
    SuiteResult r{"answer sets = reference answer sets of the normal translation"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Program p = testkit::gen_program(config(GenClass::NnpRule, s, 1));
        ++r.cases;
        try {
            auto mine = sorted(answer_sets(p));
            auto ref = sorted(testkit::gl_reference_answer_sets(nn_of(p)));
            if (mine != ref) r.fail(show(p));
        } catch (const Error& e) {
            r.fail(show(p) + e.what());
        }
    }
    return r;
}

SuiteResult least_models_agree(std::size_t seeds) {
    SuiteResult r{"unit resolution = fixpoint = brute-force least model"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::NotFree, s, 2);
        c.head_consistent = true;
        Program p = testkit::gen_program(c);
        ++r.cases;
        UrOptions quiet;
        quiet.record_paths = false;
        UrResult ur = ur_least_model(p, quiet);
        std::optional<Interpretation> fix;
        try {
            fix = least_model_fixpoint(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InconsistentResult && e.kind() != ErrorKind::ConstraintFired) {
                r.fail(show(p) + e.what());
                continue;
            }
        }
        auto brute = testkit::brute_least_model(p);
        std::optional<Interpretation> via_ur;
        if (ur.consistent) via_ur = ur.model_set();
        if (via_ur != fix || fix != brute) r.fail(show(p));
    }
    return r;
}

SuiteResult resolution_steps_keep_models(std::size_t seeds) {
    SuiteResult r{"every unit-resolution step keeps the model set"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Program p = testkit::gen_program(config(GenClass::NotFree, s, 3));
        Expr start = horn_expression(p);
        auto universe = literals_of(start);
        auto before = testkit::brute_models(start, universe);
        ++r.cases;
        bool bad = false;
        UrOptions opts;
        opts.record_paths = false;
        opts.observer = [&](const HornWork& w, const TraceStep&) {
            if (!bad && testkit::brute_models(w.expr(), universe) != before) bad = true;
        };
        ur_least_model(HornWork(start), opts);
        if (bad) r.fail(show(p));
    }
    return r;
}

SuiteResult translations_strongly_equivalent(std::size_t seeds) {
    SuiteResult r{"program <=> normal translation <=> distributive translation"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Program p = testkit::gen_program(config(GenClass::NnpRule, s, 4));
        ++r.cases;
        try {
            auto universe = literals_of(p);
            Program nn = nn_of(p).to_program();
            Program nn1 = nn1_of(p).to_program();
            if (!strongly_equivalent(p, nn, universe).equivalent || !strongly_equivalent(nn, nn1, universe).equivalent)
                r.fail(show(p));
        } catch (const Error& e) {
            r.fail(show(p) + e.what());
        }
    }
    return r;
}

SuiteResult heads_match_pairs(std::size_t seeds) {
    SuiteResult r{"positive-Horn head <=> its pair decomposition"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Expr h = testkit::gen_expr(config(GenClass::PositiveHorn, s, 5));
        Program a{{Rule{h}}};
        Program b{{Rule{h_delta(h).as_expr()}}};
        ++r.cases;
        if (!strongly_equivalent(a, b, literals_of(a)).equivalent) r.fail(render(h));
    }
    return r;
}

SuiteResult consequences_match_textbook(std::size_t seeds) {
    SuiteResult r{"nested consequences = textbook consequences on normal programs"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::NpRule, s, 6);
        c.atom_count = 5;
        c.rule_count = 6;
        Program p = testkit::gen_program(c);
        ReductProgram rp{prepare(p).rules};
        NormalProgram np = sn_of(p);
        ++r.cases;
        for (const auto& i : consistent_subsets(literals_of(p))) {
            auto expected = testkit::textbook_tp(np, i);
            bool threw = false;
            std::set<HeadItem> got;
            try {
                got = nt_step(rp, i);
            } catch (const Error& e) {
                threw = e.kind() == ErrorKind::InconsistentResult;
            }
            bool ok = clashes(expected, i) ? threw : !threw && got == expected;
            if (!ok) {
                r.fail(show(p) + " at " + to_string(i));
                break;
            }
        }
        if (sorted(answer_sets(p)) != sorted(testkit::gl_reference_answer_sets(np))) r.fail(show(p));
    }
    return r;
}

SuiteResult resolution_matches_propagation(std::size_t seeds) {
    SuiteResult r{"unit resolution on clauses = classical unit propagation"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::NpRule, s, 7);
        c.atom_count = 6;
        c.rule_count = 8;
        c.defaults = false;
        Program p = testkit::gen_program(c);
        Expr clauses = horn_expression(p);
        ++r.cases;
        auto up = testkit::classical_unit_propagation(clauses);
        UrOptions quiet;
        quiet.record_paths = false;
        UrResult ur = ur_least_model(HornWork(clauses), quiet);
        bool ok = up.conflict ? !ur.consistent : ur.consistent && ur.model_set() == up.units;
        if (!ok) r.fail(show(p));
    }
    return r;
}

SuiteResult models_are_closed(std::size_t seeds) {
    SuiteResult r{"model => closed"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Program p = testkit::gen_program(config(GenClass::NnpRule, s, 8));
        ++r.cases;
        for (const auto& i : consistent_subsets(literals_of(p)))
            if (satisfies(i, p) && !is_closed(i, p)) {
                r.fail(show(p) + " at " + to_string(i));
                break;
            }
    }
    return r;
}

SuiteResult minimal_models_supported(std::size_t seeds, bool with_defaults) {
    SuiteResult r{with_defaults ? "minimal => supported (with defaults)" : "minimal => supported"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(with_defaults ? GenClass::NnpRule : GenClass::NotFree, s, 9);
        Program p = testkit::gen_program(c);
        ++r.cases;
        for (const auto& m : minimal_models(p))
            if (!is_supported(m, p)) {
                r.fail(show(p) + " at " + to_string(m));
                break;
            }
    }
    return r;
}

SuiteResult answer_sets_minimal_and_closed(std::size_t seeds) {
    SuiteResult r{"answer set => minimal => closed"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Program p = testkit::gen_program(config(GenClass::NnpRule, s, 10));
        ++r.cases;
        auto minimal = minimal_models(p);
        for (const auto& a : answer_sets(p)) {
            bool is_min = std::find(minimal.begin(), minimal.end(), a) != minimal.end();
            if (!is_min || !is_closed(a, p)) {
                r.fail(show(p) + " at " + to_string(a));
                break;
            }
        }
        for (const auto& m : minimal)
            if (!is_closed(m, p)) {
                r.fail(show(p) + " at " + to_string(m));
                break;
            }
    }
    return r;
}

SuiteResult consequences_monotone(std::size_t seeds) {
    SuiteResult r{"consequence operator monotone, fixpoint within the occurrence count"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::NotFree, s, 11);
        c.head_consistent = true;
        c.constraints = false;
        Program p = testkit::gen_program(c);
        ReductProgram rp = as_reduct(p);
        std::mt19937_64 rng(c.seed);
        ++r.cases;
        bool bad = false;
        for (const auto& j : consistent_subsets(literals_of(p))) {
            for (int t = 0; t < 3 && !bad; ++t) {
                Interpretation i;
                for (auto l : j)
                    if (rng() & 1) i.insert(l);
                try {
                    auto a = nt_step(rp, i);
                    auto b = nt_step(rp, j);
                    if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) bad = true;
                } catch (const Error&) {
                    // complementary with the interpretation itself
                }
            }
            if (bad) break;
        }
        std::size_t occurrences = 0;
        for (const auto& rule : rp.rules) occurrences += rule.pairs.size();
        Interpretation cur;
        std::size_t rounds = 0;
        for (;; ++rounds) {
            Interpretation next;
            for (const auto& h : nt_step(rp, cur)) next.insert(*h);
            if (next == cur) break;
            cur = next;
        }
        if (rounds > occurrences) bad = true;
        if (bad) r.fail(show(p));
    }
    return r;
}

SuiteResult reducts_not_free_and_idempotent(std::size_t seeds) {
    SuiteResult r{"reduct not-free and idempotent"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Program p = testkit::gen_program(config(GenClass::NnpRule, s, 12));
        ++r.cases;
        for (const auto& i : consistent_subsets(literals_of(p))) {
            Program once = reduct(p, i).to_program();
            bool ok = is_not_free(once) && is_nnp(once);
            for (const auto& rule : once.rules) ok = ok && classify_rule(rule).is_not_free;
            ok = ok && reduct(once, i).to_program() == once;
            if (!ok) {
                r.fail(show(p) + " at " + to_string(i));
                break;
            }
        }
    }
    return r;
}

SuiteResult head_consistency_preserved(std::size_t seeds) {
    SuiteResult r{"head-consistency preserved by the normal translation"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::NnpRule, s, 13);
        c.head_consistent = s % 2 == 0;
        Program p = testkit::gen_program(c);
        ++r.cases;
        if (is_head_consistent(p) != is_head_consistent(nn_of(p).to_program())) r.fail(show(p));
    }
    return r;
}

SuiteResult parse_round_trip(std::size_t seeds) {
    SuiteResult r{"render then parse gives the same program"};
    for (std::size_t s = 0; s < seeds; ++s) {
        for (auto target : {GenClass::NnpRule, GenClass::DnpRule, GenClass::NpRule, GenClass::NotFree}) {
            Program p = testkit::gen_program(config(target, s, 22));
            ++r.cases;
            try {
                Program back = parse(render(p));
                bool ok = back == p && program_from_json(render(p, Format::Json)) == p;
                for (const auto& rule : back.rules) check_body(rule.body);
                if (!ok) r.fail(show(p));
            } catch (const Error& e) {
                r.fail(show(p) + e.what());
            }
        }
    }
    return r;
}

SuiteResult constants_simplification(std::size_t seeds) {
    SuiteResult r{"constant simplification idempotent and model-preserving"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::NnpRule, s, 23);
        Rule g = testkit::gen_rule(c);
        Expr head = Expr::conj({g.head, Expr::disj({Expr::bot(), g.head}), Expr::disj({g.head, Expr::top()})});
        Expr body = Expr::disj({Expr::conj({g.body, Expr::top()}), Expr::conj({Expr::bot(), g.body})});
        Expr sh = simplify_constants(head, Side::Head);
        Expr sb = simplify_constants(body, Side::Body);
        ++r.cases;
        bool ok = simplify_constants(sh, Side::Head) == sh && simplify_constants(sb, Side::Body) == sb;
        std::vector<Literal> universe = literals_of(head);
        for (auto l : literals_of(body)) universe.push_back(l);
        std::sort(universe.begin(), universe.end());
        universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
        for (const auto& i : consistent_subsets(universe))
            ok = ok && testkit::oracle_holds(head, i) == testkit::oracle_holds(sh, i) &&
                 satisfies(i, body) == satisfies(i, sb);
        if (!ok) r.fail(render(head) + " / " + render(body));
    }
    return r;
}

SuiteResult class_containments(std::size_t seeds) {
    SuiteResult r{"class containments, clausal agreement, single traversal"};
    std::mt19937_64 rng(14);
    for (std::size_t s = 0; s < seeds; ++s) {
        ++r.cases;
        bool ok = true;
        for (auto target : {GenClass::Negative, GenClass::Horn, GenClass::PositiveHorn, GenClass::PositiveNonHorn}) {
            Expr e = testkit::gen_expr(config(target, s, 14));
            std::size_t visits = 0;
            ExprClass k = classify_expr(e, &visits);
            ok = ok && visits <= node_count(e);
            ok = ok && (!k.positive_horn || k.horn) && (!k.negative || k.horn);
            ok = ok && !(k.positive_horn && k.positive_non_horn);
            if (k.positive_horn) {
                Expr c = cnf(e);
                ok = ok && is_positive_horn(c) && classify_expr(c).flat_cnf;
            }
        }
        // random flat clause sets against the one-positive-item count
        std::vector<Expr> clauses;
        bool expect = true;
        for (std::size_t k = 0, n = 1 + rng() % 4; k < n; ++k) {
            std::vector<Expr> items;
            std::size_t positives = 0;
            for (std::size_t t = 0, w = 1 + rng() % 3; t < w; ++t) {
                Literal l{Atom::intern(testkit::atom_name(rng() % 4)), false};
                switch (rng() % 3) {
                    case 0: items.push_back(Expr::literal(l)); ++positives; break;
                    case 1: items.push_back(Expr::bot()); ++positives; break;
                    default: items.push_back(Expr::over(Elementary::of(l))); break;
                }
            }
            expect = expect && positives == 1;
            clauses.push_back(items.size() == 1 ? items[0] : Expr::disj(items));
        }
        Expr set = clauses.size() == 1 ? clauses[0] : Expr::conj(clauses);
        ok = ok && is_positive_horn(set) == expect;
        if (!ok) r.fail("seed " + std::to_string(s));
    }
    return r;
}

SuiteResult deltas_negative_and_entailed(std::size_t seeds) {
    SuiteResult r{"deltas negative and entailing their item"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::PositiveHorn, s, 15);
        c.defaults = false;
        Expr h = testkit::gen_expr(c);
        ++r.cases;
        auto subsets = consistent_subsets(literals_of(h));
        bool ok = true;
        for (const auto& pair : h_delta(h).pairs) {
            ok = ok && (pair.delta.is_bot() || is_negative(pair.delta));
            for (const auto& i : subsets) {
                if (!testkit::oracle_holds(h, i)) continue;
                if (!pair.delta.is_bot() && !falsifies(i, pair.delta)) continue;
                if (!pair.h || !i.count(*pair.h)) ok = false;
            }
        }
        if (!ok) r.fail(render(h));
    }
    return r;
}

SuiteResult shift_matches_falsification(std::size_t seeds) {
    SuiteResult r{"shifted body holds iff the head part is falsified"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Expr e = testkit::gen_expr(config(GenClass::Negative, s, 16));
        ++r.cases;
        Expr b = shift_to_body(e);
        bool ok = shift_to_head(b) == e;
        for (const auto& i : consistent_subsets(literals_of(e)))
            ok = ok && satisfies(i, b) == falsifies_direct(i, e) && falsifies(i, e) == falsifies_direct(i, e);
        if (!ok) r.fail(render(e));
    }
    return r;
}

SuiteResult hyper_matches_sequential(std::size_t seeds) {
    SuiteResult r{"batched resolution = sequential resolution"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::NotFree, s, 17);
        c.rule_count = 5;
        Expr e = horn_expression(testkit::gen_program(c));
        HornWork seq(e);
        seq.normalize();
        auto units = seq.top_level_units();
        if (units.empty()) continue;
        ++r.cases;
        HornWork batch = seq;
        for (auto u : units)
            for (auto occ = seq.occurrences(u); !occ.empty(); occ = seq.occurrences(u)) seq.apply_nur(u, occ.front());
        bool any = false;
        for (auto u : units) any = any || !batch.occurrences(u).empty();
        if (any) batch.apply_nhur(units);
        if (seq.expr() != batch.expr()) r.fail(render(e));
    }
    return r;
}

SuiteResult step_bounds_hold(std::size_t seeds) {
    SuiteResult r{"resolution steps within the leaf count, simplifications within the connective count"};
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::NotFree, s, 18);
        c.atom_count = 8;
        c.rule_count = 8;
        c.max_depth = 4;
        Program p = testkit::gen_program(c);
        ++r.cases;
        UrOptions quiet;
        quiet.record_paths = false;
        UrResult u = ur_least_model(p, quiet);
        if (u.trace.resolution_steps() > u.initial_leaves ||
            u.trace.simplification_steps() > u.initial_connectives + u.initial_bot_leaves)
            r.fail(show(p));
    }
    return r;
}

SuiteResult flat_translation_is_normal(std::size_t seeds) {
    SuiteResult r{"flat translation yields normal rules"};
    for (std::size_t s = 0; s < seeds; ++s) {
        Rule g = testkit::gen_rule(config(GenClass::NnpRule, s, 19));
        Program p{{Rule{cnf(g.head), dnf(g.body)}}};
        ++r.cases;
        try {
            Program out = fn_of(p).to_program();
            bool ok = strongly_equivalent(p, out, literals_of(p)).equivalent;
            for (const auto& rule : out.rules) {
                RuleClass k = classify_rule(rule);
                ok = ok && k.flat && k.kind == RuleKind::NNP && rule.head.kind == NodeKind::Elem;
            }
            if (!ok) r.fail(show(p));
        } catch (const Error& e) {
            r.fail(show(p) + e.what());
        }
    }
    return r;
}

SuiteResult dnf_head_shape(std::size_t seeds) {
    SuiteResult r{"disjunction of conjunctions: normal iff one positive conjunct and the rest negative"};
    std::mt19937_64 rng(20);
    for (std::size_t s = 0; s < seeds; ++s) {
        std::vector<Expr> conj;
        std::size_t positive = 0, negative = 0;
        for (std::size_t k = 0, n = 2 + rng() % 3; k < n; ++k) {
            std::vector<Expr> items;
            std::size_t pos = 0;
            std::size_t w = 1 + rng() % 3;
            for (std::size_t t = 0; t < w; ++t) {
                Literal l{Atom::intern(testkit::atom_name(rng() % 5)), rng() % 5 == 0};
                if (rng() % 2) {
                    items.push_back(Expr::literal(l));
                    ++pos;
                } else {
                    items.push_back(Expr::over(Elementary::of(l)));
                }
            }
            if (pos == w) ++positive;
            if (pos == 0) ++negative;
            conj.push_back(Expr::conj(items));
        }
        bool shape = positive == 1 && negative == conj.size() - 1;
        ++r.cases;
        Rule rule{Expr::disj(conj), Expr::literal(lit("z"))};
        if ((classify_rule(rule).kind == RuleKind::NNP) != shape) r.fail(render(rule));
    }
    return r;
}

SuiteResult split_covers_answer_sets(std::size_t seeds, std::size_t* uncovered) {
    SuiteResult r{"answer sets of a disjunctive program reappear in its splits"};
    std::size_t missing = 0;
    for (std::size_t s = 0; s < seeds; ++s) {
        GenConfig c = config(GenClass::DnpRule, s, 21);
        c.rule_count = 2;
        c.max_depth = 2;
        Program p = testkit::gen_program(c);
        std::vector<Program> parts;
        try {
            parts = split_dnp(p);
        } catch (const Error&) {
            continue;
        }
        ++r.cases;
        std::set<Interpretation> reached;
        bool members_ok = true;
        for (const auto& part : parts) {
            if (!is_nnp(part)) members_ok = false;
            else
                for (const auto& a : answer_sets(part)) reached.insert(a);
        }
        bool covered = true;
        for (const auto& a : testkit::brute_answer_sets(p))
            if (!reached.count(a)) covered = false;
        if (!covered) ++missing;
        if (!members_ok || !covered) r.fail(show(p));
    }
    if (uncovered) *uncovered = missing;
    return r;
}

}  // namespace props
