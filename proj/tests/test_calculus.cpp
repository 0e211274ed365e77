#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "nnasp/calculus.hpp"
#include "nnasp/semantics.hpp"
#include "nnasp/testkit.hpp"

using namespace nnasp;

namespace {

ErrorKind kind_of(auto f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Io;
}

std::string render_work(const HornWork& w) { return render(w.expr()); }

}  // namespace

TEST_CASE("working expressions") {
    CHECK(render(horn_expression(parse("a <- top."))) == "a");
    CHECK(render(horn_expression(parse("b <- a."))) == "or(b, ~a)");
    CHECK(render(horn_expression(parse(fixtures::kRunning))) ==
          "and[or(c, ~a), or(~a, and[or(n, ~m), or(e, and[~a, ~e]), c]), a]");
    CHECK(render(horn_expression(parse("a. b <- or(a, c)."))) == "and[a, or(b, and[~a, ~c])]");
    Program ef = reduct(parse(fixtures::kCompactRule), parse_interpretation("e, f")).to_program();
    CHECK(render(horn_expression(ef)) == fixtures::kCompactRuleWorkingEF);
    CHECK(kind_of([] { horn_expression(parse("a <- not b.")); }) == ErrorKind::NotNotFree);
    CHECK(kind_of([] { horn_expression(parse("or(a, b).")); }) == ErrorKind::NotNNP);
}

TEST_CASE("scope of an overlined occurrence") {
    HornWork w(parse_expr("or(u, and[v, and[~l, or(w, ~a), z]], t)"));
    auto occ = w.occurrences(lit("l"));
    REQUIRE(occ.size() == 1);
    Scope s = w.neg_scope(occ[0]);
    CHECK_FALSE(s.top_level);
    CHECK(s.delta == Handle{{1}});
    CHECK(s.sigma == std::vector<Handle>{Handle{{0}}, Handle{{2}}});

    HornWork top(parse_expr("and[a, ~a, b]"));
    CHECK(top.neg_scope(top.occurrences(lit("a"))[0]).top_level);

    HornWork clause(parse_expr("and[x, or(y, ~x, z)]"));
    Scope c = clause.neg_scope(clause.occurrences(lit("x"))[0]);
    CHECK(c.delta == Handle{{1, 1}});
    CHECK(c.sigma.size() == 2);
    CHECK(kind_of([&] { clause.neg_scope(Handle{{0}}); }) == ErrorKind::BadHandle);
}

TEST_CASE("step by step on the running program") {
    HornWork w(horn_expression(parse(fixtures::kRunning)));
    // the innermost occurrence first
    w.apply_nur(lit("a"), Handle{{1, 1, 1, 1, 0}});
    CHECK(render_work(w) == "and[or(c, ~a), or(~a, and[or(n, ~m), or(e), c]), a]");
    w.apply_nur(lit("a"), Handle{{1, 0}});
    CHECK(render_work(w) == "and[or(c, ~a), or(and[or(n, ~m), or(e), c]), a]");
    w.normalize();
    CHECK(render_work(w) == "and[or(c, ~a), or(n, ~m), e, c, a]");
    w.apply_nur(lit("a"), Handle{{0, 1}});
    w.normalize();
    CHECK(render_work(w) == "and[c, or(n, ~m), e, c, a]");
    CHECK(w.trace.count(StepRule::NUR) == 3);
}

TEST_CASE("single simplification steps") {
    HornWork a(parse_expr("and[x, or(e)]"));
    CHECK(a.simplify_step());
    CHECK(render_work(a) == "and[x, e]");
    CHECK(a.trace.steps.back().rule == StepRule::Unwrap);
    HornWork b(parse_expr("or(x, and[bot, y])"));
    CHECK(b.simplify_step());
    CHECK(render_work(b) == "or(x, bot)");
    CHECK(b.trace.steps.back().rule == StepRule::AndBot);
    CHECK(b.simplify_step());
    CHECK(b.trace.steps.back().rule == StepRule::OrBot);
    HornWork c(parse_expr("and[a, and[b, c]]"));
    CHECK(c.simplify_step());
    CHECK(render_work(c) == "and[a, b, c]");
    CHECK(c.trace.steps.back().rule == StepRule::Splice);
    CHECK_FALSE(c.simplify_step());
}

TEST_CASE("least models by unit resolution") {
    UrResult r = ur_least_model(parse(fixtures::kRunning));
    CHECK(r.consistent);
    CHECK(to_string(r.model) == "{c, e, a}");
    CHECK(render(r.final_expr) == "and[c, or(n, ~m), e, c, a]");
    CHECK(r.trace.resolution_steps() <= r.initial_leaves);
    CHECK(r.trace.simplification_steps() <= r.initial_connectives + r.initial_bot_leaves);

    UrResult bad = ur_least_model(parse(fixtures::kRunningInconsistent));
    CHECK_FALSE(bad.consistent);
    CHECK(bad.trace.resolution_steps() <= bad.initial_leaves);

    CHECK(ur_least_model(parse("and[a, b].")).model_set() == parse_interpretation("a, b"));
    CHECK_FALSE(ur_least_model(parse("a. bot <- a.")).consistent);
    CHECK(ur_least_model(parse("b <- a.")).model.empty());
}

TEST_CASE("every step keeps the models") {
    Expr start = horn_expression(parse(fixtures::kRunning));
    auto universe = literals_of(start);
    auto before = testkit::brute_models(start, universe);
    std::size_t seen = 0;
    UrOptions opts;
    opts.observer = [&](const HornWork& w, const TraceStep&) {
        ++seen;
        CHECK(testkit::brute_models(w.expr(), universe) == before);
    };
    ur_least_model(HornWork(start), opts);
    CHECK(seen > 0);
}

TEST_CASE("hyper resolution") {
    HornWork w(parse_expr(fixtures::kHyper));
    w.apply_nhur({lit("a")});
    CHECK(render_work(w) == fixtures::kHyperAfter);
    CHECK(w.trace.count(StepRule::NHUR) == 1);
    w.normalize();
    CHECK(render_work(w) == fixtures::kHyperSimplified);
    w.apply_nhur({lit("c")});
    w.normalize();
    CHECK(w.is_bot());

    HornWork seq(parse_expr(fixtures::kHyper));
    for (;;) {
        auto occ = seq.occurrences(lit("a"));
        if (occ.empty()) break;
        seq.apply_nur(lit("a"), occ.front());
    }
    HornWork batch(parse_expr(fixtures::kHyper));
    batch.apply_nhur({lit("a")});
    CHECK(seq.expr() == batch.expr());
}

TEST_CASE("unit errors") {
    HornWork w(parse_expr("and[b, or(c, ~a)]"));
    CHECK(kind_of([&] { w.apply_nhur({lit("a")}); }) == ErrorKind::NoUnit);
    CHECK(kind_of([&] { w.apply_nur(lit("a"), Handle{{1, 1}}); }) == ErrorKind::NoUnit);
    CHECK(kind_of([&] { w.apply_nur(lit("b"), Handle{{1, 0}}); }) == ErrorKind::BadHandle);
    CHECK(kind_of([] { HornWork x(parse_expr("or(a, ~not b)")); }) == ErrorKind::NotNotFree);
}

TEST_CASE("top-level complement") {
    HornWork w(parse_expr("and[a, ~a, b]"));
    w.apply_nur(lit("a"), w.occurrences(lit("a"))[0]);
    w.normalize();
    CHECK(w.is_bot());
}
