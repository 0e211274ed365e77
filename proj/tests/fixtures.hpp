#pragma once

// Worked programs and expressions shared by the unit tests and the acceptance driver.

namespace fixtures {

// One nested rule standing for twelve normal rules.
inline constexpr const char* kCompactRule = "and[or(~b, -c), b, or(g, and[~d, ~not f])] <- or(a, not e, m).";
inline constexpr const char* kCompactRuleNormal = R"(
b <- a.          b <- not e.          b <- m.
-c <- and[a, b]. -c <- and[not e, b]. -c <- and[m, b].
g <- and[a, d].  g <- and[not e, d].  g <- and[m, d].
g <- and[a, not f]. g <- and[not e, not f]. g <- and[m, not f].
)";
inline constexpr const char* kCompactRuleHeadCnf = "and[or(~b, -c), b, or(g, ~d), or(g, ~not f)]";
// Working form of the compact rule once e and f are known to hold.
inline constexpr const char* kCompactRuleWorkingEF = "or(and[or(-c, ~b), b, or(g, ~d)], and[~a, ~m])";

// Falsification versus satisfaction of the shifted body.
inline constexpr const char* kShiftHead = "and[~not -e, or(~-f, ~a)]";
inline constexpr const char* kShiftBody = "or(not -e, and[-f, a])";

// A program and its head-only counterpart.
inline constexpr const char* kPolarized = "a <- -b. b <- not -a.";
inline constexpr const char* kPolarizedShifted = "or(a, ~-b). or(b, ~not -a).";

inline constexpr const char* kShiftedClause = "or(-d, ~not -e, ~-f) <- and[-b, not c].";
inline constexpr const char* kShiftedClauseNormal = "-d <- and[-b, not c, not -e, -f].";

// Flat programs.
inline constexpr const char* kFlatR1 = "and[or(c, ~b, ~g), b, or(bot, ~not g)] <- or(a, not e, m).";
inline constexpr const char* kFlatR = "and[or(-d, ~not c), d] <- or(a, not -e, -m).";
inline constexpr const char* kFlatRPrime = "and[or(~-b, -c), b, or(bot, ~d)] <- or(a, not e, m).";
inline constexpr const char* kFlatChain = R"(
and[f, g].
and[or(b, ~c), e, or(~a, h)] <- and[f, g].
and[a, or(~h, c)] <- and[f, e].
)";

// Horn recognition.
inline constexpr const char* kHornH1 = "or(and[~not b, ~d], and[c, a])";
inline constexpr const char* kHornH2 = "or(and[~b, d], and[bot, ~a])";
inline constexpr const char* kHornH3 = "or(or(and[~not b, ~d], and[c, a]), or(~a, and[~not b, ~c]))";
inline constexpr const char* kNestedHorn = "or(~a, and[or(~e, c), and[b, or(a, ~not d)]])";
inline constexpr const char* kNestedNonHorn = "or(a, and[or(~e, c), and[b, or(a, ~not d)]])";

// Delta decompositions.
inline constexpr const char* kDeltaHead = "or(~a, and[or(and[~b, ~g], c), and[b, or(bot, ~not d)]])";
inline constexpr const char* kDeltaHeadPairs = "and[or(b, ~a), or(c, ~a, and[~b, ~g]), or(bot, ~a, ~not d)]";
inline constexpr const char* kDeltaHeadNormal = R"(
b <- and[e, f, a].
c <- and[e, f, a, b].
bot <- and[e, f, not d, a].
c <- and[e, f, a, g].
)";
inline constexpr const char* kManyNots = "or(~not x, and[or(~not -y, -y), and[-y, or(-x, ~v)]])";
inline constexpr const char* kManyNotsReductEmpty = "and[-y, or(-x, ~v)]";
inline constexpr const char* kSixOccurrences =
    "and[or(~b, m), or(~f, and[or(~m, and[c, or(~g, bot)]), or(m, ~e)]), or(~d, and[c, a])]";

// Rule with a constraint inside its head.
inline constexpr const char* kConstraintRule = "or(and[~b, ~d], and[c, a, or(~g, bot)]) <- f.";
// Not-free rule checked against three interpretations.
inline constexpr const char* kThreeChecks = "or(and[~a, ~e, ~m], and[or(~b, c), b, or(g, and[~d, ~f])]).";

// Rule whose normal translation has eight rules.
inline constexpr const char* kEightRules = "or(and[~b, ~d], and[c, a]) <- and[m, or(n, and[not g1, g2])].";
inline constexpr const char* kEightRulesNormal = R"(
a <- and[d, m, not g1, g2]. a <- and[d, m, n].
c <- and[d, m, not g1, g2]. c <- and[d, m, n].
a <- and[b, m, not g1, g2]. a <- and[b, m, n].
c <- and[b, m, not g1, g2]. c <- and[b, m, n].
)";
inline constexpr const char* kSupported = R"(
or(and[~m, ~d], and[c, a]) <- and[m, or(n, and[not g1, g2])].
and[m, g2].
)";

// Three nesting levels with three items each.
inline constexpr const char* kExponential =
    "or(and[~b1, ~b2, ~b3], and[a1, or(and[~c1, ~c2, ~c3], and[a2, or(and[~d1, ~d2, ~d3], a3)])]).";

// Colouring program after merging, propositionalised.
inline constexpr const char* kColouring = R"(
and[vx, vy, or(t, f)] <- or(p, n).
and[or(cxr, cxg, cxb), or(and[cxr, cxg, cxb], or(~cxa, ~cya, and[or(~p, ~t), or(~n, ~f)]))] <- vx.
w <- and[p, t, cxa, cya].
w <- and[n, f, cxa, cya].
)";

// Unit resolution.
inline constexpr const char* kRunning = "and[or(c, ~a), or(~a, and[or(n, ~m), or(e, and[~a, ~e]), c]), a].";
inline constexpr const char* kRunningInconsistent =
    "and[or(c, ~a), or(~a, and[or(n, ~m), or(e, and[~a, ~e]), -c]), a].";
inline constexpr const char* kHyper = "and[or(c, p), or(~a, and[or(~a, ~c), or(q, and[~b, ~a]), c]), a]";
inline constexpr const char* kHyperAfter = "and[or(c, p), or(and[or(~c), or(q), c]), a]";
inline constexpr const char* kHyperSimplified = "and[or(c, p), ~c, q, c, a]";

}  // namespace fixtures
