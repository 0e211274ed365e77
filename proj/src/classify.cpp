#include "nnasp/classify.hpp"

#include <algorithm>
#include <set>

#include "nnasp/delta.hpp"

namespace nnasp {

namespace {

bool is_positive_leaf(const Expr& e) {
    return e.kind == NodeKind::Elem && (e.elem.kind == ElemKind::Lit || e.elem.kind == ElemKind::Bot);
}

struct Walker {
    std::size_t visits = 0;

    ExprClass visit(const Expr& e) {
        ++visits;
        ExprClass c;
        if (e.kind == NodeKind::Over) {
            c.negative = c.horn = true;
            c.flat_cnf = c.flat_dnf = true;
            c.atom_only = e.elem.is_constant() || !e.elem.literal.negated;
            return c;
        }
        if (e.kind == NodeKind::Elem) {
            bool positive = is_positive_leaf(e);
            c.horn = c.positive_horn = positive;
            c.flat_cnf = c.flat_dnf = true;
            c.atom_only = e.elem.is_constant() || !e.elem.literal.negated;
            return c;
        }
        std::vector<ExprClass> kids;
        kids.reserve(e.kids.size());
        for (const auto& k : e.kids) kids.push_back(visit(k));

        c.atom_only = std::all_of(kids.begin(), kids.end(), [](const ExprClass& k) { return k.atom_only; });
        bool all_leaves = std::all_of(e.kids.begin(), e.kids.end(), [](const Expr& k) { return k.is_leaf(); });
        bool is_and = e.kind == NodeKind::And;

        if (e.kids.empty()) {
            // and[] reads as top, or() as bot
            c.horn = c.positive_horn = !is_and;
            c.flat_cnf = c.flat_dnf = true;
            return c;
        }

        c.negative = std::all_of(kids.begin(), kids.end(), [](const ExprClass& k) { return k.negative; });

        // flat forms: a clause is a disjunction of leaves, a term a conjunction of leaves
        auto kids_are = [&](NodeKind inner) {
            return std::all_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) {
                return k.is_leaf() ||
                       (k.kind == inner &&
                        std::all_of(k.kids.begin(), k.kids.end(), [](const Expr& g) { return g.is_leaf(); }));
            });
        };
        c.flat_cnf = all_leaves || (is_and && kids_are(NodeKind::Or));
        c.flat_dnf = all_leaves || (!is_and && kids_are(NodeKind::And));

        if (is_and) {
            c.horn = std::all_of(kids.begin(), kids.end(), [](const ExprClass& k) { return k.horn; });
            c.positive_horn = std::all_of(kids.begin(), kids.end(), [](const ExprClass& k) { return k.positive_horn; });
            c.positive_non_horn =
                std::all_of(kids.begin(), kids.end(), [](const ExprClass& k) { return k.positive_non_horn; });
            return c;
        }

        // disjunction: one distinguished disjunct, every other one negative
        std::size_t non_negative = 0;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < kids.size(); ++i)
            if (!kids[i].negative) {
                ++non_negative;
                idx = i;
            }
        if (non_negative == 0) {
            c.horn = true;
        } else if (non_negative == 1) {
            c.horn = kids[idx].horn;
            c.positive_horn = kids[idx].positive_horn;
        }

        // clause with two distinct positive items among overlined ones
        if (all_leaves) {
            std::vector<const Expr*> positives;
            bool ok = true;
            for (const auto& k : e.kids) {
                if (k.kind == NodeKind::Over) continue;
                if (!is_positive_leaf(k)) ok = false;
                else positives.push_back(&k);
            }
            bool distinct = false;
            for (std::size_t i = 0; i < positives.size() && !distinct; ++i)
                for (std::size_t j = i + 1; j < positives.size(); ++j)
                    if (!(*positives[i] == *positives[j])) {
                        distinct = true;
                        break;
                    }
            if (ok && distinct) c.positive_non_horn = true;
        }
        bool some_pnh = std::any_of(kids.begin(), kids.end(), [](const ExprClass& k) { return k.positive_non_horn; });
        bool rest_ok = std::all_of(kids.begin(), kids.end(), [](const ExprClass& k) {
            return k.negative || k.positive_horn || k.positive_non_horn;
        });
        if (some_pnh && rest_ok) c.positive_non_horn = true;
        return c;
    }
};

bool contains_bare_top(const Expr& e) {
    if (e.is_leaf()) return e.kind == NodeKind::Elem && e.elem.kind == ElemKind::Top;
    return std::any_of(e.kids.begin(), e.kids.end(), [](const Expr& k) { return contains_bare_top(k); });
}

bool has_negated_literal(const Expr& e) {
    if (e.is_leaf()) return !e.elem.is_constant() && e.elem.literal.negated;
    return std::any_of(e.kids.begin(), e.kids.end(), [](const Expr& k) { return has_negated_literal(k); });
}

void collect_positive(const Expr& e, std::vector<Literal>& out) {
    if (e.is_leaf()) {
        if (e.kind == NodeKind::Elem && e.elem.kind == ElemKind::Lit) out.push_back(e.elem.literal);
        return;
    }
    for (const auto& k : e.kids) collect_positive(k, out);
}

}  // namespace

ExprClass classify_expr(const Expr& e, std::size_t* visits) {
    Walker w;
    ExprClass c = w.visit(e);
    if (visits) *visits = w.visits;
    return c;
}

bool is_negative(const Expr& e) { return classify_expr(e).negative; }
bool is_horn(const Expr& e) { return classify_expr(e).horn; }
bool is_positive_horn(const Expr& e) { return classify_expr(e).positive_horn; }
bool is_positive_non_horn(const Expr& e) { return classify_expr(e).positive_non_horn; }

const char* to_string(RuleKind k) {
    switch (k) {
        case RuleKind::NNP: return "NNP";
        case RuleKind::DNP: return "DNP";
        case RuleKind::OtherHead: return "other-head";
    }
    return "?";
}

RuleClass classify_rule(const Rule& r) {
    RuleClass rc;
    ExprClass hc = classify_expr(r.head);
    ExprClass bc = classify_expr(r.body);
    if (hc.positive_horn) rc.kind = RuleKind::NNP;
    else if (hc.positive_non_horn) rc.kind = RuleKind::DNP;
    else rc.kind = RuleKind::OtherHead;
    if (contains_bare_top(r.head)) rc.diagnostics.push_back("head contains a bare top; simplify constants first");
    rc.extended = has_negated_literal(r.head) || has_negated_literal(r.body);
    rc.flat = hc.flat_cnf && (bc.flat_cnf || bc.flat_dnf);

    bool body_free = !has_default(r.body);
    rc.is_not_free = body_free && !has_default(r.head);
    if (rc.kind != RuleKind::NNP) return rc;

    auto dec = h_delta(r.head);
    bool body_top = r.body.is_top();
    bool all_facts = !dec.pairs.empty(), all_constraints = !dec.pairs.empty();
    bool some_free_delta = false;
    for (const auto& p : dec.pairs) {
        bool unconditional = p.delta.is_bot();
        if (body_top && unconditional && p.h) rc.contains_fact = true;
        if (!(unconditional && p.h)) all_facts = false;
        if (!p.h) rc.contains_constraint = true;
        else all_constraints = false;
        if (!has_default(p.delta)) some_free_delta = true;
    }
    rc.is_fact = body_top && all_facts;
    rc.is_constraint = all_constraints;
    rc.partially_not_free = !rc.is_not_free && some_free_delta;
    return rc;
}

HeadConsistency head_consistency(const Program& p) {
    std::vector<Literal> all;
    for (const auto& r : p.rules) collect_positive(r.head, all);
    std::set<Literal> seen;
    HeadConsistency hc;
    for (auto l : all)
        if (seen.insert(l).second) hc.head_literals.push_back(l);
    for (auto l : hc.head_literals)
        if (seen.count(l.complement())) hc.clashes.push_back(l);
    hc.consistent = hc.clashes.empty();
    return hc;
}

bool is_head_consistent(const Program& p) { return head_consistency(p).consistent; }

bool is_nnp(const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(), [](const Rule& r) { return is_positive_horn(r.head); });
}

bool is_not_free(const Program& p) {
    return std::none_of(p.rules.begin(), p.rules.end(),
                        [](const Rule& r) { return has_default(r.head) || has_default(r.body); });
}

}  // namespace nnasp
