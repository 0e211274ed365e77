#include "nnasp/translate.hpp"

#include <algorithm>
#include <map>

#include "nnasp/classify.hpp"

namespace nnasp {

namespace {

[[noreturn]] void over_budget(std::size_t budget) {
    throw Error(ErrorKind::SizeBudgetExceeded, "distributivity exceeded the budget of " + std::to_string(budget) +
                                                   " nodes");
}

void push_unique(Term& t, const Expr& leaf) {
    if (std::find(t.begin(), t.end(), leaf) == t.end()) t.push_back(leaf);
}

std::size_t weight(const std::vector<Term>& ts) {
    std::size_t n = 0;
    for (const auto& t : ts) n += t.size() + 1;
    return n;
}

// outer: the connective whose children are concatenated; the other one distributes.
std::vector<Term> distribute(const Expr& e, NodeKind outer, std::size_t budget) {
    if (e.is_leaf()) return {Term{e}};
    if (e.kind == outer) {
        std::vector<Term> out;
        for (const auto& k : e.kids) {
            auto sub = distribute(k, outer, budget);
            out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
            if (weight(out) > budget) over_budget(budget);
        }
        return out;
    }
    std::vector<Term> acc{Term{}};
    for (const auto& k : e.kids) {
        auto sub = distribute(k, outer, budget);
        std::vector<Term> next;
        std::size_t w = 0;
        for (const auto& a : acc)
            for (const auto& b : sub) {
                Term t = a;
                for (const auto& leaf : b) push_unique(t, leaf);
                w += t.size() + 1;
                if (w > budget) over_budget(budget);
                next.push_back(std::move(t));
            }
        acc = std::move(next);
    }
    return acc;
}

bool truth_of_constant(const Expr& e) { return e.elem.kind == ElemKind::Top; }

bool has_over(const Expr& e) {
    if (e.is_leaf()) return e.kind == NodeKind::Over;
    return std::any_of(e.kids.begin(), e.kids.end(), [](const Expr& k) { return has_over(k); });
}

Expr assemble(const std::vector<Term>& ts, NodeKind outer) {
    NodeKind inner = outer == NodeKind::Or ? NodeKind::And : NodeKind::Or;
    std::vector<Expr> kids;
    for (const auto& t : ts) {
        if (t.size() == 1) kids.push_back(t.front());
        else if (t.empty()) kids.push_back(inner == NodeKind::And ? Expr::top() : Expr::bot());
        else kids.push_back(Expr{inner, {}, t});
    }
    if (kids.size() == 1) return std::move(kids.front());
    if (kids.empty()) return outer == NodeKind::Or ? Expr::bot() : Expr::top();
    return Expr{outer, {}, std::move(kids)};
}

}  // namespace

std::vector<Term> dnf_terms(const Expr& e, std::size_t budget) {
    Expr s = simplify_constants(e, has_over(e) ? Side::Head : Side::Body);
    if (s.is_leaf() && s.elem.is_constant()) {
        if (truth_of_constant(s)) return {Term{}};
        return {};
    }
    return distribute(s, NodeKind::Or, budget);
}

std::vector<Term> cnf_clauses(const Expr& e, std::size_t budget) {
    Expr s = simplify_constants(e, has_over(e) ? Side::Head : Side::Body);
    if (s.is_leaf() && s.elem.is_constant()) {
        if (truth_of_constant(s)) return {};
        return {Term{Expr::bot()}};
    }
    return distribute(s, NodeKind::And, budget);
}

Expr dnf(const Expr& e, std::size_t budget) { return assemble(dnf_terms(e, budget), NodeKind::Or); }

Expr cnf(const Expr& e, std::size_t budget) { return assemble(cnf_clauses(e, budget), NodeKind::And); }

Rule NormalRule::to_rule() const {
    Expr h = head ? Expr::literal(*head) : Expr::bot();
    std::vector<Expr> kids;
    for (const auto& b : body) kids.push_back(Expr::of(b));
    Expr bd = kids.empty() ? Expr::top() : kids.size() == 1 ? kids.front() : Expr::conj(std::move(kids));
    return {std::move(h), std::move(bd)};
}

Program NormalProgram::to_program() const {
    Program p;
    for (const auto& r : rules) p.rules.push_back(r.to_rule());
    return p;
}

namespace {

bool elem_less(const Elementary& a, const Elementary& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.literal < b.literal;
}

std::string canonical_rule(const NormalRule& r) {
    NormalRule c = r;
    std::sort(c.body.begin(), c.body.end(), elem_less);
    c.body.erase(std::unique(c.body.begin(), c.body.end()), c.body.end());
    return render(c.to_rule());
}

void add_rule(NormalProgram& out, std::set<std::string>& seen, NormalRule r) {
    if (seen.insert(canonical_rule(r)).second) out.rules.push_back(std::move(r));
}

// Body elements from a term of body leaves; false when the term holds bot.
bool body_from(const Term& t, std::vector<Elementary>& body) {
    for (const auto& leaf : t) {
        if (leaf.kind != NodeKind::Elem) throw Error(ErrorKind::NotSN, "overlined leaf in a body");
        if (leaf.elem.kind == ElemKind::Top) continue;
        if (leaf.elem.kind == ElemKind::Bot) return false;
        if (std::find(body.begin(), body.end(), leaf.elem) == body.end()) body.push_back(leaf.elem);
    }
    return true;
}

// h <- body and the shifted negative items of the clause.
void emit_clause(const Term& clause, const Term& term, NormalProgram& out, std::set<std::string>& seen) {
    std::optional<HeadItem> head;
    Term negatives;
    for (const auto& leaf : clause) {
        if (leaf.kind == NodeKind::Over) {
            negatives.push_back(leaf);
            continue;
        }
        if (head || !(leaf.elem.kind == ElemKind::Lit || leaf.elem.kind == ElemKind::Bot))
            throw Error(ErrorKind::NotSN, "clause without exactly one positive item");
        head = leaf.elem.kind == ElemKind::Lit ? HeadItem(leaf.elem.literal) : HeadItem();
    }
    if (!head) throw Error(ErrorKind::NotSN, "clause without a positive item");
    NormalRule r{*head, {}};
    if (!body_from(term, r.body)) return;
    Term shifted;
    for (const auto& n : negatives) shifted.push_back(shift_to_body(n));
    if (!body_from(shifted, r.body)) return;
    add_rule(out, seen, std::move(r));
}

Term leaves_of(const Expr& e, NodeKind connective) {
    if (e.is_leaf()) return {e};
    if (e.kind != connective) return {};
    Term t;
    for (const auto& k : e.kids) {
        if (!k.is_leaf()) return {};
        t.push_back(k);
    }
    return t;
}

}  // namespace

NormalProgram sn_of(const Program& p) {
    NormalProgram out;
    std::set<std::string> seen;
    for (const auto& r : p.rules) {
        Term clause = leaves_of(r.head, NodeKind::Or);
        if (clause.empty()) throw Error(ErrorKind::NotSN, "head of " + render(r) + " is not a clause");
        Term body;
        if (!r.body.is_top()) {
            body = leaves_of(r.body, NodeKind::And);
            if (body.empty()) throw Error(ErrorKind::NotSN, "body of " + render(r) + " is not a conjunction");
        }
        emit_clause(clause, body, out, seen);
    }
    return out;
}

NormalProgram fn_of(const Program& p, std::size_t budget) {
    NormalProgram out;
    std::set<std::string> seen;
    for (const auto& r : p.rules) {
        auto hc = classify_expr(r.head);
        auto bc = classify_expr(r.body);
        if (!(hc.flat_cnf && hc.positive_horn) || !(bc.flat_cnf || bc.flat_dnf))
            throw Error(ErrorKind::NotNFNP, "rule " + render(r) + " is not flat with a positive-Horn clausal head");
        auto clauses = cnf_clauses(r.head, budget);
        auto terms = dnf_terms(r.body, budget);
        for (const auto& c : clauses)
            for (const auto& t : terms) emit_clause(c, t, out, seen);
    }
    return out;
}

NormalProgram nn_of(const Program& p, std::size_t budget) {
    NormalProgram out;
    std::set<std::string> seen;
    for (const auto& r : p.rules) {
        if (!is_positive_horn(r.head))
            throw Error(ErrorKind::NotNNP, "rule " + render(r) + " has a head that is not positive-Horn");
        for (const auto& pr : h_delta(r.head).pairs) {
            Expr body = Expr::conj({r.body, shift_to_body(pr.delta)});
            for (const auto& t : dnf_terms(body, budget)) {
                NormalRule nr{pr.h, {}};
                if (!body_from(t, nr.body)) continue;
                add_rule(out, seen, std::move(nr));
                if (out.rules.size() > budget) over_budget(budget);
            }
        }
    }
    return out;
}

NormalProgram nn1_of(const Program& p, std::size_t budget) {
    NormalProgram out;
    std::set<std::string> seen;
    for (const auto& r : p.rules) {
        if (!is_positive_horn(r.head))
            throw Error(ErrorKind::NotNNP, "rule " + render(r) + " has a head that is not positive-Horn");
        auto clauses = cnf_clauses(r.head, budget);
        auto terms = dnf_terms(r.body, budget);
        for (const auto& c : clauses)
            for (const auto& t : terms) {
                emit_clause(c, t, out, seen);
                if (out.rules.size() > budget) over_budget(budget);
            }
    }
    return out;
}

std::set<std::string> NormalProgram::canonical() const {
    std::set<std::string> out;
    for (const auto& r : rules) out.insert(canonical_rule(r));
    return out;
}

namespace {

void check_count(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw Error(ErrorKind::SizeBudgetExceeded, "splitting exceeded " + std::to_string(cap) + " alternatives");
}

std::vector<Expr> cross(const std::vector<std::vector<Expr>>& parts, NodeKind kind, std::size_t cap) {
    std::vector<std::vector<Expr>> acc{{}};
    for (const auto& opts : parts) {
        std::vector<std::vector<Expr>> next;
        for (const auto& a : acc)
            for (const auto& o : opts) {
                auto v = a;
                v.push_back(o);
                next.push_back(std::move(v));
                check_count(next.size(), cap);
            }
        acc = std::move(next);
    }
    std::vector<Expr> out;
    for (auto& kids : acc) {
        if (kids.size() == 1) out.push_back(std::move(kids.front()));
        else out.push_back(Expr{kind, {}, std::move(kids)});
    }
    return out;
}

std::vector<Expr> head_alternatives(const Expr& e, std::size_t cap) {
    if (e.is_leaf()) return {e};
    std::vector<std::vector<Expr>> parts;
    for (const auto& k : e.kids) parts.push_back(head_alternatives(k, cap));
    if (e.kind == NodeKind::And) return cross(parts, NodeKind::And, cap);

    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < e.kids.size(); ++i)
        if (!is_negative(e.kids[i])) positive.push_back(i);
    if (positive.size() <= 1) return cross(parts, NodeKind::Or, cap);

    // keep one non-negative disjunct together with the negative ones
    std::vector<Expr> out;
    for (auto chosen : positive) {
        std::vector<std::vector<Expr>> kept;
        for (std::size_t i = 0; i < e.kids.size(); ++i)
            if (i == chosen || is_negative(e.kids[i])) kept.push_back(parts[i]);
        for (auto& a : cross(kept, NodeKind::Or, cap)) {
            out.push_back(std::move(a));
            check_count(out.size(), cap);
        }
    }
    return out;
}

}  // namespace

std::vector<Program> split_dnp(const Program& p, std::size_t max_programs) {
    std::vector<std::vector<Rule>> per_rule;
    for (const auto& r : p.rules) {
        std::vector<Rule> alts;
        if (is_positive_horn(r.head)) {
            alts.push_back(r);
        } else {
            for (auto& h : head_alternatives(r.head, max_programs)) {
                if (!is_positive_horn(h))
                    throw Error(ErrorKind::NotSplittable, "rule " + render(r) + " does not split into normal rules");
                alts.push_back({std::move(h), r.body});
            }
        }
        per_rule.push_back(std::move(alts));
    }
    std::vector<Program> acc{Program{}};
    for (const auto& alts : per_rule) {
        std::vector<Program> next;
        for (const auto& prog : acc)
            for (const auto& a : alts) {
                Program q = prog;
                q.rules.push_back(a);
                next.push_back(std::move(q));
                check_count(next.size(), max_programs);
            }
        acc = std::move(next);
    }
    std::vector<Program> out;
    for (auto& q : acc)
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
    return out;
}

const char* to_string(Law l) {
    switch (l) {
        case Law::SplitConjHead: return "split-conj-head";
        case Law::SplitDisjBody: return "split-disj-body";
        case Law::Shift: return "shift";
    }
    return "?";
}

std::vector<Rule> rewrite_rule(const Rule& r, Law law) {
    std::vector<Rule> out;
    switch (law) {
        case Law::SplitConjHead:
            if (r.head.kind != NodeKind::And || r.head.kids.empty())
                throw Error(ErrorKind::NotApplicable, "head of " + render(r) + " is not a conjunction");
            for (const auto& k : r.head.kids) out.push_back({k, r.body});
            return out;
        case Law::SplitDisjBody:
            if (r.body.kind != NodeKind::Or || r.body.kids.empty())
                throw Error(ErrorKind::NotApplicable, "body of " + render(r) + " is not a disjunction");
            for (const auto& k : r.body.kids) out.push_back({r.head, k});
            return out;
        case Law::Shift: {
            if (r.body.is_top()) throw Error(ErrorKind::NotApplicable, "body of " + render(r) + " is top");
            Expr moved = r.body;
            Expr rest = Expr::top();
            if (r.body.kind == NodeKind::And && r.body.kids.size() >= 2) {
                moved = r.body.kids.back();
                std::vector<Expr> kids(r.body.kids.begin(), r.body.kids.end() - 1);
                rest = kids.size() == 1 ? kids.front() : Expr::conj(std::move(kids));
            }
            std::vector<Expr> kids;
            if (r.head.kind == NodeKind::Or) kids = r.head.kids;
            else kids.push_back(r.head);
            Expr shifted = shift_to_head(moved);
            if (shifted.kind == NodeKind::Or) kids.insert(kids.end(), shifted.kids.begin(), shifted.kids.end());
            else kids.push_back(std::move(shifted));
            out.push_back({Expr::disj(std::move(kids)), std::move(rest)});
            return out;
        }
    }
    return out;
}

Rule merge_rules(const std::vector<Rule>& rules) {
    if (rules.size() < 2) throw Error(ErrorKind::NotApplicable, "merging needs at least two rules");
    auto same = [&](auto part) {
        return std::all_of(rules.begin(), rules.end(), [&](const Rule& r) { return part(r) == part(rules.front()); });
    };
    std::vector<Expr> kids;
    if (same([](const Rule& r) { return r.body; })) {
        for (const auto& r : rules) kids.push_back(r.head);
        return {Expr::conj(std::move(kids)), rules.front().body};
    }
    if (same([](const Rule& r) { return r.head; })) {
        for (const auto& r : rules) kids.push_back(r.body);
        return {rules.front().head, Expr::disj(std::move(kids))};
    }
    throw Error(ErrorKind::NotApplicable, "rules share neither a head nor a body");
}

namespace {

std::size_t count_literal_leaves(const Expr& e) {
    if (e.is_leaf()) return e.elem.is_constant() ? 0 : 1;
    std::size_t n = 0;
    for (const auto& k : e.kids) n += count_literal_leaves(k);
    return n;
}

std::size_t count_defaults(const Expr& e) {
    if (e.is_leaf()) return e.elem.kind == ElemKind::Default ? 1 : 0;
    std::size_t n = 0;
    for (const auto& k : e.kids) n += count_defaults(k);
    return n;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

// Number of terms distributivity produces: a leaf gives one, or adds, and multiplies.
std::uint64_t term_count(const Expr& e) {
    if (e.is_leaf()) return 1;
    std::uint64_t n = e.kind == NodeKind::Or ? 0 : 1;
    for (const auto& k : e.kids) n = e.kind == NodeKind::Or ? sat_add(n, term_count(k)) : sat_mul(n, term_count(k));
    return n;
}

}  // namespace

std::size_t literal_occurrences(const Program& p) {
    std::size_t n = 0;
    for (const auto& r : p.rules) n += count_literal_leaves(r.head) + count_literal_leaves(r.body);
    return n;
}

std::size_t connectives(const Program& p) {
    std::size_t n = 0;
    for (const auto& r : p.rules)
        n += 1 + connective_count(r.head) + connective_count(r.body) + count_defaults(r.head) + count_defaults(r.body);
    return n;
}

Succinctness succinctness_report(const Program& p, std::size_t budget) {
    Succinctness s;
    s.literal_occurrences = literal_occurrences(p);
    s.connectives = connectives(p);
    for (const auto& r : p.rules) {
        if (!is_positive_horn(r.head)) continue;
        Expr body = simplify_constants(r.body, Side::Body);
        std::uint64_t bt = body.is_bot() ? 0 : term_count(body);
        for (const auto& pr : h_delta(r.head).pairs) {
            Expr d = simplify_constants(shift_to_body(pr.delta), Side::Body);
            std::uint64_t dt = d.is_bot() ? 0 : term_count(d);
            s.np_rules = sat_add(s.np_rules, sat_mul(bt, dt));
        }
    }
    try {
        Program np = nn_of(p, budget).to_program();
        s.np_built = true;
        s.np_rules = np.rules.size();
        s.np_literal_occurrences = literal_occurrences(np);
        s.np_connectives = connectives(np);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SizeBudgetExceeded) throw;
    }
    return s;
}

}  // namespace nnasp
