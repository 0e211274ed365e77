#include "nnasp/semantics.hpp"

#include <algorithm>

#include "nnasp/classify.hpp"

namespace nnasp {

bool is_consistent(const Interpretation& i) {
    return std::none_of(i.begin(), i.end(), [&](Literal l) { return !l.negated && i.count(l.complement()); });
}

Interpretation parse_interpretation(std::string_view text) {
    Interpretation out;
    std::string item;
    bool listed = text.find(',') != std::string_view::npos;
    auto flush = [&] {
        auto b = item.find_first_not_of(" \t{}");
        auto e = item.find_last_not_of(" \t{}");
        if (b != std::string::npos) out.insert(lit(item.substr(b, e - b + 1)));
        else if (listed) throw Error(ErrorKind::Syntax, "empty item in interpretation '" + std::string(text) + "'");
        item.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else item += c;
    }
    flush();
    return out;
}

std::string to_string(const std::vector<Literal>& ordered) {
    std::string s = "{";
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        if (k) s += ", ";
        s += to_string(ordered[k]);
    }
    return s + "}";
}

std::string to_string(const Interpretation& i) { return to_string(std::vector<Literal>(i.begin(), i.end())); }

bool satisfies(const Interpretation& i, const Expr& e) {
    switch (e.kind) {
        case NodeKind::Over:
            throw Error(ErrorKind::Position, "overlined leaf " + render(e) + " in body position");
        case NodeKind::Elem:
            switch (e.elem.kind) {
                case ElemKind::Top: return true;
                case ElemKind::Bot: return false;
                case ElemKind::Lit: return i.count(e.elem.literal) > 0;
                case ElemKind::Default: return i.count(e.elem.literal) == 0;
            }
            return false;
        case NodeKind::And:
            return std::all_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return satisfies(i, k); });
        case NodeKind::Or:
            return std::any_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return satisfies(i, k); });
    }
    return false;
}

bool satisfies_head(const Interpretation& i, const Expr& e) {
    switch (e.kind) {
        case NodeKind::Over:
            if (e.elem.is_constant()) return e.elem.kind == ElemKind::Top;
            return !satisfies(i, Expr::of(e.elem));
        case NodeKind::Elem: return satisfies(i, e);
        case NodeKind::And:
            return std::all_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return satisfies_head(i, k); });
        case NodeKind::Or:
            return std::any_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return satisfies_head(i, k); });
    }
    return false;
}

bool falsifies(const Interpretation& i, const Expr& e) { return satisfies(i, shift_to_body(e)); }

bool falsifies_direct(const Interpretation& i, const Expr& e) {
    switch (e.kind) {
        case NodeKind::Elem:
            if (e.elem.kind == ElemKind::Bot) return true;
            if (e.elem.kind == ElemKind::Top) return false;
            throw Error(ErrorKind::Position, "positive leaf " + render(e) + " cannot be falsified");
        case NodeKind::Over:
            if (e.elem.is_constant()) return e.elem.kind == ElemKind::Bot;
            return satisfies(i, Expr::of(e.elem));
        case NodeKind::And:
            return std::any_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return falsifies_direct(i, k); });
        case NodeKind::Or:
            return std::all_of(e.kids.begin(), e.kids.end(), [&](const Expr& k) { return falsifies_direct(i, k); });
    }
    return false;
}

namespace {

void require_nnp(const Rule& r) {
    if (!is_positive_horn(r.head))
        throw Error(ErrorKind::NotNNP, "rule " + render(r) + " has a head that is not positive-Horn");
}

bool pair_holds(const Interpretation& i, const ReductPair& p) {
    return !falsifies(i, p.delta) || (p.h && i.count(*p.h));
}

// Overlined default leaves become constants; the rest of a delta is left alone.
Expr reduce_delta_leaves(const Expr& e, const Interpretation& i) {
    if (e.kind == NodeKind::Over && e.elem.kind == ElemKind::Default)
        return Expr::over(i.count(e.elem.literal) ? Elementary::top() : Elementary::bot());
    if (e.is_leaf()) return e;
    std::vector<Expr> kids;
    kids.reserve(e.kids.size());
    for (const auto& k : e.kids) kids.push_back(reduce_delta_leaves(k, i));
    return Expr{e.kind, {}, std::move(kids)};
}

}  // namespace

bool satisfies_rule(const Interpretation& i, const Rule& r) {
    require_nnp(r);
    if (!satisfies(i, r.body)) return true;
    auto dec = h_delta(r.head);
    return std::all_of(dec.pairs.begin(), dec.pairs.end(),
                       [&](const DeltaPair& p) { return pair_holds(i, {p.h, p.delta}); });
}

bool satisfies(const Interpretation& i, const Rule& r) {
    if (is_positive_horn(r.head)) return satisfies_rule(i, r);
    return !satisfies(i, r.body) || satisfies_head(i, r.head);
}

bool satisfies(const Interpretation& i, const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(), [&](const Rule& r) { return satisfies(i, r); });
}

Program ReductProgram::to_program() const {
    Program out;
    for (const auto& r : rules) {
        DeltaDecomposition d;
        for (const auto& p : r.pairs) d.pairs.push_back({{}, p.h, p.delta});
        out.rules.push_back({d.as_expr(), r.body});
    }
    return out;
}

PreparedProgram prepare(const Program& p) {
    PreparedProgram out;
    for (const auto& r : p.rules) {
        require_nnp(r);
        ReductRule rr{r.body, {}};
        for (auto& d : h_delta(r.head).pairs) rr.pairs.push_back({d.h, std::move(d.delta)});
        out.rules.push_back(std::move(rr));
    }
    return out;
}

Expr reduce_defaults(const Expr& e, const Interpretation& i) {
    if (e.kind == NodeKind::Elem && e.elem.kind == ElemKind::Default)
        return i.count(e.elem.literal) ? Expr::bot() : Expr::top();
    if (e.kind == NodeKind::Over && e.elem.kind == ElemKind::Default)
        return Expr::over(i.count(e.elem.literal) ? Elementary::top() : Elementary::bot());
    if (e.is_leaf()) return e;
    std::vector<Expr> kids;
    kids.reserve(e.kids.size());
    for (const auto& k : e.kids) kids.push_back(reduce_defaults(k, i));
    return Expr{e.kind, {}, std::move(kids)};
}

Program reduce_defaults(const Program& p, const Interpretation& i) {
    Program out;
    for (const auto& r : p.rules) out.rules.push_back({reduce_defaults(r.head, i), reduce_defaults(r.body, i)});
    return out;
}

ReductProgram reduct(const PreparedProgram& p, const Interpretation& i) {
    ReductProgram out;
    for (const auto& r : p.rules) {
        Expr body = simplify_constants(reduce_defaults(r.body, i), Side::Body);
        if (body.is_bot()) continue;
        ReductRule rr{std::move(body), {}};
        for (const auto& pr : r.pairs) {
            Expr image = simplify_constants(shift_to_body(reduce_delta_leaves(pr.delta, i)), Side::Body);
            if (image.is_bot()) continue;  // never falsified
            ReductPair np{pr.h, image.is_top() ? Expr::bot() : shift_to_head(image)};
            if (std::find(rr.pairs.begin(), rr.pairs.end(), np) == rr.pairs.end()) rr.pairs.push_back(std::move(np));
        }
        if (!rr.pairs.empty()) out.rules.push_back(std::move(rr));
    }
    return out;
}

ReductProgram reduct(const Program& p, const Interpretation& i) { return reduct(prepare(p), i); }

ReductProgram as_reduct(const Program& p) {
    if (!is_not_free(p)) throw Error(ErrorKind::NotNotFree, "program contains default negation");
    return reduct(p, {});
}

bool is_closed(const Interpretation& i, const Program& p) {
    for (const auto& r : prepare(p).rules) {
        if (!satisfies(i, r.body)) continue;
        for (const auto& pr : r.pairs)
            if (falsifies(i, pr.delta) && !(pr.h && i.count(*pr.h))) return false;
    }
    return true;
}

bool is_supported(const Interpretation& i, const Program& p) {
    auto prep = prepare(p);
    for (auto l : i) {
        bool found = false;
        for (const auto& r : prep.rules) {
            if (found) break;
            if (!satisfies(i, r.body)) continue;
            for (const auto& pr : r.pairs)
                if (pr.h && *pr.h == l && falsifies(i, pr.delta)) {
                    found = true;
                    break;
                }
        }
        if (!found) return false;
    }
    return true;
}

std::set<HeadItem> nt_step(const ReductProgram& p, const Interpretation& i) {
    std::set<HeadItem> out;
    for (const auto& r : p.rules) {
        if (!satisfies(i, r.body)) continue;
        for (const auto& pr : r.pairs)
            if (falsifies(i, pr.delta)) out.insert(pr.h);
    }
    for (const auto& h : out) {
        if (!h) continue;
        auto c = h->complement();
        if (i.count(c) || out.count(c))
            throw Error(ErrorKind::InconsistentResult, "both " + to_string(*h) + " and " + to_string(c) + " derived");
    }
    return out;
}

Interpretation least_model_fixpoint(const ReductProgram& p, std::vector<Literal>* order) {
    Interpretation cur;
    for (;;) {
        auto next = nt_step(p, cur);
        if (next.count(std::nullopt)) throw Error(ErrorKind::ConstraintFired, "a constraint fired");
        std::size_t before = cur.size();
        for (const auto& h : next)
            if (cur.insert(*h).second && order) order->push_back(*h);
        if (cur.size() == before) return cur;
    }
}

Interpretation least_model_fixpoint(const Program& p, std::vector<Literal>* order) {
    return least_model_fixpoint(as_reduct(p), order);
}

std::vector<Interpretation> consistent_subsets(const std::vector<Literal>& universe) {
    std::vector<Interpretation> out;
    std::size_t n = universe.size();
    std::vector<std::size_t> pick;
    // combinations of size k, lexicographic
    for (std::size_t k = 0; k <= n; ++k) {
        pick.resize(k);
        for (std::size_t j = 0; j < k; ++j) pick[j] = j;
        for (;;) {
            Interpretation s;
            for (auto j : pick) s.insert(universe[j]);
            if (is_consistent(s)) out.push_back(std::move(s));
            std::size_t j = k;
            while (j > 0 && pick[j - 1] == n - k + j - 1) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    return out;
}

namespace {

void check_universe(std::size_t size, std::size_t bound) {
    if (size > bound)
        throw Error(ErrorKind::UniverseTooLarge,
                    "universe of " + std::to_string(size) + " literals exceeds the bound " + std::to_string(bound));
}

bool is_subset(const Interpretation& a, const Interpretation& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Interpretation> minimal_models(const Program& p, const std::vector<Literal>& universe,
                                           std::size_t max_universe) {
    check_universe(universe.size(), max_universe);
    std::vector<Interpretation> out;
    for (auto& s : consistent_subsets(universe)) {
        if (!satisfies(s, p)) continue;
        if (std::any_of(out.begin(), out.end(), [&](const Interpretation& m) { return is_subset(m, s); })) continue;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Interpretation> minimal_models(const Program& p) { return minimal_models(p, literals_of(p)); }

std::vector<Interpretation> answer_sets(const Program& p, const AnswerSetOptions& opts) {
    auto prep = prepare(p);
    auto universe = head_consistency(p).head_literals;
    std::sort(universe.begin(), universe.end());
    check_universe(universe.size(), opts.max_universe);

    std::vector<Interpretation> out;
    for (const auto& cand : consistent_subsets(universe)) {
        ReductProgram red = reduct(prep, cand);
        ReductProgram core;
        bool constraints_hold = true;
        for (auto& r : red.rules) {
            ReductRule kept{r.body, {}};
            bool body_holds = satisfies(cand, r.body);
            for (auto& pr : r.pairs) {
                if (pr.h) kept.pairs.push_back(pr);
                else if (body_holds && falsifies(cand, pr.delta)) constraints_hold = false;
            }
            if (!kept.pairs.empty()) core.rules.push_back(std::move(kept));
        }
        if (!constraints_hold) continue;
        try {
            if (least_model_fixpoint(core) != cand) continue;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InconsistentResult) continue;
            throw;
        }
        out.push_back(cand);
        if (!opts.all) break;
    }
    return out;
}

EquivalenceResult strongly_equivalent(const Program& a, const Program& b, const std::vector<Literal>& universe) {
    auto subsets = consistent_subsets(universe);
    for (const auto& i : subsets) {
        Program ra = reduce_defaults(a, i);
        Program rb = reduce_defaults(b, i);
        for (const auto& j : subsets) {
            bool sa = std::all_of(ra.rules.begin(), ra.rules.end(), [&](const Rule& r) {
                return !satisfies(j, r.body) || satisfies_head(j, r.head);
            });
            bool sb = std::all_of(rb.rules.begin(), rb.rules.end(), [&](const Rule& r) {
                return !satisfies(j, r.body) || satisfies_head(j, r.head);
            });
            if (sa != sb) return {false, std::make_pair(i, j)};
        }
    }
    return {};
}

EquivalenceResult strongly_equivalent(const Program& a, const Program& b, std::size_t max_atoms) {
    std::set<Literal> lits;
    for (auto l : literals_of(a)) lits.insert(l);
    for (auto l : literals_of(b)) lits.insert(l);
    std::set<Atom> atoms;
    for (auto l : lits) atoms.insert(l.atom);
    if (atoms.size() > max_atoms)
        throw Error(ErrorKind::UniverseTooLarge,
                    std::to_string(atoms.size()) + " atoms exceed the bound " + std::to_string(max_atoms));
    return strongly_equivalent(a, b, std::vector<Literal>(lits.begin(), lits.end()));
}

}  // namespace nnasp
