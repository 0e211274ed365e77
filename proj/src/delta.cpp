#include "nnasp/delta.hpp"

#include "nnasp/classify.hpp"

namespace nnasp {

std::string to_string(const HeadItem& h) { return h ? to_string(*h) : "bot"; }

Expr pair_expr(const HeadItem& h, const Expr& delta) {
    Expr leaf = h ? Expr::literal(*h) : Expr::bot();
    if (delta.is_bot()) return leaf;
    std::vector<Expr> kids{std::move(leaf)};
    if (delta.kind == NodeKind::Or) kids.insert(kids.end(), delta.kids.begin(), delta.kids.end());
    else kids.push_back(delta);
    return Expr::disj(std::move(kids));
}

Expr DeltaDecomposition::as_expr() const {
    if (pairs.size() == 1) return pair_expr(pairs.front().h, pairs.front().delta);
    std::vector<Expr> kids;
    kids.reserve(pairs.size());
    for (const auto& p : pairs) kids.push_back(pair_expr(p.h, p.delta));
    return Expr::conj(std::move(kids));
}

namespace {

void collect_occurrences(const Expr& e, Handle& h, std::vector<Occurrence>& out) {
    if (e.kind == NodeKind::Elem) {
        if (e.elem.kind == ElemKind::Lit) out.push_back({h, e.elem.literal});
        else if (e.elem.kind == ElemKind::Bot) out.push_back({h, std::nullopt});
        return;
    }
    for (std::size_t i = 0; i < e.kids.size(); ++i) {
        h.path.push_back(i);
        collect_occurrences(e.kids[i], h, out);
        h.path.pop_back();
    }
}

// Upward walk from the occurrence; the pending list is the disjunction built so far.
Expr walk_delta(const Expr& head, const Handle& occ) {
    std::vector<const Expr*> chain{&head};
    for (auto i : occ.path) chain.push_back(&chain.back()->kids[i]);
    std::vector<Expr> pending;
    for (std::size_t d = occ.path.size(); d-- > 0;) {
        const Expr& parent = *chain[d];
        if (parent.kind != NodeKind::Or) continue;
        std::size_t pos = occ.path[d];
        std::vector<Expr> next;
        next.reserve(parent.kids.size() - 1 + pending.size());
        for (std::size_t i = 0; i < parent.kids.size(); ++i) {
            if (i == pos) {
                for (auto& p : pending) next.push_back(std::move(p));
            } else {
                next.push_back(parent.kids[i]);
            }
        }
        pending = std::move(next);
    }
    if (pending.empty()) return Expr::bot();
    if (pending.size() == 1) return std::move(pending.front());
    return Expr::disj(std::move(pending));
}

void require_positive_horn(const Expr& head) {
    if (!is_positive_horn(head))
        throw Error(ErrorKind::NotPositiveHorn, "head " + render(head) + " is not positive-Horn");
}

}  // namespace

std::vector<Occurrence> positive_occurrences(const Expr& head) {
    std::vector<Occurrence> out;
    Handle h;
    collect_occurrences(head, h, out);
    return out;
}

Expr delta_of(const Expr& head, const Handle& occ) {
    require_positive_horn(head);
    const Expr& leaf = at(head, occ);
    if (!(leaf.is(ElemKind::Lit) || leaf.is_bot()))
        throw Error(ErrorKind::BadHandle, "handle " + to_string(occ) + " is not a positive occurrence");
    return walk_delta(head, occ);
}

DeltaDecomposition h_delta(const Expr& head) {
    require_positive_horn(head);
    DeltaDecomposition d;
    for (auto& o : positive_occurrences(head)) {
        Expr delta = walk_delta(head, o.handle);
        d.pairs.push_back({std::move(o.handle), o.h, std::move(delta)});
    }
    return d;
}

Expr shift_to_body(const Expr& e) {
    if (e.is_leaf()) {
        bool over = e.kind == NodeKind::Over;
        switch (e.elem.kind) {
            case ElemKind::Top: return Expr::bot();
            case ElemKind::Bot: return Expr::top();
            default:
                if (!over)
                    throw Error(ErrorKind::Position, "positive leaf " + render(e) + " cannot move to a body");
                return Expr::of(e.elem);
        }
    }
    std::vector<Expr> kids;
    kids.reserve(e.kids.size());
    for (const auto& k : e.kids) kids.push_back(shift_to_body(k));
    return e.kind == NodeKind::And ? Expr::disj(std::move(kids)) : Expr::conj(std::move(kids));
}

Expr shift_to_head(const Expr& e) {
    if (e.is_leaf()) {
        if (e.kind == NodeKind::Over)
            throw Error(ErrorKind::Position, "overlined leaf " + render(e) + " cannot move to a head");
        switch (e.elem.kind) {
            case ElemKind::Top: return Expr::over(Elementary::bot());
            case ElemKind::Bot: return Expr::over(Elementary::top());
            default: return Expr::over(e.elem);
        }
    }
    std::vector<Expr> kids;
    kids.reserve(e.kids.size());
    for (const auto& k : e.kids) kids.push_back(shift_to_head(k));
    return e.kind == NodeKind::And ? Expr::disj(std::move(kids)) : Expr::conj(std::move(kids));
}

}  // namespace nnasp
