#include "nnasp/calculus.hpp"

#include <algorithm>
#include <set>

#include "nnasp/classify.hpp"
#include "nnasp/delta.hpp"

namespace nnasp {

const char* to_string(StepRule r) {
    switch (r) {
        case StepRule::NUR: return "NUR";
        case StepRule::NHUR: return "NHUR";
        case StepRule::OrBot: return "or-bot";
        case StepRule::AndBot: return "and-bot";
        case StepRule::Unwrap: return "unwrap";
        case StepRule::Splice: return "splice";
    }
    return "?";
}

bool is_simplification(StepRule r) { return r != StepRule::NUR && r != StepRule::NHUR; }

std::size_t DerivationTrace::count(StepRule r) const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [&](const TraceStep& s) { return s.rule == r; }));
}

std::size_t DerivationTrace::resolution_steps() const { return count(StepRule::NUR) + count(StepRule::NHUR); }

std::size_t DerivationTrace::simplification_steps() const { return steps.size() - resolution_steps(); }

HornWork::HornWork(const Expr& e) {
    nodes_.reserve(node_count(e));
    root_ = build(e, -1);
}

int HornWork::build(const Expr& e, int parent) {
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    Node n;
    n.kind = e.kind;
    n.elem = e.elem;
    n.parent = parent;
    if (e.is_leaf()) {
        if (e.elem.kind == ElemKind::Default)
            throw Error(ErrorKind::NotNotFree, "default literal " + render(e) + " in a working expression");
        if (e.kind == NodeKind::Over && e.elem.is_constant()) {
            // an overlined constant keeps its own truth value
            n.kind = NodeKind::Elem;
        }
        if (e.elem.kind == ElemKind::Lit) {
            ++live_literals_;
            if (e.kind == NodeKind::Over) occ_index_[e.elem.literal].push_back(id);
        }
        nodes_[id] = std::move(n);
        return id;
    }
    nodes_[id] = std::move(n);
    std::vector<int> kids;
    kids.reserve(e.kids.size());
    for (const auto& k : e.kids) kids.push_back(build(k, id));
    nodes_[id].kids = std::move(kids);
    return id;
}

Expr HornWork::export_node(int id) const {
    const Node& n = nodes_[id];
    if (n.kind == NodeKind::Elem) return Expr::of(n.elem);
    if (n.kind == NodeKind::Over) return Expr::over(n.elem);
    std::vector<Expr> kids;
    kids.reserve(n.kids.size());
    for (int k : n.kids) kids.push_back(export_node(k));
    return Expr{n.kind, {}, std::move(kids)};
}

Expr HornWork::expr() const { return export_node(root_); }

bool HornWork::is_false(int id) const {
    const Node& n = nodes_[id];
    return (n.kind == NodeKind::Elem && n.elem.kind == ElemKind::Bot) || (n.kind == NodeKind::Or && n.kids.empty());
}

bool HornWork::is_bot() const { return is_false(root_); }

bool HornWork::is_literal_leaf(int id) const {
    const Node& n = nodes_[id];
    return (n.kind == NodeKind::Elem || n.kind == NodeKind::Over) && n.elem.kind == ElemKind::Lit;
}

std::size_t HornWork::leaf_count() const {
    std::size_t c = 0;
    for (const auto& n : nodes_)
        if (n.alive && (n.kind == NodeKind::Elem || n.kind == NodeKind::Over)) ++c;
    return c;
}

std::size_t HornWork::connective_count() const {
    std::size_t c = 0;
    for (const auto& n : nodes_)
        if (n.alive && (n.kind == NodeKind::And || n.kind == NodeKind::Or)) ++c;
    return c;
}

std::vector<Literal> HornWork::top_level_units() const {
    std::vector<Literal> out;
    const Node& r = nodes_[root_];
    if (r.kind == NodeKind::Elem && r.elem.kind == ElemKind::Lit) out.push_back(r.elem.literal);
    if (r.kind == NodeKind::And)
        for (int k : r.kids)
            if (nodes_[k].kind == NodeKind::Elem && nodes_[k].elem.kind == ElemKind::Lit)
                out.push_back(nodes_[k].elem.literal);
    return out;
}

bool HornWork::is_top_level_unit(Literal l) const {
    auto u = top_level_units();
    return std::find(u.begin(), u.end(), l) != u.end();
}

std::vector<Handle> HornWork::occurrences(Literal l) const {
    std::vector<Handle> out;
    auto it = occ_index_.find(l);
    if (it == occ_index_.end()) return out;
    for (int id : it->second)
        if (nodes_[id].alive && nodes_[id].kind == NodeKind::Over) out.push_back(path_of(id));
    return out;
}

std::size_t HornWork::index_in_parent(int id) const {
    const auto& sib = nodes_[nodes_[id].parent].kids;
    return static_cast<std::size_t>(std::find(sib.begin(), sib.end(), id) - sib.begin());
}

Handle HornWork::path_of(int id) const {
    Handle h;
    while (nodes_[id].parent != -1) {
        h.path.push_back(index_in_parent(id));
        id = nodes_[id].parent;
    }
    std::reverse(h.path.begin(), h.path.end());
    return h;
}

int HornWork::resolve(const Handle& h) const {
    int cur = root_;
    for (auto i : h.path) {
        const Node& n = nodes_[cur];
        if (i >= n.kids.size()) throw Error(ErrorKind::BadHandle, "handle " + to_string(h) + " does not resolve");
        cur = n.kids[i];
    }
    return cur;
}

void HornWork::kill(int id) {
    std::vector<int> stack{id};
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        Node& n = nodes_[c];
        if (!n.alive) continue;
        n.alive = false;
        if (is_literal_leaf(c)) --live_literals_;
        stack.insert(stack.end(), n.kids.begin(), n.kids.end());
    }
}

void HornWork::note_top_level(int id) {
    if (id == root_) {
        const Node& r = nodes_[root_];
        if (r.kind == NodeKind::Elem && r.elem.kind == ElemKind::Lit) fresh_units_.push_back(id);
        if (r.kind == NodeKind::And)
            for (int k : r.kids) note_top_level(k);
        return;
    }
    const Node& n = nodes_[id];
    if (n.parent == root_ && nodes_[root_].kind == NodeKind::And && n.kind == NodeKind::Elem &&
        n.elem.kind == ElemKind::Lit)
        fresh_units_.push_back(id);
}

void HornWork::replace(int id, int with) {
    int p = nodes_[id].parent;
    if (p == -1) {
        root_ = with;
    } else {
        auto& sib = nodes_[p].kids;
        *std::find(sib.begin(), sib.end(), id) = with;
    }
    nodes_[with].parent = p;
    nodes_[id].alive = false;
    nodes_[id].kids.clear();
    note_top_level(with);
}

void HornWork::record_path(StepRule r, std::optional<Literal> l, std::optional<Handle> path) {
    TraceStep s{r, l, std::move(path), live_literals_};
    trace.steps.push_back(s);
    if (observer) observer(*this, trace.steps.back());
}

void HornWork::record(StepRule r, std::optional<Literal> l, int at) {
    record_path(r, l, record_paths ? std::optional<Handle>(path_of(at)) : std::nullopt);
}

int HornWork::apply_local(int n, bool& applied) {
    applied = false;
    if (nodes_[n].kind != NodeKind::And && nodes_[n].kind != NodeKind::Or) return n;
    bool is_and = nodes_[n].kind == NodeKind::And;

    if (nodes_[n].kids.size() == 1) {
        int c = nodes_[n].kids.front();
        replace(n, c);
        applied = true;
        record(StepRule::Unwrap, std::nullopt, c);
        return c;
    }
    auto& kids = nodes_[n].kids;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        int k = kids[i];
        if (is_false(k)) {
            applied = true;
            if (is_and) {
                for (int c : nodes_[n].kids) kill(c);
                nodes_[n].kids.clear();
                nodes_[n].kind = NodeKind::Elem;
                nodes_[n].elem = Elementary::bot();
                record(StepRule::AndBot, std::nullopt, n);
            } else {
                kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(i));
                kill(k);
                record(StepRule::OrBot, std::nullopt, n);
            }
            return n;
        }
        if (nodes_[k].kind == nodes_[n].kind) {
            std::vector<int> grand = std::move(nodes_[k].kids);
            nodes_[k].kids.clear();
            nodes_[k].alive = false;
            for (int g : grand) nodes_[g].parent = n;
            kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(i));
            kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(i), grand.begin(), grand.end());
            if (n == root_)
                for (int g : grand) note_top_level(g);
            applied = true;
            record(StepRule::Splice, std::nullopt, n);
            return n;
        }
    }
    return n;
}

void HornWork::settle(int start) {
    int n = start;
    while (n != -1) {
        bool any = false;
        for (;;) {
            bool applied = false;
            int m = apply_local(n, applied);
            if (!applied) break;
            any = true;
            if (m != n) {
                n = m;
                break;
            }
            if (nodes_[n].kind == NodeKind::Elem) break;
        }
        if (!any && !is_false(n)) return;
        n = nodes_[n].parent;
    }
}

std::vector<int> HornWork::post_order() const {
    std::vector<int> out;
    std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        const Node& n = nodes_[id];
        if (next < n.kids.size()) {
            int k = n.kids[next++];
            stack.push_back({k, 0});
        } else {
            out.push_back(id);
            stack.pop_back();
        }
    }
    return out;
}

void HornWork::normalize() {
    for (int id : post_order()) {
        if (!nodes_[id].alive) continue;
        for (;;) {
            bool applied = false;
            int m = apply_local(id, applied);
            if (!applied || m != id || nodes_[id].kind == NodeKind::Elem) break;
        }
    }
}

bool HornWork::simplify_step() {
    for (int id : post_order()) {
        bool applied = false;
        apply_local(id, applied);
        if (applied) return true;
    }
    return false;
}

int HornWork::scope_of(int leaf) const {
    int cur = leaf;
    while (nodes_[cur].parent != -1) {
        int p = nodes_[cur].parent;
        if (nodes_[p].kind == NodeKind::Or) return cur;
        cur = p;
    }
    return -1;
}

Scope HornWork::neg_scope(const Handle& occ) const {
    int leaf = resolve(occ);
    if (nodes_[leaf].kind != NodeKind::Over || nodes_[leaf].elem.kind != ElemKind::Lit)
        throw Error(ErrorKind::BadHandle, "handle " + to_string(occ) + " is not an overlined literal");
    Scope s;
    int d = scope_of(leaf);
    if (d == -1) {
        s.top_level = true;
        return s;
    }
    s.delta = path_of(d);
    for (int k : nodes_[nodes_[d].parent].kids)
        if (k != d) s.sigma.push_back(path_of(k));
    return s;
}

// A top-level occurrence turns into bot; otherwise its scope leaves the disjunction.
void HornWork::remove_scope(int leaf) {
    int d = scope_of(leaf);
    if (d == -1) {
        --live_literals_;
        nodes_[leaf].kind = NodeKind::Elem;
        nodes_[leaf].elem = Elementary::bot();
        return;
    }
    auto& sib = nodes_[nodes_[d].parent].kids;
    sib.erase(std::find(sib.begin(), sib.end(), d));
    kill(d);
}

void HornWork::apply_nur(Literal unit, const Handle& occ) {
    if (!is_top_level_unit(unit)) throw Error(ErrorKind::NoUnit, to_string(unit) + " is not a top-level unit");
    int leaf = resolve(occ);
    if (nodes_[leaf].kind != NodeKind::Over || !(nodes_[leaf].elem == Elementary::of(unit)))
        throw Error(ErrorKind::BadHandle, "handle " + to_string(occ) + " is not an occurrence of ~" + to_string(unit));
    remove_scope(leaf);
    record_path(StepRule::NUR, unit, record_paths ? std::optional<Handle>(occ) : std::nullopt);
}

void HornWork::apply_nhur(const std::vector<Literal>& units) {
    struct Target {
        std::size_t depth;
        int leaf;
        int removed;
    };
    std::vector<Target> targets;
    for (auto u : units) {
        if (!is_top_level_unit(u)) throw Error(ErrorKind::NoUnit, to_string(u) + " is not a top-level unit");
        auto it = occ_index_.find(u);
        if (it == occ_index_.end()) continue;
        for (int id : it->second) {
            if (!nodes_[id].alive || nodes_[id].kind != NodeKind::Over) continue;
            int d = scope_of(id);
            int removed = d == -1 ? id : d;
            std::size_t depth = 0;
            for (int c = removed; nodes_[c].parent != -1; c = nodes_[c].parent) ++depth;
            targets.push_back({depth, id, removed});
        }
    }
    std::stable_sort(targets.begin(), targets.end(),
                     [](const Target& a, const Target& b) { return a.depth < b.depth; });
    for (const auto& t : targets) {
        if (!nodes_[t.removed].alive || !nodes_[t.leaf].alive) continue;
        remove_scope(t.leaf);
    }
    record_path(StepRule::NHUR, units.size() == 1 ? std::optional<Literal>(units.front()) : std::nullopt,
                std::nullopt);
}

Expr horn_expression(const Program& p) {
    if (!is_not_free(p)) throw Error(ErrorKind::NotNotFree, "program contains default negation");
    std::vector<Expr> forms;
    for (const auto& r : p.rules) {
        if (!is_positive_horn(r.head))
            throw Error(ErrorKind::NotNNP, "rule " + render(r) + " has a head that is not positive-Horn");
        Expr h = simplify_constants(r.head, Side::Head);
        Expr b = simplify_constants(r.body, Side::Body);
        if (b.is_bot()) continue;
        if (h.is_leaf() && h.elem.kind == ElemKind::Top) continue;
        if (h.kind == NodeKind::Over && h.elem.kind == ElemKind::Bot) h = Expr::bot();
        if (b.is_top()) {
            forms.push_back(std::move(h));
            continue;
        }
        std::vector<Expr> kids;
        if (h.kind == NodeKind::Or) kids = std::move(h.kids);
        else kids.push_back(std::move(h));
        Expr nb = shift_to_head(b);
        if (nb.kind == NodeKind::Or) kids.insert(kids.end(), nb.kids.begin(), nb.kids.end());
        else kids.push_back(std::move(nb));
        forms.push_back(Expr::disj(std::move(kids)));
    }
    if (forms.size() == 1) return std::move(forms.front());
    return Expr::conj(std::move(forms));
}

HornWork to_horn_expression(const Program& p) { return HornWork(horn_expression(p)); }

namespace {

std::size_t count_bot_leaves(const Expr& e) {
    if (e.is_leaf()) return e.elem.kind == ElemKind::Bot ? 1 : 0;
    std::size_t n = 0;
    for (const auto& k : e.kids) n += count_bot_leaves(k);
    return n;
}

}  // namespace

UrResult ur_least_model(HornWork w, const UrOptions& opts) {
    UrResult res;
    w.record_paths = opts.record_paths;
    w.observer = opts.observer;
    Expr start = w.expr();
    res.initial_leaves = leaf_count(start);
    res.initial_connectives = connective_count(start);
    res.initial_bot_leaves = count_bot_leaves(start);

    w.normalize();
    w.fresh_units_.clear();
    w.note_top_level(w.root_);

    std::set<Literal> pending, done;
    auto drain = [&] {
        for (int id : w.fresh_units_)
            if (w.nodes_[id].alive && w.nodes_[id].kind == NodeKind::Elem && w.nodes_[id].elem.kind == ElemKind::Lit &&
                !done.count(w.nodes_[id].elem.literal))
                pending.insert(w.nodes_[id].elem.literal);
        w.fresh_units_.clear();
    };
    drain();

    while (!w.is_bot() && !pending.empty()) {
        Literal u = *pending.begin();
        pending.erase(pending.begin());
        if (!done.insert(u).second) continue;
        auto it = w.occ_index_.find(u);
        if (it == w.occ_index_.end()) continue;
        for (int id : it->second) {
            if (w.is_bot()) break;
            if (!w.nodes_[id].alive || w.nodes_[id].kind != NodeKind::Over) continue;
            std::optional<Handle> path;
            if (w.record_paths) path = w.path_of(id);
            int d = w.scope_of(id);
            int from = d == -1 ? w.nodes_[id].parent : w.nodes_[d].parent;
            w.remove_scope(id);
            w.record_path(StepRule::NUR, u, std::move(path));
            if (from != -1) w.settle(from);
            drain();
        }
    }

    res.consistent = !w.is_bot();
    if (res.consistent) {
        std::set<Literal> seen;
        for (auto l : w.top_level_units())
            if (seen.insert(l).second) res.model.push_back(l);
        for (auto l : res.model)
            if (seen.count(l.complement())) res.consistent = false;
    }
    if (!res.consistent) res.model.clear();
    res.final_expr = w.expr();
    res.trace = std::move(w.trace);
    return res;
}

UrResult ur_least_model(const Program& p, const UrOptions& opts) { return ur_least_model(to_horn_expression(p), opts); }

}  // namespace nnasp
