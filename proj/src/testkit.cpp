#include "nnasp/testkit.hpp"

#include <algorithm>
#include <map>

namespace nnasp::testkit {

const char* to_string(GenClass c) {
    switch (c) {
        case GenClass::Negative: return "negative";
        case GenClass::Horn: return "horn";
        case GenClass::PositiveHorn: return "positive_horn";
        case GenClass::PositiveNonHorn: return "positive_non_horn";
        case GenClass::NnpRule: return "nnp_rule";
        case GenClass::DnpRule: return "dnp_rule";
        case GenClass::NpRule: return "np_rule";
        case GenClass::NotFree: return "not_free";
    }
    return "?";
}

GenClass gen_class_from(const std::string& name) {
    for (auto c : {GenClass::Negative, GenClass::Horn, GenClass::PositiveHorn, GenClass::PositiveNonHorn,
                   GenClass::NnpRule, GenClass::DnpRule, GenClass::NpRule, GenClass::NotFree})
        if (name == to_string(c)) return c;
    throw Error(ErrorKind::Syntax, "unknown class '" + name + "'");
}

std::string atom_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "p" + std::to_string(i);
}

Generator::Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg_.target == GenClass::NotFree) cfg_.defaults = false;
    cfg_.atom_count = std::max<std::size_t>(cfg_.atom_count, 1);
    cfg_.max_width = std::max<std::size_t>(cfg_.max_width, 2);
    for (std::size_t i = 0; i < cfg_.atom_count; ++i) head_sign_.push_back(cfg_.extended && chance(0.3));
}

std::size_t Generator::pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

bool Generator::chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

Literal Generator::literal() {
    Atom a = Atom::intern(atom_name(pick(cfg_.atom_count)));
    return {a, cfg_.extended && chance(0.2)};
}

Literal Generator::head_literal() {
    if (!cfg_.head_consistent) return literal();
    std::size_t i = pick(cfg_.atom_count);
    return {Atom::intern(atom_name(i)), head_sign_[i]};
}

std::size_t Generator::width() { return 2 + pick(cfg_.max_width - 1); }

Expr Generator::negative_leaf() {
    Literal l = literal();
    if (cfg_.defaults && chance(0.3)) return Expr::over(Elementary::naf(l));
    return Expr::over(Elementary::of(l));
}

Expr Generator::positive_leaf() {
    if (cfg_.constraints && chance(0.08)) return Expr::bot();
    return Expr::literal(head_literal());
}

Expr Generator::negative(std::size_t depth) {
    if (depth == 0 || chance(0.4)) return negative_leaf();
    std::vector<Expr> kids;
    for (std::size_t i = 0, w = width(); i < w; ++i) kids.push_back(negative(depth - 1));
    return chance(0.5) ? Expr::conj(std::move(kids)) : Expr::disj(std::move(kids));
}

Expr Generator::positive_horn(std::size_t depth) {
    if (depth == 0 || chance(0.3)) return positive_leaf();
    std::vector<Expr> kids;
    std::size_t w = width();
    if (chance(0.5)) {
        for (std::size_t i = 0; i < w; ++i) kids.push_back(positive_horn(depth - 1));
        return Expr::conj(std::move(kids));
    }
    std::size_t pos = pick(w);
    for (std::size_t i = 0; i < w; ++i) kids.push_back(i == pos ? positive_horn(depth - 1) : negative(depth - 1));
    return Expr::disj(std::move(kids));
}

Expr Generator::horn(std::size_t depth) {
    if (depth == 0) return chance(0.5) ? negative_leaf() : positive_leaf();
    switch (pick(4)) {
        case 0: return negative(depth);
        case 1: return positive_horn(depth);
        case 2: {
            std::vector<Expr> kids;
            for (std::size_t i = 0, w = width(); i < w; ++i) kids.push_back(horn(depth - 1));
            return Expr::conj(std::move(kids));
        }
        default: {
            std::vector<Expr> kids;
            std::size_t w = width(), pos = pick(w);
            for (std::size_t i = 0; i < w; ++i) kids.push_back(i == pos ? horn(depth - 1) : negative(depth - 1));
            return Expr::disj(std::move(kids));
        }
    }
}

Expr Generator::positive_non_horn(std::size_t depth) {
    if (depth == 0 || chance(0.4)) {
        // a clause with at least two distinct positive items
        std::vector<Expr> kids;
        Literal first = head_literal();
        kids.push_back(Expr::literal(first));
        Literal second = head_literal();
        for (int tries = 0; second == first && tries < 16; ++tries) second = head_literal();
        kids.push_back(second == first ? Expr::bot() : Expr::literal(second));
        for (std::size_t i = 0, extra = pick(3); i < extra; ++i)
            kids.push_back(chance(0.5) ? negative_leaf() : positive_leaf());
        for (std::size_t i = kids.size(); i > 1; --i) std::swap(kids[i - 1], kids[pick(i)]);
        return Expr::disj(std::move(kids));
    }
    std::vector<Expr> kids;
    std::size_t w = width();
    if (chance(0.4)) {
        for (std::size_t i = 0; i < w; ++i) kids.push_back(positive_non_horn(depth - 1));
        return Expr::conj(std::move(kids));
    }
    std::size_t pos = pick(w);
    for (std::size_t i = 0; i < w; ++i) {
        if (i == pos) kids.push_back(positive_non_horn(depth - 1));
        else if (chance(0.4)) kids.push_back(negative(depth - 1));
        else if (chance(0.5)) kids.push_back(positive_horn(depth - 1));
        else kids.push_back(positive_non_horn(depth - 1));
    }
    return Expr::disj(std::move(kids));
}

Expr Generator::body(std::size_t depth) {
    if (depth == 0 || chance(0.4)) {
        if (chance(0.03)) return Expr::top();
        Literal l = literal();
        if (cfg_.defaults && chance(0.35)) return Expr::of(Elementary::naf(l));
        return Expr::literal(l);
    }
    std::vector<Expr> kids;
    for (std::size_t i = 0, w = width(); i < w; ++i) kids.push_back(body(depth - 1));
    return chance(0.6) ? Expr::conj(std::move(kids)) : Expr::disj(std::move(kids));
}

Rule Generator::nnp_rule() {
    Expr h = positive_horn(cfg_.max_depth);
    Expr b = chance(0.25) ? Expr::top() : body(cfg_.max_depth > 0 ? cfg_.max_depth - 1 : 0);
    return {std::move(h), std::move(b)};
}

Rule Generator::dnp_rule() {
    Expr h = positive_non_horn(cfg_.max_depth);
    Expr b = chance(0.25) ? Expr::top() : body(cfg_.max_depth > 0 ? cfg_.max_depth - 1 : 0);
    return {std::move(h), std::move(b)};
}

Rule Generator::np_rule() {
    Expr h = cfg_.constraints && chance(0.08) ? Expr::bot() : Expr::literal(head_literal());
    std::vector<Expr> kids;
    for (std::size_t i = 0, n = pick(cfg_.max_width + 1); i < n; ++i) {
        Literal l = literal();
        kids.push_back(cfg_.defaults && chance(0.35) ? Expr::of(Elementary::naf(l)) : Expr::literal(l));
    }
    Expr b = kids.empty() ? Expr::top() : kids.size() == 1 ? kids.front() : Expr::conj(std::move(kids));
    return {std::move(h), std::move(b)};
}

Program Generator::program() {
    Program p;
    for (std::size_t i = 0; i < cfg_.rule_count; ++i) {
        switch (cfg_.target) {
            case GenClass::NpRule: p.rules.push_back(np_rule()); break;
            case GenClass::DnpRule: p.rules.push_back(chance(0.5) ? dnp_rule() : nnp_rule()); break;
            default: p.rules.push_back(nnp_rule()); break;
        }
    }
    return p;
}

Expr gen_expr(const GenConfig& cfg) {
    Generator g(cfg);
    switch (cfg.target) {
        case GenClass::Negative: return g.negative(cfg.max_depth);
        case GenClass::Horn: return g.horn(cfg.max_depth);
        case GenClass::PositiveHorn: return g.positive_horn(cfg.max_depth);
        case GenClass::PositiveNonHorn: return g.positive_non_horn(cfg.max_depth);
        default: return gen_rule(cfg).head;
    }
}

Rule gen_rule(const GenConfig& cfg) {
    Generator g(cfg);
    switch (cfg.target) {
        case GenClass::DnpRule: return g.dnp_rule();
        case GenClass::NpRule: return g.np_rule();
        default: return g.nnp_rule();
    }
}

Program gen_program(const GenConfig& cfg) { return Generator(cfg).program(); }

bool oracle_holds(const Expr& e, const Interpretation& i) {
    switch (e.kind) {
        case NodeKind::Elem:
            switch (e.elem.kind) {
                case ElemKind::Top: return true;
                case ElemKind::Bot: return false;
                case ElemKind::Lit: return i.find(e.elem.literal) != i.end();
                case ElemKind::Default: return i.find(e.elem.literal) == i.end();
            }
            return false;
        case NodeKind::Over:
            switch (e.elem.kind) {
                case ElemKind::Top: return true;
                case ElemKind::Bot: return false;
                case ElemKind::Lit: return i.find(e.elem.literal) == i.end();
                case ElemKind::Default: return i.find(e.elem.literal) != i.end();
            }
            return false;
        case NodeKind::And:
            for (const auto& k : e.kids)
                if (!oracle_holds(k, i)) return false;
            return true;
        case NodeKind::Or:
            for (const auto& k : e.kids)
                if (oracle_holds(k, i)) return true;
            return false;
    }
    return false;
}

bool oracle_model(const Program& p, const Interpretation& i) {
    for (const auto& r : p.rules)
        if (oracle_holds(r.body, i) && !oracle_holds(r.head, i)) return false;
    return true;
}

namespace {

template <class Check>
std::vector<Interpretation> enumerate(const std::vector<Literal>& universe, std::size_t bound, Check check) {
    if (universe.size() > bound)
        throw Error(ErrorKind::UniverseTooLarge, "universe of " + std::to_string(universe.size()) + " literals");
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
        Interpretation s;
        bool clash = false;
        for (std::size_t b = 0; b < universe.size(); ++b)
            if (mask >> b & 1) {
                if (s.count(universe[b].complement())) clash = true;
                s.insert(universe[b]);
            }
        if (!clash && check(s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void gather(const Expr& e, std::set<Literal>& out) {
    if (e.is_leaf()) {
        if (e.elem.kind == ElemKind::Lit || e.elem.kind == ElemKind::Default) out.insert(e.elem.literal);
        return;
    }
    for (const auto& k : e.kids) gather(k, out);
}

}  // namespace

std::vector<Interpretation> brute_models(const Expr& e, const std::vector<Literal>& universe, std::size_t bound) {
    return enumerate(universe, bound, [&](const Interpretation& s) { return oracle_holds(e, s); });
}

std::vector<Interpretation> brute_models(const Program& p, const std::vector<Literal>& universe, std::size_t bound) {
    return enumerate(universe, bound, [&](const Interpretation& s) { return oracle_model(p, s); });
}

std::optional<Interpretation> brute_least_model(const Program& p, std::size_t bound) {
    std::set<Literal> lits;
    for (const auto& r : p.rules) {
        gather(r.head, lits);
        gather(r.body, lits);
    }
    auto models = brute_models(p, std::vector<Literal>(lits.begin(), lits.end()), bound);
    if (models.empty()) return std::nullopt;
    Interpretation meet = models.front();
    for (const auto& m : models) {
        Interpretation next;
        std::set_intersection(meet.begin(), meet.end(), m.begin(), m.end(), std::inserter(next, next.end()));
        meet = std::move(next);
    }
    if (!oracle_model(p, meet)) return std::nullopt;
    return meet;
}

PropagationResult classical_unit_propagation(const Expr& cnf) {
    std::vector<std::vector<Expr>> clauses;
    auto clause_of = [](const Expr& c) {
        std::vector<Expr> items;
        if (c.is_leaf()) items.push_back(c);
        else if (c.kind == NodeKind::Or)
            for (const auto& k : c.kids) {
                if (!k.is_leaf()) throw Error(ErrorKind::NotCNF, "nested clause " + render(c));
                items.push_back(k);
            }
        else throw Error(ErrorKind::NotCNF, "not a clause: " + render(c));
        for (const auto& it : items)
            if (it.elem.kind == ElemKind::Default) throw Error(ErrorKind::NotCNF, "default literal in a clause");
        return items;
    };
    if (cnf.kind == NodeKind::And)
        for (const auto& c : cnf.kids) clauses.push_back(clause_of(c));
    else clauses.push_back(clause_of(cnf));

    std::map<Literal, bool> value;
    PropagationResult res;
    bool changed = true;
    while (changed && !res.conflict) {
        changed = false;
        for (const auto& c : clauses) {
            bool sat = false;
            const Expr* open = nullptr;
            std::size_t open_count = 0;
            for (const auto& it : c) {
                if (it.elem.kind == ElemKind::Top) {
                    sat = true;
                    break;
                }
                if (it.elem.kind == ElemKind::Bot) continue;
                auto v = value.find(it.elem.literal);
                bool want = it.kind == NodeKind::Elem;
                if (v == value.end()) {
                    ++open_count;
                    open = &it;
                } else if (v->second == want) {
                    sat = true;
                    break;
                }
            }
            if (sat) continue;
            if (open_count == 0) {
                res.conflict = true;
                break;
            }
            if (open_count == 1) {
                value[open->elem.literal] = open->kind == NodeKind::Elem;
                changed = true;
            }
        }
    }
    for (const auto& [l, v] : value)
        if (v) res.units.insert(l);
    for (auto l : res.units)
        if (res.units.count(l.complement())) res.conflict = true;
    return res;
}

std::set<HeadItem> textbook_tp(const NormalProgram& p, const Interpretation& i) {
    std::set<HeadItem> out;
    for (const auto& r : p.rules) {
        bool fires = true;
        for (const auto& b : r.body) {
            if (b.kind == ElemKind::Lit && !i.count(b.literal)) fires = false;
            if (b.kind == ElemKind::Default && i.count(b.literal)) fires = false;
            if (b.kind == ElemKind::Bot) fires = false;
        }
        if (fires) out.insert(r.head);
    }
    return out;
}

std::vector<Interpretation> gl_reference_answer_sets(const NormalProgram& p, std::size_t bound) {
    std::set<Literal> heads;
    for (const auto& r : p.rules)
        if (r.head) heads.insert(*r.head);
    std::vector<Literal> universe(heads.begin(), heads.end());
    return enumerate(universe, bound, [&](const Interpretation& s) {
        // reduct: drop rules blocked by s, keep the positive bodies
        std::vector<std::pair<HeadItem, std::vector<Literal>>> reduced;
        for (const auto& r : p.rules) {
            bool blocked = false;
            std::vector<Literal> pos;
            for (const auto& b : r.body) {
                if (b.kind == ElemKind::Default && s.count(b.literal)) blocked = true;
                if (b.kind == ElemKind::Bot) blocked = true;
                if (b.kind == ElemKind::Lit) pos.push_back(b.literal);
            }
            if (!blocked) reduced.push_back({r.head, pos});
        }
        Interpretation m;
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& [h, pos] : reduced) {
                if (!std::all_of(pos.begin(), pos.end(), [&](Literal l) { return m.count(l) > 0; })) continue;
                if (!h) return false;
                if (m.insert(*h).second) grew = true;
            }
        }
        for (auto l : m)
            if (m.count(l.complement())) return false;
        return m == s;
    });
}

namespace {

Expr read_defaults(const Expr& e, const Interpretation& i) {
    if (e.is_leaf()) {
        if (e.elem.kind != ElemKind::Default) return e;
        bool holds = i.count(e.elem.literal) == 0;
        if (e.kind == NodeKind::Over) holds = !holds;
        return holds ? Expr::top() : Expr::bot();
    }
    Expr out = e;
    for (auto& k : out.kids) k = read_defaults(k, i);
    return out;
}

}  // namespace

std::vector<Interpretation> brute_answer_sets(const Program& p, std::size_t bound) {
    std::set<Literal> lits;
    for (const auto& r : p.rules) {
        gather(r.head, lits);
        gather(r.body, lits);
    }
    std::vector<Literal> universe(lits.begin(), lits.end());
    return enumerate(universe, bound, [&](const Interpretation& s) {
        Program reduced;
        for (const auto& r : p.rules) reduced.rules.push_back({read_defaults(r.head, s), read_defaults(r.body, s)});
        if (!oracle_model(reduced, s)) return false;
        std::vector<Literal> members(s.begin(), s.end());
        for (const auto& m : enumerate(members, bound, [&](const Interpretation& t) { return oracle_model(reduced, t); }))
            if (m.size() < s.size()) return false;
        return true;
    });
}

}  // namespace nnasp::testkit
