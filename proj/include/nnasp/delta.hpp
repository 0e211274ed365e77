#pragma once

#include <optional>
#include <vector>

#include "nnasp/ast.hpp"

namespace nnasp {

// A positive head item: a literal, or bot when empty.
using HeadItem = std::optional<Literal>;

std::string to_string(const HeadItem& h);

struct Occurrence {
    Handle handle;
    HeadItem h;
};

struct DeltaPair {
    Handle occurrence;
    HeadItem h;
    Expr delta;  // bot or fully negative
};

struct DeltaDecomposition {
    std::vector<DeltaPair> pairs;

    // and[(h1 v D1) ... (hk v Dk)]
    Expr as_expr() const;
};

// h v delta, with the top disjunction of delta spliced in; plain h when delta is bot.
Expr pair_expr(const HeadItem& h, const Expr& delta);

std::vector<Occurrence> positive_occurrences(const Expr& head);
Expr delta_of(const Expr& head, const Handle& occ);
DeltaDecomposition h_delta(const Expr& head);

Expr shift_to_body(const Expr& e_over);
Expr shift_to_head(const Expr& e_body);

}  // namespace nnasp
