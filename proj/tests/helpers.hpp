#pragma once

#include <set>
#include <string>

#include "nnasp/ast.hpp"
#include "nnasp/translate.hpp"

namespace helpers {

// Canonical rule set of a program written with single-literal heads and flat bodies.
inline std::set<std::string> normal_rules(const char* text) { return nnasp::sn_of(nnasp::parse(text)).canonical(); }

inline nnasp::Program program(const nnasp::Expr& head, const nnasp::Expr& body = nnasp::Expr::top()) {
    return nnasp::Program{{nnasp::Rule{head, body}}};
}

}  // namespace helpers
