#pragma once

#include "fekete/expr.hpp"
#include "fekete/poly.hpp"

#include <string>

namespace fekete {

/// Reads the canonical text form ("3*x12*z12 - z12 + 1") over `vars`.
inline MultiPoly parse_polynomial(const std::string& text, const VariableTable& vars, MonomialOrder order) {
  ExprLeaves<MultiPoly> leaves;
  leaves.number = [&](const Rational& q) { return MultiPoly::constant(q, order); };
  leaves.identifier = [&](const std::string& name) {
    auto idx = vars.find(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'");
    return MultiPoly::variable(*idx, order);
  };
  return parse_expression(text, leaves);
}

inline MultiPoly parse_polynomial(const std::string& text, const VariableTable& vars) {
  return parse_polynomial(text, vars, vars.grevlex());
}

}  // namespace fekete
