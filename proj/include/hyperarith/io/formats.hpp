#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperarith/hybrid/complex.hpp"
#include "hyperarith/quadform/quadratic_space.hpp"

namespace hyperarith {

/// Arithmetic expression in the field generator t: integers, t, + - * / ^,
/// parentheses. "3/2", "1+t", "(1+t)^2/4". Throws ParseError (line, column)
/// and DivisionByZero.
FieldElement parse_element(std::string_view text, const FieldPtr& field, std::size_t line = 1,
                           std::size_t column = 1);

/// Comma-separated elements: "1,0,-t".
Vector<FieldElement> parse_vector(std::string_view text, const FieldPtr& field);

/// Semicolon-separated vectors: "0,1,0;0,0,1".
std::vector<Vector<FieldElement>> parse_vectors(std::string_view text, const FieldPtr& field);

/// Optional `field c_d ... c_0` and `embedding j` lines (default Q), then
/// either `form N` plus N rows or `diag a b ...`.
QuadraticSpace parse_form(std::string_view text);

/// "diag(1,1,1,-1)" over Q.
QuadraticSpace parse_inline_form(std::string_view text);

/// Header lines `field`, `embedding`, `pattern`; then per block
///   block <label>
///   diag ... | form N + rows      (the shared hypersurface form)
///   alpha <element>
/// and `glue <label1> <label2> [edge label]` lines anywhere after the blocks
/// they name.
BlockComplex parse_complex(std::string_view text);

}  // namespace hyperarith
