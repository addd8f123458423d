#pragma once

#include <string>

#include "mtcomb/asm_matrix.hpp"
#include "mtcomb/permutation.hpp"
#include "mtcomb/triangle.hpp"

#include "json.hpp"

namespace mtcomb {

/// Text forms: triangle "2; 1 3" (rows T_1..T_{n-1}); ASM as n lines of n
/// space-separated entries; permutation as its one-line notation.
/// Parsers throw std::invalid_argument with a position in the message.

std::string format_triangle(const MonotoneTriangle& T);
MonotoneTriangle parse_triangle(const std::string& text);

std::string format_asm(const AsmMatrix& A);
AsmMatrix parse_asm(const std::string& text);

std::string format_permutation(const Permutation& w);
Permutation parse_permutation(const std::string& text);

nlohmann::json triangle_to_json(const MonotoneTriangle& T);
MonotoneTriangle triangle_from_json(const nlohmann::json& j);

nlohmann::json asm_to_json(const AsmMatrix& A);
AsmMatrix asm_from_json(const nlohmann::json& j);

}  // namespace mtcomb
