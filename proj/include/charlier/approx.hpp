#pragma once

#include <string>

#include "charlier/log_scalar.hpp"

namespace charlier {

enum class FormulaTag { outer, origin, interior, intermediate, band, turn_right, turn_left };

enum class ErrorOrder {
    one_over_n,        // O(1/n)
    one_over_sqrt_n,   // O(n^{-1/2})
    airy_uniform,      // O(n^{-1/2}) on the Ai term plus O(n^{-2/3}) Ai'
    exp_small,
};

const char* to_string(FormulaTag t);
const char* to_string(ErrorOrder e);
FormulaTag formula_tag_from_string(const std::string& s);

struct ApproxResult {
    LogComplex value;
    FormulaTag formula_tag;
    ErrorOrder error_order;
};

}  // namespace charlier
