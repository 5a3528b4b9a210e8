#pragma once
// Integer degree expressions: integers, p, q, named variables, + - * ^ ( ).

#include <map>
#include <string>

#include "maycalc/core.hpp"

namespace maycalc {

Int eval_expr(const std::string& text, const PrimeContext& ctx, const std::map<std::string, Int>& vars = {});

}  // namespace maycalc
