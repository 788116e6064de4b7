#pragma once

#include <string_view>
#include <vector>

#include "linkagelab/free_module.hpp"

namespace linkagelab {

/// Parses an expression over the ring's variables: integers, names, + - * ^
/// and parentheses. Exponents are non-negative integers.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// "(f1, f2, ...)" or a bare comma separated list. "()" is the zero ideal.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

/// "[f1, f2, ...]" with exactly module->rank() entries.
FreeVector parse_vector(const FreeModulePtr& module, std::string_view text);

}  // namespace linkagelab
