#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace soe::poly {

// Symbolic tags for every indeterminate the pipeline manipulates. k and l
// appear only in the parametric coefficient data.
enum class Var : std::uint8_t { x2, x3, x12, k, l };

std::string_view name(Var v);
std::optional<Var> parse_var(std::string_view text);

}  // namespace soe::poly
