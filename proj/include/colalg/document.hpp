#pragma once

#include <string>
#include <string_view>

#include "colalg/algebra.hpp"

namespace colalg {

/// Parse an algebra document. Runs the bicharacter and grading checks eagerly.
/// Throws InputError with a location such as "ops.bracket2[3].coef".
GradedAlgebraObject parse_algebra(std::string_view text);
/// Canonical bytes: sorted keys, two-space indent, constants in tuple order, trailing newline.
std::string serialize_algebra(const GradedAlgebraObject& obj);

GradedAlgebraObject read_algebra_file(const std::string& path);
void write_algebra_file(const std::string& path, const GradedAlgebraObject& obj);

}  // namespace colalg
