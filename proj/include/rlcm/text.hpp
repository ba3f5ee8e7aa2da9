#pragma once

#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "rlcm/arith.hpp"

namespace rlcm {

std::string_view trim(std::string_view s);

//! Splits at separators that are not nested inside (), [] or {}.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

//! Strips one pair of enclosing brackets, e.g. "(a,b)" -> "a,b". Throws
//! ParseError if s is not enclosed by open/close.
std::string_view unwrap(std::string_view s, char open, char close);

//! Parses a decimal integer with optional sign; throws ParseError.
i64 parse_int(std::string_view s);

std::string join(std::vector<std::string> const& parts, std::string_view sep);

}  // namespace rlcm
