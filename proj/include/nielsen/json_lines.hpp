#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace nielsen {

// Line (1-based) at which every value of a syntactically valid JSON text starts, keyed by JSON pointer.
// The root is "". Used to attach line numbers to schema diagnostics.
std::map<std::string, int> json_pointer_lines(std::string_view text);

// 1-based line of a byte offset.
int line_of_offset(std::string_view text, std::size_t offset);

}  // namespace nielsen
