#pragma once

// Line tokenizer shared by the text formats.

#include <string>
#include <string_view>
#include <vector>

#include "sltr/error.hpp"

namespace sltr::text {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

/// Non-empty lines with comments (#...) stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text);

[[noreturn]] void fail(int line, const std::string& reason);

int to_int(const Line& l, size_t i);
double to_double(const Line& l, size_t i);
void expect_size(const Line& l, size_t n);
void expect_min_size(const Line& l, size_t n);

/// Checks "<magic> <version>" on the first line; version must be 1.
void expect_header(const std::vector<Line>& lines, std::string_view magic);
/// Index of the "end" line; throws if missing or not last.
size_t expect_end(const std::vector<Line>& lines);

}  // namespace sltr::text
