#include "text.hpp"

#include <charconv>
#include <sstream>

namespace sltr::text {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    ++number;
    pos = nl + 1;
    if (const size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line l{number, {}};
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (nl == text.size()) break;
  }
  return out;
}

void fail(int line, const std::string& reason) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + reason, {}, line);
}

int to_int(const Line& l, size_t i) {
  if (i >= l.tokens.size()) fail(l.number, "missing integer");
  const std::string& t = l.tokens[i];
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) fail(l.number, "expected integer, got '" + t + "'");
  return v;
}

double to_double(const Line& l, size_t i) {
  if (i >= l.tokens.size()) fail(l.number, "missing number");
  const std::string& t = l.tokens[i];
  double v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) fail(l.number, "expected number, got '" + t + "'");
  return v;
}

void expect_size(const Line& l, size_t n) {
  if (l.tokens.size() != n)
    fail(l.number, "'" + l.tokens[0] + "' takes " + std::to_string(n - 1) + " values");
}

void expect_min_size(const Line& l, size_t n) {
  if (l.tokens.size() < n) fail(l.number, "'" + l.tokens[0] + "' needs more values");
}

void expect_header(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) fail(1, "empty input");
  const Line& h = lines.front();
  if (h.tokens[0] != magic) fail(h.number, "expected header '" + std::string(magic) + "'");
  expect_size(h, 2);
  if (to_int(h, 1) != 1) fail(h.number, "unsupported format version " + h.tokens[1]);
}

size_t expect_end(const std::vector<Line>& lines) {
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].tokens[0] != "end") continue;
    if (i + 1 != lines.size()) fail(lines[i + 1].number, "content after 'end'");
    expect_size(lines[i], 1);
    return i;
  }
  fail(lines.empty() ? 1 : lines.back().number, "truncated input, missing 'end'");
}

}  // namespace sltr::text
