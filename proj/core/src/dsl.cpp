#include "slimlat/dsl.hpp"

#include <charconv>
#include <vector>

#include "slimlat/error.hpp"

namespace slimlat {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

[[noreturn]] void parse_error(int line, int column, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int integer(const Token& t, int line, int minimum, const char* what) {
  if (!t.text.empty() && t.text.front() == '-')
    parse_error(line, t.column, std::string(what) + " must be non-negative, got " + std::string(t.text));
  int value = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    parse_error(line, t.column, "expected an integer for " + std::string(what) + ", got '" + std::string(t.text) + "'");
  if (value < minimum)
    parse_error(line, t.column, std::string(what) + " must be at least " + std::to_string(minimum));
  return value;
}

}  // namespace

MultiforkSequence parse_dsl(std::string_view text) {
  MultiforkSequence seq;
  bool have_grid = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();
    const std::size_t expected = head.text == "grid" ? 3 : head.text == "fork" ? 4 : 0;
    if (expected == 0) parse_error(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    if (tokens.size() < expected) {
      const Token& last = tokens.back();
      parse_error(line_no, last.column + static_cast<int>(last.text.size()),
                  "'" + std::string(head.text) + "' expects " + std::to_string(expected - 1) + " integers");
    }
    if (tokens.size() > expected) parse_error(line_no, tokens[expected].column, "unexpected trailing token");

    if (head.text == "grid") {
      if (have_grid) parse_error(line_no, head.column, "grid may appear only once");
      seq.p = integer(tokens[1], line_no, 1, "grid height P");
      seq.q = integer(tokens[2], line_no, 1, "grid height Q");
      have_grid = true;
    } else {
      if (!have_grid) parse_error(line_no, head.column, "grid must come first");
      ForkStep step;
      step.cell.a = integer(tokens[1], line_no, 0, "cell coordinate A");
      step.cell.b = integer(tokens[2], line_no, 0, "cell coordinate B");
      step.k = integer(tokens[3], line_no, 1, "multiplicity K");
      seq.steps.push_back(step);
    }
  }
  if (!have_grid) parse_error(line_no, 1, "missing grid line");
  return seq;
}

std::string emit_dsl(const MultiforkSequence& seq) {
  std::string out = "grid " + std::to_string(seq.p) + " " + std::to_string(seq.q) + "\n";
  for (const auto& s : seq.steps)
    out += "fork " + std::to_string(s.cell.a) + " " + std::to_string(s.cell.b) + " " + std::to_string(s.k) + "\n";
  return out;
}

std::string inline_dsl(const MultiforkSequence& seq) {
  std::string out = emit_dsl(seq);
  out.pop_back();
  for (std::size_t i = 0; (i = out.find('\n', i)) != std::string::npos;) out.replace(i, 1, "; ");
  return out;
}

}  // namespace slimlat
