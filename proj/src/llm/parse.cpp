#include "rglab/llm/parse.hpp"

#include <string_view>

namespace rglab::llm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Matches a whole line of the form "SCORE: x" with x in {-1, 0, 1}.
bool match_score_line(std::string_view line, int* shift) {
  line = trim(line);
  constexpr std::string_view prefix = "SCORE:";
  if (line.substr(0, prefix.size()) != prefix) return false;
  std::string_view rest = trim(line.substr(prefix.size()));
  if (rest == "-1") {
    *shift = -1;
    return true;
  }
  if (rest == "0") {
    *shift = 0;
    return true;
  }
  if (rest == "1") {
    *shift = 1;
    return true;
  }
  return false;
}

}  // namespace

ShiftVerdict parse_score(const std::string& response_text) {
  std::string_view text = response_text;
  std::size_t end = text.size();
  while (end > 0) {
    const std::size_t start = text.rfind('\n', end - 1);
    const std::size_t line_begin = start == std::string_view::npos ? 0 : start + 1;
    int shift = 0;
    if (match_score_line(text.substr(line_begin, end - line_begin), &shift)) {
      return ShiftVerdict{shift, 1.0, Provenance::kLlmText, response_text};
    }
    if (start == std::string_view::npos) break;
    end = start;
  }
  return ShiftVerdict{0, 1.0, Provenance::kParseFailure, "no SCORE line in: " + response_text};
}

}  // namespace rglab::llm
