#pragma once

#include <string>

#include "rglab/core/types.hpp"

namespace rglab::llm {

// Extracts the verdict from a model response: the last line of the form
// "SCORE: x" with x in {-1, 0, 1} wins and carries the raw text as
// provenance. Anything else - no such line, out-of-support values,
// arbitrary bytes - yields shift 0 with parse-failure provenance. Total:
// never throws, and the shift is always in {-1, 0, +1}.
ShiftVerdict parse_score(const std::string& response_text);

}  // namespace rglab::llm
