#pragma once

#include "maghom/metric_space.hpp"

namespace maghom {

// whole file contents; throws input_error when unreadable
std::string read_file(const std::string& path);

// accepts {"type":"graph","vertices":N,"edges":[[i,j],...]} with 1-based
// vertices, or {"type":"matrix","labels":[...],"dist":[[...]]} with entries
// given as integers or "p/q" strings; `source` names the input in errors
metric_space space_from_json(const std::string& text, const std::string& source);

struct fibration_input {
    metric_space total;
    metric_space base;
    std::vector<int> proj;  // total index -> base index
};

// {"total":<space>,"base":<space>,"projection":{"x":"b",...}}
fibration_input fibration_from_json(const std::string& text, const std::string& source);

// label map as above, either bare or wrapped in {"projection":...}
std::vector<int> projection_from_json(const std::string& text, const metric_space& total,
                                      const metric_space& base, const std::string& source);

}  // namespace maghom
