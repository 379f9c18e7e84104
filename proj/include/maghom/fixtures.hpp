#pragma once

#include "maghom/fibration.hpp"

namespace maghom::fixtures {

const std::vector<std::string>& names();

// throws input_error on an unknown name
const fibration& get(const std::string& name);

}  // namespace maghom::fixtures
