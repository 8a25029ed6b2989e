#pragma once

#include <iosfwd>

#include "json.hpp"

namespace g2qm::cli {

// Renders a report as indented text.  Arrays of objects sharing their keys become tables.
void print_table(std::ostream& os, const nlohmann::json& report);

}  // namespace g2qm::cli
