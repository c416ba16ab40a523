#pragma once

#include <string>

namespace procsim {

// Reads a whole file; raises FileNotFound with the path on failure.
std::string load_file(const std::string& path);

}  // namespace procsim
