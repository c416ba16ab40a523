#include "procsim/io.hpp"

#include <fstream>
#include <sstream>

#include "procsim/errors.hpp"

namespace procsim {

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::FileNotFound, "cannot read '" + path + "'");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace procsim
