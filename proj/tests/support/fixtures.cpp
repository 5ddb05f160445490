#include "fixtures.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>

#include "cospec/plan_io.hpp"

namespace cospec::testing {

std::string fixture_path(std::string_view file) {
  return std::string(COSPEC_FIXTURE_DIR) + "/" + std::string(file);
}

std::string read_fixture(std::string_view file) {
  std::ifstream in(fixture_path(file), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + std::string(file));
  return {std::istreambuf_iterator<char>(in), {}};
}

SwapPlan load_plan(std::string_view file) { return parse_plan(read_fixture(file)); }

}  // namespace cospec::testing
