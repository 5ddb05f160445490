#pragma once

#include <string>
#include <string_view>

#include "cospec/construct.hpp"

namespace cospec::testing {

std::string fixture_path(std::string_view file);
std::string read_fixture(std::string_view file);
SwapPlan load_plan(std::string_view file);

}  // namespace cospec::testing
