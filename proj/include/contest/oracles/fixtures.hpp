#pragma once

#include <string>
#include <vector>

#include "contest/driver.hpp"

namespace contest::testing {

struct Fixture {
  std::string name;
  std::string source;  // same text as fixtures/<name>.pl
  Program program;
  TestSpec spec;
};

/// example21, nat or single_fact. Throws UnknownFixture otherwise.
Fixture fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace contest::testing
