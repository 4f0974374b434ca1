#pragma once

#include "vcprune/vc.hpp"

#include <string>
#include <vector>

namespace vcprune::testing {

std::string fixture_path(const std::string& name);
VerificationCondition load_fixture(const std::string& name);
VerificationCondition running_example();

/// Every `.vc` file of the fixture directory, sorted by name.
std::vector<VerificationCondition> all_fixtures();

}  // namespace vcprune::testing
