#include "support/fixtures.hpp"

#include "vcprune/vc_io.hpp"

#include <algorithm>
#include <filesystem>

namespace vcprune::testing {

std::string fixture_path(const std::string& name) {
  return std::string(VCPRUNE_FIXTURE_DIR) + "/" + name;
}

VerificationCondition load_fixture(const std::string& name) {
  return parse_vc_file(fixture_path(name));
}

VerificationCondition running_example() { return load_fixture("running_example.vc"); }

std::vector<VerificationCondition> all_fixtures() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(VCPRUNE_FIXTURE_DIR)) {
    if (e.path().extension() == ".vc") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<VerificationCondition> out;
  for (const auto& p : paths) out.push_back(parse_vc_file(p.string()));
  return out;
}

}  // namespace vcprune::testing
