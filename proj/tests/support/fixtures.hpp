#pragma once

#include "genusforge/cohomology.hpp"

#include <string>

namespace genusforge::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(GENUSFORGE_FIXTURE_DIR) + "/" + name;
}

inline ManifoldData load_fixture(const std::string& name) {
    return parse_manifold_file(fixture_path(name));
}

} // namespace genusforge::testing
