#pragma once

#include <string>
#include <vector>

namespace sqav {

struct PresetSource {
    std::string name;
    std::string json;
};

/// Preset form descriptions shipped with the build, sorted by name.
const std::vector<PresetSource>& preset_sources();

}  // namespace sqav
