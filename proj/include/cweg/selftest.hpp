#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cweg {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Property suite at desk scale over the bundled data; `seed` drives the random
/// inputs. `progress` is called after each property.
std::vector<PropertyResult> run_property_suite(unsigned seed = 1,
                                               const std::function<void(const PropertyResult&)>& progress = {});

}  // namespace cweg
