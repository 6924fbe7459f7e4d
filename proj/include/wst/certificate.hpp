#pragma once

#include <string>

namespace wst {

// Outcome of an exact instance-level verification of an identity or law.
struct Certificate {
    bool passed = false;
    std::string detail;
};

}  // namespace wst
