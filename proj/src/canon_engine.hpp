#pragma once

#include <string>
#include <vector>

#include "refine.hpp"

namespace asym::detail {

struct CanonResult {
    std::vector<int> labeling;    ///< vertex -> canonical position
    std::vector<int> certificate; ///< relabeled structure, comparable across inputs
};

CanonResult canonicalize(const Incidence& inc);

/// Little-endian 32-bit encoding of a certificate.
std::string certificateKey(const std::vector<int>& cert);

} // namespace asym::detail
