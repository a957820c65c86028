#pragma once

/**
 * @file presets.hpp
 * @brief Named (ring, n, a, r) bundles and the worked example over GR(4,2).
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaincode/polycyclic.hpp"

namespace chaincode {

struct Preset {
    std::string name;
    std::string summary;
    Ring ring;
    AssociateVector a;
    int r = 1;  // subring degree for Galois queries

    std::size_t n() const { return a.length(); }
};

std::vector<std::string> preset_names();
/// Throws InvalidArgument for an unknown name.
Preset preset(std::string_view name);
/// The worked-example code bundled with a preset (gr42n5 only), as its declared basis.
std::optional<StrongGroebnerBasis> preset_code(std::string_view name);

/// GR(4,2) = Z4[α] with α² = 3α + 3, n = 5, Ψ(a) = X^5 - g0.
struct WorkedExample {
    Ring ring;
    Poly g0, g1, g2;
    AssociateVector a;
    StrongGroebnerBasis sgb;  // {(0, g1), (1, g2)}
    Matrix printed;           // the 3×5 generator matrix as printed
};
WorkedExample worked_example();

}  // namespace chaincode
