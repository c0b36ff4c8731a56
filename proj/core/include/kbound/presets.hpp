#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "kbound/spectral.hpp"

namespace kbound {

/// Graph-dependent polynomial presets for the non-optimising bounds.
enum class PolynomialPreset {
  Power,      // x^k
  PowerPlus,  // x^k + x^(k-1)
  Shifted,    // (x - lambda_min)^k, nonnegative on the spectrum
  Chebyshev,  // T_k with [lambda_min, lambda_2] mapped onto [-1, 1]
};

inline constexpr std::array<PolynomialPreset, 4> kAllPresets = {
    PolynomialPreset::Power, PolynomialPreset::PowerPlus, PolynomialPreset::Shifted,
    PolynomialPreset::Chebyshev};

std::string_view preset_name(PolynomialPreset preset);
std::optional<PolynomialPreset> preset_from_name(std::string_view name);

/// Build the degree-k preset for a graph whose adjacency spectrum is `spectrum`.
Polynomial make_preset(PolynomialPreset preset, int k, const EigenvalueProfile& spectrum);

/// Chebyshev polynomial of the first kind T_k in the variable x.
Polynomial chebyshev(int k);

}  // namespace kbound
