#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "kbound/presets.hpp"
#include "kbound/spectral.hpp"

namespace kbound::cli {

/// A polynomial as given on the command line: either a preset resolved
/// against each graph's spectrum, or fixed coefficients.
using PolySpec = std::variant<PolynomialPreset, Polynomial>;

/// Accepted forms:
///   preset names   power, power-plus, shifted, chebyshev
///   expressions    x, x2, x2+x, x^3-2x+1, 0.5x2, x3+ax2+bx (single-letter
///                  parameters other than x, bound through `params`)
///   raw lists      0,1,1 (lowest degree first)
/// Throws Input BAD_POLYNOMIAL or UNBOUND_PARAMETER.
PolySpec parse_polynomial(std::string_view text, const std::map<char, double>& params = {});

/// Parse "a=1.5" into a parameter binding. Throws Input BAD_PARAMETER.
std::pair<char, double> parse_parameter(std::string_view text);

Polynomial resolve(const PolySpec& spec, int k, const EigenvalueProfile& spectrum);

/// "x2+x" style rendering of a polynomial, shortest round-trip coefficients.
std::string format_polynomial(const Polynomial& p);

}  // namespace kbound::cli
