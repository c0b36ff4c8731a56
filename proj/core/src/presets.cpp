#include "kbound/presets.hpp"

#include <cmath>

#include "kbound/error.hpp"

namespace kbound {

std::string_view preset_name(PolynomialPreset preset) {
  switch (preset) {
    case PolynomialPreset::Power: return "power";
    case PolynomialPreset::PowerPlus: return "power-plus";
    case PolynomialPreset::Shifted: return "shifted";
    case PolynomialPreset::Chebyshev: return "chebyshev";
  }
  return "unknown";
}

std::optional<PolynomialPreset> preset_from_name(std::string_view name) {
  for (auto p : kAllPresets)
    if (preset_name(p) == name) return p;
  return std::nullopt;
}

Polynomial chebyshev(int k) {
  Polynomial prev = Polynomial::constant(1.0);
  if (k == 0) return prev;
  const Polynomial x({0.0, 1.0});
  Polynomial cur = x;
  for (int j = 1; j < k; ++j) {
    Polynomial next = x * cur * 2.0 - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Substitute x -> a x + b into p.
Polynomial compose_affine(const Polynomial& p, double a, double b) {
  const Polynomial lin({b, a});
  const auto& c = p.coeffs();
  Polynomial r = Polynomial::constant(c.back());
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) r = r * lin + c[i];
  return r;
}

}  // namespace

Polynomial make_preset(PolynomialPreset preset, int k, const EigenvalueProfile& spectrum) {
  if (k < 1) throw_input("BAD_K", "k must be >= 1");
  if (spectrum.distinct.empty()) throw_input("EMPTY_SPECTRUM", "preset needs a nonempty spectrum");
  const double lowest = spectrum.distinct.back().value;
  switch (preset) {
    case PolynomialPreset::Power: return Polynomial::monomial(k);
    case PolynomialPreset::PowerPlus: return Polynomial::monomial(k) + Polynomial::monomial(k - 1);
    case PolynomialPreset::Shifted: return compose_affine(Polynomial::monomial(k), 1.0, -lowest);
    case PolynomialPreset::Chebyshev: {
      const double second = spectrum.distinct.size() > 1 ? spectrum.distinct[1].value : lowest;
      const double width = second - lowest;
      if (width < 1e-9) return compose_affine(chebyshev(k), 1.0, -lowest);
      return compose_affine(chebyshev(k), 2.0 / width, -(second + lowest) / width);
    }
  }
  throw_input("BAD_PRESET", "unknown polynomial preset");
}

}  // namespace kbound
