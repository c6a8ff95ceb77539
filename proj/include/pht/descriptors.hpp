#pragma once

// Augmented Betti curves and augmented Euler characteristic curves of one
// lower-star filtration, from a diagram or straight from the complex.

#include <algorithm>
#include <utility>
#include <vector>

#include "pht/complex.hpp"
#include "pht/oracle.hpp"

namespace pht {

/// Right-continuous step function. Below the first breakpoint the value is
/// V{}; from breakpoint i up to breakpoint i+1 it is breakpoints[i].second.
/// Breakpoint heights are strictly increasing and consecutive values differ.
template <class V>
struct StepCurve {
  std::vector<std::pair<Rational, V>> breakpoints;
  /// Events of zero measure: (height, value) pairs that do not move the steps.
  std::vector<std::pair<Rational, V>> decorations;

  V value_at(const Rational& p) const {
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), p,
                               [](const Rational& x, const std::pair<Rational, V>& b) { return x < b.first; });
    return it == breakpoints.begin() ? V{} : std::prev(it)->second;
  }

  friend bool operator==(const StepCurve&, const StepCurve&) = default;
};

struct ParityCount {
  long even = 0;
  long odd = 0;

  long euler() const noexcept { return even - odd; }
  friend bool operator==(const ParityCount&, const ParityCount&) = default;
};

/// beta_k(p) = #{(a, b) in Dgm_k : a <= p < b}. Each height carrying
/// zero-persistence k-points gets a decoration whose value is their number.
StepCurve<long> betti_curve_from_apd(const AugmentedDiagram& apd, int k);

/// (sum over even k of |A_k(p)|, sum over odd k), where A_k(p) holds the
/// (k-1)-points with death <= p and the k-points with birth <= p.
StepCurve<ParityCount> euler_curve_from_apd(const AugmentedDiagram& apd);

/// Even- and odd-dimensional simplex counts of each sublevel set.
StepCurve<ParityCount> euler_curve_direct(const SimplicialComplex& K, const Direction& s);

}  // namespace pht
