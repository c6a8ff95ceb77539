#include "pht/descriptors.hpp"

#include <map>

namespace pht {

namespace {

// Turns per-height increments into a coalesced step curve.
template <class V, class Add>
StepCurve<V> accumulate(const std::map<Rational, V>& deltas, Add add) {
  StepCurve<V> curve;
  V running{};
  for (const auto& [h, delta] : deltas) {
    const V before = running;
    running = add(running, delta);
    if (running == before) continue;
    curve.breakpoints.emplace_back(h, running);
  }
  return curve;
}

ParityCount add_parity(const ParityCount& a, const ParityCount& b) { return {a.even + b.even, a.odd + b.odd}; }

void bump(std::map<Rational, ParityCount>& deltas, const Rational& h, int dim) {
  auto& d = deltas[h];
  (dim % 2 == 0 ? d.even : d.odd) += 1;
}

}  // namespace

StepCurve<long> betti_curve_from_apd(const AugmentedDiagram& apd, int k) {
  std::map<Rational, long> deltas;
  std::map<Rational, long> zero;
  for (const auto& p : apd.points) {
    if (p.dim != k) continue;
    if (p.zero_persistence()) {
      zero[p.birth] += 1;
      continue;
    }
    deltas[p.birth] += 1;
    if (p.death) deltas[*p.death] -= 1;
  }
  auto curve = accumulate<long>(deltas, [](long a, long b) { return a + b; });
  curve.decorations.assign(zero.begin(), zero.end());
  return curve;
}

StepCurve<ParityCount> euler_curve_from_apd(const AugmentedDiagram& apd) {
  // A point of dimension k adds to A_k at its birth and, if finite, to
  // A_{k+1} at its death.
  std::map<Rational, ParityCount> deltas;
  for (const auto& p : apd.points) {
    bump(deltas, p.birth, p.dim);
    if (p.death) bump(deltas, *p.death, p.dim + 1);
  }
  return accumulate<ParityCount>(deltas, add_parity);
}

StepCurve<ParityCount> euler_curve_direct(const SimplicialComplex& K, const Direction& s) {
  std::map<Rational, ParityCount> deltas;
  for (const auto& [sigma, h] : lower_star_heights(K, s)) bump(deltas, h, sigma.dim());
  return accumulate<ParityCount>(deltas, add_parity);
}

}  // namespace pht
