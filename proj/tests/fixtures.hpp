#pragma once

// Solved states and transforms shared across test cases, computed once per
// process at the default grids.

#include "halfwell/analysis.hpp"
#include "halfwell/eigensolver.hpp"
#include "halfwell/momentum.hpp"
#include "halfwell/wavefun.hpp"

namespace fixture {

halfwell::PotentialSpec study(halfwell::WellKind kind);
const std::vector<halfwell::BoundState>& states(halfwell::WellKind kind);
const halfwell::WaveFunction& wavefunction(halfwell::WellKind kind, std::size_t n);
const halfwell::MomentumDistribution& momentum(halfwell::WellKind kind, std::size_t n);

}  // namespace fixture
