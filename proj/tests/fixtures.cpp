#include "fixtures.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace fixture {

namespace {

using Key = std::pair<halfwell::WellKind, std::size_t>;

std::mutex& lock() {
  static std::mutex m;
  return m;
}

}  // namespace

halfwell::PotentialSpec study(halfwell::WellKind kind) {
  halfwell::PotentialSpec spec;
  spec.kind = kind;
  return spec;
}

const std::vector<halfwell::BoundState>& states(halfwell::WellKind kind) {
  static std::map<halfwell::WellKind, std::vector<halfwell::BoundState>> cache;
  std::lock_guard guard(lock());
  auto it = cache.find(kind);
  if (it == cache.end()) it = cache.emplace(kind, halfwell::solve_all(study(kind))).first;
  return it->second;
}

const halfwell::WaveFunction& wavefunction(halfwell::WellKind kind, std::size_t n) {
  static std::map<Key, std::unique_ptr<halfwell::WaveFunction>> cache;
  const auto& list = states(kind);
  std::lock_guard guard(lock());
  auto& slot = cache[{kind, n}];
  if (!slot) slot = std::make_unique<halfwell::WaveFunction>(halfwell::assemble(study(kind), list.at(n)));
  return *slot;
}

const halfwell::MomentumDistribution& momentum(halfwell::WellKind kind, std::size_t n) {
  static std::map<Key, std::unique_ptr<halfwell::MomentumDistribution>> cache;
  const auto& wf = wavefunction(kind, n);
  std::lock_guard guard(lock());
  auto& slot = cache[{kind, n}];
  if (!slot) slot = std::make_unique<halfwell::MomentumDistribution>(halfwell::transform(wf));
  return *slot;
}

}  // namespace fixture
