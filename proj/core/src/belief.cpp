#include "despot/belief.hpp"

#include <algorithm>
#include <cmath>

#include "despot/error.hpp"
#include "despot/rng.hpp"

namespace despot {

namespace {

// Positions (i + u0) / n walked over the cumulative weights.
std::vector<WeightedState> systematic_resample(
    const std::vector<WeightedState>& src, int n, double u0) {
  std::vector<WeightedState> out;
  out.reserve(n);
  const double w = 1.0 / n;
  double cum = src.front().weight;
  std::size_t j = 0;
  for (int i = 0; i < n; ++i) {
    const double pos = (i + u0) / n;
    while (pos >= cum && j + 1 < src.size()) {
      ++j;
      cum += src[j].weight;
    }
    out.push_back({src[j].state, w});
  }
  return out;
}

}  // namespace

ExactBelief exact_from_initial(const Model& m) {
  if (!m.tabular() || !m.num_states()) {
    throw UnsupportedCapability(m.name() + ": exact belief needs a tabular model");
  }
  ExactBelief b;
  b.probabilities.assign(*m.num_states(), 0.0);
  for (const auto& ws : m.initial_belief()) b.probabilities[ws.state] += ws.weight;
  return b;
}

double observation_likelihood(const ExactBelief& b, Action a, Obs z,
                              const Model& m) {
  double mass = 0.0;
  for (State s = 0; s < static_cast<State>(b.probabilities.size()); ++s) {
    const double p = b.probabilities[s];
    if (p == 0.0 || m.is_terminal(s)) continue;
    for (const auto& tr : m.transitions(s, a)) {
      if (tr.next == kTerminalState) continue;
      mass += p * tr.prob * m.obs_prob(tr.next, a, z);
    }
  }
  return mass;
}

ExactBelief exact_update(const ExactBelief& b, Action a, Obs z,
                         const Model& m) {
  ExactBelief post;
  post.probabilities.assign(b.probabilities.size(), 0.0);
  for (State s = 0; s < static_cast<State>(b.probabilities.size()); ++s) {
    const double p = b.probabilities[s];
    if (p == 0.0 || m.is_terminal(s)) continue;
    for (const auto& tr : m.transitions(s, a)) {
      if (tr.next == kTerminalState) continue;
      post.probabilities[tr.next] += p * tr.prob * m.obs_prob(tr.next, a, z);
    }
  }
  double mass = 0.0;
  for (double p : post.probabilities) mass += p;
  if (mass <= 0.0) throw ImpossibleObservation(mass);
  for (double& p : post.probabilities) p /= mass;
  return post;
}

ParticleBelief::ParticleBelief(std::vector<WeightedState> particles,
                               std::uint64_t rng_seed, std::uint64_t epoch)
    : particles_(std::move(particles)), rng_seed_(rng_seed), epoch_(epoch) {}

ParticleBelief ParticleBelief::from_initial(const Model& m, int num_particles,
                                            std::uint64_t rng_seed) {
  Rng rng(derive_seed(rng_seed, 0xB0075EEDULL));
  auto particles =
      systematic_resample(m.initial_belief(), num_particles, rng.uniform());
  return ParticleBelief(std::move(particles), rng_seed, 0);
}

double ParticleBelief::mass_on(State s) const {
  double w = 0.0;
  for (const auto& p : particles_) {
    if (p.state == s) w += p.weight;
  }
  return w;
}

ParticleBelief sir_update(const ParticleBelief& b, Action a, Obs z,
                          const Model& m) {
  Rng rng(derive_seed(b.rng_seed(), 0x51AULL, b.epoch()));
  std::vector<WeightedState> moved;
  moved.reserve(b.particles().size());
  double total = 0.0;
  for (const auto& p : b.particles()) {
    State next;
    if (m.is_terminal(p.state)) {
      next = p.state;
      rng.uniform();  // keep the draw schedule aligned
    } else {
      next = m.step(p.state, a, rng.uniform()).next_state;
    }
    const double w = p.weight * m.obs_prob(next, a, z);
    total += w;
    moved.push_back({next, w});
  }
  if (total <= 0.0) throw ParticleDepletion();
  for (auto& p : moved) p.weight /= total;
  auto resampled =
      systematic_resample(moved, b.num_particles(), rng.uniform());
  return ParticleBelief(std::move(resampled), b.rng_seed(), b.epoch() + 1);
}

std::vector<ScenarioStream> sample_scenarios(
    const std::vector<WeightedState>& b, int k, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x5CE7A210ULL));
  std::vector<ScenarioStream> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    out.emplace_back(sample_weighted(b, rng.uniform()),
                     static_cast<std::uint32_t>(i), seed);
  }
  return out;
}

std::vector<ScenarioStream> sample_scenarios(const ParticleBelief& b, int k,
                                             std::uint64_t seed) {
  return sample_scenarios(b.particles(), k, seed);
}

}  // namespace despot
