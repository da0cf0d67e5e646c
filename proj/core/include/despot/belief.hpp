#pragma once

#include <cstdint>
#include <vector>

#include "despot/model.hpp"
#include "despot/scenario.hpp"
#include "despot/types.hpp"

namespace despot {

// Dense distribution over the enumerated state space of a tabular model.
struct ExactBelief {
  std::vector<double> probabilities;
};

ExactBelief exact_from_initial(const Model& m);

// P(z | b, a) under the analytic transition and observation laws.
double observation_likelihood(const ExactBelief& b, Action a, Obs z,
                              const Model& m);

// Bayes posterior. Throws ImpossibleObservation when P(z | b, a) = 0.
ExactBelief exact_update(const ExactBelief& b, Action a, Obs z,
                         const Model& m);

// Weighted particle set tracked across real execution steps. Value type:
// updates return a new belief; every draw is a pure function of
// (rng_seed, update_epoch), so replays are bit-identical.
class ParticleBelief {
 public:
  ParticleBelief(std::vector<WeightedState> particles, std::uint64_t rng_seed,
                 std::uint64_t epoch = 0);

  // num_particles draws from the model's initial belief (systematic, so the
  // initial set is low-variance and deterministic).
  static ParticleBelief from_initial(const Model& m, int num_particles,
                                     std::uint64_t rng_seed);

  const std::vector<WeightedState>& particles() const { return particles_; }
  int num_particles() const { return static_cast<int>(particles_.size()); }
  std::uint64_t rng_seed() const { return rng_seed_; }
  std::uint64_t epoch() const { return epoch_; }

  // Probability mass on a given state (sums matching particles).
  double mass_on(State s) const;

 private:
  std::vector<WeightedState> particles_;
  std::uint64_t rng_seed_;
  std::uint64_t epoch_;
};

// SIR update: propagate every particle through step() with a fresh phi,
// reweight by obs_prob, then systematic-resample back to an equally
// weighted set of the same size. Throws ParticleDepletion when the total
// posterior weight is zero.
ParticleBelief sir_update(const ParticleBelief& b, Action a, Obs z,
                          const Model& m);

// K scenario streams whose start states are i.i.d. weighted draws from the
// belief; scenario ids are 0..K-1 and the whole list is deterministic given
// the seed.
std::vector<ScenarioStream> sample_scenarios(const ParticleBelief& b, int k,
                                             std::uint64_t seed);
std::vector<ScenarioStream> sample_scenarios(
    const std::vector<WeightedState>& b, int k, std::uint64_t seed);

}  // namespace despot
