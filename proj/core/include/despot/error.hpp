#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace despot {

// Bad input from the caller or the command line (unknown names, invalid
// indices, out-of-range parameters). Maps to exit code 2 in the CLI.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A violated API precondition, e.g. stepping a terminal state or expanding
// an already expanded node.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Exact Bayes update conditioned on an observation with zero likelihood.
struct ImpossibleObservation : std::runtime_error {
  explicit ImpossibleObservation(double lik)
      : std::runtime_error("impossible observation: P(z | b, a) = " +
                           std::to_string(lik)),
        likelihood(lik) {}
  double likelihood;
};

// All particle weights vanished during a filter update.
struct ParticleDepletion : std::runtime_error {
  ParticleDepletion() : std::runtime_error("particle depletion: total weight 0") {}
};

// Problem instance too large to materialize.
struct CapacityError : std::runtime_error {
  explicit CapacityError(std::size_t estimated, std::size_t limit)
      : std::runtime_error("node limit exceeded: estimated " +
                           std::to_string(estimated) + " nodes > limit " +
                           std::to_string(limit)),
        estimated_nodes(estimated) {}
  std::size_t estimated_nodes;
};

// Operation requires a capability the model does not provide.
struct UnsupportedCapability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace despot
