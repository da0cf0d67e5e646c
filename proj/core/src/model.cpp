#include "despot/model.hpp"

#include "despot/error.hpp"

namespace despot {

State Model::sample_world_start(double u) const {
  return sample_weighted(initial_belief(), u);
}

std::vector<Transition> Model::transitions(State, Action) const {
  throw UnsupportedCapability(name() + ": no tabular transition law");
}

std::string Model::action_name(Action a) const {
  return "a" + std::to_string(a);
}

std::optional<Action> Model::action_index(const std::string& nm) const {
  for (Action a = 0; a < num_actions(); ++a) {
    if (action_name(a) == nm) return a;
  }
  return std::nullopt;
}

StepOutcome checked_step(const Model& m, State s, Action a, double phi) {
  if (a < 0 || a >= m.num_actions()) {
    throw UsageError("invalid action index " + std::to_string(a));
  }
  if (m.is_terminal(s)) {
    throw ContractViolation("step() called on a terminal state");
  }
  return m.step(s, a, phi);
}

State sample_weighted(const std::vector<WeightedState>& dist, double u) {
  double acc = 0.0;
  for (const auto& ws : dist) {
    acc += ws.weight;
    if (u < acc) return ws.state;
  }
  return dist.back().state;
}

}  // namespace despot
