#pragma once

#include <optional>
#include <string>
#include <vector>

#include "despot/types.hpp"

namespace despot {

struct StepOutcome {
  State next_state;
  Obs observation;
  double reward;
};

struct WeightedState {
  State state;
  double weight;
};

struct Transition {
  State next;
  double prob;
};

// A POMDP exposed through a deterministic simulative model: step() maps
// (s, a, phi) to (s', z, r) such that, for phi ~ U[0,1), the pair (s', z) is
// distributed as T(s,a,s') * O(s',a,z), and r = R(s,a) exactly.
//
// Conventions:
//  - kTerminalState (-1) is always terminal; domains may mark regular state
//    indices terminal as well.
//  - reward(s, a) is 0 for terminal s.
//  - terminal_obs(s) is the observation a terminated scenario keeps emitting
//    when it is carried inside a search tree past its end.
//
// Models are immutable after construction and safe to share across threads.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual int num_actions() const = 0;
  virtual int num_observations() const = 0;
  // Enumerable state count; nullopt for generative-only models.
  virtual std::optional<int> num_states() const { return std::nullopt; }
  virtual double discount() const = 0;
  virtual double max_reward() const = 0;
  virtual double min_reward() const = 0;

  virtual bool is_terminal(State s) const { return s == kTerminalState; }
  virtual double reward(State s, Action a) const = 0;
  virtual StepOutcome step(State s, Action a, double phi) const = 0;
  virtual double obs_prob(State next, Action a, Obs z) const = 0;
  virtual Obs terminal_obs(State s) const = 0;

  virtual std::vector<WeightedState> initial_belief() const = 0;
  // True start state of a simulated world; defaults to a draw from the
  // initial belief. u is uniform on [0, 1).
  virtual State sample_world_start(double u) const;

  // Analytic transition law, for exact Bayes updates and MDP bounds.
  virtual bool tabular() const { return false; }
  virtual std::vector<Transition> transitions(State s, Action a) const;

  virtual std::string action_name(Action a) const;
  virtual std::optional<Action> action_index(const std::string& name) const;
};

// step() with the public-contract checks: the action must be valid and the
// state non-terminal. Hot paths call Model::step directly.
StepOutcome checked_step(const Model& m, State s, Action a, double phi);

// Draws a state from an enumerated distribution by inverse CDF; u in [0,1).
State sample_weighted(const std::vector<WeightedState>& dist, double u);

}  // namespace despot
