#pragma once

#include <hyperfactor/combinatorics.hpp>
#include <hyperfactor/factorization.hpp>
#include <hyperfactor/linear_system.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace hyperfactor {

/// A growing set together with its potential: the size it will have once
/// the evolution reaches [n].
struct LabeledSet {
  Subset set;
  int potential = 0;

  friend bool operator==(const LabeledSet&, const LabeledSet&) = default;
};

/// A partial 1-factor on [ell]. Empty parts may repeat.
struct LabeledPartition {
  std::vector<LabeledSet> parts;
  TypeVector type;
};

struct EvolutionState {
  int n = 0;
  LevelSet levels;
  int ell = 0;
  std::vector<LabeledPartition> partitions;
};

/// Key of an occurrence node S^(j), ordered by (potential, set).
struct Occurrence {
  Subset set;
  int potential = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence& a, const Occurrence& b) {
    if (auto c = a.potential <=> b.potential; c != 0) return c;
    return a.set <=> b.set;
  }
};

/// Bipartite network of one evolution step: source -> partition (cap 1),
/// partition -> occurrence (cap M+1), occurrence -> sink
/// (cap C(n-ell-1, j-1-|S|)).
struct StepNetwork {
  struct Arc {
    std::size_t occurrence;  ///< index into `occurrences`
    std::size_t part;        ///< first part of the partition realizing it
  };

  std::int64_t middle_capacity = 0;
  std::vector<Occurrence> occurrences;      ///< canonical order
  std::vector<std::int64_t> sink_capacity;  ///< per occurrence
  std::vector<std::vector<Arc>> arcs;       ///< per partition, canonical order
};

struct FlowAssignment {
  std::int64_t value = 0;
  /// Flow on each middle arc, shaped like StepNetwork::arcs.
  std::vector<std::vector<std::int64_t>> middle;
  /// Flow into the sink from each occurrence node.
  std::vector<std::int64_t> sink;
};

struct FlowOptions {
  /// One line per step: ell, flow value, number of occurrence nodes.
  std::ostream* trace = nullptr;
  /// Called with the state after every step (ell = 1..n).
  std::function<void(const EvolutionState&)> on_step;
  /// Check the evolution invariants (labels in L, disjoint covering parts,
  /// exact occurrence counts) before and after every step.
  bool check_invariants = true;
  /// Refuse runs with more factors than this.
  std::uint64_t max_factors = 2'000'000;
};

/// ell = 0 state: x_lambda partitions of each type, each made of |lambda|
/// empty sets labeled by the type's levels.
EvolutionState init_state(int n, const LevelSet& levels, const SolutionVector& x,
                          const FlowOptions& options = {});

StepNetwork build_step_network(const EvolutionState& state);

/// Maximum flow by shortest augmenting paths (Dinic), exact in integers.
FlowAssignment max_flow_integral(const StepNetwork& net);

/// Throws InvariantViolation naming the first broken property.
void check_evolution_invariants(const EvolutionState& state);

EvolutionState evolve_step(const EvolutionState& state,
                           const FlowOptions& options = {});

/// init_state, n steps, then potentials are dropped. The result is checked
/// with verify_factorization.
Factorization run(int n, const LevelSet& levels, const SolutionVector& x,
                  const FlowOptions& options = {});

}  // namespace hyperfactor
