#include <hyperfactor/errors.hpp>
#include <hyperfactor/flow.hpp>
#include <hyperfactor/verifier.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <queue>

namespace hyperfactor {

void canonicalize_factor(Factor& factor) {
  std::sort(factor.begin(), factor.end(), [](Subset a, Subset b) {
    return a.min_element() < b.min_element();
  });
}

namespace {

std::string describe(const Occurrence& occ) {
  return occ.set.to_string() + " with potential " + std::to_string(occ.potential);
}

std::int64_t clamp_to(const Integer& value, std::int64_t bound) {
  if (value > bound) return bound;
  return value.get_si();
}

/// Dinic on an explicit adjacency list. Edges are stored in pairs so that
/// edge e ^ 1 is the reverse of e.
class Dinic {
 public:
  explicit Dinic(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t cap) {
    const std::size_t id = to_.size();
    to_.push_back(to);
    cap_.push_back(cap);
    adj_[from].push_back(id);
    to_.push_back(from);
    cap_.push_back(0);
    adj_[to].push_back(id + 1);
    return id;
  }

  /// Flow currently on forward edge `id`.
  [[nodiscard]] std::int64_t flow_on(std::size_t id) const { return cap_[id + 1]; }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (bfs(s, t)) total += blocking_flow(s, t);
    return total;
  }

 private:
  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t e : adj_[v]) {
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[v] + 1;
          queue.push(to_[e]);
        }
      }
    }
    return level_[t] >= 0;
  }

  // Iterative depth-first augmentation along the level graph.
  std::int64_t blocking_flow(std::size_t s, std::size_t t) {
    std::fill(next_.begin(), next_.end(), 0);
    std::int64_t total = 0;
    std::vector<std::size_t> path;  // edge ids
    std::size_t v = s;
    while (true) {
      if (v == t) {
        std::int64_t push = std::numeric_limits<std::int64_t>::max();
        for (std::size_t e : path) push = std::min(push, cap_[e]);
        for (std::size_t e : path) {
          cap_[e] -= push;
          cap_[e ^ 1] += push;
        }
        total += push;
        path.clear();
        v = s;
        continue;
      }
      bool advanced = false;
      for (; next_[v] < adj_[v].size(); ++next_[v]) {
        const std::size_t e = adj_[v][next_[v]];
        if (cap_[e] > 0 && level_[to_[e]] == level_[v] + 1) {
          path.push_back(e);
          v = to_[e];
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (v == s) return total;
      level_[v] = -1;
      const std::size_t back = path.back();
      path.pop_back();
      v = to_[back ^ 1];
      ++next_[v];
    }
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> to_;
  std::vector<std::int64_t> cap_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

EvolutionState init_state(int n, const LevelSet& levels, const SolutionVector& x,
                          const FlowOptions& options) {
  levels.validate_for(n);
  const int k = levels.max();
  const std::vector<Integer> cov = x.coverage(k);
  for (int level = 1; level <= k; ++level) {
    const Integer want = levels.contains(level) ? binomial(n, level) : 0;
    if (cov[static_cast<std::size_t>(level - 1)] != want)
      throw PreconditionError("init_state: solution covers level " +
                              std::to_string(level) + " " +
                              cov[static_cast<std::size_t>(level - 1)].get_str() +
                              " times, expected " + want.get_str());
  }
  for (const auto& [type, count] : x) {
    if (sgn(count) < 0 || type.weight() != n || !type.supported_on(levels) ||
        type.width() > k)
      throw PreconditionError("init_state: invalid entry " + type.to_string() +
                              ": " + count.get_str());
  }
  const Integer total = x.total();
  if (total != factor_count(n, levels))
    throw InvariantViolation("init_state: " + total.get_str() +
                             " partitions but the factor count is " +
                             factor_count(n, levels).get_str());
  if (total > options.max_factors)
    throw LimitExceeded("flow engine refuses " + total.get_str() +
                        " factors (limit " + std::to_string(options.max_factors) +
                        ")");

  EvolutionState state;
  state.n = n;
  state.levels = levels;
  state.ell = 0;
  state.partitions.reserve(total.get_ui());
  for (const auto& [type, count] : x) {
    LabeledPartition partition;
    partition.type = type;
    for (int level = 1; level <= type.width(); ++level)
      for (int c = 0; c < type[level]; ++c)
        partition.parts.push_back(LabeledSet{Subset(), level});
    for (unsigned long c = 0; c < count.get_ui(); ++c)
      state.partitions.push_back(partition);
  }
  return state;
}

StepNetwork build_step_network(const EvolutionState& state) {
  StepNetwork net;
  const auto partitions = static_cast<std::int64_t>(state.partitions.size());
  net.middle_capacity = partitions + 1;

  std::map<Occurrence, std::size_t> index;
  for (const LabeledPartition& p : state.partitions)
    for (const LabeledSet& part : p.parts)
      index.emplace(Occurrence{part.set, part.potential}, 0);
  for (auto& [occ, id] : index) {
    id = net.occurrences.size();
    net.occurrences.push_back(occ);
    const int size = occ.set.size();
    net.sink_capacity.push_back(clamp_to(
        binomial(state.n - state.ell - 1, occ.potential - 1 - size),
        net.middle_capacity));
  }

  net.arcs.reserve(state.partitions.size());
  for (const LabeledPartition& p : state.partitions) {
    std::vector<StepNetwork::Arc> arcs;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      const std::size_t occ =
          index.at(Occurrence{p.parts[i].set, p.parts[i].potential});
      if (std::none_of(arcs.begin(), arcs.end(),
                       [&](const auto& a) { return a.occurrence == occ; }))
        arcs.push_back({occ, i});
    }
    std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
      return a.occurrence < b.occurrence;
    });
    net.arcs.push_back(std::move(arcs));
  }
  return net;
}

FlowAssignment max_flow_integral(const StepNetwork& net) {
  const std::size_t parts = net.arcs.size();
  const std::size_t occs = net.occurrences.size();
  if (net.sink_capacity.size() != occs)
    throw PreconditionError("step network: sink capacities do not match occurrences");
  const std::size_t source = 0;
  const std::size_t sink = parts + occs + 1;
  Dinic dinic(parts + occs + 2);

  for (std::size_t p = 0; p < parts; ++p) dinic.add_edge(source, 1 + p, 1);
  std::vector<std::vector<std::size_t>> middle_ids(parts);
  for (std::size_t p = 0; p < parts; ++p)
    for (const auto& arc : net.arcs[p]) {
      if (arc.occurrence >= occs)
        throw PreconditionError("step network: arc to unknown occurrence");
      middle_ids[p].push_back(
          dinic.add_edge(1 + p, 1 + parts + arc.occurrence, net.middle_capacity));
    }
  std::vector<std::size_t> sink_ids(occs);
  for (std::size_t o = 0; o < occs; ++o)
    sink_ids[o] = dinic.add_edge(1 + parts + o, sink, net.sink_capacity[o]);

  FlowAssignment out;
  out.value = dinic.max_flow(source, sink);
  out.middle.resize(parts);
  for (std::size_t p = 0; p < parts; ++p)
    for (std::size_t id : middle_ids[p]) out.middle[p].push_back(dinic.flow_on(id));
  for (std::size_t id : sink_ids) out.sink.push_back(dinic.flow_on(id));
  return out;
}

void check_evolution_invariants(const EvolutionState& state) {
  const int n = state.n;
  const int ell = state.ell;
  const std::string where = "at ell=" + std::to_string(ell) + ": ";
  const std::uint64_t ground = Subset::full_mask(ell);

  std::map<Occurrence, std::int64_t> counts;
  for (std::size_t i = 0; i < state.partitions.size(); ++i) {
    const LabeledPartition& p = state.partitions[i];
    std::vector<int> histogram(static_cast<std::size_t>(p.type.width()), 0);
    std::uint64_t seen = 0;
    for (const LabeledSet& part : p.parts) {
      if (!state.levels.contains(part.potential))
        throw InvariantViolation(where + "partition " + std::to_string(i) +
                                 " has potential " +
                                 std::to_string(part.potential) + " outside L");
      if (part.set.size() > part.potential)
        throw InvariantViolation(where + describe({part.set, part.potential}) +
                                 " is larger than its potential");
      if ((seen & part.set.mask()) != 0)
        throw InvariantViolation(where + "partition " + std::to_string(i) +
                                 " has overlapping parts");
      seen |= part.set.mask();
      if (part.potential <= p.type.width())
        ++histogram[static_cast<std::size_t>(part.potential - 1)];
      ++counts[Occurrence{part.set, part.potential}];
    }
    if (seen != ground)
      throw InvariantViolation(where + "partition " + std::to_string(i) +
                               " does not cover [ell]");
    if (TypeVector(histogram) != p.type)
      throw InvariantViolation(where + "partition " + std::to_string(i) +
                               " no longer has type " + p.type.to_string());
  }

  for (const auto& [occ, count] : counts) {
    const Integer want = binomial(n - ell, occ.potential - occ.set.size());
    if (want != count)
      throw InvariantViolation(where + describe(occ) + " occurs " +
                               std::to_string(count) + " times, expected " +
                               want.get_str());
  }
  // Every (S, j) with a positive expected count must be present.
  Integer expected_pairs = 0;
  for (int j : state.levels)
    for (int s = 0; s <= std::min(j, ell); ++s)
      if (j - s <= n - ell) expected_pairs += binomial(ell, s);
  if (expected_pairs != counts.size())
    throw InvariantViolation(where + std::to_string(counts.size()) +
                             " distinct (set, potential) pairs occur, expected " +
                             expected_pairs.get_str());
}

EvolutionState evolve_step(const EvolutionState& state,
                           const FlowOptions& options) {
  if (state.ell >= state.n)
    throw PreconditionError("evolve_step: evolution already complete");
  if (options.check_invariants) check_evolution_invariants(state);

  const StepNetwork net = build_step_network(state);
  const FlowAssignment flow = max_flow_integral(net);
  const auto partitions = static_cast<std::int64_t>(state.partitions.size());
  if (flow.value != partitions)
    throw InvariantViolation("step ell=" + std::to_string(state.ell) +
                             ": flow value " + std::to_string(flow.value) +
                             " below " + std::to_string(partitions));

  EvolutionState next = state;
  const int element = state.ell + 1;
  for (std::size_t p = 0; p < net.arcs.size(); ++p) {
    std::optional<std::size_t> chosen;
    for (std::size_t a = 0; a < net.arcs[p].size(); ++a) {
      if (flow.middle[p][a] == 0) continue;
      if (flow.middle[p][a] != 1 || chosen)
        throw InvariantViolation("step ell=" + std::to_string(state.ell) +
                                 ": partition " + std::to_string(p) +
                                 " does not carry exactly one unit");
      chosen = a;
    }
    if (!chosen)
      throw InvariantViolation("step ell=" + std::to_string(state.ell) +
                               ": partition " + std::to_string(p) +
                               " carries no flow");
    const StepNetwork::Arc& arc = net.arcs[p][*chosen];
    const Occurrence& occ = net.occurrences[arc.occurrence];
    if (occ.potential <= occ.set.size())
      throw InvariantViolation("step ell=" + std::to_string(state.ell) +
                               ": flow reached the full set " + describe(occ));
    LabeledSet& part = next.partitions[p].parts[arc.part];
    part.set = part.set.with(element);
  }
  next.ell = element;

  if (options.check_invariants) check_evolution_invariants(next);
  if (options.trace)
    *options.trace << "step ell=" << next.ell << " flow=" << flow.value
                   << " occurrences=" << net.occurrences.size() << '\n';
  if (options.on_step) options.on_step(next);
  return next;
}

Factorization run(int n, const LevelSet& levels, const SolutionVector& x,
                  const FlowOptions& options) {
  EvolutionState state = init_state(n, levels, x, options);
  for (int step = 0; step < n; ++step) state = evolve_step(state, options);

  Factorization out;
  out.n = n;
  out.levels = levels;
  out.factors.reserve(state.partitions.size());
  for (const LabeledPartition& p : state.partitions) {
    Factor factor;
    for (const LabeledSet& part : p.parts) {
      if (part.set.size() != part.potential)
        throw InvariantViolation("final state: " + describe({part.set, part.potential}) +
                                 " did not reach its potential");
      factor.push_back(part.set);
    }
    canonicalize_factor(factor);
    out.factors.push_back(std::move(factor));
  }
  const VerificationReport report = verify_factorization(out);
  if (!report.ok())
    throw InvariantViolation("flow output fails verification: " + report.summary());
  return out;
}

}  // namespace hyperfactor
