#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evenpoint/gf2.hpp"
#include "evenpoint/parallel.hpp"
#include "evenpoint/squares_core.hpp"

namespace evenpoint {

/// The graph of even places of degree <= max_degree, with p ~ q iff λ_p is a
/// local square at q.
template <class Model>
struct EvenGraph {
  using Place = typename Model::Place;
  using Class = typename Model::SquareClass;

  int max_degree = 0;
  std::vector<Place> vertices;
  std::vector<Class> lambdas;
  std::vector<BitVector> adjacency;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }
  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adjacency) total += row.count();
    return total / 2;
  }
  std::optional<std::size_t> index_of(const Place& p) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == p) return i;
    }
    return std::nullopt;
  }
};

struct EdgeCriteria {
  bool sing_removed_squares = false;  // (i)
  bool legendre_plus = false;         // (ii)
  bool residue_has_root = false;      // (iii)
  bool agree() const {
    return sing_removed_squares == legendre_plus && legendre_plus == residue_has_root;
  }
};

template <class Model>
struct DiameterReport {
  bool connected = true;
  int max_distance_observed = 0;
  std::vector<std::pair<std::size_t, std::size_t>> unresolved_pairs;
  std::size_t non_adjacent_pairs = 0;
};

/// Both directions of every pair are evaluated; an asymmetric pair throws.
template <class Model>
EvenGraph<Model> build_even_graph(const SquaresCore<Model>& core, int max_degree) {
  const Model& model = core.model();
  EvenGraph<Model> graph;
  graph.max_degree = max_degree;
  graph.vertices = core.even_places_up_to(max_degree);
  const std::size_t n = graph.vertices.size();
  graph.lambdas.resize(n);
  parallel_for(n, [&](std::size_t i) { graph.lambdas[i] = model.lambda_for(graph.vertices[i]); });
  graph.adjacency.assign(n, BitVector(n));
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && model.legendre(graph.lambdas[i], graph.vertices[j]) == 1) graph.adjacency[i].set(j);
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (graph.adjacency[i].test(j) != graph.adjacency[j].test(i)) {
        throw MathError("asymmetric pair " + model.place_name(graph.vertices[i]) + ", " +
                        model.place_name(graph.vertices[j]));
      }
    }
  }
  return graph;
}

/// The three edge criteria from p to each of `targets`; Sing(X minus p) is
/// scanned once.
template <class Model>
std::vector<EdgeCriteria> edge_criteria_from(const SquaresCore<Model>& core, const typename Model::Place& p,
                                             const std::vector<typename Model::Place>& targets) {
  const Model& model = core.model();
  const auto removed = subgroup_elements(model, core.sing({p}).group);
  const auto lambda = model.lambda_for(p);
  std::vector<EdgeCriteria> out(targets.size());
  parallel_for(targets.size(), [&](std::size_t i) {
    const auto& q = targets[i];
    EdgeCriteria& row = out[i];
    row.sing_removed_squares = true;
    for (const auto& c : removed) {
      if (model.legendre(c, q) != 1) {
        row.sing_removed_squares = false;
        break;
      }
    }
    row.legendre_plus = model.legendre(lambda, q) == 1;
    row.residue_has_root = model.unit_residue_is_square(lambda, q);
  });
  return out;
}

template <class Model>
EdgeCriteria edge_criteria(const SquaresCore<Model>& core, const typename Model::Place& p,
                           const typename Model::Place& q) {
  return edge_criteria_from(core, p, std::vector<typename Model::Place>{q}).front();
}

/// First even place q != p of degree <= search_degree with λ_p a non-square at q.
template <class Model>
std::optional<typename Model::Place> non_neighbor_witness(const SquaresCore<Model>& core,
                                                          const typename Model::Place& p,
                                                          const typename Model::SquareClass& lambda_p,
                                                          int search_degree) {
  for (int d = 1; d <= search_degree; ++d) {
    for (const auto& q : core.even_places_of_degree(d)) {
      if (q == p) continue;
      if (core.model().legendre(lambda_p, q) == -1) return q;
    }
  }
  return std::nullopt;
}

template <class Model>
std::vector<typename Model::Place> common_neighbors(const SquaresCore<Model>& core,
                                                    const typename Model::Place& p,
                                                    const typename Model::Place& q,
                                                    int search_degree) {
  const Model& model = core.model();
  const auto lp = model.lambda_for(p);
  const auto lq = model.lambda_for(q);
  std::vector<typename Model::Place> out;
  for (int d = 1; d <= search_degree; ++d) {
    for (const auto& r : core.even_places_of_degree(d)) {
      if (r == p || r == q) continue;
      if (model.legendre(lp, r) == 1 && model.legendre(lq, r) == 1) out.push_back(r);
    }
  }
  return out;
}

/// Resolves every non-adjacent vertex pair by a common neighbour among the
/// even places of degree <= search_degree, one degree at a time.
template <class Model>
DiameterReport<Model> diameter_report(const SquaresCore<Model>& core, const EvenGraph<Model>& graph,
                                      int search_degree) {
  const Model& model = core.model();
  DiameterReport<Model> report;
  const std::size_t n = graph.size();
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!graph.adjacent(i, j)) pending.emplace_back(i, j);
    }
  }
  report.non_adjacent_pairs = pending.size();
  report.max_distance_observed = n > 1 ? (pending.empty() ? 1 : 2) : 0;

  for (int d = 1; d <= search_degree && !pending.empty(); ++d) {
    const auto& candidates = core.even_places_of_degree(d);
    if (candidates.empty()) continue;
    std::vector<BitVector> square_at(n, BitVector(candidates.size()));
    parallel_for(n, [&](std::size_t i) {
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (candidates[c] == graph.vertices[i]) continue;
        if (model.legendre(graph.lambdas[i], candidates[c]) == 1) square_at[i].set(c);
      }
    });
    std::vector<std::pair<std::size_t, std::size_t>> still;
    for (const auto& [i, j] : pending) {
      BitVector both = square_at[i];
      both &= square_at[j];
      // A common neighbour must differ from both endpoints.
      bool found = false;
      for (std::size_t c = both.first_set(); c < both.size(); c = both.next_set(c + 1)) {
        if (candidates[c] != graph.vertices[i] && candidates[c] != graph.vertices[j]) {
          found = true;
          break;
        }
      }
      if (!found) still.emplace_back(i, j);
    }
    pending = std::move(still);
  }
  report.unresolved_pairs = std::move(pending);
  report.connected = report.unresolved_pairs.empty();
  return report;
}

}  // namespace evenpoint
