#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "evenpoint/errors.hpp"
#include "evenpoint/gf2.hpp"

namespace evenpoint {

// Square-class machinery over any curve model. A model provides:
//
//   Place, SquareClass, Candidate (ScanCandidate<SquareClass, Place>)
//   places_of_degree(d), place_degree(p), is_infinite(p)
//   odd_places(c), legendre(c, p), unit_residue_is_square(c, p)
//   multiply(a, b), one(), zeta()
//   scan_candidates(removed, bound), default_scan_bound(removed)
//   pic_mod2_dim(), pic_mod2_vector(p), lambda_for(p)
//   place_name(p), class_name(c)

/// An F_2 subspace of K*/K*^2 given by independent generators.
template <class Model>
struct SubgroupF2 {
  std::vector<typename Model::SquareClass> basis;

  std::size_t dimension() const { return basis.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << basis.size(); }
};

/// All 2^k elements; element i is the product of basis[j] over the set bits j of i.
template <class Model>
std::vector<typename Model::SquareClass> subgroup_elements(const Model& model,
                                                           const SubgroupF2<Model>& group) {
  std::vector<typename Model::SquareClass> out{model.one()};
  for (const auto& generator : group.basis) {
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(model.multiply(out[i], generator));
  }
  return out;
}

template <class Model>
struct SingScan {
  SubgroupF2<Model> group;
  /// For each basis element, its valuation parity at each removed place.
  std::vector<BitVector> removed_parity;
  int bound = 0;
  std::size_t candidates = 0;
};

struct EvenCriteriaReport {
  bool direct_two_divisible = false;  // (i)
  bool odd_class_exists = false;      // (ii)
  bool delta_equals_sing = false;     // (iii)
  bool pic_dimension_matches = false; // (iv)
  bool index_two = false;             // (v)

  bool agree() const {
    return direct_two_divisible == odd_class_exists && odd_class_exists == delta_equals_sing &&
           delta_equals_sing == pic_dimension_matches && pic_dimension_matches == index_two;
  }
};

struct PairingMatrix {
  std::vector<std::vector<int>> signs;
  bool compatible = false;
};

template <class Model>
struct GstVerdict {
  bool in_sing = false;
  bool consistent = true;
  std::optional<typename Model::Place> witness;
  std::size_t places_checked = 0;
};

struct DensityResult {
  double fraction = 0.0;
  std::size_t count = 0;
  std::size_t total = 0;
};

/// (-1)^(ε·ε').
inline int legendre_via_coords(const BitVector& class_coords, const BitVector& place_coords) {
  return class_coords.dot(place_coords) ? -1 : 1;
}

/// Sing(X) and everything derived from it for one model. The Sing(X) basis
/// is computed and certified on construction; afterwards the object is
/// read-only apart from internally synchronized caches.
template <class Model>
class SquaresCore {
 public:
  using Place = typename Model::Place;
  using Class = typename Model::SquareClass;
  using Group = SubgroupF2<Model>;

  explicit SquaresCore(const Model& model) : model_(model), sing_x_(sing({}).group) {}

  const Model& model() const { return model_; }
  const Group& sing_x() const { return sing_x_; }

  /// dim Sing(X minus removed) predicted from Pic X / 2 Pic X.
  std::size_t expected_sing_dimension(const std::vector<Place>& removed) const {
    std::vector<BitVector> vectors;
    for (const auto& p : removed) vectors.push_back(model_.pic_mod2_vector(p));
    return model_.pic_mod2_dim() + removed.size() - gf2_rank(vectors);
  }

  /// One scan at a fixed bound, no certification.
  SingScan<Model> scan(const std::vector<Place>& removed, int bound) const {
    const auto candidates = model_.scan_candidates(removed, bound);
    std::map<Place, std::size_t> removed_index;
    for (std::size_t i = 0; i < removed.size(); ++i) removed_index.emplace(removed[i], i);

    std::set<Place> support;
    for (const auto& c : candidates) support.insert(c.odd.begin(), c.odd.end());
    std::map<Place, std::size_t> column;
    for (const auto& p : support) {
      if (!removed_index.count(p)) column.emplace(p, column.size());
    }
    const std::size_t n_other = column.size();
    for (const auto& [p, i] : removed_index) column.emplace(p, n_other + i);

    std::set<Place> excluded = support;
    excluded.insert(removed.begin(), removed.end());
    const std::vector<Place> tests = signature_places(excluded);

    const std::size_t width = n_other + removed.size() + tests.size();
    Gf2Echelon echelon(width, candidates.size(), false);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      BitVector row(width);
      for (const auto& p : candidates[i].odd) row.flip(column.at(p));
      for (std::size_t t = 0; t < tests.size(); ++t) {
        if (model_.legendre(candidates[i].cls, tests[t]) == -1) row.set(n_other + removed.size() + t);
      }
      echelon.insert(row, i);
    }

    SingScan<Model> result;
    result.bound = bound;
    result.candidates = candidates.size();
    for (const auto& row : echelon.rows()) {
      if (row.pivot < n_other) continue;
      Class product = model_.one();
      for (std::size_t i = row.combination.first_set(); i < candidates.size();
           i = row.combination.next_set(i + 1)) {
        product = model_.multiply(product, candidates[i].cls);
      }
      BitVector parity(removed.size());
      for (std::size_t j = 0; j < removed.size(); ++j) parity.set(j, row.value.test(n_other + j));
      result.group.basis.push_back(std::move(product));
      result.removed_parity.push_back(std::move(parity));
    }
    return result;
  }

  /// Sing(X minus removed). With `certify`, the scan is widened up to two
  /// steps until its dimension matches expected_sing_dimension; a shortfall
  /// then raises BoundError. A negative bound selects the model default.
  SingScan<Model> sing(const std::vector<Place>& removed, int bound = -1, bool certify = true) const {
    const int start = bound < 0 ? model_.default_scan_bound(removed) : bound;
    if (!certify) return scan(removed, start);
    const std::size_t expected = expected_sing_dimension(removed);
    std::size_t found = 0;
    for (int widen = 0; widen <= 2; ++widen) {
      SingScan<Model> result = scan(removed, start + widen);
      found = result.group.dimension();
      if (found == expected) return result;
      if (found > expected) {
        throw MathError("Sing scan found " + std::to_string(found) +
                        " independent classes, more than the Pic/2Pic bound " +
                        std::to_string(expected));
      }
    }
    throw BoundError("scan bound " + std::to_string(start + 2) + " too small: found " +
                     std::to_string(found) + " of " + std::to_string(expected) +
                     " independent classes; raise the scan bound");
  }

  /// Kernel vectors (coordinates over the Sing(X) basis) of the classes that
  /// are local squares at every removed place.
  std::vector<BitVector> delta_coordinates(const std::vector<Place>& removed) const {
    const std::size_t k = sing_x_.dimension();
    Gf2Echelon echelon(removed.size(), k);
    std::vector<BitVector> kernel;
    for (std::size_t i = 0; i < k; ++i) {
      BitVector row(removed.size());
      for (std::size_t j = 0; j < removed.size(); ++j) {
        row.set(j, model_.legendre(sing_x_.basis[i], removed[j]) == -1);
      }
      const auto reduced = echelon.reduce(row);
      if (!reduced.value.any()) {
        BitVector combination = reduced.combination;
        combination.flip(i);
        kernel.push_back(std::move(combination));
      } else {
        echelon.insert(row, i);
      }
    }
    return kernel;
  }

  /// Δ(X minus removed) ⊆ Sing(X).
  Group delta(const std::vector<Place>& removed) const {
    if (removed.empty()) throw std::invalid_argument("delta needs at least one removed place");
    Group out;
    for (const auto& coords : delta_coordinates(removed)) out.basis.push_back(combine(coords));
    return out;
  }

  /// Product of Sing(X) basis elements selected by coords.
  Class combine(const BitVector& coords) const {
    Class product = model_.one();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords.test(i)) product = model_.multiply(product, sing_x_.basis[i]);
    }
    return product;
  }

  /// Legendre bits of p against the Sing(X) basis.
  BitVector sing_signature(const Place& p) const {
    BitVector out(sing_x_.dimension());
    for (std::size_t i = 0; i < sing_x_.dimension(); ++i) {
      out.set(i, model_.legendre(sing_x_.basis[i], p) == -1);
    }
    return out;
  }

  bool is_even(const Place& p) const { return !sing_signature(p).any(); }

  /// Even places of degree exactly d, in enumeration order. Cached.
  const std::vector<Place>& even_places_of_degree(int d) const {
    {
      std::lock_guard lock(cache_mutex_);
      if (auto it = even_cache_.find(d); it != even_cache_.end()) return *it->second;
    }
    auto list = std::make_shared<std::vector<Place>>();
    for (const auto& p : model_.places_of_degree(d)) {
      if (is_even(p)) list->push_back(p);
    }
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = even_cache_.emplace(d, std::move(list));
    return *it->second;
  }

  std::vector<Place> even_places_up_to(int d) const {
    std::vector<Place> out;
    for (int k = 1; k <= d; ++k) {
      const auto& level = even_places_of_degree(k);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  EvenCriteriaReport even_criteria(const Place& p) const {
    EvenCriteriaReport report;
    report.direct_two_divisible = !model_.pic_mod2_vector(p).any();

    const SingScan<Model> removed = scan({p}, model_.default_scan_bound({p}));
    for (const auto& parity : removed.removed_parity) {
      if (parity.test(0)) report.odd_class_exists = true;
    }
    report.delta_equals_sing = delta_coordinates({p}).size() == sing_x_.dimension();

    const std::size_t pic_removed =
        model_.pic_mod2_dim() - gf2_rank({model_.pic_mod2_vector(p)});
    report.pic_dimension_matches = sing_x_.dimension() == pic_removed;

    const SingScan<Model> full = scan({}, model_.default_scan_bound({}));
    report.index_two = removed.group.dimension() == full.group.dimension() + 1;
    return report;
  }

  PairingMatrix pairing_matrix(const std::vector<Place>& points,
                               const std::vector<Class>& classes) const {
    if (points.size() != classes.size()) {
      throw std::invalid_argument("pairing needs as many points as classes");
    }
    PairingMatrix out;
    out.compatible = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::vector<int> row;
      for (std::size_t j = 0; j < points.size(); ++j) {
        const int s = model_.legendre(classes[i], points[j]);
        row.push_back(s);
        if (s != (i == j ? -1 : 1)) out.compatible = false;
      }
      out.signs.push_back(std::move(row));
    }
    return out;
  }

  /// For each j, the (skip+1)-th place in enumeration order with legendre
  /// pattern -1 at class j and +1 at the others.
  std::vector<Place> compatible_points(const std::vector<Class>& classes, int search_bound,
                                       std::size_t skip = 0) const {
    const std::size_t k = classes.size();
    std::set<Place> undefined;
    for (const auto& c : classes) {
      for (const auto& p : model_.odd_places(c)) undefined.insert(p);
    }
    std::vector<std::optional<Place>> found(k);
    std::vector<std::size_t> seen(k, 0);
    std::size_t remaining = k;
    for (int d = 1; d <= search_bound && remaining > 0; ++d) {
      for (const auto& p : model_.places_of_degree(d)) {
        if (undefined.count(p)) continue;
        std::size_t minus = 0, index = 0;
        for (std::size_t i = 0; i < k; ++i) {
          if (model_.legendre(classes[i], p) == -1) {
            ++minus;
            index = i;
          }
        }
        if (minus != 1 || found[index]) continue;
        if (seen[index]++ < skip) continue;
        found[index] = p;
        if (--remaining == 0) break;
      }
    }
    if (remaining > 0) throw BoundError("no compatible points within bound " + std::to_string(search_bound));
    std::vector<Place> out;
    for (auto& p : found) out.push_back(*p);
    return out;
  }

  /// Classes in Sing(X) compatible with the given points.
  std::vector<Class> compatible_classes(const std::vector<Place>& points) const {
    std::vector<BitVector> vectors;
    for (const auto& p : points) vectors.push_back(model_.pic_mod2_vector(p));
    if (gf2_rank(vectors) != points.size()) {
      throw MathError("dependent point classes in Pic/2Pic: no compatible classes exist");
    }
    const std::size_t k = sing_x_.dimension();
    std::vector<BitVector> rows(k, BitVector(points.size()));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < points.size(); ++j) {
        rows[i].set(j, model_.legendre(sing_x_.basis[i], points[j]) == -1);
      }
    }
    std::vector<Class> out;
    for (std::size_t j = 0; j < points.size(); ++j) {
      BitVector target(points.size());
      target.set(j);
      auto solution = gf2_solve_left(rows, target);
      if (!solution) throw MathError("dependent point classes: pairing has no solution");
      out.push_back(combine(*solution));
    }
    return out;
  }

  BitVector pic_coordinates(const Place& p, const std::vector<Class>& classes) const {
    BitVector out(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) out.set(i, model_.legendre(classes[i], p) == -1);
    return out;
  }

  /// Δ(X∖{p}) = Δ(X∖{q}) for places with equal coordinates.
  bool congruent_points_delta_check(const Place& p, const Place& q) const {
    if (sing_signature(p) != sing_signature(q)) {
      throw MathError("precondition violated: places have different Pic/2Pic coordinates");
    }
    const auto a = delta_coordinates({p});
    const auto b = delta_coordinates({q});
    std::vector<BitVector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t ra = gf2_rank(a), rb = gf2_rank(b);
    return ra == rb && gf2_rank(both) == ra;
  }

  GstVerdict<Model> gst_check(const Class& lambda, int degree_bound) const {
    GstVerdict<Model> verdict;
    const auto odd = model_.odd_places(lambda);
    verdict.in_sing = odd.empty();
    const std::set<Place> skip(odd.begin(), odd.end());
    for (int d = 1; d <= degree_bound; ++d) {
      for (const auto& p : even_places_of_degree(d)) {
        if (skip.count(p)) continue;
        ++verdict.places_checked;
        if (model_.legendre(lambda, p) == -1) {
          verdict.consistent = false;
          verdict.witness = p;
          return verdict;
        }
      }
    }
    return verdict;
  }

  /// Fraction of degree-d places (excluding ∞ and places where some class
  /// has odd valuation) with legendre(classes[i], p) = signs[i] for all i.
  /// With sample_size > 0, places are drawn uniformly with replacement.
  DensityResult hecke_density(const std::vector<Class>& classes, const std::vector<int>& signs,
                              int d, std::size_t sample_size = 0, std::uint64_t seed = 0) const {
    if (classes.size() != signs.size()) throw std::invalid_argument("one sign per class required");
    std::set<Place> excluded;
    for (const auto& c : classes) {
      for (const auto& p : model_.odd_places(c)) excluded.insert(p);
    }
    std::vector<Place> pool;
    for (const auto& p : model_.places_of_degree(d)) {
      if (!model_.is_infinite(p) && !excluded.count(p)) pool.push_back(p);
    }
    if (pool.empty()) throw MathError("no places of degree " + std::to_string(d) + " after exclusions");
    auto matches = [&](const Place& p) {
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (model_.legendre(classes[i], p) != signs[i]) return false;
      }
      return true;
    };
    DensityResult result;
    if (sample_size == 0) {
      for (const auto& p : pool) result.count += matches(p);
      result.total = pool.size();
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (std::size_t s = 0; s < sample_size; ++s) result.count += matches(pool[pick(rng)]);
      result.total = sample_size;
    }
    result.fraction = static_cast<double>(result.count) / static_cast<double>(result.total);
    return result;
  }

  DensityResult even_density(int d) const {
    DensityResult result;
    result.total = model_.places_of_degree(d).size();
    result.count = even_places_of_degree(d).size();
    if (result.total == 0) throw MathError("no places of degree " + std::to_string(d));
    result.fraction = static_cast<double>(result.count) / static_cast<double>(result.total);
    return result;
  }

 private:
  /// Up to 24 places per degree outside `excluded`, 48 in total.
  std::vector<Place> signature_places(const std::set<Place>& excluded) const {
    std::vector<Place> out;
    for (int d = 1; d <= 8 && out.size() < 48; ++d) {
      std::vector<Place> level;
      try {
        level = model_.places_of_degree(d);
      } catch (const BoundError&) {
        break;
      }
      std::size_t taken = 0;
      for (const auto& p : level) {
        if (excluded.count(p)) continue;
        out.push_back(p);
        if (++taken == 24) break;
      }
    }
    return out;
  }

  const Model& model_;
  Group sing_x_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const std::vector<Place>>> even_cache_;
};

}  // namespace evenpoint
