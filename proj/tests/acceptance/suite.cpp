#include "evenpoint_acceptance/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evenpoint/even_graph.hpp"
#include "evenpoint/hyperelliptic.hpp"
#include "evenpoint/p1_model.hpp"
#include "evenpoint/poly_io.hpp"
#include "evenpoint/squares_core.hpp"
#include "evenpoint_acceptance/fixtures.hpp"

namespace evenpoint::acceptance {
namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit;  // seconds, 0 for none
  Outcome (*run)();
};

template <class Model>
bool directly_even(const Model& model, const typename Model::Place& p) {
  return !model.pic_mod2_vector(p).any();
}

PlaceP1 line_place(const P1Model& model, const char* text) {
  return model.finite(parse_poly(model.ring(), text));
}

// ------------------------------------------------------------------ A1

Outcome non_transitive_triple() {
  const auto model = fixtures::line(5);
  const auto f = line_place(*model, fixtures::kTripleF);
  const auto g = line_place(*model, fixtures::kTripleG);
  const auto h = line_place(*model, fixtures::kTripleH);
  auto edge = [&](const PlaceP1& a, const PlaceP1& b) {
    return model->legendre(model->lambda_for(a), b) == 1;
  };
  const bool fg = edge(f, g) && edge(g, f);
  const bool gh = edge(g, h) && edge(h, g);
  const bool fh = edge(f, h) || edge(h, f);
  std::ostringstream out;
  out << "edge(f,g)=" << fg << " edge(g,h)=" << gh << " edge(f,h)=" << fh;
  return {fg && gh && !fh, out.str()};
}

// ------------------------------------------------------------------ A2

Outcome quadratic_reciprocity() {
  std::size_t pairs = 0, failures = 0;
  for (std::uint64_t q : {3, 5, 7}) {
    const auto model = fixtures::line(q);
    std::vector<Poly> primes;
    for (int d = 1; d <= 3; ++d) {
      const auto& level = model->ring().monic_irreducibles(d);
      primes.insert(primes.end(), level.begin(), level.end());
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = 0; j < primes.size(); ++j) {
        if (i == j) continue;
        ++pairs;
        if (!model->reciprocity_check(primes[i], primes[j]).ok) ++failures;
      }
    }
  }
  std::ostringstream out;
  out << pairs << " ordered pairs over F3, F5, F7, " << failures << " failures";
  return {failures == 0, out.str()};
}

// ------------------------------------------------------------------ A3

Outcome hilbert_reciprocity() {
  const auto model = fixtures::line(5);
  const PolyRing& ring = model->ring();
  std::mt19937_64 rng(fixtures::kSeed);
  auto random_function = [&] {
    Poly num;
    do {
      num = ring.random(4, rng);
    } while (num.is_zero());
    const Poly den = ring.random_monic(static_cast<int>(rng() % 5), rng);
    return RationalFunction(ring, num, den);
  };
  std::size_t failures = 0;
  const std::size_t trials = 500;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto a = random_function();
    const auto b = random_function();
    const auto result = model->hilbert_product_check(a, b);
    if (!result.ok || result.product != 1) ++failures;
  }
  std::ostringstream out;
  out << trials << " random pairs over F5, " << failures << " with product != +1";
  return {failures == 0, out.str()};
}

// ------------------------------------------------------------------ A4

template <class Model>
std::pair<std::uint64_t, std::size_t> raw_sing_size(const Model& model) {
  SquaresCore<Model> core(model);
  const auto scan = core.scan({}, model.default_scan_bound({}));
  for (const auto& c : scan.group.basis) {
    if (!model.odd_places(c).empty()) throw MathError("scan returned a class with odd support");
  }
  return {scan.group.size(), scan.group.dimension()};
}

Outcome sing_matches_picard() {
  std::ostringstream out;
  bool ok = true;
  for (std::uint64_t q : {3, 5, 9}) {
    const auto model = fixtures::line(q);
    const auto [sing, dim] = raw_sing_size(*model);
    const std::uint64_t pic = 2;
    ok = ok && sing == pic;
    out << "P1/F" << q << " " << sing << "=" << pic << "; ";
  }
  for (const auto& fixture : {fixtures::kElliptic, fixtures::kQuintic}) {
    const auto curve = fixtures::curve(fixture);
    const auto& table = curve->jacobian();
    if (table.order() % table.doubled_count() != 0) throw MathError("2J does not divide J");
    const std::uint64_t pic = 2 * (table.order() / table.doubled_count());
    const auto [sing, dim] = raw_sing_size(*curve);
    ok = ok && sing == pic;
    out << fixtures::curve_label(fixture) << " " << sing << "=" << pic << " (|J|=" << table.order()
        << ", |2J|=" << table.doubled_count() << "); ";
  }
  return {ok, out.str()};
}

// ------------------------------------------------------------------ A5

template <class Model>
std::pair<std::size_t, std::size_t> criteria_disagreements(const Model& model) {
  SquaresCore<Model> core(model);
  std::size_t places = 0, disagreements = 0;
  for (int d = 1; d <= 3; ++d) {
    for (const auto& p : model.places_of_degree(d)) {
      ++places;
      const auto report = core.even_criteria(p);
      if (!report.agree() || report.direct_two_divisible != core.is_even(p)) ++disagreements;
    }
  }
  return {places, disagreements};
}

Outcome even_criteria_agree() {
  const auto line = fixtures::line(5);
  const auto curve = fixtures::curve(fixtures::kElliptic);
  const auto [lp, ld] = criteria_disagreements(*line);
  const auto [cp, cd] = criteria_disagreements(*curve);
  std::ostringstream out;
  out << "P1/F5 " << ld << "/" << lp << ", " << fixtures::curve_label(fixtures::kElliptic) << " " << cd
      << "/" << cp << " disagreements";
  return {ld == 0 && cd == 0, out.str()};
}

// ------------------------------------------------------------------ A6

struct GstTally {
  std::size_t even_places = 0;
  std::size_t symbol_failures = 0;
  std::size_t outsiders = 0;
  std::size_t missing_witnesses = 0;
};

template <class Model, class Draw>
GstTally gst_tally(const Model& model, Draw draw) {
  SquaresCore<Model> core(model);
  const auto elements = subgroup_elements(model, core.sing_x());
  GstTally tally;
  for (int d = 1; d <= 6; ++d) {
    for (const auto& p : model.places_of_degree(d)) {
      if (!directly_even(model, p)) continue;
      ++tally.even_places;
      for (const auto& c : elements) {
        if (model.legendre(c, p) != 1) ++tally.symbol_failures;
      }
    }
  }
  std::mt19937_64 rng(fixtures::kSeed);
  while (tally.outsiders < 20) {
    const auto lambda = draw(rng);
    if (model.odd_places(lambda).empty()) continue;
    ++tally.outsiders;
    const auto verdict = core.gst_check(lambda, 6);
    const bool valid = verdict.witness && directly_even(model, *verdict.witness) &&
                       model.legendre(lambda, *verdict.witness) == -1;
    if (!valid) ++tally.missing_witnesses;
  }
  return tally;
}

Outcome squares_at_even_places() {
  std::ostringstream out;
  bool ok = true;
  auto record = [&](const std::string& label, const GstTally& t) {
    ok = ok && t.symbol_failures == 0 && t.missing_witnesses == 0;
    out << label << ": " << t.even_places << " even places, " << t.symbol_failures << " non-squares, "
        << t.missing_witnesses << "/" << t.outsiders << " without witness; ";
  };
  {
    const auto model = fixtures::line(5);
    const PolyRing& ring = model->ring();
    record("P1/F5", gst_tally(*model, [&](std::mt19937_64& rng) {
             Poly num;
             do {
               num = ring.random(4, rng);
             } while (num.is_zero());
             const Poly den = ring.random_monic(static_cast<int>(rng() % 4), rng);
             return model->square_class(RationalFunction(ring, num, den));
           }));
  }
  for (const auto& fixture : {fixtures::kElliptic, fixtures::kQuintic}) {
    const auto curve = fixtures::curve(fixture);
    const PolyRing& ring = curve->ring();
    record(fixtures::curve_label(fixture), gst_tally(*curve, [&](std::mt19937_64& rng) {
             Poly a, b;
             do {
               a = ring.random(3, rng);
               b = ring.random(2, rng);
             } while (a.is_zero() && b.is_zero());
             return curve->square_class(curve->function(a, b));
           }));
  }
  return {ok, out.str()};
}

// ------------------------------------------------------------------ A7

Outcome sign_patterns_equidistribute() {
  const auto model = fixtures::line(5);
  SquaresCore<P1Model> core(*model);
  const std::vector<SquareClassP1> classes{model->parse_class("t"), model->parse_class("t+1")};
  std::ostringstream out;
  bool ok = true;
  std::size_t counted = 0, total = 0;
  for (int mask = 0; mask < 4; ++mask) {
    const std::vector<int> signs{(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1};
    const auto result = core.hecke_density(classes, signs, 7);
    ok = ok && std::abs(result.fraction - 0.25) <= 0.05;
    counted += result.count;
    total = result.total;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "(%+d,%+d) %.4f; ", signs[0], signs[1], result.fraction);
    out << buffer;
  }
  ok = ok && counted == total;
  out << total << " degree-7 places";
  return {ok, out.str()};
}

// ------------------------------------------------------------------ A8

Outcome even_place_density() {
  const auto curve = fixtures::curve(fixtures::kElliptic);
  SquaresCore<Curve> core(*curve);
  const std::size_t k = core.sing_x().dimension();
  if (k != static_cast<std::size_t>(curve->pic_mod2_dim())) {
    throw MathError("dim Sing(X) disagrees with the Jacobian count");
  }
  const auto result = core.even_density(6);
  std::size_t direct = 0;
  for (const auto& p : curve->places_of_degree(6)) direct += directly_even(*curve, p);
  const double expected = 1.0 / static_cast<double>(std::uint64_t{1} << k);
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, "%zu/%zu even (%.4f, direct count %zu), expected 1/2^%zu = %.4f +- 0.05",
                result.count, result.total, result.fraction, direct, k, expected);
  const bool ok = direct == result.count && std::abs(result.fraction - expected) <= 0.05;
  return {ok, buffer};
}

// ------------------------------------------------------------------ A9

template <class Model>
std::size_t asymmetric_pairs(const SquaresCore<Model>& core, const EvenGraph<Model>& graph) {
  const Model& model = core.model();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.adjacent(i, i)) ++bad;
    for (std::size_t j = i + 1; j < graph.size(); ++j) {
      const bool forward = model.legendre(graph.lambdas[i], graph.vertices[j]) == 1;
      const bool backward = model.legendre(graph.lambdas[j], graph.vertices[i]) == 1;
      if (forward != backward || graph.adjacent(i, j) != forward || graph.adjacent(j, i) != forward) ++bad;
    }
  }
  return bad;
}

Outcome adjacency_symmetric() {
  std::ostringstream out;
  bool ok = true;
  for (std::uint64_t q : {3, 5}) {
    const auto model = fixtures::line(q);
    SquaresCore<P1Model> core(*model);
    const auto graph = build_even_graph(core, 4);
    const std::size_t bad = asymmetric_pairs(core, graph);
    ok = ok && bad == 0;
    out << "P1/F" << q << " " << graph.size() << " vertices, " << bad << " asymmetric; ";
  }
  const auto curve = fixtures::curve(fixtures::kElliptic);
  SquaresCore<Curve> core(*curve);
  const auto graph = build_even_graph(core, 4);
  const std::size_t bad = asymmetric_pairs(core, graph);
  ok = ok && bad == 0;
  out << fixtures::curve_label(fixtures::kElliptic) << " " << graph.size() << " vertices, " << bad
      << " asymmetric";
  return {ok, out.str()};
}

// ------------------------------------------------------------------ A10

Outcome diameter_two() {
  std::ostringstream out;
  bool ok = true;
  for (std::uint64_t q : {3, 5}) {
    const auto model = fixtures::line(q);
    SquaresCore<P1Model> core(*model);
    const auto graph = build_even_graph(core, 4);
    const auto report = diameter_report(core, graph, 6);
    ok = ok && report.unresolved_pairs.empty();
    out << "P1/F" << q << " " << graph.size() << " vertices, " << report.non_adjacent_pairs
        << " non-adjacent pairs, " << report.unresolved_pairs.size() << " unresolved; ";
  }
  return {ok, out.str()};
}

// ------------------------------------------------------------------ A11

Outcome no_universal_vertex() {
  const auto model = fixtures::line(5);
  SquaresCore<P1Model> core(*model);
  const auto graph = build_even_graph(core, 4);
  std::size_t missing = 0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto w = non_neighbor_witness(core, graph.vertices[i], graph.lambdas[i], 6);
    const bool valid = w && *w != graph.vertices[i] && directly_even(*model, *w) &&
                       model->legendre(graph.lambdas[i], *w) == -1;
    if (!valid) ++missing;
  }
  std::ostringstream out;
  out << graph.size() << " vertices of degree <= 4 over F5, " << missing << " without a non-neighbour";
  return {missing == 0, out.str()};
}

// ------------------------------------------------------------------ A12

long long direct_point_count(const Curve& curve, int extension) {
  const FiniteField& base = curve.field();
  const auto field = FiniteField::create(base.characteristic(), base.degree() * extension);
  if (base.degree() != 1) throw std::invalid_argument("direct count implemented over prime fields");
  std::vector<Fe> coeffs;
  for (const auto& c : curve.f().coeffs()) coeffs.push_back(field->from_int(base.coords(c)[0]));
  long long count = 1;
  for (std::uint32_t i = 0; i < field->order(); ++i) {
    const Fe x = field->element(i);
    Fe value = field->zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = field->add(field->mul(value, x), *it);
    count += 1 + (field->is_zero(value) ? 0 : field->quadratic_character(value));
  }
  return count;
}

Outcome jacobian_sanity() {
  std::ostringstream out;
  bool ok = true;
  for (const auto& fixture : fixtures::kJacobianCurves) {
    const auto curve = fixtures::curve(fixture);
    const auto& table = curve->jacobian();
    const long long zeta_order = curve->zeta_class_number();
    const bool orders = static_cast<long long>(table.order()) == zeta_order;

    const double q = static_cast<double>(fixture.q);
    const int g = curve->genus();
    const auto counts = curve->point_counts(2);
    bool counts_ok = true, weil = true;
    for (int i = 1; i <= 2; ++i) {
      const long long direct = direct_point_count(*curve, i);
      counts_ok = counts_ok && direct == counts[i - 1];
      const double qi = std::pow(q, i);
      weil = weil && std::abs(static_cast<double>(direct) - qi - 1) <= 2 * g * std::sqrt(qi) + 1e-9;
    }
    const double j = static_cast<double>(table.order());
    weil = weil && j >= std::pow(std::sqrt(q) - 1, 2 * g) - 1e-9 && j <= std::pow(std::sqrt(q) + 1, 2 * g) + 1e-9;

    std::mt19937_64 rng(fixtures::kSeed);
    std::uniform_int_distribution<std::size_t> pick(0, table.order() - 1);
    std::size_t assoc_failures = 0;
    for (int t = 0; t < 500; ++t) {
      const auto& a = table.elements()[pick(rng)];
      const auto& b = table.elements()[pick(rng)];
      const auto& c = table.elements()[pick(rng)];
      const auto left = curve->cantor_add(curve->cantor_add(a, b).sum, c).sum;
      const auto right = curve->cantor_add(a, curve->cantor_add(b, c).sum).sum;
      if (left != right) ++assoc_failures;
    }
    ok = ok && orders && counts_ok && weil && assoc_failures == 0;
    out << fixtures::curve_label(fixture) << " |J|=" << table.order() << " L(1)=" << zeta_order
        << (counts_ok ? "" : " count mismatch") << (weil ? "" : " Weil bound violated") << " assoc "
        << assoc_failures << "/500; ";
  }
  return {ok, out.str()};
}

// ------------------------------------------------------------------ A13

template <class Model>
std::vector<std::string> compatibility_violations(const Model& model, const std::string& label) {
  SquaresCore<Model> core(model);
  std::vector<std::string> issues;
  auto fail = [&](const std::string& what) { issues.push_back(label + ": " + what); };
  const auto& basis = core.sing_x().basis;
  const std::size_t k = basis.size();

  const auto first = core.compatible_points(basis, 6, 0);
  const auto second = core.compatible_points(basis, 6, 1);
  if (!core.pairing_matrix(first, basis).compatible) fail("first point tuple not compatible");
  if (!core.pairing_matrix(second, basis).compatible) fail("second point tuple not compatible");
  for (std::size_t i = 0; i < k; ++i) {
    if (model.pic_mod2_vector(first[i]) != model.pic_mod2_vector(second[i])) {
      fail("compatible points " + model.place_name(first[i]) + " and " + model.place_name(second[i]) +
           " differ in Pic/2Pic");
    }
  }

  const auto classes = core.compatible_classes(first);
  if (!core.pairing_matrix(first, classes).compatible) fail("solved classes not compatible");
  for (int d = 1; d <= 3; ++d) {
    for (const auto& p : model.places_of_degree(d)) {
      for (std::size_t i = 0; i < k; ++i) {
        if (model.legendre(classes[i], p) != model.legendre(basis[i], p)) {
          fail("solved class " + std::to_string(i) + " differs from the basis at " + model.place_name(p));
          break;
        }
      }
    }
  }

  std::mt19937_64 rng(fixtures::kSeed);
  std::vector<typename Model::Place> pool;
  for (int d = 1; d <= 4; ++d) {
    const auto level = model.places_of_degree(d);
    pool.insert(pool.end(), level.begin(), level.end());
  }
  std::uniform_int_distribution<std::size_t> pick_place(0, pool.size() - 1);
  auto random_mask = [&] {
    BitVector mask(k);
    for (std::size_t i = 0; i < k; ++i) mask.set(i, rng() & 1);
    return mask;
  };
  auto point_coords = [&](const typename Model::SquareClass& c) {
    BitVector out(k);
    for (std::size_t i = 0; i < k; ++i) out.set(i, model.legendre(c, first[i]) == -1);
    return out;
  };
  std::size_t formula_failures = 0, linearity_failures = 0;
  for (int t = 0; t < 200; ++t) {
    const BitVector mask = random_mask();
    const auto lambda = core.combine(mask);
    const auto& p = pool[pick_place(rng)];
    const int direct = model.legendre(lambda, p);
    if (legendre_via_coords(mask, core.pic_coordinates(p, basis)) != direct) ++formula_failures;

    const BitVector other = random_mask();
    BitVector sum = mask;
    sum ^= other;
    BitVector expected = point_coords(lambda);
    expected ^= point_coords(core.combine(other));
    if (point_coords(model.multiply(lambda, core.combine(other))) != expected || point_coords(lambda) != mask) {
      ++linearity_failures;
    }
  }
  if (formula_failures) fail(std::to_string(formula_failures) + "/200 symbol formula mismatches");
  if (linearity_failures) fail(std::to_string(linearity_failures) + "/200 coordinate linearity failures");

  std::map<std::string, typename Model::Place> representative;
  std::size_t delta_failures = 0;
  for (int d = 1; d <= 3; ++d) {
    for (const auto& p : model.places_of_degree(d)) {
      const BitVector signature = core.sing_signature(p);
      std::string key;
      for (std::size_t i = 0; i < signature.size(); ++i) key += signature.test(i) ? '1' : '0';
      auto [it, fresh] = representative.emplace(key, p);
      if (!core.congruent_points_delta_check(p, p)) ++delta_failures;
      if (!fresh && !core.congruent_points_delta_check(it->second, p)) ++delta_failures;
    }
  }
  if (delta_failures) fail(std::to_string(delta_failures) + " delta inequalities among congruent places");
  return issues;
}

Outcome compatible_bases_unique() {
  std::vector<std::string> issues;
  auto add = [&](std::vector<std::string> more) { issues.insert(issues.end(), more.begin(), more.end()); };
  for (std::uint64_t q : {3, 5}) {
    const auto model = fixtures::line(q);
    add(compatibility_violations(*model, "P1/F" + std::to_string(q)));
  }
  for (const auto& fixture : {fixtures::kElliptic, fixtures::kQuintic}) {
    const auto curve = fixtures::curve(fixture);
    add(compatibility_violations(*curve, fixtures::curve_label(fixture)));
  }
  if (issues.empty()) return {true, "P1/F3, P1/F5, elliptic/F5, quintic/F3: no violations"};
  std::string detail;
  for (const auto& issue : issues) detail += issue + "; ";
  return {false, detail};
}

// ------------------------------------------------------------------ A14

template <class Model>
std::size_t choice_mismatches(const SquaresCore<Model>& core, const EvenGraph<Model>& graph) {
  const Model& model = core.model();
  std::size_t mismatches = 0;
  for (const auto& s : subgroup_elements(model, core.sing_x())) {
    for (std::size_t i = 0; i < graph.size(); ++i) {
      const auto lambda = model.multiply(graph.lambdas[i], s);
      for (std::size_t j = 0; j < graph.size(); ++j) {
        if (i == j) continue;
        if ((model.legendre(lambda, graph.vertices[j]) == 1) != graph.adjacent(i, j)) ++mismatches;
      }
    }
  }
  return mismatches;
}

Outcome choice_invariance() {
  const auto model = fixtures::line(5);
  SquaresCore<P1Model> core(*model);
  const auto graph = build_even_graph(core, 2);
  const std::size_t line_bad = choice_mismatches(core, graph);

  const auto curve = fixtures::curve(fixtures::kElliptic);
  SquaresCore<Curve> curve_core(*curve);
  const auto curve_graph = build_even_graph(curve_core, 4);
  const std::size_t curve_bad = choice_mismatches(curve_core, curve_graph);

  std::ostringstream out;
  out << "P1/F5 degree <= 2: " << graph.size() << " vertices x " << core.sing_x().size() << " shifts, "
      << line_bad << " changed edges; " << fixtures::curve_label(fixtures::kElliptic) << " degree <= 4: "
      << curve_graph.size() << " vertices x " << curve_core.sing_x().size() << " shifts, " << curve_bad
      << " changed edges";
  return {line_bad == 0 && curve_bad == 0, out.str()};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"A1", "non-transitive triple over F5", 1.0, non_transitive_triple},
      {"A2", "quadratic reciprocity", 30.0, quadratic_reciprocity},
      {"A3", "Hilbert reciprocity", 30.0, hilbert_reciprocity},
      {"A4", "|Sing(X)| = |Pic X / 2 Pic X|", 120.0, sing_matches_picard},
      {"A5", "even-place criteria agree", 0.0, even_criteria_agree},
      {"A6", "Sing(X) = classes square at all even places", 0.0, squares_at_even_places},
      {"A7", "sign patterns equidistribute", 120.0, sign_patterns_equidistribute},
      {"A8", "density of even places", 0.0, even_place_density},
      {"A9", "adjacency is symmetric", 0.0, adjacency_symmetric},
      {"A10", "common neighbours for every non-adjacent pair", 120.0, diameter_two},
      {"A11", "every vertex has a non-neighbour", 0.0, no_universal_vertex},
      {"A12", "Jacobian sanity", 0.0, jacobian_sanity},
      {"A13", "compatible bases and delta equality", 0.0, compatible_bases_unique},
      {"A14", "edges independent of the choice of lambda", 0.0, choice_invariance},
  };
  return all;
}

CriterionResult evaluate(const Criterion& criterion) {
  CriterionResult result;
  result.id = criterion.id;
  result.title = criterion.title;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome outcome = criterion.run();
    result.passed = outcome.passed;
    result.detail = outcome.detail;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (criterion.time_limit > 0 && result.seconds > criterion.time_limit) {
    result.passed = false;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "; exceeded %.0f s limit", criterion.time_limit);
    result.detail += buffer;
  }
  return result;
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> out;
  for (const auto& c : criteria()) out.emplace_back(c.id);
  return out;
}

CriterionResult run_criterion(std::string_view id) {
  for (const auto& c : criteria()) {
    if (id == c.id) return evaluate(c);
  }
  throw std::invalid_argument("unknown criterion " + std::string(id));
}

std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    out.push_back(evaluate(c));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& result) {
  char head[96];
  std::snprintf(head, sizeof head, "%-4s %s  %s", result.id.c_str(), result.passed ? "PASS" : "FAIL",
                result.title.c_str());
  char tail[32];
  std::snprintf(tail, sizeof tail, " (%.2f s)", result.seconds);
  return std::string(head) + "  [" + result.detail + "]" + tail;
}

}  // namespace evenpoint::acceptance
