#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "evenpoint/errors.hpp"
#include "evenpoint/even_graph.hpp"
#include "evenpoint/graph_export.hpp"
#include "evenpoint/hyperelliptic.hpp"
#include "evenpoint/limits.hpp"
#include "evenpoint/p1_model.hpp"
#include "evenpoint/poly_io.hpp"
#include "evenpoint/squares_core.hpp"
#include "evenpoint_acceptance/suite.hpp"
#include "json.hpp"

namespace evenpoint::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ------------------------------------------------------------------ output

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const Json& array) {
  for (const auto& v : array) {
    if (v.is_structured()) return false;
  }
  return true;
}

void render_table(std::ostream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_table(out, value, indent + 2);
    } else if (value.is_array() && all_scalars(value)) {
      out << pad << key << ":";
      for (const auto& v : value) out << " " << scalar_text(v);
      out << "\n";
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (const auto& row : value) {
        out << pad << "  -";
        if (row.is_object()) {
          for (const auto& [k, v] : row.items()) {
            out << " " << k << "=" << (v.is_structured() ? v.dump() : scalar_text(v));
          }
        } else if (row.is_array() && all_scalars(row)) {
          for (const auto& v : row) out << " " << scalar_text(v);
        } else {
          out << " " << row.dump();
        }
        out << "\n";
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.output);
  file << text;
}

/// `fallback` is the format used when --format is auto.
void emit(const RunConfig& cfg, const Json& report, const std::string& fallback = "json") {
  const std::string format = cfg.format == "auto" ? fallback : cfg.format;
  if (format == "json") {
    write_output(cfg, report.dump(2) + "\n");
  } else if (format == "table") {
    std::ostringstream out;
    render_table(out, report, 0);
    write_output(cfg, out.str());
  } else {
    throw UsageError("format " + format + " is not available for this command");
  }
}

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

// ------------------------------------------------------------------ models

FieldPtr make_field(const RunConfig& cfg, const Limits& limits) {
  if (cfg.modulus.empty()) return FiniteField::of_order(cfg.q, limits);
  for (std::uint32_t p = 3; p <= cfg.q; p += 2) {
    if (!is_prime(p) || cfg.q % p != 0) continue;
    std::uint64_t power = 1;
    int n = 0;
    while (power < cfg.q) {
      power *= p;
      ++n;
    }
    if (power != cfg.q) break;
    if (cfg.modulus.size() != static_cast<std::size_t>(n) + 1) {
      throw UsageError("--modulus needs " + std::to_string(n + 1) + " coefficients for q = " + std::to_string(cfg.q));
    }
    return FiniteField::create(p, n, cfg.modulus, limits);
  }
  throw UsageError("q must be an odd prime power");
}

template <class Body>
int with_model(const RunConfig& cfg, Body&& body) {
  const Limits limits = Limits::from_environment();
  auto field = make_field(cfg, limits);
  if (cfg.model == "curve" || !cfg.f.empty()) {
    if (cfg.f.empty()) throw UsageError("--model curve needs --f");
    const PolyRing ring(field, 'x', cfg.seed, limits);
    const Curve model(field, parse_poly(ring, cfg.f), cfg.seed, limits);
    return body(model);
  }
  const P1Model model(field, cfg.seed, limits);
  return body(model);
}

template <class Model>
Json class_list(const Model& model, const std::vector<typename Model::SquareClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back(model.class_name(c));
  return out;
}

template <class Model>
Json place_list(const Model& model, const std::vector<typename Model::Place>& places) {
  Json out = Json::array();
  for (const auto& p : places) out.push_back(model.place_name(p));
  return out;
}

template <class Model>
std::vector<typename Model::Place> parse_places(const Model& model, const std::vector<std::string>& texts) {
  std::vector<typename Model::Place> out;
  for (const auto& t : texts) out.push_back(model.parse_place(t));
  return out;
}

template <class Model>
std::vector<typename Model::SquareClass> parse_classes(const Model& model, const std::vector<std::string>& texts) {
  std::vector<typename Model::SquareClass> out;
  for (const auto& t : texts) out.push_back(model.parse_class(t));
  return out;
}

template <class Model>
Json header(const Model& model) {
  Json out;
  out["q"] = model.field().order();
  out["model"] = model.model_name();
  if (auto f = model.curve_f_name()) out["curve_f"] = *f;
  return out;
}

// ------------------------------------------------------------------ commands

struct SymbolArgs {
  std::string cls, place, a, b, f, g;
};

int cmd_legendre(const RunConfig& cfg, const SymbolArgs& args) {
  return with_model(cfg, [&](const auto& model) {
    const int s = model.legendre(model.parse_class(args.cls), model.parse_place(args.place));
    Json report = header(model);
    report["class"] = args.cls;
    report["place"] = args.place;
    report["legendre"] = s;
    if (cfg.format == "auto") {
      write_output(cfg, sign_text(s) + "\n");
    } else {
      emit(cfg, report);
    }
    return kOk;
  });
}

const P1Model& require_line(const P1Model& model) { return model; }
[[noreturn]] const P1Model& require_line(const Curve&) {
  throw UsageError("this symbol command is only available for the p1 model");
}

int cmd_hilbert(const RunConfig& cfg, const SymbolArgs& args) {
  return with_model(cfg, [&](const auto& any) {
    const P1Model& model = require_line(any);
    const auto a = parse_rational(model.ring(), args.a);
    const auto b = parse_rational(model.ring(), args.b);
    Json report = header(model);
    report["a"] = args.a;
    report["b"] = args.b;
    int value;
    if (args.place.empty()) {
      const auto product = model.hilbert_product_check(a, b);
      report["product"] = product.product;
      report["ok"] = product.ok;
      value = product.product;
    } else {
      value = model.hilbert(a, b, model.parse_place(args.place));
      report["place"] = args.place;
      report["hilbert"] = value;
    }
    if (cfg.format == "auto") {
      write_output(cfg, sign_text(value) + "\n");
    } else {
      emit(cfg, report);
    }
    return kOk;
  });
}

int cmd_reciprocity(const RunConfig& cfg, const SymbolArgs& args) {
  return with_model(cfg, [&](const auto& any) {
    const P1Model& model = require_line(any);
    const auto r = model.reciprocity_check(parse_poly(model.ring(), args.f), parse_poly(model.ring(), args.g));
    Json report = header(model);
    report["f"] = args.f;
    report["g"] = args.g;
    report["lhs"] = r.lhs;
    report["rhs"] = r.rhs;
    report["ok"] = r.ok;
    emit(cfg, report);
    return r.ok ? kOk : kFailure;
  });
}

struct GraphArgs {
  int max_degree = 2;
  int search_degree = 6;
  std::string place;
  std::string common;
};

int cmd_graph_build(const RunConfig& cfg, const GraphArgs& args) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    const auto data = graph_data(model, build_even_graph(core, args.max_degree));
    const std::string format = cfg.format == "auto" ? "json" : cfg.format;
    if (format == "json") {
      write_output(cfg, export_json(data) + "\n");
    } else if (format == "dot") {
      write_output(cfg, export_dot(data));
    } else if (format == "csv") {
      write_output(cfg, export_csv(data));
    } else if (format == "table") {
      std::ostringstream out;
      out << "vertices: " << data.vertices.size() << "\nedges: " << data.edges.size() << "\n";
      for (const auto& v : data.vertices) out << "  " << v.id << " " << v.place << " lambda=" << v.lambda << "\n";
      write_output(cfg, out.str());
    } else {
      throw UsageError("unknown format " + format);
    }
    return kOk;
  });
}

int cmd_graph_diameter(const RunConfig& cfg, const GraphArgs& args) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    const auto graph = build_even_graph(core, args.max_degree);
    const auto report = diameter_report(core, graph, args.search_degree);
    Json out = header(model);
    out["max_degree"] = args.max_degree;
    out["search_degree"] = args.search_degree;
    out["vertices"] = graph.size();
    out["edges"] = graph.edge_count();
    out["non_adjacent_pairs"] = report.non_adjacent_pairs;
    out["connected"] = report.connected;
    out["max_distance_observed"] = report.max_distance_observed;
    Json unresolved = Json::array();
    for (const auto& [i, j] : report.unresolved_pairs) {
      unresolved.push_back({model.place_name(graph.vertices[i]), model.place_name(graph.vertices[j])});
    }
    out["unresolved_pairs"] = unresolved;
    emit(cfg, out);
    return kOk;
  });
}

int cmd_graph_witness(const RunConfig& cfg, const GraphArgs& args) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    const auto p = model.parse_place(args.place);
    if (!core.is_even(p)) throw UsageError(args.place + " is not an even place");
    Json out = header(model);
    out["place"] = model.place_name(p);
    out["lambda"] = model.class_name(model.lambda_for(p));
    out["search_degree"] = args.search_degree;
    const auto w = non_neighbor_witness(core, p, model.lambda_for(p), args.search_degree);
    out["non_neighbor"] = w ? Json(model.place_name(*w)) : Json(nullptr);
    if (!args.common.empty()) {
      const auto q = model.parse_place(args.common);
      if (!core.is_even(q)) throw UsageError(args.common + " is not an even place");
      out["other"] = model.place_name(q);
      out["adjacent"] = model.legendre(model.lambda_for(p), q) == 1;
      out["common_neighbors"] = place_list(model, common_neighbors(core, p, q, args.search_degree));
    }
    emit(cfg, out);
    if (!w && args.common.empty()) throw BoundError("no non-neighbour of degree <= " + std::to_string(args.search_degree));
    return kOk;
  });
}

struct SingArgs {
  std::vector<std::string> remove;
  int bound = -1;
};

int cmd_sing(const RunConfig& cfg, const SingArgs& args, bool delta) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    const auto removed = parse_places(model, args.remove);
    Json out = header(model);
    out["removed"] = place_list(model, removed);
    if (delta) {
      if (removed.empty()) throw UsageError("delta needs at least one --remove place");
      const auto group = core.delta(removed);
      out["dimension"] = group.dimension();
      out["size"] = group.size();
      out["basis"] = class_list(model, group.basis);
    } else {
      const auto scan = core.sing(removed, args.bound);
      out["bound"] = scan.bound;
      out["candidates"] = scan.candidates;
      out["dimension"] = scan.group.dimension();
      out["expected_dimension"] = core.expected_sing_dimension(removed);
      out["size"] = scan.group.size();
      out["basis"] = class_list(model, scan.group.basis);
    }
    emit(cfg, out);
    return kOk;
  });
}

int cmd_even_check(const RunConfig& cfg, const std::string& place) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    const auto p = model.parse_place(place);
    const auto report = core.even_criteria(p);
    Json out = header(model);
    out["place"] = model.place_name(p);
    out["degree"] = model.place_degree(p);
    out["even"] = core.is_even(p);
    out["criteria"] = {
        {"direct_two_divisible", report.direct_two_divisible},
        {"odd_class_exists", report.odd_class_exists},
        {"delta_equals_sing", report.delta_equals_sing},
        {"pic_dimension_matches", report.pic_dimension_matches},
        {"index_two", report.index_two},
    };
    out["agree"] = report.agree();
    out["sing_signature"] = core.sing_signature(p).to_ints();
    if (core.is_even(p)) out["lambda"] = model.class_name(model.lambda_for(p));
    emit(cfg, out);
    return report.agree() ? kOk : kFailure;
  });
}

struct CompatArgs {
  std::vector<std::string> classes;
  std::vector<std::string> points;
  int search_bound = 6;
  std::size_t skip = 0;
};

int cmd_compat(const RunConfig& cfg, const CompatArgs& args) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    Json out = header(model);
    const auto signs_json = [](const PairingMatrix& m) {
      Json rows = Json::array();
      for (const auto& row : m.signs) rows.push_back(row);
      return rows;
    };
    if (!args.points.empty()) {
      const auto points = parse_places(model, args.points);
      const auto classes = core.compatible_classes(points);
      const auto matrix = core.pairing_matrix(points, classes);
      out["points"] = place_list(model, points);
      out["classes"] = class_list(model, classes);
      out["pairing"] = signs_json(matrix);
      out["compatible"] = matrix.compatible;
    } else {
      const auto classes = args.classes.empty() ? core.sing_x().basis : parse_classes(model, args.classes);
      const auto points = core.compatible_points(classes, args.search_bound, args.skip);
      const auto matrix = core.pairing_matrix(points, classes);
      out["classes"] = class_list(model, classes);
      out["points"] = place_list(model, points);
      out["pairing"] = signs_json(matrix);
      out["compatible"] = matrix.compatible;
      Json coords = Json::array();
      for (const auto& p : points) coords.push_back(model.pic_mod2_vector(p).to_ints());
      out["pic_mod2"] = coords;
    }
    emit(cfg, out);
    return kOk;
  });
}

struct DensityArgs {
  std::vector<std::string> classes;
  std::vector<int> signs;
  int degree = 2;
  std::size_t sample = 0;
};

int cmd_density_hecke(const RunConfig& cfg, const DensityArgs& args) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    const auto classes = parse_classes(model, args.classes);
    std::vector<int> signs = args.signs;
    if (signs.empty()) signs.assign(classes.size(), 1);
    for (int s : signs) {
      if (s != 1 && s != -1) throw UsageError("signs must be 1 or -1");
    }
    const auto r = core.hecke_density(classes, signs, args.degree, args.sample, cfg.seed);
    Json out = header(model);
    out["classes"] = class_list(model, classes);
    out["signs"] = signs;
    out["degree"] = args.degree;
    out["mode"] = args.sample ? "sample" : "exhaustive";
    out["count"] = r.count;
    out["total"] = r.total;
    out["fraction"] = r.fraction;
    out["expected"] = 1.0 / static_cast<double>(std::uint64_t{1} << classes.size());
    emit(cfg, out);
    return kOk;
  });
}

int cmd_density_even(const RunConfig& cfg, const DensityArgs& args) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    const auto r = core.even_density(args.degree);
    Json out = header(model);
    out["degree"] = args.degree;
    out["k"] = core.sing_x().dimension();
    out["count"] = r.count;
    out["total"] = r.total;
    out["fraction"] = r.fraction;
    emit(cfg, out);
    return kOk;
  });
}

int cmd_gst(const RunConfig& cfg, const std::string& cls, int degree_bound) {
  return with_model(cfg, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    SquaresCore<Model> core(model);
    const auto lambda = model.parse_class(cls);
    const auto v = core.gst_check(lambda, degree_bound);
    Json out = header(model);
    out["class"] = model.class_name(lambda);
    out["degree_bound"] = degree_bound;
    out["in_sing"] = v.in_sing;
    out["places_checked"] = v.places_checked;
    if (v.in_sing) {
      out["verdict"] = v.consistent ? "consistent" : "inconsistent";
    } else {
      out["verdict"] = v.witness ? "witness found" : "no witness within bound";
    }
    out["witness"] = v.witness ? Json(model.place_name(*v.witness)) : Json(nullptr);
    emit(cfg, out);
    return v.in_sing && !v.consistent ? kFailure : kOk;
  });
}

int cmd_curve_analyze(const RunConfig& cfg, int max_degree) {
  if (cfg.f.empty()) throw UsageError("curve analyze needs --f");
  RunConfig curve_cfg = cfg;
  curve_cfg.model = "curve";
  return with_model(curve_cfg, [&](const auto& any) {
    if constexpr (!std::is_same_v<std::decay_t<decltype(any)>, Curve>) {
      return static_cast<int>(kUsage);
    } else {
      const Curve& curve = any;
      SquaresCore<Curve> core(curve);
      Json out = header(curve);
      out["genus"] = curve.genus();
      Json census = Json::array();
      Json even = Json::array();
      for (int d = 1; d <= max_degree; ++d) {
        std::map<std::string, std::size_t> kinds{{"infinite", 0}, {"ramified", 0}, {"split", 0}, {"inert", 0}};
        const auto places = curve.places_of_degree(d);
        for (const auto& p : places) {
          switch (p.kind) {
            case PlaceKind::Infinite: ++kinds["infinite"]; break;
            case PlaceKind::Ramified: ++kinds["ramified"]; break;
            case PlaceKind::Split: ++kinds["split"]; break;
            case PlaceKind::Inert: ++kinds["inert"]; break;
          }
        }
        const auto& evens = core.even_places_of_degree(d);
        for (const auto& p : evens) even.push_back(curve.place_name(p));
        census.push_back({{"degree", d},
                          {"places", places.size()},
                          {"infinite", kinds["infinite"]},
                          {"ramified", kinds["ramified"]},
                          {"split", kinds["split"]},
                          {"inert", kinds["inert"]},
                          {"even", evens.size()}});
      }
      out["census"] = census;
      const auto& table = curve.jacobian();
      out["jacobian"] = {
          {"order", table.order()},
          {"zeta_order", curve.zeta_class_number()},
          {"two_torsion", table.two_torsion_count()},
          {"two_rank", table.two_rank()},
          {"l_polynomial", curve.l_polynomial()},
          {"point_counts", curve.point_counts(std::max(1, curve.genus()))},
      };
      out["sing_basis"] = class_list(curve, core.sing_x().basis);
      out["sing_dimension"] = core.sing_x().dimension();
      out["even_places"] = even;
      emit(cfg, out);
      return kOk;
    }
  });
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& only) {
  using namespace acceptance;
  std::vector<CriterionResult> results;
  const std::string format = cfg.format == "auto" ? "table" : cfg.format;
  std::ostringstream table;
  auto record = [&](const CriterionResult& r) {
    results.push_back(r);
    if (format == "table" && cfg.output.empty()) {
      std::cout << format_result(r) << std::endl;
    } else {
      table << format_result(r) << "\n";
    }
  };
  if (only.empty()) {
    run_all(record);
  } else {
    for (const auto& id : only) record(run_criterion(id));
  }
  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.passed;
  if (format == "table") {
    const std::string summary = failed == 0 ? "all criteria passed\n" : std::to_string(failed) + " criteria failed\n";
    if (cfg.output.empty()) {
      std::cout << summary;
    } else {
      write_output(cfg, table.str() + summary);
    }
  } else if (format == "json") {
    Json out;
    Json rows = Json::array();
    for (const auto& r : results) {
      rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out["criteria"] = rows;
    out["passed"] = failed == 0;
    write_output(cfg, out.dump(2) + "\n");
  } else {
    throw UsageError("verify-paper supports table or json output");
  }
  return failed == 0 ? kOk : kFailure;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Square classes, even places and the even-place graph over global function fields", "evenpoint"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--q", cfg.q, "Field order (odd prime power)");
  app.add_option("--modulus", cfg.modulus, "Defining polynomial of F_q over F_p, coefficients low to high")
      ->delimiter(',');
  app.add_option("--model", cfg.model, "p1 or curve")->check(CLI::IsMember({"p1", "curve"}));
  app.add_option("--f", cfg.f, "Curve polynomial in x (selects the curve model y^2 = f)");
  app.add_option("--seed", cfg.seed, "Seed for randomized subroutines");
  app.add_option("--format", cfg.format, "auto, json, table, dot or csv")
      ->check(CLI::IsMember({"auto", "json", "table", "dot", "csv"}));
  app.add_option("--output", cfg.output, "Write the report to this file");

  std::function<int()> action;

  SymbolArgs sym;
  auto* symbols = app.add_subcommand("symbols", "Legendre and Hilbert symbols");
  symbols->require_subcommand(1);
  auto* legendre = symbols->add_subcommand("legendre", "Legendre symbol of a class at a place");
  legendre->add_option("--class", sym.cls)->required();
  legendre->add_option("--place", sym.place)->required();
  legendre->callback([&] { action = [&] { return cmd_legendre(cfg, sym); }; });
  auto* hilbert = symbols->add_subcommand("hilbert", "Hilbert symbol at a place, or the product over all places");
  hilbert->add_option("--a", sym.a)->required();
  hilbert->add_option("--b", sym.b)->required();
  hilbert->add_option("--place", sym.place);
  hilbert->callback([&] { action = [&] { return cmd_hilbert(cfg, sym); }; });
  auto* reciprocity = symbols->add_subcommand("reciprocity", "Quadratic reciprocity for two monic irreducibles");
  reciprocity->add_option("--f", sym.f)->required();
  reciprocity->add_option("--g", sym.g)->required();
  reciprocity->callback([&] { action = [&] { return cmd_reciprocity(cfg, sym); }; });

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "The graph of even places");
  graph->require_subcommand(1);
  auto* build = graph->add_subcommand("build", "Build and export the graph");
  build->add_option("--max-degree", graph_args.max_degree)->check(CLI::PositiveNumber);
  build->callback([&] { action = [&] { return cmd_graph_build(cfg, graph_args); }; });
  auto* diameter = graph->add_subcommand("diameter", "Common neighbours for every non-adjacent pair");
  diameter->add_option("--max-degree", graph_args.max_degree)->check(CLI::PositiveNumber);
  diameter->add_option("--search-degree", graph_args.search_degree)->check(CLI::PositiveNumber);
  diameter->callback([&] { action = [&] { return cmd_graph_diameter(cfg, graph_args); }; });
  auto* witness = graph->add_subcommand("witness", "A non-neighbour of an even place");
  witness->add_option("--place", graph_args.place)->required();
  witness->add_option("--common", graph_args.common, "Also list common neighbours with this place");
  witness->add_option("--search-degree", graph_args.search_degree)->check(CLI::PositiveNumber);
  witness->callback([&] { action = [&] { return cmd_graph_witness(cfg, graph_args); }; });

  SingArgs sing_args;
  auto* sing = app.add_subcommand("sing", "Classes with even valuation outside the removed places");
  sing->add_option("--remove", sing_args.remove, "Removed place (repeatable)");
  sing->add_option("--bound", sing_args.bound, "Scan bound (default: model choice)");
  sing->callback([&] { action = [&] { return cmd_sing(cfg, sing_args, false); }; });
  auto* delta = app.add_subcommand("delta", "Sing(X) classes that are squares at the removed places");
  delta->add_option("--remove", sing_args.remove, "Removed place (repeatable)")->required();
  delta->callback([&] { action = [&] { return cmd_sing(cfg, sing_args, true); }; });

  std::string place;
  auto* even_check = app.add_subcommand("even-check", "Evaluate the even-place criteria at a place");
  even_check->add_option("--place", place)->required();
  even_check->callback([&] { action = [&] { return cmd_even_check(cfg, place); }; });

  CompatArgs compat_args;
  auto* compat = app.add_subcommand("compat", "Compatible points for classes, or classes for points");
  compat->add_option("--class", compat_args.classes, "Class (repeatable; default: Sing(X) basis)");
  compat->add_option("--point", compat_args.points, "Point (repeatable); solves for compatible classes");
  compat->add_option("--search-bound", compat_args.search_bound)->check(CLI::PositiveNumber);
  compat->add_option("--skip", compat_args.skip, "Skip this many matches per class");
  compat->callback([&] { action = [&] { return cmd_compat(cfg, compat_args); }; });

  DensityArgs density_args;
  auto* density = app.add_subcommand("density", "Sign-pattern and even-place densities");
  density->require_subcommand(1);
  auto* hecke = density->add_subcommand("hecke", "Fraction of degree-d places with prescribed symbols");
  hecke->add_option("--class", density_args.classes, "Class (repeatable)");
  hecke->add_option("--sign", density_args.signs, "Sign per class, 1 or -1 (default all 1)");
  hecke->add_option("--degree", density_args.degree)->check(CLI::PositiveNumber);
  hecke->add_option("--sample", density_args.sample, "Sample size (default: exhaustive)");
  hecke->callback([&] { action = [&] { return cmd_density_hecke(cfg, density_args); }; });
  auto* even_density = density->add_subcommand("even", "Fraction of degree-d places that are even");
  even_density->add_option("--degree", density_args.degree)->check(CLI::PositiveNumber);
  even_density->callback([&] { action = [&] { return cmd_density_even(cfg, density_args); }; });

  std::string gst_class;
  int gst_bound = 6;
  auto* gst = app.add_subcommand("gst", "Check a class against the even places");
  gst->add_option("--class", gst_class)->required();
  gst->add_option("--degree-bound", gst_bound)->check(CLI::PositiveNumber);
  gst->callback([&] { action = [&] { return cmd_gst(cfg, gst_class, gst_bound); }; });

  int curve_degree = 3;
  auto* curve = app.add_subcommand("curve", "Hyperelliptic curve reports");
  curve->require_subcommand(1);
  auto* analyze = curve->add_subcommand("analyze", "Genus, places, Jacobian and Sing(X) of y^2 = f");
  analyze->add_option("--max-degree", curve_degree)->check(CLI::PositiveNumber);
  analyze->callback([&] { action = [&] { return cmd_curve_analyze(cfg, curve_degree); }; });

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite");
  verify->add_option("--criterion", only, "Run only these criteria (A1..A14)");
  verify->callback([&] { action = [&] { return cmd_verify(cfg, only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const BoundError& e) {
    std::cerr << "bound exhausted: " << e.what() << "\n";
    return kBound;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace evenpoint::cli
