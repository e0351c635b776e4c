#include <set>
#include <string>

#include "doctest.h"
#include "evenpoint/errors.hpp"
#include "evenpoint/p1_model.hpp"
#include "evenpoint/poly_io.hpp"
#include "evenpoint/squares_core.hpp"

using namespace evenpoint;

namespace {

struct Line {
  P1Model model;
  SquaresCore<P1Model> core;
  explicit Line(std::uint64_t q) : model(FiniteField::of_order(q)), core(model) {}
  PlaceP1 place(const char* text) const { return model.finite(parse_poly(model.ring(), text)); }
  SquareClassP1 cls(const char* text) const { return model.parse_class(text); }

  std::set<std::string> names(const SubgroupF2<P1Model>& group) const {
    std::set<std::string> out;
    for (const auto& c : subgroup_elements(model, group)) out.insert(model.class_name(c));
    return out;
  }
};

}  // namespace

TEST_CASE("Sing of the line and of punctured lines") {
  Line L(5);
  CHECK(L.names(L.core.sing_x()) == std::set<std::string>{"1", "2"});
  CHECK(L.core.sing_x().size() == 2);

  const auto punctured = L.core.sing({L.place("t^2+2")});
  CHECK(L.names(punctured.group) == std::set<std::string>{"1", "2", "t^2+2", "2*t^2+4"});
  CHECK(L.core.sing({L.place("t")}).group.dimension() == 1);
  for (std::uint64_t q : {3, 7, 9}) CHECK(Line(q).core.sing_x().dimension() == 1);
}

TEST_CASE("class names parse back") {
  Line L(5);
  for (const auto& c : subgroup_elements(L.model, L.core.sing({L.place("t^2+2")}).group)) {
    CHECK(L.model.parse_class(L.model.class_name(c)) == c);
  }
}

TEST_CASE("delta subgroups") {
  Line L(5);
  CHECK(L.names(L.core.delta({L.place("t^2+2")})) == std::set<std::string>{"1", "2"});
  CHECK(L.names(L.core.delta({L.place("t")})) == std::set<std::string>{"1"});
  CHECK(L.core.delta({L.place("t^2+2"), L.place("t^2+4*t+1")}).dimension() == 1);
}

TEST_CASE("even places") {
  Line L(5);
  CHECK(L.core.is_even(L.place("t^2+2")));
  CHECK_FALSE(L.core.is_even(L.place("t")));
  CHECK_FALSE(L.core.is_even(L.model.infinity()));
  for (int d = 1; d <= 4; ++d) {
    for (const auto& p : L.model.places_of_degree(d)) CHECK(L.core.is_even(p) == (d % 2 == 0));
  }

  const auto even = L.core.even_criteria(L.place("t^2+2"));
  CHECK(even.direct_two_divisible);
  CHECK(even.odd_class_exists);
  CHECK(even.delta_equals_sing);
  CHECK(even.pic_dimension_matches);
  CHECK(even.index_two);
  const auto odd = L.core.even_criteria(L.place("t+1"));
  CHECK_FALSE(odd.direct_two_divisible);
  CHECK_FALSE(odd.odd_class_exists);
  CHECK_FALSE(odd.delta_equals_sing);
  CHECK_FALSE(odd.pic_dimension_matches);
  CHECK_FALSE(odd.index_two);
}

TEST_CASE("pairing matrices") {
  Line L(5);
  const auto m = L.core.pairing_matrix({L.place("t")}, {L.model.zeta()});
  CHECK(m.signs == std::vector<std::vector<int>>{{-1}});
  CHECK(m.compatible);
  const auto n = L.core.pairing_matrix({L.place("t^2+2")}, {L.model.zeta()});
  CHECK(n.signs == std::vector<std::vector<int>>{{1}});
  CHECK_FALSE(n.compatible);
  CHECK(L.core.pairing_matrix({}, {}).compatible);
  CHECK_THROWS(L.core.pairing_matrix({L.place("t")}, {}));
}

TEST_CASE("compatible points and classes") {
  for (std::uint64_t q : {3, 5}) {
    Line L(q);
    CHECK(L.core.compatible_points({L.model.zeta()}, 3) == std::vector<PlaceP1>{L.place("t")});
  }
  Line L(5);
  CHECK(L.core.compatible_points({L.model.zeta()}, 3, 1) == std::vector<PlaceP1>{L.place("t+1")});
  CHECK_THROWS_AS(L.core.compatible_points({L.model.zeta(), L.cls("t^2+2")}, 1), BoundError);
  CHECK(L.core.compatible_classes({L.place("t")}) == std::vector<SquareClassP1>{L.model.zeta()});
  CHECK(L.core.compatible_classes({L.place("t+1")}) == std::vector<SquareClassP1>{L.model.zeta()});
  CHECK_THROWS_WITH_AS(L.core.compatible_classes({L.place("t^2+2")}), doctest::Contains("dependent"), MathError);
}

TEST_CASE("coordinates") {
  Line L(5);
  const std::vector<SquareClassP1> basis{L.model.zeta()};
  CHECK_FALSE(L.core.pic_coordinates(L.place("t^2+2"), basis).test(0));
  CHECK(L.core.pic_coordinates(L.place("t^3+t+1"), basis).test(0));
  CHECK(L.core.pic_coordinates(L.place("t"), basis).test(0));

  BitVector one(1), zero(1);
  one.set(0);
  CHECK(legendre_via_coords(one, one) == -1);
  CHECK(legendre_via_coords(zero, one) == 1);

  for (int d = 1; d <= 3; ++d) {
    for (const auto& p : L.model.places_of_degree(d)) {
      for (int mask = 0; mask < 2; ++mask) {
        BitVector coords(1);
        coords.set(0, mask);
        CHECK(legendre_via_coords(coords, L.core.pic_coordinates(p, basis)) ==
              L.model.legendre(L.core.combine(coords), p));
      }
    }
  }
}

TEST_CASE("congruent places have equal delta") {
  Line L(5);
  CHECK(L.core.congruent_points_delta_check(L.place("t"), L.place("t")));
  CHECK(L.core.congruent_points_delta_check(L.place("t^2+2"), L.place("t^2+3")));
  CHECK(L.core.congruent_points_delta_check(L.place("t"), L.place("t+1")));
  CHECK_THROWS_WITH_AS(L.core.congruent_points_delta_check(L.place("t"), L.place("t^2+2")),
                       doctest::Contains("precondition"), MathError);
}

TEST_CASE("GST verdicts") {
  Line L(5);
  const auto zeta = L.core.gst_check(L.model.zeta(), 6);
  CHECK(zeta.in_sing);
  CHECK(zeta.consistent);
  CHECK(zeta.places_checked == 10 + 150 + 2580);
  const auto t = L.core.gst_check(L.cls("t"), 6);
  CHECK_FALSE(t.in_sing);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->degree() == 2);
  CHECK(L.model.legendre(L.cls("t"), *t.witness) == -1);
  CHECK(L.core.gst_check(L.model.one(), 4).consistent);
}

TEST_CASE("density experiments") {
  Line L(5);
  const auto single = L.core.hecke_density({L.cls("t")}, {1}, 2);
  CHECK(single.total == 10);
  std::size_t squares = 0;
  for (const auto& pi : L.model.ring().monic_irreducibles(2)) {
    squares += L.model.legendre(L.cls("t"), L.model.finite(pi)) == 1;
  }
  CHECK(single.count == squares);
  CHECK(L.core.hecke_density({}, {}, 3).fraction == 1.0);
  CHECK_THROWS(L.core.hecke_density({L.cls("t")}, {}, 2));

  const auto sampled = L.core.hecke_density({L.cls("t")}, {1}, 4, 500, 7);
  CHECK(sampled.total == 500);
  CHECK(sampled.count == L.core.hecke_density({L.cls("t")}, {1}, 4, 500, 7).count);

  for (std::uint64_t q : {3, 5}) {
    Line M(q);
    for (int d = 1; d <= 4; ++d) CHECK(M.core.even_density(d).fraction == (d % 2 ? 0.0 : 1.0));
  }
}

TEST_CASE("expected dimensions") {
  Line L(5);
  CHECK(L.core.expected_sing_dimension({}) == 1);
  CHECK(L.core.expected_sing_dimension({L.place("t^2+2")}) == 2);
  CHECK(L.core.expected_sing_dimension({L.place("t")}) == 1);
  CHECK(L.core.expected_sing_dimension({L.place("t"), L.place("t+1")}) == 2);
  CHECK(L.core.sing({L.place("t"), L.place("t+1")}).group.dimension() == 2);
}
