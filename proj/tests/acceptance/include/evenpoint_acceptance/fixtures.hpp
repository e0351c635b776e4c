#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "evenpoint/finite_field.hpp"
#include "evenpoint/hyperelliptic.hpp"
#include "evenpoint/p1_model.hpp"
#include "evenpoint/poly_io.hpp"

namespace evenpoint::fixtures {

struct CurveFixture {
  std::uint64_t q;
  const char* f;
};

inline constexpr CurveFixture kElliptic{5, "x^3-x"};
// x(x-1)(x+1)(x^2+1): genus 2 with four rational branch points.
inline constexpr CurveFixture kQuintic{3, "x^5-x"};

inline constexpr std::array<CurveFixture, 5> kJacobianCurves{{
    kElliptic,
    kQuintic,
    {7, "x^3+x+1"},
    {5, "x^5+x+1"},
    {3, "x^7+2*x+1"},
}};

// Over F_5: f ~ g and g ~ h while f and h are not adjacent.
inline constexpr const char* kTripleF = "t^2+4*t+1";
inline constexpr const char* kTripleG = "t^2+2*t+3";
inline constexpr const char* kTripleH = "t^2+2";

inline constexpr std::uint64_t kSeed = 20240917;

inline std::unique_ptr<P1Model> line(std::uint64_t q) {
  return std::make_unique<P1Model>(FiniteField::of_order(q));
}

inline std::unique_ptr<Curve> curve(const CurveFixture& fixture) {
  auto field = FiniteField::of_order(fixture.q);
  const PolyRing ring(field, 'x');
  return std::make_unique<Curve>(field, parse_poly(ring, fixture.f));
}

inline std::string curve_label(const CurveFixture& fixture) {
  return std::string("y^2=") + fixture.f + "/F" + std::to_string(fixture.q);
}

}  // namespace evenpoint::fixtures
