#include <benchmark/benchmark.h>

#include "evenpoint/hyperelliptic.hpp"
#include "evenpoint/p1_model.hpp"
#include "evenpoint/poly_io.hpp"

using namespace evenpoint;

namespace {

void BM_LegendreP1(benchmark::State& state) {
  const P1Model model(FiniteField::of_order(5));
  const int degree = static_cast<int>(state.range(0));
  const auto places = model.places_of_degree(degree);
  const auto c = model.parse_class("t^3+t+1");
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.legendre(c, places[i]));
    i = (i + 1) % places.size();
  }
}
BENCHMARK(BM_LegendreP1)->Arg(2)->Arg(4)->Arg(6);

void BM_LegendreCurve(benchmark::State& state) {
  const auto field = FiniteField::of_order(5);
  const PolyRing ring(field, 'x');
  const Curve curve(field, parse_poly(ring, "x^3-x"));
  const auto places = curve.places_of_degree(static_cast<int>(state.range(0)));
  const auto c = curve.parse_class("x+1");
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve.legendre(c, places[i]));
    i = (i + 1) % places.size();
  }
}
BENCHMARK(BM_LegendreCurve)->Arg(2)->Arg(4);

void BM_HilbertProduct(benchmark::State& state) {
  const P1Model model(FiniteField::of_order(5));
  const auto a = parse_rational(model.ring(), "t^3+2*t+1");
  const auto b = parse_rational(model.ring(), "(t^2+2)/(t+1)");
  for (auto _ : state) benchmark::DoNotOptimize(model.hilbert_product_check(a, b).product);
}
BENCHMARK(BM_HilbertProduct);

}  // namespace
