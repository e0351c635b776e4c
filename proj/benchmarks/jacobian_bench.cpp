#include <benchmark/benchmark.h>

#include "evenpoint/hyperelliptic.hpp"
#include "evenpoint/poly_io.hpp"

using namespace evenpoint;

namespace {

const char* const kCurves[] = {"x^3-x", "x^5+x+1", "x^7+2*x+1"};
const std::uint64_t kOrders[] = {5, 5, 3};

void BM_JacobianTable(benchmark::State& state) {
  const auto i = static_cast<std::size_t>(state.range(0));
  const auto field = FiniteField::of_order(kOrders[i]);
  const PolyRing ring(field, 'x');
  const Poly f = parse_poly(ring, kCurves[i]);
  state.SetLabel(std::string(kCurves[i]) + "/F" + std::to_string(kOrders[i]));
  for (auto _ : state) {
    const Curve curve(field, f);
    benchmark::DoNotOptimize(curve.jacobian().order());
  }
}
BENCHMARK(BM_JacobianTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CantorAdd(benchmark::State& state) {
  const auto field = FiniteField::of_order(5);
  const PolyRing ring(field, 'x');
  const Curve curve(field, parse_poly(ring, "x^5+x+1"));
  const auto& table = curve.jacobian();
  const auto n = table.order();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = table.elements()[i % n];
    const auto& b = table.elements()[(i * 7 + 3) % n];
    benchmark::DoNotOptimize(curve.cantor_add(a, b));
    ++i;
  }
}
BENCHMARK(BM_CantorAdd);

}  // namespace
