#include <benchmark/benchmark.h>

#include <random>

#include "vanish/arith.hpp"
#include "vanish/construct.hpp"
#include "vanish/ideal.hpp"
#include "vanish/io.hpp"
#include "vanish/oracle.hpp"
#include "vanish/product.hpp"

using namespace vanish;

namespace {

Polynomial random_poly(const Integer& n, std::mt19937_64& rng, std::size_t deg) {
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i <= deg; ++i) coeffs.emplace_back(Integer(rng()) % n);
  return Polynomial::from_integers(RingDescriptor::integers_mod(n), coeffs);
}

void BM_Factorize(benchmark::State& state) {
  const Integer n = Integer("1000036000099") * 982451653;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::factorize(n));
  }
}
BENCHMARK(BM_Factorize);

void BM_Kempner(benchmark::State& state) {
  const Integer n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::kempner(n));
  }
}
BENCHMARK(BM_Kempner)->Arg(5040)->Arg(362880)->Arg(1000000007);

void BM_GeneratingSet(benchmark::State& state) {
  const Integer n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal::generating_set(n, ideal::BasisVariant::rising(), true));
  }
}
BENCHMARK(BM_GeneratingSet)->Arg(360)->Arg(5040);

void BM_DivmodMonic(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto num = random_poly(360, rng, 64);
  const auto div = ideal::basis_poly(8, ideal::BasisVariant::rising(), 360);
  for (auto _ : state) {
    benchmark::DoNotOptimize(divmod_monic(num, div));
  }
}
BENCHMARK(BM_DivmodMonic);

void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto f = random_poly(360, rng, 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal::normal_form(360, f));
  }
}
BENCHMARK(BM_NormalForm);

void BM_IsVanishing(benchmark::State& state) {
  const auto f = ideal::generator(360, 4, ideal::BasisVariant::rising()) *
                 ideal::basis_poly(12, ideal::BasisVariant::falling(), 360);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal::is_vanishing(360, f));
  }
}
BENCHMARK(BM_IsVanishing);

void BM_OracleEvalAll(benchmark::State& state) {
  const auto f = ideal::min_monic_vanishing(5040, ideal::BasisVariant::rising());
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::eval_all_zero(f));
  }
}
BENCHMARK(BM_OracleEvalAll);

void BM_BruteCount(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_count_functions(6, 2));
  }
}
BENCHMARK(BM_BruteCount);

void BM_CrtTransport(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const product::CrtSplit split(360360);
  const auto f = random_poly(360360, rng, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(split.from_product(split.to_product(f)));
  }
}
BENCHMARK(BM_CrtTransport);

void BM_ReduceGrouping(benchmark::State& state) {
  const auto ring = RingDescriptor::integers_mod(360);
  std::vector<RingElement> ys;
  std::vector<std::size_t> expand;
  for (const auto& f : arith::factorize(360).factors) {
    for (Integer e = 0; e < f.exponent; ++e) {
      expand.push_back(ys.size());
      ys.push_back(ring.embed(f.prime));
    }
  }
  const auto g = construct::general_vanishing(ring, ys, expand);
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct::reduce_grouping(g));
  }
}
BENCHMARK(BM_ReduceGrouping);

void BM_ParsePolynomial(benchmark::State& state) {
  const auto ring = RingDescriptor::integers_mod(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(io::parse_polynomial("(x-1)(x-2)(x-3)(x-2) + 6x^2 + 6x", ring));
  }
}
BENCHMARK(BM_ParsePolynomial);

}  // namespace

BENCHMARK_MAIN();
