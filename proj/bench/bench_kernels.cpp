// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "normcert/elements.hpp"
#include "normcert/galois.hpp"
#include "normcert/kernels.hpp"

using namespace normcert;

namespace {

std::vector<CyclotomicElement> random_sequence(const FieldPtr& f, std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::vector<CyclotomicElement> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c(f->degree());
    for (auto& v : c) v = coeff(gen);
    out.push_back(CyclotomicElement::from_coords(f, c));
  }
  return out;
}

kernels::ElementMatrix group_matrix(std::uint32_t level) {
  const auto g = GaloisGroup::build(level, GroupMode::real_quotient);
  const auto x = cos_plus_one_element(level);
  const auto& els = g.elements();
  kernels::ElementMatrix m(els.size());
  for (std::size_t i = 0; i < els.size(); ++i)
    for (auto e : els) m[i].push_back(x.galois_apply(g.law().multiply(els[i], e)));
  return m;
}

template <auto Convolve>
void BM_Convolve(benchmark::State& state) {
  const auto f = CyclotomicField::make(32);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_sequence(f, n, 1), b = random_sequence(f, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Convolve(a, b, n));
}

template <auto Determinant>
void BM_Determinant(benchmark::State& state) {
  const auto m = group_matrix(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Determinant(m));
}

template <auto Sums>
void BM_CharacterSums(benchmark::State& state) {
  const auto level = static_cast<std::uint32_t>(state.range(0));
  const auto g = GaloisGroup::build(level, GroupMode::full);
  const auto h = whole_group(g);
  const auto chars = characters(h);
  const auto f = CyclotomicField::make(static_cast<std::uint32_t>(std::lcm<std::uint64_t>(level, chars[0].modulus)));
  const auto conj = random_sequence(f, h.order(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Sums(conj, chars));
}

}  // namespace

BENCHMARK(BM_Convolve<kernels::serial::convolve>)->Name("convolve/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_Convolve<kernels::omp::convolve>)->Name("convolve/omp")->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_Determinant<kernels::serial::determinant>)->Name("determinant/serial")->Arg(23)->Arg(31);
BENCHMARK(BM_Determinant<kernels::omp::determinant>)->Name("determinant/omp")->Arg(23)->Arg(31)->UseRealTime();
BENCHMARK(BM_CharacterSums<kernels::serial::character_sums>)->Name("character_sums/serial")->Arg(19)->Arg(31);
BENCHMARK(BM_CharacterSums<kernels::omp::character_sums>)->Name("character_sums/omp")->Arg(19)->Arg(31)->UseRealTime();

BENCHMARK_MAIN();
