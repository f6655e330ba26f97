#include <benchmark/benchmark.h>

#include <numeric>

#include "sgcat/category.hpp"
#include "sgcat/functor.hpp"
#include "sgcat/greens.hpp"
#include "sgcat/invariants.hpp"

using namespace sgcat;

namespace {
  // The full transformation monoid on n points: a transposition, an n-cycle
  // and a rank n - 1 map generate it.
  Semigroup full_transformation_monoid(std::size_t n) {
    std::vector<Element> swap(n), cycle(n), merge(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::iota(merge.begin(), merge.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
    }
    merge[n - 1] = 0;
    return generate_from_transformations({make_transformation(swap),
                                          make_transformation(cycle),
                                          make_transformation(merge)})
        .semigroup;
  }

  void BM_Generate(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(full_transformation_monoid(state.range(0)));
    }
  }
  BENCHMARK(BM_Generate)->Arg(3)->Arg(4);

  void BM_Greens(benchmark::State& state) {
    Semigroup const S = full_transformation_monoid(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(greens_data(S));
    }
  }
  BENCHMARK(BM_Greens)->Arg(3)->Arg(4);

  void BM_Karoubi(benchmark::State& state) {
    Semigroup const S = full_transformation_monoid(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(build_karoubi(S));
    }
  }
  BENCHMARK(BM_Karoubi)->Arg(3);

  void BM_SchutzCat(benchmark::State& state) {
    Semigroup const S = full_transformation_monoid(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(build_schutzcat(S));
    }
  }
  BENCHMARK(BM_SchutzCat)->Arg(3);

  // T_3 is regular, so K(T_3) -> D(T_3) has an equivalence to find.
  void BM_KaroubiToSchutzEquivalence(benchmark::State& state) {
    Semigroup const S = full_transformation_monoid(3);
    auto const      K = share(build_karoubi(S));
    auto const      D = share(build_schutzcat(S));
    for (auto _ : state) {
      benchmark::DoNotOptimize(find_equivalence(K, D));
    }
  }
  BENCHMARK(BM_KaroubiToSchutzEquivalence);

  void BM_LabeledDClasses(benchmark::State& state) {
    Semigroup const S = full_transformation_monoid(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(labeled_dl(S));
    }
  }
  BENCHMARK(BM_LabeledDClasses)->Arg(3)->Arg(4);
}  // namespace
BENCHMARK_MAIN();
