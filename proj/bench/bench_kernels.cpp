// Serial vs OpenMP timings for the hot kernels.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "eomq/kernels.hpp"
#include "eomq/special_functions.hpp"

using namespace eomq;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  f();  // warm up
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %10.4f ms   parallel %10.4f ms   speedup %5.2fx\n", name, serial * 1e3, parallel * 1e3,
              serial / parallel);
}

CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 0.3);
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = d(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = {d(rng), d(rng)};
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", kernels::max_threads());
  std::mt19937_64 rng(11);

  for (std::size_t n : {64u, 128u, 256u}) {
    const CMatrix a = random_hermitian(n, rng);
    const CMatrix b = random_hermitian(n, rng);
    const int reps = n <= 128 ? 20 : 4;
    char name[64];
    std::snprintf(name, sizeof name, "matmul n=%zu", n);
    report(name, seconds([&] { kernels::matmul(a, b, Exec::serial); }, reps),
           seconds([&] { kernels::matmul(a, b, Exec::parallel); }, reps));
  }

  for (std::size_t n : {100u, 240u}) {
    const HermitianGenerator g(random_hermitian(n, rng));
    char name[64];
    std::snprintf(name, sizeof name, "unitary_exp n=%zu", n);
    report(name, seconds([&] { unitary_exp(g, Exec::serial); }, 2), seconds([&] { unitary_exp(g, Exec::parallel); }, 2));
  }

  std::vector<double> omega, times;
  std::vector<cplx> phasor;
  for (int k = 0; k < 60; ++k) {
    omega.push_back(90.0 + 3.0 * k);
    phasor.emplace_back(0.01 * k, -0.02 * k);
  }
  for (int i = 0; i < 200000; ++i) times.push_back(1e-4 * i);
  report("sample_phasors 60x200k", seconds([&] { kernels::sample_phasors(omega, phasor, times, Exec::serial); }, 3),
         seconds([&] { kernels::sample_phasors(omega, phasor, times, Exec::parallel); }, 3));
  return 0;
}
