// Benchmark: serial reference vs OpenMP-parallel paths for the two hot
// kernels (sparse polynomial products, certificate verification).

#include <chrono>
#include <iostream>
#include <random>

#include "pweyl/noether.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pweyl;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Poly random_poly(unsigned rank, unsigned nterms, unsigned maxdeg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> expo(0, maxdeg);
  std::vector<Poly::Term> terms;
  for (unsigned t = 0; t < nterms; ++t) {
    Monomial m;
    for (unsigned v = 0; v < 2 * rank; ++v) {
      m.e[v] = static_cast<std::uint16_t>(expo(rng));
      m.deg += m.e[v];
    }
    int c = coeff(rng);
    terms.push_back({m, Cyc(c == 0 ? 1 : c)});
  }
  return Poly::from_terms(rank, std::move(terms));
}

void bench_mul(unsigned nterms) {
  std::mt19937_64 rng(42);
  Poly a = random_poly(3, nterms, 12, rng);
  Poly b = random_poly(3, nterms, 12, rng);
  auto t0 = std::chrono::steady_clock::now();
  Poly r1 = mul_serial(a, b);
  double serial_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  Poly r2 = mul_parallel(a, b);
  double parallel_ms = ms_since(t0);
  std::cout << "poly mul  " << a.terms().size() << " x " << b.terms().size() << " terms -> "
            << r1.terms().size() << ": serial " << serial_ms << " ms, parallel " << parallel_ms
            << " ms, match=" << (r1 == r2 ? "yes" : "NO") << "\n";
}

void bench_construction(const std::string& spec) {
  VerifyOptions opts;
  opts.parallel = false;
  auto t0 = std::chrono::steady_clock::now();
  NoetherSolution sol = construct_for_spec(spec, opts);
  double serial_ms = ms_since(t0);

  opts.parallel = true;
  t0 = std::chrono::steady_clock::now();
  VerificationReport rep = verify_functions(sol.action, sol.xprime, sol.yprime, opts);
  double parallel_ms = ms_since(t0);

  std::cout << spec << ": construct+verify(serial) " << serial_ms << " ms, re-verify(parallel) "
            << parallel_ms << " ms, pass=" << (rep.all_pass() ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; parallel paths fall back to serial\n";
#endif
  bool heavy = argc > 1 && std::string(argv[1]) == "--heavy";
  bench_mul(400);
  bench_mul(1500);
  bench_construction("Sn(n=3)");
  bench_construction("Sn(n=4)");
  bench_construction("G(m=4,p=2,n=2)");
  bench_construction("wreath(Cyc(m=2),2)");
  if (heavy) bench_construction("wreath(BD(n=2),3)");
  return 0;
}
