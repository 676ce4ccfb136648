// Benchmark: OpenMP family-sum kernel against the serial reference fold,
// plus a batch-level sweep of the rank-2 closed-form grid.

#include <cstdio>
#include <omp.h>

#include "ihpair/grassmann.hpp"
#include "ihpair/pairings.hpp"

using namespace ihpair;

namespace {

double family_sum_time(const PairingSpec& s, Target t, bool parallel, Rat* value) {
  QSpec Q = make_qspec(s.r);
  ScaledOrthoBasis ortho = orthonormal_basis(s.r);
  MPoly torus = torus_factor(Q, ortho, s.b, s.g, true);
  MPoly num = torus;
  for (const auto& [k, mk] : s.a)
    if (mk > 0) num = num * pow(tau_poly(k, s.r, s.r - 1), mk);
  if (t == Target::IH) num = num * pow(-xbar_poly(s.r, s.r, s.r - 1), s.r - 1);
  std::map<std::pair<int, int>, int> poles;
  for (int i = 1; i <= s.r; ++i)
    for (int j = i + 1; j <= s.r; ++j) poles[{i, j}] = 2 * s.g - 2;
  if (t != Target::M1)
    for (int i = 1; i < s.r; ++i) poles[{s.r, i}] += 1;
  WeightVector c = c_vector(s.r);
  MPoly extra = (t == Target::M1) ? directional(Q.q, c) : MPoly::zero(s.r, s.r - 1);
  auto input_for = [&](const RootBasis& B) {
    return IberInput{num, poles, weight_scale(lattice_reduce(c, B).first, Rat(-1)), extra};
  };
  EngineWindow W = default_window(t, s, 0);
  auto family = hamiltonian_family(s.r, s.r);

  double t0 = omp_get_wtime();
  MPoly sum = family_sum(Q, family, input_for, W, parallel, false);
  double dt = omp_get_wtime() - t0;
  std::vector<int> pattern(s.r - 1, 0);
  for (const auto& [k, nk] : s.f) pattern[k - 2] = nk;
  *value = delta_coeff_value(sum, pattern);
  return dt;
}

double rank2_grid_time(int g, bool parallel, Rat* checksum) {
  std::vector<std::tuple<int, int, int>> grid;
  for (int m = 0; 2 * m <= 3 * g - 3; ++m)
    for (int p = 0; 2 * m + 3 * p <= 3 * g - 3 && p <= g; ++p)
      grid.emplace_back(m, 3 * g - 3 - 2 * m - 3 * p, p);
  std::vector<Rat> vals(grid.size());
  EngineOptions opt;
  opt.cross_check = false;
  opt.parallel = false;  // parallelism at the grid level here
  double t0 = omp_get_wtime();
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
    auto [m, n, p] = grid[i];
    vals[i] = ih_rank2_with_gamma(g, m, n, p, opt);
  }
  double dt = omp_get_wtime() - t0;
  Rat sum(0);
  for (const auto& v : vals) sum += v;
  *checksum = sum;
  return dt;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  {
    PairingSpec s;
    s.r = 3;
    s.g = 2;
    s.f[2] = 2;
    s.f[3] = 3;
    Rat v_serial, v_parallel;
    double ts = family_sum_time(s, Target::IH, false, &v_serial);
    double tp = family_sum_time(s, Target::IH, true, &v_parallel);
    std::printf("family sum, ih r=3 g=2 f2^2 f3^3 (2 bases)\n");
    std::printf("  serial   %8.3fs  value %s\n", ts, rat_str(v_serial).c_str());
    std::printf("  openmp   %8.3fs  value %s  speedup %.2fx\n\n", tp,
                rat_str(v_parallel).c_str(), tp > 0 ? ts / tp : 0.0);
    if (v_serial != v_parallel) {
      std::printf("MISMATCH between serial and parallel values\n");
      return 1;
    }
  }

  {
    PairingSpec s;
    s.r = 4;
    s.g = 2;
    s.f[2] = 3;
    s.f[4] = 4;
    Rat v_serial, v_parallel;
    double ts = family_sum_time(s, Target::IH, false, &v_serial);
    double tp = family_sum_time(s, Target::IH, true, &v_parallel);
    std::printf("family sum, ih r=4 g=2 f2^3 f4^4 (6 bases)\n");
    std::printf("  serial   %8.3fs  value %s\n", ts, rat_str(v_serial).c_str());
    std::printf("  openmp   %8.3fs  value %s  speedup %.2fx\n\n", tp,
                rat_str(v_parallel).c_str(), tp > 0 ? ts / tp : 0.0);
    if (v_serial != v_parallel) {
      std::printf("MISMATCH between serial and parallel values\n");
      return 1;
    }
  }

  {
    Rat cs, cp;
    double ts = rank2_grid_time(4, false, &cs);
    double tp = rank2_grid_time(4, true, &cp);
    std::printf("rank-2 grid, g=4, all (m,n,p) with 2m+n+3p=9\n");
    std::printf("  serial   %8.3fs  checksum %s\n", ts, rat_str(cs).c_str());
    std::printf("  openmp   %8.3fs  checksum %s  speedup %.2fx\n", tp, rat_str(cp).c_str(),
                tp > 0 ? ts / tp : 0.0);
    if (cs != cp) {
      std::printf("MISMATCH between serial and parallel checksums\n");
      return 1;
    }
  }
  return 0;
}
