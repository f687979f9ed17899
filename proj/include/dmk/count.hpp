#pragma once

#include <cstdint>

#include "dmk/stdmodel.hpp"

namespace dmk {

struct NewtonParams {
  int max_iterations = 50;
  double tolerance = 1e-12;
  int grid_density = 32;       // seed points per axis
  double dedupe_radius = 1e-6;
  double min_jacobian_det = 1e-8;
  int max_resamples = 8;
};

/// Signed-count problem for a vdim-0 model: zeros are sought in an
/// axis-aligned compact box contained in the domain.
struct CountProblem {
  StdModel X;
  std::vector<std::pair<double, double>> box;  // n intervals
  std::vector<double> epsilons = {1e-2, 3e-3, 1e-3};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  NewtonParams newton;
};

struct ZeroRecord {
  std::vector<double> point;
  int sign = 0;  // sign of det of the perturbed section's Jacobian
};

struct Replica {
  std::uint64_t seed = 0;
  double epsilon = 0;
  int count = 0;
  std::vector<ZeroRecord> zeros;  // sorted by coordinates
};

struct CountReport {
  bool ok = false;
  int count = 0;
  std::string error;
  std::vector<Replica> replicas;
};

/// Perturbs the section by a seeded random constant, s~ = s - eps * u,
/// finds all transverse zeros in the box by grid seeding plus damped
/// Newton, and returns orient(X) times the signed sum. Every
/// (seed, epsilon) replica must report the same count.
CountReport virtual_count(const CountProblem& p);

/// vdim-0 intersection pairing: builds the fibre product of g: X -> R^p
/// and h: Y -> R^p and counts it in the supplied box.
CountReport intersection_number(const StdModel& X, const std::vector<Poly>& g,
                                const StdModel& Y, const std::vector<Poly>& h, int p,
                                const std::vector<std::pair<double, double>>& box,
                                const CountProblem& defaults = {StdModel(0, 0, {}), {}});

}  // namespace dmk
