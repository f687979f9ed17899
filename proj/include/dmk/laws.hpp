#pragma once

#include <cstdint>

#include "dmk/stdmodel.hpp"

namespace dmk {

struct LawReport {
  int trials = 0;
  int checks = 0;
  int regenerated = 0;  // configurations discarded (basis cap, degenerate data)
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && trials > 0; }
};

/// Seeded randomized law suite for two-term complexes: associativity and
/// identity of 1-composition, vertical and horizontal associativity of
/// 2-composition, identity 2-morphisms, and the interchange law. Equality
/// is entrywise mod the ring ideal.
LawReport vvect_laws(std::uint64_t seed, int trials);

/// Same laws for standard models and their 1- and 2-morphisms; equality is
/// the congruence (map differences in I_s^2, bundle and Lambda differences
/// in I_s).
LawReport std_laws(std::uint64_t seed, int trials);

}  // namespace dmk
