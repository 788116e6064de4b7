#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linkagelab {

struct CrosscheckItem {
  std::string name;
  bool agree = false;
  std::string engine;
  std::string oracle;
};

/// Engine and finite oracle on one random Artinian instance over F_2 or F_3.
struct CrosscheckReport {
  std::uint64_t seed = 0;
  std::string ring;
  std::string ideal_a;
  std::string ideal_b;
  std::vector<CrosscheckItem> items;

  bool agree() const;
};

/// Membership, equality, aR, colon, Ass and linkage verdicts on the instance
/// generated from `seed`.
CrosscheckReport oracle_crosscheck(std::uint64_t seed);

}  // namespace linkagelab
