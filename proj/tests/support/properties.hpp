#pragma once

// Seeded property suites shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

Result unimodality(std::uint64_t seed);           // p_w >= p_{w-1}, 2 <= w <= Nd/2
Result gaussian_symmetry(std::uint64_t seed);     // palindromy and coefficient sum
Result balanced_fill_post(std::uint64_t seed);    // 500 random instances
Result tuples_exhaustive();                       // wt bound, lexicographic max, P nonempty iff s <= beta - 1, v minimal
Result varpi_gaps(std::uint64_t seed);            // varpi(s) - varpi(s-1) >= 2 wp_1(s)
Result thm2_outputs();                            // every small construction is certified; N <= 7 nonzero
Result symm_eval_consistency(std::uint64_t seed); // symm_eval == eval(symmetrize_full), N <= 6
Result family_norms(std::uint64_t seed);          // ||M|| = 2w, r_1 formula and maximality

std::vector<Result> all(std::uint64_t seed);

}  // namespace props
