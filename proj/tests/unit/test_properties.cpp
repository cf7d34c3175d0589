#include "doctest.h"
#include "properties.hpp"

namespace {
void expect(const props::Result& r) {
  INFO(r.name << ": " << r.failures << " failures in " << r.cases << " cases; first: " << r.first_failure);
  CHECK(r.cases > 0);
  CHECK(r.failures == 0);
}
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("unimodality") { expect(props::unimodality(1)); }
  TEST_CASE("gaussian binomial symmetry") { expect(props::gaussian_symmetry(1)); }
  TEST_CASE("balanced fill") { expect(props::balanced_fill_post(1)); }
  TEST_CASE("tuple lemmas") { expect(props::tuples_exhaustive()); }
  TEST_CASE("varpi gaps") { expect(props::varpi_gaps(1)); }
  TEST_CASE("small constructions") { expect(props::thm2_outputs()); }
  TEST_CASE("symm_eval consistency") { expect(props::symm_eval_consistency(1)); }
  TEST_CASE("family norms") { expect(props::family_norms(1)); }
}
