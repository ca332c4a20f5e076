#include <numbers>

#include "doctest.h"
#include "rotkit/pauli.hpp"
#include "rotkit/verify.hpp"

using namespace rotkit;

TEST_CASE("rng streams are reproducible") {
  verify::Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  verify::Rng c(7), d(7);
  const UnitVec3 u = verify::random_unit_vec(c);
  const UnitVec3 v = verify::random_unit_vec(d);
  CHECK(u.x() == v.x());
  CHECK(u.y() == v.y());
  CHECK(u.z() == v.z());

  verify::Rng e(7), f(8);
  CHECK(e.next() != f.next());
}

TEST_CASE("derive_seed separates substreams") {
  CHECK(verify::derive_seed(42, 0) != verify::derive_seed(42, 1));
  CHECK(verify::derive_seed(42, 0) != verify::derive_seed(43, 0));
  CHECK(verify::derive_seed(42, 5) == verify::derive_seed(42, 5));
}

TEST_CASE("random_unit_vec: unit samples with vanishing mean") {
  verify::Rng rng(42);
  Vec3 sum(0, 0, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const UnitVec3 v = verify::random_unit_vec(rng);
    CHECK(std::abs(v.vec().norm() - 1.0) <= 1e-9);
    sum = sum + v.vec();
  }
  CHECK((1.0 / n) * sum.norm() <= 0.02);
}

TEST_CASE("random_su2: Haar samples sit on the 3-sphere with symmetric coordinates") {
  verify::Rng rng(42);
  double sum_ni = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Su2Op v = verify::random_su2(rng);
    CHECK(std::abs(std::norm(v.a()) + std::norm(v.b()) - 1.0) <= 1e-9);
    sum_ni += pauli_coords(v).n_i;
  }
  CHECK(std::abs(sum_ni / n) <= 0.02);
}

TEST_CASE("identity suite: structure at a single sample") {
  const verify::SuiteResult r = verify::run_identity_suite(1, 123, 1e-12);
  CHECK(r.reports.size() >= 13);
  for (const auto& nr : r.reports) {
    CHECK(nr.report.samples == 1);
    CHECK(nr.report.failures == 0);
  }
  CHECK(r.pass);
}

TEST_CASE("identity suite: full pass at the default tolerance") {
  const verify::SuiteResult r = verify::run_identity_suite(10000, 42, 1e-12);
  CHECK(r.pass);
  for (const auto& nr : r.reports) {
    CHECK_MESSAGE(nr.report.failures == 0, nr.name, " residual ", nr.report.max_residual);
    CHECK(nr.report.max_residual <= 1e-12);
  }
  CHECK(r.elapsed_s >= 0.0);
}

TEST_CASE("identity suite: an impossible tolerance trips failures as data") {
  const verify::SuiteResult r = verify::run_identity_suite(300, 42, 1e-300);
  CHECK_FALSE(r.pass);
  bool saw_nonzero_residual = false;
  bool saw_failures = false;
  for (const auto& nr : r.reports) {
    if (nr.report.max_residual > 0.0) saw_nonzero_residual = true;
    if (nr.report.failures > 0) saw_failures = true;
  }
  CHECK(saw_nonzero_residual);
  CHECK(saw_failures);
}

TEST_CASE("identity suite: residuals are deterministic for a fixed seed") {
  const verify::SuiteResult a = verify::run_identity_suite(500, 9, 1e-12);
  const verify::SuiteResult b = verify::run_identity_suite(500, 9, 1e-12);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].name == b.reports[i].name);
    CHECK(a.reports[i].report.max_residual == b.reports[i].report.max_residual);
  }
}

TEST_CASE("identity suite rejects a non-positive sample count") {
  CHECK_THROWS_AS(verify::run_identity_suite(0, 42, 1e-12), Error);
}
