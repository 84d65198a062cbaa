#include <doctest.h>

#include <set>
#include <vector>

#include "sig/error.hpp"
#include "sig/rng.hpp"

TEST_CASE("generator sequence is fixed by the seed") {
  sig::Rng a(42);
  sig::Rng b(42);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next() == b.next());
  // 10000th output of a default-seeded mt19937_64 is fixed by the standard.
  sig::Rng standard(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = standard.next();
  CHECK(v == 9981545732273789042ull);
}

TEST_CASE("bounded draws stay in range and cover it") {
  sig::Rng rng(1);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.uniform_below(7);
    REQUIRE(v < 7);
    ++counts[v];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  CHECK_THROWS_AS(rng.uniform_below(0), sig::InvalidParameter);;
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("bernoulli extremes and exponential mean") {
  sig::Rng rng(2);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    REQUIRE(rng.bernoulli(1.0));
    REQUIRE_FALSE(rng.bernoulli(0.0));
    sum += rng.exponential(0.1);
  }
  CHECK(sum / 100000 == doctest::Approx(0.1).epsilon(0.02));
}

TEST_CASE("stream seeds differ across paths") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t a = 0; a < 10; ++a) {
    for (std::uint64_t k = 0; k < 100; ++k) seeds.insert(sig::derive_stream_seed(9, {a, 16, 128, k}));
  }
  CHECK(seeds.size() == 1000);
  CHECK(sig::derive_stream_seed(9, {1, 2}) == sig::derive_stream_seed(9, {1, 2}));
  CHECK(sig::derive_stream_seed(9, {1, 2}) != sig::derive_stream_seed(9, {2, 1}));
}
