#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <random>

#include "dcsf/beamforming.hpp"
#include "dcsf/semantic.hpp"
#include "dcsf/similarity.hpp"
#include "support/builders.hpp"
#include "support/reference_model.hpp"

using namespace dcsf;

TEST_SUITE("semantic") {
  TEST_CASE("default table endpoints") {
    const auto m = SimilarityModel::default_table();
    REQUIRE(m.table().size() == 20);
    CHECK(m.table().front().floor == doctest::Approx(0.1));
    CHECK(m.table().back().floor == doctest::Approx(0.38));
    CHECK(m.table().front().midpoint_db == doctest::Approx(12.0));
    CHECK(m.table().back().midpoint_db == doctest::Approx(-4.0));
    CHECK(m.table().front().slope == doctest::Approx(0.35));
  }

  TEST_CASE("similarity saturates at high SNR") {
    const auto m = SimilarityModel::default_table();
    for (int k = 1; k <= 20; ++k) {
      CHECK(m.similarity(k, 1e12) == doctest::Approx(1.0).epsilon(1e-6));
      CHECK(m.similarity_db(k, std::numeric_limits<double>::infinity()) == 1.0);
    }
  }

  TEST_CASE("similarity at the midpoint") {
    const auto m = SimilarityModel::default_table();
    for (int k = 1; k <= 20; ++k) {
      const auto r = m.row(k);
      CHECK(m.similarity_db(k, r.midpoint_db) ==
            doctest::Approx(r.floor + (1 - r.floor) / 2).epsilon(1e-14));
    }
  }

  TEST_CASE("similarity is monotone in SNR and in k") {
    const auto m = SimilarityModel::default_table();
    CHECK(m.similarity_db(20, 0.0) >= m.similarity_db(1, 0.0));
    for (double db = -30; db <= 40; db += 0.5) {
      for (int k = 1; k < 20; ++k) {
        CHECK(m.similarity_db(k + 1, db) >= m.similarity_db(k, db));
        CHECK(m.similarity_db(k, db + 0.5) >= m.similarity_db(k, db));
        const double v = m.similarity_db(k, db);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }

  TEST_CASE("similarity matches the oracle including interpolation") {
    SystemParams prm;
    prm.similarity = SimilarityModel({{1, 0.1, 10, 0.3}, {5, 0.2, 4, 0.4}, {20, 0.5, -2, 0.35}});
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3, 6);
    for (int i = 0; i < 500; ++i) {
      const int k = 1 + i % 20;
      const double snr = std::pow(10.0, u(rng));
      CHECK(prm.similarity.similarity(k, snr) ==
            doctest::Approx(ref::xi(prm, k, snr)).epsilon(1e-12));
    }
  }

  TEST_CASE("zero SNR gives the floor and negative SNR is rejected") {
    const auto m = SimilarityModel::default_table();
    CHECK(m.similarity(1, 0.0) == doctest::Approx(0.1));
    CHECK_THROWS_AS(m.similarity(1, -1.0), std::domain_error);
  }

  TEST_CASE("table validation") {
    CHECK_THROWS_AS(SimilarityModel({}), std::invalid_argument);
    CHECK_THROWS_AS(SimilarityModel({{1, 0.1, 5, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimilarityModel({{1, 1.5, 5, 0.3}}), std::invalid_argument);
    CHECK_THROWS_AS(SimilarityModel({{1, 0.3, 5, 0.3}, {2, 0.2, 4, 0.3}}), std::invalid_argument);
    CHECK_THROWS_AS(SimilarityModel({{1, 0.1, 5, 0.3}, {2, 0.2, 6, 0.3}}), std::invalid_argument);
    CHECK_THROWS_AS(SimilarityModel({{1, 0.1, 5, 0.3}, {1, 0.2, 4, 0.3}}), std::invalid_argument);
    CHECK_NOTHROW(SimilarityModel({{2, 0.2, 4, 0.3}, {1, 0.1, 5, 0.3}}));
  }

  TEST_CASE("semantic rate arithmetic") {
    SystemParams prm;
    // A flat table pins xi at 0.9 for every SNR.
    const SimilarityModel flat({{1, 0.9, 0, 1.0}, {20, 0.9, 0, 1.0}});
    const double low_snr = 0.0;
    CHECK(semantic_rate(flat, 4, low_snr, prm) == doctest::Approx(9e5));
    const SimilarityModel zero({{1, 0.0, 0, 1.0}, {20, 0.0, 0, 1.0}});
    CHECK(semantic_rate(zero, 4, 0.0, prm) == 0.0);
    const auto m = SimilarityModel::default_table();
    CHECK(semantic_rate(m, 2, 1e12, prm) / semantic_rate(m, 4, 1e12, prm) ==
          doctest::Approx(2.0).epsilon(1e-6));
    double prev = 1e300;
    for (int k = 1; k <= 20; ++k) {
      const double sr = semantic_rate(m, k, 1e12, prm);
      CHECK(sr < prev);
      prev = sr;
    }
    CHECK_THROWS_AS(semantic_rate(m, 0, 1.0, prm), std::domain_error);
  }

  TEST_CASE("f2 of a singleton equals that link's semantic rate") {
    SystemParams prm;
    const auto s = testutil::small_scenario(4, 1, 2);
    Individual ind;
    ind.assignment = ClusterAssignment::singletons(1);
    ind.positions = {{100, 100, 80}};
    ind.weights = {0.5};
    ind.symbols = {3};
    const std::vector<std::size_t> m{0};
    const double snr = cluster_snr(s, m, ind.positions, ind.weights, prm);
    CHECK(sum_semantic_rate(s, ind, prm) ==
          doctest::Approx(semantic_rate(prm.similarity, 3, snr, prm)).epsilon(1e-14));
  }

  TEST_CASE("f2 matches the oracle, including after merges") {
    SystemParams prm;
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const auto s = testutil::small_scenario(3, 5, 70 + trial);
      auto ind = testutil::random_individual(s, prm, rng);
      CHECK(testutil::rel_err(sum_semantic_rate(s, ind, prm), ref::f2(s, ind, prm)) < 1e-9);
      if (ind.assignment.n_clusters() >= 2) {
        ind.assignment.merge(1, 2);
        ind.symbols.erase(ind.symbols.begin() + 1);
        CHECK(testutil::rel_err(sum_semantic_rate(s, ind, prm), ref::f2(s, ind, prm)) < 1e-9);
      }
    }
  }

  TEST_CASE("symbol vector must match the cluster count") {
    SystemParams prm;
    const auto s = testutil::small_scenario(4, 2, 2);
    Individual ind;
    ind.assignment = ClusterAssignment::singletons(2);
    ind.positions = {{100, 100, 80}, {200, 100, 80}};
    ind.weights = {0.5, 0.5};
    ind.symbols = {3};
    CHECK_THROWS_AS(sum_semantic_rate(s, ind, prm), std::invalid_argument);
  }
}
