#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "dcsf/channel.hpp"
#include "support/builders.hpp"
#include "support/reference_model.hpp"

using namespace dcsf;

namespace {

Scenario one_link(double user_power = 0.1) {
  Scenario s;
  s.users.push_back({0, {0, 0, 0}, user_power});
  s.uavs.push_back({0, {0, 0, 100}, {0, 0, 100}, 0.1});
  s.bounds = square_area(1000, 50, 150);
  s.bs_pos = {5000, 5000, 0};
  return s;
}

}  // namespace

TEST_SUITE("channel") {
  TEST_CASE("LoS probability at reference elevations") {
    CHECK(los_probability({100, 100}, 9.61, 0.16) == doctest::Approx(0.99998).epsilon(1e-5));
    const double h = std::sin(9.61 * kPi / 180.0) * 100.0;
    CHECK(los_probability({100, h}, 9.61, 0.16) == doctest::Approx(1.0 / 10.61).epsilon(1e-9));
    CHECK(los_probability({100, 0}, 9.61, 0.16) ==
          doctest::Approx(1.0 / (1.0 + 9.61 * std::exp(0.16 * 9.61))).epsilon(1e-12));
    CHECK(los_probability({100, 0}, 9.61, 0.16) == doctest::Approx(0.0219).epsilon(1e-2));
  }

  TEST_CASE("LoS probability matches the oracle and stays in (0, 1)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const double d = 1.0 + 2000.0 * u(rng);
      const double h = d * u(rng);
      const double p = los_probability({d, h}, 9.61, 0.16);
      CHECK(p > 0.0);
      CHECK(p < 1.0);
      CHECK(p == doctest::Approx(ref::los(d, h, 9.61, 0.16)).epsilon(1e-12));
    }
  }

  TEST_CASE("path loss at 100 m overhead") {
    SystemParams prm;
    CHECK(free_space_path_loss_db(100, prm.carrier_hz()) == doctest::Approx(80.05).epsilon(1e-4));
    const double l = average_path_loss_db({100, 100}, prm);
    CHECK(std::abs(l - 81.7) < 0.1);
    CHECK(l == doctest::Approx(ref::path_loss({0, 0, 0}, {0, 0, 100}, prm)).epsilon(1e-12));
  }

  TEST_CASE("zero excess losses give pure FSPL") {
    SystemParams prm;
    prm.mu_los_db = prm.mu_nlos_db = 0.0;
    for (double h : {0.0, 20.0, 70.0, 100.0}) {
      CHECK(average_path_loss_db({100, h}, prm) ==
            doctest::Approx(free_space_path_loss_db(100, prm.carrier_hz())).epsilon(1e-12));
    }
  }

  TEST_CASE("doubling distance adds 20 log10 2 to FSPL") {
    SystemParams prm;
    const double f = prm.carrier_hz();
    for (double d : {1.0, 37.0, 100.0, 4000.0}) {
      CHECK(free_space_path_loss_db(2 * d, f) - free_space_path_loss_db(d, f) ==
            doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
    }
  }

  TEST_CASE("path loss increases with distance at fixed elevation") {
    SystemParams prm;
    for (double ratio : {0.05, 0.3, 0.7, 1.0}) {
      double prev = -1e9;
      for (double d = 10; d < 5000; d *= 1.3) {
        const double l = average_path_loss_db({d, ratio * d}, prm);
        CHECK(l > prev);
        prev = l;
      }
    }
  }

  TEST_CASE("single-user SINR and rate") {
    SystemParams prm;
    const auto s = one_link();
    const std::vector<std::size_t> cohort{0};
    const double sinr = sinr_user_uav(s, 0, {0, 0, 100}, cohort, prm);
    CHECK(sinr == doctest::Approx(8.6e4).epsilon(0.01));
    CHECK(10 * std::log10(sinr) == doctest::Approx(49.3).epsilon(1e-3));
    CHECK(user_rate(sinr, 2e6) == doctest::Approx(3.28e7).epsilon(1e-3));
  }

  TEST_CASE("co-located identical users interfere") {
    SystemParams prm;
    auto s = one_link();
    s.users.push_back({1, {0, 0, 0}, 0.1});
    const std::vector<std::size_t> cohort{0, 1};
    const double sinr = sinr_user_uav(s, 0, {0, 0, 100}, cohort, prm);
    CHECK(sinr < 1.0);
    const double rx = 0.1 * std::pow(10.0, -ref::path_loss({0, 0, 0}, {0, 0, 100}, prm) / 10.0);
    CHECK(sinr == doctest::Approx(rx / (rx + ref::noise_w(prm))).epsilon(1e-12));
  }

  TEST_CASE("vanishing user power drives SINR to zero") {
    SystemParams prm;
    const std::vector<std::size_t> cohort{0};
    double prev = 1e300;
    for (double p : {1e-1, 1e-4, 1e-8, 1e-12, 1e-20}) {
      const double sinr = sinr_user_uav(one_link(p), 0, {0, 0, 100}, cohort, prm);
      CHECK(sinr < prev);
      prev = sinr;
    }
    CHECK(prev < 1e-10);
  }

  TEST_CASE("user rate basics") {
    CHECK(user_rate(0.0, 2e6) == 0.0);
    CHECK(user_rate(1.0, 2e6) == doctest::Approx(2e6));
    double prev = -1;
    for (double g = 0; g < 1e6; g = g * 2 + 1) {
      CHECK(user_rate(g, 2e6) > prev);
      prev = user_rate(g, 2e6);
    }
  }

  TEST_CASE("f1 for one link equals that link's rate") {
    SystemParams prm;
    const auto s = one_link();
    const std::vector<Position3> q{{0, 0, 100}};
    const std::vector<std::size_t> cohort{0};
    CHECK(sum_user_rate(s, q, prm) ==
          doctest::Approx(user_rate(sinr_user_uav(s, 0, q[0], cohort, prm), prm.bandwidth_hz))
              .epsilon(1e-12));
  }

  TEST_CASE("f1 matches the oracle on random instances") {
    SystemParams prm;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const auto s = testutil::small_scenario(25, 4, 50 + trial);
      const auto ind = testutil::random_individual(s, prm, rng);
      CHECK(testutil::rel_err(sum_user_rate(s, ind.positions, prm),
                              ref::f1(s, ind.positions, prm)) < 1e-9);
    }
  }

  TEST_CASE("removing a user weakly helps the rest of its cohort") {
    SystemParams prm;
    auto s = testutil::small_scenario(5, 2, 8);
    const std::vector<Position3> q{{100, 250, 80}, {400, 250, 80}};
    const auto a = associate_users(s, q);
    for (std::size_t gone = 0; gone < 5; ++gone) {
      const std::size_t host = a.uav_of_user[gone];
      std::vector<std::size_t> full = a.users_of_uav[host];
      std::vector<std::size_t> reduced;
      for (std::size_t u : full) {
        if (u != gone) reduced.push_back(u);
      }
      for (std::size_t u : reduced) {
        CHECK(sinr_user_uav(s, u, q[host], reduced, prm) >=
              sinr_user_uav(s, u, q[host], full, prm));
      }
    }
  }
}
