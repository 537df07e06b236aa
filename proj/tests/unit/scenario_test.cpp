#include <doctest.h>

#include <stdexcept>

#include <random>

#include "dcsf/scenario.hpp"
#include "support/builders.hpp"

using namespace dcsf;

TEST_SUITE("scenario") {
  TEST_CASE("paper-sized scenario has the requested counts") {
    const auto s = generate_scenario(500, 8, square_area(1000, 60, 120), {5000, 5000, 0}, 1);
    CHECK(s.n_users() == 500);
    CHECK(s.n_uavs() == 8);
    for (const auto& u : s.users) {
      CHECK(s.bounds.contains_ground(u.pos));
      CHECK(u.pos.z == 0.0);
    }
  }

  TEST_CASE("minimal scenario is deterministic") {
    const auto a = generate_scenario(1, 1, square_area(100, 10, 20), {0, 0, 0}, 9);
    const auto b = generate_scenario(1, 1, square_area(100, 10, 20), {0, 0, 0}, 9);
    REQUIRE(a.n_users() == 1);
    REQUIRE(a.n_uavs() == 1);
    CHECK(a.users[0].pos == b.users[0].pos);
    CHECK(a.uavs[0].initial_pos == b.uavs[0].initial_pos);
  }

  TEST_CASE("seeds change the layout and repeat exactly") {
    const auto b = square_area(1000, 60, 120);
    const auto s1 = generate_scenario(20, 3, b, {5000, 5000, 0}, 1);
    const auto s1b = generate_scenario(20, 3, b, {5000, 5000, 0}, 1);
    const auto s2 = generate_scenario(20, 3, b, {5000, 5000, 0}, 2);
    bool differs = false;
    for (std::size_t i = 0; i < 20; ++i) {
      CHECK(s1.users[i].pos == s1b.users[i].pos);
      differs = differs || !(s1.users[i].pos == s2.users[i].pos);
    }
    CHECK(differs);
  }

  TEST_CASE("launch grid sits on the western edge at the lowest altitude") {
    const auto b = square_area(1000, 60, 120);
    const auto g = launch_grid(b, 8);
    REQUIRE(g.size() == 8);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g[i].x == 0.0);
      CHECK(g[i].z == 60.0);
      CHECK(g[i].y == doctest::Approx(62.5 + 125.0 * i));
    }
  }

  TEST_CASE("invalid generation inputs are rejected") {
    CHECK_THROWS_AS(generate_scenario(0, 1, square_area(10, 1, 2), {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_scenario(1, 0, square_area(10, 1, 2), {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_scenario(1, 1, square_area(10, 2, 1), {}, 1), std::invalid_argument);
  }

  TEST_CASE("association picks the nearest UAV") {
    Scenario s;
    s.users.push_back({0, {0, 0, 0}, 0.1});
    s.bounds = square_area(1000, 0, 200);
    const std::vector<Position3> q{{10, 0, 100}, {500, 0, 100}};
    const auto a = associate_users(s, q);
    CHECK(a.uav_of_user[0] == 0);
    CHECK(a.users_of_uav[0].size() == 1);
    CHECK(a.users_of_uav[1].empty());
  }

  TEST_CASE("single UAV gets every user") {
    const auto s = testutil::small_scenario(30, 1, 4);
    const std::vector<Position3> q{{100, 100, 80}};
    const auto a = associate_users(s, q);
    CHECK(a.users_of_uav[0].size() == 30);
  }

  TEST_CASE("ties go to the lowest UAV index") {
    Scenario s;
    s.users.push_back({0, {0, 0, 0}, 0.1});
    const std::vector<Position3> q{{300, 0, 100}, {30, 40, 100}, {-30, -40, 100}};
    const auto a = associate_users(s, q);
    CHECK(a.uav_of_user[0] == 1);
  }

  TEST_CASE("association is a partition minimizing distance") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 500);
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = testutil::small_scenario(40, 5, 100 + trial);
      std::vector<Position3> q;
      for (int v = 0; v < 5; ++v) q.push_back({u(rng), u(rng), 60 + u(rng) / 10});
      const auto a = associate_users(s, q);
      std::size_t total = 0;
      for (const auto& g : a.users_of_uav) total += g.size();
      CHECK(total == s.n_users());
      for (std::size_t i = 0; i < s.n_users(); ++i) {
        for (std::size_t v = 0; v < q.size(); ++v) {
          CHECK(distance(s.users[i].pos, q[a.uav_of_user[i]]) <= distance(s.users[i].pos, q[v]));
        }
      }
    }
  }

  TEST_CASE("deployment validation") {
    auto s = testutil::small_scenario(5, 3, 1);
    SystemParams prm;
    std::vector<Position3> ok{{100, 100, 80}, {200, 100, 80}, {300, 100, 80}};
    CHECK(validate_deployment(s, ok, prm).empty());

    std::vector<Position3> same{{100, 100, 80}, {100, 100, 80}, {300, 100, 80}};
    const auto v1 = validate_deployment(s, same, prm);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].kind == DeploymentViolation::Kind::TooClose);
    CHECK(v1[0].first == 0);
    CHECK(v1[0].second == 1);

    std::vector<Position3> high{{100, 100, 80}, {200, 100, 121}, {300, 100, 80}};
    const auto v2 = validate_deployment(s, high, prm);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].kind == DeploymentViolation::Kind::OutOfBounds);
    CHECK(v2[0].first == 1);
    CHECK(v2[0].amount == doctest::Approx(1.0));
    CHECK(v2[0].message.find("UAV 1") != std::string::npos);
  }
}
