#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "steinberg/kclass.hpp"

#include <random>

using namespace steinberg;

TEST_CASE("euler form values") {
  CHECK(euler_form({1, 0}, {1, 0}) == 1);
  CHECK(euler_form({0, 1}, {0, 1}) == 0);
  CHECK(euler_form({2, -1}, {1, 3}) == 9);
}

TEST_CASE("stack dimension") {
  CHECK(stack_dim({1, 5}) == -1);
  CHECK(stack_dim({0, 7}) == 0);
  CHECK(stack_dim({3, -2}) == -9);
  CHECK_THROWS_AS((stack_dim({0, 0})), DomainError);
  CHECK_THROWS_AS((stack_dim({-1, 4})), DomainError);
  CHECK_THROWS_AS((stack_dim({0, -2})), DomainError);
}

TEST_CASE("slope comparison") {
  CHECK(slope_cmp(KClass{1, 2}, KClass{2, 4}) == std::strong_ordering::equal);
  CHECK(slope_cmp(KClass{1, -1}, KClass{0, 3}) == std::strong_ordering::less);
  CHECK(slope_cmp(KClass{3, 1}, KClass{2, 1}) == std::strong_ordering::less);
  CHECK(slope_cmp(KClass{0, 1}, KClass{0, 5}) == std::strong_ordering::equal);
  CHECK_THROWS_AS((slope_cmp(KClass{0, 0}, KClass{1, 0})), DomainError);
}

TEST_CASE("heart positivity") {
  CHECK_FALSE(heart_positive({0, 0}, Heart::half()));
  CHECK(heart_positive({-1, 1}, Heart::nu(1)));
  CHECK_FALSE(heart_positive({-1, 1}, Heart::half()));
  CHECK(heart_positive({0, 1}, Heart::half()));
  CHECK_FALSE(heart_positive({0, -1}, Heart::half()));
  CHECK_FALSE(heart_positive({0, 0}, Heart::nu(3)));
  CHECK(heart_positive({1, -2}, Heart::nu(3)));
  CHECK_FALSE(heart_positive({1, -2}, Heart::nu(2)));
}

TEST_CASE("hearts parse and print") {
  CHECK(to_string(Heart::half()) == "half");
  CHECK(to_string(Heart::nu(4)) == "nu:4");
  CHECK(parse_heart("nu:7") == Heart::nu(7));
  CHECK(parse_heart("half") == Heart::half());
  CHECK_THROWS_AS((parse_heart("nu:0")), DomainError);
  CHECK_THROWS_AS((parse_heart("nu:2x")), DomainError);
  CHECK_THROWS_AS((parse_heart("third")), DomainError);
  CHECK_THROWS_AS((Heart::nu(0)), DomainError);
  CHECK_THROWS_AS((Window(0)), DomainError);
}

TEST_CASE("tilt, d-vectors, twists") {
  CHECK(tilt_class({1, 0}) == KClass{1, 0});
  CHECK(tilt_class({1, 1}) == KClass{2, 1});
  CHECK(tilt_class({0, 1}) == KClass{1, 1});
  CHECK(d_vec(1, {1, 0}) == QuiverDim{1, 0});
  CHECK(d_vec(2, {1, 0}) == QuiverDim{2, 1});
  for (int n = 1; n <= 9; ++n) CHECK(d_vec(n, {0, 1}) == QuiverDim{1, 1});
  CHECK(twist_class({1, 0}, 3) == KClass{1, 3});
  CHECK(twist_class({0, 5}, -2) == KClass{0, 5});
  CHECK(twist_class({2, 1}, -1) == KClass{2, -1});
}

TEST_CASE("window membership") {
  CHECK(window_member(Slope{0, 1}, Window(1)));
  CHECK_FALSE(window_member(Slope{-1, 1}, Window(1)));
  CHECK(window_member(Slope::infinity(), Window(1)));
  CHECK(window_member(Slope{-1, 1}, Window(2)));
  CHECK_FALSE(window_member(Slope{-3, 2}, Window(2)));
  CHECK(window_member(slope_of({2, -2}), Window(2)));
}

TEST_CASE("properties on random classes") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> v(-30, 30);
  auto cls = [&] { return KClass{v(rng), v(rng)}; };
  for (int k = 0; k < 10000; ++k) {
    const KClass a = cls(), b = cls(), c = cls();
    const int s = v(rng);
    // bilinearity
    REQUIRE(euler_form(a + b, c) == euler_form(a, c) + euler_form(b, c));
    REQUIRE(euler_form(a, b + c) == euler_form(a, b) + euler_form(a, c));
    REQUIRE(euler_form(s * a, b) == s * euler_form(a, b));
    REQUIRE(euler_form(a, b) == oracle::euler(a, b));
    REQUIRE(untilt_class(tilt_class(a)) == a);
    REQUIRE(tilt_class(untilt_class(a)) == a);
    const int n = 1 + (k % 12);
    REQUIRE(d_vec(n, a + b) == d_vec(n, a) + d_vec(n, b));
    REQUIRE(from_d_vec(n, d_vec(n, a)) == a);
    REQUIRE(d_vec(1, a).v1 == tilt_class(a).r);
    REQUIRE(d_vec(1, a).v2 == tilt_class(a).d);
    if (heart_positive(a, Heart::half())) REQUIRE(stack_dim(a) == -euler_form(a, a));
    // positive in every heart from some point on forces rank >= 0
    bool late = true;
    for (int m = 40; m <= 45; ++m) late = late && heart_positive(a, Heart::nu(m));
    if (late) REQUIRE(a.r >= 0);
  }
}

TEST_CASE("slope comparison is a total preorder with torsion on top") {
  std::vector<KClass> cs;
  for (int r = 0; r <= 4; ++r)
    for (int d = -6; d <= 6; ++d)
      if (heart_positive({r, d}, Heart::half())) cs.push_back({r, d});
  for (const auto& a : cs)
    for (const auto& b : cs) {
      const auto ab = slope_cmp(a, b), ba = slope_cmp(b, a);
      CHECK((ab < 0) == (ba > 0));
      if (b.r == 0) CHECK(ab <= 0);
      for (const auto& c : cs)
        if (ab <= 0 && slope_cmp(b, c) <= 0) CHECK(slope_cmp(a, c) <= 0);
    }
}
