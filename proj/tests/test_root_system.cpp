#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kflag/root_system.hpp"

using kflag::CartanMatrix;
using kflag::RootSystem;
using kflag::Weight;

namespace {
Weight wt(std::vector<std::int64_t> c) { return Weight(std::move(c)); }
}  // namespace

TEST_CASE("generalized Cartan matrix axioms are enforced with entry names") {
  CartanMatrix bad_diag{{{1}}};
  CHECK_THROWS_WITH_AS(bad_diag.validate(), doctest::Contains("(1,1)"), kflag::validation_error);

  CartanMatrix positive_off{{{2, 1}, {1, 2}}};
  CHECK_THROWS_WITH_AS(positive_off.validate(), doctest::Contains("(1,2)"),
                       kflag::validation_error);

  CartanMatrix asymmetric_zero{{{2, -1}, {0, 2}}};
  CHECK_THROWS_WITH_AS(asymmetric_zero.validate(), doctest::Contains("vanish together"),
                       kflag::validation_error);

  CartanMatrix ragged{{{2, -1, 0}, {-1, 2}}};
  CHECK_THROWS_AS(ragged.validate(), kflag::validation_error);

  CHECK_NOTHROW(CartanMatrix::of_type("A2").validate());
}

TEST_CASE("named types and products") {
  CHECK(CartanMatrix::of_type("A1").entries == std::vector<std::vector<std::int64_t>>{{2}});
  CHECK(CartanMatrix::of_type("G2").entries ==
        std::vector<std::vector<std::int64_t>>{{2, -1}, {-3, 2}});
  CHECK(CartanMatrix::of_type("B2").entries ==
        std::vector<std::vector<std::int64_t>>{{2, -1}, {-2, 2}});
  CHECK(CartanMatrix::of_type("A1xA1").entries ==
        std::vector<std::vector<std::int64_t>>{{2, 0}, {0, 2}});
  CHECK(CartanMatrix::of_type("A2xA1").rank() == 3);
  CHECK_THROWS_AS(CartanMatrix::of_type("A0"), kflag::validation_error);
  CHECK_THROWS_AS(CartanMatrix::of_type("Z9"), kflag::validation_error);
  CHECK_THROWS_AS(CartanMatrix::of_type("A"), kflag::validation_error);
  CHECK_THROWS_AS(CartanMatrix::of_type("A2x"), kflag::validation_error);
}

TEST_CASE("finite type detection") {
  CHECK(RootSystem("A1").finite_type());
  CHECK(RootSystem("G2").finite_type());
  CHECK(RootSystem("F4").finite_type());
  CHECK(RootSystem("E8").finite_type());

  RootSystem affine(CartanMatrix{{{2, -2}, {-2, 2}}});
  CHECK_FALSE(affine.finite_type());
  CHECK_THROWS_AS(affine.positive_roots(), kflag::unsupported_error);
  CHECK_THROWS_AS(affine.to_root_coords(affine.rho()), kflag::unsupported_error);

  RootSystem indefinite(CartanMatrix{{{2, -3}, {-3, 2}}});
  CHECK_FALSE(indefinite.finite_type());

  // Words and reflections still work without finite type.
  CHECK(affine.reflect(1, affine.simple_root(1)) == -affine.simple_root(1));
}

TEST_CASE("positive roots of A2 sorted by height then lexicographic") {
  RootSystem rs("A2");
  const auto& roots = rs.positive_roots();
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == wt({-1, 2}));  // alpha_2, root coords (0,1)
  CHECK(roots[1] == wt({2, -1}));  // alpha_1, root coords (1,0)
  CHECK(roots[2] == wt({1, 1}));   // alpha_1 + alpha_2
  CHECK(rs.positive_root_coords()[2] == std::vector<std::int64_t>{1, 1});
  CHECK(rs.is_positive_root(wt({1, 1})));
  CHECK_FALSE(rs.is_positive_root(wt({-1, -1})));
}

TEST_CASE("positive root counts across types") {
  CHECK(RootSystem("A1").positive_roots().size() == 1);
  CHECK(RootSystem("B2").positive_roots().size() == 4);
  CHECK(RootSystem("G2").positive_roots().size() == 6);
  CHECK(RootSystem("A3").positive_roots().size() == 6);
  CHECK(RootSystem("C3").positive_roots().size() == 9);
  CHECK(RootSystem("D4").positive_roots().size() == 12);
  CHECK(RootSystem("F4").positive_roots().size() == 24);
  CHECK(RootSystem("E6").positive_roots().size() == 36);
  CHECK(RootSystem("A1xA1").positive_roots().size() == 2);
}

TEST_CASE("B2 positive roots") {
  RootSystem rs("B2");
  const auto& coords = rs.positive_root_coords();
  REQUIRE(coords.size() == 4);
  CHECK(coords[0] == std::vector<std::int64_t>{0, 1});
  CHECK(coords[1] == std::vector<std::int64_t>{1, 0});
  CHECK(coords[2] == std::vector<std::int64_t>{1, 1});
  CHECK(coords[3] == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("reflections") {
  RootSystem rs("A2");
  CHECK(rs.reflect(1, rs.rho()) == wt({-1, 2}));
  CHECK(rs.reflect(1, rs.simple_root(1)) == -rs.simple_root(1));
  // r_i is an involution on a spread of weights.
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (int i = 1; i <= 2; ++i) CHECK(rs.reflect(i, rs.reflect(i, wt({a, b}))) == wt({a, b}));
  CHECK_THROWS_AS(rs.reflect(3, rs.rho()), kflag::validation_error);
  CHECK_THROWS_AS(rs.reflect(0, rs.rho()), kflag::validation_error);
}

TEST_CASE("simple-root coordinates") {
  RootSystem rs("A2");
  auto c = rs.to_root_coords(rs.fundamental_weight(1));
  CHECK_FALSE(c.integral);
  CHECK(c.coords == std::vector<kflag::Rational>{kflag::Rational(2, 3), kflag::Rational(1, 3)});

  auto a1 = rs.to_root_coords(rs.simple_root(1));
  CHECK(a1.integral);
  CHECK(a1.coords == std::vector<kflag::Rational>{1, 0});

  auto rho = rs.to_root_coords(rs.rho());
  CHECK(rho.integral);
  CHECK(rho.coords == std::vector<kflag::Rational>{1, 1});
}

TEST_CASE("weight arithmetic validates ranks") {
  Weight a = wt({1, 2});
  Weight b = wt({1, 2, 3});
  CHECK_THROWS_AS(a + b, kflag::validation_error);
  CHECK_THROWS_AS(a.pairing(3), kflag::validation_error);
  CHECK(a.pairing(2) == 2);
  CHECK((a * 2) == wt({2, 4}));
}
