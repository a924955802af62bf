#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "polyzeta/approx.hpp"

using namespace polyzeta;

TEST_CASE("exact integers and addition") {
  ApproxReal one = ApproxReal::exact_integer(1, 32);
  ApproxReal two = one + one;
  CHECK(two.is_exact());
  CHECK(two.center() == 2);
  CHECK(two.to_decimal(3) == "2.000");
}

TEST_CASE("multiplication by an exact zero is exactly zero") {
  ApproxReal x(12345, 16, 7);  // some fuzzy value
  ApproxReal z = ApproxReal::zero(16);
  ApproxReal p = x * z;
  CHECK(p.is_exact());
  CHECK(p.center() == 0);
}

TEST_CASE("directed rounding of rationals") {
  ApproxReal third = ApproxReal::from_rational(Rational(1, 3), 10);
  CHECK(third.scaled_value() == 341);
  CHECK(third.radius_ulps() <= 1);
  CHECK(third.encloses(Rational(1, 3)));

  ApproxReal scaled = scale_by_rational(ApproxReal::exact_integer(1, 10), Rational(1, 3));
  CHECK(scaled.scaled_value() == 341);
  CHECK(scaled.radius_ulps() <= 1);
}

TEST_CASE("division by integer rejects zero") {
  ApproxReal x = ApproxReal::exact_integer(5, 16);
  CHECK_THROWS_AS(div_by_integer(x, Integer(0)), std::domain_error);
  CHECK(div_by_integer(x, Integer(5)).encloses(Rational(1)));
}

TEST_CASE("enclosure soundness under randomized expression trees") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> op(0, 5), num(-9, 9), den(1, 9), leafnum(-50, 50);
  const long scale = 96;

  struct Node {
    ApproxReal a;
    Rational exact;
  };
  auto leaf = [&] {
    Rational q(leafnum(rng), den(rng));
    q.canonicalize();
    return Node{ApproxReal::from_rational(q, scale), q};
  };
  std::function<Node(int)> build = [&](int depth) -> Node {
    if (depth == 0) return leaf();
    Node x = build(depth - 1);
    switch (op(rng)) {
      case 0: {
        Node y = build(depth - 1);
        return {x.a + y.a, x.exact + y.exact};
      }
      case 1: {
        Node y = build(depth - 1);
        return {x.a - y.a, x.exact - y.exact};
      }
      case 2: {
        Node y = build(depth - 1);
        return {x.a * y.a, x.exact * y.exact};
      }
      case 3:
        return {-x.a, -x.exact};
      case 4: {
        int n = num(rng);
        if (n == 0) n = 3;
        Rational q(n, den(rng));
        q.canonicalize();
        return {scale_by_rational(x.a, q), x.exact * q};
      }
      default: {
        int n = num(rng);
        if (n == 0) n = 2;
        return {div_by_integer(x.a, Integer(n)), x.exact / n};
      }
    }
  };

  std::uniform_int_distribution<int> depth(1, 8);
  for (int t = 0; t < 10000; ++t) {
    Node n = build(depth(rng) % 5 + (t % 3 == 0 ? 4 : 0));  // mix shallow and deep
    CHECK(n.a.encloses(n.exact));
  }
}

TEST_CASE("log 2") {
  ApproxReal l = const_log2(15);
  CHECK(l.to_decimal(15) == "0.693147180559945");
  CHECK(l.radius() * 4 <= Rational(1, Integer("1000000000000000")));
  // independent exact-rational partial sum with its own tail bracket
  Rational partial(0);
  Integer p2(1);
  for (int n = 1; n <= 80; ++n) {
    p2 *= 2;
    partial += Rational(1, p2 * n);
  }
  Rational tail_hi = Rational(1, p2 * 80);
  CHECK(l.upper() >= partial);
  CHECK(l.lower() <= partial + tail_hi);
}

TEST_CASE("pi") {
  ApproxReal p = const_pi(15);
  CHECK(p.to_decimal(15) == "3.141592653589793");
  CHECK(p.radius() * 4 <= Rational(1, Integer("1000000000000000")));
  ApproxReal p30 = const_pi(30);
  CHECK(p30.to_decimal(30) == "3.141592653589793238462643383280");
}

TEST_CASE("sqrt 3") {
  ApproxReal s = const_sqrt3(15);
  CHECK(s.to_decimal(15) == "1.732050807568877");
  ApproxReal sq = s * s;
  CHECK(sq.encloses(Rational(3)));
}

TEST_CASE("decimal output") {
  ApproxReal l = const_log2(12);
  CHECK(l.to_decimal(6) == "0.693147");
  ApproxReal neg = -const_log2(12);
  CHECK(neg.to_decimal(6) == "-0.693147");
  // radius 2^-10 cannot certify six digits
  ApproxReal rough(710, 10, 1);
  CHECK_THROWS_AS(rough.to_decimal(6), precision_error);
}

TEST_CASE("bound strings") {
  ApproxReal exact = ApproxReal::exact_integer(7, 20);
  CHECK(exact.bound_string() == "0");
  ApproxReal r1(0, 40, 1);  // 2^-40 ~ 9.09e-13
  CHECK(r1.bound_string() == "1e-12");
  ApproxReal r2(0, 10, 3);  // 3/1024 ~ 2.9e-3
  CHECK(r2.bound_string() == "3e-3");
  ApproxReal big(0, 4, 33);  // ~2.06
  CHECK(big.bound_string() == "3e0");
}

TEST_CASE("agreement of enclosures") {
  ApproxReal a(1000, 10, 2);
  ApproxReal b(1003, 10, 2);
  CHECK(agrees(a, b));
  ApproxReal c(1010, 10, 2);
  CHECK(!agrees(a, c));
  CHECK(agrees(a, a.rescaled(20)));
}

TEST_CASE("complex arithmetic encloses componentwise") {
  ApproxReal one = ApproxReal::exact_integer(1, 32);
  ApproxReal two = ApproxReal::exact_integer(2, 32);
  ApproxComplex z{one, two};          // 1 + 2i
  ApproxComplex w{two, -one};         // 2 - i
  ApproxComplex p = z * w;            // (1+2i)(2-i) = 4 + 3i
  CHECK(p.re.encloses(Rational(4)));
  CHECK(p.im.encloses(Rational(3)));
  CHECK(p.re.is_exact());
}
