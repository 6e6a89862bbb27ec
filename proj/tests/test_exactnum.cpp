#include <complex>

#include "doctest.h"
#include "support.hpp"

using namespace h6;
using h6::test::kSeed;

namespace {

using W = EisensteinRational;

// Embedding Q(w) -> C with w = exp(2 pi i / 3); used as a floating-point oracle.
std::complex<double> to_complex(const W& x) {
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
  return x.re_part().get_d() + x.w_part().get_d() * w;
}

// 2x2 model of the split quaternions over Q(w): z + wB -> [[z, w], [conj w, conj z]].
EisMatrix to_2x2(const SplitQuaternion& q) {
  EisMatrix m(2, 2);
  m << q.z(), q.w(), q.w().conj(), q.z().conj();
  return m;
}

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("cube roots of unity") {
    const W w = W::omega();
    CHECK(w * w * w == W(1));
    CHECK(W(1) + w + W::omega_bar() == W(0));
    CHECK(W::omega_bar() == w * w);
    CHECK(W::omega_bar() == w.conj());
    CHECK(W::root(0) == W(1));
    CHECK(W::root(4) == w);
    CHECK(W::root(-1) == W::omega_bar());
    CHECK(w.norm() == 1);
  }

  TEST_CASE("canonical form and printing") {
    CHECK(W(Rational(2, 4), Rational(-6, 3)) == W(Rational(1, 2), Rational(-2)));
    CHECK(W(Rational(2, 4), Rational(-6, 3)).str() == "1/2-2*w");
    CHECK(W::omega().str() == "0+1*w");
    CHECK(W(3).str() == "3+0*w");
    std::string k1, k2;
    W(Rational(4, 8), 0).append_key(k1);
    W(Rational(1, 2), 0).append_key(k2);
    CHECK(k1 == k2);
  }

  TEST_CASE("zero has no inverse") { CHECK_THROWS_AS(W(0).inverse(), std::domain_error); }

  TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 300; ++trial) {
      const W a = test::random_eis(rng), b = test::random_eis(rng), c = test::random_eis(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == W(0));
      W sq = a;
      sq *= sq;
      CHECK(sq == a * W(a));
      if (!a.is_zero()) CHECK(a * a.inverse() == W(1));
      // conjugation is a field automorphism and the norm is multiplicative
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      CHECK(a * a.conj() == W(a.norm(), 0));
      CHECK((a * b).norm() == a.norm() * b.norm());
      for (int k = -3; k <= 3; ++k) CHECK(a.times_root(k) == a * W::root(k));
    }
  }

  TEST_CASE("multiplication agrees with the complex embedding") {
    std::mt19937_64 rng(kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
      const W a = test::random_eis(rng), b = test::random_eis(rng);
      const std::complex<double> expected = to_complex(a) * to_complex(b);
      CHECK(std::abs(to_complex(a * b) - expected) < 1e-9);
      CHECK(std::abs(to_complex(a.conj()) - std::conj(to_complex(a))) < 1e-12);
    }
  }

  TEST_CASE("split quaternion identities") {
    const SplitQuaternion b = SplitQuaternion::beta();
    const SplitQuaternion w(W::omega()), wb(W::omega_bar());
    CHECK(b * b == SplitQuaternion(1));
    CHECK((b * w) * (b * w) == SplitQuaternion(1));
    CHECK((b * wb) * (b * wb) == SplitQuaternion(1));
    CHECK(b * w == wb * b);
    CHECK(b * w != w * b);
    CHECK(SplitQuaternion(W(2), W::omega()).str() == "(2+0*w)+(0+1*w)*B");
  }

  TEST_CASE("split quaternion ring laws and the 2x2 model") {
    std::mt19937_64 rng(kSeed + 2);
    for (int trial = 0; trial < 200; ++trial) {
      const SplitQuaternion p = test::random_sq(rng), q = test::random_sq(rng), r = test::random_sq(rng);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK((p + q) * r == p * r + q * r);
      CHECK(equal(to_2x2(p * q), mat_mul(to_2x2(p), to_2x2(q))));
      const W u = test::random_eis(rng);
      CHECK(SplitQuaternion::beta() * SplitQuaternion(u) == SplitQuaternion(u.conj()) * SplitQuaternion::beta());
    }
  }

  TEST_CASE("hashes agree on equal values") {
    const W a(Rational(3, 6), 1), b(Rational(1, 2), 1);
    CHECK(std::hash<W>{}(a) == std::hash<W>{}(b));
    CHECK(std::hash<SplitQuaternion>{}(SplitQuaternion(a, b)) == std::hash<SplitQuaternion>{}(SplitQuaternion(b, a)));
  }
}
