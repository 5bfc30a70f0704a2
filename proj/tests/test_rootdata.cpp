#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bcfusion/errors.hpp"
#include "bcfusion/root_datum.hpp"

using namespace bcfusion;

namespace {

Weight W(std::vector<int> doubled) { return Weight(std::move(doubled)); }

}  // namespace

TEST_CASE("weights keep one parity") {
  CHECK(W({3, 1}).parity() == -1);
  CHECK(W({2, 0}).parity() == 1);
  CHECK_THROWS_AS(W({2, 1}), DomainError);
  CHECK(W({3, 1}).to_string() == "(3/2,1/2)");
  CHECK(W({4, 2}).is_dominant());
  CHECK_FALSE(W({2, 4}).is_dominant());
  CHECK_FALSE(W({2, -2}).is_dominant());
}

TEST_CASE("B2 and C2 root data") {
  const RootDatum b2(Family::B, 2);
  std::vector<Weight> expected{W({2, -2}), W({2, 2}), W({2, 0}), W({0, 2})};
  auto roots = b2.positive_roots();
  std::sort(roots.begin(), roots.end());
  std::sort(expected.begin(), expected.end());
  CHECK(roots == expected);
  CHECK(b2.rho() == W({3, 1}));
  CHECK(b2.theta() == W({2, 0}));
  CHECK(b2.theta_check() == W({2, 0}));
  CHECK(b2.form_scale() == 2);

  const RootDatum c2(Family::C, 2);
  CHECK(c2.theta() == W({2, 2}));
  CHECK(c2.rho() == W({4, 2}));
  CHECK(c2.form_scale() == 1);

  CHECK_THROWS_AS(RootDatum(Family::B, 1), InvalidRank);
  for (int k = 2; k <= 5; ++k) {
    CHECK(RootDatum(Family::B, k).positive_roots().size() == static_cast<std::size_t>(k * k));
    CHECK(RootDatum(Family::C, k).positive_roots().size() == static_cast<std::size_t>(k * k));
  }
  // rho is the half sum of positive roots
  for (Family f : {Family::B, Family::C}) {
    const RootDatum d(f, 3);
    Weight sum = Weight::zero(3);
    for (const auto& a : d.positive_roots()) sum += a;
    std::vector<int> half;
    for (int x : sum.doubled()) half.push_back(x / 2);
    CHECK(W(half) == d.rho());
  }
}

TEST_CASE("normalized form") {
  const RootDatum b2(Family::B, 2);
  CHECK(b2.form(W({2, 0}), W({2, 0})) == Rational(2));
  CHECK(b2.form(W({2, 0}), W({0, 2})) == Rational(0));
  CHECK(b2.form(b2.rho(), b2.theta_check()) == Rational(3));
  CHECK_THROWS_AS(b2.form(W({2, 0}), W({2, 0, 0})), DimensionError);

  for (Family f : {Family::B, Family::C}) {
    const RootDatum d(f, 3);
    for (const auto& a : d.positive_roots()) {
      // short roots have squared length 2
      const Rational len = d.form(a, a);
      CHECK((len == Rational(2) || len == Rational(4)));
    }
    const auto& roots = d.positive_roots();
    const auto& coroots = d.positive_coroots();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> v;
      for (int i = 0; i < 3; ++i) v.push_back(2 * coord(rng));
      const Weight x(v);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        // form(x, coroot) = 2 form(x, alpha) / form(alpha, alpha)
        const Rational lhs(d.pairing_x4(x, coroots[i]), 4);
        CHECK(lhs == 2 * d.form(x, roots[i]) / d.form(roots[i], roots[i]));
        CHECK(d.form(x, roots[i]) == d.form(roots[i], x));
      }
    }
  }
}

TEST_CASE("dominant_reduce") {
  const RootDatum b2(Family::B, 2);
  auto r = dominant_reduce(b2, W({0, 2}));
  CHECK(r.dominant == W({2, 0}));
  CHECK(r.w.signature() == -1);
  CHECK(r.w.apply(W({0, 2})) == r.dominant);

  r = dominant_reduce(b2, W({-2, 4}));
  CHECK(r.dominant == W({4, 2}));
  CHECK(r.w.signature() == 1);

  r = dominant_reduce(b2, W({3, 1}));
  CHECK(r.dominant == W({3, 1}));
  CHECK(r.w == WeylElement(2));
}

TEST_CASE("signature is a homomorphism") {
  const auto all = WeylElement::enumerate(3);
  CHECK(all.size() == 48);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    CHECK(a.compose(b).signature() == a.signature() * b.signature());
    const Weight x = W({5, 3, 1});
    CHECK(a.compose(b).apply(x) == a.apply(b.apply(x)));
    CHECK(a.compose(a.inverse()) == WeylElement(3));
  }
}

TEST_CASE("weight multiplicities") {
  const RootDatum b2(Family::B, 2);
  auto m = weight_multiplicities(b2, W({2, 0}));
  CHECK(m.size() == 5);
  for (const auto& [w, c] : m) CHECK(c == 1);
  CHECK(m.count(W({0, 0})) == 1);
  CHECK(m.count(W({0, -2})) == 1);

  m = weight_multiplicities(b2, W({1, 1}));
  CHECK(m.size() == 4);
  for (const auto& [w, c] : m) CHECK(c == 1);

  CHECK_THROWS_AS(weight_multiplicities(b2, W({0, 2})), DomainError);

  // adjoint of B2: zero weight has multiplicity 2
  m = weight_multiplicities(b2, W({2, 2}));
  CHECK(m.at(W({0, 0})) == 2);

  CHECK(weyl_dimension(b2, W({2, 0})) == 5);
  CHECK(weyl_dimension(b2, W({1, 1})) == 4);
  CHECK(weyl_dimension(b2, W({2, 2})) == 10);
  CHECK(weyl_dimension(RootDatum(Family::B, 3), W({1, 1, 1})) == 8);
  CHECK(weyl_dimension(RootDatum(Family::C, 2), W({2, 0})) == 4);
  CHECK(weyl_dimension(RootDatum(Family::C, 2), W({2, 2})) == 5);
}

TEST_CASE("multiplicities are Weyl invariant and sum to the Weyl dimension") {
  for (Family f : {Family::B, Family::C}) {
    for (int k : {2, 3}) {
      const RootDatum d(f, k);
      std::vector<std::vector<int>> samples{{4, 2, 0}, {6, 0, 0}, {2, 2, 2}, {4, 4, 2}};
      if (f == Family::B) samples.push_back({5, 3, 1});
      for (auto s : samples) {
        s.resize(static_cast<std::size_t>(k));
        const Weight lambda(s);
        const auto m = weight_multiplicities(d, lambda);
        long long total = 0;
        for (const auto& [w, c] : m) {
          total += c;
          CHECK(m.at(dominant_reduce(d, w).dominant) == c);
        }
        CHECK(total == weyl_dimension(d, lambda));
        CHECK(m.at(lambda) == 1);
      }
    }
  }
}

TEST_CASE("multiplicities match the Weyl character formula at torus points") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> angle(0.1, 3.0);
  for (Family f : {Family::B, Family::C}) {
    const RootDatum d(f, 3);
    std::vector<Weight> samples{W({4, 2, 0}), W({2, 2, 2}), W({6, 2, 2})};
    if (f == Family::B) samples.push_back(W({5, 3, 1}));
    for (const auto& lambda : samples) {
      const auto ch = oracle::character(d, lambda);
      for (int trial = 0; trial < 3; ++trial) {
        const std::vector<double> x{angle(rng), angle(rng), angle(rng)};
        const auto expected = oracle::weyl_character_at(d, lambda, x);
        CHECK(std::abs(oracle::character_at(ch, x) - expected) < 1e-8 * (1.0 + std::abs(expected)));
      }
    }
  }
}
