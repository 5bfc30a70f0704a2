#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bcfusion/errors.hpp"
#include "bcfusion/qchar.hpp"
#include "bcfusion/symmetry.hpp"

using namespace bcfusion;

namespace {

constexpr double kPi = std::numbers::pi;

Weight W(std::vector<int> doubled) { return Weight(std::move(doubled)); }

AlcoveParams b(int k, int ell) { return AlcoveParams(RootDatum(Family::B, k), ell); }

QuantumParams qb(int k, int ell, int z) { return QuantumParams(b(k, ell), z); }

double qint(double n, int z, int ell) { return std::sin(n * z * kPi / ell) / std::sin(z * kPi / ell); }

// form(a, b) straight from coordinates: 2 a.b for B, a.b for C
double form(Family f, const Weight& a, const Weight& b) {
  double s = 0.0;
  for (int i = 0; i < a.rank(); ++i) s += 0.25 * a.doubled_at(i) * b.doubled_at(i);
  return f == Family::B ? 2.0 * s : s;
}

std::complex<double> weyl_sum(const QuantumParams& p, const Weight& x, const Weight& nu) {
  std::complex<double> sum = 0.0;
  for (const auto& w : WeylElement::enumerate(p.datum().rank())) {
    const double e = form(p.datum().family(), w.apply(x), nu);
    sum += static_cast<double>(w.signature()) * std::polar(1.0, e * p.z() * kPi / p.ell());
  }
  return sum;
}

}  // namespace

TEST_CASE("quantum integers") {
  const auto p = qb(2, 9, 1);
  CHECK(quantum_integer(1, p) == doctest::Approx(1.0));
  CHECK(std::abs(quantum_integer(9, p)) < 1e-12);
  CHECK(quantum_integer(2, p) == doctest::Approx(2.0 * std::cos(kPi / 9)).epsilon(1e-12));
  CHECK(quantum_integer(2, p) == doctest::Approx(1.8794).epsilon(1e-4));
  for (int z : admissible_z(11)) {
    const auto pz = qb(2, 11, z);
    for (int n = -12; n <= 30; ++n) CHECK(quantum_integer(n, pz) == doctest::Approx(qint(n, z, 11)).epsilon(1e-12));
    CHECK(quantum_number_x4(6, pz) == doctest::Approx(qint(1.5, z, 11)).epsilon(1e-12));
  }
}

TEST_CASE("admissible z and parameter validation") {
  CHECK(admissible_z(9) == std::vector<int>{1, 2, 4, 5, 7, 8});
  CHECK(admissible_z(15).size() == 8);
  CHECK_THROWS_AS(qb(2, 9, 3), ConfigurationError);
  CHECK_THROWS_AS(qb(2, 9, 0), ConfigurationError);
  CHECK_THROWS_AS(qb(2, 9, 9), ConfigurationError);
  CHECK(qb(2, 9, 1).q_ell_sign() == -1);
  CHECK(qb(2, 9, 2).q_ell_sign() == 1);
}

TEST_CASE("Weyl denominator: product against the alternating sum") {
  for (auto [f, k, ell] : {std::tuple{Family::B, 2, 9}, {Family::B, 3, 13}, {Family::C, 2, 9}, {Family::C, 3, 13}}) {
    const AlcoveParams a(RootDatum(f, k), ell, Nondegeneracy::kRelaxed);
    const int npos = static_cast<int>(a.datum().positive_roots().size());
    for (int z : admissible_z(ell)) {
      const QuantumParams p(a, z);
      const std::complex<double> qq = std::polar(1.0, z * kPi / ell) - std::polar(1.0, -z * kPi / ell);
      for (const auto& mu : alcove_enumerate(a)) {
        const Weight nu = 2 * mu + 2 * a.datum().rho();  // 2(mu + rho) is in Q for both families
        const std::complex<double> lhs = std::pow(qq, npos) * weyl_denominator(p, nu);
        const std::complex<double> rhs = weyl_sum(p, a.datum().rho(), nu);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
      }
    }
  }
  const auto p = qb(2, 9, 1);
  const Weight two_rho = W({6, 2});
  CHECK(weyl_denominator(p, two_rho) > 0.0);
  // B2 positive roots give form(rho, alpha) = 3, 1, 4, 2
  CHECK(weyl_denominator(p, two_rho) == doctest::Approx(qint(3, 1, 9) * qint(1, 1, 9) * qint(4, 1, 9) * qint(2, 1, 9)));
  // half form(eps1, nu) = 9 is a wall
  CHECK(std::abs(weyl_denominator(p, W({18, 2}))) < 1e-12);
  CHECK_THROWS_AS(weyl_denominator(p, W({1, 1})), DomainError);
}

TEST_CASE("chi basics and qdim as a specialization") {
  for (auto [k, ell] : {std::pair{2, 9}, {2, 11}, {3, 13}}) {
    const AlcoveParams a(RootDatum(Family::B, k), ell, Nondegeneracy::kRelaxed);
    for (int z : admissible_z(ell)) {
      const QuantumParams p(a, z);
      const Weight two_rho = 2 * a.datum().rho();
      CHECK(chi(p, Weight::zero(k), two_rho) == doctest::Approx(1.0));
      CHECK(chi(p, Weight::zero(k), two_rho + W(std::vector<int>(static_cast<std::size_t>(k), 2))) ==
            doctest::Approx(1.0));
      for (const auto& lambda : alcove_enumerate(a)) {
        CHECK(chi(p, lambda, two_rho) == doctest::Approx(qdim(p, lambda)).epsilon(1e-9));
      }
      // closure points on the affine wall
      Weight wall = Weight::zero(k);
      std::vector<int> d = wall.doubled();
      d[0] = ell - 2 * k + 1;
      wall = W(d);
      REQUIRE(a.level_of(wall) == ell);
      CHECK(std::abs(qdim(p, wall)) < 1e-12);
      CHECK(std::abs(chi(p, wall, two_rho)) < 1e-9);
    }
  }
  CHECK(qdim(qb(2, 9, 1), W({0, 0})) == doctest::Approx(1.0));
}

TEST_CASE("chi satisfies the character law against classical products") {
  const RootDatum d(Family::B, 2);
  const AlcoveParams a(d, 11);
  std::vector<Weight> small{W({2, 0}), W({1, 1}), W({2, 2}), W({3, 1}), W({4, 0})};
  for (int z : {1, 3}) {
    const QuantumParams p(a, z);
    for (const Weight& nu : {W({6, 2}), W({8, 2}), W({10, 4})}) {
      for (const auto& l : small) {
        for (const auto& m : small) {
          if (l.parity() == -1 && m.parity() == -1 && l != m) continue;
          double rhs = 0.0;
          for (const auto& [kappa, mult] : oracle::character_product_decomposition(d, l, m)) {
            rhs += mult * chi(p, kappa, nu);
          }
          const double lhs = chi(p, l, nu) * chi(p, m, nu);
          CHECK(std::abs(lhs - rhs) < 1e-7 * (1.0 + std::abs(lhs)));
        }
      }
    }
  }
  CHECK_THROWS_AS(chi(qb(2, 9, 1), W({2, 0}), W({0, 0})), SingularEvaluation);
}

TEST_CASE("qdim of V matches [4k]/[2] + 1") {
  for (auto [k, ell] : {std::pair{2, 9}, {2, 11}, {3, 13}}) {
    const auto a = b(k, ell);
    const InvolutionData data(a);
    const Weight v = phi(data, a.datum().fundamental_weight(1));
    for (int z : admissible_z(ell)) {
      const double expected = qint(4 * k, z, ell) / qint(2, z, ell) + 1.0;
      CHECK(std::abs(qdim(QuantumParams(a, z), v)) == doctest::Approx(std::abs(expected)).epsilon(1e-9));
    }
  }
}

TEST_CASE("spin dimension dim^{Lambda_k}") {
  for (auto [k, ell] : {std::pair{2, 9}, {2, 11}, {3, 13}, {4, 17}}) {
    const auto a = b(k, ell);
    const auto labels = alcove_enumerate(a);
    const Weight lk = a.datum().fundamental_weight(k);
    const QuantumParams p(a, 1);
    const auto dim = dim_mu_vector(p, lk, labels);
    const auto pos = positive_character(a);
    CHECK(dim.at(Weight::zero(k)) == doctest::Approx(1.0));
    const InvolutionData data(a);
    CHECK(dim.at(data.gamma) == doctest::Approx(1.0).epsilon(1e-9));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      CHECK(dim.values[i] > 0.0);
      CHECK(dim.values[i] == doctest::Approx(pos.values[i]).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(dim_mu(qb(2, 9, 1), W({2, 0}), W({0, 0})), DomainError);
}

TEST_CASE("Dim by the coroot product") {
  const auto pos = positive_character(b(2, 9));
  CHECK(pos.at(W({0, 0})) == doctest::Approx(1.0));
  // lambda + rho = (5/2,1/2), rho = (3/2,1/2); coroots eps1, eps2, (eps1 +- eps2)/2
  const double num = std::sin(5 * kPi / 9) * std::sin(1 * kPi / 9) * std::sin(3 * kPi / 9) * std::sin(2 * kPi / 9);
  const double den = std::sin(3 * kPi / 9) * std::sin(1 * kPi / 9) * std::sin(2 * kPi / 9) * std::sin(1 * kPi / 9);
  CHECK(pos.at(W({2, 0})) == doctest::Approx(num / den).epsilon(1e-12));
  // the Weyl-sum definition at nu = Lambda_k + rho
  const auto p = qb(2, 9, 1);
  const Weight nu = W({1, 1}) + W({3, 1});
  const std::complex<double> ratio = weyl_sum(p, W({2, 0}) + W({3, 1}), nu) / weyl_sum(p, W({3, 1}), nu);
  CHECK(ratio.real() == doctest::Approx(num / den).epsilon(1e-9));
  CHECK(std::abs(ratio.imag()) < 1e-9);
}

TEST_CASE("character vectors obey the fusion character law") {
  for (auto [k, ell] : {std::pair{2, 9}, {2, 11}, {3, 13}}) {
    const auto t = FusionTable::build(b(k, ell));
    CHECK(character_law_residual(t, positive_character(t.params())) < 1e-7);
    for (int z : admissible_z(ell)) {
      const QuantumParams p(t.params(), z);
      CHECK(character_law_residual(t, qdim_vector(p, t.labels())) < 1e-7);
      for (const Weight& mu : {t.params().datum().fundamental_weight(k), W(std::vector<int>(static_cast<std::size_t>(k), 3))}) {
        CHECK(character_law_residual(t, dim_mu_vector(p, mu, t.labels())) < 1e-7);
      }
    }
  }
  // a perturbed vector is caught
  const auto t = FusionTable::build(b(2, 9));
  auto f = positive_character(t.params());
  f.values[3] *= 1.01;
  CHECK(character_law_residual(t, f) > 1e-4);
}

TEST_CASE("Perron-Frobenius certificate") {
  for (auto [k, ell] : {std::pair{2, 9}, {2, 11}, {3, 13}}) {
    const auto t = FusionTable::build(b(k, ell));
    const auto cert = pf_certify_unique(t);
    CHECK(cert.positive_count == 1);
    CHECK(cert.s % 2 == 1);
    const auto pos = positive_character(t.params());
    REQUIRE(cert.eigenvector.size() == pos.values.size());
    for (std::size_t i = 0; i < pos.values.size(); ++i) {
      CHECK(cert.eigenvector[i] == doctest::Approx(pos.values[i]).epsilon(1e-6));
    }
    // N_{Lambda_k} is symmetric
    const auto n = fusion_matrix(t, t.params().datum().fundamental_weight(k));
    CHECK(n == n.transpose());
  }
}

TEST_CASE("affine reflection flips the alternating sum") {
  std::mt19937 rng(7);
  for (auto [k, ell] : {std::pair{2, 9}, {3, 13}}) {
    const auto a = b(k, ell);
    for (int z : {1, 2}) {
      const QuantumParams p(a, z);
      std::uniform_int_distribution<int> coord(-12, 12);
      for (int trial = 0; trial < 40; ++trial) {
        const int parity = trial % 2;
        std::vector<int> x(static_cast<std::size_t>(k)), nu(static_cast<std::size_t>(k));
        for (auto& e : x) e = 2 * coord(rng) + parity;
        for (auto& e : nu) e = 2 * coord(rng);
        // reflection in form(x, theta_check) = l with theta = eps1
        std::vector<int> y = x;
        y[0] = 2 * ell - x[0];
        const auto s1 = alternating_sum(p, W(x), W(nu));
        const auto s2 = alternating_sum(p, W(y), W(nu));
        CHECK(std::abs(s1 + s2) < 1e-9);
        CHECK(std::abs(s1 - weyl_sum(p, W(x), W(nu))) < 1e-9);
      }
    }
  }
}

TEST_CASE("twist exponents") {
  for (int k : {2, 3, 4}) {
    const RootDatum d(Family::B, k);
    CHECK(twist_exponent_doubled(d, d.fundamental_weight(1)) == 2 * 4 * k);
    std::vector<int> two(static_cast<std::size_t>(k), 0);
    two[0] = 4;
    CHECK(twist_exponent_doubled(d, W(two)) == 2 * (8 * k + 4));
    CHECK(twist_exponent_doubled(d, Weight::zero(k)) == 0);
    for (const auto& l : alcove_enumerate(b(k, 4 * k + 5))) {
      const double c = form(Family::B, l + 2 * d.rho(), l);
      CHECK(static_cast<double>(twist_exponent_doubled(d, l)) == doctest::Approx(2.0 * c));
    }
  }
  const auto a = b(2, 9);
  const InvolutionData data(a);
  CHECK(twist_exponent_doubled(a.datum(), phi(data, W({2, 0}))) == 70);
  const RootDatum c(Family::C, 3);
  for (const auto& l : alcove_enumerate(AlcoveParams(c, 13, Nondegeneracy::kRelaxed))) {
    CHECK(static_cast<double>(twist_exponent_doubled(c, l)) == doctest::Approx(2.0 * form(Family::C, l + 2 * c.rho(), l)));
  }
}
