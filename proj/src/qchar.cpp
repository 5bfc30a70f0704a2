#include "bcfusion/qchar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bcfusion/errors.hpp"

namespace bcfusion {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// sin(pi r / d) for an integer r; exact zero on multiples of d.
double sin_pi_ratio(std::int64_t r, std::int64_t d) {
  r = mod(r, 2 * d);
  if (r % d == 0) return 0.0;
  return std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(d));
}

bool near_real(std::complex<double> v) {
  return std::abs(v.imag()) <= 1e-9 * (1.0 + std::abs(v.real()));
}

}  // namespace

QuantumParams::QuantumParams(AlcoveParams alcove, int z) : alcove_(std::move(alcove)), z_(z) {
  if (z < 1 || z >= alcove_.ell() || std::gcd(z, alcove_.ell()) != 1) {
    throw ConfigurationError("z must satisfy 1 <= z < l and gcd(z, l) = 1; got z=" + std::to_string(z) +
                             ", l=" + std::to_string(alcove_.ell()));
  }
}

std::complex<double> QuantumParams::q_power_x4(std::int64_t m) const {
  // q^(m/4) = exp(pi i z m / (4 l)), period 8 l in z m
  const std::int64_t r = mod(m * z_, 8 * static_cast<std::int64_t>(ell()));
  const double angle = std::numbers::pi * static_cast<double>(r) / (4.0 * ell());
  return {std::cos(angle), std::sin(angle)};
}

double QuantumParams::sin_x4(std::int64_t m) const {
  return sin_pi_ratio(m * z_, 4 * static_cast<std::int64_t>(ell()));
}

std::vector<int> admissible_z(int ell) {
  std::vector<int> out;
  for (int z = 1; z < ell; ++z) {
    if (std::gcd(z, ell) == 1) out.push_back(z);
  }
  return out;
}

double quantum_number_x4(std::int64_t m, const QuantumParams& params) {
  return params.sin_x4(m) / params.sin_x4(4);
}

double quantum_integer(std::int64_t n, const QuantumParams& params) {
  return quantum_number_x4(4 * n, params);
}

double weyl_denominator(const QuantumParams& params, const Weight& nu) {
  const RootDatum& datum = params.datum();
  if (!datum.in_root_lattice(nu)) throw DomainError(nu.to_string() + " is not in the root lattice");
  double prod = 1.0;
  for (const auto& alpha : datum.positive_roots()) {
    prod *= quantum_number_x4(datum.form_x4(alpha, nu) / 2, params);
  }
  return prod;
}

std::complex<double> alternating_sum(const QuantumParams& params, const Weight& kappa, const Weight& nu) {
  const RootDatum& datum = params.datum();
  std::complex<double> sum = 0.0;
  for (const auto& w : WeylElement::enumerate(datum.rank())) {
    sum += static_cast<double>(w.signature()) * params.q_power_x4(datum.form_x4(w.apply(kappa), nu));
  }
  return sum;
}

double chi(const QuantumParams& params, const Weight& lambda, const Weight& nu) {
  const RootDatum& datum = params.datum();
  if (!lambda.is_dominant()) throw DomainError("chi needs a dominant weight, got " + lambda.to_string());
  const double delta = weyl_denominator(params, nu);
  if (delta == 0.0) throw SingularEvaluation("Weyl denominator vanishes at " + nu.to_string());
  // sum_w eps(w) q^form(w rho, nu) = (q - 1/q)^|Phi+| * delta
  const std::complex<double> q = params.q_power_x4(4);
  const std::complex<double> scale =
      std::pow(q - 1.0 / q, static_cast<int>(datum.positive_roots().size())) * delta;
  const std::complex<double> value = alternating_sum(params, lambda + datum.rho(), nu) / scale;
  if (!near_real(value)) {
    throw std::logic_error("character value is not real: imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

double qdim(const QuantumParams& params, const Weight& mu) {
  const RootDatum& datum = params.datum();
  const Weight shifted = mu + datum.rho();
  double prod = 1.0;
  for (const auto& alpha : datum.positive_roots()) {
    prod *= quantum_number_x4(datum.form_x4(shifted, alpha), params) /
            quantum_number_x4(datum.form_x4(datum.rho(), alpha), params);
  }
  return prod;
}

double dim_mu(const QuantumParams& params, const Weight& mu, const Weight& lambda) {
  if (mu.is_integral() || !mu.is_dominant()) {
    throw DomainError("dim^mu needs a half-integral dominant mu, got " + mu.to_string());
  }
  return chi(params, lambda, mu + params.datum().rho());
}

double CharacterVector::at(const Weight& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw DomainError("label " + label.to_string() + " is not in this character");
  return values[static_cast<std::size_t>(it - labels.begin())];
}

CharacterVector qdim_vector(const QuantumParams& params, const std::vector<Weight>& labels) {
  CharacterVector f{labels, {}};
  for (const auto& l : labels) f.values.push_back(qdim(params, l));
  return f;
}

CharacterVector dim_mu_vector(const QuantumParams& params, const Weight& mu, const std::vector<Weight>& labels) {
  CharacterVector f{labels, {}};
  for (const auto& l : labels) f.values.push_back(dim_mu(params, mu, l));
  return f;
}

CharacterVector positive_character(const AlcoveParams& alcove) {
  const RootDatum& datum = alcove.datum();
  const std::int64_t ell = alcove.ell();
  CharacterVector f{alcove_enumerate(alcove), {}};
  for (const auto& l : f.labels) {
    const Weight shifted = l + datum.rho();
    double prod = 1.0;
    for (const auto& coroot : datum.positive_coroots()) {
      // form(., coroot) is an integer on the weight lattice
      prod *= sin_pi_ratio(datum.pairing_x4(shifted, coroot) / 4, ell) /
              sin_pi_ratio(datum.pairing_x4(datum.rho(), coroot) / 4, ell);
    }
    f.values.push_back(prod);
  }
  return f;
}

double character_law_residual(const FusionTable& table, const CharacterVector& f) {
  const std::size_t n = table.size();
  if (f.labels != table.labels()) throw DimensionError("character and table index different labels");
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double lhs = f.values[i] * f.values[j];
      double rhs = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (const int c = table(i, j, k); c != 0) rhs += c * f.values[k];
      }
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
  }
  return worst;
}

PfCertificate pf_certify_unique(const FusionTable& table) {
  const auto& params = table.params();
  const Weight generator = params.datum().fundamental_weight(params.family() == Family::B ? params.rank() : 1);
  const int cap = 2 * static_cast<int>(table.size());
  const auto s = generation_exponent(table, generator, cap);
  if (!s) {
    throw CertificationFailure("no odd s below " + std::to_string(cap) + " makes N^s + N^(s+1) positive");
  }

  const Eigen::MatrixXd n = fusion_matrix(table, generator).cast<double>();
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n.rows(), n.cols());
  for (int i = 0; i < *s; ++i) {
    power = n * power;
    power /= power.maxCoeff();
  }
  Eigen::MatrixXd m = power + n * power;
  m /= m.maxCoeff();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw CertificationFailure("eigensolver did not converge");

  PfCertificate cert;
  cert.s = *s;
  const std::size_t unit = table.unit_index();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Eigen::VectorXd v = solver.eigenvectors().col(c);
    Eigen::Index at = 0;
    v.cwiseAbs().maxCoeff(&at);
    v /= v(at);
    if ((v.array() > 1e-9).all()) {
      ++cert.positive_count;
      cert.eigenvalue = solver.eigenvalues()(c);
      v /= v(static_cast<Eigen::Index>(unit));
      cert.eigenvector.assign(v.data(), v.data() + v.size());
    }
  }
  if (cert.positive_count != 1) {
    throw CertificationFailure("expected exactly one positive eigenvector, found " +
                               std::to_string(cert.positive_count));
  }
  return cert;
}

std::int64_t twist_exponent_doubled(const RootDatum& datum, const Weight& lambda) {
  return datum.form_x4(lambda + 2 * datum.rho(), lambda) / 2;
}

}  // namespace bcfusion
