#include "bcfusion/fusion.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "bcfusion/errors.hpp"

namespace bcfusion {

namespace {

// Brings a doubled vector into the strictly dominant chamber in place.
// Returns epsilon of the Weyl element used, or 0 when the vector sits on a
// reflection hyperplane of the finite Weyl group (a zero or repeated
// absolute value).
int make_dominant(std::vector<int>& y) {
  int sign = 1;
  for (int& v : y) {
    if (v == 0) return 0;
    if (v < 0) {
      v = -v;
      sign = -sign;
    }
  }
  // insertion sort, descending; each adjacent swap is a transposition
  for (std::size_t i = 1; i < y.size(); ++i) {
    for (std::size_t j = i; j > 0 && y[j - 1] <= y[j]; --j) {
      if (y[j - 1] == y[j]) return 0;
      std::swap(y[j - 1], y[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::int64_t theta_check_level(const RootDatum& datum, const std::vector<int>& y) {
  const auto x4 = datum.form_scale() * dot_doubled(y, datum.theta_check().doubled());
  return x4 / 4;
}

}  // namespace

AlcoveParams::AlcoveParams(RootDatum datum, int ell, Nondegeneracy mode)
    : datum_(std::move(datum)), ell_(ell) {
  if (ell < 3 || ell % 2 == 0) {
    throw ConfigurationError("ell must be an odd integer >= 3, got " + std::to_string(ell));
  }
  const Weight lambda1 = datum_.fundamental_weight(1);
  if (mode == Nondegeneracy::kRequired) {
    if (!contains(datum_.rho() + lambda1)) {
      throw ConfigurationError("degenerate level: rho + Lambda_1 is not in the alcove for " +
                               std::string(1, family_letter(datum_.family())) + std::to_string(rank()) +
                               ", ell=" + std::to_string(ell));
    }
  } else if (!contains(lambda1)) {
    throw ConfigurationError("Lambda_1 is not in the alcove; ell is too small for this rank");
  }
}

std::int64_t AlcoveParams::level_of(const Weight& mu) const {
  return datum_.pairing_theta_check(mu + datum_.rho());
}

bool AlcoveParams::contains(const Weight& mu) const {
  return mu.rank() == rank() && datum_.in_weight_lattice(mu) && mu.is_dominant() && level_of(mu) < ell_;
}

bool AlcoveParams::in_closure(const Weight& mu) const {
  return mu.rank() == rank() && datum_.in_weight_lattice(mu) && mu.is_dominant() && level_of(mu) <= ell_;
}

std::vector<Weight> alcove_enumerate(const AlcoveParams& params) {
  const RootDatum& datum = params.datum();
  const int k = params.rank();
  std::vector<int> parities{0};
  if (datum.family() == Family::B) parities.push_back(1);

  std::vector<Weight> out;
  for (int parity : parities) {
    std::vector<int> current(static_cast<std::size_t>(k), parity);
    std::function<void(int, int)> fill = [&](int pos, int bound) {
      if (pos == k) {
        out.emplace_back(current);
        return;
      }
      for (int v = parity; v <= bound; v += 2) {
        current[static_cast<std::size_t>(pos)] = v;
        for (int rest = pos + 1; rest < k; ++rest) current[static_cast<std::size_t>(rest)] = parity;
        // the level is monotone in every coordinate, so the rest at their
        // minimum gives a lower bound
        std::vector<int> shifted(current);
        for (int i = 0; i < k; ++i) shifted[static_cast<std::size_t>(i)] += datum.rho().doubled_at(i);
        if (theta_check_level(datum, shifted) >= params.ell()) break;
        fill(pos + 1, v);
      }
    };
    fill(0, 2 * params.ell());
  }
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

AffineReduction affine_reduce(const AlcoveParams& params, const Weight& xi) {
  const RootDatum& datum = params.datum();
  if (xi.rank() != datum.rank()) throw DimensionError("weight rank mismatch");
  std::vector<int> y(xi.doubled());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += datum.rho().doubled()[i];
  const auto& theta = datum.theta().doubled();

  int sign = 1;
  for (;;) {
    const int s = make_dominant(y);
    if (s == 0) return {};
    sign *= s;
    const auto level = theta_check_level(datum, y);
    if (level == params.ell()) return {};
    if (level < params.ell()) break;
    // t_l(y) = y + (l - <y, theta_check>) theta; the norm of y strictly drops
    const auto shift = static_cast<int>(params.ell() - level);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift * theta[i];
    sign = -sign;
  }
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= datum.rho().doubled()[i];
  return {Weight(std::move(y)), sign};
}

Decomposition classical_tensor(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
  if (!lambda.is_dominant() || !mu.is_dominant()) {
    throw DomainError("classical_tensor needs dominant weights");
  }
  if (lambda.rank() != datum.rank() || mu.rank() != datum.rank()) throw DimensionError("weight rank mismatch");
  const auto& rho = datum.rho().doubled();
  std::map<Weight, int> acc;
  for (const auto& [kappa, m] : weight_multiplicities(datum, lambda)) {
    std::vector<int> y(mu.doubled());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += kappa.doubled()[i] + rho[i];
    const int s = make_dominant(y);
    if (s == 0) continue;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= rho[i];
    acc[Weight(std::move(y))] += s * m;
  }
  Decomposition out;
  for (auto& [nu, c] : acc) {
    if (c < 0) throw std::logic_error("negative classical multiplicity at " + nu.to_string());
    if (c > 0) out.emplace(nu, c);
  }
  return out;
}

Decomposition fuse_with_weights(const AlcoveParams& params, const WeightMultiset& lambda_weights,
                                const Weight& mu) {
  std::map<Weight, int> acc;
  for (const auto& [kappa, m] : lambda_weights) {
    auto r = affine_reduce(params, mu + kappa);
    if (r.sign != 0) acc[std::move(r.label)] += r.sign * m;
  }
  Decomposition out;
  for (auto& [nu, c] : acc) {
    if (c < 0) throw std::logic_error("negative fusion coefficient at " + nu.to_string());
    if (c > 0) out.emplace(nu, c);
  }
  return out;
}

Decomposition fuse(const AlcoveParams& params, const Weight& lambda, const Weight& mu) {
  if (!params.contains(lambda) || !params.contains(mu)) {
    throw DomainError("fuse: labels must lie in the alcove, got " + lambda.to_string() + " and " +
                      mu.to_string());
  }
  const bool swap = mu.doubled_norm_sq() < lambda.doubled_norm_sq();
  const Weight& small = swap ? mu : lambda;
  const Weight& large = swap ? lambda : mu;
  return fuse_with_weights(params, weight_multiplicities(params.datum(), small), large);
}

}  // namespace bcfusion
