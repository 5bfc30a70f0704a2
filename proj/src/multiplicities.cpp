#include <algorithm>
#include <functional>

#include "bcfusion/errors.hpp"
#include "bcfusion/root_datum.hpp"

namespace bcfusion {

namespace {

// Dominant weights mu with lambda - mu a nonnegative combination of simple
// roots, ordered by the height of lambda - mu.
std::vector<Weight> dominant_weights_below(const RootDatum& datum, const Weight& lambda) {
  const int k = datum.rank();
  const int top = lambda.doubled_at(0);
  const int parity = lambda.is_integral() ? 0 : 1;

  std::vector<std::pair<std::int64_t, Weight>> found;
  std::vector<int> current(static_cast<std::size_t>(k));
  std::function<void(int, int)> fill = [&](int pos, int bound) {
    if (pos == k) {
      Weight mu(current);
      auto coords = datum.simple_root_coordinates(lambda - mu);
      if (!coords) return;
      std::int64_t height = 0;
      for (auto c : *coords) {
        if (c < 0) return;
        height += c;
      }
      found.emplace_back(height, std::move(mu));
      return;
    }
    for (int v = parity; v <= bound; v += 2) {
      current[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1, v);
    }
  };
  fill(0, top);

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& [h, mu] : found) out.push_back(std::move(mu));
  return out;
}

}  // namespace

WeightMultiset dominant_weight_multiplicities(const RootDatum& datum, const Weight& lambda) {
  if (lambda.rank() != datum.rank()) throw DimensionError("weight rank mismatch");
  if (!lambda.is_dominant()) throw DomainError("weight_multiplicities needs a dominant weight, got " + lambda.to_string());
  if (!datum.in_weight_lattice(lambda)) throw DomainError("weight outside the weight lattice");

  const auto candidates = dominant_weights_below(datum, lambda);
  const auto top_norm = lambda.doubled_norm_sq();
  const auto casimir_top = (lambda + datum.rho()).doubled_norm_sq();

  WeightMultiset mult;
  auto lookup = [&](const Weight& x) -> std::int64_t {
    auto it = mult.find(dominant_reduce(datum, x).dominant);
    return it == mult.end() ? 0 : it->second;
  };

  for (const Weight& mu : candidates) {
    if (mu == lambda) {
      mult.emplace(mu, 1);
      continue;
    }
    // Freudenthal, with the dot product on doubled coordinates on both sides.
    std::int64_t acc = 0;
    for (const Weight& alpha : datum.positive_roots()) {
      for (Weight x = mu + alpha; x.doubled_norm_sq() <= top_norm; x += alpha) {
        const auto m = lookup(x);
        if (m != 0) acc += dot_doubled(x, alpha) * m;
      }
    }
    const auto denom = casimir_top - (mu + datum.rho()).doubled_norm_sq();
    if (denom <= 0 || (2 * acc) % denom != 0) {
      throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    }
    const auto m = 2 * acc / denom;
    if (m > 0) mult.emplace(mu, static_cast<int>(m));
  }
  return mult;
}

WeightMultiset weight_multiplicities(const RootDatum& datum, const Weight& lambda) {
  WeightMultiset all;
  for (const auto& [mu, m] : dominant_weight_multiplicities(datum, lambda)) {
    for (Weight& x : weyl_orbit(mu)) all.emplace(std::move(x), m);
  }
  return all;
}

}  // namespace bcfusion
