#include "bcfusion/symmetry.hpp"

#include <algorithm>

#include "bcfusion/errors.hpp"

namespace bcfusion {

InvolutionData::InvolutionData(const AlcoveParams& params)
    : alcove(params),
      gamma(std::vector<int>(static_cast<std::size_t>(params.rank()), params.ell() - 2 * params.rank())),
      w1(WeylElement::reversal(params.rank())),
      labels(alcove_enumerate(params)) {
  if (params.family() != Family::B) throw DomainError("the involution phi is defined for type B");
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  for (const auto& l : labels) {
    const auto it = index.find(gamma - w1.apply(l));
    if (it == index.end()) throw std::logic_error("phi(" + l.to_string() + ") left the alcove");
    permutation.push_back(it->second);
  }
}

Weight phi(const InvolutionData& data, const Weight& lambda) {
  if (!data.alcove.contains(lambda)) throw DomainError(lambda.to_string() + " is not in the alcove");
  return data.gamma - data.w1.apply(lambda);
}

bool verify_simple_current(const FusionTable& table, const InvolutionData& data) {
  if (table.labels() != data.labels) return false;
  const auto g = table.index_of(data.gamma);
  if (!g) return false;
  const IntMatrix n = fusion_matrix(table, data.gamma);
  const auto size = static_cast<Eigen::Index>(table.size());
  IntMatrix p = IntMatrix::Zero(size, size);
  for (std::size_t j = 0; j < table.size(); ++j) {
    p(static_cast<Eigen::Index>(data.permutation[j]), static_cast<Eigen::Index>(j)) = 1;
  }
  return n == p && n * n == IntMatrix::Identity(size, size);
}

bool verify_simple_current_action(const FusionTable& table, const InvolutionData& data) {
  if (table.labels() != data.labels) return false;
  const IntMatrix g = fusion_matrix(table, data.gamma);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const IntMatrix n = fusion_matrix(table, data.labels[i]);
    if (fusion_matrix(table, data.labels[data.permutation[i]]) != g * n) return false;
    if (g * n * g != n) return false;
  }
  return true;
}

int phi_sign(int k, int q_ell_sign) {
  const int r = ((k % 4) + 4) % 4;
  if (q_ell_sign == -1) return r == 0 || r == 1 ? 1 : -1;
  if (q_ell_sign == 1) return r == 0 || r == 3 ? 1 : -1;
  throw DomainError("q^l must be +1 or -1");
}

}  // namespace bcfusion
