#pragma once

#include <vector>

#include "bcfusion/fusion.hpp"

namespace bcfusion {

/// The simple current gamma = ((l-2k)/2, ..., (l-2k)/2) of type B and the
/// involution phi(lambda) = gamma - w1(lambda), w1 the coordinate reversal.
struct InvolutionData {
  AlcoveParams alcove;
  Weight gamma;
  WeylElement w1;
  std::vector<Weight> labels;          // alcove order
  std::vector<std::size_t> permutation;  // labels[permutation[i]] = phi(labels[i])

  explicit InvolutionData(const AlcoveParams& params);
};

Weight phi(const InvolutionData& data, const Weight& lambda);

/// N_gamma is the permutation matrix of phi and squares to the identity.
bool verify_simple_current(const FusionTable& table, const InvolutionData& data);

/// N_{phi(lambda)} = N_gamma N_lambda and N_gamma N_lambda N_gamma = N_lambda
/// for every label.
bool verify_simple_current_action(const FusionTable& table, const InvolutionData& data);

/// Sign s with dim(V_phi(lambda)) = s dim(V_lambda).
int phi_sign(int k, int q_ell_sign);

}  // namespace bcfusion
