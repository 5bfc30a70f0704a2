#include "bcfusion/bmwdual.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bcfusion/errors.hpp"
#include "bcfusion/graph_iso.hpp"

namespace bcfusion {

namespace {

constexpr double kTol = 1e-9;

std::complex<double> ipow(std::complex<double> q, std::int64_t n) {
  return std::polar(std::pow(std::abs(q), static_cast<double>(n)), static_cast<double>(n) * std::arg(q));
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < kTol; }

// Greedy matching is enough here: the expected values are pairwise far apart
// whenever the eigenvalues are distinct.
bool same_multiset(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && close(x, b[j])) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

Weight first_coords(int rank, std::initializer_list<int> doubled) {
  std::vector<int> d(static_cast<std::size_t>(rank), 0);
  std::copy(doubled.begin(), doubled.end(), d.begin());
  return Weight(std::move(d));
}

std::vector<Weight> psi_labels(int k, int ell, const std::vector<FerrersDiagram>& diagrams) {
  std::vector<Weight> out;
  out.reserve(diagrams.size());
  for (const auto& d : diagrams) out.push_back(psi(k, ell, d));
  return out;
}

void require_type_b(const FusionTable& table, int k, int ell) {
  const auto& p = table.params();
  if (p.family() != Family::B || p.rank() != k || p.ell() != ell) {
    throw ConfigurationError("expected a B_" + std::to_string(k) + " table at l=" + std::to_string(ell));
  }
}

}  // namespace

Weight v_label(const AlcoveParams& params) {
  if (params.family() != Family::B) throw DomainError("V = phi(Lambda_1) is a type B object");
  const int k = params.rank();
  const Weight gamma(std::vector<int>(static_cast<std::size_t>(k), params.ell() - 2 * k));
  return gamma - WeylElement::reversal(k).apply(params.datum().fundamental_weight(1));
}

bool psi_is_bijection(const FusionTable& table, int k, int ell) {
  require_type_b(table, k, ell);
  auto images = psi_labels(k, ell, gamma_set(k, ell));
  std::sort(images.begin(), images.end());
  auto labels = table.labels();
  std::sort(labels.begin(), labels.end());
  return images == labels;
}

bool verify_psi_fusion(const FusionTable& table, int k, int ell) {
  require_type_b(table, k, ell);
  const auto diagrams = gamma_set(k, ell);
  const auto images = psi_labels(k, ell, diagrams);
  const IntMatrix box = box_graph(k, ell);
  const std::size_t v = table.require_index(v_label(table.params()));
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    const auto a = table.index_of(images[i]);
    if (!a) return false;
    for (std::size_t j = 0; j < diagrams.size(); ++j) {
      const auto b = table.index_of(images[j]);
      if (!b) return false;
      const int n = table(v, *a, *b);
      if (n != box(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))) return false;
    }
  }
  return true;
}

bool verify_bratteli(const FusionTable& table, int k, int ell, int max_n) {
  require_type_b(table, k, ell);
  const auto diagrams = gamma_set(k, ell);
  const auto images = psi_labels(k, ell, diagrams);
  const IntMatrix box = box_graph(k, ell);
  const Weight v = v_label(table.params());
  for (int n = 0; n <= max_n; ++n) {
    const PathCounts young = bratteli_paths(box, 0, n);
    const PathCounts quantum = bratteli_endo_dim(table, v, n);
    if (young.total != quantum.total) return false;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      const auto idx = table.index_of(images[i]);
      if (!idx || young.counts[i] != quantum.counts[*idx]) return false;
    }
  }
  return true;
}

BmwParams::BmwParams(std::complex<double> q_, std::complex<double> r_) : q(q_), r(r_) {
  if (std::abs(q * q + 1.0) < kTol) throw ConfigurationError("BMW parameters need q^2 != -1");
  for (auto cand : {q, -q, 1.0 / q, -1.0 / q}) {
    if (std::abs(r - cand) < kTol) throw ConfigurationError("BMW parameters need r != +-q^(+-1)");
  }
}

BmwParams BmwParams::from_quantum(const QuantumParams& params) {
  const std::complex<double> q_bmw = -params.q_power_x4(8);
  return BmwParams(q_bmw, -ipow(q_bmw, 2 * params.alcove().rank()));
}

std::complex<double> bmw_trace_g(const BmwParams& params) {
  const auto d = params.q - 1.0 / params.q;
  const auto den = params.r - 1.0 / params.r + d;
  if (std::abs(den) < kTol) throw SingularEvaluation("r - 1/r + q - 1/q vanishes");
  return params.r * d / den;
}

std::complex<double> quantum_integer_at(std::int64_t n, std::complex<double> q) {
  const auto den = q - 1.0 / q;
  if (std::abs(den) < kTol) throw SingularEvaluation("q - 1/q vanishes");
  return (ipow(q, n) - ipow(q, -n)) / den;
}

EigenSquare braiding_eig_sq(const QuantumParams& params, const Weight& lambda, const Weight& mu, const Weight& nu) {
  const Decomposition product = fuse(params.alcove(), lambda, mu);
  if (!product.contains(nu)) {
    throw DomainError(nu.to_string() + " is not a summand of " + lambda.to_string() + " (x) " + mu.to_string());
  }
  const RootDatum& datum = params.datum();
  const std::int64_t e = twist_exponent_doubled(datum, nu) - twist_exponent_doubled(datum, lambda) -
                         twist_exponent_doubled(datum, mu);
  return {e, params.q_power_x4(2 * e)};
}

std::complex<double> dim_from_eigs(std::complex<double> c1, std::complex<double> c2, std::complex<double> c3) {
  if (std::abs(c1) < kTol || std::abs(c2) < kTol) throw SingularEvaluation("eigenvalues must be nonzero");
  const auto den = c3 * (1.0 / c1 + 1.0 / c2);
  if (std::abs(den) < kTol) throw SingularEvaluation("c3 (1/c1 + 1/c2) vanishes");
  return (c3 * c3 + c1 * c2 - c3 * (c1 + c2)) / den;
}

EigenSquareCheck check_eigen_squares(const QuantumParams& params) {
  const int k = params.alcove().rank();
  const Weight v = v_label(params.alcove());
  EigenSquareCheck out;
  for (const Weight& nu : {Weight::zero(k), first_coords(k, {4}), first_coords(k, {2, 2})}) {
    out.computed.push_back(braiding_eig_sq(params, v, v, nu).value);
  }
  const double sigma = (k % 2 == 1 && params.q_ell_sign() == -1) ? -1.0 : 1.0;
  out.expected = {sigma * params.q_power_x4(-32LL * k), sigma * params.q_power_x4(16),
                  sigma * params.q_power_x4(-16)};
  out.set_equal = same_multiset(out.computed, out.expected);
  out.alternate_labeling = close(out.computed[1], out.expected[2]) && close(out.computed[2], out.expected[1]);
  return out;
}

TraceCheck check_bmw_trace(const QuantumParams& params) {
  const int k = params.alcove().rank();
  const Weight v = v_label(params.alcove());
  const std::array<Weight, 3> summands{Weight::zero(k), first_coords(k, {4}), first_coords(k, {2, 2})};
  std::array<std::complex<double>, 3> roots;
  std::array<double, 3> dims;
  for (std::size_t i = 0; i < 3; ++i) {
    roots[i] = std::sqrt(braiding_eig_sq(params, v, v, summands[i]).value);
    dims[i] = qdim(params, summands[i]);
  }
  const double dv = qdim(params, v);

  TraceCheck out;
  out.best_residual = INFINITY;
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      const std::complex<double> c0 = roots[0], c1 = double(a) * roots[1], c2 = double(b) * roots[2];
      const auto t = std::sqrt(-1.0 / (c1 * c2));
      std::complex<double> trace = 0.0;
      trace += dims[0] * c0 + dims[1] * c1 + dims[2] * c2;
      trace *= t / (dv * dv);
      ++out.choices_tried;
      try {
        const BmwParams bmw(t * c2, 1.0 / (t * c0));
        const double residual = std::abs(trace - bmw_trace_g(bmw));
        out.best_residual = std::min(out.best_residual, residual);
        if (residual < kTol) ++out.matching_choices;
      } catch (const ConfigurationError&) {
      } catch (const SingularEvaluation&) {
      }
    }
  }
  return out;
}

DimensionIdentities check_dimension_identities(const QuantumParams& params) {
  const int k = params.alcove().rank();
  DimensionIdentities out;
  const double vdim = quantum_integer(4 * k, params) / quantum_integer(2, params) + 1.0;
  out.vdim_residual = std::abs(std::abs(qdim(params, v_label(params.alcove()))) - std::abs(vdim));

  const std::complex<double> qt = -params.q_power_x4(8);
  const auto from_eigs = dim_from_eigs(-1.0 / qt, qt, -ipow(qt, -2 * k));
  const auto expected = quantum_integer_at(-2 * k, qt) / quantum_integer_at(1, qt) + 1.0;
  out.eigs_residual = std::abs(std::abs(from_eigs) - std::abs(expected));

  out.reparam_residual = std::abs(quantum_integer_at(2 * k, qt) / quantum_integer_at(1, qt) +
                                  quantum_integer(4 * k, params) / quantum_integer(2, params));
  return out;
}

RankLevelReport ranklevel_check(int k, int ell) {
  RankLevelReport rep;
  rep.k = k;
  rep.ell = ell;
  rep.r = (ell - 2 * k - 1) / 2;
  if (rep.r < 2) throw ConfigurationError("the rank-level dual C_r needs r >= 2, got r=" + std::to_string(rep.r));

  const auto diagrams = gamma_set(k, ell);
  const AlcoveParams c_params(RootDatum(Family::C, rep.r), ell, Nondegeneracy::kRelaxed);
  const FusionTable c_table = FusionTable::build(c_params);
  rep.gamma_size = diagrams.size();
  rep.c_alcove_size = c_table.size();
  rep.cardinalities_equal = rep.gamma_size == rep.c_alcove_size;
  if (!rep.cardinalities_equal) return rep;

  const IntMatrix box = box_graph(k, ell);
  const IntMatrix vec = fusion_matrix(c_table, c_params.datum().fundamental_weight(1));

  std::vector<std::size_t> transpose_map;
  bool mapped = true;
  for (const auto& d : diagrams) {
    std::vector<int> doubled(static_cast<std::size_t>(rep.r), 0);
    const auto cols = d.columns();
    if (cols.size() > doubled.size()) {
      mapped = false;
      break;
    }
    for (std::size_t i = 0; i < cols.size(); ++i) doubled[i] = 2 * cols[i];
    const auto idx = c_table.index_of(Weight(std::move(doubled)));
    if (!idx) {
      mapped = false;
      break;
    }
    transpose_map.push_back(*idx);
  }
  rep.transpose_is_graph_iso = mapped && is_graph_isomorphism(box, vec, transpose_map);
  if (!rep.transpose_is_graph_iso) {
    rep.fallback_ran = true;
    rep.fallback_iso = find_graph_isomorphism(box, vec, {{0, c_table.unit_index()}}).has_value();
  }
  return rep;
}

nlohmann::json to_json(const RankLevelReport& report) {
  return {{"k", report.k},
          {"ell", report.ell},
          {"r", report.r},
          {"gamma_size", report.gamma_size},
          {"c_alcove_size", report.c_alcove_size},
          {"cardinalities_equal", report.cardinalities_equal},
          {"transpose_is_graph_iso", report.transpose_is_graph_iso},
          {"fallback_ran", report.fallback_ran},
          {"fallback_iso", report.fallback_iso},
          {"ok", report.ok()}};
}

nlohmann::json duality_report(int k, int ell) {
  const AlcoveParams params(RootDatum(Family::B, k), ell, Nondegeneracy::kRelaxed);
  const FusionTable table = FusionTable::build(params);
  const auto diagrams = gamma_set(k, ell);
  nlohmann::json psi_rows = nlohmann::json::array();
  for (const auto& d : diagrams) psi_rows.push_back({d.rows(), psi(k, ell, d).doubled()});

  nlohmann::json report{{"k", k},
                        {"ell", ell},
                        {"r", (ell - 2 * k - 1) / 2},
                        {"gamma_size", diagrams.size()},
                        {"alcove_size", table.size()},
                        {"psi", std::move(psi_rows)},
                        {"psi_bijective", psi_is_bijection(table, k, ell)},
                        {"homeq_ok", verify_psi_fusion(table, k, ell)},
                        {"bratteli_ok", verify_bratteli(table, k, ell, 6)}};
  report["ranklevel"] = (ell - 2 * k - 1) / 2 >= 2 ? to_json(ranklevel_check(k, ell)) : nlohmann::json(nullptr);
  return report;
}

}  // namespace bcfusion
