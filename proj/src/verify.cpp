#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "bcfusion/bmwdual.hpp"
#include "bcfusion/cli.hpp"
#include "bcfusion/errors.hpp"
#include "bcfusion/qchar.hpp"
#include "bcfusion/symmetry.hpp"
#include "bcfusion/unitarity.hpp"

namespace bcfusion {

namespace {

std::string num(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

class Suite {
 public:
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      results_.push_back({name, ok, std::move(detail)});
    } catch (const std::exception& e) {
      results_.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

// Half-integral dominant weights used as mu in dim^mu: Lambda_k and the spin
// labels of the alcove, capped to keep large ranks quick.
std::vector<Weight> mu_samples(const FusionTable& table) {
  const int k = table.params().rank();
  std::vector<Weight> out{table.params().datum().fundamental_weight(k)};
  for (const auto& l : table.labels()) {
    if (out.size() >= 4) break;
    if (!l.is_integral() && l != out.front()) out.push_back(l);
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> default_verify_grid() { return {{2, 9}, {2, 11}, {2, 13}, {3, 13}, {3, 15}, {4, 17}}; }

std::vector<CheckResult> verify_instance(Family family, int k, int ell) {
  const AlcoveParams params(RootDatum(family, k), ell);
  const FusionTable table = FusionTable::build(params);
  const std::vector<int> zs = admissible_z(ell);
  Suite suite;

  const TableAudit table_audit = audit_table(table);
  suite.run("table.unit", [&] { return std::pair{table_audit.unit, std::string()}; });
  suite.run("table.symmetric", [&] { return std::pair{table_audit.symmetric, std::string()}; });
  suite.run("table.associative", [&] { return std::pair{table_audit.associative, std::string()}; });
  suite.run("table.graded", [&] { return std::pair{table_audit.graded, std::string()}; });
  suite.run("table.nonnegative", [&] { return std::pair{table_audit.nonnegative, std::string()}; });
  suite.run("rule.vector", [&] { return std::pair{check_vector_rule(table), std::string()}; });

  const CharacterVector dim_pos = positive_character(params);
  suite.run("qchar.positive_character_law", [&] {
    const double res = character_law_residual(table, dim_pos);
    return std::pair{res < 1e-7, "residual " + num(res)};
  });
  suite.run("qchar.pf_unique", [&] {
    const PfCertificate cert = pf_certify_unique(table);
    double diff = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) diff = std::max(diff, std::abs(cert.eigenvector[i] - dim_pos.values[i]));
    return std::pair{cert.positive_count == 1 && diff < 1e-6,
                     "s=" + std::to_string(cert.s) + " positive=" + std::to_string(cert.positive_count) +
                         " |v-Dim|=" + num(diff)};
  });
  suite.run("qchar.qdim_character_law", [&] {
    double worst = 0.0;
    for (int z : zs) worst = std::max(worst, character_law_residual(table, qdim_vector(QuantumParams(params, z), table.labels())));
    return std::pair{worst < 1e-7, "residual " + num(worst) + " over " + std::to_string(zs.size()) + " z"};
  });

  if (family == Family::C) return suite.take();

  suite.run("rule.spin", [&] { return std::pair{check_spin_rule(table), std::string()}; });

  const InvolutionData inv(params);
  suite.run("symmetry.phi_involution", [&] {
    bool ok = true;
    for (std::size_t i = 0; i < inv.permutation.size(); ++i) {
      ok = ok && inv.permutation[inv.permutation[i]] == i && inv.permutation[i] != i;
    }
    return std::pair{ok, std::string()};
  });
  suite.run("symmetry.simple_current", [&] { return std::pair{verify_simple_current(table, inv), std::string()}; });
  suite.run("symmetry.simple_current_action",
            [&] { return std::pair{verify_simple_current_action(table, inv), std::string()}; });

  const QuantumParams q1(params, 1);
  const Weight lambda_k = params.datum().fundamental_weight(k);
  const CharacterVector dim_k = dim_mu_vector(q1, lambda_k, table.labels());
  suite.run("qchar.spin_dimension_positive", [&] {
    const double lo = *std::min_element(dim_k.values.begin(), dim_k.values.end());
    return std::pair{lo > 0.0, "min " + num(lo)};
  });
  suite.run("qchar.spin_dimension_law", [&] {
    const double res = character_law_residual(table, dim_k);
    return std::pair{res < 1e-7, "residual " + num(res)};
  });
  suite.run("qchar.spin_dimension_equals_Dim", [&] {
    double diff = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) diff = std::max(diff, std::abs(dim_k.values[i] - dim_pos.values[i]));
    return std::pair{diff < 1e-9, "max diff " + num(diff)};
  });

  suite.run("symmetry.magnitude", [&] {
    bool ok = true;
    const auto mus = mu_samples(table);
    for (int z : zs) {
      const QuantumParams qp(params, z);
      for (const auto& mu : mus) {
        const auto f = dim_mu_vector(qp, mu, table.labels());
        for (std::size_t i = 0; i < table.size(); ++i) {
          ok = ok && rel_close(std::abs(f.values[inv.permutation[i]]), std::abs(f.values[i]), 1e-7);
        }
      }
    }
    return std::pair{ok, std::to_string(mus.size()) + " mu samples"};
  });
  suite.run("symmetry.phi_sign_table", [&] {
    bool ok = true;
    for (int z : zs) {
      const QuantumParams qp(params, z);
      const auto f = qdim_vector(qp, table.labels());
      const int s = phi_sign(k, qp.q_ell_sign());
      for (std::size_t i = 0; i < table.size(); ++i) {
        ok = ok && rel_close(f.values[inv.permutation[i]], s * f.values[i], 1e-7);
      }
    }
    return std::pair{ok, std::string()};
  });

  suite.run("bmw.psi_bijection", [&] { return std::pair{psi_is_bijection(table, k, ell), std::string()}; });
  suite.run("bmw.box_graph", [&] { return std::pair{verify_psi_fusion(table, k, ell), std::string()}; });
  suite.run("bmw.bratteli_n6", [&] { return std::pair{verify_bratteli(table, k, ell, 6), std::string()}; });
  suite.run("bmw.eigen_squares", [&] {
    bool ok = true;
    for (int z : zs) ok = ok && check_eigen_squares(QuantumParams(params, z)).set_equal;
    return std::pair{ok, std::string()};
  });
  suite.run("bmw.dimension_identities", [&] {
    double worst = 0.0;
    for (int z : zs) {
      const auto d = check_dimension_identities(QuantumParams(params, z));
      worst = std::max({worst, d.vdim_residual, d.eigs_residual, d.reparam_residual});
    }
    return std::pair{worst < 1e-9, "max residual " + num(worst)};
  });
  suite.run("bmw.trace", [&] {
    bool ok = true;
    for (int z : zs) ok = ok && check_bmw_trace(QuantumParams(params, z)).matching_choices >= 1;
    return std::pair{ok, std::string()};
  });
  if ((ell - 2 * k - 1) / 2 >= 2) {
    suite.run("ranklevel", [&] {
      const RankLevelReport rep = ranklevel_check(k, ell);
      return std::pair{rep.ok(), "|Gamma|=" + std::to_string(rep.gamma_size) + " |C|=" +
                                     std::to_string(rep.c_alcove_size) +
                                     (rep.transpose_is_graph_iso ? " transpose" : " fallback")};
    });
  }
  if (2 * (2 * k + 1) < ell) {
    const UnitarityReport rep = audit(k, ell);
    suite.run("unitarity.strict_bound", [&] {
      std::string detail = std::to_string(rep.rows.size()) + " z values";
      const auto bad = rep.violations();
      if (!bad.empty()) {
        detail += "; |h(z)| >= Dim(box) at z =";
        for (int z : bad) detail += " " + std::to_string(z);
      }
      return std::pair{bad.empty(), detail};
    });
    suite.run("unitarity.separation_and_witness", [&] {
      return std::pair{rep.separated(), std::to_string(rep.rows.size()) + " z values"};
    });
  }
  return suite.take();
}

}  // namespace bcfusion
