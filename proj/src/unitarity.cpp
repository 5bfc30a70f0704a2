#include "bcfusion/unitarity.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <iomanip>

#include "bcfusion/errors.hpp"

namespace bcfusion {

namespace {

constexpr double kNegative = -1e-9;

double sin_pi(std::int64_t num, std::int64_t den) {
  return std::sin(std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

}  // namespace

double h(int k, int ell, int z) {
  if (z < 1 || z >= ell || std::gcd(z, ell) != 1) {
    throw DomainError("h needs 1 <= z < l with gcd(z, l) = 1");
  }
  return 1.0 - sin_pi(2LL * k * z, ell) / sin_pi(z, ell);
}

double dim_box(int k, int ell) {
  if (2 * k + 1 >= ell) throw DomainError("Dim(box) needs 2k + 1 < l");
  return sin_pi(2 * k + 1, ell) / sin_pi(1, ell);
}

bool UnitarityReport::ok() const {
  if (!conclusive) return false;
  for (const auto& row : rows) {
    if (!row.strict || !row.witness) return false;
  }
  return true;
}

bool UnitarityReport::separated() const {
  if (!conclusive) return false;
  for (const auto& row : rows) {
    if (!row.separated || !row.witness) return false;
  }
  return true;
}

std::vector<int> UnitarityReport::violations() const {
  std::vector<int> out;
  for (const auto& row : rows) {
    if (!row.strict) out.push_back(row.z);
  }
  return out;
}

UnitarityReport audit(int k, int ell) {
  UnitarityReport report;
  report.k = k;
  report.ell = ell;
  report.conclusive = 2 * (2 * k + 1) < ell;

  const AlcoveParams params(RootDatum(Family::B, k), ell, Nondegeneracy::kRelaxed);
  std::vector<std::pair<FerrersDiagram, Weight>> even;
  for (const auto& d : gamma_set(k, ell)) {
    if (d.size() % 2 == 0) even.emplace_back(d, psi(k, ell, d));
  }
  const double box = dim_box(k, ell);
  for (int z : admissible_z(ell)) {
    UnitarityRow row;
    row.z = z;
    row.h = h(k, ell, z);
    row.dim_box = box;
    row.margin = box - std::abs(row.h);
    row.strict = row.margin > 1e-9;
    row.separated = std::abs(row.margin) > 1e-9;
    const QuantumParams qp(params, z);
    for (const auto& [tau, label] : even) {
      const double value = qdim(qp, label);
      if (value < kNegative) {
        row.witness = NegativeWitness{tau, label, value};
        break;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<std::pair<int, int>> conclusive_grid(int max_ell) {
  std::vector<std::pair<int, int>> out;
  for (int k = 2; 2 * (2 * k + 1) < max_ell; ++k) {
    for (int ell = 4 * k + 3; ell <= max_ell; ell += 2) {
      if (ell % 2 == 1) out.emplace_back(k, ell);
    }
  }
  return out;
}

nlohmann::json to_json(const UnitarityReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json w = nullptr;
    if (r.witness) {
      w = {{"tau", r.witness->tau.rows()}, {"label", r.witness->label.doubled()}, {"qdim", r.witness->value}};
    }
    rows.push_back({{"z", r.z},
                    {"h", r.h},
                    {"dim_box", r.dim_box},
                    {"strict", r.strict},
                    {"margin", r.margin},
                    {"separated", r.separated},
                    {"negative_even_witness", std::move(w)}});
  }
  return {{"k", report.k},
          {"ell", report.ell},
          {"conclusive", report.conclusive},
          {"ok", report.ok()},
          {"separated", report.separated()},
          {"per_z", std::move(rows)}};
}

std::string to_table(const UnitarityReport& report) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "k=" << report.k << " ell=" << report.ell << (report.conclusive ? "" : " (non-conclusive: 2(2k+1) >= ell)")
      << "\n";
  out << std::left << std::setw(5) << "z" << std::setw(20) << "h(z)" << std::setw(20) << "Dim(box)" << std::setw(20)
      << "margin"
      << "witness\n";
  for (const auto& r : report.rows) {
    out << std::left << std::setw(5) << r.z << std::setw(20) << r.h << std::setw(20) << r.dim_box << std::setw(20)
        << r.margin;
    if (r.witness) {
      out << r.witness->tau.to_string() << " -> " << r.witness->label.to_string() << " qdim=" << r.witness->value;
    } else {
      out << "none";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace bcfusion
