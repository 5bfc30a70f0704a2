#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bcfusion/bmwdual.hpp"

namespace bcfusion {

/// 1 - sin(2 k z pi / l) / sin(z pi / l)
double h(int k, int ell, int z);

/// sin((2k + 1) pi / l) / sin(pi / l)
double dim_box(int k, int ell);

struct NegativeWitness {
  FerrersDiagram tau;
  Weight label;  // psi(tau)
  double value = 0.0;  // qdim(psi(tau)) at z
};

struct UnitarityRow {
  int z = 0;
  double h = 0.0;
  double dim_box = 0.0;
  bool strict = false;   // |h| < dim_box
  double margin = 0.0;   // dim_box - |h|
  bool separated = false;  // ||h| - dim_box| > 1e-9, i.e. |h| is not the positive value
  std::optional<NegativeWitness> witness;
};

struct UnitarityReport {
  int k = 0;
  int ell = 0;
  /// 2(2k + 1) < l; outside that range the rows are informational only.
  bool conclusive = false;
  std::vector<UnitarityRow> rows;

  /// Conclusive, every row strict and every row with a witness.
  bool ok() const;
  /// Conclusive, every row separated and every row with a witness. This is
  /// all the non-unitarity argument consumes.
  bool separated() const;
  /// z values whose row is not strict.
  std::vector<int> violations() const;
};

/// Scans every admissible z for the inequality and for an even-sector
/// diagram tau with qdim(psi(tau)) < 0.
UnitarityReport audit(int k, int ell);

/// (k, l) with k >= 2, l odd, l <= max_ell and 2(2k + 1) < l.
std::vector<std::pair<int, int>> conclusive_grid(int max_ell);

nlohmann::json to_json(const UnitarityReport& report);
/// Columns z, h(z), Dim(box), margin, witness.
std::string to_table(const UnitarityReport& report);

}  // namespace bcfusion
