#include "bcfusion/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bcfusion/bmwdual.hpp"
#include "bcfusion/errors.hpp"
#include "bcfusion/qchar.hpp"
#include "bcfusion/unitarity.hpp"

namespace bcfusion::cli {

namespace {

using nlohmann::json;

// Reports carry 12 significant digits.
double sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

void round_numbers(json& j) {
  if (j.is_number_float()) {
    j = sig12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

AlcoveParams require_alcove(const RunConfig& c, Nondegeneracy mode) {
  if (!c.rank || !c.ell) throw ParseError("--rank and --ell are required");
  return AlcoveParams(RootDatum(c.family, *c.rank), *c.ell, mode);
}

std::string family_name(Family f) { return std::string(1, family_letter(f)); }

int cmd_alcove(const RunConfig& c, std::ostream& out) {
  const AlcoveParams params = require_alcove(c, Nondegeneracy::kRequired);
  const auto labels = alcove_enumerate(params);
  if (c.format == Format::kJson) {
    json rows = json::array();
    for (const auto& l : labels) {
      rows.push_back({{"weight", format_weight(l)}, {"doubled", l.doubled()}, {"level", params.level_of(l)}, {"parity", l.parity()}});
    }
    out << json{{"family", family_name(c.family)}, {"rank", *c.rank}, {"ell", *c.ell}, {"count", labels.size()}, {"labels", rows}}.dump(2)
        << "\n";
  } else if (c.format == Format::kCsv) {
    out << "index,weight,level,parity\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      out << i << "," << quoted(format_weight(labels[i])) << "," << params.level_of(labels[i]) << "," << labels[i].parity() << "\n";
    }
  } else {
    out << std::left << std::setw(7) << "index" << std::setw(24) << "weight" << std::setw(7) << "level" << "parity\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      out << std::left << std::setw(7) << i << std::setw(24) << labels[i].to_string() << std::setw(7) << params.level_of(labels[i])
          << labels[i].parity() << "\n";
    }
  }
  return 0;
}

int cmd_fuse(const RunConfig& c, std::ostream& out) {
  const AlcoveParams params = require_alcove(c, Nondegeneracy::kRequired);
  if (c.all_pairs) {
    const FusionTable table = FusionTable::build(params);
    if (c.format == Format::kJson) {
      out << to_json(table).dump() << "\n";
      return 0;
    }
    const char* sep = c.format == Format::kCsv ? "," : "  ";
    out << "lambda" << sep << "mu" << sep << "nu" << sep << "N\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t j = 0; j < table.size(); ++j) {
        for (std::size_t k = 0; k < table.size(); ++k) {
          if (table(i, j, k) == 0) continue;
          const auto& l = table.labels();
          if (c.format == Format::kCsv) {
            out << quoted(format_weight(l[i])) << sep << quoted(format_weight(l[j])) << sep << quoted(format_weight(l[k]));
          } else {
            out << l[i].to_string() << sep << l[j].to_string() << sep << l[k].to_string();
          }
          out << sep << table(i, j, k) << "\n";
        }
      }
    }
    return 0;
  }
  if (!c.lhs || !c.rhs) throw ParseError("fuse needs --lhs and --rhs (or --all)");
  const Decomposition product = fuse(params, *c.lhs, *c.rhs);
  if (c.format == Format::kJson) {
    json p = json::object();
    for (const auto& [nu, n] : product) p[nu.to_string()] = n;
    out << json{{"family", family_name(c.family)}, {"rank", *c.rank}, {"ell", *c.ell}, {"lhs", c.lhs->to_string()}, {"rhs", c.rhs->to_string()}, {"product", p}}.dump(2)
        << "\n";
  } else {
    const bool csv = c.format == Format::kCsv;
    out << (csv ? "nu,N\n" : "nu                      N\n");
    for (const auto& [nu, n] : product) {
      if (csv) {
        out << quoted(format_weight(nu)) << "," << n << "\n";
      } else {
        out << std::left << std::setw(24) << nu.to_string() << n << "\n";
      }
    }
  }
  return 0;
}

int cmd_matrix(const RunConfig& c, std::ostream& out) {
  const AlcoveParams params = require_alcove(c, Nondegeneracy::kRequired);
  if (!c.lhs) throw ParseError("matrix needs --lhs");
  if (!params.contains(*c.lhs)) throw DomainError(c.lhs->to_string() + " is not in the alcove");
  const FusionTable table = FusionTable::build(params);
  const IntMatrix m = fusion_matrix(table, *c.lhs);
  const auto& labels = table.labels();
  if (c.format == Format::kJson) {
    json names = json::array();
    for (const auto& l : labels) names.push_back(l.to_string());
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(row);
    }
    out << json{{"family", family_name(c.family)}, {"rank", *c.rank}, {"ell", *c.ell}, {"label", c.lhs->to_string()}, {"labels", names}, {"matrix", rows}}.dump()
        << "\n";
  } else if (c.format == Format::kCsv) {
    out << "row";
    for (const auto& l : labels) out << "," << quoted(format_weight(l));
    out << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out << quoted(format_weight(labels[static_cast<std::size_t>(i)]));
      for (Eigen::Index j = 0; j < m.cols(); ++j) out << "," << m(i, j);
      out << "\n";
    }
  } else {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out << std::left << std::setw(24) << labels[static_cast<std::size_t>(i)].to_string();
      for (Eigen::Index j = 0; j < m.cols(); ++j) out << " " << m(i, j);
      out << "\n";
    }
  }
  return 0;
}

int cmd_chars(const RunConfig& c, std::ostream& out) {
  const AlcoveParams params = require_alcove(c, Nondegeneracy::kRequired);
  const QuantumParams qp(params, c.z.value_or(1));
  const CharacterVector dim = positive_character(params);
  const bool spin = c.family == Family::B;
  const Weight lambda_k = params.datum().fundamental_weight(*c.rank);
  std::vector<double> spin_dim, qd;
  for (const auto& l : dim.labels) {
    if (spin) spin_dim.push_back(dim_mu(qp, lambda_k, l));
    qd.push_back(qdim(qp, l));
  }
  if (c.format == Format::kJson) {
    json rows = json::array();
    for (std::size_t i = 0; i < dim.labels.size(); ++i) {
      json row{{"weight", format_weight(dim.labels[i])}, {"Dim", dim.values[i]}, {"qdim", qd[i]}};
      if (spin) row["dim_spin"] = spin_dim[i];
      rows.push_back(row);
    }
    json doc{{"family", family_name(c.family)}, {"rank", *c.rank}, {"ell", *c.ell}, {"z", qp.z()}, {"labels", rows}};
    round_numbers(doc);
    out << doc.dump(2) << "\n";
    return 0;
  }
  const bool csv = c.format == Format::kCsv;
  out << std::setprecision(12);
  if (csv) {
    out << "weight,Dim,qdim" << (spin ? ",dim_spin" : "") << "\n";
  } else {
    out << std::left << std::setw(24) << "weight" << std::setw(22) << "Dim" << std::setw(22) << "qdim" << (spin ? "dim_spin" : "")
        << "\n";
  }
  for (std::size_t i = 0; i < dim.labels.size(); ++i) {
    if (csv) {
      out << quoted(format_weight(dim.labels[i])) << "," << dim.values[i] << "," << qd[i];
      if (spin) out << "," << spin_dim[i];
    } else {
      out << std::left << std::setw(24) << dim.labels[i].to_string() << std::setw(22) << dim.values[i] << std::setw(22) << qd[i];
      if (spin) out << spin_dim[i];
    }
    out << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::vector<std::pair<int, int>> grid = c.grid;
  if (grid.empty()) {
    if (c.rank && c.ell) {
      grid = {{*c.rank, *c.ell}};
    } else if (c.rank || c.ell) {
      throw ParseError("give both --rank and --ell, or neither to run the default grid");
    } else {
      grid = default_verify_grid();
    }
  }
  // validate every instance before doing any work
  for (const auto& [k, ell] : grid) AlcoveParams(RootDatum(c.family, k), ell);

  bool all_ok = true;
  json instances = json::array();
  std::ostringstream text;
  for (const auto& [k, ell] : grid) {
    const auto results = verify_instance(c.family, k, ell);
    bool ok = true;
    json checks = json::array();
    for (const auto& r : results) {
      ok = ok && r.passed;
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      const std::string tag = family_name(c.family) + std::to_string(k) + " l=" + std::to_string(ell);
      if (c.format == Format::kCsv) {
        text << tag << "," << r.name << "," << (r.passed ? "pass" : "fail") << "," << quoted(r.detail) << "\n";
      } else {
        text << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(12) << tag << std::setw(36) << r.name << r.detail << "\n";
      }
    }
    all_ok = all_ok && ok;
    instances.push_back({{"family", family_name(c.family)}, {"rank", k}, {"ell", ell}, {"ok", ok}, {"checks", checks}});
  }
  if (c.format == Format::kJson) {
    out << json{{"ok", all_ok}, {"instances", instances}}.dump(2) << "\n";
  } else {
    if (c.format == Format::kCsv) out << "instance,check,result,detail\n";
    out << text.str();
    if (c.format == Format::kTable) out << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
  }
  return all_ok ? 0 : 1;
}

int cmd_duality(const RunConfig& c, std::ostream& out) {
  if (c.family != Family::B) throw ConfigurationError("duality reports are built from the type B side");
  if (!c.rank || !c.ell) throw ParseError("--rank and --ell are required");
  json report = duality_report(*c.rank, *c.ell);
  bool ok = report["psi_bijective"].get<bool>() && report["homeq_ok"].get<bool>() && report["bratteli_ok"].get<bool>();
  if (!report["ranklevel"].is_null()) ok = ok && report["ranklevel"]["ok"].get<bool>();
  if (c.format == Format::kJson) {
    out << report.dump(2) << "\n";
  } else {
    const bool csv = c.format == Format::kCsv;
    out << (csv ? "diagram,psi\n" : "diagram                 psi\n");
    for (const auto& row : report["psi"]) {
      const FerrersDiagram d(row[0].get<std::vector<int>>());
      const Weight w(row[1].get<std::vector<int>>());
      if (csv) {
        out << quoted(d.to_string()) << "," << quoted(format_weight(w)) << "\n";
      } else {
        out << std::left << std::setw(24) << d.to_string() << w.to_string() << "\n";
      }
    }
    if (!csv) {
      out << "psi bijective: " << report["psi_bijective"] << ", box graph equal: " << report["homeq_ok"]
          << ", bratteli n<=6: " << report["bratteli_ok"] << ", rank-level: " << report["ranklevel"].dump() << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_unitarity(const RunConfig& c, std::ostream& out) {
  if (c.family != Family::B) throw ConfigurationError("the unitarity audit is stated for type B");
  std::vector<std::pair<int, int>> grid = c.grid;
  if (grid.empty()) {
    if (c.rank && c.ell) {
      grid = {{*c.rank, *c.ell}};
    } else if (c.rank || c.ell) {
      throw ParseError("give both --rank and --ell, or neither to scan the grid");
    } else {
      grid = conclusive_grid(c.max_ell);
    }
  }
  for (const auto& [k, ell] : grid) AlcoveParams(RootDatum(Family::B, k), ell, Nondegeneracy::kRelaxed);
  bool ok = true;
  json reports = json::array();
  std::ostringstream text;
  text << std::setprecision(12);
  if (c.format == Format::kCsv) text << "k,ell,z,h,dim_box,margin,strict,separated,witness,witness_qdim\n";
  for (const auto& [k, ell] : grid) {
    const UnitarityReport rep = audit(k, ell);
    if (rep.conclusive) ok = ok && rep.ok();
    reports.push_back(to_json(rep));
    if (c.format == Format::kCsv) {
      for (const auto& r : rep.rows) {
        text << k << "," << ell << "," << r.z << "," << r.h << "," << r.dim_box << "," << r.margin << "," << r.strict << ","
             << r.separated << "," << (r.witness ? quoted(r.witness->tau.to_string()) : "") << ",";
        if (r.witness) text << r.witness->value;
        text << "\n";
      }
    } else if (c.format == Format::kTable) {
      text << to_table(rep) << "\n";
    }
  }
  if (c.format == Format::kJson) {
    json doc{{"ok", ok}, {"reports", reports}};
    round_numbers(doc);
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return ok ? 0 : 1;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  std::vector<int> doubled;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t()");
    const auto e = item.find_last_not_of(" \t()");
    if (b == std::string::npos) throw ParseError("empty weight entry in '" + text + "'");
    item = item.substr(b, e - b + 1);
    try {
      std::size_t used = 0;
      const auto slash = item.find('/');
      if (slash == std::string::npos) {
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw ParseError("");
        doubled.push_back(2 * v);
      } else {
        const std::string num = item.substr(0, slash), den = item.substr(slash + 1);
        const int n = std::stoi(num, &used);
        if (used != num.size()) throw ParseError("");
        if (den != "2") throw ParseError("");
        if (n % 2 == 0) throw ParseError("");
        doubled.push_back(n);
      }
    } catch (const std::exception&) {
      throw ParseError("malformed weight entry '" + item + "': use integers or odd n/2");
    }
  }
  if (doubled.empty()) throw ParseError("empty weight");
  if (!text.empty() && text.back() == ',') throw ParseError("trailing comma in weight '" + text + "'");
  for (int d : doubled) {
    if ((d - doubled.front()) % 2 != 0) throw ParseError("weight '" + text + "' mixes integral and half-integral entries");
  }
  return Weight(std::move(doubled));
}

std::string format_weight(const Weight& w) {
  std::string out;
  for (int i = 0; i < w.rank(); ++i) {
    const int d = w.doubled_at(i);
    if (i) out += ",";
    out += d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2";
  }
  return out;
}

std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw ParseError("");
      std::size_t u1 = 0, u2 = 0;
      const std::string a = item.substr(0, colon), b = item.substr(colon + 1);
      const int k = std::stoi(a, &u1);
      const int ell = std::stoi(b, &u2);
      if (u1 != a.size() || u2 != b.size()) throw ParseError("");
      out.emplace_back(k, ell);
    } catch (const std::exception&) {
      throw ParseError("malformed grid entry '" + item + "': expected k:ell");
    }
  }
  if (out.empty()) throw ParseError("empty grid");
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output) {
    file.open(*config.output);
    if (!file) {
      err << "error: cannot open " << *config.output << " for writing\n";
      return 2;
    }
    sink = &file;
  }
  try {
    switch (config.command) {
      case Command::kAlcove: return cmd_alcove(config, *sink);
      case Command::kFuse: return cmd_fuse(config, *sink);
      case Command::kMatrix: return cmd_matrix(config, *sink);
      case Command::kChars: return cmd_chars(config, *sink);
      case Command::kVerify: return cmd_verify(config, *sink);
      case Command::kDuality: return cmd_duality(config, *sink);
      case Command::kUnitarity: return cmd_unitarity(config, *sink);
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidRank& e) {
    err << "invalid rank: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion rules, characters and duality checks for type B and C quantum groups at odd roots of unity"};
  app.require_subcommand(1);

  RunConfig config;
  std::string family = "B", format = "json", lhs, rhs, grid, output;
  int rank = 0, ell = 0, z = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", family, "Lie type")->check(CLI::IsMember({"B", "C", "b", "c"}));
    sub->add_option("--rank", rank, "rank k (B) or r (C)");
    sub->add_option("--ell", ell, "odd level l");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--output", output, "write the report to this file");
  };

  auto* alcove = app.add_subcommand("alcove", "list the labels of the alcove");
  auto* fuse_cmd = app.add_subcommand("fuse", "fusion coefficients N_{lhs rhs}^nu");
  auto* matrix = app.add_subcommand("matrix", "fusion matrix of one label");
  auto* chars = app.add_subcommand("chars", "positive character, quantum dimensions and spin dimensions at z");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  auto* duality = app.add_subcommand("duality", "Ferrers-diagram relabeling and rank-level report");
  auto* unitarity = app.add_subcommand("unitarity", "unitarity-failure audit");
  for (auto* sub : {alcove, fuse_cmd, matrix, chars, verify, duality, unitarity}) common(sub);
  fuse_cmd->add_option("--lhs", lhs, "weight such as 1,0 or 3/2,1/2");
  fuse_cmd->add_option("--rhs", rhs, "weight");
  fuse_cmd->add_flag("--all", config.all_pairs, "emit the whole fusion table");
  matrix->add_option("--lhs", lhs, "label whose fusion matrix is printed");
  chars->add_option("--z", z, "q = exp(z pi i / l), default 1");
  verify->add_option("--grid", grid, "instances as k:ell,k:ell,...");
  unitarity->add_option("--grid", grid, "instances as k:ell,k:ell,...");
  unitarity->add_option("--max-ell", config.max_ell, "scan every conclusive (k, l) with l up to this bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {alcove, Command::kAlcove}, {fuse_cmd, Command::kFuse},     {matrix, Command::kMatrix},
      {chars, Command::kChars},   {verify, Command::kVerify},     {duality, Command::kDuality},
      {unitarity, Command::kUnitarity}};
  CLI::App* chosen = nullptr;
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) {
      config.command = cmd;
      chosen = sub;
    }
  }
  if (!chosen) {
    err << "usage error: a subcommand is required\n";
    return 2;
  }
  const auto given = [&](const char* name) {
    const CLI::Option* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  try {
    config.family = parse_family(family);
    if (given("--rank")) config.rank = rank;
    if (given("--ell")) config.ell = ell;
    if (given("--z")) config.z = z;
    if (!lhs.empty()) config.lhs = parse_weight(lhs);
    if (!rhs.empty()) config.rhs = parse_weight(rhs);
    if (!grid.empty()) config.grid = parse_grid(grid);
    if (!output.empty()) config.output = output;
    config.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kTable;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return run(config, out, err);
}

}  // namespace bcfusion::cli
