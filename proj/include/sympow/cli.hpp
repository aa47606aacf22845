#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sympow/json_io.hpp"

namespace sympow {

// Containment decided by the brute-force graded route: the symbolic piece
// must sit inside the ordinary piece in every degree up to the bound.
// Agrees with the closed form whenever the bound covers the witness
// degree, which the default bound does.
inline Verdict contains_by_oracle(const Config& cfg, int m, int r, int max_degree) {
  Verdict v;
  v.m = m;
  v.r = r;
  v.method = Method::Oracle;
  v.threshold = containment_threshold(cfg, r);
  SpaceCache cache(cfg);
  v.contained = true;
  for (int d = 0; d <= max_degree; ++d) {
    if (!graded_contains(cache.get(IdealSpec::power(r), d),
                         cache.get(IdealSpec::symbolic(m), d))) {
      v.contained = false;
      break;
    }
  }
  if (!v.contained) v.witness = noncontainment_witness(cfg, m, r);
  return v;
}

namespace cli_detail {

inline int default_decide_degree(const Config& cfg, int m, int r) {
  return (m + r) * (cfg.n + 1) + cfg.n;
}

inline ClaimBounds default_bounds(ClaimId claim, const Config& cfg) {
  ClaimBounds b;
  switch (claim) {
    case ClaimId::BasisSym:
    case ClaimId::BasisPow:
      b.m_max = 3;
      b.r_max = 3;
      b.max_degree = 10;
      break;
    case ClaimId::Containment:
      b.m_max = 4;
      b.r_max = 4;
      b.max_degree = -1;  // sized from the pair bounds
      break;
    case ClaimId::AcSympowSplit:
      b.t_max = 2;
      b.max_degree = 2 * cfg.n * 2 + 2;
      break;
    case ClaimId::NciSplitEven:
      b.m_max = 6;
      b.max_degree = 12;
      break;
    case ClaimId::NciSplitOdd:
      b.m_max = 4;
      b.max_degree = 12;
      break;
    case ClaimId::NciSymIProduct:
      b.m_max = 3;
      b.max_degree = 10;
      break;
    case ClaimId::Madic1:
      b.r_max = 2;
      b.max_degree = 12;
      break;
    case ClaimId::Madic2:
      b.t_max = 2;
      b.m_max = 2;
      b.max_degree = 12;
      break;
    case ClaimId::Alpha:
      b.m_max = 5;
      b.r_max = 5;
      b.max_degree = 12;
      break;
  }
  return b;
}

inline std::vector<ClaimId> catalogue_for(const Config& cfg) {
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    return {ClaimId::BasisSym, ClaimId::BasisPow, ClaimId::Containment,
            ClaimId::AcSympowSplit, ClaimId::Madic1, ClaimId::Madic2, ClaimId::Alpha};
  }
  return {ClaimId::BasisSym,       ClaimId::BasisPow, ClaimId::Containment,
          ClaimId::NciSplitEven,   ClaimId::NciSplitOdd, ClaimId::NciSymIProduct,
          ClaimId::Madic1,         ClaimId::Madic2,   ClaimId::Alpha};
}

inline void print_verdict_human(const Config& cfg, const Verdict& v, std::ostream& out) {
  out << "I^(" << v.m << ") in I^" << v.r << ": "
      << (v.contained ? "contained" : "NOT contained") << "\n";
  out << "  method:    " << method_name(v.method) << "\n";
  out << "  threshold: m "
      << (cfg.kind == ConfigKind::AlmostCollinear ? ">" : ">=") << " "
      << to_string(v.threshold) << " gives containment\n";
  if (v.witness) {
    const OrderedJson w = element_to_json(cfg, *v.witness);
    out << "  witness:   " << w["poly"].get<std::string>() << "\n";
  }
}

inline void print_report_human(const Report& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& cell : report.cells) {
    if (!cell.pass) ++failed;
  }
  out << "claim " << claim_name(report.claim) << ": "
      << (report.all_pass ? "PASS" : "FAIL") << " (" << report.cells.size()
      << " cells, max degree " << report.max_degree << ")\n";
  if (failed > 0) {
    for (const auto& cell : report.cells) {
      if (cell.pass) continue;
      out << "  FAIL at d=" << cell.d << " params{";
      for (std::size_t k = 0; k < cell.params.size(); ++k) {
        if (k) out << ",";
        out << cell.params[k].first << "=" << cell.params[k].second;
      }
      out << "}";
      if (cell.detail) out << ": " << *cell.detail;
      out << "\n";
    }
  }
}

inline void warn_scope(const Config& cfg, std::ostream& err) {
  if (auto note = scope_note(cfg)) err << "note: " << *note << "\n";
}

}  // namespace cli_detail

// Runs the command line given as plain arguments (program name excluded).
// Exit codes: 0 success, 2 invalid input, 3 verification failure.
inline int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact containment of symbolic powers in ordinary powers for "
               "point configurations on two lines"};
  app.require_subcommand(1);

  std::string config_path;
  bool json_mode = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "configuration JSON file")->required();
    cmd->add_flag("--json", json_mode, "emit one JSON document on stdout");
  };

  auto* decide_cmd = app.add_subcommand("decide", "decide one containment pair");
  int m = 0, r = 0, max_degree = -1;
  std::string method = "closed-form";
  add_common(decide_cmd);
  decide_cmd->add_option("--m", m, "symbolic exponent m")->required();
  decide_cmd->add_option("--r", r, "ordinary exponent r")->required();
  decide_cmd->add_option("--method", method, "closed-form | lattice | oracle")
      ->check(CLI::IsMember({"closed-form", "lattice", "oracle"}));
  decide_cmd->add_option("--max-degree", max_degree, "degree bound for --method oracle");

  auto* resurgence_cmd = app.add_subcommand("resurgence", "exact resurgence");
  int estimate_to = 0;
  add_common(resurgence_cmd);
  resurgence_cmd->add_option("--estimate", estimate_to,
                             "largest failing ratio m/r over the box m, r <= N");

  auto* alpha_cmd = app.add_subcommand("alpha", "least degree of the ideal");
  int alpha_m = 0, alpha_r = 0;
  add_common(alpha_cmd);
  auto* opt_alpha_m = alpha_cmd->add_option("--symbolic", alpha_m, "symbolic power m");
  auto* opt_alpha_r = alpha_cmd->add_option("--power", alpha_r, "ordinary power r");
  opt_alpha_m->excludes(opt_alpha_r);

  auto* basis_cmd = app.add_subcommand("basis", "list basis elements of one degree");
  int basis_degree = 0, basis_m = 0, basis_r = 0;
  add_common(basis_cmd);
  basis_cmd->add_option("--degree", basis_degree, "total degree")->required();
  auto* opt_basis_m = basis_cmd->add_option("--symbolic", basis_m, "restrict to the symbolic power");
  auto* opt_basis_r = basis_cmd->add_option("--power", basis_r, "restrict to the ordinary power");
  opt_basis_m->excludes(opt_basis_r);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification claim");
  std::string claim_arg;
  int v_m_max = -1, v_r_max = -1, v_t_max = -1, v_max_degree = -1, v_jobs = 0;
  add_common(verify_cmd);
  verify_cmd->add_option("--claim", claim_arg, "claim name or 'all'")->required();
  verify_cmd->add_option("--m-max", v_m_max, "bound on m");
  verify_cmd->add_option("--r-max", v_r_max, "bound on r");
  verify_cmd->add_option("--t-max", v_t_max, "bound on t");
  verify_cmd->add_option("--max-degree", v_max_degree, "degree bound");
  verify_cmd->add_option("--jobs", v_jobs, "worker count (0 = all cores)");

  try {
    std::vector<const char*> argv = {"sympow"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Config cfg;
  try {
    cfg = load_config_file(config_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cli_detail::warn_scope(cfg, err);

  try {
    if (decide_cmd->parsed()) {
      if (m < 1 || r < 1) {
        err << "error: --m and --r must be >= 1\n";
        return 2;
      }
      Verdict v;
      if (method == "closed-form") {
        v = contains(cfg, m, r);
      } else if (method == "lattice") {
        v = contains_by_witness(cfg, m, r);
      } else {
        const int bound =
            max_degree >= 0 ? max_degree : cli_detail::default_decide_degree(cfg, m, r);
        v = contains_by_oracle(cfg, m, r, bound);
      }
      if (json_mode) {
        out << verdict_to_json(cfg, v).dump() << "\n";
      } else {
        cli_detail::print_verdict_human(cfg, v, out);
      }
      return 0;
    }

    if (resurgence_cmd->parsed()) {
      if (resurgence_cmd->count("--estimate") > 0) {
        if (estimate_to < 2) {
          err << "error: --estimate needs N >= 2\n";
          return 2;
        }
        const Rational est = resurgence_estimate(cfg, estimate_to);
        if (json_mode) {
          OrderedJson doc;
          doc["resurgence_estimate"] = to_string(est);
          doc["N"] = estimate_to;
          out << doc.dump() << "\n";
        } else {
          out << to_string(est) << "\n";
        }
        return 0;
      }
      const Rational rho = resurgence(cfg);
      if (json_mode) {
        OrderedJson doc;
        doc["resurgence"] = to_string(rho);
        out << doc.dump() << "\n";
      } else {
        out << to_string(rho) << "\n";
      }
      return 0;
    }

    if (alpha_cmd->parsed()) {
      if ((alpha_cmd->count("--symbolic") > 0) == (alpha_cmd->count("--power") > 0)) {
        err << "error: pass exactly one of --symbolic or --power\n";
        return 2;
      }
      const BasisFilter filter = alpha_cmd->count("--symbolic") > 0
                                     ? BasisFilter::symbolic(alpha_m)
                                     : BasisFilter::power(alpha_r);
      if (filter.value < 1) {
        err << "error: the exponent must be >= 1\n";
        return 2;
      }
      const int a = alpha(cfg, filter);
      if (json_mode) {
        OrderedJson doc;
        doc["ideal"] = filter.kind == BasisFilter::Kind::Symbolic ? "symbolic" : "power";
        doc["value"] = filter.value;
        doc["alpha"] = a;
        out << doc.dump() << "\n";
      } else {
        out << a << "\n";
      }
      return 0;
    }

    if (basis_cmd->parsed()) {
      if (basis_degree < 0) {
        err << "error: --degree must be >= 0\n";
        return 2;
      }
      BasisFilter filter = BasisFilter::all();
      std::string filter_name = "all";
      if (basis_cmd->count("--symbolic") > 0) {
        filter = BasisFilter::symbolic(basis_m);
        filter_name = "symbolic";
      } else if (basis_cmd->count("--power") > 0) {
        filter = BasisFilter::power(basis_r);
        filter_name = "power";
      }
      if (filter.kind != BasisFilter::Kind::All && filter.value < 1) {
        err << "error: the exponent must be >= 1\n";
        return 2;
      }
      std::vector<BasisElem> elems;
      if (cfg.kind == ConfigKind::AlmostCollinear) {
        for (const auto& e : enumerate_basis_ac(cfg, basis_degree, filter)) {
          elems.emplace_back(e);
        }
      } else {
        for (const auto& e : enumerate_basis_nci(cfg, basis_degree, filter)) {
          elems.emplace_back(e);
        }
      }
      if (json_mode) {
        OrderedJson doc;
        doc["degree"] = basis_degree;
        doc["filter"] = filter_name;
        if (filter.kind != BasisFilter::Kind::All) doc["value"] = filter.value;
        doc["count"] = elems.size();
        OrderedJson list = OrderedJson::array();
        for (const auto& e : elems) list.push_back(element_to_json(cfg, e));
        doc["elements"] = std::move(list);
        out << doc.dump() << "\n";
      } else {
        for (const auto& e : elems) {
          const OrderedJson j = element_to_json(cfg, e);
          if (cfg.kind == ConfigKind::AlmostCollinear) {
            out << "(" << j["i"] << "," << j["j"] << "," << j["l"] << ")  ";
          } else {
            out << "(" << j["a"] << "," << j["b"] << "," << j["c"] << "," << j["d"]
                << ")  ";
          }
          out << j["poly"].get<std::string>() << "\n";
        }
      }
      return 0;
    }

    // verify
    std::vector<ClaimId> claims;
    if (claim_arg == "all") {
      claims = cli_detail::catalogue_for(cfg);
    } else {
      const auto id = claim_from_name(claim_arg);
      if (!id) {
        err << "error: unknown claim '" << claim_arg << "'\n";
        return 2;
      }
      claims = {*id};
    }
    std::vector<Report> reports;
    bool all_pass = true;
    for (ClaimId id : claims) {
      ClaimBounds bounds = cli_detail::default_bounds(id, cfg);
      if (verify_cmd->count("--m-max") > 0) bounds.m_max = v_m_max;
      if (verify_cmd->count("--r-max") > 0) bounds.r_max = v_r_max;
      if (verify_cmd->count("--t-max") > 0) bounds.t_max = v_t_max;
      if (verify_cmd->count("--max-degree") > 0) bounds.max_degree = v_max_degree;
      bounds.jobs = v_jobs;
      reports.push_back(verify_claim(cfg, id, bounds));
      all_pass = all_pass && reports.back().all_pass;
    }
    if (json_mode) {
      if (reports.size() == 1) {
        out << report_to_json(reports.front()).dump() << "\n";
      } else {
        OrderedJson doc;
        doc["claim"] = "all";
        doc["cfg"] = config_to_json(cfg);
        OrderedJson list = OrderedJson::array();
        for (const auto& rep : reports) list.push_back(report_to_json(rep));
        doc["reports"] = std::move(list);
        doc["all_pass"] = all_pass;
        out << doc.dump() << "\n";
      }
    } else {
      for (const auto& rep : reports) cli_detail::print_report_human(rep, out);
    }
    return all_pass ? 0 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sympow
