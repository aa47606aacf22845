#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sympow/decide.hpp"
#include "sympow/verify.hpp"

namespace sympow {

// All documents use insertion-ordered objects and serialize rationals as
// "p/q" strings, so emitted JSON re-serializes byte for byte.
using OrderedJson = nlohmann::ordered_json;

inline std::string method_name(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::LatticeWitness: return "lattice_witness";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

// Reports on the degenerate single-point-per-line case carry a note: the
// closed forms are stated for larger configurations and are evaluated
// verbatim here rather than re-derived.
inline std::optional<std::string> scope_note(const Config& cfg) {
  if (cfg.kind == ConfigKind::NearlyCompleteIntersection && cfg.n == 1) {
    return "n=1 (one point per line) is a degenerate nearly-complete "
           "intersection outside the primary range n > 1; closed forms are "
           "evaluated as stated";
  }
  return std::nullopt;
}

inline OrderedJson config_to_json(const Config& cfg) {
  OrderedJson doc;
  doc["kind"] = kind_name(cfg.kind);
  doc["n"] = cfg.n;
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    OrderedJson slopes = OrderedJson::array();
    for (const auto& s : cfg.slopes) slopes.push_back(to_string(s));
    doc["slopes"] = std::move(slopes);
  } else {
    OrderedJson alphas = OrderedJson::array();
    for (const auto& a : cfg.alphas) alphas.push_back(to_string(a));
    doc["alphas"] = std::move(alphas);
    OrderedJson betas = OrderedJson::array();
    for (const auto& b : cfg.betas) betas.push_back(to_string(b));
    doc["betas"] = std::move(betas);
  }
  return doc;
}

inline std::vector<Rational> parse_rational_array(const OrderedJson& arr,
                                                  const char* field) {
  if (!arr.is_array()) {
    throw InvalidParamsError(std::string(field) + " must be an array of rational strings");
  }
  std::vector<Rational> out;
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw InvalidParamsError(std::string(field) + " entries must be strings like \"p/q\"");
    }
    out.push_back(parse_rational(item.get<std::string>()));
  }
  return out;
}

inline Config config_from_json(const OrderedJson& doc) {
  if (!doc.is_object()) throw InvalidParamsError("configuration must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw InvalidParamsError("configuration needs a string field \"kind\"");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InvalidParamsError("configuration needs an integer field \"n\"");
  }
  const std::string kind = doc["kind"].get<std::string>();
  const int n = doc["n"].get<int>();
  if (kind == "ac") {
    if (!doc.contains("slopes")) throw InvalidParamsError("ac configuration needs \"slopes\"");
    return make_ac(n, parse_rational_array(doc["slopes"], "slopes"));
  }
  if (kind == "nci") {
    if (!doc.contains("alphas") || !doc.contains("betas")) {
      throw InvalidParamsError("nci configuration needs \"alphas\" and \"betas\"");
    }
    return make_nci(n, parse_rational_array(doc["alphas"], "alphas"),
                    parse_rational_array(doc["betas"], "betas"));
  }
  throw InvalidParamsError("unknown configuration kind \"" + kind + "\"");
}

inline Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open configuration file: " + path);
  OrderedJson doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::runtime_error("cannot parse configuration file " + path + ": " + e.what());
  }
  return config_from_json(doc);
}

inline OrderedJson element_to_json(const Config& cfg, const BasisElem& elem) {
  OrderedJson doc;
  if (const auto* ac = std::get_if<AcElem>(&elem)) {
    doc["i"] = ac->i;
    doc["j"] = ac->j;
    doc["l"] = ac->l;
    doc["poly"] = realize(cfg, *ac).to_string();
  } else {
    const auto& e = std::get<NciElem>(elem);
    doc["a"] = e.a;
    doc["b"] = e.b;
    doc["c"] = e.c;
    doc["d"] = e.d;
    doc["poly"] = realize(cfg, e).to_string();
  }
  return doc;
}

inline OrderedJson verdict_to_json(const Config& cfg, const Verdict& v) {
  OrderedJson doc;
  doc["contained"] = v.contained;
  doc["method"] = method_name(v.method);
  doc["threshold"] = to_string(v.threshold);
  doc["witness"] = v.witness ? element_to_json(cfg, *v.witness) : OrderedJson(nullptr);
  doc["m"] = v.m;
  doc["r"] = v.r;
  if (auto note = scope_note(cfg)) doc["scope_note"] = *note;
  return doc;
}

inline OrderedJson report_to_json(const Report& report) {
  OrderedJson doc;
  doc["claim"] = claim_name(report.claim);
  doc["cfg"] = config_to_json(report.cfg);
  OrderedJson cells = OrderedJson::array();
  for (const auto& cell : report.cells) {
    OrderedJson c;
    OrderedJson params;
    for (const auto& [key, value] : cell.params) params[key] = value;
    c["params"] = std::move(params);
    c["d"] = cell.d;
    c["pass"] = cell.pass;
    c["detail"] = cell.detail ? OrderedJson(*cell.detail) : OrderedJson(nullptr);
    cells.push_back(std::move(c));
  }
  doc["cells"] = std::move(cells);
  doc["all_pass"] = report.all_pass;
  doc["max_degree"] = report.max_degree;
  if (auto note = scope_note(report.cfg)) doc["scope_note"] = *note;
  return doc;
}

}  // namespace sympow
