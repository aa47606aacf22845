#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sympow/poly.hpp"

namespace sympow {

enum class ConfigKind {
  AlmostCollinear,            // n points on the line z = 0 plus one off it
  NearlyCompleteIntersection  // n points on each of x = 0 and y = 0 plus their intersection
};

struct UnsupportedSizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParamsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Validated point configuration with the derived form F, the generators
// of its ideal and the point list. Immutable after construction.
struct Config {
  ConfigKind kind = ConfigKind::AlmostCollinear;
  int n = 0;
  std::vector<Rational> slopes;  // AC: l_2..l_n
  std::vector<Rational> alphas;  // NCI: points on x = 0
  std::vector<Rational> betas;   // NCI: points on y = 0
  Poly F;
  std::vector<Poly> generators;
  std::vector<ProjPoint> points;
};

namespace detail {

inline void check_distinct_nonzero(const std::vector<Rational>& values, const char* what) {
  std::set<Rational> seen;
  for (const auto& v : values) {
    if (v == 0) {
      throw InvalidParamsError(std::string(what) + " must be nonzero");
    }
    if (!seen.insert(v).second) {
      throw InvalidParamsError(std::string(what) + " must be distinct");
    }
  }
}

}  // namespace detail

// Almost collinear configuration: p_1 = [0:1:0] and p_i = [l_i:1:0] on the
// line z = 0 plus p_0 = [0:0:1]. F = x * prod(x - l_i y) has degree n and
// x^n as one of its terms; I = (xz, yz, F).
inline Config make_ac(int n, std::vector<Rational> slopes) {
  if (n < 3) {
    throw UnsupportedSizeError("almost collinear configurations need n >= 3");
  }
  if (static_cast<int>(slopes.size()) != n - 1) {
    throw InvalidParamsError("expected n - 1 slopes, got " +
                             std::to_string(slopes.size()));
  }
  detail::check_distinct_nonzero(slopes, "slopes");

  Config cfg;
  cfg.kind = ConfigKind::AlmostCollinear;
  cfg.n = n;
  cfg.slopes = std::move(slopes);

  Poly f = Poly::var_x();
  for (const auto& l : cfg.slopes) {
    f = f * (Poly::var_x() - l * Poly::var_y());
  }
  cfg.F = f;
  cfg.generators = {Poly::var_x() * Poly::var_z(), Poly::var_y() * Poly::var_z(),
                    cfg.F};

  cfg.points.emplace_back(Rational(0), Rational(0), Rational(1));
  cfg.points.emplace_back(Rational(0), Rational(1), Rational(0));
  for (const auto& l : cfg.slopes) {
    cfg.points.emplace_back(l, Rational(1), Rational(0));
  }
  return cfg;
}

// Nearly-complete intersection: p_0 = [0:0:1], points [0:1:alpha_i] on
// x = 0 and [1:0:beta_i] on y = 0.
// F = z^n - prod(z - beta_i x) - prod(z - alpha_i y); I = (xy, xF, yF).
inline Config make_nci(int n, std::vector<Rational> alphas, std::vector<Rational> betas) {
  if (n < 1) {
    throw UnsupportedSizeError("nearly-complete intersections need n >= 1");
  }
  if (static_cast<int>(alphas.size()) != n || static_cast<int>(betas.size()) != n) {
    throw InvalidParamsError("expected n values on each line");
  }
  detail::check_distinct_nonzero(alphas, "alphas");
  detail::check_distinct_nonzero(betas, "betas");

  Config cfg;
  cfg.kind = ConfigKind::NearlyCompleteIntersection;
  cfg.n = n;
  cfg.alphas = std::move(alphas);
  cfg.betas = std::move(betas);

  Poly beta_prod = Poly::constant(1);
  for (const auto& b : cfg.betas) {
    beta_prod = beta_prod * (Poly::var_z() - b * Poly::var_x());
  }
  Poly alpha_prod = Poly::constant(1);
  for (const auto& a : cfg.alphas) {
    alpha_prod = alpha_prod * (Poly::var_z() - a * Poly::var_y());
  }
  cfg.F = Poly::monomial({0, 0, n}) - beta_prod - alpha_prod;
  cfg.generators = {Poly::var_x() * Poly::var_y(), Poly::var_x() * cfg.F,
                    Poly::var_y() * cfg.F};

  cfg.points.emplace_back(Rational(0), Rational(0), Rational(1));
  for (const auto& a : cfg.alphas) {
    cfg.points.emplace_back(Rational(0), Rational(1), a);
  }
  for (const auto& b : cfg.betas) {
    cfg.points.emplace_back(Rational(1), Rational(0), b);
  }
  return cfg;
}

inline std::string kind_name(ConfigKind kind) {
  return kind == ConfigKind::AlmostCollinear ? "ac" : "nci";
}

}  // namespace sympow
