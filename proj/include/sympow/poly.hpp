#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

struct Exponents {
  int x = 0;
  int y = 0;
  int z = 0;

  int total() const { return x + y + z; }
  auto operator<=>(const Exponents&) const = default;
};

// Sparse polynomial in x, y, z over Rational. Only nonzero coefficients
// are stored; term order is the exponent order of Exponents.
class Poly {
 public:
  Poly() = default;

  static Poly zero() { return Poly(); }

  static Poly constant(Rational c) { return monomial({0, 0, 0}, std::move(c)); }

  static Poly monomial(Exponents e, Rational c = Rational(1)) {
    Poly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }

  static Poly var_x() { return monomial({1, 0, 0}); }
  static Poly var_y() { return monomial({0, 1, 0}); }
  static Poly var_z() { return monomial({0, 0, 1}); }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Maximum total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.total();
    for (const auto& [e, c] : terms_) {
      if (e.total() != d) return false;
    }
    return true;
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Poly graded_component(int d) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (e.total() == d) out.terms_.emplace(e, c);
    }
    return out;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly operator-() const {
    Poly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term({ea.x + eb.x, ea.y + eb.y, ea.z + eb.z}, ca * cb);
      }
    }
    return out;
  }

  friend Poly operator*(const Rational& c, const Poly& p) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [e, v] : p.terms_) out.terms_.emplace(e, c * v);
    return out;
  }

  friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

  Poly pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly out = constant(1);
    Poly base = *this;
    while (k > 0) {
      if (k & 1) out = out * base;
      base = base * base;
      k >>= 1;
    }
    return out;
  }

  Rational evaluate(const std::array<Rational, 3>& at) const {
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
      out += c * rational_pow(at[0], e.x) * rational_pow(at[1], e.y) *
             rational_pow(at[2], e.z);
    }
    return out;
  }

  // Substitutes var_i -> sum_j image[i][j] * var_j.
  Poly substitute_linear(const std::array<std::array<Rational, 3>, 3>& image) const {
    std::array<Poly, 3> lin;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Exponents e;
        (j == 0 ? e.x : j == 1 ? e.y : e.z) = 1;
        lin[i].add_term(e, image[i][j]);
      }
    }
    std::array<int, 3> max_exp = {0, 0, 0};
    for (const auto& [e, c] : terms_) {
      max_exp[0] = std::max(max_exp[0], e.x);
      max_exp[1] = std::max(max_exp[1], e.y);
      max_exp[2] = std::max(max_exp[2], e.z);
    }
    std::array<std::vector<Poly>, 3> powers;
    for (int i = 0; i < 3; ++i) {
      powers[i].reserve(static_cast<std::size_t>(max_exp[i]) + 1);
      powers[i].push_back(Poly::constant(1));
      for (int k = 1; k <= max_exp[i]; ++k) {
        powers[i].push_back(powers[i].back() * lin[i]);
      }
    }
    Poly out;
    for (const auto& [e, c] : terms_) {
      out += c * (powers[0][static_cast<std::size_t>(e.x)] *
                  powers[1][static_cast<std::size_t>(e.y)] *
                  powers[2][static_cast<std::size_t>(e.z)]);
    }
    return out;
  }

  // "c*x^a*y^b*z^c + ..." with terms in lexicographic exponent order,
  // largest x power first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = c < 0;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const Rational mag = negative ? Rational(-c) : c;
      std::string mono;
      auto append_var = [&mono](const char* name, int exp) {
        if (exp == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (exp > 1) mono += "^" + std::to_string(exp);
      };
      append_var("x", e.x);
      append_var("y", e.y);
      append_var("z", e.z);
      if (mono.empty()) {
        out += sympow::to_string(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += sympow::to_string(mag) + "*" + mono;
      }
    }
    return out;
  }

  bool operator==(const Poly& other) const { return terms_ == other.terms_; }

 private:
  std::map<Exponents, Rational> terms_;
};

// A point of the projective plane. Coordinates are normalized so the last
// nonzero one is 1, which makes equality plain componentwise comparison.
struct ProjPoint {
  std::array<Rational, 3> coords;

  explicit ProjPoint(std::array<Rational, 3> raw) : coords(std::move(raw)) {
    int last = -1;
    for (int i = 2; i >= 0; --i) {
      if (coords[static_cast<std::size_t>(i)] != 0) {
        last = i;
        break;
      }
    }
    if (last < 0) throw std::invalid_argument("ProjPoint: all coordinates are zero");
    const Rational scale = coords[static_cast<std::size_t>(last)];
    for (auto& c : coords) c /= scale;
  }

  ProjPoint(Rational a, Rational b, Rational c)
      : ProjPoint(std::array<Rational, 3>{std::move(a), std::move(b), std::move(c)}) {}

  bool operator==(const ProjPoint&) const = default;
};

namespace detail {

// Invertible change of coordinates whose third basis vector is p, so the
// point lands at [0:0:1] in the new chart. image[i][j] is the coefficient
// of new variable j in old variable i.
inline std::array<std::array<Rational, 3>, 3> chart_through(const ProjPoint& p,
                                                            int variant = 0) {
  int last = 0;
  for (int i = 2; i >= 0; --i) {
    if (p.coords[static_cast<std::size_t>(i)] != 0) {
      last = i;
      break;
    }
  }
  std::array<std::array<Rational, 3>, 3> image{};
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == last) continue;
    image[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = 1;
    ++col;
  }
  for (int i = 0; i < 3; ++i) {
    image[static_cast<std::size_t>(i)][2] = p.coords[static_cast<std::size_t>(i)];
  }
  if (variant == 1) {
    // Shear the first chart column by p; still invertible, same point.
    for (int i = 0; i < 3; ++i) {
      image[static_cast<std::size_t>(i)][0] += p.coords[static_cast<std::size_t>(i)];
    }
  }
  return image;
}

}  // namespace detail

// Largest k such that f vanishes to order k at p: move p to [0:0:1] by an
// invertible linear change of coordinates and read off the smallest
// combined degree in the first two variables. Pure coefficient
// truncation, exact in any characteristic. The chart choice does not
// affect the answer; chart_variant picks among two equivalent maps so
// that independence can be exercised directly.
inline int vanishing_order(const Poly& f, const ProjPoint& p, int chart_variant = 0) {
  if (f.is_zero()) {
    throw std::domain_error("vanishing_order: undefined for the zero polynomial");
  }
  const Poly g = f.substitute_linear(detail::chart_through(p, chart_variant));
  int order = -1;
  for (const auto& [e, c] : g.terms()) {
    const int local = e.x + e.y;
    if (order < 0 || local < order) order = local;
  }
  return order;
}

}  // namespace sympow
