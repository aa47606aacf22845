#pragma once

#include <array>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sympow/decide.hpp"
#include "sympow/exact_matrix.hpp"
#include "sympow/h_basis.hpp"

namespace sympow {

// ---------------------------------------------------------------------------
// Graded pieces.
//
// Everything below works degree by degree: the degree-d piece of an ideal
// is a row space of coefficient vectors over the monomial basis of R_d.
// Symbolic powers are produced from vanishing conditions at the
// configuration points, ordinary powers and products from generator
// products, so the two sides of every comparison travel independent
// routes.
// ---------------------------------------------------------------------------

inline long ambient_dim(int d) {
  return static_cast<long>(d + 1) * (d + 2) / 2;
}

// Monomials of total degree d, largest x power first.
inline std::vector<Exponents> monomials_of_degree(int d) {
  std::vector<Exponents> out;
  out.reserve(static_cast<std::size_t>(ambient_dim(d)));
  for (int x = d; x >= 0; --x) {
    for (int y = d - x; y >= 0; --y) {
      out.push_back({x, y, d - x - y});
    }
  }
  return out;
}

// Index map between homogeneous polynomials of one degree and coefficient
// rows over that degree's monomials.
class MonomialBasis {
 public:
  explicit MonomialBasis(int d) : d_(d), mons_(monomials_of_degree(d)) {
    for (std::size_t k = 0; k < mons_.size(); ++k) index_.emplace(mons_[k], k);
  }

  int degree() const { return d_; }
  const std::vector<Exponents>& monomials() const { return mons_; }

  std::size_t index_of(const Exponents& e) const { return index_.at(e); }

  std::vector<Rational> to_row(const Poly& p) const {
    std::vector<Rational> row(mons_.size(), Rational(0));
    for (const auto& [e, c] : p.terms()) {
      auto it = index_.find(e);
      if (it == index_.end()) {
        throw std::invalid_argument(
            "MonomialBasis::to_row: polynomial is not homogeneous of degree " +
            std::to_string(d_));
      }
      row[it->second] = c;
    }
    return row;
  }

  Poly to_poly(const std::vector<Rational>& row) const {
    Poly p;
    for (std::size_t k = 0; k < mons_.size(); ++k) p.add_term(mons_[k], row[k]);
    return p;
  }

 private:
  int d_;
  std::vector<Exponents> mons_;
  std::map<Exponents, std::size_t> index_;
};

// One degree of an ideal: a canonical reduced row basis over the degree's
// monomials. Equal spaces always carry identical matrices.
struct GradedSpace {
  int degree = 0;
  ExactMatrix basis;

  long rank() const { return static_cast<long>(basis.rows()); }
  long ambient() const { return ambient_dim(degree); }
};

inline RowSpaceBuilder builder_from(const GradedSpace& s) {
  RowSpaceBuilder b(static_cast<std::size_t>(ambient_dim(s.degree)));
  for (std::size_t r = 0; r < s.basis.rows(); ++r) b.insert(s.basis.row(r));
  return b;
}

inline bool graded_contains(const GradedSpace& a, const GradedSpace& b) {
  if (a.degree != b.degree) {
    throw std::invalid_argument("graded_contains: degree mismatch");
  }
  if (b.rank() > a.rank()) return false;
  return row_space_contains(a.basis, b.basis);
}

inline bool graded_equal(const GradedSpace& a, const GradedSpace& b) {
  if (a.degree != b.degree) {
    throw std::invalid_argument("graded_equal: degree mismatch");
  }
  return a.basis == b.basis;
}

// Exact intersection via orthogonal complements: the annihilator of a row
// space is its kernel, and the intersection annihilates the union of the
// two annihilators.
inline GradedSpace graded_intersection(const GradedSpace& a, const GradedSpace& b) {
  if (a.degree != b.degree) {
    throw std::invalid_argument("graded_intersection: degree mismatch");
  }
  const ExactMatrix ka = kernel_basis(a.basis);
  const ExactMatrix kb = kernel_basis(b.basis);
  return GradedSpace{a.degree, kernel_basis(stack(ka, kb))};
}

inline GradedSpace space_from_polys(int d, const std::vector<Poly>& polys) {
  const MonomialBasis basis(d);
  RowSpaceBuilder builder(static_cast<std::size_t>(ambient_dim(d)));
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    builder.insert(basis.to_row(p));
    if (builder.full()) break;
  }
  return GradedSpace{d, builder.matrix()};
}

// ---------------------------------------------------------------------------
// Ideal expressions.
// ---------------------------------------------------------------------------

enum class CIKind { XY, ZF, XYF };

// Expression tree naming an ideal built from the primitives the
// verification suite needs: symbolic powers, ordinary powers, powers of
// the irrelevant maximal ideal M = (x, y, z), the complete-intersection
// components, and products of these.
struct IdealSpec {
  enum class Kind { Symbolic, Power, MPower, CIComponent, Product };

  Kind kind = Kind::Power;
  int value = 0;
  CIKind ci = CIKind::XY;
  std::vector<IdealSpec> factors;

  static IdealSpec symbolic(int m) { return {Kind::Symbolic, m, CIKind::XY, {}}; }
  static IdealSpec power(int r) { return {Kind::Power, r, CIKind::XY, {}}; }
  static IdealSpec mpower(int t) { return {Kind::MPower, t, CIKind::XY, {}}; }
  static IdealSpec ci_component(CIKind which, int m) {
    return {Kind::CIComponent, m, which, {}};
  }
  static IdealSpec product(std::vector<IdealSpec> fs) {
    if (fs.empty()) throw std::invalid_argument("IdealSpec::product: no factors");
    if (fs.size() == 1) return fs.front();
    return {Kind::Product, 0, CIKind::XY, std::move(fs)};
  }

  std::string key() const {
    switch (kind) {
      case Kind::Symbolic: return "S" + std::to_string(value);
      case Kind::Power: return "P" + std::to_string(value);
      case Kind::MPower: return "M" + std::to_string(value);
      case Kind::CIComponent: {
        const char* name = ci == CIKind::XY ? "xy" : ci == CIKind::ZF ? "zF" : "xyF";
        return std::string("C:") + name + ":" + std::to_string(value);
      }
      case Kind::Product: {
        std::string out = "(";
        for (std::size_t k = 0; k < factors.size(); ++k) {
          if (k) out += "*";
          out += factors[k].key();
        }
        return out + ")";
      }
    }
    return "?";
  }
};

namespace detail {

// Coefficient matrix of the degree-d monomials after the linear change of
// coordinates sending the point to [0:0:1]: entry (row tau, column mu) is
// the coefficient of tau in the image of mu. Built level by level so each
// monomial costs one linear multiplication.
inline ExactMatrix point_condition_matrix(const ProjPoint& p, int d) {
  const auto image = chart_through(p);
  std::array<Poly, 3> lin;
  for (std::size_t i = 0; i < 3; ++i) {
    Poly l;
    l.add_term({1, 0, 0}, image[i][0]);
    l.add_term({0, 1, 0}, image[i][1]);
    l.add_term({0, 0, 1}, image[i][2]);
    lin[i] = l;
  }
  std::vector<Poly> images = {Poly::constant(1)};
  std::vector<Exponents> level_mons = monomials_of_degree(0);
  for (int level = 1; level <= d; ++level) {
    const MonomialBasis cur(level);
    std::vector<Poly> next(cur.monomials().size());
    std::vector<bool> done(next.size(), false);
    for (std::size_t k = 0; k < level_mons.size(); ++k) {
      for (std::size_t axis = 0; axis < 3; ++axis) {
        Exponents e = level_mons[k];
        (axis == 0 ? e.x : axis == 1 ? e.y : e.z) += 1;
        const std::size_t idx = cur.index_of(e);
        if (done[idx]) continue;
        next[idx] = images[k] * lin[axis];
        done[idx] = true;
      }
    }
    images = std::move(next);
    level_mons = cur.monomials();
  }
  const MonomialBasis basis(d);
  ExactMatrix m(basis.monomials().size(), basis.monomials().size());
  for (std::size_t col = 0; col < images.size(); ++col) {
    for (const auto& [e, c] : images[col].terms()) {
      m.at(basis.index_of(e), col) = c;
    }
  }
  return m;
}

}  // namespace detail

// Memoizing provider of graded pieces for one configuration. Thread safe;
// every entry is computed once and shared, and since the computations are
// pure the stored values do not depend on scheduling.
class SpaceCache {
 public:
  explicit SpaceCache(const Config& cfg) : cfg_(&cfg) {}

  const Config& config() const { return *cfg_; }

  GradedSpace get(const IdealSpec& spec, int d) {
    if (d < 0) throw std::invalid_argument("SpaceCache::get: negative degree");
    const std::string key = spec.key() + "@" + std::to_string(d);
    std::shared_ptr<std::shared_future<GradedSpace>> fut;
    std::shared_ptr<std::promise<GradedSpace>> prom;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = spaces_.find(key);
      if (it != spaces_.end()) {
        fut = it->second;
      } else {
        prom = std::make_shared<std::promise<GradedSpace>>();
        fut = std::make_shared<std::shared_future<GradedSpace>>(
            prom->get_future().share());
        spaces_.emplace(key, fut);
      }
    }
    if (prom) {
      try {
        prom->set_value(compute(spec, d));
      } catch (...) {
        prom->set_exception(std::current_exception());
      }
    }
    return fut->get();
  }

 private:
  GradedSpace compute(const IdealSpec& spec, int d) {
    switch (spec.kind) {
      case IdealSpec::Kind::Symbolic: return compute_symbolic(spec.value, d);
      case IdealSpec::Kind::Power:
        return span_of_products(cfg_->generators, spec.value, d);
      case IdealSpec::Kind::MPower:
        return span_of_products({Poly::var_x(), Poly::var_y(), Poly::var_z()},
                                spec.value, d);
      case IdealSpec::Kind::CIComponent:
        return span_of_products(ci_generators(spec.ci), spec.value, d);
      case IdealSpec::Kind::Product: {
        std::vector<IdealSpec> prefix(spec.factors.begin(), spec.factors.end() - 1);
        return multiply_pieces(IdealSpec::product(std::move(prefix)),
                               spec.factors.back(), d);
      }
    }
    throw std::logic_error("SpaceCache::compute: unknown spec kind");
  }

  std::vector<Poly> ci_generators(CIKind which) const {
    switch (which) {
      case CIKind::XY: return {Poly::var_x(), Poly::var_y()};
      case CIKind::ZF:
        if (cfg_->kind != ConfigKind::AlmostCollinear) {
          throw std::invalid_argument(
              "(z, F) component needs an almost collinear configuration");
        }
        return {Poly::var_z(), cfg_->F};
      case CIKind::XYF:
        if (cfg_->kind != ConfigKind::NearlyCompleteIntersection) {
          throw std::invalid_argument(
              "(xy, F) component needs a nearly-complete intersection");
        }
        return {Poly::var_x() * Poly::var_y(), cfg_->F};
    }
    throw std::logic_error("unknown CIKind");
  }

  // Kernel of the order >= m truncation conditions at every configuration
  // point, inside R_d.
  GradedSpace compute_symbolic(int m, int d) {
    if (m < 1) throw std::invalid_argument("symbolic power needs m >= 1");
    const MonomialBasis basis(d);
    const auto& mons = basis.monomials();
    std::vector<std::vector<Rational>> conditions;
    for (std::size_t pi = 0; pi < cfg_->points.size(); ++pi) {
      const std::shared_ptr<const ExactMatrix> pm = point_matrix(pi, d);
      for (std::size_t row = 0; row < mons.size(); ++row) {
        if (mons[row].x + mons[row].y >= m) continue;
        conditions.push_back(pm->row(row));
      }
    }
    ExactMatrix cond(conditions.size(), mons.size());
    for (std::size_t r = 0; r < conditions.size(); ++r) {
      for (std::size_t c = 0; c < mons.size(); ++c) cond.at(r, c) = conditions[r][c];
    }
    return GradedSpace{d, kernel_basis(cond)};
  }

  // Row space of {g * mu}: g a product of `power` generators, mu a
  // monomial of the complementary degree. Duplicate and dependent rows
  // disappear in the reduction.
  GradedSpace span_of_products(const std::vector<Poly>& gens, int power, int d) {
    if (power < 0) throw std::invalid_argument("ideal power needs exponent >= 0");
    const MonomialBasis basis(d);
    RowSpaceBuilder builder(static_cast<std::size_t>(ambient_dim(d)));
    std::vector<std::vector<Poly>> pow_tables(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      pow_tables[g].push_back(Poly::constant(1));
      for (int k = 1; k <= power; ++k) {
        pow_tables[g].push_back(pow_tables[g].back() * gens[g]);
      }
    }
    std::vector<int> exps(gens.size(), 0);
    enumerate_multisets(gens.size(), power, exps, [&](const std::vector<int>& e) {
      if (builder.full()) return;
      Poly prod = Poly::constant(1);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (e[g] > 0) prod = prod * pow_tables[g][static_cast<std::size_t>(e[g])];
      }
      const int deg = prod.degree();
      if (deg > d) return;
      for (const auto& mu : monomials_of_degree(d - deg)) {
        builder.insert(basis.to_row(prod * Poly::monomial(mu)));
        if (builder.full()) return;
      }
    });
    return GradedSpace{d, builder.matrix()};
  }

  template <typename Fn>
  static void enumerate_multisets(std::size_t slots, int total, std::vector<int>& exps,
                                  const Fn& fn, std::size_t at = 0) {
    if (at + 1 == slots) {
      exps[at] = total;
      fn(exps);
      return;
    }
    for (int take = total; take >= 0; --take) {
      exps[at] = take;
      enumerate_multisets(slots, total - take, exps, fn, at + 1);
    }
  }

  // Pairwise product of graded pieces. A factor M^t contributes all of
  // R_t, and since the other factor is an ideal every split collapses
  // into the single one R_t * X_(d-t); otherwise sum over all splits.
  GradedSpace multiply_pieces(const IdealSpec& a, const IdealSpec& b, int d) {
    const MonomialBasis basis(d);
    RowSpaceBuilder builder(static_cast<std::size_t>(ambient_dim(d)));
    const bool a_is_m = a.kind == IdealSpec::Kind::MPower;
    const bool b_is_m = b.kind == IdealSpec::Kind::MPower;
    if (a_is_m || b_is_m) {
      const int t = a_is_m ? a.value : b.value;
      const IdealSpec& other = a_is_m ? b : a;
      if (d >= t) {
        const GradedSpace factor = get(other, d - t);
        const MonomialBasis factor_basis(d - t);
        const auto shifts = monomials_of_degree(t);
        for (std::size_t r = 0; r < factor.basis.rows() && !builder.full(); ++r) {
          const Poly p = factor_basis.to_poly(factor.basis.row(r));
          for (const auto& mu : shifts) {
            builder.insert(basis.to_row(p * Poly::monomial(mu)));
            if (builder.full()) break;
          }
        }
      }
      return GradedSpace{d, builder.matrix()};
    }
    for (int d1 = 0; d1 <= d && !builder.full(); ++d1) {
      const GradedSpace sa = get(a, d1);
      if (sa.rank() == 0) continue;
      const GradedSpace sb = get(b, d - d1);
      if (sb.rank() == 0) continue;
      const MonomialBasis ba(d1);
      const MonomialBasis bb(d - d1);
      for (std::size_t ra = 0; ra < sa.basis.rows() && !builder.full(); ++ra) {
        const Poly pa = ba.to_poly(sa.basis.row(ra));
        for (std::size_t rb = 0; rb < sb.basis.rows(); ++rb) {
          builder.insert(basis.to_row(pa * bb.to_poly(sb.basis.row(rb))));
          if (builder.full()) break;
        }
      }
    }
    return GradedSpace{d, builder.matrix()};
  }

  std::shared_ptr<const ExactMatrix> point_matrix(std::size_t point_index, int d) {
    const std::string key = std::to_string(point_index) + "@" + std::to_string(d);
    {
      std::lock_guard<std::mutex> lock(point_mu_);
      auto it = point_matrices_.find(key);
      if (it != point_matrices_.end()) return it->second;
    }
    auto computed = std::make_shared<const ExactMatrix>(
        detail::point_condition_matrix(cfg_->points[point_index], d));
    std::lock_guard<std::mutex> lock(point_mu_);
    return point_matrices_.emplace(key, std::move(computed)).first->second;
  }

  const Config* cfg_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<std::shared_future<GradedSpace>>> spaces_;
  std::mutex point_mu_;
  std::map<std::string, std::shared_ptr<const ExactMatrix>> point_matrices_;
};

// Vanishing-condition route to one degree of a symbolic power.
inline GradedSpace graded_symbolic(const Config& cfg, int m, int d) {
  SpaceCache cache(cfg);
  return cache.get(IdealSpec::symbolic(m), d);
}

// Generator-product route to one degree of any ideal expression.
inline GradedSpace graded_ideal(const Config& cfg, const IdealSpec& spec, int d) {
  SpaceCache cache(cfg);
  return cache.get(spec, d);
}

}  // namespace sympow
