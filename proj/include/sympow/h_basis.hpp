#pragma once

#include <cassert>
#include <map>
#include <stdexcept>
#include <vector>

#include "sympow/basis.hpp"

namespace sympow {

// Exact expansion of a polynomial in the configuration's ring basis.
// Reconstructing the summands always reproduces the input bit for bit.
struct HBasisExpansion {
  ConfigKind kind = ConfigKind::AlmostCollinear;
  std::map<AcElem, Rational> ac_terms;
  std::map<NciElem, Rational> nci_terms;

  Poly reconstruct(const Config& cfg) const {
    Poly out;
    if (kind == ConfigKind::AlmostCollinear) {
      for (const auto& [e, c] : ac_terms) out += c * realize(cfg, e);
    } else {
      for (const auto& [e, c] : nci_terms) out += c * realize(cfg, e);
    }
    return out;
  }
};

namespace detail {

// Division against F in the variable x. F is monic of degree n in x, so
// replacing the top x-degree terms c*x^t*y^j*z^l by c*H_t*y^j*z^l leaves
// only terms of strictly smaller x-degree; repeat until nothing is left.
inline void expand_ac(const Config& cfg, Poly work, std::map<AcElem, Rational>& out) {
  std::vector<Poly> f_powers = {Poly::constant(1)};
  while (!work.is_zero()) {
    int top = 0;
    for (const auto& [e, c] : work.terms()) top = std::max(top, e.x);
    const int a = top / cfg.n;
    const int rem = top % cfg.n;
    while (static_cast<int>(f_powers.size()) <= a) {
      f_powers.push_back(f_powers.back() * cfg.F);
    }
    const Poly h_top = Poly::monomial({rem, 0, 0}) * f_powers[static_cast<std::size_t>(a)];
    std::vector<std::pair<Exponents, Rational>> batch;
    for (const auto& [e, c] : work.terms()) {
      if (e.x == top) batch.emplace_back(e, c);
    }
    for (const auto& [e, c] : batch) {
      const AcElem elem{top, e.y, e.z};
      const bool fresh = out.emplace(elem, c).second;
      assert(fresh);
      (void)fresh;
      work -= c * (h_top * Poly::monomial({0, e.y, e.z}));
    }
  }
}

// Division against F in the variable z. -F is monic of degree n in z, so
// c*x^a*y^b*z^t with t = q*n + p is c*x^a*y^b*z^p*(-F)^q plus terms of
// strictly smaller z-degree.
inline void expand_nci(const Config& cfg, Poly work, std::map<NciElem, Rational>& out) {
  std::vector<Poly> neg_f_powers = {Poly::constant(1)};
  while (!work.is_zero()) {
    int top = 0;
    for (const auto& [e, c] : work.terms()) top = std::max(top, e.z);
    if (top < cfg.n) {
      for (const auto& [e, c] : work.terms()) {
        const NciElem elem{e.x, e.y, e.z, 0};
        const bool fresh = out.emplace(elem, c).second;
        assert(fresh);
        (void)fresh;
      }
      return;
    }
    const int q = top / cfg.n;
    const int p = top % cfg.n;
    while (static_cast<int>(neg_f_powers.size()) <= q) {
      neg_f_powers.push_back(neg_f_powers.back() * (-cfg.F));
    }
    const Poly& neg_f_q = neg_f_powers[static_cast<std::size_t>(q)];
    const Rational sign = (q % 2 == 0) ? Rational(1) : Rational(-1);
    std::vector<std::pair<Exponents, Rational>> batch;
    for (const auto& [e, c] : work.terms()) {
      if (e.z == top) batch.emplace_back(e, c);
    }
    for (const auto& [e, c] : batch) {
      const NciElem elem{e.x, e.y, p, q};
      const bool fresh = out.emplace(elem, c * sign).second;
      assert(fresh);
      (void)fresh;
      work -= c * (Poly::monomial({e.x, e.y, p}) * neg_f_q);
    }
  }
}

}  // namespace detail

// Rewrites f exactly in the ring basis of the configuration. The AC basis
// element H_i y^j z^l is keyed by (i, j, l); the NCI basis element
// x^a y^b z^c F^d, c < n, by (a, b, c, d).
inline HBasisExpansion to_h_basis(const Poly& f, const Config& cfg) {
  HBasisExpansion out;
  out.kind = cfg.kind;
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    detail::expand_ac(cfg, f, out.ac_terms);
  } else {
    detail::expand_nci(cfg, f, out.nci_terms);
  }
  return out;
}

}  // namespace sympow
