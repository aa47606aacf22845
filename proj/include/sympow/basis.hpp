#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sympow/config.hpp"

namespace sympow {

// One element H_i y^j z^l of the almost collinear ring basis, where
// H_i = x^e F^a with i = a*n + e and 0 <= e < n.
struct AcElem {
  int i = 0;
  int j = 0;
  int l = 0;

  int degree() const { return i + j + l; }
  auto operator<=>(const AcElem&) const = default;
};

// One element x^a y^b z^c F^d of the nearly-complete intersection ring
// basis; c < n for the owning configuration.
struct NciElem {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  int degree(int n) const { return a + b + c + d * n; }
  auto operator<=>(const NciElem&) const = default;
};

// H_i y^j z^l lies in the m-th symbolic power iff i + l*n >= m*n and
// i + j >= m.
inline bool ac_in_symbolic(int n, const AcElem& e, int m) {
  return e.i + e.l * n >= m * n && e.i + e.j >= m;
}

// Membership of H_i y^j z^l in the r-th ordinary power splits into three
// regimes of l against j and i + j.
inline bool ac_in_power(int n, const AcElem& e, int r) {
  if (e.l < e.j && e.i + n * e.l >= r * n) return true;
  if (e.j <= e.l && e.l < e.i + e.j && e.i + e.j + (n - 1) * e.l >= r * n) return true;
  if (e.i + e.j <= e.l && r <= e.i + e.j) return true;
  return false;
}

inline bool nci_in_symbolic(const NciElem& e, int m) {
  return e.a + e.b >= m && std::min(e.a, e.b) + e.d >= m;
}

// The three defining inequalities of the r-th ordinary power.
inline bool nci_in_power(const NciElem& e, int r) {
  return std::min(e.a, e.b) + e.d >= r && e.a + e.b + e.d >= 2 * r &&
         e.a + e.b >= r;
}

// Same set described by guarded cases instead; kept as a cross-check.
inline bool nci_in_power_cases(const NciElem& e, int r) {
  const int lo = std::min(e.a, e.b);
  const int hi = std::max(e.a, e.b);
  if (e.d <= hi - lo && !(lo + e.d >= r)) return false;
  if (hi - lo < e.d && e.d < e.a + e.b && !(e.a + e.b + e.d >= 2 * r)) return false;
  if (e.a + e.b <= e.d && !(e.a + e.b >= r)) return false;
  return true;
}

// Lattice witness search for almost collinear non-containment with
// m >= r: the lexicographically smallest (i, l) with
//   i >= m,  i + n*l >= m*n,  l <= i - 1,  i + (n-1)*l <= r*n - 1.
// The element H_i z^l then lies in the m-th symbolic power but outside
// the r-th ordinary power. For m < r no lattice witness is produced; the
// decision layer covers that regime separately.
inline std::optional<std::pair<int, int>> ac_witness(int n, int m, int r) {
  if (m < r) return std::nullopt;
  const int i_max = r * n - 1;
  for (int i = m; i <= i_max; ++i) {
    const int l_max = std::min(i - 1, (r * n - 1 - i) / (n - 1));
    for (int l = 0; l <= l_max; ++l) {
      if (i + n * l >= m * n && i + (n - 1) * l <= r * n - 1) {
        return std::make_pair(i, l);
      }
    }
  }
  return std::nullopt;
}

// Canonical nearly-complete intersection witness, defined whenever
// 4r > 3m + 1: x^a y^b F^a with a = ceil(m/2), b = floor(m/2). It sits in
// the m-th symbolic power, and either a + b < r (when m < r) or
// a + b + d < 2r rules out the r-th ordinary power.
inline std::optional<NciElem> nci_witness(int m, int r) {
  if (4 * r <= 3 * m + 1) return std::nullopt;
  const int a = (m + 1) / 2;
  const int b = m / 2;
  return NciElem{a, b, 0, a};
}

struct BasisFilter {
  enum class Kind { All, Symbolic, Power };
  Kind kind = Kind::All;
  int value = 0;

  static BasisFilter all() { return {}; }
  static BasisFilter symbolic(int m) { return {Kind::Symbolic, m}; }
  static BasisFilter power(int r) { return {Kind::Power, r}; }
};

inline bool ac_matches(int n, const AcElem& e, const BasisFilter& f) {
  switch (f.kind) {
    case BasisFilter::Kind::All: return true;
    case BasisFilter::Kind::Symbolic: return ac_in_symbolic(n, e, f.value);
    case BasisFilter::Kind::Power: return ac_in_power(n, e, f.value);
  }
  return false;
}

inline bool nci_matches(const NciElem& e, const BasisFilter& f) {
  switch (f.kind) {
    case BasisFilter::Kind::All: return true;
    case BasisFilter::Kind::Symbolic: return nci_in_symbolic(e, f.value);
    case BasisFilter::Kind::Power: return nci_in_power(e, f.value);
  }
  return false;
}

// All basis tuples of degree d passing the filter, largest tuple first
// (lexicographic on (i, j, l)).
inline std::vector<AcElem> enumerate_basis_ac(const Config& cfg, int d,
                                              const BasisFilter& filter) {
  if (cfg.kind != ConfigKind::AlmostCollinear) {
    throw std::invalid_argument("enumerate_basis_ac: configuration is not almost collinear");
  }
  std::vector<AcElem> out;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) {
      const AcElem e{i, j, d - i - j};
      if (ac_matches(cfg.n, e, filter)) out.push_back(e);
    }
  }
  return out;
}

// Same for the nearly-complete intersection basis, lexicographic on
// (a, b, c, d) with c < n and a + b + c + d*n equal to the degree.
inline std::vector<NciElem> enumerate_basis_nci(const Config& cfg, int degree,
                                                const BasisFilter& filter) {
  if (cfg.kind != ConfigKind::NearlyCompleteIntersection) {
    throw std::invalid_argument(
        "enumerate_basis_nci: configuration is not a nearly-complete intersection");
  }
  std::vector<NciElem> out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) {
      const int c_cap = std::min(cfg.n - 1, degree - a - b);
      for (int c = c_cap; c >= 0; --c) {
        const int rest = degree - a - b - c;
        if (rest % cfg.n != 0) continue;
        out.push_back(NciElem{a, b, c, rest / cfg.n});
      }
    }
  }
  std::erase_if(out, [&](const NciElem& e) { return !nci_matches(e, filter); });
  return out;
}

// Dimension of the degree-d graded piece of the filtered ideal, read off
// the combinatorial basis.
inline long hilbert_dim(const Config& cfg, const BasisFilter& filter, int d) {
  if (d < 0) throw std::invalid_argument("hilbert_dim: negative degree");
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    return static_cast<long>(enumerate_basis_ac(cfg, d, filter).size());
  }
  return static_cast<long>(enumerate_basis_nci(cfg, d, filter).size());
}

inline Poly realize(const Config& cfg, const AcElem& e) {
  if (cfg.kind != ConfigKind::AlmostCollinear) {
    throw std::invalid_argument("realize: AcElem needs an almost collinear configuration");
  }
  if (e.i < 0 || e.j < 0 || e.l < 0) {
    throw std::invalid_argument("realize: exponents must be nonnegative");
  }
  const int a = e.i / cfg.n;
  const int rem = e.i % cfg.n;
  return Poly::monomial({rem, e.j, e.l}) * cfg.F.pow(a);
}

inline Poly realize(const Config& cfg, const NciElem& e) {
  if (cfg.kind != ConfigKind::NearlyCompleteIntersection) {
    throw std::invalid_argument(
        "realize: NciElem needs a nearly-complete intersection configuration");
  }
  if (e.a < 0 || e.b < 0 || e.c < 0 || e.d < 0) {
    throw std::invalid_argument("realize: exponents must be nonnegative");
  }
  if (e.c >= cfg.n) {
    throw std::invalid_argument("realize: basis elements need c < n");
  }
  return Poly::monomial({e.a, e.b, e.c}) * cfg.F.pow(e.d);
}

}  // namespace sympow
