#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "sympow/basis.hpp"

namespace sympow {

enum class Method { ClosedForm, LatticeWitness, Oracle };

using BasisElem = std::variant<AcElem, NciElem>;

// Containment decision for one (m, r) pair. threshold is the exact bound
// on m at which containment flips: almost collinear configurations are
// contained iff m > threshold, nearly-complete intersections iff
// m >= threshold.
struct Verdict {
  bool contained = false;
  Method method = Method::ClosedForm;
  Rational threshold;
  std::optional<BasisElem> witness;
  int m = 0;
  int r = 0;
};

inline Rational containment_threshold(const Config& cfg, int r) {
  const long long n = cfg.n;
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    return Rational(Integer(n * n * r - n), Integer(n * n - n + 1));
  }
  return Rational(Integer(4LL * r - 1), Integer(3));
}

// The single-inequality closed forms: AC is not contained iff
// m <= (n^2 r - n) / (n^2 - n + 1); NCI is contained iff 4r <= 3m + 1.
inline bool contained_closed_form(const Config& cfg, int m, int r) {
  if (m < 1 || r < 1) throw std::invalid_argument("containment needs m, r >= 1");
  const long long n = cfg.n;
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    return static_cast<long long>(m) * (n * n - n + 1) > n * n * r - n;
  }
  return 4LL * r <= 3LL * m + 1;
}

// The three-branch form of the almost collinear criterion, kept as an
// internal cross-check against the single inequality.
inline bool ac_not_contained_cases(int n, int m, int r) {
  const long long nn = n;
  if (m < r) return true;
  if (m <= n && static_cast<long long>(m) * nn * nn <= r * nn * nn + r * nn - nn - 2) {
    return true;
  }
  if (m >= n &&
      static_cast<long long>(m) * (nn * nn - nn + 1) <= nn * nn * r - nn) {
    return true;
  }
  return false;
}

inline int alpha(const Config& cfg, const BasisFilter& ideal) {
  if (ideal.value < 1) throw std::invalid_argument("alpha needs m or r >= 1");
  const int n = cfg.n;
  switch (ideal.kind) {
    case BasisFilter::Kind::Symbolic:
      if (cfg.kind == ConfigKind::AlmostCollinear) {
        return (ideal.value * (2 * n - 1) + n - 1) / n;  // ceil(m(2n-1)/n)
      }
      return n == 1 ? (3 * ideal.value + 1) / 2 : 2 * ideal.value;
    case BasisFilter::Kind::Power:
      return 2 * ideal.value;
    case BasisFilter::Kind::All:
      break;
  }
  throw std::invalid_argument("alpha needs a symbolic or power filter");
}

// Smallest symbolic basis element in minimal degree that escapes the
// ordinary power; used to attach a witness in the m < r regime, where the
// whole minimal-degree piece sits below the power's first degree.
inline std::optional<BasisElem> minimal_degree_escape(const Config& cfg, int m, int r) {
  const int d = alpha(cfg, BasisFilter::symbolic(m));
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    auto elems = enumerate_basis_ac(cfg, d, BasisFilter::symbolic(m));
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
      if (!ac_in_power(cfg.n, *it, r)) return BasisElem(*it);
    }
  } else {
    auto elems = enumerate_basis_nci(cfg, d, BasisFilter::symbolic(m));
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
      if (!nci_in_power(*it, r)) return BasisElem(*it);
    }
  }
  return std::nullopt;
}

// The witness attached to a non-containment verdict: the lattice witness
// (AC) or the canonical element (NCI) when m >= r, the minimal-degree
// escape when m < r. Empty exactly when containment holds.
inline std::optional<BasisElem> noncontainment_witness(const Config& cfg, int m, int r) {
  if (m < r) return minimal_degree_escape(cfg, m, r);
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    if (auto w = ac_witness(cfg.n, m, r)) {
      return BasisElem(AcElem{w->first, 0, w->second});
    }
    return std::nullopt;
  }
  if (auto w = nci_witness(m, r)) return BasisElem(*w);
  return std::nullopt;
}

inline Verdict contains(const Config& cfg, int m, int r) {
  Verdict v;
  v.m = m;
  v.r = r;
  v.method = Method::ClosedForm;
  v.threshold = containment_threshold(cfg, r);
  v.contained = contained_closed_form(cfg, m, r);
  if (!v.contained) v.witness = noncontainment_witness(cfg, m, r);
  return v;
}

// Decides by searching for a witness instead of evaluating the closed
// form; agrees with contains() on every input.
inline Verdict contains_by_witness(const Config& cfg, int m, int r) {
  if (m < 1 || r < 1) throw std::invalid_argument("containment needs m, r >= 1");
  Verdict v;
  v.m = m;
  v.r = r;
  v.method = Method::LatticeWitness;
  v.threshold = containment_threshold(cfg, r);
  v.witness = noncontainment_witness(cfg, m, r);
  v.contained = !v.witness.has_value();
  return v;
}

inline Rational resurgence(const Config& cfg) {
  const long long n = cfg.n;
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    return Rational(Integer(n * n), Integer(n * n - n + 1));
  }
  return Rational(4, 3);
}

// Largest m/r over the box 1 <= m, r <= N with containment failing.
inline Rational resurgence_estimate(const Config& cfg, int N) {
  if (N < 2) throw std::invalid_argument("resurgence_estimate needs N >= 2");
  Rational best = 0;
  for (int m = 1; m <= N; ++m) {
    for (int r = 1; r <= N; ++r) {
      if (contained_closed_form(cfg, m, r)) continue;
      const Rational ratio(m, r);
      if (ratio > best) best = ratio;
    }
  }
  return best;
}

// The least e with every symbolic e*t-th power equal to the t-th power of
// the symbolic e-th power; for almost collinear points this is n.
inline int ac_power_split_exponent(const Config& cfg) {
  if (cfg.kind != ConfigKind::AlmostCollinear) {
    throw std::invalid_argument(
        "ac_power_split_exponent applies to almost collinear configurations only");
  }
  return cfg.n;
}

enum class SplitRelation { Equal, StrictSuperset };

struct SplitResult {
  SplitRelation relation = SplitRelation::Equal;
  std::optional<NciElem> witness;
};

// Splitting a symbolic power of a nearly-complete intersection: with at
// least one even part the product is exact; with both parts odd it is a
// strict subideal and x^(s/2) y^(s/2) F^(s/2), s the sum, exhibits the gap.
inline SplitResult nci_split(const Config& cfg, int alpha_part, int beta_part) {
  if (cfg.kind != ConfigKind::NearlyCompleteIntersection) {
    throw std::invalid_argument("nci_split applies to nearly-complete intersections only");
  }
  if (alpha_part < 1 || beta_part < 1) {
    throw std::invalid_argument("nci_split needs parts >= 1");
  }
  SplitResult out;
  if (alpha_part % 2 == 0 || beta_part % 2 == 0) {
    out.relation = SplitRelation::Equal;
    return out;
  }
  const int s = alpha_part + beta_part;
  out.relation = SplitRelation::StrictSuperset;
  out.witness = NciElem{s / 2, s / 2, 0, s / 2};
  return out;
}

struct NciNormalForm {
  int power_of_i2 = 0;
  bool extra_factor_i = false;
};

// Every symbolic power of a nearly-complete intersection collapses onto
// powers of the symbolic square, with one loose factor of I when the
// exponent is odd.
inline NciNormalForm nci_normal_form(int m) {
  if (m < 1) throw std::invalid_argument("nci_normal_form needs m >= 1");
  if (m % 2 == 0) return {m / 2, false};
  return {(m - 1) / 2, true};
}

}  // namespace sympow
