#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sympow/oracle.hpp"

namespace sympow {

// One verifiable statement about a configuration. Each claim expands into
// a list of (parameters, degree) cells checked independently.
enum class ClaimId {
  BasisSym,        // filtered basis count and span equal the symbolic piece
  BasisPow,        // same for ordinary powers
  Containment,     // closed-form verdicts against degreewise containment
  AcSympowSplit,   // symbolic nt-th power equals t-th power of symbolic n-th
  NciSplitEven,    // symbolic (a+b)-th equals product when one part is even
  NciSplitOdd,     // strict containment when both parts are odd
  NciSymIProduct,  // inequality description of symbolic power times I
  Madic1,          // symbolic 2r / 2r-1 powers inside M^r I^r / M^(r-1) I^r
  Madic2,          // symbolic t(m+1) powers inside M^t (sym m)^t
  Alpha,           // least nonzero degree matches the closed form
};

inline std::string claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::BasisSym: return "basis_sym";
    case ClaimId::BasisPow: return "basis_pow";
    case ClaimId::Containment: return "containment";
    case ClaimId::AcSympowSplit: return "ac_sympow_split";
    case ClaimId::NciSplitEven: return "nci_split_even";
    case ClaimId::NciSplitOdd: return "nci_split_odd";
    case ClaimId::NciSymIProduct: return "nci_sym_I_product";
    case ClaimId::Madic1: return "madic_1";
    case ClaimId::Madic2: return "madic_2";
    case ClaimId::Alpha: return "alpha";
  }
  return "?";
}

inline std::optional<ClaimId> claim_from_name(const std::string& name) {
  for (ClaimId id :
       {ClaimId::BasisSym, ClaimId::BasisPow, ClaimId::Containment,
        ClaimId::AcSympowSplit, ClaimId::NciSplitEven, ClaimId::NciSplitOdd,
        ClaimId::NciSymIProduct, ClaimId::Madic1, ClaimId::Madic2, ClaimId::Alpha}) {
    if (claim_name(id) == name) return id;
  }
  return std::nullopt;
}

struct ClaimBounds {
  int max_degree = -1;  // -1: default (m_max + r_max)(n + 1) + n
  int m_max = 2;
  int r_max = 2;
  int t_max = 2;
  int jobs = 0;  // 0: hardware concurrency
};

struct CellResult {
  std::vector<std::pair<std::string, long>> params;
  int d = 0;
  bool pass = false;
  std::optional<std::string> detail;

  bool operator==(const CellResult&) const = default;
};

struct Report {
  ClaimId claim = ClaimId::BasisSym;
  Config cfg;
  std::vector<CellResult> cells;
  bool all_pass = true;
  int max_degree = 0;
};

namespace detail {

using CellTask = std::function<CellResult()>;

inline void run_cells(std::vector<CellTask>& tasks, std::vector<CellResult>& out,
                      int jobs) {
  out.resize(tasks.size());
  if (tasks.empty()) return;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(tasks.size()));
  if (jobs == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) out[k] = tasks[k]();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      try {
        out[k] = tasks[k]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline CellResult make_cell(std::vector<std::pair<std::string, long>> params, int d,
                            bool pass, std::optional<std::string> detail = {}) {
  return CellResult{std::move(params), d, pass, std::move(detail)};
}

// True when every symbolic basis element of the degree also satisfies the
// power predicate; the combinatorial side of degreewise containment.
inline bool combinat_contained_at(const Config& cfg, int m, int r, int d) {
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    for (const auto& e : enumerate_basis_ac(cfg, d, BasisFilter::symbolic(m))) {
      if (!ac_in_power(cfg.n, e, r)) return false;
    }
    return true;
  }
  for (const auto& e : enumerate_basis_nci(cfg, d, BasisFilter::symbolic(m))) {
    if (!nci_in_power(e, r)) return false;
  }
  return true;
}

inline std::string first_escape_description(const Config& cfg, int m, int r, int d) {
  if (cfg.kind == ConfigKind::AlmostCollinear) {
    for (const auto& e : enumerate_basis_ac(cfg, d, BasisFilter::symbolic(m))) {
      if (!ac_in_power(cfg.n, e, r)) return realize(cfg, e).to_string();
    }
  } else {
    for (const auto& e : enumerate_basis_nci(cfg, d, BasisFilter::symbolic(m))) {
      if (!nci_in_power(e, r)) return realize(cfg, e).to_string();
    }
  }
  return "";
}

}  // namespace detail

// Runs one claim over its (parameters, degree) grid and reports each cell.
// Independent cells are distributed over a worker pool; results are slot
// addressed, so the Report does not depend on the worker count.
inline Report verify_claim(const Config& cfg, ClaimId claim, ClaimBounds bounds) {
  Report report;
  report.claim = claim;
  report.cfg = cfg;
  const int default_degree = (bounds.m_max + bounds.r_max) * (cfg.n + 1) + cfg.n;
  const int D = bounds.max_degree >= 0 ? bounds.max_degree : default_degree;
  report.max_degree = D;

  const bool is_ac = cfg.kind == ConfigKind::AlmostCollinear;
  if ((claim == ClaimId::AcSympowSplit && !is_ac) ||
      ((claim == ClaimId::NciSplitEven || claim == ClaimId::NciSplitOdd ||
        claim == ClaimId::NciSymIProduct) &&
       is_ac)) {
    throw std::invalid_argument("claim " + claim_name(claim) +
                                " does not apply to this configuration kind");
  }

  SpaceCache cache(cfg);
  std::vector<detail::CellTask> tasks;

  auto basis_claim = [&](bool symbolic) {
    const int v_max = symbolic ? bounds.m_max : bounds.r_max;
    const char* key = symbolic ? "m" : "r";
    for (int v = 1; v <= v_max; ++v) {
      for (int d = 0; d <= D; ++d) {
        tasks.push_back([&cfg, &cache, symbolic, key, v, d] {
          const BasisFilter filter =
              symbolic ? BasisFilter::symbolic(v) : BasisFilter::power(v);
          const IdealSpec spec =
              symbolic ? IdealSpec::symbolic(v) : IdealSpec::power(v);
          const long count = hilbert_dim(cfg, filter, d);
          const GradedSpace space = cache.get(spec, d);
          if (count != space.rank()) {
            return detail::make_cell({{key, v}}, d, false,
                                     "basis count " + std::to_string(count) +
                                         " != oracle rank " +
                                         std::to_string(space.rank()));
          }
          RowSpaceBuilder builder = builder_from(space);
          const MonomialBasis mb(d);
          if (cfg.kind == ConfigKind::AlmostCollinear) {
            for (const auto& e : enumerate_basis_ac(cfg, d, filter)) {
              if (!builder.contains(mb.to_row(realize(cfg, e)))) {
                return detail::make_cell({{key, v}}, d, false,
                                         "element outside oracle space: " +
                                             realize(cfg, e).to_string());
              }
            }
          } else {
            for (const auto& e : enumerate_basis_nci(cfg, d, filter)) {
              if (!builder.contains(mb.to_row(realize(cfg, e)))) {
                return detail::make_cell({{key, v}}, d, false,
                                         "element outside oracle space: " +
                                             realize(cfg, e).to_string());
              }
            }
          }
          return detail::make_cell({{key, v}}, d, true);
        });
      }
    }
  };

  switch (claim) {
    case ClaimId::BasisSym:
      basis_claim(true);
      break;
    case ClaimId::BasisPow:
      basis_claim(false);
      break;

    case ClaimId::Containment: {
      for (int m = 1; m <= bounds.m_max; ++m) {
        for (int r = 1; r <= bounds.r_max; ++r) {
          for (int d = 0; d <= D; ++d) {
            tasks.push_back([&cfg, &cache, m, r, d] {
              const bool expected = detail::combinat_contained_at(cfg, m, r, d);
              const bool observed =
                  graded_contains(cache.get(IdealSpec::power(r), d),
                                  cache.get(IdealSpec::symbolic(m), d));
              std::optional<std::string> note;
              if (expected != observed) {
                note = "combinatorial and oracle containment disagree";
              } else if (!observed) {
                note = "escapes: " + detail::first_escape_description(cfg, m, r, d);
              }
              return detail::make_cell({{"m", m}, {"r", r}}, d, expected == observed,
                                       std::move(note));
            });
          }
          tasks.push_back([&cfg, &cache, m, r, D] {
            const bool closed = contained_closed_form(cfg, m, r);
            int first_fail = -1;
            for (int d = 0; d <= D; ++d) {
              if (!graded_contains(cache.get(IdealSpec::power(r), d),
                                   cache.get(IdealSpec::symbolic(m), d))) {
                first_fail = d;
                break;
              }
            }
            const bool observed_all = first_fail < 0;
            std::optional<std::string> note;
            if (closed != observed_all) {
              note = closed ? "degree " + std::to_string(first_fail) +
                                  " escapes a contained pair"
                            : "no escape found up to the degree bound";
            } else if (first_fail >= 0) {
              note = "first escape at degree " + std::to_string(first_fail);
            }
            return detail::make_cell({{"m", m}, {"r", r}, {"summary", 1}}, D,
                                     closed == observed_all, std::move(note));
          });
        }
      }
      break;
    }

    case ClaimId::AcSympowSplit: {
      for (int t = 1; t <= bounds.t_max; ++t) {
        for (int d = 0; d <= D; ++d) {
          tasks.push_back([&cfg, &cache, t, d] {
            const GradedSpace whole = cache.get(IdealSpec::symbolic(cfg.n * t), d);
            const GradedSpace split = cache.get(
                IdealSpec::product(std::vector<IdealSpec>(
                    static_cast<std::size_t>(t), IdealSpec::symbolic(cfg.n))),
                d);
            const bool pass = graded_equal(whole, split);
            return detail::make_cell({{"t", t}}, d, pass,
                                     pass ? std::optional<std::string>{}
                                          : "graded pieces differ, ranks " +
                                                std::to_string(whole.rank()) + " vs " +
                                                std::to_string(split.rank()));
          });
        }
      }
      break;
    }

    case ClaimId::NciSplitEven: {
      for (int a = 1; a <= bounds.m_max; ++a) {
        for (int b = a; a + b <= bounds.m_max; ++b) {
          if (a % 2 != 0 && b % 2 != 0) continue;
          for (int d = 0; d <= D; ++d) {
            tasks.push_back([&cache, a, b, d] {
              const GradedSpace whole = cache.get(IdealSpec::symbolic(a + b), d);
              const GradedSpace split = cache.get(
                  IdealSpec::product({IdealSpec::symbolic(a), IdealSpec::symbolic(b)}),
                  d);
              const bool pass = graded_equal(whole, split);
              return detail::make_cell({{"alpha", a}, {"beta", b}}, d, pass,
                                       pass ? std::optional<std::string>{}
                                            : "graded pieces differ, ranks " +
                                                  std::to_string(whole.rank()) +
                                                  " vs " + std::to_string(split.rank()));
            });
          }
        }
      }
      break;
    }

    case ClaimId::NciSplitOdd: {
      for (int a = 1; a <= bounds.m_max; a += 2) {
        for (int b = a; a + b <= bounds.m_max; b += 2) {
          for (int d = 0; d <= D; ++d) {
            tasks.push_back([&cache, a, b, d] {
              const bool pass = graded_contains(
                  cache.get(IdealSpec::symbolic(a + b), d),
                  cache.get(IdealSpec::product(
                                {IdealSpec::symbolic(a), IdealSpec::symbolic(b)}),
                            d));
              return detail::make_cell(
                  {{"alpha", a}, {"beta", b}}, d, pass,
                  pass ? std::optional<std::string>{}
                       : std::optional<std::string>{"product escapes the symbolic power"});
            });
          }
          tasks.push_back([&cfg, &cache, a, b, D] {
            const int s = a + b;
            const NciElem w{s / 2, s / 2, 0, s / 2};
            const int dw = w.degree(cfg.n);
            std::vector<std::pair<std::string, long>> params = {
                {"alpha", a}, {"beta", b}, {"witness", 1}};
            if (dw > D) {
              return detail::make_cell(std::move(params), dw, false,
                                       "witness degree exceeds the degree bound");
            }
            const MonomialBasis mb(dw);
            const auto row = mb.to_row(realize(cfg, w));
            RowSpaceBuilder in_sym =
                builder_from(cache.get(IdealSpec::symbolic(s), dw));
            RowSpaceBuilder in_prod = builder_from(cache.get(
                IdealSpec::product({IdealSpec::symbolic(a), IdealSpec::symbolic(b)}),
                dw));
            const bool pass = in_sym.contains(row) && !in_prod.contains(row);
            return detail::make_cell(std::move(params), dw, pass,
                                     "strictness witness " + realize(cfg, w).to_string());
          });
        }
      }
      break;
    }

    case ClaimId::NciSymIProduct: {
      for (int m = 1; m <= bounds.m_max; m += 2) {
        for (int d = 0; d <= D; ++d) {
          tasks.push_back([&cfg, &cache, m, d] {
            // Elements with a+b >= m+1, min(a,b)+d' >= m+1 and
            // a+b+d' >= (3m+1)/2 + 2 span the product of the symbolic
            // m-th power with I.
            const int sum_floor = (3 * m + 1) / 2 + 2;
            std::vector<Poly> polys;
            for (const auto& e : enumerate_basis_nci(cfg, d, BasisFilter::all())) {
              if (e.a + e.b >= m + 1 && std::min(e.a, e.b) + e.d >= m + 1 &&
                  e.a + e.b + e.d >= sum_floor) {
                polys.push_back(realize(cfg, e));
              }
            }
            const GradedSpace combinat = space_from_polys(d, polys);
            const GradedSpace oracle = cache.get(
                IdealSpec::product({IdealSpec::symbolic(m), IdealSpec::power(1)}), d);
            const bool pass = graded_equal(combinat, oracle);
            return detail::make_cell({{"m", m}}, d, pass,
                                     pass ? std::optional<std::string>{}
                                          : "inequality description differs, ranks " +
                                                std::to_string(combinat.rank()) +
                                                " vs " + std::to_string(oracle.rank()));
          });
        }
      }
      break;
    }

    case ClaimId::Madic1: {
      for (int r = 1; r <= bounds.r_max; ++r) {
        struct Part {
          int part;
          IdealSpec inner;
          IdealSpec outer;
        };
        const std::vector<Part> parts = {
            {1, IdealSpec::symbolic(2 * r),
             IdealSpec::product({IdealSpec::power(r), IdealSpec::mpower(r)})},
            {2, IdealSpec::symbolic(2 * r - 1),
             IdealSpec::product({IdealSpec::power(r), IdealSpec::mpower(r - 1)})},
            // The ordinary-power reading, implied by the symbolic one but
            // checked in its own right.
            {3, IdealSpec::power(2 * r),
             IdealSpec::product({IdealSpec::power(r), IdealSpec::mpower(r)})},
        };
        for (const auto& part : parts) {
          for (int d = 0; d <= D; ++d) {
            tasks.push_back([&cache, r, part, d] {
              const bool pass =
                  graded_contains(cache.get(part.outer, d), cache.get(part.inner, d));
              return detail::make_cell(
                  {{"r", r}, {"part", part.part}}, d, pass,
                  pass ? std::optional<std::string>{}
                       : std::optional<std::string>{"containment fails"});
            });
          }
        }
      }
      break;
    }

    case ClaimId::Madic2: {
      for (int t = 1; t <= bounds.t_max; ++t) {
        for (int m = 1; m <= bounds.m_max; ++m) {
          std::vector<IdealSpec> sym_t(static_cast<std::size_t>(t),
                                       IdealSpec::symbolic(m));
          struct Part {
            int part;
            IdealSpec inner;
            IdealSpec outer;
          };
          std::vector<IdealSpec> with_mt = sym_t;
          with_mt.push_back(IdealSpec::mpower(t));
          std::vector<IdealSpec> with_mt1 = sym_t;
          with_mt1.push_back(IdealSpec::mpower(t - 1));
          const std::vector<Part> parts = {
              {1, IdealSpec::symbolic(t * (m + 1)), IdealSpec::product(with_mt)},
              {2, IdealSpec::symbolic(t * (m + 1) - 1), IdealSpec::product(with_mt1)},
          };
          for (const auto& part : parts) {
            for (int d = 0; d <= D; ++d) {
              tasks.push_back([&cache, t, m, part, d] {
                const bool pass = graded_contains(cache.get(part.outer, d),
                                                  cache.get(part.inner, d));
                return detail::make_cell(
                    {{"t", t}, {"m", m}, {"part", part.part}}, d, pass,
                    pass ? std::optional<std::string>{}
                         : std::optional<std::string>{"containment fails"});
              });
            }
          }
        }
      }
      break;
    }

    case ClaimId::Alpha: {
      auto alpha_cells = [&](bool symbolic) {
        const int v_max = symbolic ? bounds.m_max : bounds.r_max;
        const char* key = symbolic ? "m" : "r";
        for (int v = 1; v <= v_max; ++v) {
          tasks.push_back([&cfg, &cache, symbolic, key, v] {
            const BasisFilter filter =
                symbolic ? BasisFilter::symbolic(v) : BasisFilter::power(v);
            const IdealSpec spec =
                symbolic ? IdealSpec::symbolic(v) : IdealSpec::power(v);
            const int expected = alpha(cfg, filter);
            for (int d = 0; d < expected; ++d) {
              if (cache.get(spec, d).rank() != 0) {
                return detail::make_cell({{key, v}}, expected, false,
                                         "nonzero element below degree " +
                                             std::to_string(expected));
              }
            }
            const bool pass = cache.get(spec, expected).rank() > 0;
            return detail::make_cell({{key, v}}, expected, pass,
                                     pass ? std::optional<std::string>{}
                                          : std::optional<std::string>{
                                                "graded piece empty at the closed-form degree"});
          });
        }
      };
      alpha_cells(true);
      alpha_cells(false);
      break;
    }
  }

  detail::run_cells(tasks, report.cells, bounds.jobs);
  report.all_pass = true;
  for (const auto& cell : report.cells) report.all_pass = report.all_pass && cell.pass;
  return report;
}

}  // namespace sympow
