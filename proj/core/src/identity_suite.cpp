// Copyright 2026 The cfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfact/identity_suite.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "cfact/bell.hpp"
#include "cfact/first_kind.hpp"
#include "cfact/polynomial.hpp"
#include "cfact/series.hpp"

namespace cfact {

namespace {

using Cell = std::vector<std::pair<std::string, std::string>>;

std::string str(long v) { return std::to_string(v); }

// Shortest form that reads back to the same double.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Collects comparisons for one check; stops at the first disagreement.
class Recorder {
 public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  bool failed() const { return failed_; }

  bool equal(Cell cell, const Rational& lhs, const Rational& rhs) {
    return record(std::move(cell), lhs == rhs, lhs.to_string(),
                  rhs.to_string());
  }

  bool record(Cell cell, bool ok, std::string lhs, std::string rhs) {
    ++report_.cells_checked;
    if (ok) return true;
    failed_ = true;
    report_.counterexample =
        Counterexample{std::move(cell), std::move(lhs), std::move(rhs)};
    return false;
  }

 private:
  CheckReport& report_;
  bool failed_ = false;
};

CheckReport run_timed(std::string id, std::string identity, std::string grid,
                      std::string scope,
                      const std::function<void(Recorder&)>& body) {
  CheckReport report;
  report.id = std::move(id);
  report.identity = std::move(identity);
  report.grid = std::move(grid);
  report.scope = std::move(scope);
  const auto start = std::chrono::steady_clock::now();
  Recorder recorder(report);
  body(recorder);
  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  if (recorder.failed()) {
    report.status = CheckStatus::Fail;
  } else {
    report.status =
        report.cells_checked == 0 ? CheckStatus::Vacuous : CheckStatus::Pass;
  }
  return report;
}

std::string describe_r(const std::vector<Rational>& r_set) {
  std::string out = "r in {";
  for (std::size_t i = 0; i < r_set.size(); ++i) {
    if (i != 0) out += ",";
    out += r_set[i].to_string();
  }
  return out + "}";
}

std::string describe(const Grid& grid, bool with_r = true) {
  std::string out = "n<=" + str(grid.nmax);
  if (with_r) out += "; " + describe_r(grid.r_set);
  return out;
}

// Identities derived for nonnegative integer r.
std::string integer_r_scope(const std::vector<Rational>& r_set) {
  const bool inside = std::all_of(r_set.begin(), r_set.end(), [](const auto& r) {
    return r.is_integer() && r.sign() >= 0;
  });
  return inside ? "stated" : "extended";
}

std::size_t gf_order(const Grid& grid, const SuiteConfig& config) {
  return std::max(config.series_order,
                  static_cast<std::size_t>(std::max(grid.nmax, 1)));
}

// Direct T table, with the configured fault applied.
TriangleTable t_source(int nmax, const SuiteConfig& config) {
  TriangleTable table = second_kind_direct_table(Family::T, nmax, 0);
  if (config.fault) {
    const auto [n, k] = *config.fault;
    if (n >= 0 && n <= nmax && k >= 0 && k <= n) {
      table = table.perturbed(n, k, 1);
    }
  }
  return table;
}

std::vector<TriangleTable> per_r(
    const std::vector<Rational>& r_set,
    const std::function<TriangleTable(const Rational&)>& build) {
  std::vector<TriangleTable> out;
  out.reserve(r_set.size());
  for (const auto& r : r_set) out.push_back(build(r));
  return out;
}

// (x + r)^n expanded by the binomial theorem.
Polynomial binomial_power(unsigned n, const Rational& r) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = binomial(n, k) * r.pow(n - k);
  return Polynomial(std::move(c));
}

// Coefficient-wise comparison of per-r polynomial families, in (n, j, r)
// order. lhs[ri][n] and rhs[ri][n] hold the two sides.
void compare_polys(Recorder& rec, const Grid& grid,
                   const std::vector<std::vector<Polynomial>>& lhs,
                   const std::vector<std::vector<Polynomial>>& rhs) {
  for (int n = 0; n <= grid.nmax; ++n) {
    int top = 0;
    for (std::size_t ri = 0; ri < grid.r_set.size(); ++ri) {
      top = std::max({top, lhs[ri][n].degree(), rhs[ri][n].degree()});
    }
    for (int j = 0; j <= std::max(top, n); ++j) {
      for (std::size_t ri = 0; ri < grid.r_set.size(); ++ri) {
        const auto uj = static_cast<std::size_t>(j);
        if (!rec.equal({{"n", str(n)}, {"coeff", str(j)},
                        {"r", grid.r_set[ri].to_string()}},
                       lhs[ri][n].coeff(uj), rhs[ri][n].coeff(uj))) {
          return;
        }
      }
    }
  }
}

// Cell-wise comparison of per-r tables, in (n, k, r) order.
void compare_tables(Recorder& rec, const Grid& grid,
                    const std::vector<TriangleTable>& lhs,
                    const std::vector<TriangleTable>& rhs) {
  for (int n = 0; n <= grid.nmax; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (std::size_t ri = 0; ri < lhs.size(); ++ri) {
        if (!rec.equal({{"n", str(n)}, {"k", str(k)},
                        {"r", lhs[ri].r().to_string()}},
                       lhs[ri].at(n, k), rhs[ri].at(n, k))) {
          return;
        }
      }
    }
  }
}

std::vector<std::vector<Polynomial>> poly_family(
    const Grid& grid,
    const std::function<Polynomial(unsigned, const Rational&)>& build) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& r : grid.r_set) {
    std::vector<Polynomial> row;
    for (int n = 0; n <= grid.nmax; ++n) {
      row.push_back(build(static_cast<unsigned>(n), r));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Vacuous:
      return "vacuous";
  }
  return "?";
}

std::vector<Rational> default_r_set() {
  return {Rational(0), Rational(1, 2), Rational(1),
          Rational(2), Rational(5),    Rational(-3, 2)};
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "thm1",       "thm2",      "thm3",       "thm4",
      "thm5",       "thm6",      "thm7",       "thm8",
      "bell_difference", "recurrence", "first_kind_gf", "t_gf",
      "s2_paths",   "s1r_paths", "inverse",    "gf_inverse",
      "parity",     "dobinski"};
  return ids;
}

SuiteConfig SuiteConfig::defaults() {
  const auto rs = default_r_set();
  const auto grid = [&rs](int nmax) {
    Grid g;
    g.nmax = nmax;
    g.r_set = rs;
    return g;
  };
  SuiteConfig config;
  config.grids["thm1"] = grid(20);
  config.grids["thm2"] = grid(12);
  config.grids["thm3"] = grid(15);
  config.grids["thm4"] = grid(15);
  config.grids["thm5"] = grid(15);
  config.grids["thm6"] = grid(15);
  Grid thm7 = grid(14);
  thm7.mk_max = 12;
  config.grids["thm7"] = thm7;
  config.grids["thm8"] = grid(15);
  config.grids["bell_difference"] = grid(15);
  config.grids["recurrence"] = grid(15);
  config.grids["first_kind_gf"] = grid(15);
  config.grids["t_gf"] = grid(15);
  config.grids["s2_paths"] = grid(20);
  config.grids["s1r_paths"] = grid(15);
  config.grids["inverse"] = grid(12);
  config.grids["gf_inverse"] = grid(30);
  config.grids["parity"] = grid(20);
  Grid dobinski = grid(8);
  dobinski.xs = {0.5, 1.0, 2.0};
  config.grids["dobinski"] = dobinski;
  return config;
}

CheckReport check_thm1(const Grid& grid, const SuiteConfig& config) {
  return run_timed(
      "thm1", "T_r(n+r,k+r) = sum_l C(n,l) T(l,k) r^(n-l)", describe(grid),
      integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        const TriangleTable base = t_source(grid.nmax, config);
        const auto direct = per_r(grid.r_set, [&](const Rational& r) {
          return second_kind_direct_table(Family::Tr, grid.nmax, r);
        });
        const auto gf = per_r(grid.r_set, [&](const Rational& r) {
          return triangle_via_gf(Family::Tr, grid.nmax, r,
                                 gf_order(grid, config));
        });
        for (int n = 0; n <= grid.nmax; ++n) {
          for (int k = 0; k <= n; ++k) {
            for (std::size_t ri = 0; ri < grid.r_set.size(); ++ri) {
              const Rational& r = grid.r_set[ri];
              const Rational conv = r_central_factorial_second_convolution(
                  base, static_cast<unsigned>(n), static_cast<unsigned>(k), r);
              if (!rec.equal({{"n", str(n)}, {"k", str(k)},
                              {"r", r.to_string()},
                              {"paths", "direct=convolution"}},
                             direct[ri].at(n, k), conv)) {
                return;
              }
              if (!rec.equal({{"n", str(n)}, {"k", str(k)},
                              {"r", r.to_string()}, {"paths", "gf=convolution"}},
                             gf[ri].at(n, k), conv)) {
                return;
              }
            }
          }
        }
      });
}

CheckReport check_thm2(const Grid& grid, const SuiteConfig&) {
  return run_timed(
      "thm2",
      "(r+x)^n = sum_l sum_k (x)_k C(n,l) T_r(l+r,k+r) (k/2)^(n-l)",
      describe(grid), integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        std::vector<Polynomial> falling;
        for (int k = 0; k <= grid.nmax; ++k) {
          falling.push_back(falling_factorial_poly(static_cast<unsigned>(k), 0));
        }
        std::vector<std::vector<Polynomial>> rhs;
        for (const auto& r : grid.r_set) {
          const TriangleTable tr =
              second_kind_direct_table(Family::Tr, grid.nmax, r);
          std::vector<Polynomial> row;
          for (int n = 0; n <= grid.nmax; ++n) {
            Polynomial sum;
            for (int l = 0; l <= n; ++l) {
              for (int k = 0; k <= l; ++k) {
                const Rational weight =
                    binomial(static_cast<unsigned>(n),
                             static_cast<unsigned>(l)) *
                    tr.at(l, k) *
                    Rational(k, 2).pow(n - l);
                if (!weight.is_zero()) sum += falling[k] * weight;
              }
            }
            row.push_back(std::move(sum));
          }
          rhs.push_back(std::move(row));
        }
        compare_polys(rec, grid, poly_family(grid, binomial_power), rhs);
      });
}

CheckReport check_thm3(const Grid& grid, const SuiteConfig&) {
  return run_timed(
      "thm3",
      "B_n^(c,r)(x) = sum_k x^k T_r(n+r,k+r) against the EGF "
      "e^(rt) e^(x(e^(t/2)-e^(-t/2))) at x = 0..nmax",
      describe(grid), integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        const auto nmax = static_cast<unsigned>(grid.nmax);
        const auto polys = poly_family(grid, r_central_bell_poly);
        // values[ri][xi][n]
        std::vector<std::vector<std::vector<Rational>>> values;
        for (const auto& r : grid.r_set) {
          std::vector<std::vector<Rational>> per_x;
          for (unsigned xi = 0; xi <= nmax; ++xi) {
            per_x.push_back(
                r_central_bell_gf_values(nmax, r, Rational(static_cast<long>(xi))));
          }
          values.push_back(std::move(per_x));
        }
        for (unsigned n = 0; n <= nmax; ++n) {
          for (unsigned xi = 0; xi <= nmax; ++xi) {
            for (std::size_t ri = 0; ri < grid.r_set.size(); ++ri) {
              const Rational x(static_cast<long>(xi));
              if (!rec.equal({{"n", str(n)}, {"x", x.to_string()},
                              {"r", grid.r_set[ri].to_string()}},
                             polys[ri][n].evaluate(x), values[ri][xi][n])) {
                return;
              }
            }
          }
        }
      });
}

CheckReport check_thm4(const Grid& grid, const SuiteConfig& config) {
  return run_timed(
      "thm4",
      "(1/k!) delta^k r^n = T_r(n+r,k+r) for n >= k, 0 for n < k",
      describe(grid), integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        const auto gf = per_r(grid.r_set, [&](const Rational& r) {
          return triangle_via_gf(Family::Tr, grid.nmax, r,
                                 gf_order(grid, config));
        });
        for (int n = 0; n <= grid.nmax; ++n) {
          const Polynomial power = Polynomial::monomial(static_cast<size_t>(n));
          for (int k = 0; k <= grid.nmax; ++k) {
            for (std::size_t ri = 0; ri < grid.r_set.size(); ++ri) {
              const Rational lhs =
                  central_difference(static_cast<unsigned>(k), power,
                                     grid.r_set[ri]) /
                  factorial(static_cast<unsigned>(k));
              const Rational rhs = n >= k ? gf[ri].at(n, k) : Rational(0);
              if (!rec.equal({{"n", str(n)}, {"k", str(k)},
                              {"r", grid.r_set[ri].to_string()}},
                             lhs, rhs)) {
                return;
              }
            }
          }
        }
      });
}

CheckReport check_thm5(const Grid& grid, const SuiteConfig&) {
  return run_timed("thm5",
                   "B_n^(c,r)(x) = sum_l C(n,l) B_(n-l)^(c)(x) r^l",
                   describe(grid), integer_r_scope(grid.r_set),
                   [&](Recorder& rec) {
                     if (grid.nmax < 0) return;
                     compare_polys(rec, grid,
                                   poly_family(grid, r_central_bell_poly),
                                   poly_family(grid, r_central_bell_via_binomial));
                   });
}

CheckReport check_thm6(const Grid& grid, const SuiteConfig&) {
  return run_timed(
      "thm6",
      "B_n^(c,r)(x) = sum_l sum_m x^m C(n,l) S2(l,m) (r-m/2)^(n-l)",
      describe(grid), integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        compare_polys(rec, grid, poly_family(grid, r_central_bell_poly),
                      poly_family(grid, r_central_bell_via_stirling));
      });
}

CheckReport check_bell_difference(const Grid& grid, const SuiteConfig&) {
  return run_timed(
      "bell_difference", "B_n^(c,r)(x) = sum_k x^k (1/k!) delta^k r^n",
      describe(grid), integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        compare_polys(rec, grid, poly_family(grid, r_central_bell_poly),
                      poly_family(grid, r_central_bell_via_difference));
      });
}

CheckReport check_thm7(const Grid& grid, const SuiteConfig& config) {
  const std::string desc = "m+k<=" + str(grid.mk_max) + "; " + describe(grid);
  return run_timed(
      "thm7",
      "C(m+k,m) T_r(n+r,m+k+r) = sum_l C(n,l) T_r(l+r,m+r) T(n-l,k)", desc,
      integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0 || grid.mk_max < 0) return;
        const TriangleTable base = t_source(grid.nmax, config);
        const auto tr = per_r(grid.r_set, [&](const Rational& r) {
          return second_kind_direct_table(Family::Tr, grid.nmax, r);
        });
        for (int n = 0; n <= grid.nmax; ++n) {
          for (int m = 0; m <= std::min(grid.mk_max, n); ++m) {
            for (int k = 0; m + k <= std::min(grid.mk_max, n); ++k) {
              for (std::size_t ri = 0; ri < grid.r_set.size(); ++ri) {
                const auto un = static_cast<unsigned>(n);
                const Rational lhs =
                    binomial(static_cast<unsigned>(m + k),
                             static_cast<unsigned>(m)) *
                    tr[ri].at(n, m + k);
                Rational rhs;
                for (int l = m; l <= n - k; ++l) {
                  rhs += binomial(un, static_cast<unsigned>(l)) *
                         tr[ri].at(l, m) * base.at(n - l, k);
                }
                if (!rec.equal({{"n", str(n)}, {"m", str(m)}, {"k", str(k)},
                                {"r", grid.r_set[ri].to_string()}},
                               lhs, rhs)) {
                  return;
                }
              }
            }
          }
        }
      });
}

CheckReport check_thm8(const Grid& grid, const SuiteConfig&) {
  return run_timed(
      "thm8", "(x+r)^n = sum_k T_r(n+r,k+r) x^[k]", describe(grid),
      integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        std::vector<Polynomial> central;
        for (int k = 0; k <= grid.nmax; ++k) {
          central.push_back(central_factorial_poly(static_cast<unsigned>(k)));
        }
        std::vector<std::vector<Polynomial>> rhs;
        for (const auto& r : grid.r_set) {
          const TriangleTable tr =
              second_kind_direct_table(Family::Tr, grid.nmax, r);
          std::vector<Polynomial> row;
          for (int n = 0; n <= grid.nmax; ++n) {
            Polynomial sum;
            for (int k = 0; k <= n; ++k) sum += central[k] * tr.at(n, k);
            row.push_back(std::move(sum));
          }
          rhs.push_back(std::move(row));
        }
        compare_polys(rec, grid, poly_family(grid, binomial_power), rhs);
      });
}

CheckReport check_recurrence(const Grid& grid, const SuiteConfig&) {
  return run_timed(
      "recurrence",
      "t_r(n+1+r,k+r) = t_r(n-1+r,k-2+r) + 2r t_r(n-1+r,k-1+r) + "
      "(r^2-((n-1)/2)^2) t_r(n-1+r,k+r), against (x+r)^[n]",
      describe(grid), "stated", [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        compare_tables(rec, grid,
                       per_r(grid.r_set,
                             [&](const Rational& r) {
                               return r_central_factorial_first_recurrence_table(
                                   grid.nmax, r);
                             }),
                       per_r(grid.r_set, [&](const Rational& r) {
                         return first_kind_poly_table(Family::tr, grid.nmax, r);
                       }));
      });
}

CheckReport check_first_kind_gf(const Grid& grid, const SuiteConfig& config) {
  return run_timed(
      "first_kind_gf",
      "(1/k!) (t/2+sqrt(1+t^2/4))^(2r) (2 log(t/2+sqrt(1+t^2/4)))^k "
      "generates t_r(n+r,k+r), against (x+r)^[n]",
      describe(grid), "stated", [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        compare_tables(rec, grid,
                       per_r(grid.r_set,
                             [&](const Rational& r) {
                               return r_central_factorial_first_gf_table(
                                   grid.nmax, r, gf_order(grid, config));
                             }),
                       per_r(grid.r_set, [&](const Rational& r) {
                         return first_kind_poly_table(Family::tr, grid.nmax, r);
                       }));
      });
}

CheckReport check_t_gf(const Grid& grid, const SuiteConfig& config) {
  return run_timed(
      "t_gf",
      "(1/k!) (2 log(t/2+sqrt(1+t^2/4)))^k generates t(n,k), against x^[n]",
      describe(grid, false), "stated", [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        Grid single = grid;
        single.r_set = {Rational(0)};
        compare_tables(
            rec, single,
            {central_factorial_first_gf_table(grid.nmax,
                                              gf_order(grid, config))},
            {first_kind_poly_table(Family::t, grid.nmax, 0)});
      });
}

CheckReport check_s2_paths(const Grid& grid, const SuiteConfig& config) {
  return run_timed(
      "s2_paths", "(1/k!) (e^t-1)^k generates S2(n,k), against its recurrence",
      describe(grid, false), "stated", [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        Grid single = grid;
        single.r_set = {Rational(0)};
        compare_tables(rec, single,
                       {triangle_via_gf(Family::S2, grid.nmax, 0,
                                        gf_order(grid, config))},
                       {stirling2_table(grid.nmax)});
      });
}

CheckReport check_s1r_paths(const Grid& grid, const SuiteConfig& config) {
  return run_timed(
      "s1r_paths",
      "(1+t)^r (1/k!) log(1+t)^k generates S_1,r(n+r,k+r), against (x+r)_n",
      describe(grid), "stated", [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        compare_tables(rec, grid,
                       per_r(grid.r_set,
                             [&](const Rational& r) {
                               return triangle_via_gf(Family::S1r, grid.nmax, r,
                                                      gf_order(grid, config));
                             }),
                       per_r(grid.r_set, [&](const Rational& r) {
                         return r_stirling1_table(grid.nmax, r);
                       }));
      });
}

CheckReport check_inverse_relations(const Grid& grid,
                                    const SuiteConfig& config) {
  return run_timed(
      "inverse",
      "sum_j T(n,j) t(j,k) = [n=k]; sum_j T_r(n+r,j+r) t(j,k) = C(n,k) "
      "r^(n-k)",
      describe(grid), integer_r_scope(grid.r_set), [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        const TriangleTable big_t = t_source(grid.nmax, config);
        const TriangleTable small_t =
            first_kind_poly_table(Family::t, grid.nmax, 0);
        const auto tr = per_r(grid.r_set, [&](const Rational& r) {
          return second_kind_direct_table(Family::Tr, grid.nmax, r);
        });
        const auto product = [&](const TriangleTable& left, int n, int k) {
          Rational sum;
          for (int j = k; j <= n; ++j) sum += left.at(n, j) * small_t.at(j, k);
          return sum;
        };
        for (int n = 0; n <= grid.nmax; ++n) {
          for (int k = 0; k <= grid.nmax; ++k) {
            if (!rec.equal({{"n", str(n)}, {"k", str(k)}, {"relation", "T*t"}},
                           product(big_t, n, k),
                           Rational(n == k ? 1 : 0))) {
              return;
            }
            for (std::size_t ri = 0; ri < grid.r_set.size(); ++ri) {
              const Rational& r = grid.r_set[ri];
              const Rational rhs =
                  k <= n ? binomial(static_cast<unsigned>(n),
                                    static_cast<unsigned>(k)) *
                               r.pow(n - k)
                         : Rational(0);
              if (!rec.equal({{"n", str(n)}, {"k", str(k)},
                              {"relation", "T_r*t"}, {"r", r.to_string()}},
                             product(tr[ri], n, k), rhs)) {
                return;
              }
            }
          }
        }
      });
}

CheckReport check_gf_inverse(const Grid& grid, const SuiteConfig&) {
  return run_timed(
      "gf_inverse",
      "f(t) = 2 log(t/2+sqrt(1+t^2/4)) and e^(t/2)-e^(-t/2) compose to t",
      "order=" + str(grid.nmax), "stated", [&](Recorder& rec) {
        if (grid.nmax < 1) return;
        const auto order = static_cast<std::size_t>(grid.nmax);
        const Series f = central_log_kernel(order);
        const Series f_inv = central_difference_kernel(order);
        const Series t = Series::identity(order);
        const Series forward = compose(f, f_inv);
        const Series backward = compose(f_inv, f);
        for (std::size_t i = 0; i <= order; ++i) {
          if (!rec.equal({{"coeff", str(static_cast<long>(i))},
                          {"composition", "f(f_inv)"}},
                         forward[i], t[i])) {
            return;
          }
          if (!rec.equal({{"coeff", str(static_cast<long>(i))},
                          {"composition", "f_inv(f)"}},
                         backward[i], t[i])) {
            return;
          }
        }
      });
}

CheckReport check_parity(const Grid& grid, const SuiteConfig& config) {
  return run_timed(
      "parity",
      "T(n,k) = t(n,k) = 0 for n-k odd; 2^n T(n,k) is an integer (observed)",
      describe(grid, false), "stated", [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        const TriangleTable big_t = t_source(grid.nmax, config);
        const TriangleTable small_t =
            first_kind_poly_table(Family::t, grid.nmax, 0);
        for (int n = 0; n <= grid.nmax; ++n) {
          for (int k = 0; k <= n; ++k) {
            if ((n - k) % 2 == 1) {
              if (!rec.equal({{"n", str(n)}, {"k", str(k)}, {"family", "T"}},
                             big_t.at(n, k), 0)) {
                return;
              }
              if (!rec.equal({{"n", str(n)}, {"k", str(k)}, {"family", "t"}},
                             small_t.at(n, k), 0)) {
                return;
              }
            }
            const Rational scaled = Rational(2).pow(n) * big_t.at(n, k);
            if (!rec.record({{"n", str(n)}, {"k", str(k)},
                             {"family", "2^n T"}},
                            scaled.is_integer(), scaled.to_string(),
                            "integer")) {
              return;
            }
          }
        }
      });
}

CheckReport check_dobinski(const Grid& grid, const SuiteConfig&) {
  std::string desc = describe(grid, false) + "; x in {";
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    if (i != 0) desc += ",";
    desc += format_double(grid.xs[i]);
  }
  desc += "}; max_terms=" + str(grid.max_terms) +
          "; tolerance=" + format_double(grid.tolerance) +
          "; accuracy=" + format_double(grid.accuracy);
  return run_timed(
      "dobinski",
      "double series for B_n^(c)(x) agrees with the exact polynomial", desc,
      "stated", [&](Recorder& rec) {
        if (grid.nmax < 0) return;
        for (int n = 0; n <= grid.nmax; ++n) {
          const Polynomial exact_poly =
              central_bell_poly(static_cast<unsigned>(n));
          for (const double x : grid.xs) {
            const Rational exact =
                exact_poly.evaluate(Rational(mpq_class(x)));
            const DobinskiResult approx = dobinski_eval(
                static_cast<unsigned>(n), x, grid.max_terms, grid.tolerance);
            const double error = std::fabs(approx.value - exact.to_double());
            if (!rec.record({{"n", str(n)}, {"x", format_double(x)},
                             {"terms_used", str(approx.terms_used)}},
                            error <= grid.accuracy,
                            format_double(approx.value), exact.to_string())) {
              return;
            }
          }
        }
      });
}

CheckReport run_check(const std::string& id, const Grid& grid,
                      const SuiteConfig& config) {
  using Fn = CheckReport (*)(const Grid&, const SuiteConfig&);
  static const std::map<std::string, Fn> table{
      {"thm1", check_thm1},
      {"thm2", check_thm2},
      {"thm3", check_thm3},
      {"thm4", check_thm4},
      {"thm5", check_thm5},
      {"thm6", check_thm6},
      {"thm7", check_thm7},
      {"thm8", check_thm8},
      {"bell_difference", check_bell_difference},
      {"recurrence", check_recurrence},
      {"first_kind_gf", check_first_kind_gf},
      {"t_gf", check_t_gf},
      {"s2_paths", check_s2_paths},
      {"s1r_paths", check_s1r_paths},
      {"inverse", check_inverse_relations},
      {"gf_inverse", check_gf_inverse},
      {"parity", check_parity},
      {"dobinski", check_dobinski},
  };
  const auto it = table.find(id);
  if (it == table.end()) {
    throw std::invalid_argument("unknown check id '" + id + "'");
  }
  return it->second(grid, config);
}

std::vector<CheckReport> run_all(const SuiteConfig& config) {
  for (const auto& [id, grid] : config.grids) {
    if (std::find(check_ids().begin(), check_ids().end(), id) ==
        check_ids().end()) {
      throw std::invalid_argument("unknown check id '" + id + "'");
    }
  }
  std::vector<CheckReport> reports;
  for (const auto& id : check_ids()) {
    const auto it = config.grids.find(id);
    if (it != config.grids.end()) {
      reports.push_back(run_check(id, it->second, config));
    }
  }
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const auto& r) {
    return r.status == CheckStatus::Fail;
  });
}

}  // namespace cfact
