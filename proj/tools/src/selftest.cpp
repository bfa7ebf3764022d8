#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "mv/bracket.hpp"
#include "mv/combinatorics.hpp"
#include "mv/siegel_veech.hpp"
#include "mv/volumes.hpp"
#include "mv/wick.hpp"
#include "mvcli/app.hpp"

namespace mvcli {

namespace {

using mv::BigRational;
using mv::PiValue;
using mv::Stratum;

struct Check {
  std::string title;
  std::function<bool()> run;
};

BigRational binomial(int n, int k) {
  return mv::factorial(n) / (mv::factorial(k) * mv::factorial(n - k));
}

// All strata with 2 <= 2g - 2 <= max_size, genus by genus.
std::vector<Stratum> strata_up_to(int max_size) {
  std::vector<Stratum> out;
  for (int n = 2; n <= max_size; n += 2) {
    for (const auto& p : mv::partitions_of_size(n)) out.emplace_back(p.parts());
  }
  return out;
}

PiValue vol(const std::vector<int>& m, const mv::EvalOptions& opts) { return mv::volume_value(Stratum(m), opts); }

bool is_class(const mv::SVResult& r) {
  return r.value.is_zero() || r.value.exponent() == mv::expected_pi_exponent(r.kind);
}

std::vector<Check> checks(const mv::EvalOptions& opts) {
  std::vector<Check> list;

  list.push_back({"volume H(2) = 1/120 * pi^4", [&] {
                    return vol({2}, opts) == PiValue::monomial(BigRational(1, 120), 4);
                  }});

  list.push_back({"volume H(1,1) = 1/135 * pi^4 by both routes", [&] {
                    const PiValue expected = PiValue::monomial(BigRational(1, 135), 4);
                    return vol({1, 1}, opts) == expected && mv::principal_volume(2) == expected;
                  }});

  list.push_back({"principal closed form equals general pipeline for g = 3, 4", [&] {
                    return mv::principal_volume(3) == vol(std::vector<int>(4, 1), opts) &&
                           mv::principal_volume(4) == vol(std::vector<int>(6, 1), opts);
                  }});

  list.push_back({"every volume with 2g - 2 <= 6 is a positive multiple of pi^(2g)", [&] {
                    for (const Stratum& s : strata_up_to(6)) {
                      const PiValue v = mv::volume_value(s, opts);
                      if (!v.is_monomial() || v.exponent() != 2 * s.genus() || v.leading_coefficient().sign() <= 0) {
                        return false;
                      }
                    }
                    return true;
                  }});

  list.push_back({"error ordering at g = 3: |eps(1,1,1,1)| < |eps(4)|", [&] {
                    const Stratum a({1, 1, 1, 1});
                    const Stratum b({4});
                    return mv::abs(mv::relative_error(a, mv::volume_value(a, opts))) <
                           mv::abs(mv::relative_error(b, mv::volume_value(b, opts)));
                  }});

  list.push_back({"minimal stratum ratio lies in (0.55, 1) and increases for g = 2, 3, 4", [&] {
                    BigRational previous;
                    for (int g = 2; g <= 4; ++g) {
                      const Stratum s({2 * g - 2});
                      const BigRational r = mv::relative_error(s, mv::volume_value(s, opts)) + BigRational(1);
                      if (!(r > BigRational(55, 100) && r < BigRational(1))) return false;
                      if (g > 2 && !(r > previous)) return false;
                      previous = r;
                    }
                    return true;
                  }});

  list.push_back({"Siegel-Veech: sc H(1,1) = 27/8 and pi exponent classes hold", [&] {
                    if (mv::sc_constant(Stratum({1, 1}), 0, 1, opts).value != PiValue::rational(BigRational(27, 8))) {
                      return false;
                    }
                    for (int g = 2; g <= 3; ++g) {
                      if (!is_class(mv::sc2_principal(g, opts))) return false;
                    }
                    for (const Stratum& s : strata_up_to(4)) {
                      const int n = static_cast<int>(s.degrees().size());
                      for (int i = 0; i < n; ++i) {
                        for (int j = i + 1; j < n; ++j) {
                          if (!is_class(mv::sc_constant(s, i, j, opts))) return false;
                          if (!is_class(mv::cyl_constant(s, i, j, opts))) return false;
                        }
                        if (!is_class(mv::loop_constant(s, i, opts))) return false;
                        if (!is_class(mv::handle_constant(s, i, opts))) return false;
                      }
                      if (!is_class(mv::cyl1_total(s, opts)) || !is_class(mv::area1_constant(s, opts))) return false;
                    }
                    return true;
                  }});

  list.push_back({"cyl1 equals the sum of its cyl and handle parts for 2g - 2 <= 4", [&] {
                    for (const Stratum& s : strata_up_to(4)) {
                      PiValue sum;
                      const int n = static_cast<int>(s.degrees().size());
                      for (int i = 0; i < n; ++i) {
                        for (int j = i + 1; j < n; ++j) sum += mv::cyl_constant(s, i, j, opts).value;
                        sum += mv::handle_constant(s, i, opts).value;
                      }
                      if (sum != mv::cyl1_total(s, opts).value) return false;
                    }
                    return true;
                  }});

  list.push_back({"single-part multi brackets match single brackets; complements match the filtered set partitions (N <= 8)", [&] {
                    for (int total = 1; total <= 8; ++total) {
                      for (int k = 1; k <= total; ++k) {
                        for (const auto& comp : mv::compositions(total, k)) {
                          std::vector<mv::Partition> args;
                          for (int c : comp) args.push_back(mv::Partition{c});
                          const PiValue lhs = mv::multi_bracket(args, opts.threads);
                          const PiValue rhs = mv::single_bracket(mv::PartMultiset(comp));
                          if (lhs != rhs) return false;
                        }
                      }
                    }
                    for (int n = 1; n <= 8; ++n) {
                      std::vector<std::vector<mv::SetPartition>> by_length(n + 2);
                      for (const auto& p : mv::set_partitions(n)) by_length[p.length()].push_back(p);
                      for (int k = 1; k <= n; ++k) {
                        for (const auto& rho : by_length[k]) {
                          std::set<mv::SetPartition> fast;
                          for (const auto& a : mv::complementary_partitions(rho)) fast.insert(a);
                          std::set<mv::SetPartition> slow;
                          for (const auto& a : by_length[n + 1 - k]) {
                            if (mv::are_complementary(rho, a)) slow.insert(a);
                          }
                          if (fast != slow) return false;
                        }
                      }
                    }
                    return true;
                  }});

  list.push_back({"composition identity for 1 <= k <= n <= 9; Bell numbers for n = 1..6", [] {
                    for (int n = 1; n <= 9; ++n) {
                      for (int k = 1; k <= n; ++k) {
                        BigRational sum;
                        for (const auto& p : mv::partitions_of_size(n, k)) {
                          BigRational term = mv::factorial(k);
                          for (const auto& [part, mult] : p.multiplicities()) term /= mv::factorial(mult);
                          sum += term;
                        }
                        if (sum != binomial(n - 1, k - 1)) return false;
                      }
                    }
                    const int bell[] = {1, 2, 5, 15, 52, 203};
                    for (int n = 1; n <= 6; ++n) {
                      int count = 0;
                      for ([[maybe_unused]] const auto& p : mv::set_partitions(n)) ++count;
                      if (count != bell[n - 1]) return false;
                    }
                    return true;
                  }});

  list.push_back({"|E(m)| <= 2^40 (|m| - 1)! for parts >= 2 and |m| <= 10", [] {
                    for (int size = 2; size <= 10; ++size) {
                      for (const auto& p : mv::partitions_of_size(size)) {
                        if (p.parts().back() < 2) continue;
                        const BigRational e = mv::abs(mv::error_term(mv::PartMultiset(p.parts())).approximate());
                        if (e > mv::pow2(40) * mv::factorial(size - 1)) return false;
                      }
                    }
                    return true;
                  }});

  list.push_back({"Wick sums agree for 1 and 4 worker threads", [] {
                    const std::vector<mv::Partition> args{{3, 2, 1}, {4, 1}, {2, 2}};
                    return mv::multi_bracket_coefficient(args, 1) == mv::multi_bracket_coefficient(args, 4);
                  }});

  return list;
}

}  // namespace

bool selftest(const mv::EvalOptions& opts, std::ostream& out) {
  const auto list = checks(opts);
  int passed = 0;
  for (std::size_t k = 0; k < list.size(); ++k) {
    bool ok = false;
    std::string note;
    try {
      ok = list[k].run();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    passed += ok ? 1 : 0;
    out << (ok ? "PASS " : "FAIL ") << (k + 1 < 10 ? " " : "") << k + 1 << "  " << list[k].title << note << "\n";
  }
  out << passed << "/" << list.size() << " checks passed\n";
  return passed == static_cast<int>(list.size());
}

}  // namespace mvcli
