#include "mvcli/app.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mv/combinatorics.hpp"
#include "mv/errors.hpp"
#include "mv/siegel_veech.hpp"
#include "mvcli/cache.hpp"
#include "mvcli/render.hpp"
#include "mvcli/stratum_spec.hpp"

namespace mvcli {

namespace {

struct Settings {
  std::string format = "exact";
  int digits = kDefaultDigits;
  std::string cache;
  int max_weight = mv::EvalOptions{}.max_weight;
  int threads = 1;
  bool stats = false;

  Format fmt() const { return *parse_format(format); }
  mv::EvalOptions eval() const { return {threads, max_weight}; }
};

void print_stats(const mv::VolumeResult& r, std::ostream& err) {
  const auto& d = r.diagnostics;
  err << r.stratum.str() << ": " << (d.cached ? "cached" : "computed") << ", " << d.wick_evaluations
      << " Wick sums, " << d.complements << " complements, " << d.nonzero_terms << " nonzero terms, "
      << d.bracket_cache_entries << " bracket cache entries, " << std::fixed << std::setprecision(3) << d.elapsed_ms
      << " ms\n";
}

int cmd_volume(const Settings& cfg, const std::vector<std::string>& specs, std::ostream& out, std::ostream& err) {
  std::vector<mv::Stratum> strata;
  for (const auto& s : specs) strata.push_back(parse_stratum(s));
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : strata) {
    const mv::VolumeResult r = mv::volume(s, cfg.eval());
    if (cfg.stats) print_stats(r, err);
    if (cfg.fmt() == Format::json) {
      rows.push_back(volume_json(r, cfg.digits));
    } else {
      if (strata.size() > 1) out << s.str() << " ";
      out << render_value(r.volume, cfg.fmt(), cfg.digits) << "\n";
    }
  }
  if (cfg.fmt() == Format::json) out << (rows.size() == 1 ? rows[0] : rows).dump(2) << "\n";
  return kOk;
}

int cmd_principal(const Settings& cfg, int g, bool verify, std::ostream& out) {
  const mv::PiValue v = mv::principal_volume(g);
  std::optional<bool> matches;
  if (verify) matches = mv::volume_value(mv::Stratum(std::vector<int>(2 * g - 2, 1)), cfg.eval()) == v;
  if (cfg.fmt() == Format::json) {
    nlohmann::json j = pi_value_json(v);
    j["genus"] = g;
    j["decimal"] = v.to_decimal(cfg.digits);
    if (matches) j["matches_general_pipeline"] = *matches;
    out << j.dump(2) << "\n";
  } else {
    out << render_value(v, cfg.fmt(), cfg.digits) << "\n";
    if (matches) out << "matches general pipeline: " << (*matches ? "yes" : "no") << "\n";
  }
  return kOk;
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

int cmd_table(const Settings& cfg, int max_size, std::ostream& out) {
  std::vector<mv::Stratum> strata;
  for (int n = 2; n <= max_size; n += 2) {
    for (const auto& p : mv::partitions_of_size(n)) strata.emplace_back(p.parts());
  }
  // Fail before printing anything.
  for (const auto& s : strata) {
    if (s.weight() > cfg.max_weight) throw mv::InfeasibleSize(s.weight(), cfg.max_weight);
  }

  std::vector<mv::VolumeResult> results;
  for (const auto& s : strata) results.push_back(mv::volume(s, cfg.eval()));

  // Per genus: which strata have the smallest and largest |eps|.
  struct Extremes {
    const mv::VolumeResult* smallest = nullptr;
    const mv::VolumeResult* largest = nullptr;
  };
  std::map<int, Extremes> by_genus;
  for (const auto& r : results) {
    auto& e = by_genus[r.stratum.genus()];
    const mv::BigRational a = mv::abs(r.relative_error);
    if (!e.smallest || a < mv::abs(e.smallest->relative_error)) e.smallest = &r;
    if (!e.largest || a > mv::abs(e.largest->relative_error)) e.largest = &r;
  }
  auto expected = [](int g, const mv::VolumeResult* smallest, const mv::VolumeResult* largest) {
    return smallest->stratum.degrees() == std::vector<int>(2 * g - 2, 1) &&
           largest->stratum.degrees() == std::vector<int>{2 * g - 2};
  };

  if (cfg.fmt() == Format::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results) rows.push_back(volume_json(r, cfg.digits));
    nlohmann::json ordering = nlohmann::json::array();
    for (const auto& [g, e] : by_genus) {
      ordering.push_back({{"genus", g},
                          {"smallest", e.smallest->stratum.str()},
                          {"largest", e.largest->stratum.str()},
                          {"as_observed", expected(g, e.smallest, e.largest)}});
    }
    out << nlohmann::json{{"rows", rows}, {"error_ordering", ordering}}.dump(2) << "\n";
    return kOk;
  }

  std::vector<std::array<std::string, 4>> cells{{"stratum", "volume", "prediction", "relative error"}};
  for (const auto& r : results) {
    cells.push_back({r.stratum.str(), render_value(r.volume, cfg.fmt(), cfg.digits), r.prediction.str(),
                     r.relative_error_text});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    out << pad(row[0], width[0]) << "  " << pad(row[1], width[1]) << "  " << pad(row[2], width[2]) << "  " << row[3]
        << "\n";
  }
  out << "\nerror ordering, expected smallest |eps| at H(1,...,1) and largest at H(2g-2):\n";
  for (const auto& [g, e] : by_genus) {
    out << "  g=" << g << ": smallest " << e.smallest->stratum.str() << ", largest " << e.largest->stratum.str()
        << (expected(g, e.smallest, e.largest) ? " (as observed)" : " (differs)") << "\n";
  }
  return kOk;
}

struct SvArgs {
  std::string stratum;
  std::string kind;
  std::vector<int> zeros;
  std::optional<int> angle;
};

int cmd_sv(const Settings& cfg, const SvArgs& a, std::ostream& out) {
  const auto kind = mv::parse_kind(a.kind);
  if (!kind) throw mv::InvalidStratum("unknown kind '" + a.kind + "'");
  const mv::Stratum s = parse_stratum(a.stratum);
  auto need = [&](std::size_t count) {
    if (a.zeros.size() != count) {
      throw mv::InvalidStratum("--kind " + a.kind + " takes " + std::to_string(count) + " zero index(es)");
    }
  };
  std::vector<int> z;
  for (int i : a.zeros) z.push_back(i - 1);
  const mv::EvalOptions opts = cfg.eval();

  mv::SVResult r;
  switch (*kind) {
    case mv::SVKind::sc:
      need(2);
      r = mv::sc_constant(s, z[0], z[1], opts);
      break;
    case mv::SVKind::sc2: {
      need(0);
      const auto d = s.degrees();
      if (s.genus() < 2 || std::any_of(d.begin(), d.end(), [](int m) { return m != 1; })) {
        throw mv::InvalidStratum("sc2 is defined on H(1,...,1) of genus >= 2");
      }
      r = mv::sc2_principal(s.genus(), opts);
      break;
    }
    case mv::SVKind::loop:
    case mv::SVKind::loop_per_angle:
      need(1);
      if (a.angle) {
        r = mv::loop_per_angle(s, z[0], *a.angle, opts);
      } else if (*kind == mv::SVKind::loop) {
        r = mv::loop_constant(s, z[0], opts);
      } else {
        throw mv::InvalidStratum("--kind loop_per_angle needs --angle");
      }
      break;
    case mv::SVKind::cyl:
      need(2);
      r = mv::cyl_constant(s, z[0], z[1], opts);
      break;
    case mv::SVKind::handle:
      need(1);
      r = mv::handle_constant(s, z[0], opts);
      break;
    case mv::SVKind::cyl1:
      need(0);
      r = mv::cyl1_total(s, opts);
      break;
    case mv::SVKind::area1:
      need(0);
      r = mv::area1_constant(s, opts);
      break;
  }
  if (cfg.fmt() == Format::json) {
    out << sv_json(r, cfg.digits).dump(2) << "\n";
  } else {
    out << render_sv_text(r, cfg.fmt(), cfg.digits);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Masur-Veech volumes and Siegel-Veech constants", "mvcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings cfg;
  app.add_option("--format", cfg.format, "exact, decimal or json")
      ->check(CLI::IsMember({"exact", "decimal", "json"}));
  app.add_option("--digits", cfg.digits, "significant digits for decimal output")
      ->check(CLI::Range(1, kMaxDigits));
  app.add_option("--cache", cfg.cache, "volume cache file (MV_CACHE overrides)");
  app.add_option("--max-weight", cfg.max_weight, "refuse strata with sum(m_i + 1) above this")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", cfg.threads, "worker threads for Wick sums")->check(CLI::Range(1, 1024));
  app.add_flag("--stats", cfg.stats, "print evaluation diagnostics to stderr");

  std::vector<std::string> volume_specs;
  auto* volume = app.add_subcommand("volume", "volume of one or more strata");
  volume->add_option("stratum", volume_specs, "e.g. 2,1,1 or H(2,1,1)")->required();

  int genus = 2;
  bool verify = false;
  auto* principal = app.add_subcommand("principal", "closed form for H(1,...,1) of genus g");
  principal->add_option("g", genus)->required()->check(CLI::Range(2, 1000));
  principal->add_flag("--verify", verify, "compare against the general pipeline");

  int max_size = 6;
  auto* table = app.add_subcommand("table", "all strata with 2g - 2 <= max-size");
  table->add_option("--max-size", max_size)->check(CLI::Range(2, 1000));

  SvArgs sv_args;
  auto* sv = app.add_subcommand("sv", "Siegel-Veech constant");
  sv->add_option("stratum", sv_args.stratum)->required();
  sv->add_option("--kind", sv_args.kind, "sc, sc2, loop, loop_per_angle, cyl, handle, cyl1, area1")->required();
  sv->add_option("--zeros", sv_args.zeros, "1-based zero indices, i or i,j")->delimiter(',');
  sv->add_option("--angle", sv_args.angle, "angle index j, 1 <= j <= m_i - 1");

  auto* self = app.add_subcommand("selftest", "run the built-in oracle checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    const auto cache_path = resolve_cache_path(cfg.cache);
    if (cache_path) load_cache(*cache_path);

    int code = kOk;
    if (*volume) code = cmd_volume(cfg, volume_specs, out, err);
    if (*principal) code = cmd_principal(cfg, genus, verify, out);
    if (*table) code = cmd_table(cfg, max_size, out);
    if (*sv) code = cmd_sv(cfg, sv_args, out);
    if (*self) code = selftest(cfg.eval(), out) ? kOk : kSelftestFailed;

    if (cache_path) save_cache(*cache_path);
    return code;
  } catch (const mv::InfeasibleSize& e) {
    err << "error: " << e.what() << " (raise --max-weight to override)\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace mvcli
