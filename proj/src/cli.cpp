#include "crossunion/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "crossunion/circle.hpp"
#include "crossunion/combinat.hpp"
#include "crossunion/compression.hpp"
#include "crossunion/json_io.hpp"
#include "crossunion/search.hpp"
#include "crossunion/shadow.hpp"
#include "crossunion/verify.hpp"

namespace crossunion {

namespace {

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  Json result;
  std::vector<InequalityRecord> rows;  // for --format csv
  bool csv_capable = false;
  bool failed = false;
};

struct Triple {
  int n = 0, k = 0, s = 0;
};

void add_triple(CLI::App* cmd, Triple& t) {
  cmd->add_option("--n", t.n, "ground set size")->required();
  cmd->add_option("--k", t.k, "set size")->required();
  cmd->add_option("--s", t.s, "number of families minus one")->required();
}

void triple_params(RunConfig& cfg, const Triple& t) {
  cfg.parameters = {{"n", std::to_string(t.n)}, {"k", std::to_string(t.k)}, {"s", std::to_string(t.s)}};
}

std::vector<Family> read_families(const std::vector<std::string>& paths) {
  std::vector<Family> out;
  for (const auto& p : paths) out.push_back(read_family_file(p));
  return out;
}

void join_paths(RunConfig& cfg, const std::vector<std::string>& paths) {
  std::string joined;
  for (const auto& p : paths) joined += (joined.empty() ? "" : ",") + p;
  cfg.parameters.emplace_back("in", joined);
}

Json config_json(const RunConfig& cfg) {
  Json params = Json::object();
  for (const auto& [key, value] : cfg.parameters) params[key] = value;
  return Json{{"subcommand", cfg.subcommand},
              {"parameters", params},
              {"seed", cfg.seed},
              {"format", cfg.format},
              {"threads", cfg.threads},
              {"output", cfg.output_path}};
}

}  // namespace

unsigned default_thread_count() {
  const char* env = std::getenv("CROSSUNION_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || value == 0 || value > 1024) return 1;
  return static_cast<unsigned>(value);
}

std::string header_timestamp() {
  std::time_t t = 0;
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  char* end = nullptr;
  const long long parsed = epoch != nullptr ? std::strtoll(epoch, &end, 10) : 0;
  if (epoch != nullptr && end != epoch && *end == '\0' && parsed >= 0) {
    t = static_cast<std::time_t>(parsed);
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_thread_count();

  CLI::App app{"Exact computations on cross-union families of k-sets", "crossunion"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", cfg.output_path, "write to this file instead of stdout");
  app.add_option("--threads", cfg.threads, "worker threads (default from CROSSUNION_THREADS)")
      ->check(CLI::Range(1U, 1024U));

  std::function<Outcome()> action;

  // search
  Triple search_t;
  bool no_circle = false, no_rwise = false, no_g0 = false, with_raw = false;
  auto* search = app.add_subcommand("search", "exact maximum of the total size");
  add_triple(search, search_t);
  search->add_flag("--no-circle", no_circle, "disable the averaging bound");
  search->add_flag("--no-rwise", no_rwise, "disable the cap on the smallest family");
  search->add_flag("--no-g0-lower", no_g0, "disable the lower bound on the smallest family");
  search->add_flag("--raw", with_raw, "also run the unreduced search (C(n,k) <= 16)");
  search->callback([&] {
    triple_params(cfg, search_t);
    cfg.parameters.emplace_back("circle_bound", no_circle ? "false" : "true");
    cfg.parameters.emplace_back("rwise_bound", no_rwise ? "false" : "true");
    cfg.parameters.emplace_back("g0_lower_bound", no_g0 ? "false" : "true");
    cfg.parameters.emplace_back("raw", with_raw ? "true" : "false");
    action = [&] {
      SearchOptions opt{!no_circle, !no_rwise, !no_g0, cfg.threads};
      const SearchResult r = max_sum_search(search_t.n, search_t.k, search_t.s, opt);
      Outcome o;
      o.result = to_json(r);
      bool sound = r.max_sum >= r.star_value && !r.certificates.empty();
      for (const auto& c : r.certificates) {
        sound = sound && c.total_size() == r.max_sum && is_cross_union(c);
      }
      if (with_raw) {
        const RawResult raw = raw_max_search(search_t.n, search_t.k, search_t.s);
        o.result["raw_max_sum"] = raw.max_sum;
        o.result["raw_agrees"] = raw.max_sum == r.max_sum;
        sound = sound && raw.max_sum == r.max_sum;
      }
      o.failed = !sound;
      return o;
    };
  });

  // verify-main
  Triple main_t;
  auto* verify_main = app.add_subcommand("verify-main", "value and uniqueness of the star maximum");
  add_triple(verify_main, main_t);
  verify_main->callback([&] {
    triple_params(cfg, main_t);
    action = [&] {
      const MainTheoremReport r =
          verify_main_theorem(main_t.n, main_t.k, main_t.s, SearchOptions{true, true, true, cfg.threads});
      return Outcome{to_json(r), {}, false, !r.holds};
    };
  });

  // lemma26
  int l26_k = 0, l26_l = 0, l26_s = 0, l26_kmax = 25, l26_span = 20;
  bool l26_grid = false;
  auto* lemma26 = app.add_subcommand("lemma26", "lower bound on the smallest family (both cases)");
  auto* l26_grid_flag = lemma26->add_flag("--grid", l26_grid, "sweep 1 <= l <= k <= k-max, s in [4l, 4l+s-span]");
  lemma26->add_option("--k", l26_k)->excludes(l26_grid_flag);
  lemma26->add_option("--l", l26_l)->excludes(l26_grid_flag);
  lemma26->add_option("--s", l26_s)->excludes(l26_grid_flag);
  lemma26->add_option("--k-max", l26_kmax)->capture_default_str();
  lemma26->add_option("--s-span", l26_span)->capture_default_str();
  lemma26->callback([&] {
    if (l26_grid) {
      cfg.parameters = {{"grid", "true"}, {"k_max", std::to_string(l26_kmax)}, {"s_span", std::to_string(l26_span)}};
    } else {
      cfg.parameters = {{"k", std::to_string(l26_k)}, {"l", std::to_string(l26_l)}, {"s", std::to_string(l26_s)}};
    }
    action = [&] {
      Outcome o;
      o.csv_capable = true;
      if (l26_grid) {
        GridSummary g = lemma26_grid(l26_kmax, l26_span, cfg.threads, cfg.format == "csv");
        o.result = to_json(g);
        o.rows = std::move(g.records);
        o.failed = g.violations > 0;
      } else {
        const auto cases = check_lemma_computation(l26_k, l26_l, l26_s);
        const InequalityRecord& used = applicable_case(cases);
        o.result = Json{{"case", used.name},
                        {"holds", used.holds},
                        {"records", Json::array({to_json(cases.first), to_json(cases.second)})}};
        o.rows = {used};
        o.failed = !used.holds;
      }
      return o;
    };
  });

  // lemma27
  int l27_n = 0, l27_k = 0, l27_l = 0, l27_nmax = 60;
  std::string l27_x0;
  bool l27_grid = false;
  auto* lemma27 = app.add_subcommand("lemma27", "comparison of normalized slices at a rational point");
  auto* l27_grid_flag = lemma27->add_flag("--grid", l27_grid, "sweep n <= n-max, x0 in steps of 1/2");
  lemma27->add_option("--n", l27_n)->excludes(l27_grid_flag);
  lemma27->add_option("--k", l27_k)->excludes(l27_grid_flag);
  lemma27->add_option("--l", l27_l)->excludes(l27_grid_flag);
  lemma27->add_option("--x0", l27_x0, "rational, e.g. 21/2")->excludes(l27_grid_flag);
  lemma27->add_option("--n-max", l27_nmax)->capture_default_str();
  lemma27->callback([&] {
    if (l27_grid) {
      cfg.parameters = {{"grid", "true"}, {"n_max", std::to_string(l27_nmax)}};
    } else {
      cfg.parameters = {{"n", std::to_string(l27_n)}, {"k", std::to_string(l27_k)},
                        {"l", std::to_string(l27_l)}, {"x0", l27_x0}};
    }
    action = [&] {
      Outcome o;
      o.csv_capable = true;
      if (l27_grid) {
        GridSummary g = lemma27_grid(l27_nmax, cfg.threads, cfg.format == "csv");
        o.result = to_json(g);
        o.rows = std::move(g.records);
        o.failed = g.violations > 0 || g.equality_mismatches > 0;
      } else {
        if (l27_x0.empty()) throw UsageError("lemma27 needs --x0");
        const SlicesCheck c = check_different_slices(l27_n, l27_k, l27_l, parse_rational(l27_x0));
        o.result = to_json(c);
        o.rows = {c.record};
        o.failed = !c.consistent;
      }
      return o;
    };
  });

  // example13
  int ex_k = 0, ex_c = 0, ex_s = 0;
  auto* example13 = app.add_subcommand("example13", "the construction that can beat the star");
  example13->add_option("--k", ex_k)->required();
  example13->add_option("--c", ex_c)->required();
  example13->add_option("--s", ex_s)->required();
  example13->callback([&] {
    cfg.parameters = {{"k", std::to_string(ex_k)}, {"c", std::to_string(ex_c)}, {"s", std::to_string(ex_s)}};
    action = [&] {
      const Example13Report r = example13_sum(ex_k, ex_c, ex_s);
      return Outcome{to_json(r), {r.record}, true, !r.cross_union};
    };
  });

  // circle
  std::vector<std::string> circle_in;
  std::uint64_t trials = 0;
  auto* circle = app.add_subcommand("circle", "averaging inequality for a tuple of families");
  circle->add_option("--in", circle_in, "family files, one per family")->required()->check(CLI::ExistingFile);
  circle->add_option("--trials", trials, "Monte Carlo trials (0 skips the estimate)")->capture_default_str();
  circle->callback([&] {
    cfg.parameters.clear();
    join_paths(cfg, circle_in);
    cfg.parameters.emplace_back("trials", std::to_string(trials));
    action = [&] {
      const std::vector<Family> fams = read_families(circle_in);
      Outcome o;
      try {
        const CircleReport r = circle_check(fams);
        o.result = to_json(r);
        o.failed = !r.holds;
      } catch (const NotCrossUnion& e) {
        o.result = Json{{"cross_union", false}, {"witness", sets_to_json(e.witness())}};
        o.failed = true;
        return o;
      }
      o.result["cross_union"] = true;
      if (trials > 0) {
        std::vector<int> ks;
        for (const Family& f : fams) ks.push_back(f.k());
        const std::vector<SetMask> cover = default_cover(fams.front().n(), ks);
        o.result["cover"] = sets_to_json(cover);
        o.result["estimate"] = circle_expectation(fams, cover, trials, cfg.seed, cfg.threads);
      }
      return o;
    };
  });

  // shadow
  std::string shadow_in;
  int level = 1;
  auto* shadow_cmd = app.add_subcommand("shadow", "shadow of a family and the Lovasz bound");
  shadow_cmd->add_option("--in", shadow_in, "family file")->required()->check(CLI::ExistingFile);
  shadow_cmd->add_option("--level", level, "shadow level")->required();
  shadow_cmd->callback([&] {
    cfg.parameters = {{"in", shadow_in}, {"level", std::to_string(level)}};
    action = [&] {
      const Family f = read_family_file(shadow_in);
      const ShadowReport r = lovasz_check(f, level);
      Json result = to_json(r);
      result["shadow"] = to_json(shadow(f, level));
      return Outcome{result, {}, false, !r.holds};
    };
  });

  // shift
  std::vector<std::string> shift_in;
  bool nest = false;
  auto* shift = app.add_subcommand("shift", "shift families to a fixpoint");
  shift->add_option("--in", shift_in, "family files; several are shifted jointly")->required()->check(CLI::ExistingFile);
  shift->add_flag("--nest", nest, "also normalize to a nested tuple (needs cross-union input)");
  shift->callback([&] {
    cfg.parameters.clear();
    join_paths(cfg, shift_in);
    cfg.parameters.emplace_back("nest", nest ? "true" : "false");
    action = [&] {
      const std::vector<Family> fams = read_families(shift_in);
      const auto [shifted, trace] = joint_shift_fixpoint(fams);
      Json list = Json::array();
      for (const Family& f : shifted) list.push_back(to_json(f));
      Json result{{"shifted", list}, {"trace", to_json(trace)}};
      if (nest) {
        if (fams.size() < 2) throw UsageError("--nest needs at least two families");
        result["nested"] = to_json(nest_normalize(FamilyTuple(fams)));
      }
      return Outcome{result, {}, false, false};
    };
  });

  // question41
  Triple q_t;
  auto* question41 = app.add_subcommand("question41", "compare the exact maximum with both constructions");
  add_triple(question41, q_t);
  question41->callback([&] {
    triple_params(cfg, q_t);
    action = [&] {
      const Question41Report r =
          explore_question41(q_t.n, q_t.k, q_t.s, SearchOptions{true, true, true, cfg.threads});
      return Outcome{to_json(r), {}, false, false};
    };
  });

  // eq1
  int e_n = 0, e_k = 0, e_s = 0, e_kmax = 20, e_smax = 100;
  bool e_grid = false;
  auto* eq1 = app.add_subcommand("eq1", "normalized star size identity");
  auto* e_grid_flag = eq1->add_flag("--grid", e_grid, "sweep k <= k-max, s <= s-max, 1 <= l <= k");
  eq1->add_option("--n", e_n)->excludes(e_grid_flag);
  eq1->add_option("--k", e_k)->excludes(e_grid_flag);
  eq1->add_option("--s", e_s)->excludes(e_grid_flag);
  eq1->add_option("--k-max", e_kmax)->capture_default_str();
  eq1->add_option("--s-max", e_smax)->capture_default_str();
  eq1->callback([&] {
    if (e_grid) {
      cfg.parameters = {{"grid", "true"}, {"k_max", std::to_string(e_kmax)}, {"s_max", std::to_string(e_smax)}};
    } else {
      cfg.parameters = {{"n", std::to_string(e_n)}, {"k", std::to_string(e_k)}, {"s", std::to_string(e_s)}};
    }
    action = [&] {
      Outcome o;
      o.csv_capable = true;
      if (e_grid) {
        GridSummary g = eq1_grid(e_kmax, e_smax, cfg.threads, cfg.format == "csv");
        o.result = to_json(g);
        o.rows = std::move(g.records);
        o.failed = g.violations > 0;
      } else {
        const InequalityRecord r = check_eq1_identity(e_n, e_k, e_s);
        o.result = to_json(r);
        o.rows = {r};
        o.failed = !r.holds;
      }
      return o;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const CLI::App* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  Outcome outcome;
  try {
    outcome = action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (cfg.format == "csv" && !outcome.csv_capable) {
    err << "error: --format csv is only available for lemma26, lemma27, example13 and eq1\n";
    return kExitUsage;
  }

  std::ostringstream text;
  const std::string stamp = header_timestamp();
  if (cfg.format == "csv") {
    text << "# crossunion " << kVersion << '\n'
         << "# timestamp " << stamp << '\n'
         << "# config " << config_json(cfg).dump() << '\n';
    write_csv_header(text);
    for (const auto& row : outcome.rows) write_csv_row(text, row);
  } else {
    const Json doc{{"tool", "crossunion"},
                   {"version", kVersion},
                   {"timestamp", stamp},
                   {"config", config_json(cfg)},
                   {"result", outcome.result}};
    text << doc.dump(2) << '\n';
  }
  if (cfg.output_path.empty()) {
    out << text.str();
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!(file << text.str())) {
      err << "error: cannot write " << cfg.output_path << '\n';
      return kExitUsage;
    }
  }
  return outcome.failed ? kExitFailed : kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"crossunion"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace crossunion
