#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "kuforge/groupring.hpp"
#include "kuforge/kumod.hpp"
#include "kuforge/localcoh.hpp"
#include "kuforge/milnor.hpp"
#include "kuforge/module.hpp"
#include "kuforge/polyalg.hpp"
#include "kuforge/ss.hpp"
#include "kuforge/verify.hpp"

namespace kuforge::cli {

namespace {

constexpr int kDefaultRank = 2;
constexpr int kDefaultDegree = 16;
constexpr const char* kDegreeEnv = "KUFORGE_DEGREE_BOUND";

struct RunConfig {
  std::string subcommand;
  int rank = kDefaultRank;
  int max_degree = kDefaultDegree;
  std::string format = "tsv";
  std::string out_path;
  std::vector<std::string> suites;
  int jobs = 1;
  bool rank_given = false;

  // dims
  std::string functor = "all";
  std::optional<int> index;
  // localcoh
  std::string module = "Lfrak(1)";
  std::string route = "cech";
  bool integral = false;
  int max_level = localcoh::CechOptions{}.max_level;
  // verify
  bool list = false;
};

using Row = std::vector<Cell>;

Cell num(std::int64_t v) { return v; }
Cell num(std::uint64_t v) { return static_cast<std::int64_t>(v); }
Cell num(int v) { return static_cast<std::int64_t>(v); }

// Rows lo..hi computed on up to `jobs` threads, returned in order.
std::vector<Row> rows_for(int lo, int hi, int jobs, const std::function<Row(int)>& make) {
  const int count = std::max(0, hi - lo + 1);
  std::vector<Row> rows(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (int k = next++; k < count; k = next++) {
      try {
        rows[static_cast<std::size_t>(k)] = make(lo + k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int width = std::clamp(jobs, 1, std::max(count, 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

Table degree_table(std::string name, std::vector<std::string> columns, std::vector<Row> rows) {
  columns.insert(columns.begin(), "degree");
  return {std::move(name), std::move(columns), std::move(rows)};
}

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

// ---- dims ----

const std::vector<std::string> kFunctors = {"S", "Lambda", "K", "L", "Ltilde", "Kfrak", "Lfrak"};

Table frak_table(const std::string& name, const RunConfig& cfg, bool lfrak) {
  const int r = cfg.rank;
  auto dim = [lfrak, r](int a, int b) { return lfrak ? milnor::lfrak_dim(r, a, b) : milnor::kfrak_dim(r, a, b); };
  if (cfg.index) {
    const int a = *cfg.index;
    return degree_table(name, {"dim"},
                        rows_for(0, cfg.max_degree, cfg.jobs, [&](int b) { return Row{num(b), num(dim(a, b))}; }));
  }
  std::vector<std::string> cols;
  for (int a = 1; a <= r; ++a) cols.push_back("a" + std::to_string(a));
  return degree_table(name, cols, rows_for(0, cfg.max_degree, cfg.jobs, [&](int b) {
                        Row row{num(b)};
                        for (int a = 1; a <= r; ++a) row.push_back(num(dim(a, b)));
                        return row;
                      }));
}

Table functor_table(const std::string& f, const RunConfig& cfg) {
  const int r = cfg.rank;
  const int n_max = cfg.max_degree;
  auto simple = [&](std::function<std::uint64_t(int)> dim) {
    return degree_table(f, {"dim"}, rows_for(0, n_max, cfg.jobs, [&](int n) { return Row{num(n), num(dim(n))}; }));
  };
  if (f == "S") return simple([r](int n) { return polyalg::sym_dim(r, n); });
  if (f == "Lambda")
    return degree_table(f, {"dim"}, rows_for(0, std::min(r, n_max), 1, [r](int a) {
                          return Row{num(a), num(polyalg::ext_dim(r, a))};
                        }));
  if (f == "K") return simple([r](int n) { return milnor::k_dim(r, n); });
  if (f == "L") return simple([r](int n) { return milnor::l_dim(r, n); });
  if (f == "Ltilde") return simple([r](int n) { return milnor::ltilde_dim(r, n); });
  if (f == "Kfrak") return frak_table(f, cfg, false);
  return frak_table(f, cfg, true);
}

Report run_dims(const RunConfig& cfg) {
  if (cfg.index && (*cfg.index < 0 || *cfg.index > cfg.rank))
    throw std::invalid_argument("dims: --index must lie in 0.." + std::to_string(cfg.rank));
  if (cfg.index && cfg.functor != "Kfrak" && cfg.functor != "Lfrak")
    throw std::invalid_argument("dims: --index applies to Kfrak and Lfrak only");
  Report rep{"dims", cfg.rank, cfg.max_degree, {}};
  if (cfg.functor == "all") {
    for (const auto& f : kFunctors) rep.tables.push_back(functor_table(f, cfg));
  } else {
    rep.tables.push_back(functor_table(cfg.functor, cfg));
  }
  return rep;
}

// ---- groupring ----

Report run_groupring(const RunConfig& cfg) {
  const int r = cfg.rank;
  if (r < 1) throw std::invalid_argument("groupring: rank must be at least 1");
  Report rep{"groupring", r, cfg.max_degree, {}};
  rep.tables.push_back(degree_table(
      "filtration", {"quotient", "log2_order", "subquotient", "predicted_subquotient_dim", "two_torsion_dim", "head_dim"},
      rows_for(1, cfg.max_degree, cfg.jobs, [r](int n) {
        const auto f = groupring::filtration_report(r, n);
        return Row{num(n),
                   f.quotient.to_string(),
                   num(static_cast<std::uint64_t>(f.quotient.log2_order())),
                   f.subquotient.to_string(),
                   num(milnor::pbar_dim(r, n)),
                   num(static_cast<std::uint64_t>(f.two_torsion_dim)),
                   num(static_cast<std::uint64_t>(f.head_dim))};
      })));
  // P^{n+k}(F^n) inside 2^k P, independent of the rank flag
  constexpr int kCompletion = 3;
  std::vector<std::string> cols;
  for (int k = 1; k <= kCompletion; ++k) cols.push_back("k" + std::to_string(k));
  rep.tables.push_back(
      degree_table("completion", cols, rows_for(1, std::min(kCompletion, cfg.max_degree), cfg.jobs, [](int n) {
                     Row row{num(n)};
                     for (int k = 1; k <= kCompletion; ++k) row.push_back(groupring::completion_inclusion_check(n, k));
                     return row;
                   })));
  return rep;
}

// ---- ku ----

Table graded_table(const std::string& name, const exactla::GradedDim& g, int lo, int hi) {
  std::vector<Row> rows;
  for (int n = lo; n <= hi; ++n) rows.push_back({num(n), num(g.at(n))});
  return degree_table(name, {"dim"}, std::move(rows));
}

Report run_ku_cohom(const RunConfig& cfg) {
  const int r = cfg.rank;
  Report rep{"ku-cohom", r, cfg.max_degree, {}};
  const auto table = kumod::ku_cohom_table(r, cfg.max_degree);
  std::vector<Row> rows;
  for (const auto& row : table.rows)
    rows.push_back({num(row.degree), num(row.torsion_dim), num(row.modv_dim), num(row.cotorsion_modv_dim),
                    num(row.z2_free_rank), row.polynomial_unit});
  rep.tables.push_back(degree_table(
      "ku_cohom", {"torsion_dim", "modv_dim", "cotorsion_modv_dim", "z2_free_rank", "polynomial_unit"}, rows));
  rep.tables.push_back(graded_table("hz_cohom", kumod::hz_cohom_table(r, cfg.max_degree), 0, cfg.max_degree));
  rows.clear();
  for (const auto& q : kumod::qfrak_tables(r, cfg.max_degree).rows)
    rows.push_back({num(q.degree), num(q.cohom_image), num(q.cohom_kernel)});
  rep.tables.push_back(degree_table("qfrak", {"image_dim", "kernel_dim"}, rows));
  return rep;
}

Report run_ku_hom(const RunConfig& cfg) {
  const int r = cfg.rank;
  Report rep{"ku-hom", r, cfg.max_degree, {}};
  const auto table = kumod::ku_hom_table(r, cfg.max_degree);
  std::vector<Row> rows;
  for (const auto& row : table.rows)
    rows.push_back({num(row.degree), num(row.torsion_dim), num(row.modv_dim), num(row.cotorsion_modv_dim),
                    row.cotorsion.to_string(),
                    num(row.torsion_dim + static_cast<std::int64_t>(row.cotorsion.log2_order()))});
  rep.tables.push_back(degree_table(
      "ku_hom", {"torsion_dim", "modv_dim", "cotorsion_modv_dim", "cotorsion", "finite_log2_order"}, rows));
  rep.tables.push_back(graded_table("hz_hom", kumod::hz_hom_table(r, cfg.max_degree), 0, cfg.max_degree));
  rows.clear();
  for (const auto& q : kumod::qfrak_tables(r, cfg.max_degree).rows)
    rows.push_back({num(q.degree), num(q.hom_image), num(q.hom_kernel)});
  rep.tables.push_back(degree_table("qfrak", {"image_dim", "kernel_dim"}, rows));
  return rep;
}

// ---- localcoh ----

std::vector<std::string> h_columns(int r) {
  std::vector<std::string> cols;
  for (int i = 0; i <= r; ++i) cols.push_back("H" + std::to_string(i));
  return cols;
}

Table lc_table(const std::string& name, const localcoh::LocalCohomologyTable& t) {
  std::vector<Row> rows;
  for (int n = t.lo; n <= t.hi; ++n) {
    Row row{num(n)};
    for (int i = 0; i <= t.rank; ++i) row.push_back(num(t.at(i).at(n)));
    rows.push_back(std::move(row));
  }
  return degree_table(name, h_columns(t.rank), std::move(rows));
}

Report run_localcoh(const RunConfig& cfg) {
  const auto spec = localcoh::ModuleSpec::parse(cfg.module, cfg.rank);
  if (spec.kind == localcoh::ModuleKind::HZplus && cfg.route == "resolution")
    throw std::invalid_argument("localcoh: HZplus is only available through the Cech route");
  const int bound = cfg.max_degree;
  Report rep{"localcoh", spec.rank, bound, {}};
  const auto pres = localcoh::present_module(spec);
  localcoh::CechOptions opt;
  opt.max_level = cfg.max_level;
  if (cfg.route == "cech" || cfg.route == "both")
    rep.tables.push_back(lc_table("cech", localcoh::cech_local_cohomology(pres, -bound, bound, opt)));
  if (cfg.route == "resolution" || cfg.route == "both")
    rep.tables.push_back(lc_table("resolution", localcoh::resolution_local_cohomology(pres, -bound, bound)));
  if (cfg.integral) {
    const auto integ = localcoh::integral_cech_local_cohomology(spec.rank, bound);
    std::vector<Row> rows;
    for (int n = -bound; n <= bound; ++n) {
      Row row{num(n)};
      for (int j = 0; j <= spec.rank; ++j) {
        std::string g = integ.at(j, n).to_string();
        if (j == 0 && n == 0 && integ.zero_index != 1) g += " (index " + std::to_string(integ.zero_index) + ")";
        row.push_back(g);
      }
      rows.push_back(std::move(row));
    }
    rep.tables.push_back(degree_table("integral", h_columns(spec.rank), std::move(rows)));
  }
  return rep;
}

// ---- ss ----

Table page_table(const std::string& name, const ss::SSPage& page) {
  std::vector<std::string> cols{"free"};
  for (int s = 0; s >= -page.rank; --s) cols.push_back("s" + std::to_string(s));
  std::vector<Row> rows;
  for (int m = page.lo; m <= page.hi; ++m) {
    Row row{num(m), num(page.free_at(m))};
    for (int s = 0; s >= -page.rank; --s) row.push_back(num(page.column(s).at(m)));
    rows.push_back(std::move(row));
  }
  return degree_table(name, cols, std::move(rows));
}

Table abutment_table(const std::string& name, const ss::AbutmentReport& a) {
  std::vector<Row> rows;
  for (const auto& row : a.rows)
    rows.push_back({num(row.degree), num(row.einfty_log2), num(row.einfty_free), num(row.target_log2),
                    num(row.target_free), row.equal()});
  return degree_table(name, {"einfty_log2", "einfty_free", "target_log2", "target_free", "equal"}, std::move(rows));
}

Report run_ss(const RunConfig& cfg, bool& consistent) {
  const int r = cfg.rank;
  const int bound = cfg.max_degree;
  Report rep{"ss", r, bound, {}};
  const auto ku = ss::ku_spectral_sequence(r, bound);
  const auto hz = ss::hz_spectral_sequence(r, bound);
  rep.tables.push_back(page_table("ku_e1", ku.e1));
  rep.tables.push_back(page_table("ku_einfty", ku.einfty));

  std::vector<std::string> cols;
  for (int i = 0; i <= r - 2; ++i) cols.push_back("layer" + std::to_string(i));
  cols.push_back("beyond");
  std::vector<Row> rows;
  const auto beyond = ku.layers.from(r - 1);
  for (int m = ku.e1.lo; m <= ku.e1.hi; ++m) {
    Row row{num(m)};
    for (int i = 0; i <= r - 2; ++i) row.push_back(num(ku.layers.layers[static_cast<std::size_t>(i)].at(m)));
    row.push_back(num(beyond.at(m)));
    rows.push_back(std::move(row));
  }
  rep.tables.push_back(degree_table("vadic_layers", cols, std::move(rows)));

  rep.tables.push_back(page_table("hz_e2", hz.e2));
  rep.tables.push_back(page_table("hz_einfty", hz.einfty));
  rows.clear();
  for (const auto& d : hz.differentials)
    rows.push_back({num(d.from_m), num(d.length), num(d.from_s), num(d.to_s), num(d.to_m), num(d.rank)});
  rep.tables.push_back(degree_table("hz_differentials", {"length", "from_s", "to_s", "to_m", "rank"}, rows));
  rep.tables.push_back(degree_table("hz_permanent_cycles", {"h0_index", "permanent_index"},
                                    {{num(0), num(hz.h0_index), num(hz.permanent_index)}}));

  const auto ku_ab = ss::einfty_consistency(r, bound);
  const auto hz_ab = ss::hz_abutment(r, bound);
  rep.tables.push_back(abutment_table("ku_abutment", ku_ab));
  rep.tables.push_back(abutment_table("hz_abutment", hz_ab));

  Table problems{"problems", {"source", "problem"}, {}};
  for (const auto& p : ku_ab.problems) problems.rows.push_back({std::string("ku"), p});
  for (const auto& p : hz_ab.problems) problems.rows.push_back({std::string("HZ"), p});
  rep.tables.push_back(std::move(problems));
  consistent = ku_ab.all_equal() && hz_ab.all_equal();
  return rep;
}

// ---- verify ----

Report run_verify(const RunConfig& cfg, bool& passed) {
  verify::VerifyOptions opt;
  if (cfg.rank_given) opt.rank = cfg.rank;
  opt.jobs = cfg.jobs;
  std::vector<std::string> names = cfg.suites;
  if (names.empty())
    for (const auto& s : verify::suites()) names.push_back(s.name);
  const auto reports = verify::run_suites(names, opt);

  Report rep{"verify", cfg.rank_given ? cfg.rank : 0, cfg.max_degree, {}};
  Table suites{"suites", {"suite", "criterion", "title", "passed", "checks", "failures"}, {}};
  Table failed{"failed_checks", {"suite", "check", "detail"}, {}};
  passed = true;
  for (const auto& s : reports) {
    suites.rows.push_back({s.suite, num(s.criterion), s.title, s.passed(), num(static_cast<std::uint64_t>(s.checks.size())),
                           num(static_cast<std::uint64_t>(s.failures()))});
    for (const auto& c : s.checks)
      if (!c.passed) failed.rows.push_back({s.suite, c.name, c.detail});
    passed = passed && s.passed();
  }
  rep.tables.push_back(std::move(suites));
  rep.tables.push_back(std::move(failed));
  return rep;
}

void write_verify_text(const Report& rep, std::ostream& out) {
  const auto& suites = rep.tables.at(0);
  const auto& failed = rep.tables.at(1);
  std::size_t pass = 0;
  for (const auto& row : suites.rows) {
    const bool ok = std::get<bool>(row[3]);
    const auto crit = std::get<std::int64_t>(row[1]);
    out << (ok ? "PASS" : "FAIL");
    if (crit > 0) out << " criterion " << crit;
    out << " [" << std::get<std::string>(row[0]) << "] " << std::get<std::string>(row[2]) << " ("
        << std::get<std::int64_t>(row[4]) - std::get<std::int64_t>(row[5]) << '/' << std::get<std::int64_t>(row[4])
        << " checks)\n";
    for (const auto& f : failed.rows)
      if (std::get<std::string>(f[0]) == std::get<std::string>(row[0]))
        out << "  - " << std::get<std::string>(f[1]) << ": " << std::get<std::string>(f[2]) << '\n';
    if (ok) ++pass;
  }
  out << pass << '/' << suites.rows.size() << " suites passed\n";
}

// ---- plumbing ----

std::optional<int> parse_bound(const char* text) {
  const std::string s(text);
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_degree = true) {
  sub->add_option("--rank,-r", cfg.rank, "Rank r of V = F_2^r")->check(CLI::NonNegativeNumber)->capture_default_str();
  if (with_degree)
    sub->add_option("--max-degree,-n", cfg.max_degree, "Largest degree reported (env " + std::string(kDegreeEnv) + ")")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  sub->add_option("--out,-o", cfg.out_path, "Write output to this file instead of stdout");
  sub->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

void write_tsv(const Report& report, std::ostream& out) {
  bool first = true;
  for (const auto& t : report.tables) {
    if (!first) out << '\n';
    first = false;
    out << "# " << t.name << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "\t" : "") << t.columns[c];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << cell_text(row[c]);
      out << '\n';
    }
  }
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["subcommand"] = report.subcommand;
  j["rank"] = report.rank;
  j["max_degree"] = report.max_degree;
  j["tables"] = nlohmann::ordered_json::object();
  for (const auto& t : report.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < row.size() && c < t.columns.size(); ++c)
        std::visit([&](const auto& v) { obj[t.columns[c]] = v; }, row[c]);
      rows.push_back(std::move(obj));
    }
    j["tables"][t.name] = std::move(rows);
  }
  out << j.dump(2) << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv(kDegreeEnv)) {
    const auto bound = parse_bound(env);
    if (!bound) {
      err << "error: " << kDegreeEnv << " must be a non-negative integer, got '" << env << "'\n";
      return usage_error;
    }
    cfg.max_degree = *bound;
  }

  CLI::App app{"Tables and checks for the cohomology of elementary abelian 2-groups", "kuforge"};
  app.require_subcommand(1);

  auto* dims = app.add_subcommand("dims", "Dimensions of S, Lambda, K, L, Ltilde, Kfrak, Lfrak");
  add_common(dims, cfg);
  std::vector<std::string> functors = kFunctors;
  functors.push_back("all");
  dims->add_option("--functor,-f", cfg.functor, "Functor to tabulate")
      ->check(CLI::IsMember(functors))
      ->capture_default_str();
  dims->add_option("--index,-a", cfg.index, "Koszul index a for Kfrak and Lfrak (default: all a)");

  auto* gr = app.add_subcommand("groupring", "Augmentation filtration of Z[V] and completion checks");
  add_common(gr, cfg);
  auto* kc = app.add_subcommand("ku-cohom", "ku^*(BV_+): torsion, mod v and cotorsion dimensions");
  add_common(kc, cfg);
  auto* kh = app.add_subcommand("ku-hom", "ku_*(BV_+): torsion and cotorsion groups");
  add_common(kh, cfg);

  auto* lc = app.add_subcommand("localcoh", "Local cohomology of a graded module");
  add_common(lc, cfg);
  lc->add_option("--module,-m", cfg.module,
                 "Module: Lfrak(r,i) | Lfrak(i) | Kmodule | Kunital | TorsKu | HZplus | Free, optional (r)")
      ->capture_default_str();
  lc->add_option("--route", cfg.route, "Cech complex, free resolution with local duality, or both")
      ->check(CLI::IsMember({"cech", "resolution", "both"}))
      ->capture_default_str();
  lc->add_option("--max-level", cfg.max_level, "Koszul levels tried before giving up on stabilization")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  lc->add_flag("--integral", cfg.integral, "Also print the integral local cohomology of HZ^*(BV_+)");

  auto* sq = app.add_subcommand("ss", "Local cohomology spectral sequences for ku and HZ");
  add_common(sq, cfg);

  auto* vf = app.add_subcommand("verify", "Run verification suites; exit 0 iff all pass");
  add_common(vf, cfg);
  vf->add_option("--suite,-s", cfg.suites, "Suite to run, repeatable (default: all)");
  vf->add_flag("--list", cfg.list, "List suites and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    cfg.rank_given = sub->count("--rank") > 0;
  }
  for (const auto& s : cfg.suites)
    if (!verify::is_suite(s)) {
      err << "error: unknown suite '" << s << "'\n";
      return usage_error;
    }

  if (cfg.list) {
    for (const auto& s : verify::suites()) {
      out << s.name << '\t';
      if (s.criterion > 0) out << "criterion " << s.criterion;
      out << '\t' << s.title << '\n';
    }
    return ok;
  }

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open '" << cfg.out_path << "' for writing\n";
      return usage_error;
    }
  }
  std::ostream& sink = cfg.out_path.empty() ? out : file;

  int status = ok;
  try {
    Report rep;
    if (cfg.subcommand == "dims") {
      rep = run_dims(cfg);
    } else if (cfg.subcommand == "groupring") {
      rep = run_groupring(cfg);
    } else if (cfg.subcommand == "ku-cohom") {
      rep = run_ku_cohom(cfg);
    } else if (cfg.subcommand == "ku-hom") {
      rep = run_ku_hom(cfg);
    } else if (cfg.subcommand == "localcoh") {
      rep = run_localcoh(cfg);
    } else if (cfg.subcommand == "ss") {
      bool consistent = true;
      rep = run_ss(cfg, consistent);
      if (!consistent) {
        err << "ss: E-infinity does not match the abutment\n";
        status = verification_failed;
      }
    } else {
      bool passed = true;
      rep = run_verify(cfg, passed);
      if (!passed) status = verification_failed;
      if (cfg.format == "tsv") {
        write_verify_text(rep, sink);
        return status;
      }
    }
    if (cfg.format == "json")
      write_json(rep, sink);
    else
      write_tsv(rep, sink);
  } catch (const localcoh::StabilizationError& e) {
    err << "error: " << e.what() << " (degree " << e.degree() << ", index " << e.index() << ")\n";
    return not_stabilized;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return verification_failed;
  }
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"kuforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kuforge::cli
