// Command-line front end: orbit sizes and elements, orbital and
// representation characters, cof coefficients, orbital decompositions,
// eigenvalue polynomial evaluation, and the verification sweeps.
//
// Exit codes: 0 ok, 1 verification failure (--strict includes coefficient
// audit mismatches), 2 invalid input, 3 domain error.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ancas/eigenpoly.hpp"
#include "ancas/verify.hpp"

using ancas::Basis;
using ancas::ChMethod;
using ancas::CofVector;
using ancas::LambdaWeight;
using ancas::MuTuple;
using ancas::Partition;
using ancas::Rat;
using ancas::SymExpr;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::string format = "json";
  int jobs = 0;  // 0 = hardware concurrency
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs,
                  "Worker threads for parallel sections (0 = all cores)");
  cmd->add_flag("--timing", c.timing, "Include elapsed_ms in the record");
}

LambdaWeight parse_weight(int rank, const std::string& csv) {
  std::vector<int> m;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("weight coefficient '" + tok +
                                  "' is not an integer");
    }
    if (used != tok.size())
      throw std::invalid_argument("weight coefficient '" + tok +
                                  "' is not an integer");
    m.push_back(v);
  }
  if (static_cast<int>(m.size()) != rank)
    throw std::invalid_argument("weight has " + std::to_string(m.size()) +
                                " coefficients but rank is " +
                                std::to_string(rank));
  return LambdaWeight(std::move(m));
}

LambdaWeight parse_dominant_weight(int rank, const std::string& csv) {
  LambdaWeight w = parse_weight(rank, csv);
  if (!w.dominant())
    throw std::invalid_argument("weight (" + csv + ") is not dominant");
  return w;
}

Partition parse_class(const std::string& csv) {
  std::vector<int> parts;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 2)
      throw std::invalid_argument("class parts must be integers >= 2");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty class");
  return Partition(std::move(parts));
}

ordered_json symexpr_json(const SymExpr& e) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, c] : e.terms()) {
    std::string key = e.basis() == Basis::monomial
                          ? "mu(" + k.str() + ")"
                          : "q(" + k.str() + ")";
    out[key] = ancas::to_string(c);
  }
  return out;
}

ordered_json cof_json(const CofVector& cof) {
  ordered_json out = ordered_json::object();
  for (const auto& cls : ancas::partitions_no_ones(cof.order))
    out[cls.str()] = ancas::to_string(cof.at(cls));
  return out;
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const ordered_json& record, const std::string& format) {
  if (format == "json") {
    std::cout << record.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(record, "", rows);
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) {
      std::string vq = v;
      bool quote = vq.find(',') != std::string::npos;
      std::cout << k << "," << (quote ? "\"" + vq + "\"" : vq) << "\n";
    }
  } else {
    size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
      std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
}

struct Invocation {
  ordered_json request = ordered_json::object();
  std::function<ordered_json()> run;  // returns result object
};

int run_and_emit(const std::string& command, const CommonOpts& common,
                 Invocation inv) {
  ordered_json record;
  record["command"] = command;
  record["status"] = "ok";
  record["request"] = inv.request;
  int code = 0;
  auto started = std::chrono::steady_clock::now();
  try {
    record["result"] = inv.run();
  } catch (const std::invalid_argument& e) {
    record["status"] = "error";
    record.erase("result");
    record["error"] = {{"code", 2}, {"message", e.what()}};
    code = 2;
  } catch (const std::domain_error& e) {
    record["status"] = "error";
    record.erase("result");
    record["error"] = {{"code", 3}, {"message", e.what()}};
    code = 3;
  }
  if (common.timing) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    record["elapsed_ms"] = elapsed.count();
  }
  emit(record, common.format);
  return code;
}

// Representation character with a selectable orbital method, for the
// --rep --method both cross-check.
SymExpr ch_rep_method(const LambdaWeight& w, int s, ChMethod method, int jobs) {
  SymExpr out(Basis::monomial);
  for (const auto& e : ancas::freudenthal(w)) {
    SymExpr ce = ancas::ch_orbit(e.tuple, s, method, jobs);
    ce *= Rat(e.multiplicity);
    out += ce;
  }
  return out;
}

ordered_json suite_json(const ancas::SuiteCheck& c) {
  ordered_json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["checks"] = c.checks;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact power-sum characters of A_N Weyl orbits and representations, "
      "and closed-form Casimir eigenvalue polynomials of orders 4-7"};
  app.require_subcommand(1);

  // ---- orbit ----
  struct {
    int rank = 0;
    std::string weight;
    bool list = false;
    long limit = 1000;
    CommonOpts common;
  } orbit_opts;
  auto* orbit_cmd =
      app.add_subcommand("orbit", "Orbit dimension and optional element list");
  orbit_cmd->add_option("--rank", orbit_opts.rank, "Algebra rank N")
      ->required()
      ->check(CLI::PositiveNumber);
  orbit_cmd
      ->add_option("--weight", orbit_opts.weight,
                   "Comma-separated coefficients over the lambda basis")
      ->required();
  orbit_cmd->add_flag("--list", orbit_opts.list, "Stream orbit elements");
  orbit_cmd->add_option("--limit", orbit_opts.limit,
                        "Cap on listed elements (with --list)");
  add_common(orbit_cmd, orbit_opts.common);

  // ---- chs ----
  struct {
    int rank = 0;
    std::string weight;
    int order = 0;
    std::string method = "formula";
    bool rep = false;
    CommonOpts common;
  } chs_opts;
  auto* chs_cmd = app.add_subcommand(
      "chs", "Power-sum character over the monomial generator basis");
  chs_cmd->add_option("--rank", chs_opts.rank)->required()->check(CLI::PositiveNumber);
  chs_cmd->add_option("--weight", chs_opts.weight)->required();
  chs_cmd->add_option("--order", chs_opts.order, "Power s")
      ->required()
      ->check(CLI::PositiveNumber);
  chs_cmd->add_option("--method", chs_opts.method)
      ->check(CLI::IsMember({"formula", "bruteforce", "both"}))
      ->capture_default_str();
  chs_cmd->add_flag("--rep", chs_opts.rep,
                    "Whole representation instead of one orbit");
  add_common(chs_cmd, chs_opts.common);

  // ---- cof ----
  struct {
    int rank = 0;
    std::string weight;
    int order = 0;
    bool rep = false;
    CommonOpts common;
  } cof_opts;
  auto* cof_cmd = app.add_subcommand(
      "cof", "Power-product coefficients after imposing mu(1) = 0");
  cof_cmd->add_option("--rank", cof_opts.rank)->required()->check(CLI::PositiveNumber);
  cof_cmd->add_option("--weight", cof_opts.weight)->required();
  cof_cmd->add_option("--order", cof_opts.order)->required()->check(CLI::PositiveNumber);
  cof_cmd->add_flag("--rep", cof_opts.rep,
                    "Whole representation instead of one orbit");
  add_common(cof_cmd, cof_opts.common);

  // ---- decompose ----
  struct {
    int rank = 0;
    std::string weight;
    CommonOpts common;
  } dec_opts;
  auto* dec_cmd = app.add_subcommand(
      "decompose", "Orbital decomposition with inner multiplicities");
  dec_cmd->add_option("--rank", dec_opts.rank)->required()->check(CLI::PositiveNumber);
  dec_cmd->add_option("--weight", dec_opts.weight)->required();
  add_common(dec_cmd, dec_opts.common);

  // ---- eigen ----
  struct {
    int rank = 0;
    std::string weight;
    std::string cls;
    std::string norm = "default";
    std::string method = "both";
    CommonOpts common;
  } eig_opts;
  auto* eig_cmd = app.add_subcommand(
      "eigen", "Eigenvalue polynomial value for one partition class");
  eig_cmd->add_option("--rank", eig_opts.rank)->required()->check(CLI::PositiveNumber);
  eig_cmd->add_option("--weight", eig_opts.weight)->required();
  eig_cmd->add_option("--class", eig_opts.cls, "Partition class, e.g. 3,2")
      ->required();
  eig_cmd->add_option("--norm", eig_opts.norm)
      ->check(CLI::IsMember({"default", "unit"}))
      ->capture_default_str();
  eig_cmd->add_option("--method", eig_opts.method)
      ->check(CLI::IsMember({"closed", "cof", "both"}))
      ->capture_default_str();
  add_common(eig_cmd, eig_opts.common);

  // ---- verify ----
  struct {
    std::string suite = "all";
    int rank_max = 6;
    int order_max = 7;
    std::uint64_t seed = 12345;
    bool strict = false;
    CommonOpts common;
  } ver_opts;
  auto* ver_cmd =
      app.add_subcommand("verify", "Batch verification sweeps; exit 0 on pass");
  ver_cmd->add_option("--suite", ver_opts.suite)
      ->check(CLI::IsMember({"all", "orbits", "reductions", "schur", "eigen"}))
      ->capture_default_str();
  ver_cmd->add_option("--rank-max", ver_opts.rank_max)->capture_default_str();
  ver_cmd->add_option("--order-max", ver_opts.order_max)->capture_default_str();
  ver_cmd->add_option("--seed", ver_opts.seed)->capture_default_str();
  ver_cmd->add_flag("--strict", ver_opts.strict,
                    "Coefficient-audit mismatches also fail the run");
  add_common(ver_cmd, ver_opts.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (orbit_cmd->parsed()) {
    Invocation inv;
    inv.request = {{"rank", orbit_opts.rank}, {"weight", orbit_opts.weight}};
    inv.run = [&]() -> ordered_json {
      LambdaWeight w = parse_dominant_weight(orbit_opts.rank, orbit_opts.weight);
      MuTuple mu = ancas::lambda_to_mu(w);
      ordered_json res;
      res["weight_mu"] = mu.str();
      res["dimension"] = ancas::orbit_dimension(w).get_str();
      res["xi"] = ancas::xi(w).get_str();
      if (orbit_opts.list) {
        ordered_json elems = ordered_json::array();
        long listed = 0;
        ancas::Orbit(w).for_each([&](std::span<const int> e) {
          if (listed >= orbit_opts.limit) return;
          std::string s;
          for (size_t i = 0; i < e.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e[i]);
          }
          elems.push_back(s);
          ++listed;
        });
        res["elements"] = std::move(elems);
      }
      return res;
    };
    return run_and_emit("orbit", orbit_opts.common, std::move(inv));
  }

  if (chs_cmd->parsed()) {
    Invocation inv;
    inv.request = {{"rank", chs_opts.rank},
                   {"weight", chs_opts.weight},
                   {"order", chs_opts.order},
                   {"method", chs_opts.method},
                   {"rep", chs_opts.rep}};
    inv.run = [&]() -> ordered_json {
      LambdaWeight w = parse_dominant_weight(chs_opts.rank, chs_opts.weight);
      int jobs = chs_opts.common.jobs;
      auto compute = [&](ChMethod m) {
        return chs_opts.rep ? ch_rep_method(w, chs_opts.order, m, jobs)
                            : ancas::ch_orbit(w, chs_opts.order, m, jobs);
      };
      ordered_json res;
      res["weight_mu"] = ancas::lambda_to_mu(w).str();
      if (chs_opts.method == "both") {
        SymExpr a = compute(ChMethod::formula);
        SymExpr b = compute(ChMethod::bruteforce);
        res["formula"] = symexpr_json(a);
        res["bruteforce"] = symexpr_json(b);
        res["match"] = (a == b);
      } else {
        ChMethod m = chs_opts.method == "formula" ? ChMethod::formula
                                                  : ChMethod::bruteforce;
        res["ch"] = symexpr_json(compute(m));
      }
      return res;
    };
    return run_and_emit("chs", chs_opts.common, std::move(inv));
  }

  if (cof_cmd->parsed()) {
    Invocation inv;
    inv.request = {{"rank", cof_opts.rank},
                   {"weight", cof_opts.weight},
                   {"order", cof_opts.order},
                   {"rep", cof_opts.rep}};
    inv.run = [&]() -> ordered_json {
      LambdaWeight w = parse_dominant_weight(cof_opts.rank, cof_opts.weight);
      int jobs = cof_opts.common.jobs;
      CofVector cof =
          cof_opts.rep
              ? ancas::cof_rep(w, cof_opts.order, jobs)
              : ancas::cof_extract(
                    ancas::ch_orbit(w, cof_opts.order, ChMethod::formula, jobs),
                    cof_opts.order);
      ordered_json res;
      res["weight_mu"] = ancas::lambda_to_mu(w).str();
      res["order"] = cof_opts.order;
      res["cof"] = cof_json(cof);
      return res;
    };
    return run_and_emit("cof", cof_opts.common, std::move(inv));
  }

  if (dec_cmd->parsed()) {
    Invocation inv;
    inv.request = {{"rank", dec_opts.rank}, {"weight", dec_opts.weight}};
    inv.run = [&]() -> ordered_json {
      LambdaWeight w = parse_dominant_weight(dec_opts.rank, dec_opts.weight);
      auto dec = ancas::orbital_decomposition(w);
      ancas::Int dim = ancas::weyl_dim(w);
      ancas::Int total = 0;
      ordered_json entries = ordered_json::array();
      for (const auto& e : dec.entries) {
        ancas::Int osize = ancas::orbit_dimension(e.weight);
        total += e.multiplicity * osize;
        ordered_json row;
        row["lambda"] = e.weight.str();
        row["mu"] = e.tuple.str();
        row["multiplicity"] = e.multiplicity.get_str();
        row["orbit_size"] = osize.get_str();
        entries.push_back(std::move(row));
      }
      ordered_json res;
      res["weight_mu"] = ancas::lambda_to_mu(w).str();
      res["dimension"] = dim.get_str();
      res["entries"] = std::move(entries);
      res["sum_check"] = (total == dim);
      return res;
    };
    return run_and_emit("decompose", dec_opts.common, std::move(inv));
  }

  if (eig_cmd->parsed()) {
    Invocation inv;
    inv.request = {{"rank", eig_opts.rank},
                   {"weight", eig_opts.weight},
                   {"class", eig_opts.cls},
                   {"norm", eig_opts.norm},
                   {"method", eig_opts.method}};
    inv.run = [&]() -> ordered_json {
      LambdaWeight w = parse_dominant_weight(eig_opts.rank, eig_opts.weight);
      Partition cls = parse_class(eig_opts.cls);
      ancas::NormMode norm = eig_opts.norm == "unit"
                                 ? ancas::NormMode::unit
                                 : ancas::NormMode::default_norm;
      int jobs = eig_opts.common.jobs;
      const ancas::EigenClass* table = ancas::find_eigen_class(cls);
      if (!table && cls.sum() > 3)
        throw std::invalid_argument("no closed-form table for class " +
                                    cls.str() + " (orders above 7 are not tabulated)");
      ordered_json res;
      res["weight_mu"] = ancas::lambda_to_mu(w).str();
      bool want_closed = eig_opts.method != "cof";
      bool want_cof = eig_opts.method != "closed";
      if (!table && want_closed && eig_opts.method == "closed")
        throw std::invalid_argument("no closed-form table for class " +
                                    cls.str());
      Rat closed_value;
      bool have_closed = false;
      if (table) {
        res["n_min"] = table->n_min(norm);
        if (want_closed) {
          closed_value = ancas::eval_closed(*table, w, norm);
          res["closed"] = ancas::to_string(closed_value);
          have_closed = true;
        }
      }
      if (want_cof) {
        // Reference value at the matching fundamental weight: the closed
        // form when tabulated, 1 otherwise (orders 2 and 3).
        Rat reference = 1;
        if (table) {
          LambdaWeight ref = LambdaWeight::fundamental(
              ancas::Rank(eig_opts.rank), cls.size());
          reference = ancas::eval_closed(*table, ref, norm);
        }
        Rat via_cof = ancas::eval_from_cof(cls, w, reference, jobs);
        res["reference"] = ancas::to_string(reference);
        res["from_cof"] = ancas::to_string(via_cof);
        if (have_closed) res["match"] = (via_cof == closed_value);
      }
      return res;
    };
    return run_and_emit("eigen", eig_opts.common, std::move(inv));
  }

  if (ver_cmd->parsed()) {
    const auto& o = ver_opts;
    int jobs = o.common.jobs;
    bool strict_fail = false;
    bool base_fail = false;
    Invocation inv;
    inv.request = {{"suite", o.suite},
                   {"rank_max", o.rank_max},
                   {"order_max", o.order_max},
                   {"seed", o.seed},
                   {"strict", o.strict}};
    inv.run = [&]() -> ordered_json {
      ordered_json res;
      ordered_json suites = ordered_json::array();
      auto add = [&](const ancas::SuiteCheck& c) {
        suites.push_back(suite_json(c));
        if (!c.pass) base_fail = true;
      };
      bool all = o.suite == "all";
      if (all || o.suite == "orbits") {
        add(ancas::check_conversion_example());
        add(ancas::check_orbit_dimension_sweep(std::min(o.rank_max, 7), 2, 10,
                                               5, o.seed));
        add(ancas::check_dimension_sums(std::min(o.rank_max, 5), 3));
        add(ancas::check_freudenthal_anchors());
        add(ancas::check_ch_equivalence(o.rank_max, o.order_max, 5, 20000,
                                        o.seed, jobs));
      }
      if (all || o.suite == "reductions") {
        add(ancas::check_reduction_golden());
        add(ancas::check_reduction_oracle(o.order_max, 50, o.seed));
      }
      if (all || o.suite == "schur") {
        add(ancas::check_schur(std::min(o.order_max, 7)));
      }
      if (all || o.suite == "eigen") {
        add(ancas::check_kappa_bookkeeping());
        add(ancas::check_base_dimensions(std::min(o.rank_max, 8)));
        add(ancas::check_cof_vanishing(std::min(o.rank_max, 8),
                                       std::min(o.order_max, 7)));
        ancas::EigenVerification ev = ancas::check_eigen_classes(jobs);
        if (!ev.tier_a_all || !ev.tier_b_no_unexplained) base_fail = true;
        if (!ev.tier_b_all_match) strict_fail = true;
        ordered_json classes = ordered_json::array();
        for (const auto& rep : ev.reports) {
          ordered_json cj;
          cj["class"] = rep.cls.str();
          cj["rank"] = rep.rank_n;
          cj["tier_a"] = rep.tier_a_pass;
          if (rep.tier_a_pass)
            cj["constant"] = ancas::to_string(rep.tier_a_constant);
          cj["tier_b_match"] = rep.tier_b_match();
          ordered_json errata = ordered_json::array();
          for (const auto& line : rep.erratum_candidates())
            errata.push_back(line);
          cj["erratum_candidates"] = std::move(errata);
          classes.push_back(std::move(cj));
        }
        ordered_json ej;
        ej["tier_a_all"] = ev.tier_a_all;
        ej["tier_b_no_unexplained"] = ev.tier_b_no_unexplained;
        ej["tier_b_all_match"] = ev.tier_b_all_match;
        ej["classes"] = std::move(classes);
        res["eigen"] = std::move(ej);
      }
      res["suites"] = std::move(suites);
      bool pass = !base_fail && !(o.strict && strict_fail);
      res["pass"] = pass;
      return res;
    };
    int code = run_and_emit("verify", o.common, std::move(inv));
    if (code != 0) return code;
    if (base_fail || (o.strict && strict_fail)) return 1;
    return 0;
  }

  return 2;
}
