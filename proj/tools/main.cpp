#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgrowth/asymptotics.hpp"
#include "qgrowth/fusion.hpp"
#include "qgrowth/lie.hpp"
#include "qgrowth/qgroups.hpp"
#include "qgrowth/series.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qgrowth;

constexpr size_t kBallGuard = 1000 * 1000;
constexpr int kExactWalkGuard = 1000;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Doubles go through a 12-significant-digit round trip before JSON emission so
// both output formats show the same figures.
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

struct Options {
  std::string object;
  std::string family;
  int n = 0;
  int K = 10;
  int k = 10;
  std::string format = "json";
  std::string mode = "exact";
  std::string window;
  int threads = 1;
  double tol = 0.5;
};

struct Resolved {
  bool is_lie = false;
  std::optional<RootSystem> rs;
  CatalogEntry entry;
};

Resolved resolve_object(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("object grammar: empty spec");
  Resolved r;
  if (spec.rfind("lie:", 0) == 0) {
    r.is_lie = true;
    r.rs = root_system_by_name(spec.substr(4));
  } else {
    r.entry = ring_from_spec(spec);
  }
  return r;
}

Family parse_family(const std::string& f) {
  if (f == "ao") return Family::Ao;
  if (f == "au") return Family::Au;
  if (f == "as") return Family::As;
  throw std::invalid_argument("family grammar: expected ao, au or as");
}

void check_format(const std::string& f) {
  if (f != "json" && f != "csv") throw std::invalid_argument("format grammar: expected json or csv");
}

void check_mode(const std::string& m) {
  if (m != "exact" && m != "logfloat")
    throw std::invalid_argument("mode grammar: expected exact or logfloat");
}

std::pair<int, int> parse_window(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw std::invalid_argument("window grammar: expected a:b");
  size_t pa = 0, pb = 0;
  int a = 0, b = 0;
  try {
    a = std::stoi(text.substr(0, colon), &pa);
    b = std::stoi(text.substr(colon + 1), &pb);
  } catch (const std::exception&) {
    throw std::invalid_argument("window grammar: expected a:b with integers");
  }
  if (pa != colon || pb != text.size() - colon - 1 || a < 0 || b < a)
    throw std::invalid_argument("window grammar: expected integers 0 <= a <= b");
  return {a, b};
}

json make_doc(const std::string& command, const std::string& object, json params, json results,
              const std::string& anchor) {
  json doc;
  doc["command"] = command;
  doc["object"] = object;
  doc["params"] = std::move(params);
  doc["results"] = std::move(results);
  doc["provenance"] = json{{"paper_anchor", anchor}};
  return doc;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

VolumeTable object_volumes(const Resolved& r, int K, int threads) {
  if (r.is_lie) return lie_volumes(*r.rs, K, threads);
  return volumes(*r.entry.ring, K, kBallGuard);
}

std::string volumes_csv(const VolumeTable& vt) {
  std::string out = "k,s_k,b_k\n";
  for (size_t k = 0; k < vt.spheres.size(); ++k)
    out += std::to_string(k) + "," + vt.spheres[k].get_str() + "," + vt.balls[k].get_str() + "\n";
  return out;
}

json volumes_json(const VolumeTable& vt) {
  json spheres = json::array(), balls = json::array();
  for (const Int& s : vt.spheres) spheres.push_back(s.get_str());
  for (const Int& b : vt.balls) balls.push_back(b.get_str());
  return json{{"spheres", std::move(spheres)}, {"balls", std::move(balls)}};
}

const char* kVolumeAnchor =
    "s_k = sum of dim(v)^2 over irreducibles of length k; b_k = s_0 + ... + s_k";

std::string run_series(const Options& opt) {
  check_format(opt.format);
  if (opt.K < 0) throw std::invalid_argument("series: K must be >= 0");
  const bool by_family = !opt.family.empty();
  if (by_family == !opt.object.empty())
    throw std::invalid_argument("series: give exactly one of --object or --family with --n");

  if (by_family) {
    RationalFunction s = closed_form(parse_family(opt.family), opt.n);
    PowerSeries ps = expand(s, opt.K);
    VolumeTable vt;
    Int acc = 0;
    for (int k = 0; k <= opt.K; ++k) {
      const Rat& c = ps.coeff(k);
      if (c.get_den() != 1) throw std::logic_error("series: non-integer sphere coefficient");
      vt.spheres.push_back(c.get_num());
      acc += c.get_num();
      vt.balls.push_back(acc);
    }
    if (opt.format == "csv") return volumes_csv(vt);
    RationalFunction b = s * RationalFunction(Polynomial::one(), Polynomial{Rat(1), Rat(-1)});
    json results = volumes_json(vt);
    results["S"] = s.to_string();
    results["B"] = b.to_string();
    results["P"] = p_invariant(s).to_string();
    results["Q"] = q_invariant(s).to_string();
    json params{{"family", opt.family}, {"n", opt.n}, {"K", opt.K}};
    return render(make_doc("series", opt.family + ":" + std::to_string(opt.n), params, results,
                           "S = sum s_k z^k; B = S/(1-z); P = 1 - 1/S; Q = (1 + 1/z) P"));
  }

  Resolved r = resolve_object(opt.object);
  VolumeTable vt = object_volumes(r, opt.K, opt.threads);
  if (opt.format == "csv") return volumes_csv(vt);
  return render(make_doc("series", opt.object, json{{"K", opt.K}}, volumes_json(vt),
                         "S = sum s_k z^k with s_k the sphere volumes"));
}

std::string run_growth(const Options& opt) {
  check_format(opt.format);
  if (opt.K < 0) throw std::invalid_argument("growth: K must be >= 0");
  if (opt.object.empty()) throw std::invalid_argument("growth: --object is required");
  Resolved r = resolve_object(opt.object);
  VolumeTable vt = object_volumes(r, opt.K, opt.threads);
  if (opt.format == "csv") return volumes_csv(vt);
  json params{{"K", opt.K}, {"threads", opt.threads}};
  return render(make_doc("growth", opt.object, params, volumes_json(vt), kVolumeAnchor));
}

std::string run_walk(const Options& opt) {
  check_format(opt.format);
  check_mode(opt.mode);
  if (opt.object.empty()) throw std::invalid_argument("walk: --object is required");
  if (opt.k < 1) throw std::invalid_argument("walk: k must be >= 1");
  Resolved r = resolve_object(opt.object);
  if (!r.is_lie && r.entry.growth_only)
    throw std::domain_error(
        "walk: this object carries growth data only; the proxy ring's multiplicities are not the "
        "free version's");

  json params{{"k", opt.k}, {"mode", opt.mode}};
  if (opt.mode == "exact") {
    if (opt.k > kExactWalkGuard)
      throw std::runtime_error("exact walk guard: k <= 1000, got k = " + std::to_string(opt.k));
    std::vector<Rat> probs;
    if (r.is_lie) {
      probs = lie_return_probability_sequence(*r.rs, opt.k);
    } else {
      auto m = trivial_multiplicities_by_power(*r.entry.ring, 2 * opt.k, kBallGuard);
      Int n = r.entry.ring->generator_dim();
      for (int j = 1; j <= opt.k; ++j)
        probs.push_back(make_rat(m[static_cast<size_t>(2 * j)],
                                 pow_int(n, static_cast<unsigned long>(2 * j))));
    }
    if (opt.format == "csv") {
      std::string out = "k,p_k_num,p_k_den,p_k_float\n";
      for (int j = 1; j <= opt.k; ++j) {
        const Rat& p = probs[static_cast<size_t>(j - 1)];
        out += std::to_string(j) + "," + p.get_num().get_str() + "," + p.get_den().get_str() +
               "," + fmt12(std::exp(log_rat(p))) + "\n";
      }
      return out;
    }
    json rows = json::array();
    for (int j = 1; j <= opt.k; ++j) {
      const Rat& p = probs[static_cast<size_t>(j - 1)];
      rows.push_back(json{{"k", j},
                          {"p", rat_to_string(p)},
                          {"p_float", round12(std::exp(log_rat(p)))}});
    }
    return render(make_doc("walk", opt.object, params, json{{"rows", std::move(rows)}},
                           "p_k = m_{2k}(1) / n^{2k}, the trivial share of u^{tensor 2k}"));
  }

  std::vector<double> logs =
      r.is_lie ? lie_return_probability_log_sequence(*r.rs, opt.k)
               : log_return_probability_sequence(*r.entry.ring, opt.k, kBallGuard);
  if (opt.format == "csv") {
    std::string out = "k,log_p_k,p_k_float\n";
    for (int j = 1; j <= opt.k; ++j) {
      double lp = logs[static_cast<size_t>(j - 1)];
      out += std::to_string(j) + "," + fmt12(lp) + "," + fmt12(std::exp(lp)) + "\n";
    }
    return out;
  }
  json rows = json::array();
  for (int j = 1; j <= opt.k; ++j) {
    double lp = logs[static_cast<size_t>(j - 1)];
    rows.push_back(json{{"k", j}, {"log_p", round12(lp)}, {"p_float", round12(std::exp(lp))}});
  }
  return render(make_doc("walk", opt.object, params, json{{"rows", std::move(rows)}},
                         "log p_k from the renormalized double-precision walk"));
}

std::string run_lie(const Options& opt) {
  check_format(opt.format);
  if (opt.object.empty()) throw std::invalid_argument("lie: --object is required");
  Resolved r = resolve_object(opt.object);
  if (!r.is_lie) throw std::invalid_argument("lie: object must be lie:NAME");
  const RootSystem& rs = *r.rs;

  json results;
  results["name"] = rs.name;
  results["rank"] = rs.rank;
  results["root_count"] = rs.root_count();
  results["dimension"] = rs.dimension();
  results["weyl_order"] = rs.weyl_order.get_str();
  Int n = 0;
  for (int i = 0; i < rs.rank; ++i) n += weyl_dim(rs, sphere_weights(rs, 1)[static_cast<size_t>(i)]);
  results["walk_step_count"] = n.get_str();
  results["alignment_index"] = alignment_index(rs).get_str();
  if (rs.rank <= 2) {
    RatMat m = covariance_form(rs);
    json cov = json::array();
    for (int i = 0; i < rs.rank; ++i) {
      json row = json::array();
      for (int j = 0; j < rs.rank; ++j) row.push_back(rat_to_string(m(i, j)));
      cov.push_back(std::move(row));
    }
    results["covariance"] = std::move(cov);
    results["gaussian_limit_constant"] = round12(gaussian_limit_constant(rs));
  }
  if (opt.format == "csv") {
    std::string out = "key,value\n";
    for (auto it = results.begin(); it != results.end(); ++it) {
      if (it.value().is_string())
        out += it.key() + "," + it.value().get<std::string>() + "\n";
      else
        out += it.key() + "," + it.value().dump() + "\n";
    }
    return out;
  }
  return render(make_doc("lie", opt.object, json::object(), results,
                         "dimension = rank + #roots; steps are the fundamental weight systems"));
}

std::string run_ratio(const Options& opt) {
  check_format(opt.format);
  if (opt.family.empty()) throw std::invalid_argument("ratio: --family is required");
  Family fam = parse_family(opt.family);
  double ratio = 0.0, residual = 0.0;
  std::string oracle, anchor;
  if (fam == Family::Ao) {
    PolyRoot q = root_qn(opt.n + 2);
    ratio = q.value * q.value;
    residual = std::abs(eval_poly(q.poly, q.value));
    oracle = "q_" + std::to_string(opt.n + 2) + "^2";
    anchor = "ratio = q_{n+2}^2 with q_m the largest root of q^2 - (m-2) q + 1";
  } else if (fam == Family::As) {
    PolyRoot q = root_qn(opt.n);
    ratio = q.value * q.value;
    residual = std::abs(eval_poly(q.poly, q.value));
    oracle = "q_" + std::to_string(opt.n) + "^2";
    anchor = "ratio = q_n^2 with q_n the largest root of q^2 - (n-2) q + 1";
  } else {
    PolyRoot rt = root_rn(opt.n);
    ratio = rt.value;
    residual = std::abs(eval_poly(rt.poly, rt.value));
    oracle = "r_" + std::to_string(opt.n);
    anchor = "ratio = r_n, the largest root of r^3 - (2n^2-1) r^2 + 2(n^2-1) r - 2";
  }
  auto series_ratio = growth_ratio(closed_form(fam, opt.n), 1e-13);
  if (!series_ratio) throw std::logic_error("ratio: closed form lost its pole");

  if (opt.format == "csv") {
    return "ratio,oracle,series_ratio\n" + fmt12(ratio) + "," + oracle + "," +
           fmt12(*series_ratio) + "\n";
  }
  json results{{"ratio", round12(ratio)},
               {"oracle", oracle},
               {"series_ratio", round12(*series_ratio)},
               {"oracle_residual", round12(residual)}};
  json params{{"family", opt.family}, {"n", opt.n}};
  return render(make_doc("ratio", opt.family + ":" + std::to_string(opt.n), params, results,
                         anchor));
}

json fit_json(const FitResult& fit) {
  return json{{"estimate", round12(fit.estimate)},
              {"k_min", fit.k_min},
              {"k_max", fit.k_max},
              {"residual", round12(fit.residual)},
              {"method", fit.method}};
}

std::string run_conjecture(const Options& opt) {
  check_format(opt.format);
  if (opt.object.empty()) throw std::invalid_argument("conjecture: --object is required");
  if (opt.K < 5) throw std::invalid_argument("conjecture: K must be >= 5");
  if (opt.k < 5) throw std::invalid_argument("conjecture: k must be >= 5");
  Resolved r = resolve_object(opt.object);
  if (!r.is_lie && r.entry.growth_only)
    throw std::domain_error("conjecture: this object carries growth data only, no walk");

  VolumeTable vt = object_volumes(r, opt.K, opt.threads);
  std::vector<double> walk_logs =
      r.is_lie ? lie_return_probability_log_sequence(*r.rs, opt.k)
               : log_return_probability_sequence(*r.entry.ring, opt.k, kBallGuard);
  std::vector<double> aligned(static_cast<size_t>(opt.k) + 1, 0.0);
  for (int j = 1; j <= opt.k; ++j)
    aligned[static_cast<size_t>(j)] = walk_logs[static_cast<size_t>(j - 1)];

  std::pair<int, int> gw, ww;
  if (!opt.window.empty()) {
    auto [a, b] = parse_window(opt.window);
    gw = {std::max(a, 1), std::min(b, opt.K)};
    ww = {std::max(a, 1), std::min(b, opt.k)};
  } else {
    gw = default_window(1, opt.K);
    ww = default_window(1, opt.k);
  }

  FitResult growth = classify_regime(vt.balls, gw.first, gw.second) == Regime::polynomial
                         ? fit_polynomial_exponent(vt.balls, gw.first, gw.second)
                         : fit_exponential_ratio(vt.balls, gw.first, gw.second);
  FitResult walk = classify_regime(aligned, ww.first, ww.second) == Regime::polynomial
                       ? fit_polynomial_exponent(aligned, ww.first, ww.second)
                       : fit_exponential_ratio(aligned, ww.first, ww.second);
  ConjectureReport rep = conjecture_report(growth, walk, opt.tol);

  if (opt.format == "csv") {
    std::string out = "key,value\n";
    out += "growth_estimate," + fmt12(growth.estimate) + "\n";
    out += "growth_method," + growth.method + "\n";
    out += "walk_estimate," + fmt12(walk.estimate) + "\n";
    out += "walk_method," + walk.method + "\n";
    out += "d_growth," + fmt12(rep.d_growth) + "\n";
    out += "minus_two_walk_slope," + fmt12(rep.minus_two_walk_slope) + "\n";
    out += "difference," + fmt12(rep.difference) + "\n";
    out += "tolerance," + fmt12(rep.tolerance) + "\n";
    out += std::string("applicable,") + (rep.applicable ? "true" : "false") + "\n";
    out += std::string("pass,") + (rep.pass ? "true" : "false") + "\n";
    out += "verdict," + rep.verdict + "\n";
    return out;
  }
  json results;
  results["growth_fit"] = fit_json(growth);
  results["walk_fit"] = fit_json(walk);
  results["report"] = json{{"d_growth", round12(rep.d_growth)},
                           {"minus_two_walk_slope", round12(rep.minus_two_walk_slope)},
                           {"difference", round12(rep.difference)},
                           {"tolerance", round12(rep.tolerance)},
                           {"applicable", rep.applicable},
                           {"pass", rep.pass},
                           {"verdict", rep.verdict}};
  json params{{"K", opt.K},
              {"k", opt.k},
              {"growth_window", json::array({gw.first, gw.second})},
              {"walk_window", json::array({ww.first, ww.second})},
              {"tolerance", round12(opt.tol)}};
  return render(make_doc("conjecture", opt.object, params, results,
                         "polynomial regime: b_k ~ k^d matches p_k ~ k^(-d/2)"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth invariants and random walks for duals of compact quantum groups"};
  app.require_subcommand(1);
  Options opt;
  std::string output;

  auto add_common = [&](CLI::App* cmd, bool with_series_flags) {
    cmd->add_option("--object", opt.object, "catalog spec or lie:NAME");
    if (with_series_flags) {
      cmd->add_option("--family", opt.family, "closed-form family: ao, au or as");
      cmd->add_option("--n", opt.n, "family parameter");
    }
    cmd->add_option("--format", opt.format, "json or csv");
    cmd->add_option("--threads", opt.threads, "worker threads for volume scans")
        ->check(CLI::PositiveNumber);
  };

  auto* series = app.add_subcommand("series", "sphere/ball series of an object or family");
  add_common(series, true);
  series->add_option("--K", opt.K, "series order");
  series->callback([&] { output = run_series(opt); });

  auto* growth = app.add_subcommand("growth", "sphere and ball volume table");
  add_common(growth, false);
  growth->add_option("--K", opt.K, "ball radius");
  growth->callback([&] { output = run_growth(opt); });

  auto* walk = app.add_subcommand("walk", "return probabilities of the generator walk");
  add_common(walk, false);
  walk->add_option("--k", opt.k, "number of return times");
  walk->add_option("--mode", opt.mode, "exact or logfloat");
  walk->callback([&] { output = run_walk(opt); });

  auto* lie = app.add_subcommand("lie", "root system report");
  add_common(lie, false);
  lie->callback([&] { output = run_lie(opt); });

  auto* ratio = app.add_subcommand("ratio", "exponential growth ratio of a family");
  add_common(ratio, true);
  ratio->callback([&] { output = run_ratio(opt); });

  auto* conjecture = app.add_subcommand("conjecture", "growth exponent vs walk decay comparison");
  add_common(conjecture, false);
  conjecture->add_option("--K", opt.K, "ball radius for the growth fit");
  conjecture->add_option("--k", opt.k, "walk length for the decay fit");
  conjecture->add_option("--window", opt.window, "fit window a:b");
  conjecture->add_option("--tol", opt.tol, "pass tolerance on the exponent difference");
  conjecture->callback([&] { output = run_conjecture(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  std::cout << output;
  return 0;
}
