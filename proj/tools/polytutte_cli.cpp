// Copyright 2026 The Authors.
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

// polytutte: command-line front end for the polytutte library.
//
// Exit status: 0 success, 1 verdict mismatch or violated relation, 2 usage
// error, 10 and above one code per error category (see error.hpp).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polytutte/acceptance.hpp"
#include "polytutte/io.hpp"
#include "polytutte/polytutte.hpp"

namespace {

using polytutte::BiPoly;
using polytutte::Error;
using polytutte::ErrorKind;
using polytutte::Integer;
using polytutte::Mask;
using polytutte::Polymatroid;
using polytutte::RunConfig;
using polytutte::io::Json;

enum class Method { kDirect, kDc, kBoth };

struct Globals {
  RunConfig config;
  std::string method = "direct";
  std::string format = "text";
  std::string as = "auto";
};

Method parse_method(const std::string& s) {
  if (s == "direct") return Method::kDirect;
  if (s == "dc") return Method::kDc;
  if (s == "both") return Method::kBoth;
  throw Error(ErrorKind::kInvalidArgument, "unknown method '" + s + "'");
}

bool json_output(const Globals& g) {
  return g.config.format == polytutte::OutputFormat::kJson;
}

polytutte::io::LoadedInput load(const Globals& g, const std::string& path) {
  auto input = polytutte::io::load_input(polytutte::io::read_json_file(path),
                                         polytutte::io::parse_input_kind(g.as),
                                         g.config.max_bases);
  if (input.polymatroid.ground_size() > g.config.max_n) {
    throw Error(ErrorKind::kSizeLimitExceeded,
                "ground set of size " + std::to_string(input.polymatroid.ground_size()) +
                    " exceeds max_n=" + std::to_string(g.config.max_n));
  }
  return input;
}

polytutte::DcOptions dc_options(const Globals& g) {
  polytutte::DcOptions o;
  o.memo_capacity = g.config.memo_capacity;
  o.jobs = g.config.jobs;
  return o;
}

// Parses "1,3" (1-based) into a mask over [n].
Mask parse_label_set(const std::string& text, int n) {
  Mask m = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int label = 0;
    try {
      label = std::stoi(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "bad element label '" + item + "'");
    }
    if (label < 1 || label > n) {
      throw Error(ErrorKind::kInvalidArgument, "element " + item + " outside [1, n]");
    }
    m |= polytutte::bit(label - 1);
  }
  return m;
}

enum class Poly { kTutte, kInterior, kExterior };

BiPoly compute(Poly which, Method method, const Polymatroid& p, const Globals& g) {
  if (method == Method::kDirect) {
    switch (which) {
      case Poly::kTutte: return polytutte::tutte_direct(p);
      case Poly::kInterior: return polytutte::interior_direct(p);
      case Poly::kExterior: return polytutte::exterior_direct(p);
    }
  }
  polytutte::DeletionContraction dc(dc_options(g));
  switch (which) {
    case Poly::kTutte: return dc.tutte(p);
    case Poly::kInterior: return dc.interior(p);
    case Poly::kExterior: return dc.exterior(p);
  }
  return {};
}

int cmd_validate(const Globals& g, const std::string& path) {
  const auto input = load(g, path);
  const Polymatroid& p = input.polymatroid;
  if (json_output(g)) {
    std::cout << Json{{"valid", true},
                      {"n", p.ground_size()},
                      {"bases", p.size()},
                      {"rank", p.rank()},
                      {"f", input.rank.values()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "valid polymatroid: n=" << p.ground_size() << ", " << p.size()
              << " bases, rank " << p.rank() << "\n";
  }
  return 0;
}

int cmd_poly(const Globals& g, Poly which, const std::string& path) {
  const auto input = load(g, path);
  const Method method = parse_method(g.method);
  if (method != Method::kBoth) {
    const BiPoly r = compute(which, method, input.polymatroid, g);
    if (json_output(g)) {
      std::cout << Json{{"method", g.method}, {"polynomial", polytutte::io::to_json(r)},
                        {"text", polytutte::to_string(r)}}
                       .dump()
                << "\n";
    } else {
      std::cout << r << "\n";
    }
    return 0;
  }
  const BiPoly direct = compute(which, Method::kDirect, input.polymatroid, g);
  const BiPoly dc = compute(which, Method::kDc, input.polymatroid, g);
  const bool match = direct == dc;
  if (json_output(g)) {
    std::cout << Json{{"direct", polytutte::io::to_json(direct)},
                      {"dc", polytutte::io::to_json(dc)},
                      {"verdict", match ? "MATCH" : "MISMATCH"}}
                     .dump()
              << "\n";
  } else {
    std::cout << "direct: " << direct << "\n"
              << "dc: " << dc << "\n"
              << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_coeffs(const Globals& g, const std::string& path) {
  const auto input = load(g, path);
  const auto report =
      polytutte::coefficient_report(input.rank, polytutte::tutte_direct(input.polymatroid));
  const bool ok = polytutte::all_match(report);
  if (json_output(g)) {
    std::cout << polytutte::io::to_json(report).dump() << "\n";
  } else {
    for (const auto& row : report) {
      std::cout << row.formula << ": predicted " << row.predicted << ", extracted "
                << row.extracted << " " << (row.match ? "OK" : "MISMATCH") << "\n";
    }
    std::cout << (ok ? "all rows match" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

const std::vector<std::string> kAllProperties = {"translation", "permutation", "duality",
                                                 "divisibility", "count", "reversal",
                                                 "methods"};

int cmd_check(const Globals& g, const std::string& path, std::vector<std::string> properties) {
  const auto input = load(g, path);
  const Polymatroid& p = input.polymatroid;
  const int n = p.ground_size();
  if (properties.empty()) properties = kAllProperties;
  polytutte::Rng rng(g.config.rng_seed);
  const BiPoly t = polytutte::tutte_direct(p);
  Json verdicts = Json::object();
  bool all_ok = true;
  for (const auto& prop : properties) {
    bool ok = true;
    if (prop == "translation") {
      for (int s = 0; s < 5; ++s) {
        ok = ok && polytutte::tutte_direct(
                       polytutte::translate(p, polytutte::random_translation(rng, n))) == t;
      }
    } else if (prop == "permutation") {
      for (int s = 0; s < 5; ++s) {
        ok = ok && polytutte::tutte_direct(
                       polytutte::permute(p, polytutte::random_permutation(rng, n))) == t;
      }
    } else if (prop == "duality") {
      ok = polytutte::swap_variables(polytutte::tutte_direct(polytutte::dual(p))) == t;
    } else if (prop == "divisibility") {
      ok = polytutte::divisible_by_x_plus_y_minus_1(t);
    } else if (prop == "count") {
      ok = t.value_at_one() == Integer(p.size());
    } else if (prop == "reversal") {
      ok = polytutte::interior_direct(p) ==
               polytutte::reversed(polytutte::at_one(t, polytutte::Axis::kY),
                                   polytutte::Axis::kX, n) &&
           polytutte::exterior_direct(p) ==
               polytutte::reversed(polytutte::at_one(t, polytutte::Axis::kX),
                                   polytutte::Axis::kY, n);
    } else if (prop == "methods") {
      polytutte::DeletionContraction dc(dc_options(g));
      ok = dc.tutte(p) == t && dc.interior(p) == polytutte::interior_direct(p) &&
           dc.exterior(p) == polytutte::exterior_direct(p);
    } else {
      throw Error(ErrorKind::kInvalidArgument, "unknown property '" + prop + "'");
    }
    verdicts[prop] = ok;
    all_ok = all_ok && ok;
    if (!json_output(g)) std::cout << prop << ": " << (ok ? "OK" : "FAILED") << "\n";
  }
  if (json_output(g)) std::cout << Json{{"properties", verdicts}, {"ok", all_ok}}.dump() << "\n";
  return all_ok ? 0 : 1;
}

std::string comparison_text(const polytutte::CoefficientwiseComparison& c) {
  if (c.holds) return "OK";
  std::string term = polytutte::detail::monomial_text(*c.witness);
  if (term.empty()) term = "1";
  return "VIOLATED at " + term + " (" + c.lhs.str() + " > " + c.rhs.str() + ")";
}

int cmd_monotone(const Globals& g, const std::string& big_path, const std::string& small_path,
                 const std::string& relation, const std::string& del, const std::string& con) {
  const auto big = load(g, big_path);
  const auto small = load(g, small_path);
  const Polymatroid& p = big.polymatroid;
  const Polymatroid& q = small.polymatroid;
  std::string witness;
  if (relation == "subset") {
    if (q.ground_size() != p.ground_size()) {
      witness = "ground sets differ";
    } else {
      for (const auto& a : q.bases()) {
        if (!p.contains(a)) {
          witness = "basis " + polytutte::vec_text(a) + " of the second input is not in the first";
          break;
        }
      }
    }
  } else if (relation == "minor") {
    if (!del.empty() || !con.empty()) {
      const Mask a = parse_label_set(del, p.ground_size());
      const Mask b = parse_label_set(con, p.ground_size());
      if (!(polytutte::minor(p, a, b, g.config.max_bases) == q)) {
        witness = "second input is not (P \\ " + polytutte::subset_text(a) + ") / " +
                  polytutte::subset_text(b);
      }
    } else if (q.ground_size() > p.ground_size()) {
      witness = "second input has the larger ground set";
    }
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown relation '" + relation + "'");
  }
  if (!witness.empty()) {
    std::cerr << "relation violated: " << witness << "\n";
    return 1;
  }
  const auto x = polytutte::compare_coefficientwise(polytutte::exterior_direct(q),
                                                    polytutte::exterior_direct(p));
  const auto i = polytutte::compare_coefficientwise(polytutte::interior_direct(q),
                                                    polytutte::interior_direct(p));
  if (json_output(g)) {
    std::cout << Json{{"relation", relation},
                      {"X", comparison_text(x)},
                      {"I", comparison_text(i)},
                      {"ok", x.holds && i.holds}}
                     .dump()
              << "\n";
  } else {
    std::cout << "X: " << comparison_text(x) << ", I: " << comparison_text(i) << "\n";
  }
  return x.holds && i.holds ? 0 : 1;
}

int cmd_connectivity(const Globals& g, const std::string& path) {
  const auto json = polytutte::io::read_json_file(path);
  const auto h = polytutte::io::hypergraph_from_json(json);
  const auto hp = polytutte::hypertree_polymatroid(h, g.config.max_bases);
  const BiPoly x = polytutte::exterior_direct(hp.bases);
  const int k_max = polytutte::connectivity_profile(h);
  const int v = h.vertex_count();
  const int n = h.edge_count();
  int k_coeff = -1;
  Json rows = Json::array();
  std::ostringstream table;
  for (int i = 0; i < n; ++i) {
    const Integer ceiling = polytutte::gen_binomial(v + i - 2, i);
    const Integer actual = x.coeff(0, i);
    if (actual == ceiling && k_coeff == i - 1) k_coeff = i;
    table << "y^" << i << ": " << ceiling << (actual == ceiling ? "=" : ">") << actual << "\n";
    rows.push_back({{"i", i},
                    {"ceiling", polytutte::io::integer_json(ceiling)},
                    {"actual", polytutte::io::integer_json(actual)}});
  }
  // Removing all n hyperedges is covered by the degree-n coefficient.
  if (k_coeff == n - 1 && x.coeff(0, n) == polytutte::gen_binomial(v + n - 2, n)) k_coeff = n;
  const bool consistent = k_max < 0 || k_max == k_coeff;
  if (json_output(g)) {
    std::cout << Json{{"k_max", k_max},
                      {"coefficients", rows},
                      {"coefficient_k", k_coeff},
                      {"consistent", consistent}}
                     .dump()
              << "\n";
  } else {
    std::cout << "k_max=" << k_max << (k_max < 0 ? " (Bip H is disconnected)" : "") << "\n"
              << table.str();
    if (k_max >= 0) std::cout << (consistent ? "characterization: OK" : "characterization: MISMATCH") << "\n";
  }
  return consistent ? 0 : 1;
}

int cmd_search(const Globals& g, const std::string& targets_path, int n, polytutte::Coord max_rank) {
  const auto targets = polytutte::io::targets_from_json(polytutte::io::read_json_file(targets_path));
  std::vector<BiPoly> polys;
  for (const auto& t : targets) polys.push_back(t.tutte);
  const auto matches = polytutte::counterexample_search(polys, n, max_rank);
  std::vector<std::vector<const polytutte::SearchMatch*>> by_target(targets.size());
  for (const auto& m : matches) by_target[m.target].push_back(&m);
  Json out = Json::array();
  std::size_t matched_targets = 0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const auto& list = by_target[t];
    matched_targets += !list.empty();
    Json entry{{"name", targets[t].name}, {"tutte", polytutte::to_string(targets[t].tutte)},
               {"matches", list.size()}};
    if (!list.empty()) {
      entry["example"] = polytutte::io::to_json(list.front()->polymatroid);
      entry["example_rank"] = polytutte::io::to_json(list.front()->rank);
    }
    if (!json_output(g)) {
      std::cout << targets[t].name << ": " << list.size() << " matches";
      if (!list.empty()) {
        std::cout << "; first has " << list.front()->polymatroid.size() << " bases, f = "
                  << polytutte::vec_text(list.front()->rank.values());
      }
      std::cout << "\n";
    }
    out.push_back(std::move(entry));
  }
  if (json_output(g)) std::cout << out.dump() << "\n";
  return matched_targets > 0 ? 0 : 1;
}

int cmd_matroid_form(const Globals& g, const std::string& path, std::optional<int> d,
                     const std::string& poly, std::optional<int> n) {
  BiPoly result;
  if (!poly.empty()) {
    if (!n || !d) throw Error(ErrorKind::kInvalidArgument, "--poly needs --n and --d");
    result = polytutte::matroid_form(polytutte::parse_bipoly(poly), *n, *d);
  } else {
    if (path.empty()) throw Error(ErrorKind::kInvalidArgument, "missing input file");
    const auto input = load(g, path);
    const Method method = parse_method(g.method);
    result = polytutte::matroid_form(input.polymatroid, d, [&](const Polymatroid& p) {
      return compute(Poly::kTutte, method == Method::kBoth ? Method::kDc : method, p, g);
    });
  }
  if (json_output(g)) {
    std::cout << Json{{"polynomial", polytutte::io::to_json(result)},
                      {"text", polytutte::to_string(result)}}
                     .dump()
              << "\n";
  } else {
    std::cout << result << "\n";
  }
  return 0;
}

int cmd_suite(const Globals& g, bool timing) {
  polytutte::acceptance::Options options;
  options.seed = g.config.rng_seed;
  options.jobs = g.config.jobs;
  const auto results = polytutte::acceptance::run_all(options);
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (json_output(g)) {
      Json row{{"id", r.id},           {"name", r.name},         {"passed", r.passed},
               {"checks", r.checks},   {"failures", r.failures}, {"detail", r.detail}};
      if (timing) row["seconds"] = r.seconds;
      out.push_back(std::move(row));
    } else {
      std::cout << polytutte::acceptance::format_result(r);
      if (timing) std::cout << " [" << r.seconds << " s]";
      std::cout << "\n";
    }
  }
  if (json_output(g)) std::cout << out.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polymatroid Tutte polynomials: computation and verification"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = polytutte::kDefaultSeed;
  app.add_option("--method", g.method, "direct | dc | both")->check(CLI::IsMember({"direct", "dc", "both"}));
  app.add_option("--format", g.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--jobs", g.config.jobs, "worker budget")->check(CLI::PositiveNumber);
  app.add_option("--max-bases", g.config.max_bases, "basis enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--max-n", g.config.max_n, "largest accepted ground set");
  app.add_option("--memo-capacity", g.config.memo_capacity, "deletion-contraction cache size")
      ->check(CLI::PositiveNumber);
  app.add_option("--as", g.as, "input kind: auto | bases | rank | hypergraph")
      ->check(CLI::IsMember({"auto", "bases", "polymatroid", "rank", "hypergraph"}));
  app.fallthrough();

  std::string input;
  std::string second;
  std::vector<std::string> properties;
  std::string relation = "subset";
  std::string del;
  std::string con;
  std::string targets;
  int search_n = 3;
  polytutte::Coord search_rank = 4;
  std::optional<int> d;
  std::optional<int> poly_n;
  std::string poly;
  bool timing = false;

  auto with_input = [&](CLI::App* sub) { sub->add_option("input", input, "JSON input")->required(); };
  auto* validate = app.add_subcommand("validate", "validate a polymatroid input");
  with_input(validate);
  auto* tutte = app.add_subcommand("tutte", "polymatroid Tutte polynomial");
  with_input(tutte);
  auto* interior = app.add_subcommand("interior", "interior polynomial");
  with_input(interior);
  auto* exterior = app.add_subcommand("exterior", "exterior polynomial");
  with_input(exterior);
  auto* coeffs = app.add_subcommand("coeffs", "closed-form coefficient report");
  with_input(coeffs);
  auto* check = app.add_subcommand("check", "invariance checks");
  with_input(check);
  check->add_option("--properties", properties, "subset of: translation permutation duality "
                                                "divisibility count reversal methods")
      ->delimiter(',');
  auto* monotone = app.add_subcommand("monotone", "coefficientwise I and X comparison");
  monotone->add_option("larger", input, "polymatroid P")->required();
  monotone->add_option("smaller", second, "subset or minor P'")->required();
  monotone->add_option("--relation", relation, "subset | minor")
      ->check(CLI::IsMember({"subset", "minor"}));
  monotone->add_option("--delete", del, "deleted elements, e.g. 1,3");
  monotone->add_option("--contract", con, "contracted elements, e.g. 2");
  auto* connectivity = app.add_subcommand("connectivity", "hypergraph connectivity profile");
  with_input(connectivity);
  auto* search = app.add_subcommand("search", "find small polymatroids with given T");
  search->add_option("--targets", targets, "JSON list of target polynomials")->required();
  search->add_option("--n", search_n, "largest ground set")->check(CLI::Range(1, 4));
  search->add_option("--max-rank", search_rank, "largest rank value")->check(CLI::NonNegativeNumber);
  auto* mform = app.add_subcommand("matroid-form", "matroid-style Laurent form");
  mform->add_option("input", input, "JSON input");
  mform->add_option("--d", d, "rank parameter (default f([n]))");
  mform->add_option("--poly", poly, "polynomial text instead of an input file");
  mform->add_option("--n", poly_n, "ground set size for --poly");
  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_flag("--timing", timing, "append wall-clock seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    g.config.rng_seed = seed;
    g.config.format = polytutte::parse_output_format(g.format);
    g.config.validate();
    if (*validate) return cmd_validate(g, input);
    if (*tutte) return cmd_poly(g, Poly::kTutte, input);
    if (*interior) return cmd_poly(g, Poly::kInterior, input);
    if (*exterior) return cmd_poly(g, Poly::kExterior, input);
    if (*coeffs) return cmd_coeffs(g, input);
    if (*check) return cmd_check(g, input, properties);
    if (*monotone) return cmd_monotone(g, input, second, relation, del, con);
    if (*connectivity) return cmd_connectivity(g, input);
    if (*search) return cmd_search(g, targets, search_n, search_rank);
    if (*mform) return cmd_matroid_form(g, input, d, poly, poly_n);
    if (*suite) return cmd_suite(g, timing);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return polytutte::exit_code(e.kind());
  }
  return 2;
}
