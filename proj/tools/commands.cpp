#include "commands.hpp"

#include "kalmanson/consecutive_ones.hpp"
#include "kalmanson/enumeration.hpp"
#include "kalmanson/generate.hpp"
#include "kalmanson/geometry.hpp"
#include "kalmanson/json_io.hpp"
#include "kalmanson/metric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace kalmanson::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  bool json_output = false;
  bool oracle = false;
  bool require_triangle = false;
  bool scramble = false;
  std::string ordering;
  std::string method;
  int n = 0;
  std::uint64_t seed = 0;
};

/// Verdict of one command: exit code plus what to print.
struct Outcome {
  int code = kExitOk;
  json payload = json::object();
  std::string text;
};

std::string status_name(int code, const char* negative) { return code == kExitOk ? "ok" : negative; }

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_ints(std::span<const int> values, int offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i] + offset);
  }
  return out;
}

std::vector<int> plus_one(std::span<const int> values) {
  std::vector<int> out(values.begin(), values.end());
  for (int& v : out) ++v;
  return out;
}

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max()) return v.convert_to<std::int64_t>();
  return v.str();
}

SplitSystem load_splits(const Options& o) {
  json j;
  try {
    j = json::parse(read_input(o.file));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return split_system_from_json(j);
}

Metric load_metric(const Options& o) {
  Metric m = parse_metric_text(read_input(o.file));
  if (m.n() < kMinTaxa) throw std::invalid_argument("metric needs at least 4 points");
  if (o.require_triangle) {
    if (auto t = triangle_violation(m)) {
      throw std::invalid_argument("triangle inequality fails: d(" + std::to_string((*t)[0]) + "," + std::to_string((*t)[2]) +
                                  ") > d(" + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + ") + d(" +
                                  std::to_string((*t)[1]) + "," + std::to_string((*t)[2]) + ")");
    }
  }
  return m;
}

std::optional<CircularOrdering> parse_ordering(const std::string& text, int n) {
  if (text.empty()) return std::nullopt;
  std::vector<int> order;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream one(token);
    int x = 0;
    if (!(one >> x)) throw std::invalid_argument("bad --ordering entry '" + token + "'");
    order.push_back(x);
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("--ordering must list all n points");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : order) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) throw std::invalid_argument("--ordering is not a permutation of 1..n");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
  return CircularOrdering::canonical(order);
}

// --- splits ---

Outcome splits_circular(const Options& o) {
  const SplitSystem ss = load_splits(o);
  if (ss.has_trivial()) throw std::invalid_argument("circularity is defined for non-trivial splits only");
  const CircularityResult r = is_circular(ss);
  Outcome out;
  out.code = r.circular ? kExitOk : kExitNegative;
  out.payload["circular"] = r.circular;
  out.text = std::string("circular: ") + (r.circular ? "yes" : "no") + "\n";
  if (r.witness) {
    out.payload["ordering"] = to_json(*r.witness);
    out.text += "ordering: " + join_ints(r.witness->order()) + "\n";
  }
  return out;
}

Outcome splits_weakly_compatible(const Options& o) {
  const SplitSystem ss = load_splits(o);
  const WeakCompatibilityResult r = is_weakly_compatible(ss);
  Outcome out;
  out.code = r.compatible ? kExitOk : kExitNegative;
  out.payload["weakly_compatible"] = r.compatible;
  out.text = std::string("weakly compatible: ") + (r.compatible ? "yes" : "no") + "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    json triple = json::array();
    std::string names;
    for (const Split& s : w.splits) {
      triple.push_back(to_string(s));
      names += (names.empty() ? "" : " ") + to_string(s);
    }
    json sides = json::array();
    for (ElementMask side : w.sides) {
      std::vector<int> members;
      for (int x = 1; x <= ss.n(); ++x) {
        if (side & element_bit(x)) members.push_back(x);
      }
      sides.push_back(members);
    }
    out.payload["sides"] = sides;
    out.payload["triple"] = triple;
    out.payload["common"] = w.common;
    out.payload["private"] = w.private_points;
    out.text += "triple: " + names + "\n";
    out.text += "points: a=" + std::to_string(w.common) + " a1=" + std::to_string(w.private_points[0]) +
                " a2=" + std::to_string(w.private_points[1]) + " a3=" + std::to_string(w.private_points[2]) + "\n";
  }
  return out;
}

Outcome splits_to_matrix(const Options& o) {
  const SplitSystem ss = load_splits(o);
  if (ss.has_trivial()) throw std::invalid_argument("the row-class map is defined for non-trivial splits only");
  const RowClass rc = splits_to_rowclass(ss);
  Outcome out;
  out.text = to_text(rc.canonical());
  json rows = json::array();
  for (int r = 0; r < rc.canonical().rows(); ++r) {
    std::string row;
    for (int c = 0; c < rc.canonical().cols(); ++c) row += rc.canonical().at(r, c) ? '1' : '0';
    rows.push_back(row);
  }
  out.payload["matrix"] = rows;
  return out;
}

// --- matrix ---

BinaryMatrix load_matrix(const Options& o) { return parse_matrix_text(read_input(o.file)); }

Outcome matrix_ones(const Options& o, bool circular) {
  const BinaryMatrix m = load_matrix(o);
  const OnesResult r = circular ? is_circ1r(m) : is_c1r(m);
  const char* name = circular ? "circ1r" : "c1r";
  Outcome out;
  out.code = r.holds ? kExitOk : kExitNegative;
  out.payload[name] = r.holds;
  out.text = std::string(name) + ": " + (r.holds ? "yes" : "no") + "\n";
  if (r.witness) {
    // 1-based original column placed at each position.
    out.payload["permutation"] = plus_one(r.witness->perm);
    out.text += "permutation: " + join_ints(r.witness->perm, 1) + "\n";
  }
  return out;
}

Outcome matrix_tucker(const Options& o) {
  const BinaryMatrix m = load_matrix(o);
  const auto found = find_tucker_configuration(m);
  Outcome out;
  if (!found) {
    out.payload["configuration"] = nullptr;
    out.text = "configuration: none\n";
    return out;
  }
  out.code = kExitNegative;
  const std::string family = to_string(found->config);
  json config{{"name", family}};
  switch (found->config.family) {
    case TuckerFamily::I: config["family"] = "I"; break;
    case TuckerFamily::II: config["family"] = "II"; break;
    case TuckerFamily::III: config["family"] = "III"; break;
    case TuckerFamily::IV: config["family"] = "IV"; break;
    case TuckerFamily::V: config["family"] = "V"; break;
  }
  const bool parametrized = found->config.family == TuckerFamily::I || found->config.family == TuckerFamily::II ||
                            found->config.family == TuckerFamily::III;
  if (parametrized) config["k"] = found->config.k;
  config["rows"] = plus_one(found->where.rows);
  config["columns"] = plus_one(found->where.cols);
  out.payload["configuration"] = config;
  out.text = "configuration: " + family + "\nrows: " + join_ints(found->where.rows, 1) +
             "\ncolumns: " + join_ints(found->where.cols, 1) + "\n";
  return out;
}

// --- metric ---

Outcome metric_kalmanson(const Options& o) {
  const Metric m = load_metric(o);
  const auto ord = parse_ordering(o.ordering, m.n());
  const KalmansonResult r = ord ? is_kalmanson_under(m, *ord) : is_kalmanson(m);
  Outcome out;
  out.code = r.holds ? kExitOk : kExitNegative;
  out.payload["kalmanson"] = r.holds;
  out.text = std::string("kalmanson: ") + (r.holds ? "yes" : "no") + "\n";
  if (r.violation) {
    const auto& v = *r.violation;
    out.payload["quadruple"] = {v.i, v.j, v.k, v.l};
    out.text += "quadruple: " + std::to_string(v.i) + " " + std::to_string(v.j) + " " + std::to_string(v.k) + " " +
                std::to_string(v.l) + "\n";
  }
  return out;
}

Outcome not_member(Outcome out) {
  out.code = kExitNegative;
  out.text += "not a permuted Kalmanson metric\n";
  return out;
}

Outcome metric_recognize(const Options& o) {
  const Metric m = load_metric(o);
  const auto rec = recognize(m);
  Outcome out;
  if (!rec) return not_member(std::move(out));
  out.payload["ordering"] = to_json(rec->ordering);
  out.text = "ordering: " + join_ints(rec->ordering.order()) + "\n";
  return out;
}

std::string decomposition_text(const Decomposition& d) {
  std::string text = "ordering: " + join_ints(d.ordering.order()) + "\nalpha:";
  for (const Rational& a : d.alpha) text += " " + to_string(a);
  text += "\n";
  for (const auto& [split, w] : d.weights) text += to_string(split) + " " + to_string(w) + "\n";
  return text;
}

Outcome metric_decompose(const Options& o) {
  const Metric m = load_metric(o);
  Outcome out;
  std::optional<Decomposition> d;
  if (auto ord = parse_ordering(o.ordering, m.n())) {
    d = decompose(m, *ord);
  } else if (auto rec = recognize(m)) {
    d = std::move(rec->decomposition);
  }
  if (!d) return not_member(std::move(out));
  out.payload["decomposition"] = to_json(*d);
  out.text = decomposition_text(*d);
  return out;
}

Outcome metric_tsp(const Options& o) {
  const Metric m = load_metric(o);
  Outcome out;
  const auto tour = tsp_kalmanson(m);
  std::optional<Tour> oracle;
  if (o.oracle) {
    oracle = tsp_bruteforce(m);
    out.payload["oracle"] = {{"tour", oracle->perm}, {"length", to_string(oracle->length)}};
  }
  if (tour) {
    out.payload["tour"] = tour->perm;
    out.payload["length"] = to_string(tour->length);
    out.text = "tour: " + join_ints(tour->perm) + "\nlength: " + to_string(tour->length) + "\n";
  }
  if (oracle) {
    out.text += "oracle tour: " + join_ints(oracle->perm) + "\noracle length: " + to_string(oracle->length) + "\n";
  }
  if (!tour) return not_member(std::move(out));
  if (oracle && oracle->length != tour->length) {
    out.code = kExitNegative;
    out.payload["status"] = "mismatch";
    out.text += "mismatch: the Kalmanson tour is not optimal\n";
  } else if (oracle) {
    out.text += "oracle: equal\n";
  }
  return out;
}

Outcome metric_generate(const Options& o) {
  if (o.n < kMinTaxa || o.n > kMaxTaxa) throw std::invalid_argument("--n must lie in [4, 63]");
  const GeneratedMetric g = random_circular_metric(o.n, o.seed, o.scramble);
  Outcome out;
  out.text = to_text(g.metric);
  json rows = json::array();
  for (int p = 0; p < o.n; ++p) {
    json row = json::array();
    for (int q = 0; q < o.n; ++q) row.push_back(to_string(g.metric.at(p, q)));
    rows.push_back(row);
  }
  out.payload["metric"] = rows;
  out.payload["decomposition"] = to_json(g.decomposition);
  return out;
}

// --- complex ---

json fvector_json(const FVector& f) {
  json arr = json::array();
  for (const auto& c : f.counts) arr.push_back(c ? big_to_json(*c) : json(nullptr));
  return arr;
}

std::string fvector_table(const std::vector<std::pair<std::string, const FVector*>>& columns) {
  const std::size_t d = columns.front().second->counts.size();
  std::vector<std::size_t> widths;
  for (const auto& [name, f] : columns) {
    std::size_t w = name.size();
    for (const auto& c : f->counts) w = std::max(w, c ? c->str().size() : std::size_t{1});
    widths.push_back(w);
  }
  std::ostringstream ss;
  ss << std::setw(4) << "k";
  for (std::size_t c = 0; c < columns.size(); ++c) ss << "  " << std::setw(static_cast<int>(widths[c])) << columns[c].first;
  ss << "\n";
  for (std::size_t k = 0; k < d; ++k) {
    ss << std::setw(4) << k;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& v = columns[c].second->counts[k];
      ss << "  " << std::setw(static_cast<int>(widths[c])) << (v ? v->str() : "?");
    }
    ss << "\n";
  }
  return ss.str();
}

void check_method(const std::string& method) {
  if (method != "brute" && method != "formula" && method != "both") {
    throw std::invalid_argument("--method must be brute, formula or both");
  }
}

Outcome complex_fvector(const Options& o) {
  const std::string method = o.method.empty() ? "brute" : o.method;
  check_method(method);
  GroundSet ground(o.n);
  Outcome out;
  out.payload["n"] = o.n;
  if (method == "brute") {
    const FVector f = fvector_bruteforce(o.n);
    out.payload["fvector"] = fvector_json(f);
    out.text = fvector_table({{"f_k", &f}});
  } else if (method == "formula") {
    const FVector f = fvector_formulas(o.n);
    out.payload["fvector"] = fvector_json(f);
    out.text = fvector_table({{"f_k", &f}});
  } else {
    const FVector brute = fvector_bruteforce(o.n);
    const FVector formula = fvector_formulas(o.n);
    json mismatches = json::array();
    for (std::size_t k = 0; k < brute.counts.size(); ++k) {
      if (formula.counts[k] && *formula.counts[k] != *brute.counts[k]) mismatches.push_back(k);
    }
    out.payload["fvector"] = fvector_json(brute);
    out.payload["formula"] = fvector_json(formula);
    out.payload["mismatches"] = mismatches;
    out.text = fvector_table({{"brute", &brute}, {"formula", &formula}});
    if (!mismatches.empty()) {
      out.code = kExitNegative;
      out.payload["status"] = "mismatch";
      out.text += "mismatch at k = " + mismatches.dump() + "\n";
    }
  }
  return out;
}

Outcome complex_triangles(const Options& o) {
  const std::string method = o.method.empty() ? "formula" : o.method;
  check_method(method);
  GroundSet ground(o.n);
  Outcome out;
  out.payload["n"] = o.n;
  std::optional<BigInt> formula;
  std::optional<TriangleCount> brute;
  if (method != "brute") formula = triangles(o.n);
  if (method != "formula") brute = triangles_bruteforce(o.n);
  if (formula) {
    out.payload["triangles"] = big_to_json(*formula);
    out.text += "triangles: " + formula->str() + "\n";
  }
  if (brute) {
    out.payload[formula ? "bruteforce" : "triangles"] = brute->count;
    out.text += std::string(formula ? "bruteforce: " : "triangles: ") + std::to_string(brute->count) + "\n";
    json table = json::array();
    out.text += "F_{i,j}:";
    for (const auto& row : brute->table.counts) {
      table.push_back(row);
      out.text += "\n ";
      for (std::uint64_t c : row) out.text += " " + std::to_string(c);
    }
    out.text += "\n";
    out.payload["fij"] = table;
  }
  if (formula && brute && *formula != brute->count) {
    out.code = kExitNegative;
    out.payload["status"] = "mismatch";
    out.text += "mismatch\n";
  }
  return out;
}

Outcome complex_facets(const Options& o) {
  const auto all = facets(o.n);
  const auto splits = nontrivial_splits(o.n);
  Outcome out;
  json list = json::array();
  out.text = "facets: " + std::to_string(all.size()) + "\n";
  for (const Facet& f : all) {
    json names = json::array();
    std::string line = join_ints(f.ordering.order()) + " :";
    for (int id : f.vertex_ids) {
      names.push_back(to_string(splits[static_cast<std::size_t>(id)]));
      line += " " + to_string(splits[static_cast<std::size_t>(id)]);
    }
    list.push_back({{"ordering", to_json(f.ordering)}, {"splits", names}});
    out.text += line + "\n";
  }
  out.payload["n"] = o.n;
  out.payload["count"] = all.size();
  out.payload["facets"] = list;
  return out;
}

void emit(const Outcome& outcome, const char* negative, bool as_json, std::ostream& out) {
  if (as_json) {
    json payload = outcome.payload;
    if (!payload.contains("status")) payload["status"] = status_name(outcome.code, negative);
    // Status first, then the remaining keys in sorted order.
    out << "{\"status\":" << payload["status"].dump();
    for (const auto& [key, value] : payload.items()) {
      if (key != "status") out << "," << json(key).dump() << ":" << value.dump();
    }
    out << "}\n";
  } else {
    out << outcome.text;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Circular split systems, Kalmanson metrics and consecutive-ones matrices", "kalmanson"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_output, "machine-readable output");

  std::function<Outcome()> action;
  const char* negative = "violation";

  auto add_file_command = [&](CLI::App* parent, const std::string& name, const std::string& help,
                              std::function<Outcome(const Options&)> fn, const char* neg) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("file", o.file, "input file, or - for stdin")->required();
    sub->add_flag("--json", o.json_output, "machine-readable output");
    sub->callback([&, fn, neg] {
      action = [&, fn] { return fn(o); };
      negative = neg;
    });
    return sub;
  };

  CLI::App* splits = app.add_subcommand("splits", "split-system commands");
  splits->require_subcommand(1);
  add_file_command(splits, "circular", "is the split system circular?", splits_circular, "violation");
  add_file_command(splits, "weakly-compatible", "is the split system weakly compatible?", splits_weakly_compatible,
                   "violation");
  add_file_command(splits, "to-matrix", "row class of the split system", splits_to_matrix, "violation");

  CLI::App* matrix = app.add_subcommand("matrix", "binary-matrix commands");
  matrix->require_subcommand(1);
  add_file_command(matrix, "c1r", "consecutive ones for rows", [](const Options& opt) { return matrix_ones(opt, false); },
                   "violation");
  add_file_command(matrix, "circ1r", "circular ones for rows", [](const Options& opt) { return matrix_ones(opt, true); },
                   "violation");
  add_file_command(matrix, "tucker", "first Tucker configuration contained in the matrix", matrix_tucker, "violation");

  CLI::App* metric = app.add_subcommand("metric", "metric commands");
  metric->require_subcommand(1);
  auto metric_flags = [&](CLI::App* sub) {
    sub->add_flag("--require-triangle", o.require_triangle, "reject metrics that break the triangle inequality");
    return sub;
  };
  metric_flags(add_file_command(metric, "kalmanson", "check the Kalmanson conditions", metric_kalmanson, "violation"))
      ->add_option("--ordering", o.ordering, "read the metric along this ordering, e.g. 1,3,2,4,5");
  metric_flags(add_file_command(metric, "recognize", "find a Kalmanson ordering", metric_recognize, "not-member"));
  metric_flags(add_file_command(metric, "decompose", "circular decomposition", metric_decompose, "not-member"))
      ->add_option("--ordering", o.ordering, "decompose along this ordering instead of recognizing one");
  metric_flags(add_file_command(metric, "tsp", "optimal tour of a permuted Kalmanson metric", metric_tsp, "not-member"))
      ->add_flag("--oracle", o.oracle, "cross-check against brute force");
  CLI::App* generate = metric->add_subcommand("generate", "random circular decomposable metric");
  generate->add_option("--n", o.n, "number of points")->required();
  generate->add_option("--seed", o.seed, "random seed");
  generate->add_flag("--scramble", o.scramble, "use a random circular ordering instead of the identity");
  generate->add_flag("--json", o.json_output, "machine-readable output");
  generate->callback([&] { action = [&] { return metric_generate(o); }; });

  CLI::App* complex = app.add_subcommand("complex", "face counts of the Kalmanson complex");
  complex->require_subcommand(1);
  auto add_complex = [&](const std::string& name, const std::string& help, Outcome (*fn)(const Options&), bool with_method) {
    CLI::App* sub = complex->add_subcommand(name, help);
    sub->add_option("--n", o.n, "number of taxa")->required();
    if (with_method) sub->add_option("--method", o.method, "brute, formula or both");
    sub->add_flag("--json", o.json_output, "machine-readable output");
    sub->callback([&, fn] {
      action = [&, fn] { return fn(o); };
      negative = "mismatch";
    });
  };
  add_complex("fvector", "f-vector", complex_fvector, true);
  add_complex("triangles", "number of triangles", complex_triangles, true);
  add_complex("facets", "list the facets", complex_facets, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    const Outcome outcome = action();
    emit(outcome, negative, o.json_output, out);
    return outcome.code;
  } catch (const std::exception& e) {
    if (o.json_output) out << json{{"status", "error"}, {"message", e.what()}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace kalmanson::cli
