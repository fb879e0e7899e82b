// Command-line front end: batch counting, checking, construction, census,
// and realization listing over graph6 streams. stdout carries data only;
// counts and other diagnostics go to stderr so outputs stay pipeable.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scsplit/scsplit.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace scsplit;

std::string set_to_string(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

// Right-aligned text table with two-space gutters.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
}

std::vector<Graph> read_input_graphs(const std::string& in_path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!in_path.empty()) {
    file.open(in_path);
    if (!file) throw std::runtime_error("cannot open input file: " + in_path);
    in = &file;
  }
  std::vector<Graph> graphs;
  std::string line;
  int lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      graphs.push_back(from_graph6(line));
    } catch (const std::exception& e) {
      throw std::runtime_error("input line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

int run_count(std::ostream& out, bool json_out, const std::vector<int>& orders,
              const std::string& family) {
  const bool do_split = family != "pseudo-split";
  const bool do_pseudo = family != "split";
  if (json_out) {
    json rows = json::array();
    for (int n : orders) {
      json row;
      row["n"] = n;
      if (do_split) row["split"] = lambda_split(n).str();
      if (do_pseudo) row["pseudo_split"] = lambda_pseudo_split(n).str();
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"n"};
  if (do_split) header.push_back("split");
  if (do_pseudo) header.push_back("pseudo-split");
  rows.push_back(std::move(header));
  for (int n : orders) {
    std::vector<std::string> row = {std::to_string(n)};
    if (do_split) row.push_back(lambda_split(n).str());
    if (do_pseudo) row.push_back(lambda_pseudo_split(n).str());
    rows.push_back(std::move(row));
  }
  print_table(out, rows);
  return 0;
}

// One graph's report for `check`. Selected sections only; the partition
// section reports a diamond (antimorphism-built where possible) and the
// rectangle, each with the self-complementarity of the partition itself.
void check_one(std::ostream& out, bool json_out, json& json_rows, int index, const Graph& g,
               bool do_sc, bool do_split, bool do_pseudo, bool do_forcibly, bool do_partition) {
  const std::string g6 = to_graph6(g);
  const auto ds = DegreeSequence::of(g);
  const auto sigma = find_antimorphism(g);
  const auto sp = split_partition(g);

  json row;
  if (json_out) {
    row["index"] = index;
    row["graph6"] = g6;
    row["order"] = g.order();
    row["edges"] = g.edge_count();
    row["degree_sequence"] = ds.to_string();
  } else {
    out << "graph " << index << ": " << g6 << "\n";
    out << "  order: " << g.order() << "  edges: " << g.edge_count() << "\n";
    out << "  degree sequence: " << ds.to_string() << "\n";
  }

  if (do_sc) {
    if (json_out) {
      row["self_complementary"] = sigma.has_value();
      row["antimorphism"] = sigma ? json(sigma->to_string()) : json(nullptr);
    } else if (sigma) {
      out << "  self-complementary: yes  antimorphism: " << sigma->to_string() << "\n";
    } else {
      out << "  self-complementary: no\n";
    }
  }

  if (do_split) {
    if (json_out) {
      json obj;
      obj["is"] = sp.has_value();
      if (sp) {
        obj["K"] = sp->clique;
        obj["I"] = sp->independent;
      }
      row["split"] = std::move(obj);
    } else if (sp) {
      out << "  split: yes  K=" << set_to_string(sp->clique)
          << " I=" << set_to_string(sp->independent) << "\n";
    } else {
      out << "  split: no\n";
    }
  }

  if (do_pseudo) {
    const auto pp = pseudo_split_partition(g);
    if (json_out) {
      json obj;
      obj["is"] = pp.has_value();
      if (pp) {
        obj["K"] = pp->clique;
        obj["I"] = pp->independent;
        obj["C5"] = pp->c5;
      }
      row["pseudo_split"] = std::move(obj);
    } else if (pp) {
      out << "  pseudo-split: yes  K=" << set_to_string(pp->clique)
          << " I=" << set_to_string(pp->independent) << " C5=" << set_to_string(pp->c5) << "\n";
    } else {
      out << "  pseudo-split: no\n";
    }
  }

  if (do_forcibly) {
    const bool forcibly = is_forcibly_sc(ds);
    if (json_out)
      row["forcibly_sc"] = forcibly;
    else
      out << "  forcibly sc: " << (forcibly ? "yes" : "no") << "\n";
  }

  if (do_partition) {
    std::optional<FourPartition> diamond;
    if (sigma && sp && g.order() % 4 == 0)
      diamond = diamond_from_antimorphism(g, *sigma);
    else if (sp && sp->clique.size() >= 2 && sp->independent.size() >= 2)
      diamond = any_diamond(g);
    const auto rectangle = rectangle_partition(g);

    const auto report_partition = [&](const char* name, const std::optional<FourPartition>& p) {
      if (json_out) {
        json obj;
        obj["exists"] = p.has_value();
        if (p) {
          for (int j = 0; j < 4; ++j) obj["V" + std::to_string(j + 1)] = p->parts[j];
          const auto sc = check_self_complementary_partition(g, *p);
          obj["self_complementary"] = sc.self_complementary;
          obj["rotation"] = sc.rotation;
        }
        row[name] = std::move(obj);
        return;
      }
      out << "  " << name << ": ";
      if (!p) {
        out << "none\n";
        return;
      }
      for (int j = 0; j < 4; ++j) out << "V" << j + 1 << "=" << set_to_string(p->parts[j]) << " ";
      const auto sc = check_self_complementary_partition(g, *p);
      out << "self-complementary: " << (sc.self_complementary ? "yes" : "no");
      if (sc.rotation) out << " (rotation)";
      out << "\n";
    };
    report_partition("diamond", diamond);
    report_partition("rectangle", rectangle);
  }

  if (json_out) json_rows.push_back(std::move(row));
}

// key=value[,key=value...] with an exact required key set and optional keys.
std::map<std::string, int> parse_kv(const std::string& text, const std::vector<std::string>& keys,
                                    const std::vector<std::string>& optional = {}) {
  std::map<std::string, int> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value, got \"" + item + "\"");
    const std::string key = item.substr(0, eq);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in \"" + item + "\"");
    }
    if (used != item.size() - eq - 1) throw std::invalid_argument("bad integer in \"" + item + "\"");
    if (kv.count(key)) throw std::invalid_argument("duplicate key \"" + key + "\"");
    const auto known = [&](const std::vector<std::string>& set) {
      return std::find(set.begin(), set.end(), key) != set.end();
    };
    if (!known(keys) && !known(optional)) throw std::invalid_argument("unknown key \"" + key + "\"");
    kv[key] = value;
  }
  for (const auto& key : keys)
    if (!kv.count(key)) throw std::invalid_argument("missing key \"" + key + "\"");
  return kv;
}

int parse_bare_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got \"" + text + "\"");
  }
  if (used != text.size()) throw std::invalid_argument("expected an integer, got \"" + text + "\"");
  return value;
}

int run_build(std::ostream& out, bool json_out, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("build spec must look like \"prefix:arguments\"");
  const std::string prefix = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);

  Graph g(0);
  std::optional<bool> potentially_checked;
  if (prefix == "elementary") {
    g = build_elementary(BlockSpec::parse(rest));
  } else if (prefix == "gibbs") {
    const auto kv = parse_kv(rest, {"k", "d"});
    g = build_gibbs_onecycle(kv.at("k"), kv.at("d"));
  } else if (prefix == "zk") {
    g = build_zk(parse_bare_int(rest));
  } else if (prefix == "circ") {
    g = build_circulant_power(parse_bare_int(rest));
  } else if (prefix == "witness1") {
    const auto kv = parse_kv(rest, {"k"});
    g = witness_regular(kv.at("k"));
  } else if (prefix == "witness2") {
    const auto kv = parse_kv(rest, {"k", "d"});
    g = witness_two_degree(kv.at("k"), kv.at("d"));
  } else if (prefix == "witness4") {
    const auto kv = parse_kv(rest, {"k1", "k2", "d"}, {"n"});
    const int n = kv.count("n") ? kv.at("n") : 4 * (kv.at("k1") + kv.at("k2"));
    const auto w = witness_four_degree(kv.at("k1"), kv.at("k2"), kv.at("d"), n);
    g = w.graph;
    potentially_checked = w.potentially_sc_checked;
  } else {
    throw std::invalid_argument("unknown construction \"" + prefix + "\"");
  }

  const auto ds = DegreeSequence::of(g);
  if (json_out) {
    json obj;
    obj["spec"] = spec;
    obj["graph6"] = to_graph6(g);
    obj["order"] = g.order();
    obj["edges"] = g.edge_count();
    obj["degree_sequence"] = ds.to_string();
    if (potentially_checked) obj["potentially_sc_checked"] = *potentially_checked;
    out << obj.dump(2) << "\n";
  } else {
    out << to_graph6(g) << "\n";
  }
  std::cerr << "built " << spec << ": order " << g.order() << ", degrees " << ds.to_string()
            << "\n";
  return 0;
}

int run_census(std::ostream& out, bool json_out, int n, const std::string& filter_name,
               int threads) {
  CensusFilter filter = CensusFilter::ALL_SC;
  if (filter_name == "split") filter = CensusFilter::SC_SPLIT;
  if (filter_name == "pseudo-split") filter = CensusFilter::SC_PSEUDO_SPLIT;
  const Census census = generate_sc(n, filter, threads);
  if (json_out) {
    json obj;
    obj["n"] = census.n;
    obj["filter"] = filter_name;
    obj["count"] = census.graphs.size();
    json list = json::array();
    for (const auto& g : census.graphs) list.push_back(to_graph6(g));
    obj["graphs"] = std::move(list);
    out << obj.dump(2) << "\n";
  } else {
    for (const auto& g : census.graphs) out << to_graph6(g) << "\n";
  }
  std::cerr << "census n=" << n << " filter=" << filter_name << ": " << census.graphs.size()
            << " graphs\n";
  return 0;
}

int run_realizations(std::ostream& out, bool json_out, const std::string& ds_text, bool labeled) {
  const auto ds = DegreeSequence::parse(ds_text);
  const auto graphs = realization_closure(ds, /*iso_dedupe=*/!labeled);
  if (json_out) {
    json rows = json::array();
    for (const auto& g : graphs) {
      json row;
      row["graph6"] = to_graph6(g);
      row["self_complementary"] = is_self_complementary(g);
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << "\n";
  } else {
    for (const auto& g : graphs)
      out << to_graph6(g) << "\t" << (is_self_complementary(g) ? "yes" : "no") << "\n";
  }
  std::cerr << "realizations of " << ds.to_string() << ": " << graphs.size()
            << (labeled ? " labeled graphs" : " isomorphism classes") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-complementary split and pseudo-split graphs: "
               "counting, recognition, construction, and exhaustive census"};
  app.require_subcommand(1);

  bool json_out = false;
  int threads = 0;
  std::string in_path, out_path;
  app.add_flag("--json", json_out, "emit JSON instead of text");
  app.add_option("--threads", threads, "worker threads, 0 = all hardware threads")
      ->default_val(0);
  app.add_option("--in", in_path, "read graph6 input from this file instead of stdin");
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  auto* count_cmd =
      app.add_subcommand("count", "count SC split / pseudo-split graphs by order (exact)");
  std::vector<int> orders;
  std::string family = "both";
  count_cmd->add_option("orders", orders, "graph orders (also accepts comma-separated)")
      ->required()
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--family", family, "which family to count")
      ->check(CLI::IsMember({"split", "pseudo-split", "both"}))
      ->default_val("both");
  count_cmd->fallthrough();

  auto* check_cmd = app.add_subcommand("check", "analyze graphs from graph6 input");
  std::vector<std::string> checks;
  check_cmd->add_option("--checks", checks, "checks to run (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember({"sc", "split", "pseudo-split", "forcibly", "partition"}));
  check_cmd->fallthrough();

  auto* build_cmd = app.add_subcommand("build", "construct a graph from a construction spec");
  std::string build_spec;
  build_cmd
      ->add_option("spec", build_spec,
                   "construction, e.g. elementary:P4,A;c5  gibbs:k=2,d=5  zk:3  circ:2  "
                   "witness1:k=2  witness2:k=3,d=8  witness4:k1=1,k2=1,d=5")
      ->required();
  build_cmd->fallthrough();

  auto* census_cmd = app.add_subcommand("census", "exhaustively enumerate SC graphs at order n");
  int census_n = 0;
  std::string census_filter = "sc";
  census_cmd->add_option("--n", census_n, "graph order")->required()->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--filter", census_filter, "family filter")
      ->check(CLI::IsMember({"sc", "split", "pseudo-split"}))
      ->default_val("sc");
  census_cmd->fallthrough();

  auto* real_cmd =
      app.add_subcommand("realizations", "list realizations of a degree sequence with SC verdicts");
  std::string ds_text;
  bool labeled = false;
  real_cmd->add_option("--ds", ds_text, "degree sequence, e.g. 5^4,2^4")->required();
  real_cmd->add_flag("--labeled", labeled, "list all labeled realizations instead of classes");
  real_cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
      out_file.open(out_path);
      if (!out_file) throw std::runtime_error("cannot open output file: " + out_path);
      out = &out_file;
    }

    if (count_cmd->parsed()) return run_count(*out, json_out, orders, family);
    if (build_cmd->parsed()) return run_build(*out, json_out, build_spec);
    if (census_cmd->parsed())
      return run_census(*out, json_out, census_n, census_filter, threads);
    if (real_cmd->parsed()) return run_realizations(*out, json_out, ds_text, labeled);

    // check
    const auto graphs = read_input_graphs(in_path);
    const auto want = [&](const char* name) {
      return checks.empty() || std::find(checks.begin(), checks.end(), name) != checks.end();
    };
    json json_rows = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i)
      check_one(*out, json_out, json_rows, static_cast<int>(i) + 1, graphs[i], want("sc"),
                want("split"), want("pseudo-split"), want("forcibly"), want("partition"));
    if (json_out) *out << json_rows.dump(2) << "\n";
    std::cerr << "checked " << graphs.size() << " graphs\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
