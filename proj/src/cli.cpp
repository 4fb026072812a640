#include "shifted/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "shifted/axioms.hpp"
#include "shifted/expansion.hpp"

namespace shifted::cli {

namespace {

struct Options {
  std::optional<std::string> word;
  std::string outer, inner, op, format = "text", out_file, axioms, tableau_file, graph_file;
  int n = 0, index = 0, jobs = 1;
  bool timing = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

StrictPartition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("bad partition '" + text + "'");
    }
  }
  return StrictPartition(parts);
}

SkewShape shape_of(const Options& o) {
  if (o.outer.empty() && o.inner.empty()) throw UsageError("--outer is required");
  return make_skew_shape(parse_partition(o.outer), parse_partition(o.inner));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void need_n(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
}

// The word from --word, or the reading word of --tableau-file.
RawWord input_word(const Options& o, std::optional<ShiftedTableau>* tableau = nullptr) {
  need_n(o);
  if (!o.tableau_file.empty()) {
    auto t = parse_tableau(read_file(o.tableau_file), o.n);
    if (tableau) *tableau = t;
    return reading_word(t);
  }
  if (!o.word) throw UsageError("--word or --tableau-file is required");
  return parse_raw_word(*o.word, o.n);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("unsupported --format '" + o.format + "' for this command");
}

std::string cmd_enumerate(const Options& o) {
  need_n(o);
  require_format(o, {"text", "json"});
  const auto sh = shape_of(o);
  const auto ts = enumerate_tableaux(sh, o.n);
  if (o.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& t : ts)
      j.push_back({{"rows", format_tableau_inline(t)}, {"word", to_string(reading_word(t))}, {"weight", weight(t).counts}});
    return j.dump(2) + "\n";
  }
  std::string s = std::to_string(ts.size()) + " tableaux of shape " + to_string(sh) + " with n=" + std::to_string(o.n) + "\n";
  for (const auto& t : ts)
    s += format_tableau_inline(t) + "    " + to_string(reading_word(t)) + " wt=" + to_string(weight(t)) + "\n";
  return s;
}

std::string cmd_apply(const Options& o) {
  const auto parsed = parse_family(o.op);
  if (!parsed) throw UsageError("--op must be F, E, F' or E', got '" + o.op + "'");
  const Family fam = *parsed;
  std::optional<ShiftedTableau> t;
  const Word w = canonicalize(input_word(o, &t));
  if (o.index < 1 || o.index >= o.n)
    throw InvalidIndex("index " + std::to_string(o.index) + " outside 1.." + std::to_string(o.n - 1));
  const OpKind k{fam, o.index};
  if (t) {
    if (auto r = apply_to_tableau(k, *t)) return format_tableau(*r);
  } else if (auto r = apply(k, w)) {
    return to_string(*r) + "\n";
  }
  if (!is_primed(fam)) {
    const auto m = final_critical_substring(w, o.index, lowers(fam) ? Side::Lower : Side::Raise);
    if (!m) return "undefined (no critical substring)\n";
    return "undefined (type " + std::string(to_string(m->kind)) + " at position " + std::to_string(m->start_index + 1) +
           ")\n";
  }
  return "undefined\n";
}

std::string cmd_walk(const Options& o) {
  const RawWord w = input_word(o);
  if (o.index < 1 || o.index >= o.n)
    throw InvalidIndex("index " + std::to_string(o.index) + " outside 1.." + std::to_string(o.n - 1));
  return format_walk(lattice_walk(w, o.index));
}

std::string cmd_std(const Options& o) { return to_string(standardize(input_word(o))) + "\n"; }

std::string cmd_eta(const Options& o) { return to_string(eta(canonicalize(input_word(o)))) + "\n"; }

std::string cmd_graph(const Options& o) {
  need_n(o);
  require_format(o, {"text", "json", "dot"});
  const auto g = build_graph(shape_of(o), o.n, o.jobs);
  if (o.format == "json") return export_json(g);
  if (o.format == "dot") return export_dot(g);
  std::string s = std::to_string(g.size()) + " vertices, " + std::to_string(g.edges().size()) + " edges\n";
  for (std::size_t k = 0; k < g.size(); ++k)
    s += "v" + std::to_string(k) + " " + to_string(*g.vertices()[k].word) + " wt=" + to_string(g.vertices()[k].weight) + "\n";
  for (const auto& e : g.edges())
    s += "v" + std::to_string(e.src) + " -" + edge_label(e.index, e.primed) + "-> v" + std::to_string(e.dst) + "\n";
  return s;
}

std::pair<std::string, int> cmd_check(const Options& o) {
  require_format(o, {"text", "json"});
  CrystalGraph g;
  if (!o.graph_file.empty()) {
    g = import_json(read_file(o.graph_file));
  } else {
    need_n(o);
    g = build_graph(shape_of(o), o.n, o.jobs);
  }
  const auto axioms = o.axioms.empty() ? std::vector<AxiomId>(kAllAxioms.begin(), kAllAxioms.end()) : parse_axiom_list(o.axioms);
  const auto r = check_axioms(g, axioms, o.jobs);
  return {o.format == "json" ? report_json(r, o.timing) : format_report(r, o.timing), r.passed() ? 0 : 1};
}

std::string cmd_expand(const Options& o) {
  need_n(o);
  require_format(o, {"text", "json"});
  const auto r = verify_expansion(shape_of(o), o.n, o.jobs);
  return o.format == "json" ? expansion_json(r) : format_expansion(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystal operators on shifted tableaux", "shcrystal"};
  app.require_subcommand(1);
  Options o;

  auto shape_opts = [&](CLI::App* c) {
    c->add_option("--outer", o.outer, "outer strict partition, e.g. 4,2,1");
    c->add_option("--inner", o.inner, "inner strict partition");
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--n", o.n, "largest entry");
    c->add_option("--out", o.out_file, "write output to FILE");
    c->add_option("--format", o.format, "text, json or dot");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto word_opts = [&](CLI::App* c) {
    c->add_option("--word", o.word, "word such as 211'12'");
    c->add_option("--tableau-file", o.tableau_file, "tableau in row text format");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list ShST(shape, n)");
  shape_opts(enumerate);
  common(enumerate);
  auto* apply_cmd = app.add_subcommand("apply", "apply F, E, F' or E'");
  word_opts(apply_cmd);
  common(apply_cmd);
  apply_cmd->add_option("--op", o.op, "F, E, F' or E'")->required();
  apply_cmd->add_option("--index", o.index, "operator index i")->required();
  auto* walk = app.add_subcommand("walk", "trace the i-lattice walk");
  word_opts(walk);
  common(walk);
  walk->add_option("--index", o.index, "index i")->required();
  auto* std_cmd = app.add_subcommand("std", "standardization of a word");
  word_opts(std_cmd);
  common(std_cmd);
  auto* eta_cmd = app.add_subcommand("eta", "the involution eta");
  word_opts(eta_cmd);
  common(eta_cmd);
  auto* graph = app.add_subcommand("graph", "build the crystal graph");
  shape_opts(graph);
  common(graph);
  auto* check_cmd = app.add_subcommand("check", "check the axioms");
  shape_opts(check_cmd);
  common(check_cmd);
  check_cmd->add_option("--graph", o.graph_file, "graph JSON file instead of a shape");
  check_cmd->add_option("--axioms", o.axioms, "comma-separated axiom names or all");
  check_cmd->add_flag("--timing", o.timing, "report the runtime");
  auto* expand_cmd = app.add_subcommand("expand", "Q-expansion of a skew shape");
  shape_opts(expand_cmd);
  common(expand_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  int status = 0;
  std::string text;
  try {
    if (*enumerate) text = cmd_enumerate(o);
    else if (*apply_cmd) text = cmd_apply(o);
    else if (*walk) text = cmd_walk(o);
    else if (*std_cmd) text = cmd_std(o);
    else if (*eta_cmd) text = cmd_eta(o);
    else if (*graph) text = cmd_graph(o);
    else if (*check_cmd) std::tie(text, status) = cmd_check(o);
    else if (*expand_cmd) text = cmd_expand(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_file);
    if (!f) {
      err << "error: cannot write " << o.out_file << "\n";
      return 2;
    }
    f << text;
  }
  return status;
}

}  // namespace shifted::cli
