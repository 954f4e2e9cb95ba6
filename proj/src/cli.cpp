#include "nccr/cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nccr/cm_nccr.hpp"
#include "nccr/errors.hpp"
#include "nccr/homology_oracle.hpp"
#include "nccr/io.hpp"
#include "nccr/quiver.hpp"
#include "nccr/upper_sets.hpp"
#include "nccr/weight_system.hpp"

namespace nccr::cli {

namespace {

using Json = nlohmann::ordered_json;

Json element_list(const FGGroup& g, const std::vector<GroupElement>& elems) {
  Json arr = Json::array();
  for (const auto& e : elems) arr.push_back(g.format(e));
  return arr;
}

Json validation_summary(const WeightSystem& ws, const std::optional<Classifier>& c) {
  const FGGroup& g = ws.group();
  Json v;
  v["group"] = g.to_string();
  v["weights"] = element_list(g, ws.weights());
  v["permutation"] = ws.permutation();
  v["dimension"] = ws.ring_dimension();
  if (c) {
    v["l"] = ws.positive_count();
    v["l_prime"] = ws.negative_count();
    v["H"] = c->h().to_string();
    v["p"] = c->h().format(c->context().p());
    v["orbit_count"] = c->context().orbit_count();
    v["max_conductor"] = c->context().max_conductor();
  }
  return v;
}

Json quiver_json(const Quiver& q) {
  Json j;
  j["vertices"] = element_list(q.group, q.vertices);
  Json arr = Json::array();
  for (const auto& a : q.arrows) {
    Json e;
    e["source"] = q.group.format(q.vertices[a.source]);
    e["target"] = q.group.format(q.vertices[a.target]);
    e["label"] = monomial_label(a.exponents);
    e["exponents"] = a.exponents;
    arr.push_back(std::move(e));
  }
  j["arrows"] = std::move(arr);
  j["vertex_count"] = q.vertices.size();
  j["arrow_count"] = q.arrows.size();
  j["loop_count"] = q.loop_count();
  return j;
}

std::string exchange_dot(const FGGroup& h, const ExchangeGraph& g) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  \"C" << i << "\" [label=\"" << format_set(h, g.nodes[i].canonical.elements) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  \"C" << e.from << "\" -> \"C" << e.to << "\" [label=\"" << h.format(e.at) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::pair<Int, Int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) throw UsageError("ParseError", "range must look like A..B");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, pos), b = text.substr(pos + 2);
    const Int lo = std::stoll(a, &used_a);
    const Int hi = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("ParseError", "bad range '" + text + "'");
  }
}

std::vector<GroupElement> parse_degrees(const InputDocument& doc, const std::string& text) {
  std::vector<GroupElement> out;
  try {
    for (const auto& v : nlohmann::json::parse(text)) out.push_back(doc.from_raw(v.get<std::vector<Int>>()));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("ParseError", std::string("--degrees expects a JSON list of integer vectors: ") + e.what());
  }
  if (out.empty()) throw UsageError("ParseError", "--degrees must not be empty");
  return out;
}

struct Options {
  std::string file;
  std::optional<std::size_t> class_index;
  std::string degrees;
  std::optional<Int> bound;
  std::string format = "json";
  std::string at;
  std::string range = "-10..10";
  Int window = 12;
};

class Runner {
 public:
  Runner(std::string command, Options opts, std::ostream& out) : command_(std::move(command)), opts_(std::move(opts)), out_(out) {
    report_["version"] = kReportVersion;
    report_["command"] = command_;
    report_["file"] = opts_.file;
  }

  int run() {
    doc_ = load_input(opts_.file);
    try {
      ws_ = validate(doc_.group, doc_.weights);
    } catch (const ValidationError& e) {
      report_["error"] = {{"kind", e.kind()}, {"message", e.what()}};
      emit();
      return kValidation;
    }
    if (ws_->group().free_rank() == 1) classifier_.emplace(*ws_);
    report_["validation"] = validation_summary(*ws_, classifier_);

    if (command_ == "validate") return finish();
    if (command_ == "mckay") return mckay();
    if (!classifier_) throw UsageError("RankZeroGroup", command_ + " needs a rank-one group; use mckay");
    if (command_ == "classify") return classify();
    if (command_ == "quiver") return quiver();
    if (command_ == "mutate") return mutate_class();
    if (command_ == "exchange-graph") return exchange();
    if (command_ == "oracle") return oracle_check();
    throw UsageError("UnknownCommand", command_);
  }

 private:
  int finish() {
    report_["warnings"] = warnings_;
    emit();
    return kSuccess;
  }

  void emit() { out_ << report_.dump(2) << "\n"; }

  const UpperSetClass& chosen_class() {
    classes_ = enumerate_classes(classifier_->context());
    if (!opts_.class_index || *opts_.class_index >= classes_.size()) {
      throw UsageError("UnknownClass", "class index out of range (have " + std::to_string(classes_.size()) + ")");
    }
    return classes_[*opts_.class_index];
  }

  int classify() {
    const auto& h = classifier_->h();
    const auto& g = classifier_->g();
    const auto classes = enumerate_classes(classifier_->context());
    Json arr = Json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& j = classes[i].canonical.elements;
      Json c;
      c["index"] = i;
      c["jset"] = element_list(h, j);
      c["vertex_set"] = element_list(g, classifier_->summands(j).degrees);
      c["minimal_elements"] = element_list(h, minimal_elements(classifier_->context(), j));
      c["stabilizer_order"] = classes[i].stabilizer_order;
      arr.push_back(std::move(c));
    }
    report_["result"] = {{"count", classes.size()}, {"classes", std::move(arr)}};
    return finish();
  }

  int quiver() {
    VertexSet v;
    if (opts_.class_index) {
      v = classifier_->summands(chosen_class().canonical.elements);
    } else if (!opts_.degrees.empty()) {
      v = make_vertex_set(parse_degrees(doc_, opts_.degrees));
    } else {
      throw UsageError("ParseError", "quiver needs --class or --degrees");
    }
    const Int bound = opts_.bound.value_or(default_search_bound(*classifier_));
    auto search = arrows(*ws_, v, bound);
    for (auto& w : search.warnings) warnings_.push_back(w);
    if (opts_.format == "dot") {
      out_ << emit_dot(search.quiver);
      return kSuccess;
    }
    Json r = quiver_json(search.quiver);
    r["bound"] = bound;
    r["is_modifying"] = classifier_->is_modifying(v);
    r["is_nccr"] = classifier_->is_nccr(v);
    report_["result"] = std::move(r);
    return finish();
  }

  int mutate_class() {
    const auto& h = classifier_->h();
    const auto& cls = chosen_class();
    const GroupElement m = h.parse(opts_.at);
    const auto v = classifier_->summands(cls.canonical.elements);
    const auto res = classifier_->iw_mutation(v, m);
    const auto mutated = mutate(classifier_->context(), cls.canonical, m);
    const auto idx = class_index(classifier_->context(), classes_, mutated.elements);
    if (!idx) throw InternalError("InternalInconsistency", "mutation left the enumerated classes");
    Json r;
    r["class"] = *opts_.class_index;
    r["at"] = h.format(m);
    r["jset"] = element_list(h, mutated.elements);
    r["vertex_set"] = element_list(classifier_->g(), res.mutated.degrees);
    r["result_class"] = *idx;
    r["certificate"] = {{"fixed_part", element_list(classifier_->g(), res.certificate.fixed_part.degrees)},
                        {"removed_orbit", h.format(res.certificate.removed_orbit)},
                        {"plus_steps", res.certificate.plus_steps},
                        {"minus_steps", res.certificate.minus_steps}};
    report_["result"] = std::move(r);
    return finish();
  }

  int exchange() {
    const auto& h = classifier_->h();
    const auto graph = exchange_graph(classifier_->context());
    if (opts_.format == "dot") {
      out_ << exchange_dot(h, graph);
      return kSuccess;
    }
    Json nodes = Json::array();
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
      nodes.push_back({{"index", i}, {"jset", element_list(h, graph.nodes[i].canonical.elements)}});
    }
    Json edges = Json::array();
    for (const auto& e : graph.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"at", h.format(e.at)}});
    report_["result"] = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"connected", graph.connected}};
    return finish();
  }

  int oracle_check() {
    const auto [lo, hi] = parse_range(opts_.range);
    const FGGroup& g = classifier_->g();
    std::vector<GroupElement> degrees;
    for (Int f = lo; f <= hi; ++f) {
      for (const auto& t : g.torsion_elements()) degrees.push_back(GroupElement{f, t.tors});
    }
    const Int span = std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi);
    const Int needed = oracle::sufficient_window(*ws_, span, classifier_->context().max_conductor());
    if (opts_.window < needed) {
      warnings_.push_back("WindowTooSmall: window " + std::to_string(opts_.window) + " below sufficient bound " +
                          std::to_string(needed));
    }
    const auto rep = oracle::mcm_crosscheck(*ws_, degrees, opts_.window,
                                            [&](const GroupElement& x) { return classifier_->is_mcm(x); });
    report_["result"] = {{"summary", rep.summary()},
                         {"checked", rep.checked},
                         {"agree", rep.agree},
                         {"mismatches", element_list(g, rep.mismatches)},
                         {"mcm_degrees", element_list(g, rep.mcm_degrees)}};
    return finish();
  }

  int mckay() {
    const auto q = mckay_quiver(*ws_);
    if (opts_.format == "dot") {
      out_ << emit_dot(q);
      return kSuccess;
    }
    report_["result"] = quiver_json(q);
    return finish();
  }

  std::string command_;
  Options opts_;
  std::ostream& out_;
  Json report_;
  Json warnings_ = Json::array();
  InputDocument doc_;
  std::optional<WeightSystem> ws_;
  std::optional<Classifier> classifier_;
  std::vector<UpperSetClass> classes_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify toric NCCRs of rank-one Gorenstein toric singularities", "nccr"};
  app.require_subcommand(1);
  Options opts;

  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", opts.file, "input weight system (JSON)")->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"dot", "json"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "validate a weight system");
  add_file(validate_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "list toric NCCR classes");
  add_file(classify_cmd);
  auto* quiver_cmd = app.add_subcommand("quiver", "quiver of a class or of explicit degrees");
  add_file(quiver_cmd);
  auto* cls_opt = quiver_cmd->add_option("--class", opts.class_index, "class index from classify");
  quiver_cmd->add_option("--degrees", opts.degrees, "JSON list of degree vectors")->excludes(cls_opt);
  quiver_cmd->add_option("--bound", opts.bound, "monomial total degree bound");
  add_format(quiver_cmd);
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a class at a minimal element");
  add_file(mutate_cmd);
  mutate_cmd->add_option("--class", opts.class_index, "class index")->required();
  mutate_cmd->add_option("--at", opts.at, "minimal element of H, e.g. (1) or (2; 1)")->required();
  auto* graph_cmd = app.add_subcommand("exchange-graph", "class-level mutation graph");
  add_file(graph_cmd);
  add_format(graph_cmd);
  auto* oracle_cmd = app.add_subcommand("oracle", "cross-check the MCM criterion by witness search");
  add_file(oracle_cmd);
  oracle_cmd->add_option("--range", opts.range, "free-part range A..B");
  oracle_cmd->add_option("--window", opts.window, "entry bound for sign vectors");
  auto* mckay_cmd = app.add_subcommand("mckay", "McKay-type quiver for a finite group");
  add_file(mckay_cmd);
  add_format(mckay_cmd);

  std::vector<std::string> storage{"nccr"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  try {
    Runner runner(command, opts, out);
    return runner.run();
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return kValidation;
  } catch (const InternalError& e) {
    err << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace nccr::cli
