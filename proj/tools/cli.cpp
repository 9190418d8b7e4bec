#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "legknot/convert.hpp"
#include "legknot/corpus.hpp"
#include "legknot/invariants.hpp"
#include "legknot/moves.hpp"
#include "legknot/search.hpp"
#include "legknot/svg.hpp"
#include "legknot/vassiliev.hpp"

namespace legknot::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Where a command's word comes from: one of the literal flags or a file.
struct WordSource {
  std::string front;
  std::string diagram;
  std::string singular;
  std::string file;
};

struct AnyWord {
  WordKind kind = WordKind::Diagram;
  std::optional<FrontWord> front;
  std::optional<DiagramWord> diagram;
  std::optional<SingularDiagramWord> singular;

  std::string text() const {
    if (front) return to_string(*front);
    if (diagram) return to_string(*diagram);
    return to_string(*singular);
  }
};

const char* kind_name(WordKind k) {
  switch (k) {
    case WordKind::Front:
      return "front";
    case WordKind::Diagram:
      return "diagram";
    case WordKind::Singular:
      return "singular";
  }
  return "diagram";
}

// Non-empty lines that are not comments.
std::vector<std::string> content_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    out.push_back(line.substr(start));
  }
  return out;
}

AnyWord parse_as(WordKind kind, const std::string& text) {
  AnyWord w;
  w.kind = kind;
  switch (kind) {
    case WordKind::Front:
      w.front = parse_front(text);
      break;
    case WordKind::Diagram:
      w.diagram = parse_diagram(text);
      break;
    case WordKind::Singular:
      w.singular = parse_singular(text);
      break;
  }
  return w;
}

// .front files hold fronts; .morse files hold diagram words, singular ones
// when they contain double points.
WordKind kind_for(const std::string& path, const std::string& text) {
  if (fs::path(path).extension() == ".front") return WordKind::Front;
  return text.find("Xd") != std::string::npos ? WordKind::Singular : WordKind::Diagram;
}

AnyWord load(const WordSource& src) {
  const int given = !src.front.empty() + !src.diagram.empty() + !src.singular.empty() +
                    !src.file.empty();
  if (given != 1)
    throw CLI::ValidationError("give exactly one of --front, --diagram, --singular or a file");
  if (!src.front.empty()) return parse_as(WordKind::Front, src.front);
  if (!src.diagram.empty()) return parse_as(WordKind::Diagram, src.diagram);
  if (!src.singular.empty()) return parse_as(WordKind::Singular, src.singular);
  const auto lines = content_lines(src.file);
  if (lines.empty()) throw Error("'" + src.file + "' holds no word");
  return parse_as(kind_for(src.file, lines.front()), lines.front());
}

void add_word_options(CLI::App* cmd, WordSource& src) {
  cmd->add_option("--front", src.front, "Front word, e.g. \"L1 R1\"");
  cmd->add_option("--diagram", src.diagram, "Diagram word, e.g. \"Cup1 Cap1\"");
  cmd->add_option("--singular", src.singular, "Singular diagram word (with Xd tokens)");
  cmd->add_option("file", src.file, "A .front or .morse file")->check(CLI::ExistingFile);
}

Json invariants_json(const std::vector<InvariantValue>& values) {
  Json j = Json::object();
  for (const auto& v : values) j[v.name] = v.value;
  return j;
}

std::vector<InvariantValue> report(const AnyWord& w) {
  if (w.front) return invariant_report(*w.front);
  if (w.diagram) return invariant_report(*w.diagram);
  return invariant_report(*w.singular);
}

Json header() {
  Json j;
  j["schema"] = kSchemaVersion;
  return j;
}

Json word_report(const AnyWord& w) {
  Json j = header();
  j["kind"] = kind_name(w.kind);
  j["word"] = w.text();
  j["invariants"] = invariants_json(report(w));
  return j;
}

int value_of(const std::vector<InvariantValue>& values, const std::string& name) {
  for (const auto& v : values)
    if (v.name == name) return v.value;
  throw Error("missing invariant " + name);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

DiagramWord as_diagram(const AnyWord& w, const char* what) {
  if (w.diagram) return *w.diagram;
  if (w.front) return front_to_diagram(*w.front);
  throw Error(std::string(what) + " takes a front or diagram word");
}

// --- commands -------------------------------------------------------------

int cmd_validate(const WordSource& src, std::ostream& out, std::ostream& err) {
  try {
    const AnyWord w = load(src);
    Json j = header();
    j["kind"] = kind_name(w.kind);
    j["word"] = w.text();
    j["valid"] = true;
    std::size_t events = 0, crossings = 0;
    int dps = 0;
    if (w.front) events = w.front->size(), crossings = w.front->crossing_count();
    if (w.diagram) events = w.diagram->size(), crossings = w.diagram->crossing_count();
    if (w.singular) {
      events = w.singular->size();
      crossings = w.singular->crossing_count();
      dps = w.singular->double_point_count();
    }
    j["events"] = events;
    j["crossings"] = crossings;
    if (w.singular) j["doublePoints"] = dps;
    emit(out, j);
    return 0;
  } catch (const legknot::Error& e) {
    Json j = header();
    j["valid"] = false;
    j["error"] = e.what();
    emit(out, j);
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_invariants(const WordSource& src, const std::string& batch, std::ostream& out,
                   std::ostream& err) {
  if (batch.empty()) {
    emit(out, word_report(load(src)));
    return 0;
  }
  if (!src.front.empty() || !src.diagram.empty() || !src.singular.empty() || !src.file.empty())
    throw CLI::ValidationError("--batch cannot be combined with a single word");
  Json j = header();
  j["results"] = Json::array();
  int status = 0;
  for (const auto& line : content_lines(batch)) {
    try {
      j["results"].push_back(word_report(parse_as(kind_for(batch, line), line)));
    } catch (const legknot::Error& e) {
      Json bad;
      bad["word"] = line;
      bad["error"] = e.what();
      j["results"].push_back(bad);
      err << "error: " << line << ": " << e.what() << '\n';
      status = 1;
    }
  }
  emit(out, j);
  return status;
}

int cmd_stabilize(const WordSource& src, int i, int j, std::ostream& out) {
  const AnyWord w = load(src);
  AnyWord result;
  if (w.diagram) {
    result.kind = WordKind::Diagram;
    result.diagram = stabilize(*w.diagram, {i, j});
  } else if (w.singular) {
    result.kind = WordKind::Singular;
    result.singular = stabilize(*w.singular, {i, j});
  } else {
    throw Error("stabilize takes a diagram word; convert fronts with front2diag");
  }
  const auto before = report(w);
  const auto after = report(result);
  Json o = header();
  o["kind"] = kind_name(result.kind);
  o["input"] = w.text();
  o["stabilization"] = {{"i", i}, {"j", j}};
  o["word"] = result.text();
  o["invariants"] = invariants_json(after);
  Json delta;
  if (result.diagram) delta["writhe"] = value_of(after, "writhe") - value_of(before, "writhe");
  delta["rotation"] = value_of(after, "rotation") - value_of(before, "rotation");
  o["delta"] = delta;
  emit(out, o);
  return 0;
}

int cmd_cusp(const WordSource& src, int type, std::size_t index, int slot, std::ostream& out) {
  const AnyWord w = load(src);
  if (!w.front) throw Error("cusp takes a front word");
  AnyWord result;
  result.kind = WordKind::Front;
  result.front = insert_cusp_pair(*w.front, type, {index, slot});
  const auto before = report(w);
  const auto after = report(result);
  Json o = header();
  o["kind"] = "front";
  o["input"] = w.text();
  o["type"] = type;
  o["location"] = {{"index", index}, {"slot", slot}};
  o["word"] = result.text();
  o["invariants"] = invariants_json(after);
  o["delta"] = {{"tb", value_of(after, "tb") - value_of(before, "tb")},
                {"maslov", value_of(after, "maslov") - value_of(before, "maslov")}};
  emit(out, o);
  return 0;
}

int cmd_front2diag(const WordSource& src, std::ostream& out) {
  const AnyWord w = load(src);
  if (!w.front) throw Error("front2diag takes a front word");
  AnyWord d;
  d.kind = WordKind::Diagram;
  d.diagram = front_to_diagram(*w.front);
  Json o = header();
  o["kind"] = "diagram";
  o["front"] = w.text();
  o["word"] = d.text();
  o["invariants"] = invariants_json(report(d));
  emit(out, o);
  return 0;
}

std::vector<int> parse_choices(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "+1" || item == "1" || item == "+")
      out.push_back(1);
    else if (item == "-1" || item == "-")
      out.push_back(-1);
    else
      throw CLI::ValidationError("--choices", "expected a comma list of +1/-1, got '" + item + "'");
  }
  return out;
}

Json resolution_json(const SingularDiagramWord& sd, const Resolution& r) {
  Json o;
  o["choices"] = r.choices;
  o["sign"] = r.sign();
  o["word"] = to_string(resolve(sd, r));
  return o;
}

int cmd_resolve(const WordSource& src, const std::string& choices, std::ostream& out) {
  const AnyWord w = load(src);
  if (!w.singular) throw Error("resolve takes a singular diagram word");
  Json o = header();
  o["kind"] = "singular";
  o["input"] = w.text();
  if (!choices.empty()) {
    const Json r = resolution_json(*w.singular, Resolution{parse_choices(choices)});
    for (const auto& [k, v] : r.items()) o[k] = v;
  } else {
    o["resolutions"] = Json::array();
    for (const auto& r :
         all_resolutions(static_cast<std::size_t>(w.singular->double_point_count())))
      o["resolutions"].push_back(resolution_json(*w.singular, r));
  }
  emit(out, o);
  return 0;
}

std::vector<SingularDiagramWord> read_corpus(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<SingularDiagramWord> out;
  for (const auto& f : files)
    for (const auto& line : content_lines(f.string())) out.push_back(parse_singular(line));
  return out;
}

int cmd_order_check(const std::string& name, int order, const std::string& corpus_dir,
                    int exhaustive, std::ostream& out) {
  const InvariantFunction f = invariant_function(name);
  std::vector<SingularDiagramWord> corpus;
  if (!corpus_dir.empty()) corpus = read_corpus(corpus_dir);
  if (exhaustive > 0) {
    const auto more = enumerate_singular({exhaustive, 2, order + 1});
    corpus.insert(corpus.end(), more.begin(), more.end());
  }
  if (corpus_dir.empty() && exhaustive <= 0)
    throw CLI::ValidationError("give --corpus or --exhaustive");
  const OrderCheck r = order_at_most(f, order, corpus);
  Json o = header();
  o["invariant"] = name;
  o["order"] = order;
  o["corpusSize"] = corpus.size();
  o["holds"] = r.holds;
  if (r.witness) {
    o["witness"] = to_string(*r.witness);
    o["witnessSum"] = r.witness_sum;
  }
  emit(out, o);
  return 0;
}

int cmd_psi_extend(const std::string& chain_arg, int order, int steps, std::ostream& out) {
  std::string text = chain_arg;
  if (text.find('{') == std::string::npos) {
    std::ifstream in(chain_arg);
    if (!in) throw Error("cannot read '" + chain_arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(std::string("bad chain JSON: ") + e.what());
  }
  if (!parsed.is_object()) throw Error("chain must be a JSON object {\"q\": value}");
  StabChain chain;
  for (const auto& [k, v] : parsed.items()) {
    std::size_t used = 0;
    int q = 0;
    try {
      q = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || !v.is_number_integer())
      throw Error("chain entries must map integer q to integer values");
    chain.values[q] = v.get<long long>();
  }
  if (chain.values.empty()) throw Error("chain is empty");
  for (int s = 0; s < steps; ++s) {
    const int q = chain.values.rbegin()->first;
    chain.values[q + 1] = psi_extend(chain, order, q);
  }
  Json o = header();
  o["order"] = order;
  Json values = Json::object();
  for (const auto& [q, v] : chain.values) values[std::to_string(q)] = v;
  o["chain"] = values;
  emit(out, o);
  return 0;
}

DiagramWord search_endpoint(const std::string& literal, const std::string& file) {
  WordSource src;
  src.diagram = literal;
  src.file = file;
  return as_diagram(load(src), "search");
}

int cmd_search(const std::string& from, const std::string& to, const std::string& from_file,
               const std::string& to_file, const SearchBudget& budget, std::ostream& out) {
  const DiagramWord a = search_endpoint(from, from_file);
  const DiagramWord b = search_endpoint(to, to_file);
  const SearchResult r = search_equivalent(a, b, budget);
  Json o = header();
  o["from"] = to_string(a);
  o["to"] = to_string(b);
  o["outcome"] = to_string(r.outcome);
  if (!r.reason.empty()) o["reason"] = r.reason;
  o["statesVisited"] = r.states_visited;
  if (r.trace) {
    Json moves = Json::array();
    for (const auto& m : r.trace->moves) moves.push_back(to_string(m));
    o["trace"] = moves;
  }
  emit(out, o);
  return 0;
}

int cmd_render(const WordSource& src, std::ostream& out) {
  const AnyWord w = load(src);
  if (w.front) out << render_svg(*w.front);
  if (w.diagram) out << render_svg(*w.diagram);
  if (w.singular) out << render_svg(*w.singular);
  return 0;
}

int cmd_apply(const WordSource& src, const std::vector<std::string>& moves, std::ostream& out) {
  AnyWord w = load(src);
  const std::string input = w.text();
  for (const auto& line : moves) {
    const Move m = parse_move(line);
    if (w.front)
      w.front = apply_move(*w.front, m);
    else if (w.diagram)
      w.diagram = apply_move(*w.diagram, m);
    else
      throw Error("apply takes a front or diagram word");
  }
  Json o = header();
  o["kind"] = kind_name(w.kind);
  o["input"] = input;
  o["moves"] = moves;
  o["word"] = w.text();
  emit(out, o);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian and pseudo-Legendrian knot calculus", "legknot"};
  app.require_subcommand(1);

  WordSource src;
  std::string batch, choices, chain, corpus, invariant = "writhe";
  std::string from, to, from_file, to_file;
  std::vector<std::string> moves;
  int si = 0, sj = 0, type = 1, order = 0, steps = 1, exhaustive = 0, slot = 1;
  std::size_t index = 1;
  bool svg = true;
  SearchBudget budget;

  auto* validate = app.add_subcommand("validate", "Parse and validate a word");
  add_word_options(validate, src);

  auto* invariants = app.add_subcommand("invariants", "Report all applicable invariants");
  add_word_options(invariants, src);
  invariants->add_option("--batch", batch, "File with one word per line")
      ->check(CLI::ExistingFile);

  auto* stab = app.add_subcommand("stabilize", "Apply an (i, j)-stabilization");
  add_word_options(stab, src);
  stab->add_option("--i", si, "Number of (1,1) kinks (negative: (-1,-1))");
  stab->add_option("--j", sj, "Number of (-1,1) kinks (negative: (1,-1))");

  auto* cusp = app.add_subcommand("cusp", "Insert a pair of cusps into a front");
  add_word_options(cusp, src);
  cusp->add_option("--type", type, "1 or 2")->check(CLI::IsMember({1, 2}));
  cusp->add_option("--index", index, "Event index of the arc");
  cusp->add_option("--slot", slot, "Strand slot of the arc");

  auto* f2d = app.add_subcommand("front2diag", "Convert a front to a diagram word");
  add_word_options(f2d, src);

  auto* res = app.add_subcommand("resolve", "Resolve the double points of a singular word");
  add_word_options(res, src);
  res->add_option("--choices", choices, "Comma list of +1/-1, one per double point");

  auto* oc = app.add_subcommand("order-check", "Test the order <= n vanishing condition");
  oc->add_option("--invariant", invariant, "writhe, rotation, v2 or v3")
      ->check(CLI::IsMember(invariant_function_names()));
  oc->add_option("--order", order, "n")->required()->check(CLI::NonNegativeNumber);
  oc->add_option("--corpus", corpus, "Directory of singular word files")
      ->check(CLI::ExistingDirectory);
  oc->add_option("--exhaustive", exhaustive,
                 "Also test every word with at most this many crossings")
      ->check(CLI::Range(1, 8));

  auto* psi = app.add_subcommand("psi-extend", "Extend a stabilization chain");
  psi->add_option("--chain", chain, "JSON object {\"q\": value} or a file holding one")
      ->required();
  psi->add_option("--order", order, "n")->required()->check(CLI::NonNegativeNumber);
  psi->add_option("--steps", steps, "How many values to add")->check(CLI::Range(1, 64));

  auto* search = app.add_subcommand("search", "Look for an isotopy certificate");
  search->add_option("--from", from, "Start diagram word");
  search->add_option("--to", to, "Target diagram word");
  search->add_option("from_file", from_file, "Start word file")->check(CLI::ExistingFile);
  search->add_option("to_file", to_file, "Target word file")->check(CLI::ExistingFile);
  search->add_option("--max-crossings", budget.max_crossings)->check(CLI::PositiveNumber);
  search->add_option("--max-depth", budget.max_depth)->check(CLI::NonNegativeNumber);
  search->add_option("--max-states", budget.max_states)->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Draw a word as SVG");
  add_word_options(render, src);
  render->add_flag("--svg", svg, "SVG output (the only format)");

  auto* apply = app.add_subcommand("apply", "Apply moves given as trace lines");
  add_word_options(apply, src);
  apply->add_option("--move", moves, "\"<kind> <index> <slot>\"; repeatable")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(src, out, err);
    if (invariants->parsed()) return cmd_invariants(src, batch, out, err);
    if (stab->parsed()) return cmd_stabilize(src, si, sj, out);
    if (cusp->parsed()) return cmd_cusp(src, type, index, slot, out);
    if (f2d->parsed()) return cmd_front2diag(src, out);
    if (res->parsed()) return cmd_resolve(src, choices, out);
    if (oc->parsed()) return cmd_order_check(invariant, order, corpus, exhaustive, out);
    if (psi->parsed()) return cmd_psi_extend(chain, order, steps, out);
    if (search->parsed()) return cmd_search(from, to, from_file, to_file, budget, out);
    if (render->parsed()) return cmd_render(src, out);
    if (apply->parsed()) return cmd_apply(src, moves, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const legknot::Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace legknot::cli
