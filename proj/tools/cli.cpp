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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "binmat/catalog.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/io.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/minor.hpp"
#include "binmat/parallel.hpp"
#include "binmat/split_ops.hpp"
#include "binmat/verify.hpp"
#include "json.hpp"

namespace binmat::cli {
namespace {

using nlohmann::json;

// Thrown for bad flags or values caught after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string braces(const std::vector<std::string>& v) {
  return "{" + join(v) + "}";
}

struct Input {
  std::string path;
  std::string text;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Input read(const std::string& path) {
    if (path == "-") {
      std::ostringstream os;
      os << in_.rdbuf();
      return {"-", os.str()};
    }
    return {path, read_text_file(path)};
  }

  BinaryMatroid load(const std::string& path) {
    Input in = read(path);
    try {
      BinaryMatroid m = parse_matroid_or_graph(in.text);
      record_["inputs"].push_back(
          {{"path", in.path}, {"digest", digest_hex(in.text)}});
      return m;
    } catch (const ParseError& e) {
      throw ParseError(e.line(), in.path + ": " + strip_line_prefix(e.what()));
    }
  }

  void start(const std::string& op) {
    record_ = json::object();
    record_["operation"] = op;
    record_["inputs"] = json::array();
  }

  json& record() { return record_; }

  // Text goes to stdout unless --json, in which case the record does.
  std::ostream& text() { return json_ ? sink_ : out_; }

  void emit_matroid(const BinaryMatroid& m) {
    const std::string body = format_matroid(m);
    record_["output"] = body;
    if (!output_path_.empty()) {
      write_text_file(output_path_, body);
    } else if (!json_) {
      out_ << body;
    }
  }

  void finish() {
    if (json_) out_ << record_.dump(2) << "\n";
  }

  bool json_ = false;
  std::string output_path_;

 private:
  static std::string strip_line_prefix(const std::string& what) {
    const auto colon = what.find(": ");
    return colon == std::string::npos ? what : what.substr(colon + 2);
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostringstream sink_;
  json record_;
};

std::string fresh(const BinaryMatroid& m, const std::string& base) {
  std::string l = base;
  for (int i = 1; m.find(l); ++i) l = base + std::to_string(i);
  return l;
}

json witness_json(const MinorWitness& w) {
  json map = json::object();
  for (const auto& [p, h] : w.mapping) map[p] = h;
  return {{"deleted", w.deleted}, {"contracted", w.contracted}, {"mapping", map}};
}

void print_witness(std::ostream& os, const MinorWitness& w) {
  os << "deleted:    " << braces(w.deleted) << "\n"
     << "contracted: " << braces(w.contracted) << "\n"
     << "mapping:   ";
  for (const auto& [p, h] : w.mapping) os << " " << p << "->" << h;
  os << "\n";
}

std::vector<std::vector<std::string>> label_sets(const BinaryMatroid& m,
                                                 const std::vector<ElementSet>& s) {
  std::vector<std::vector<std::string>> out;
  for (auto e : s) out.push_back(m.labels_of(e));
  return out;
}

std::string sets_string(const std::vector<std::vector<std::string>>& sets) {
  std::vector<std::string> parts;
  for (const auto& s : sets) parts.push_back(braces(s));
  return join(parts, " ");
}

BinaryMatroid resolve_pattern(Session& s, const std::string& name) {
  const auto names = catalog_names();
  if (name == "K_4" ||
      std::find(names.begin(), names.end(), name) != names.end()) {
    return catalog_get(name).matroid;
  }
  if (!std::filesystem::exists(name)) {
    throw UsageError("pattern '" + name + "' is neither a catalog name nor a file");
  }
  return s.load(name);
}

// ---- commands ----

int cmd_info(Session& s, const std::string& file) {
  s.start("info");
  const BinaryMatroid m = s.load(file);
  const auto circ = label_sets(m, circuits(m));
  const auto cocirc = label_sets(m, cocircuits(m));
  const auto par = label_sets(m, parallel_classes(m));
  auto& r = s.record();
  r["rank"] = m.rank();
  r["elements"] = m.labels();
  r["loops"] = m.labels_of(loops(m));
  r["coloops"] = m.labels_of(coloops(m));
  r["parallel_classes"] = par;
  r["circuits"] = circ;
  r["cocircuits"] = cocirc;
  r["output"] = format_matroid(m);
  std::ostream& os = s.text();
  os << "rank:             " << m.rank() << "\n"
     << "elements:         " << m.size() << " " << braces(m.labels()) << "\n"
     << "loops:            " << braces(m.labels_of(loops(m))) << "\n"
     << "coloops:          " << braces(m.labels_of(coloops(m))) << "\n"
     << "parallel classes: " << sets_string(par) << "\n"
     << "circuits:         " << sets_string(circ) << "\n"
     << "cocircuits:       " << sets_string(cocirc) << "\n";
  s.finish();
  return kExitOk;
}

int cmd_split(Session& s, const std::string& file, const std::string& t) {
  s.start("split");
  const BinaryMatroid m = s.load(file);
  s.record()["T"] = split_list(t);
  s.emit_matroid(splitting(m, split_list(t)));
  s.finish();
  return kExitOk;
}

int cmd_esplit(Session& s, const std::string& file, const std::string& t,
               const std::string& a) {
  s.start("esplit");
  const BinaryMatroid m = s.load(file);
  s.record()["T"] = split_list(t);
  s.record()["new"] = a;
  s.emit_matroid(element_splitting(m, split_list(t), a));
  s.finish();
  return kExitOk;
}

int cmd_threefold(Session& s, const std::string& file, const std::string& x,
                  const std::string& y, const std::string& labels) {
  s.start("threefold");
  const BinaryMatroid m = s.load(file);
  ThreeFoldParams p{x, y};
  if (labels.empty()) {
    p.p = fresh(m, "p");
    p.q = fresh(m, "q");
    p.r = fresh(m, "r");
  } else {
    const auto l = split_list(labels);
    if (l.size() != 3) throw UsageError("--labels needs three labels p,q,r");
    p.p = l[0];
    p.q = l[1];
    p.r = l[2];
  }
  s.record()["x"] = x;
  s.record()["y"] = y;
  s.record()["labels"] = {p.p, p.q, p.r};
  s.emit_matroid(three_fold(m, p));
  s.finish();
  return kExitOk;
}

int cmd_minor_op(Session& s, const std::string& op, const std::string& file,
                 const std::string& set) {
  s.start(op);
  const BinaryMatroid m = s.load(file);
  const ElementSet e = m.element_set(split_list(set));
  s.record()["S"] = split_list(set);
  s.emit_matroid(op == "delete" ? deletion(m, e) : contraction(m, e));
  s.finish();
  return kExitOk;
}

int cmd_minor(Session& s, const std::string& file, const std::string& pattern,
              const std::vector<std::string>& pins) {
  s.start("minor");
  const BinaryMatroid host = s.load(file);
  const BinaryMatroid pat = resolve_pattern(s, pattern);
  std::vector<LabelPin> lp;
  for (const auto& p : pins) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == p.size()) {
      throw UsageError("bad pin '" + p + "', expected pattern=host");
    }
    lp.push_back({p.substr(0, eq), p.substr(eq + 1)});
  }
  const auto w = find_minor(host, pat, lp);
  auto& r = s.record();
  r["pattern"] = pattern;
  r["pins"] = pins;
  r["found"] = w.has_value();
  std::ostream& os = s.text();
  if (w) {
    r["witness"] = witness_json(*w);
    os << "minor: present\n";
    print_witness(os, *w);
  } else {
    r["witness"] = nullptr;
    os << "minor: absent\n";
  }
  s.finish();
  return kExitOk;
}

int cmd_gammoid(Session& s, const std::string& file) {
  s.start("gammoid");
  const BinaryMatroid m = s.load(file);
  const auto w = gammoid_obstruction(m);
  auto& r = s.record();
  r["gammoid"] = !w.has_value();
  std::ostream& os = s.text();
  os << "binary gammoid: " << (w ? "false" : "true") << "\n";
  if (w) {
    r["witness"] = witness_json(*w);
    os << "M(K4) minor:\n";
    print_witness(os, *w);
  }
  s.finish();
  return kExitOk;
}

int cmd_iso(Session& s, const std::string& a_file, const std::string& b_file) {
  s.start("iso");
  const BinaryMatroid a = s.load(a_file);
  const BinaryMatroid b = s.load(b_file);
  const auto phi = find_isomorphism(a, b);
  auto& r = s.record();
  r["isomorphic"] = phi.has_value();
  std::ostream& os = s.text();
  os << "isomorphic: " << (phi ? "true" : "false") << "\n";
  if (phi) {
    json map = json::object();
    os << "bijection: ";
    for (std::size_t i = 0; i < a.size(); ++i) {
      map[a.label(i)] = b.label((*phi)[i]);
      os << " " << a.label(i) << "->" << b.label((*phi)[i]);
    }
    os << "\n";
    r["bijection"] = map;
  }
  s.finish();
  return kExitOk;
}

int cmd_catalog(Session& s, const std::string& action, const std::string& name,
                const std::string& file, const std::string& format) {
  s.start("catalog");
  std::ostream& os = s.text();
  auto& r = s.record();
  if (action == "list") {
    r["names"] = catalog_names();
    for (const auto& n : catalog_names()) os << n << "\n";
    s.finish();
    return kExitOk;
  }
  if (name.empty()) throw UsageError("catalog " + action + " needs a NAME");
  const CatalogEntry& e = catalog_get(name);
  r["name"] = e.name;
  r["marked"] = e.marked;
  r["graph"] = format_graph(e.graph);
  r["output"] = format_matroid(e.matroid);
  if (action == "show") {
    os << "name:   " << e.name << "\n"
       << "marked: (" << join(e.marked) << ")\n"
       << "rank:   " << e.matroid.rank() << "\n"
       << "graph:\n" << format_graph(e.graph)
       << "matroid:\n" << format_matroid(e.matroid);
  } else if (action == "export") {
    std::string body;
    if (format == "matroid") {
      body = format_matroid(e.matroid);
    } else if (format == "graph") {
      body = format_graph(e.graph);
    } else if (format == "dot") {
      body = graph_to_dot(e.graph, e.name);
    } else {
      throw UsageError("unknown export format '" + format + "'");
    }
    if (file.empty() || file == "-") {
      os << body;
    } else {
      write_text_file(file, body);
      os << "wrote " << file << "\n";
    }
  } else {
    throw UsageError("unknown catalog action '" + action + "'");
  }
  s.finish();
  return kExitOk;
}

struct VerifyArgs {
  std::string check = "all";
  int max_elements = -1;
  std::size_t max_rank = 4;
  std::string corpus_path;
  std::string write_corpus_path;
  std::size_t jobs = 0;
  std::string report_dir;
};

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "catalog", "quotients", "gf-empty", "thm43",   "thm15",
      "main",    "esplit",    "ghafari",  "structure"};
  return names;
}

std::size_t default_bound(const std::string& check) {
  static const std::map<std::string, std::size_t> bounds{
      {"gf-empty", 7}, {"thm43", 7}, {"thm15", 8},   {"main", 6},
      {"esplit", 6},   {"ghafari", 6}, {"structure", 7}};
  auto it = bounds.find(check);
  return it == bounds.end() ? 0 : it->second;
}

int cmd_verify(Session& s, const VerifyArgs& a) {
  s.start("verify");
  if (a.check == "list") {
    s.record()["checks"] = check_names();
    for (const auto& c : check_names()) {
      s.text() << c;
      if (const auto b = default_bound(c)) s.text() << "  (default --max-elements " << b << ")";
      s.text() << '\n';
    }
    s.finish();
    return kExitOk;
  }
  std::vector<std::string> checks;
  if (a.check == "all") {
    checks = check_names();
  } else {
    for (const auto& c : split_list(a.check)) {
      const auto& n = check_names();
      if (std::find(n.begin(), n.end(), c) == n.end()) {
        throw UsageError("unknown check '" + c + "' (known: " + join(n) +
                         ", all, list)");
      }
      checks.push_back(c);
    }
  }
  if (a.max_elements > static_cast<int>(kMaxCorpusElements)) {
    throw UsageError("--max-elements must be <= 9");
  }
  if (a.max_rank > kMaxCanonicalRank) throw UsageError("--max-rank must be <= 4");
  const std::size_t jobs = a.jobs ? a.jobs : default_jobs();

  std::size_t need = 0;
  for (const auto& c : checks) {
    need = std::max(need, a.max_elements >= 0
                              ? static_cast<std::size_t>(a.max_elements)
                              : default_bound(c));
  }
  Corpus corpus;
  if (!a.corpus_path.empty()) {
    std::istringstream in(s.read(a.corpus_path).text);
    corpus = read_corpus(in);
    s.record()["inputs"].push_back({{"path", a.corpus_path}});
  } else if (need > 0) {
    EnumerateOptions opts;
    opts.jobs = jobs;
    corpus = enumerate_binary_matroids(need, a.max_rank, opts);
  }
  if (!a.write_corpus_path.empty()) {
    std::ofstream f(a.write_corpus_path);
    if (!f) throw std::runtime_error("cannot write '" + a.write_corpus_path + "'");
    write_corpus(f, corpus);
  }
  auto bounded = [&](const std::string& c) {
    const std::size_t n = a.max_elements >= 0
                              ? static_cast<std::size_t>(a.max_elements)
                              : default_bound(c);
    return restrict_corpus(corpus, n);
  };

  std::vector<VerificationReport> reports;
  for (const auto& c : checks) {
    if (c == "catalog") {
      reports.push_back(validate_catalog());
    } else if (c == "quotients") {
      reports.push_back(enumerate_quotients_of_F());
    } else if (c == "gf-empty") {
      const Corpus g = bounded(c);
      reports.push_back(check_gf_k_empty(g, 1, jobs));
      reports.push_back(check_gf_k_empty(g, 2, jobs));
    } else if (c == "thm43") {
      reports.push_back(check_theorem_4_3(bounded(c), 3, jobs));
    } else if (c == "thm15") {
      reports.push_back(check_theorem_1_5(bounded(c), jobs));
    } else if (c == "main") {
      reports.push_back(check_main_theorem(bounded(c), jobs));
    } else if (c == "esplit") {
      reports.push_back(check_element_splitting_identities(bounded(c), jobs));
    } else if (c == "ghafari") {
      reports.push_back(check_ghafari_agreement(bounded(c), jobs));
    } else if (c == "structure") {
      std::vector<BinaryMatroid> ms;
      for (const auto& n : catalog_names()) ms.push_back(catalog_get(n).matroid);
      for (const auto& m : bounded(c).members) ms.push_back(m.matroid);
      reports.push_back(check_structural_properties(ms, jobs));
    }
  }

  if (!a.report_dir.empty()) std::filesystem::create_directories(a.report_dir);
  bool failed = false;
  std::ostream& os = s.text();
  s.record()["reports"] = json::array();
  for (const auto& r : reports) {
    failed |= !r.passed();
    s.record()["reports"].push_back(report_to_json(r));
    os << "[" << verdict_name(r.verdict()) << "] " << r.check << "  cases="
       << r.cases << " failures=" << r.failures.size() << "\n";
    if (!a.report_dir.empty()) {
      const auto base = std::filesystem::path(a.report_dir) / r.check;
      write_text_file(base.string() + ".txt", format_report(r));
      write_text_file(base.string() + ".json", report_to_json(r).dump(2) + "\n");
    }
  }
  s.record()["verdict"] = failed ? "fail" : "pass";
  s.finish();
  return failed ? kExitCheckFailed : kExitOk;
}

// Replays every failure in a JSON report; exit 0 iff all reproduce.
int cmd_replay(Session& s, const std::string& report_file) {
  s.start("replay");
  const json j = json::parse(s.read(report_file).text);
  const std::string check = j.at("check").get<std::string>();
  std::size_t reproduced = 0, total = 0;
  for (const auto& f : j.at("failures")) {
    FailureRecord rec{f.at("input"), f.at("params"), f.at("expected"),
                      f.at("got")};
    ++total;
    reproduced += replay_failure(check, rec);
  }
  s.record()["check"] = check;
  s.record()["failures"] = total;
  s.record()["reproduced"] = reproduced;
  s.text() << "replayed " << total << " failures of " << check << ", "
           << reproduced << " reproduced\n";
  s.finish();
  return reproduced == total ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary matroid splitting toolkit", "binmat"};
  app.require_subcommand(1);
  app.fallthrough();
  Session session(in, out);
  app.add_flag("--json", session.json_, "Print a JSON result record");
  app.add_option("-o,--output", session.output_path_,
                 "Write the output matroid to this file");

  std::function<int()> action;
  std::string file, file_b, t, new_label = "a", x, y, labels, pattern, set;
  std::vector<std::string> pins;

  auto* info = app.add_subcommand("info", "Rank, loops, circuits and more");
  info->add_option("file", file, "Matroid or graph file, - for stdin")->required();
  info->callback([&] { action = [&] { return cmd_info(session, file); }; });

  auto* split = app.add_subcommand("split", "Splitting on a set T");
  split->add_option("file", file)->required();
  split->add_option("--t", t, "Comma-separated labels")->required();
  split->callback([&] { action = [&] { return cmd_split(session, file, t); }; });

  auto* esplit = app.add_subcommand("esplit", "Element splitting on T");
  esplit->add_option("file", file)->required();
  esplit->add_option("--t", t)->required();
  esplit->add_option("--new", new_label, "Label of the added element");
  esplit->callback(
      [&] { action = [&] { return cmd_esplit(session, file, t, new_label); }; });

  auto* tf = app.add_subcommand("threefold", "3-fold on {x,y}");
  tf->add_option("file", file)->required();
  tf->add_option("--x", x)->required();
  tf->add_option("--y", y)->required();
  tf->add_option("--labels", labels, "New labels p,q,r");
  tf->callback(
      [&] { action = [&] { return cmd_threefold(session, file, x, y, labels); }; });

  for (const char* op : {"delete", "contract"}) {
    auto* sub = app.add_subcommand(op, std::string(op) + " a set");
    sub->add_option("file", file)->required();
    sub->add_option("--s", set, "Comma-separated labels")->required();
    sub->callback([&, op] {
      action = [&, op] { return cmd_minor_op(session, op, file, set); };
    });
  }

  auto* minor = app.add_subcommand("minor", "Search for a minor");
  minor->add_option("file", file)->required();
  minor->add_option("--pattern", pattern, "Catalog name or file")->required();
  minor->add_option("--pin", pins, "pattern=host label pin");
  minor->callback(
      [&] { action = [&] { return cmd_minor(session, file, pattern, pins); }; });

  auto* gam = app.add_subcommand("gammoid", "Binary gammoid test");
  gam->add_option("file", file)->required();
  gam->callback([&] { action = [&] { return cmd_gammoid(session, file); }; });

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", file)->required();
  iso->add_option("b", file_b)->required();
  iso->callback([&] { action = [&] { return cmd_iso(session, file, file_b); }; });

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run theorem checks");
  ver->add_option("--check", va.check, "Check name, comma list or all");
  ver->add_option("--max-elements", va.max_elements, "Corpus element bound");
  ver->add_option("--max-rank", va.max_rank, "Corpus rank bound");
  ver->add_option("--corpus", va.corpus_path, "Read the corpus from a file");
  ver->add_option("--write-corpus", va.write_corpus_path,
                  "Save the corpus used");
  ver->add_option("--jobs", va.jobs, "Worker threads (default BINMAT_JOBS)");
  ver->add_option("--report-dir", va.report_dir, "Write per-check reports");
  ver->callback([&] { action = [&] { return cmd_verify(session, va); }; });

  std::string report_file;
  auto* rep = app.add_subcommand("replay", "Replay the failures of a report");
  rep->add_option("report", report_file, "JSON report")->required();
  rep->callback([&] { action = [&] { return cmd_replay(session, report_file); }; });

  std::string cat_action, cat_name, cat_file, cat_format = "matroid";
  auto* cat = app.add_subcommand("catalog", "Named graphs and matroids");
  cat->add_option("action", cat_action, "list, show or export")
      ->required()
      ->check(CLI::IsMember({"list", "show", "export"}));
  cat->add_option("name", cat_name);
  cat->add_option("target", cat_file, "Export file, - for stdout");
  cat->add_option("--format", cat_format, "matroid, graph or dot");
  cat->callback([&] {
    action = [&] {
      return cmd_catalog(session, cat_action, cat_name, cat_file, cat_format);
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace binmat::cli
