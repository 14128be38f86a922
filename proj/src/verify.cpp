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

#include "binmat/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "binmat/catalog.hpp"
#include "binmat/io.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/parallel.hpp"
#include "binmat/split_ops.hpp"

namespace binmat {
namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<std::string>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::vector<std::string> split_list(std::string_view s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::string set_string(const BinaryMatroid& m, ElementSet s) {
  return "{" + join(m.labels_of(s)) + "}";
}

std::string witness_string(const MinorWitness& w) {
  return "delete {" + join(w.deleted) + "} contract {" + join(w.contracted) +
         "}";
}

std::string ratio(std::size_t a, std::size_t b) {
  return std::to_string(a) + "/" + std::to_string(b);
}

// "k=1 Y=a,b" -> {k: 1, Y: a,b}
std::map<std::string, std::string> parse_params(std::string_view params) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(params)};
  for (std::string tok; in >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

const std::string& param(const std::map<std::string, std::string>& p,
                         const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw VerifyError("failure params lack '" + key + "'");
  return it->second;
}

// Per-member partial result, reduced in corpus order.
struct Partial {
  std::size_t cases = 0;
  std::vector<FailureRecord> failures;
  std::vector<std::size_t> counters;
};

template <typename Fn>
std::vector<Partial> over_members(const std::vector<const CorpusMember*>& ms,
                                  std::size_t jobs, Fn&& fn) {
  return parallel_map<Partial>(ms.size(), jobs,
                               [&](std::size_t i) { return fn(*ms[i]); });
}

std::vector<const CorpusMember*> select(const Corpus& c, bool gammoids_only) {
  std::vector<const CorpusMember*> out;
  for (const auto& m : c.members) {
    if (!gammoids_only || m.is_gammoid) out.push_back(&m);
  }
  return out;
}

std::string universe(const Corpus& c, std::string_view reading) {
  std::ostringstream os;
  os << "corpus max_elements=" << c.max_elements << " max_rank=" << c.max_rank
     << " loop_cap=" << c.loop_cap << "; " << reading;
  return os.str();
}

void reduce(VerificationReport& r, const std::vector<Partial>& parts,
            std::vector<std::size_t>& counters) {
  for (const auto& p : parts) {
    r.cases += p.cases;
    r.failures.insert(r.failures.end(), p.failures.begin(), p.failures.end());
    if (counters.size() < p.counters.size()) counters.resize(p.counters.size());
    for (std::size_t i = 0; i < p.counters.size(); ++i) {
      counters[i] += p.counters[i];
    }
  }
}

const MinorSearcher& f_searcher() {
  static const MinorSearcher s(catalog_get("F").matroid);
  return s;
}

std::vector<MinorSearcher> make_searchers(
    std::initializer_list<const char*> names) {
  std::vector<MinorSearcher> out;
  for (const char* n : names) out.emplace_back(catalog_get(n).matroid);
  return out;
}

const std::vector<MinorSearcher>& gi_searchers() {
  static const auto s = make_searchers({"G_1", "G_2", "G_3"});
  return s;
}

const std::vector<MinorSearcher>& fi_searchers() {
  static const auto s = make_searchers({"F_1", "F_2", "F_3", "F_4"});
  return s;
}

const MinorSearcher& g4_searcher() {
  static const MinorSearcher s(catalog_get("G_4").matroid);
  return s;
}

bool has_any_minor(const BinaryMatroid& m,
                   const std::vector<MinorSearcher>& patterns) {
  return std::any_of(patterns.begin(), patterns.end(),
                     [&](const MinorSearcher& s) { return s.find(m).has_value(); });
}

std::string fresh_label(const BinaryMatroid& m, std::string base) {
  std::string l = base;
  for (int i = 1; m.find(l); ++i) l = base + std::to_string(i);
  return l;
}

ThreeFoldParams fresh_three_fold(const BinaryMatroid& m, std::string x,
                                 std::string y) {
  ThreeFoldParams p;
  p.x = std::move(x);
  p.y = std::move(y);
  p.p = fresh_label(m, "p");
  p.q = fresh_label(m, "q");
  p.r = fresh_label(m, "r");
  return p;
}

// Case predicates shared by the checks and by replay. Each returns an empty
// string when the case holds and a description of what happened otherwise.

std::string theorem_4_3_case(const BinaryMatroid& s, std::size_t k) {
  const auto w = gf_k_membership(s, k);
  const bool rhs = has_any_minor(s, fi_searchers());
  if (w.has_value() == rhs) return {};
  if (w) {
    return "splitting on {" + join(w->y) +
           "} has an M(F) minor but no M(F_i) minor exists";
  }
  return "has an M(F_i) minor but no " + std::to_string(k) +
         "-element splitting has an M(F) minor";
}

std::string theorem_1_5_case(const BinaryMatroid& m, ElementSet t) {
  const auto obstruction = gammoid_obstruction(splitting(m, t));
  if (!obstruction) return {};
  return "splitting on " + set_string(m, t) + " has an M(K4) minor: " +
         witness_string(*obstruction);
}

std::string main_case(const BinaryMatroid& m, std::size_t x, std::size_t y) {
  const BinaryMatroid out =
      three_fold(m, fresh_three_fold(m, m.label(x), m.label(y)));
  const auto obstruction = gammoid_obstruction(out);
  if (!obstruction) return {};
  return "3-fold on {" + m.label(x) + "," + m.label(y) +
         "} has an M(K4) minor: " + witness_string(*obstruction);
}

std::string esplit_case(const BinaryMatroid& m, ElementSet t) {
  const std::string a = fresh_label(m, "a");
  const BinaryMatroid es = element_splitting(m, t, a);
  const ElementSet sa = es.element_set({a});
  std::string out;
  if (!deletion(es, sa).represented_equal(splitting(m, t))) {
    out += "deleting a differs from splitting; ";
  }
  if (!is_isomorphic(contraction(es, sa), m)) {
    out += "contracting a is not isomorphic to M; ";
  }
  return out;
}

constexpr char kGfAsserted[] = "no k-element splitting has an M(F) minor";

}  // namespace

std::optional<GfkWitness> gf_k_membership(const BinaryMatroid& s,
                                          std::size_t k) {
  if (k < 1 || k > s.size()) {
    throw VerifyError("k must lie in [1, " + std::to_string(s.size()) +
                      "], got " + std::to_string(k));
  }
  for (ElementSet y : subsets_of_size(s.ground(), k)) {
    if (auto w = f_searcher().find(splitting(s, y))) {
      return GfkWitness{s.labels_of(y), std::move(*w)};
    }
  }
  return std::nullopt;
}

bool verify_gfk_witness(const BinaryMatroid& s, const GfkWitness& w) {
  for (const auto& l : w.y) {
    if (!s.find(l)) return false;
  }
  return verify_witness(splitting(s, w.y), catalog_get("F").matroid,
                        w.witness);
}

std::vector<std::string> quotient_property_violations(const BinaryMatroid& q) {
  std::vector<std::string> out;
  if (loops(q).size() > 2) out.push_back("more than two loops");
  for (auto c : cocircuits(q)) {
    if (c.size() == 2) {
      out.push_back("2-element cocircuit " + set_string(q, c));
      break;
    }
  }
  for (auto c : parallel_classes(q)) {
    if (c.size() > 4) out.push_back("parallel class above 4");
  }
  return out;
}

VerificationReport check_gf_k_empty(const Corpus& corpus, std::size_t k,
                                    std::size_t jobs) {
  if (k != 1 && k != 2) throw VerifyError("check_gf_k_empty needs k in {1,2}");
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "gf" + std::to_string(k) + "-empty";
  r.universe = universe(corpus, "every binary gammoid S, every |Y|=" +
                                    std::to_string(k));
  enum { kMembers, kGammoids, kInGf, kGammoidInGf, kFFree, kFFreeInGf };
  const auto parts =
      over_members(select(corpus, false), jobs, [&](const CorpusMember& cm) {
        Partial p;
        p.counters.assign(6, 0);
        const BinaryMatroid& s = cm.matroid;
        p.counters[kMembers] = 1;
        p.counters[kGammoids] = cm.is_gammoid;
        const bool f_free = cm.is_gammoid && !f_searcher().find(s).has_value();
        p.counters[kFFree] = f_free;
        if (k > s.size()) return p;
        const auto w = gf_k_membership(s, k);
        p.counters[kInGf] = w.has_value();
        if (!cm.is_gammoid) return p;
        p.cases = 1;
        if (w) {
          p.counters[kGammoidInGf] = 1;
          p.counters[kFFreeInGf] = f_free;
          p.failures.push_back({format_matroid(s),
                                "k=" + std::to_string(k) + " Y=" + join(w->y),
                                kGfAsserted,
                                "splitting on {" + join(w->y) +
                                    "} has M(F) minor: " +
                                    witness_string(w->witness)});
        }
        return p;
      });
  std::vector<std::size_t> n;
  reduce(r, parts, n);
  r.note("gammoid reading: gammoids in GF_k", ratio(n[kGammoidInGf], n[kGammoids]));
  r.note("all-binary reading: members in GF_k", ratio(n[kInGf], n[kMembers]));
  r.note("gammoids without an M(F) minor in GF_k",
         ratio(n[kFFreeInGf], n[kFFree]));
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_theorem_4_3(const Corpus& corpus, std::size_t k,
                                     std::size_t jobs) {
  if (k < 3) throw VerifyError("check_theorem_4_3 needs k >= 3");
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "thm43";
  r.universe = universe(corpus, "every binary gammoid S with |E(S)| >= " +
                                    std::to_string(k) +
                                    "; GF_k membership vs an M(F_i) minor");
  enum { kBoth, kNeither };
  const auto parts =
      over_members(select(corpus, true), jobs, [&](const CorpusMember& cm) {
        Partial p;
        p.counters.assign(2, 0);
        const BinaryMatroid& s = cm.matroid;
        if (k > s.size()) return p;
        p.cases = 1;
        const std::string got = theorem_4_3_case(s, k);
        if (!got.empty()) {
          p.failures.push_back({format_matroid(s), "k=" + std::to_string(k),
                                "GF_k membership iff an M(F_i) minor", got});
        } else if (gf_k_membership(s, k)) {
          p.counters[kBoth] = 1;
        } else {
          p.counters[kNeither] = 1;
        }
        return p;
      });
  std::vector<std::size_t> n;
  reduce(r, parts, n);
  n.resize(2);
  r.note("both sides true", std::to_string(n[kBoth]));
  r.note("both sides false", std::to_string(n[kNeither]));
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport enumerate_quotients_of_F() {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "quotients";
  r.universe =
      "single-element extensions Q of M(F) inside a rank-3 lift, a in GF(2)^3";
  const BinaryMatroid& f = catalog_get("F").matroid;
  const BinaryMatroid& q1 = catalog_get("Q_1").matroid;
  const BinaryMatroid& q2 = catalog_get("Q_2").matroid;
  const BinaryMatroid& q3 = catalog_get("Q_3").matroid;
  const BinaryMatroid& q4 = catalog_get("Q_4").matroid;
  const std::array<const BinaryMatroid*, 3> targets{&q1, &q2, &q3};
  std::array<bool, 3> reached{};

  Gf2Matrix lifted = rref(f.rep());
  lifted.append_row(0);
  const std::string a = fresh_label(f, "a");
  auto fail = [&](const std::string& params, const std::string& expected,
                  const std::string& got, const BinaryMatroid& q) {
    r.failures.push_back({format_matroid(q), params, expected, got});
  };

  for (BitRow v = 0; v < 8; ++v) {
    Gf2Matrix rep = lifted;
    rep.append_column(v);
    auto labels = f.labels();
    labels.push_back(a);
    const BinaryMatroid q = BinaryMatroid::from_matrix(labels, std::move(rep));
    const ElementSet sa = q.element_set({a});
    const std::string params = "a=" + std::to_string(v & 1U) +
                               std::to_string((v >> 1) & 1U) +
                               std::to_string((v >> 2) & 1U);
    ++r.cases;
    const BinaryMatroid q_del = deletion(q, sa);
    const BinaryMatroid q_con = contraction(q, sa);
    if (!is_isomorphic(q_del, f)) {
      fail(params, "Q\\a = M(F)", "Q\\a differs from M(F)", q);
    }
    const bool is_loop = loops(q).contains(q.size() - 1);
    const bool is_coloop = coloops(q).contains(q.size() - 1);
    std::string name = "none";
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (is_isomorphic(q_con, *targets[i])) {
        reached[i] = true;
        name = "Q_" + std::to_string(i + 1);
        break;
      }
    }
    const std::string kind =
        is_loop ? "loop" : is_coloop ? "coloop" : "proper";
    r.note("Q/a for " + params + " (" + kind + ")", name);
    if (name == "none") {
      fail(params, "Q/a isomorphic to M(Q_1), M(Q_2) or M(Q_3)",
           "no match", q);
    }
    if (is_loop || is_coloop) {
      if (!q_con.represented_equal(q_del)) {
        fail(params, "Q/a = Q\\a = M(F)", "Q/a differs from Q\\a", q);
      }
      continue;
    }
    if (q_con.rank() != 1 || q_con.size() != 5) {
      fail(params, "r(Q/a)=1 and |E(Q/a)|=5",
           "rank " + std::to_string(q_con.rank()) + ", " +
               std::to_string(q_con.size()) + " elements",
           q);
    }
    const auto bad = quotient_property_violations(q_con);
    if (!bad.empty()) fail(params, "quotient properties hold", join(bad, ';'), q);
  }
  for (std::size_t i = 0; i < reached.size(); ++i) {
    ++r.cases;
    if (!reached[i]) {
      r.failures.push_back({format_matroid(*targets[i]),
                            "target=Q_" + std::to_string(i + 1),
                            "reached as a quotient", "never reached"});
    }
  }
  ++r.cases;
  if (!is_isomorphic(q3, q4)) {
    r.failures.push_back({format_matroid(q4), "target=Q_4",
                          "M(Q_4) isomorphic to M(Q_3)", "not isomorphic"});
  }
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_theorem_1_5(const Corpus& corpus, std::size_t jobs) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "thm15";
  r.universe = universe(
      corpus,
      "(a) gammoids with no M(G_i) minor, every |T|=3 splitting is a gammoid; "
      "(b) gammoids with an M(G_i) minor, observational");
  enum { kWithGi, kSomeT, kPinned, kWithoutGi };
  std::vector<std::vector<std::size_t>> marks;
  for (const char* n : {"G_1", "G_2", "G_3"}) {
    const auto& e = catalog_get(n);
    std::vector<std::size_t> idx;
    for (const auto& l : e.marked) idx.push_back(e.matroid.index_of(l));
    marks.push_back(idx);
  }
  const auto parts =
      over_members(select(corpus, true), jobs, [&](const CorpusMember& cm) {
        Partial p;
        p.counters.assign(4, 0);
        const BinaryMatroid& m = cm.matroid;
        const auto triples = subsets_of_size(m.ground(), 3);
        if (!has_any_minor(m, gi_searchers())) {
          p.counters[kWithoutGi] = 1;
          for (ElementSet t : triples) {
            ++p.cases;
            const std::string got = theorem_1_5_case(m, t);
            if (!got.empty()) {
              p.failures.push_back({format_matroid(m),
                                    "T=" + join(m.labels_of(t)),
                                    "splitting is a binary gammoid", got});
            }
          }
          return p;
        }
        p.counters[kWithGi] = 1;
        std::map<BitRow, bool> non_gammoid;
        auto bad = [&](ElementSet t) {
          auto it = non_gammoid.find(t.bits());
          if (it == non_gammoid.end()) {
            it = non_gammoid
                     .emplace(t.bits(), !is_binary_gammoid(splitting(m, t)))
                     .first;
          }
          return it->second;
        };
        p.counters[kSomeT] =
            std::any_of(triples.begin(), triples.end(), bad);
        bool pinned = false;
        for (std::size_t i = 0; i < 3 && !pinned; ++i) {
          gi_searchers()[i].for_each_embedding(
              m, [&](const MinorEmbedding& e) {
                BitRow t = 0;
                for (auto pi : marks[i]) t |= BitRow{1} << e.pattern_to_host[pi];
                pinned = bad(ElementSet(t));
                return !pinned;
              });
        }
        p.counters[kPinned] = pinned;
        return p;
      });
  std::vector<std::size_t> n;
  reduce(r, parts, n);
  n.resize(4);
  r.note("(a) gammoids without an M(G_i) minor", std::to_string(n[kWithoutGi]));
  r.note("(b) unlabeled: some |T|=3 splitting is non-gammoid",
         ratio(n[kSomeT], n[kWithGi]));
  r.note("(b) pinned: splitting on an embedded marked triple is non-gammoid",
         ratio(n[kPinned], n[kWithGi]));
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_main_theorem(const Corpus& corpus, std::size_t jobs) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "main";
  r.universe = universe(
      corpus,
      "(a) gammoids with no M(G_4) minor, every admissible 3-fold is a "
      "gammoid; (b) the M(G_4) instance; (b') observational");

  // (b): the worked instance, bit-exact.
  {
    const BinaryMatroid g4 = BinaryMatroid::from_matrix(
        {"x", "y", "z"}, Gf2Matrix::from_strings(3, {"111"}));
    const auto stages = three_fold_stages(g4, ThreeFoldParams{"x", "y"});
    const Gf2Matrix b = Gf2Matrix::from_strings(6, {"111000"});
    const Gf2Matrix c = Gf2Matrix::from_strings(6, {"111000", "110101"});
    const Gf2Matrix d =
        Gf2Matrix::from_strings(6, {"111000", "110101", "100011"});
    const std::vector<std::string> order{"x", "y", "z", "p", "q", "r"};
    auto check = [&](const char* what, bool ok, const std::string& got) {
      ++r.cases;
      if (!ok) {
        r.failures.push_back({format_matroid(g4), "x=x y=y", what, got});
      }
    };
    check("B = [111000]", stages.with_loops.rep() == b,
          format_matroid(stages.with_loops));
    check("C = B split on {x,y,p,r}", stages.first_split.rep() == c,
          format_matroid(stages.first_split));
    check("D = C split on {x,q,r}",
          stages.result.rep() == d && stages.result.labels() == order,
          format_matroid(stages.result));
    check("M(D) isomorphic to M(K4)",
          is_isomorphic(stages.result, catalog_get("K4").matroid),
          "not isomorphic");
    check("M(D) is not a gammoid", !is_binary_gammoid(stages.result),
          "gammoid");
  }

  enum { kWithoutG4, kPairsA, kWithG4, kWithG4Pairs, kSomePair, kPinned };
  const auto parts =
      over_members(select(corpus, true), jobs, [&](const CorpusMember& cm) {
        Partial p;
        p.counters.assign(6, 0);
        const BinaryMatroid& m = cm.matroid;
        const auto pairs = admissible_pairs(m);
        if (!g4_searcher().find(m)) {
          p.counters[kWithoutG4] = 1;
          p.counters[kPairsA] = pairs.size();
          for (auto [x, y] : pairs) {
            ++p.cases;
            const std::string got = main_case(m, x, y);
            if (!got.empty()) {
              p.failures.push_back(
                  {format_matroid(m), "x=" + m.label(x) + " y=" + m.label(y),
                   "3-fold is a binary gammoid", got});
            }
          }
          return p;
        }
        p.counters[kWithG4] = 1;
        p.counters[kWithG4Pairs] = !pairs.empty();
        std::map<std::pair<std::size_t, std::size_t>, bool> non_gammoid;
        auto bad = [&](std::size_t x, std::size_t y) {
          auto key = std::minmax(x, y);
          auto it = non_gammoid.find(key);
          if (it == non_gammoid.end()) {
            it = non_gammoid.emplace(key, !main_case(m, x, y).empty()).first;
          }
          return it->second;
        };
        p.counters[kSomePair] = std::any_of(
            pairs.begin(), pairs.end(), [&](auto xy) { return bad(xy.first, xy.second); });
        const BinaryMatroid& g4 = catalog_get("G_4").matroid;
        const std::size_t px = g4.index_of("x"), py = g4.index_of("y");
        bool pinned = false;
        g4_searcher().for_each_embedding(m, [&](const MinorEmbedding& e) {
          const std::size_t hx = e.pattern_to_host[px];
          const std::size_t hy = e.pattern_to_host[py];
          if (in_larger_cocircuit(m, ElementSet::single(hx) |
                                         ElementSet::single(hy))) {
            pinned = bad(hx, hy);
          }
          return !pinned;
        });
        p.counters[kPinned] = pinned;
        return p;
      });
  std::vector<std::size_t> n;
  reduce(r, parts, n);
  n.resize(6);
  r.note("(a) gammoids without an M(G_4) minor", std::to_string(n[kWithoutG4]));
  r.note("(a) admissible pairs among them", std::to_string(n[kPairsA]));
  r.note("(b') gammoids with an M(G_4) minor and an admissible pair",
         ratio(n[kWithG4Pairs], n[kWithG4]));
  r.note("(b') unlabeled: some admissible 3-fold is non-gammoid",
         ratio(n[kSomePair], n[kWithG4]));
  r.note("(b') pinned: 3-fold on an embedded (x,y) is non-gammoid",
         ratio(n[kPinned], n[kWithG4]));
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_element_splitting_identities(const Corpus& corpus,
                                                      std::size_t jobs) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "esplit";
  r.universe = universe(corpus, "every member, every T with 1 <= |T| <= 3");
  const auto parts =
      over_members(select(corpus, false), jobs, [&](const CorpusMember& cm) {
        Partial p;
        const BinaryMatroid& m = cm.matroid;
        for (std::size_t k = 1; k <= 3; ++k) {
          for (ElementSet t : subsets_of_size(m.ground(), k)) {
            ++p.cases;
            const std::string got = esplit_case(m, t);
            if (!got.empty()) {
              p.failures.push_back({format_matroid(m),
                                    "T=" + join(m.labels_of(t)),
                                    "M'_T\\a = M_T and M'_T/a ~ M", got});
            }
          }
        }
        return p;
      });
  std::vector<std::size_t> n;
  reduce(r, parts, n);
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_ghafari_agreement(const Corpus& corpus,
                                           std::size_t jobs) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "ghafari";
  r.observational = true;
  r.universe = universe(corpus,
                        "every member and admissible pair, T'={x} and {y}, "
                        "both readings of the second step");
  {
    const BinaryMatroid& g4 = catalog_get("G_4").matroid;
    const BinaryMatroid ref = three_fold(g4, ThreeFoldParams{"x", "y"});
    const ElementSet t = g4.element_set({"x", "y"});
    const ElementSet tp = g4.element_set({"x"});
    r.note("G_4 T={x,y} T'={x} element-split reading ~ 3-fold",
           is_isomorphic(three_fold_ghafari(g4, t, tp, SecondStep::kElementSplit),
                         ref)
               ? "yes"
               : "no");
    r.note("G_4 T={x,y} T'={x} plain-split reading ~ 3-fold",
           is_isomorphic(three_fold_ghafari(g4, t, tp, SecondStep::kPlainSplit),
                         ref)
               ? "yes"
               : "no");
  }
  enum { kCases, kAgreeA, kAgreeB, kCircuitA, kCircuitB };
  const auto parts =
      over_members(select(corpus, false), jobs, [&](const CorpusMember& cm) {
        Partial p;
        p.counters.assign(5, 0);
        const BinaryMatroid& m = cm.matroid;
        for (auto [x, y] : admissible_pairs(m)) {
          const auto params = fresh_three_fold(m, m.label(x), m.label(y));
          const BinaryMatroid ref = three_fold(m, params);
          const ElementSet t = ElementSet::single(x) | ElementSet::single(y);
          for (std::size_t tp : {x, y}) {
            ++p.counters[kCases];
            for (auto mode : {SecondStep::kElementSplit, SecondStep::kPlainSplit}) {
              const BinaryMatroid g = three_fold_ghafari(
                  m, t, ElementSet::single(tp), mode, params);
              const bool a = mode == SecondStep::kElementSplit;
              p.counters[a ? kAgreeA : kAgreeB] += is_isomorphic(g, ref);
              const ElementSet pqr = g.element_set({params.p, params.q, params.r});
              const auto cs = circuits(g);
              p.counters[a ? kCircuitA : kCircuitB] +=
                  std::find(cs.begin(), cs.end(), pqr) != cs.end();
            }
          }
        }
        p.cases = p.counters[kCases];
        return p;
      });
  std::vector<std::size_t> n;
  reduce(r, parts, n);
  n.resize(5);
  r.note("element-split reading isomorphic to 3-fold", ratio(n[kAgreeA], n[kCases]));
  r.note("plain-split reading isomorphic to 3-fold", ratio(n[kAgreeB], n[kCases]));
  r.note("element-split reading: {p,q,r} is a circuit", ratio(n[kCircuitA], n[kCases]));
  r.note("plain-split reading: {p,q,r} is a circuit", ratio(n[kCircuitB], n[kCases]));
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_structural_properties(
    const std::vector<BinaryMatroid>& matroids, std::size_t jobs) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "structure";
  r.universe = std::to_string(matroids.size()) +
               " matroids; every subset for duality and splitting rank, "
               "|T| <= 3 for element splitting";
  auto parts = parallel_map<Partial>(matroids.size(), jobs, [&](std::size_t i) {
    Partial p;
    const BinaryMatroid& m = matroids[i];
    auto fail = [&](std::string params, std::string expected, std::string got) {
      p.failures.push_back(
          {format_matroid(m), std::move(params), std::move(expected), std::move(got)});
    };
    const BinaryMatroid md = dual(m);
    const std::size_t r0 = m.rank();
    for (BitRow bits = 0; bits < (BitRow{1} << m.size()); ++bits) {
      const ElementSet s(bits);
      ++p.cases;
      if (!dual(deletion(m, s)).represented_equal(contraction(md, s))) {
        fail("property=duality S=" + join(m.labels_of(s)),
             "dual(M\\S) = M*/S", "differs");
      }
      if (s.empty()) continue;
      ++p.cases;
      const std::size_t r1 = splitting(m, s).rank();
      const bool in_rows = row_space_contains(m.rep(), bits);
      if (r1 < r0 || r1 > r0 + 1 || (r1 == r0) != in_rows) {
        fail("property=split-rank T=" + join(m.labels_of(s)),
             "r(M) <= r(M_T) <= r(M)+1, equal iff chi_T in the row space",
             "r(M)=" + std::to_string(r0) + " r(M_T)=" + std::to_string(r1));
      }
    }
    const auto cs = circuits(m);
    const auto ds = cocircuits(m);
    for (auto c : cs) {
      for (auto d : ds) {
        ++p.cases;
        if ((c & d).size() % 2 != 0) {
          fail("property=parity C=" + join(m.labels_of(c)) +
                   " D=" + join(m.labels_of(d)),
               "even intersection", std::to_string((c & d).size()));
        }
      }
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      for (ElementSet t : subsets_of_size(m.ground(), k)) {
        ++p.cases;
        const std::string got = esplit_case(m, t);
        if (!got.empty()) {
          fail("property=esplit T=" + join(m.labels_of(t)),
               "M'_T\\a = M_T and M'_T/a ~ M", got);
        }
      }
    }
    if (is_binary_gammoid(m)) {
      for (std::size_t e = 0; e < m.size(); ++e) {
        const ElementSet s = ElementSet::single(e);
        p.cases += 2;
        if (!is_binary_gammoid(deletion(m, s))) {
          fail("property=closure delete=" + m.label(e),
               "minor of a gammoid is a gammoid", "deletion has M(K4) minor");
        }
        if (!is_binary_gammoid(contraction(m, s))) {
          fail("property=closure contract=" + m.label(e),
               "minor of a gammoid is a gammoid",
               "contraction has M(K4) minor");
        }
      }
    }
    return p;
  });
  std::vector<std::size_t> n;
  reduce(r, parts, n);
  r.wall_time = Clock::now() - start;
  return r;
}

bool replay_failure(std::string_view check, const FailureRecord& failure) {
  const auto p = parse_params(failure.params);
  if (check == "catalog") {
    const auto rep = validate_catalog();
    return std::any_of(rep.failures.begin(), rep.failures.end(),
                       [&](const FailureRecord& f) {
                         return f.params == failure.params &&
                                f.expected == failure.expected;
                       });
  }
  if (check == "quotients") {
    const auto rep = enumerate_quotients_of_F();
    return std::any_of(rep.failures.begin(), rep.failures.end(),
                       [&](const FailureRecord& f) {
                         return f.params == failure.params &&
                                f.expected == failure.expected;
                       });
  }
  const BinaryMatroid m = parse_matroid(failure.input);
  if (check == "gf1-empty" || check == "gf2-empty") {
    const auto k = static_cast<std::size_t>(std::stoul(param(p, "k")));
    const auto y = split_list(param(p, "Y"));
    return y.size() == k && is_binary_gammoid(m) &&
           f_searcher().find(splitting(m, y)).has_value();
  }
  if (check == "thm43") {
    const auto k = static_cast<std::size_t>(std::stoul(param(p, "k")));
    return is_binary_gammoid(m) && !theorem_4_3_case(m, k).empty();
  }
  if (check == "thm15") {
    const ElementSet t = m.element_set(split_list(param(p, "T")));
    return is_binary_gammoid(m) && !has_any_minor(m, gi_searchers()) &&
           !theorem_1_5_case(m, t).empty();
  }
  if (check == "main") {
    if (failure.params == "x=x y=y") {
      const auto rep = check_main_theorem(Corpus{});
      return !rep.failures.empty();
    }
    const std::size_t x = m.index_of(param(p, "x"));
    const std::size_t y = m.index_of(param(p, "y"));
    return is_binary_gammoid(m) && !g4_searcher().find(m) &&
           in_larger_cocircuit(m, ElementSet::single(x) | ElementSet::single(y)) &&
           !main_case(m, x, y).empty();
  }
  if (check == "esplit") {
    return !esplit_case(m, m.element_set(split_list(param(p, "T")))).empty();
  }
  if (check == "structure") {
    const auto rep = check_structural_properties({m});
    return std::any_of(rep.failures.begin(), rep.failures.end(),
                       [&](const FailureRecord& f) {
                         return f.params == failure.params;
                       });
  }
  throw VerifyError("no replay for check '" + std::string(check) + "'");
}

}  // namespace binmat
