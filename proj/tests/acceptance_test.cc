// Copyright 2026 The acenls Authors.
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


// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acenls/ace-reader.h"
#include "acenls/factbase.h"
#include "acenls/generator.h"
#include "acenls/model-parser.h"
#include "acenls/query.h"
#include "acenls/tokenizer.h"
#include "cli.h"
#include "support/fixtures.h"
#include "support/model-xml.h"
#include "support/random-model.h"

namespace acenls {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kCorpusSize = 250;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Cli {
  int code;
  std::string out;
  std::string err;
};

Cli RunCli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> SentenceLines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

// Scratch directory removed on exit.
class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / "acenls-acceptance") {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string Write(const std::string& name, const std::string& body) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << body;
    return p.string();
  }

 private:
  fs::path path_;
};

// 1. Fixture text against the two data-dictionary templates instantiated by
// hand: two sentences per enumeration, two per constant.
Outcome TemplateFidelity() {
  Outcome o;
  const std::vector<std::string> want = {
      "pedastrianColor is a datatype.",
      "It consists-of 2 elements that are Stop and Walk.",
      "TrafficColor is a datatype.",
      "It consists-of 4 elements that are Green, Red, RedYellow, and Yellow.",
      "Signal is a datatype.",
      "It consists-of one element that is Present.",
      "IndicatorSignal is a datatype.",
      "It consists-of 2 elements that are Off and On.",
      "tGreen is a constant.",
      "It is equal to 30.",
      "tRed is a constant.",
      "It is equal to 35.",
      "tYellow is a constant.",
      "It is equal to 5.",
  };
  const Cli r = RunCli({"generate", testing::DataPath(testing::kTrafficLight)});
  if (r.code != 0) {
    o.Fail("exit " + std::to_string(r.code) + ": " + r.err);
    return o;
  }
  const std::vector<std::string> got = SentenceLines(r.out);
  if (got.size() != want.size()) {
    o.Fail(std::to_string(got.size()) + " sentences, want 14");
  }
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
    if (got[i] != want[i]) o.Fail("sentence " + std::to_string(i + 1) + ": \"" +
                                  got[i] + "\" != \"" + want[i] + "\"");
  }
  if (o.pass) o.detail = "14 sentences byte-exact";
  return o;
}

// 2. The three reference question/answer pairs. The reference answer to the
// second question says 4 elements although the same model lists IndicatorSignal
// as (Off, On); the expected count comes from the fixture itself.
Outcome ReferenceAnswers() {
  Outcome o;
  const std::string model = testing::DataPath(testing::kTrafficLight);
  const Model m = ParseModelFile(model);
  std::size_t members = 0;
  for (const EnumerationType& e : m.data_dictionary->enumerations) {
    if (e.name == "IndicatorSignal") members = e.members.size();
  }
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"What is IndicatorSignal?", "It is a data-type."},
      {"How many elements does IndicatorSignal have?",
       "It has " + std::to_string(members) + " elements."},
      {"Is On an element of IndicatorSignal?", "Yes, it is."},
  };
  if (members != 2) o.Fail("fixture lists " + std::to_string(members) + " members");
  for (const auto& [q, a] : pairs) {
    const Cli r = RunCli({"query", model, q});
    if (r.code != 0 || r.out != a + "\n") {
      o.Fail("\"" + q + "\" -> \"" + r.out + r.err + "\"");
    }
  }
  if (o.pass) o.detail = "3/3 answers exact (count 2 from the fixture)";
  return o;
}

// Facts as plain tuples, computed straight from a Model.
using Tuple = std::vector<std::string>;

std::set<Tuple> OracleFacts(const Model& m) {
  std::set<Tuple> out;
  if (m.data_dictionary) {
    for (const EnumerationType& e : m.data_dictionary->enumerations) {
      out.insert({"datatype", e.name});
      out.insert({"count", e.name, std::to_string(e.members.size())});
      for (const std::string& x : e.members) out.insert({"element", x, e.name});
    }
    for (const ConstantFunction& c : m.data_dictionary->constants) {
      out.insert({"constant", c.name});
      out.insert({"value", c.name, std::to_string(c.value)});
    }
  }
  std::function<void(const Component&)> walk = [&](const Component& c) {
    out.insert({"component", c.name});
    for (const Component& s : c.subcomponents) {
      out.insert({"sub", c.name, s.name});
      walk(s);
    }
    for (const Port& p : c.ports) {
      out.insert({"port", c.name, p.name,
                  p.direction == PortDirection::kInput ? "in" : "out", p.type_name});
    }
    for (const Channel& ch : c.channels) {
      out.insert({"connects", ch.name, ch.source.component, ch.source.port,
                  ch.target.component, ch.target.port});
    }
  };
  if (m.architecture) walk(*m.architecture);
  for (const StateAutomaton& a : m.automata) {
    out.insert({"automaton", a.name, a.owner});
    for (const std::string& s : a.states) out.insert({"state", a.name, s});
    out.insert({"initial", a.name, a.initial_state});
    for (const Transition& t : a.transitions) {
      out.insert({"transition", a.name, t.source, t.target,
                  t.guard ? "g:" + *t.guard : "-", t.action ? "a:" + *t.action : "-"});
    }
  }
  return out;
}

Tuple AsTuple(const Fact& f) {
  return std::visit(
      [](const auto& x) -> Tuple {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, fact::IsDatatype>) {
          return {"datatype", x.type};
        } else if constexpr (std::is_same_v<T, fact::HasElementCount>) {
          return {"count", x.type, std::to_string(x.count)};
        } else if constexpr (std::is_same_v<T, fact::ElementOf>) {
          return {"element", x.member, x.type};
        } else if constexpr (std::is_same_v<T, fact::IsConstant>) {
          return {"constant", x.name};
        } else if constexpr (std::is_same_v<T, fact::HasValue>) {
          return {"value", x.name, std::to_string(x.value)};
        } else if constexpr (std::is_same_v<T, fact::IsComponent>) {
          return {"component", x.name};
        } else if constexpr (std::is_same_v<T, fact::Subcomponent>) {
          return {"sub", x.parent, x.child};
        } else if constexpr (std::is_same_v<T, fact::HasPort>) {
          return {"port", x.component, x.port,
                  x.direction == PortDirection::kInput ? "in" : "out", x.type};
        } else if constexpr (std::is_same_v<T, fact::Connects>) {
          return {"connects", x.channel, x.source_component, x.source_port,
                  x.target_component, x.target_port};
        } else if constexpr (std::is_same_v<T, fact::IsAutomaton>) {
          return {"automaton", x.automaton, x.owner};
        } else if constexpr (std::is_same_v<T, fact::HasState>) {
          return {"state", x.automaton, x.state};
        } else if constexpr (std::is_same_v<T, fact::IsInitialState>) {
          return {"initial", x.automaton, x.state};
        } else {
          return {"transition", x.automaton, x.source, x.target,
                  x.guard ? "g:" + *x.guard : "-", x.action ? "a:" + *x.action : "-"};
        }
      },
      f);
}

// 3. generate, then read the text back, over the randomized corpus.
Outcome RoundTrip() {
  Outcome o;
  std::size_t facts = 0;
  for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) {
    const Model m = testing::RandomModel(seed);
    const std::string text =
        ToAceText(GenerateDocument(m, Lexicon::Default(), AllSections()));
    const AceDocument back = ReadAceDocument(text, Lexicon::Default());
    if (!back.ok()) {
      o.Fail("seed " + std::to_string(seed) + ": document does not read back");
      continue;
    }
    std::set<Tuple> recovered;
    for (const Fact& f : back.facts.facts()) recovered.insert(AsTuple(f));
    const std::set<Tuple> want = OracleFacts(m);
    if (recovered != want || back.facts.size() != want.size()) {
      o.Fail("seed " + std::to_string(seed) + ": recovered facts differ");
    }
    if (!FactsEqual(back.facts, ExtractFacts(m))) {
      o.Fail("seed " + std::to_string(seed) + ": facts_equal is false");
    }
    facts += want.size();
  }
  if (o.pass) {
    o.detail = std::to_string(kCorpusSize) + " models, " + std::to_string(facts) +
               " facts recovered";
  }
  return o;
}

// 4. Each sentence re-tokenized and checked on its own, then the whole file
// through the validate command.
Outcome SelfValidation(const TempDir& dir) {
  Outcome o;
  std::size_t sentences = 0;
  for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) {
    const Model m = testing::RandomModel(seed);
    const Document doc = GenerateDocument(m, Lexicon::Default(), AllSections());
    for (const Sentence* s : doc.flat_sentences()) {
      ++sentences;
      if (!CheckSentence(Tokenize(s->text, doc.lexicon)).ok) {
        o.Fail("seed " + std::to_string(seed) + ": \"" + s->text + "\"");
      }
    }
    const std::string model = dir.Write("m.xml", testing::ModelToXml(m));
    const Cli gen = RunCli({"generate", model});
    const std::string ace = dir.Write("m.ace", gen.out);
    const Cli val = RunCli({"validate", ace});
    if (gen.code != 0 || val.code != 0) {
      o.Fail("seed " + std::to_string(seed) + ": generate " +
             std::to_string(gen.code) + ", validate " + std::to_string(val.code) +
             ": " + gen.err + val.err);
    }
  }
  if (o.pass) {
    o.detail = std::to_string(sentences) + " sentences checked, " +
               std::to_string(kCorpusSize) + " documents validate with exit 0";
  }
  return o;
}

// 5. Hand-written invalid documents, each with the diagnostic it must get.
Outcome NegativeSuite() {
  struct Case {
    std::string text;
    ErrorCode code;
    std::string fragment;  // must occur in the message
    std::size_t line;
    std::size_t column;
  };
  const std::vector<Case> cases = {
      {"interested in something is nice.\n", ErrorCode::kUnknownToken,
       "interested-in", 1, 12},
      {"Signal is a flurble.\n", ErrorCode::kUnknownToken, "'flurble'", 1, 13},
      {"xyzzy flurble.\n", ErrorCode::kUnknownToken, "'flurble'", 1, 7},
      {"Signal is a datatype\n", ErrorCode::kInvalidSentence, "terminator", 1, 21},
      {"It is a datatype.\n", ErrorCode::kUnresolvedPronoun, "It", 1, 1},
      {"Blinker is an element of Lamp.\nFlash is an element of it.\n",
       ErrorCode::kAmbiguousSentence, "Blinker, Lamp", 2, 24},
      {"Lamp has an input port Power of type Signal.\n"
       "Level is an element of it.\n",
       ErrorCode::kAmbiguousSentence, "Lamp, Power, Signal", 2, 24},
      {"is a datatype TrafficColor.\n", ErrorCode::kInvalidSentence,
       "declarative must begin with noun phrase", 1, 1},
      {"IndicatorSignal is a datatype.\n"
       "It consists-of 3 elements that are Off and On.\n",
       ErrorCode::kInvalidSentence, "count-agreement", 2, 36},
      {"Signal is a datatype.\nIt consists-of 2 element that are Off and On.\n",
       ErrorCode::kInvalidSentence, "number-agreement", 2, 18},
      {"The initial state is Red.\n", ErrorCode::kUnresolvedReference, "automaton",
       1, 1},
      {"Signal is an datatype.\n", ErrorCode::kInvalidSentence, "article", 1, 11},
  };
  Outcome o;
  std::size_t passed = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    const AceDocument doc = ReadAceDocument(c.text, Lexicon::Default());
    const Error* e = nullptr;
    for (const SentenceResult& s : doc.sentences) {
      if (s.error && !e) e = &*s.error;
    }
    const std::string label = "case " + std::to_string(i + 1);
    if (e == nullptr) {
      o.Fail(label + ": accepted");
      continue;
    }
    const std::size_t line = e->location() ? e->location()->line : 0;
    const std::size_t column = e->location() ? e->location()->column : 0;
    if (e->code() != c.code || e->message().find(c.fragment) == std::string::npos ||
        line != c.line || column != c.column) {
      o.Fail(label + ": got " + FormatError(*e));
      continue;
    }
    ++passed;
  }
  o.detail = std::to_string(passed) + "/" + std::to_string(cases.size()) +
             " rejected with the expected diagnostic" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

// 6. In-process twice, then the installed binary twice.
Outcome Determinism() {
  Outcome o;
  for (const char* fixture : {testing::kTrafficLight, testing::kTrafficLightFull}) {
    const std::string path = testing::DataPath(fixture);
    const Cli a = RunCli({"generate", path});
    const Cli b = RunCli({"generate", path});
    if (a.code != 0 || a.out != b.out || a.out.empty()) {
      o.Fail(std::string(fixture) + ": in-process runs differ");
    }
    std::string runs[2];
    for (std::string& run : runs) {
      const std::string cmd = std::string("\"") + ACENLS_CLI_PATH +
                              "\" generate \"" + path + "\"";
      FILE* pipe = popen(cmd.c_str(), "r");
      if (pipe == nullptr) {
        o.Fail("cannot start " + cmd);
        return o;
      }
      char buf[4096];
      for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) run.append(buf, n);
      if (pclose(pipe) != 0) o.Fail(cmd + ": non-zero exit");
    }
    if (runs[0] != runs[1] || runs[0] != a.out) {
      o.Fail(std::string(fixture) + ": process runs differ");
    }
  }
  if (o.pass) o.detail = "2 fixtures, outputs byte-identical across 4 runs each";
  return o;
}

// 7. Answers against a direct scan of the fact list.
Outcome QuerySoundness() {
  Outcome o;
  std::size_t asked = 0;
  for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) {
    const Model m = testing::RandomModel(seed);
    const FactBase facts = ExtractFacts(m);
    const Lexicon lex = LenientSessionLexicon(m, Lexicon::Default());
    std::vector<std::string> types, members;
    for (const Fact& f : facts.facts()) {
      if (auto* d = std::get_if<fact::IsDatatype>(&f)) types.push_back(d->type);
      if (auto* e = std::get_if<fact::ElementOf>(&f)) members.push_back(e->member);
    }
    members.push_back("Nonmember");
    auto ask = [&](const std::string& q) {
      ++asked;
      return AnswerQuestion(ParseQuestion(q, lex), facts, lex);
    };
    try {
      for (const std::string& t : types) {
        std::int64_t scanned = 0;
        for (const Fact& f : facts.facts()) {
          auto* e = std::get_if<fact::ElementOf>(&f);
          scanned += e != nullptr && e->type == t;
        }
        const Answer count = ask("How many elements does " + t + " have?");
        if (count.count != scanned) {
          o.Fail("seed " + std::to_string(seed) + ": count of " + t);
        }
        for (const std::string& x : members) {
          bool scanned_yes = false;
          for (const Fact& f : facts.facts()) {
            auto* e = std::get_if<fact::ElementOf>(&f);
            scanned_yes = scanned_yes || (e && e->member == x && e->type == t);
          }
          const Answer a = ask("Is " + x + " an element of " + t + "?");
          if (a.truth != scanned_yes) {
            o.Fail("seed " + std::to_string(seed) + ": " + x + " in " + t);
          }
        }
      }
    } catch (const Error& e) {
      o.Fail("seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(asked) + " questions, 0 disagreements";
  return o;
}

}  // namespace
}  // namespace acenls

int main() {
  using Clock = std::chrono::steady_clock;
  const acenls::TempDir dir;
  struct Criterion {
    int number;
    const char* name;
    std::function<acenls::Outcome()> run;
    double limit_seconds;  // 0: untimed
  };
  const std::vector<Criterion> criteria = {
      {1, "template fidelity", acenls::TemplateFidelity, 1.0},
      {2, "question/answer reproduction", acenls::ReferenceAnswers, 1.0},
      {3, "round trip", acenls::RoundTrip, 30.0},
      {4, "self-validation", [&] { return acenls::SelfValidation(dir); }, 0},
      {5, "validator negative suite", acenls::NegativeSuite, 0},
      {6, "determinism", acenls::Determinism, 0},
      {7, "query soundness", acenls::QuerySoundness, 0},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    acenls::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.Fail("took " + std::to_string(secs) + " s");
    }
    all = all && o.pass;
    std::printf("Criterion %d: %s - %s: %s (%.3f s%s)\n", c.number,
                o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs,
                c.limit_seconds > 0
                    ? (", limit " + std::to_string(static_cast<int>(c.limit_seconds)) +
                       " s")
                          .c_str()
                    : "");
  }
  return all ? 0 : 1;
}
