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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acenls/ace-reader.h"
#include "acenls/factbase.h"
#include "acenls/generator.h"
#include "acenls/lexicon.h"
#include "acenls/model-parser.h"
#include "acenls/query.h"

namespace acenls::cli {

namespace {

struct Config {
  std::string input;
  std::string output;
  std::string sections;
  std::string lexicon;
  std::string question;
  bool strict = false;
};

// Failure already reported on the error stream.
struct Exit {
  int code;
};

void Report(std::ostream& err, const std::string& path, const Error& e) {
  err << "acenls: ";
  if (!path.empty()) err << path << ":";
  if (const auto& loc = e.location()) {
    if (loc->line > 0) err << loc->line << ":";
    if (loc->column > 0) err << loc->column << ":";
  }
  if (!path.empty() || e.location()) err << " ";
  err << ErrorCodeName(e.code()) << ": " << e.message() << "\n";
}

Lexicon LoadBaseLexicon(const Config& config, std::ostream& err) {
  std::string path = config.lexicon;
  if (path.empty()) {
    if (const char* env = std::getenv(kLexiconEnv)) path = env;
  }
  if (path.empty()) return Lexicon::Default();
  try {
    return LoadLexiconFile(path, Lexicon::Default());
  } catch (const Error& e) {
    Report(err, path, e);
    throw Exit{kExitInput};
  }
}

Model LoadModel(const Config& config, std::ostream& err) {
  std::vector<ParseWarning> warnings;
  Model model;
  try {
    model = ParseModelFile(config.input, &warnings);
  } catch (const Error& e) {
    Report(err, config.input, e);
    throw Exit{kExitInput};
  }
  for (const ParseWarning& w : warnings) {
    err << "acenls: " << config.input << ":" << w.location.line << ":"
        << w.location.column << ": warning: " << w.message << "\n";
  }
  if (config.strict && !warnings.empty()) throw Exit{kExitInput};
  return model;
}

std::set<SectionKind> ParseSections(const std::string& text, std::ostream& err) {
  if (text.empty()) return AllSections();
  std::set<SectionKind> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    bool found = false;
    for (SectionKind k : AllSections()) {
      if (item == SectionKindName(k)) {
        out.insert(k);
        found = true;
      }
    }
    if (!found) {
      err << "acenls: unknown section '" << item
          << "'; expected datatypes, architecture or automata\n";
      throw Exit{kExitInput};
    }
  }
  if (out.empty()) {
    err << "acenls: --sections must name at least one section\n";
    throw Exit{kExitInput};
  }
  return out;
}

int Generate(const Config& config, std::ostream& out, std::ostream& err) {
  const std::set<SectionKind> sections = ParseSections(config.sections, err);
  const Lexicon base = LoadBaseLexicon(config, err);
  const Model model = LoadModel(config, err);
  std::string text;
  try {
    text = ToAceText(GenerateDocument(model, base, sections));
  } catch (const Error& e) {
    Report(err, config.input, e);
    return kExitGeneration;
  }
  if (config.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(config.output, std::ios::binary);
  file << text;
  if (!file) {
    err << "acenls: " << config.output << ": cannot write\n";
    return kExitInput;
  }
  return kExitOk;
}

int Validate(const Config& config, std::ostream& out, std::ostream& err) {
  const Lexicon base = LoadBaseLexicon(config, err);
  std::ifstream file(config.input, std::ios::binary);
  if (!file) {
    err << "acenls: " << config.input << ": no such file\n";
    return kExitInput;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  const AceDocument doc = ReadAceDocument(buffer.str(), base);
  for (const Error& e : doc.directive_errors) Report(err, config.input, e);
  for (const SentenceResult& s : doc.sentences) {
    if (s.error) Report(err, config.input, *s.error);
  }
  if (!doc.ok()) {
    err << "acenls: " << config.input << ": " << doc.failures()
        << " problem(s) in " << doc.sentences.size() << " sentence(s)\n";
    return kExitGeneration;
  }
  out << config.input << ": " << doc.sentences.size() << " sentence(s) OK\n";
  return kExitOk;
}

bool AnswerOne(const std::string& question, const FactBase& facts,
               const Lexicon& lexicon, std::ostream& out, std::ostream& err) {
  try {
    out << AnswerQuestion(ParseQuestion(question, lexicon), facts, lexicon).text
        << "\n";
    return true;
  } catch (const Error& e) {
    Report(err, "", e);
    return false;
  }
}

int Query(const Config& config, std::istream& in, std::ostream& out,
          std::ostream& err) {
  const Lexicon base = LoadBaseLexicon(config, err);
  const Model model = LoadModel(config, err);
  const FactBase facts = ExtractFacts(model);
  const Lexicon lexicon = LenientSessionLexicon(model, base);
  if (!config.question.empty()) {
    return AnswerOne(config.question, facts, lexicon, out, err) ? kExitOk
                                                                : kExitQuery;
  }
  bool all_ok = true;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    all_ok = AnswerOne(line, facts, lexicon, out, err) && all_ok;
    out.flush();
  }
  return all_ok ? kExitOk : kExitQuery;
}

int Facts(const Config& config, std::ostream& out, std::ostream& err) {
  const Model model = LoadModel(config, err);
  const FactBase facts = ExtractFacts(model);
  for (const Fact& f : facts.facts()) out << FactToString(f) << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Natural-language specifications from system models"};
  app.name("acenls");
  app.require_subcommand(1);
  app.add_option("--lexicon", config.lexicon,
                 std::string("content-word lexicon file (default $") +
                     kLexiconEnv + ")");
  app.add_flag("--strict", config.strict, "treat warnings as errors");

  CLI::App* generate = app.add_subcommand("generate", "write the .ace document");
  generate->add_option("model", config.input, "model XML file")->required();
  generate->add_option("-o,--output", config.output, "output file (default stdout)");
  generate->add_option("--sections", config.sections,
                       "comma-separated subset of datatypes,architecture,automata");

  CLI::App* validate = app.add_subcommand("validate", "check an .ace document");
  validate->add_option("document", config.input, ".ace file")->required();

  CLI::App* query = app.add_subcommand("query", "answer questions about a model");
  query->add_option("model", config.input, "model XML file")->required();
  query->add_option("question", config.question,
                    "one question; omitted: read one per line from stdin");

  CLI::App* facts = app.add_subcommand("facts", "print the fact base");
  facts->add_option("model", config.input, "model XML file")->required();

  for (CLI::App* sub : {generate, validate, query, facts}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*generate) return Generate(config, out, err);
    if (*validate) return Validate(config, out, err);
    if (*query) return Query(config, in, out, err);
    return Facts(config, out, err);
  } catch (const Exit& e) {
    return e.code;
  }
}

}  // namespace acenls::cli
