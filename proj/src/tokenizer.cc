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

#include "acenls/tokenizer.h"

#include <algorithm>
#include <charconv>

namespace acenls {

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kFunctionWord: return "function-word";
    case TokenKind::kFixedPhrase: return "fixed-phrase";
    case TokenKind::kContentWord: return "content-word";
    case TokenKind::kNumber: return "number";
    case TokenKind::kProperName: return "proper-name";
    case TokenKind::kComma: return "comma";
    case TokenKind::kTerminator: return "terminator";
  }
  return "?";
}

namespace {

enum class PieceType { kWord, kComma, kTerminator };

struct Piece {
  std::string_view text;
  std::size_t offset;
  PieceType type;
};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Splits one whitespace-free chunk, peeling trailing punctuation and a
// trailing genitive marker.
void SplitChunk(std::string_view chunk, std::size_t offset,
                std::vector<Piece>* out) {
  std::vector<Piece> tail;
  while (!chunk.empty() &&
         (chunk.back() == '.' || chunk.back() == '?' || chunk.back() == ',')) {
    const char c = chunk.back();
    tail.push_back({chunk.substr(chunk.size() - 1), offset + chunk.size() - 1,
                    c == ',' ? PieceType::kComma : PieceType::kTerminator});
    chunk.remove_suffix(1);
  }
  if (!chunk.empty()) {
    std::size_t marker = 0;
    if (chunk.size() > 2 && chunk.ends_with("'s")) {
      marker = 2;
    } else if (chunk.size() > 1 && chunk.ends_with("'")) {
      marker = 1;
    }
    if (marker > 0) {
      out->push_back({chunk.substr(0, chunk.size() - marker), offset,
                      PieceType::kWord});
      out->push_back({chunk.substr(chunk.size() - marker),
                      offset + chunk.size() - marker, PieceType::kWord});
    } else {
      out->push_back({chunk, offset, PieceType::kWord});
    }
  }
  out->insert(out->end(), tail.rbegin(), tail.rend());
}

std::vector<Piece> SplitPieces(std::string_view text) {
  std::vector<Piece> pieces;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) SplitChunk(text.substr(start, i - start), start, &pieces);
  }
  return pieces;
}

bool IsIdentifierShaped(std::string_view word) {
  auto start_ok = [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c >= 0x80;
  };
  auto rest_ok = [&](unsigned char c) {
    return start_ok(c) || (c >= '0' && c <= '9') || c == '-';
  };
  if (word.empty() || !start_ok(static_cast<unsigned char>(word[0]))) {
    return false;
  }
  return std::all_of(word.begin() + 1, word.end(), [&](char c) {
    return rest_ok(static_cast<unsigned char>(c));
  });
}

bool IsCapitalized(std::string_view word) {
  return !word.empty() && word[0] >= 'A' && word[0] <= 'Z';
}

std::optional<std::int64_t> ParseNumber(std::string_view word) {
  std::string_view digits = word;
  if (digits.starts_with('-')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    return std::nullopt;
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

bool LooksNumeric(std::string_view word) {
  std::string_view digits = word;
  if (digits.starts_with('-')) digits.remove_prefix(1);
  return !digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

class SentenceClassifier {
 public:
  SentenceClassifier(std::span<const Piece> pieces, const Lexicon& lexicon)
      : pieces_(pieces), lexicon_(lexicon) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < pieces_.size()) {
      const Piece& p = pieces_[i];
      if (p.type == PieceType::kComma) {
        tokens.push_back(Simple(p, TokenKind::kComma));
        ++i;
        continue;
      }
      if (p.type == PieceType::kTerminator) {
        tokens.push_back(Simple(p, TokenKind::kTerminator));
        ++i;
        continue;
      }
      i += ClassifyWord(i, tokens.empty(), &tokens);
    }
    return tokens;
  }

 private:
  static Token Simple(const Piece& p, TokenKind kind) {
    Token t;
    t.surface = std::string(p.text);
    t.kind = kind;
    t.offset = p.offset;
    return t;
  }

  // Number of consecutive word pieces starting at i, capped at `limit`.
  std::size_t WordRun(std::size_t i, std::size_t limit) const {
    std::size_t n = 0;
    while (i + n < pieces_.size() && n < limit &&
           pieces_[i + n].type == PieceType::kWord) {
      ++n;
    }
    return n;
  }

  std::string Joined(std::size_t i, std::size_t n) const {
    std::string out;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) out += ' ';
      out += pieces_[i + k].text;
    }
    return out;
  }

  std::size_t ClassifyWord(std::size_t i, bool sentence_initial,
                           std::vector<Token>* out) {
    const Piece& p = pieces_[i];
    const std::size_t run = WordRun(i, Lexicon::MaxPhraseWords());

    // Fixed phrases, then function words; longest first.
    for (std::size_t n = run; n >= 1; --n) {
      const std::string surface = Joined(i, n);
      const std::string lower = ToLower(surface);
      if (Lexicon::IsFixedPhrase(lower)) {
        Token t;
        t.surface = surface;
        t.kind = TokenKind::kFixedPhrase;
        t.offset = p.offset;
        t.phrase = lower;
        out->push_back(std::move(t));
        return n;
      }
      if (const FunctionWord* w = lexicon_.FindFunctionWord(lower)) {
        Token t;
        t.surface = surface;
        t.kind = TokenKind::kFunctionWord;
        t.offset = p.offset;
        t.phrase = lower;
        t.role = w->role;
        out->push_back(std::move(t));
        return n;
      }
    }

    const std::string_view word = p.text;
    Token t;
    t.surface = std::string(word);
    t.offset = p.offset;
    if (const ContentWord* w = lexicon_.FindContentWord(word)) {
      t.kind = TokenKind::kContentWord;
      t.category = w->category;
      t.lexeme = w->lexeme;
      t.number = w->number;
      out->push_back(std::move(t));
      return 1;
    }
    if (LooksNumeric(word)) {
      std::optional<std::int64_t> value = ParseNumber(word);
      if (!value) {
        throw Error(ErrorCode::kUnknownToken,
                    "number '" + std::string(word) + "' is out of range",
                    SourceLocation{0, p.offset + 1});
      }
      t.kind = TokenKind::kNumber;
      t.value = *value;
      out->push_back(std::move(t));
      return 1;
    }
    if (lexicon_.IsProperName(word) ||
        (IsIdentifierShaped(word) && (IsCapitalized(word) || sentence_initial))) {
      t.kind = TokenKind::kProperName;
      out->push_back(std::move(t));
      return 1;
    }
    throw Error(ErrorCode::kUnknownToken, UnknownMessage(i),
                SourceLocation{0, p.offset + 1});
  }

  std::string UnknownMessage(std::size_t i) const {
    const std::string word(pieces_[i].text);
    std::string message = "unknown word '" + word + "'";
    const bool has_prev = i > 0 && pieces_[i - 1].type == PieceType::kWord;
    const bool has_next =
        i + 1 < pieces_.size() && pieces_[i + 1].type == PieceType::kWord;
    if (has_next) {
      const std::string next(pieces_[i + 1].text);
      if (lexicon_.FindContentWord(word + "-" + next) != nullptr) {
        return message + "; the content word '" + word + " " + next +
               "' must be written '" + word + "-" + next + "'";
      }
    }
    if (has_prev) {
      const std::string prev(pieces_[i - 1].text);
      if (lexicon_.FindContentWord(prev + "-" + word) != nullptr) {
        return message + "; the content word '" + prev + " " + word +
               "' must be written '" + prev + "-" + word + "'";
      }
      return message + "; content words cannot contain blank spaces, so if '" +
             prev + " " + word + "' is meant as one word write it '" + prev +
             "-" + word + "' and register it in the lexicon";
    }
    return message + "; it is neither in the lexicon nor a capitalized name";
  }

  std::span<const Piece> pieces_;
  const Lexicon& lexicon_;
};

}  // namespace

std::vector<TokenizedSentence> TokenizeSentences(std::string_view text,
                                                 const Lexicon& lexicon) {
  const std::vector<Piece> pieces = SplitPieces(text);
  std::vector<TokenizedSentence> sentences;
  std::size_t begin = 0;
  while (begin < pieces.size()) {
    std::size_t end = begin;
    while (end < pieces.size() && pieces[end].type != PieceType::kTerminator) {
      ++end;
    }
    if (end < pieces.size()) ++end;  // include the terminator

    TokenizedSentence sentence;
    sentence.offset = pieces[begin].offset;
    const Piece& last = pieces[end - 1];
    sentence.text = std::string(
        text.substr(sentence.offset,
                    last.offset + last.text.size() - sentence.offset));
    try {
      sentence.tokens =
          SentenceClassifier(std::span(pieces).subspan(begin, end - begin),
                             lexicon)
              .Run();
    } catch (const Error& e) {
      sentence.error = e;
    }
    sentences.push_back(std::move(sentence));
    begin = end;
  }
  return sentences;
}

std::vector<Token> Tokenize(std::string_view text, const Lexicon& lexicon) {
  std::vector<Token> tokens;
  for (TokenizedSentence& s : TokenizeSentences(text, lexicon)) {
    if (s.error) throw *s.error;
    tokens.insert(tokens.end(), std::make_move_iterator(s.tokens.begin()),
                  std::make_move_iterator(s.tokens.end()));
  }
  return tokens;
}

std::string JoinTokens(std::span<const Token> tokens) {
  std::string out;
  for (const Token& t : tokens) {
    const bool attach = t.kind == TokenKind::kComma ||
                        t.kind == TokenKind::kTerminator ||
                        t.IsFunction(FunctionRole::kGenitive);
    if (!out.empty() && !attach) out += ' ';
    out += t.surface;
  }
  return out;
}

}  // namespace acenls
