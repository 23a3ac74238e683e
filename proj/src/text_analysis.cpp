// Copyright 2026 The dcqa Authors.
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

#include "dcqa/text_analysis.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "dcqa/error.h"

namespace dcqa {
namespace {

constexpr std::array<std::string_view, 11> kPosNames = {
    "Noun",    "Verb",      "Adjective",     "Adverb", "Preposition", "Determiner",
    "Pronoun", "Auxiliary", "Interrogative", "Number", "Other"};
constexpr std::array<std::string_view, 5> kEntityNames = {"Person", "Location", "Date",
                                                          "Organization", "None"};

constexpr std::array<std::string_view, 12> kMonthAbbrev = {
    "Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
constexpr std::array<std::string_view, 12> kMonthFull = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

// Words whose trailing period does not end a sentence.
constexpr std::array<std::string_view, 33> kAbbreviations = {
    "mr",  "mrs",    "ms",   "dr",  "st",  "prof", "jr",  "sr",   "vs",  "mt",  "gen",
    "col", "capt",   "lt",   "sgt", "rev", "hon",  "gov", "sen",  "inc", "ltd", "corp",
    "fig", "approx", "dept", "jan", "feb", "apr",  "aug", "sept", "oct", "nov", "dec"};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Digits followed by st/nd/rd/th.
bool is_ordinal(std::string_view word) {
  if (word.size() < 3) return false;
  std::string suffix = fold_case(word.substr(word.size() - 2));
  if (suffix != "st" && suffix != "nd" && suffix != "rd" && suffix != "th") return false;
  return all_digits(word.substr(0, word.size() - 2));
}

std::optional<int> month_index(std::string_view word) {
  std::string w = fold_case(word);
  if (w.size() < 3) return std::nullopt;
  if (w == "sept") return 8;
  for (std::size_t m = 0; m < kMonthFull.size(); ++m) {
    if (w == kMonthFull[m] || w == fold_case(kMonthAbbrev[m])) return static_cast<int>(m);
  }
  return std::nullopt;
}

std::optional<int> day_value(std::string_view word) {
  std::string_view digits = is_ordinal(word) ? word.substr(0, word.size() - 2) : word;
  if (!all_digits(digits) || digits.size() > 2) return std::nullopt;
  int day = 0;
  std::from_chars(digits.data(), digits.data() + digits.size(), day);
  if (day < 1 || day > 31) return std::nullopt;
  return day;
}

bool is_year(std::string_view word) { return word.size() == 4 && all_digits(word); }

// True when the period at `dot` terminates a sentence.
bool period_ends_sentence(std::string_view text, std::size_t segment_start, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > segment_start && !is_space(text[begin - 1])) --begin;
  std::string_view word = text.substr(begin, dot - begin);
  while (!word.empty() && (word.front() == '(' || word.front() == '"' || word.front() == '\'')) {
    word.remove_prefix(1);
  }
  if (word.empty()) return true;
  if (word.size() == 1 && is_upper(word[0])) return false;
  if (is_ordinal(word)) return false;
  std::string lower = fold_case(word);
  if (lower.find('.') != std::string::npos) return false;  // e.g, i.e, U.S
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) == kAbbreviations.end();
}

bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

}  // namespace

std::string_view pos_name(PosTag tag) { return kPosNames[static_cast<std::size_t>(tag)]; }

std::string_view entity_name(EntityTag tag) { return kEntityNames[static_cast<std::size_t>(tag)]; }

std::optional<PosTag> parse_pos(std::string_view name) {
  std::string lower = fold_case(name);
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (lower == fold_case(kPosNames[i])) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

std::optional<EntityTag> parse_entity(std::string_view name) {
  std::string lower = fold_case(name);
  for (std::size_t i = 0; i < kEntityNames.size(); ++i) {
    if (lower == fold_case(kEntityNames[i])) return static_cast<EntityTag>(i);
  }
  return std::nullopt;
}

std::string fold_case(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool is_month_name(std::string_view word) { return month_index(word).has_value(); }

std::vector<RawSentence> split_sentences(std::string_view text) {
  std::vector<RawSentence> sentences;
  std::size_t start = 0;

  auto flush = [&](std::size_t end) {
    std::string_view segment = text.substr(start, end - start);
    std::string_view trimmed = trim(segment);
    if (!trimmed.empty()) {
      sentences.push_back(
          {std::string(trimmed), static_cast<std::size_t>(trimmed.data() - text.data())});
    }
    start = end;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '\n' && is_space(text[j])) ++j;
      if (j < text.size() && text[j] == '\n') {
        flush(i);
        i = j;
        start = j + 1;
      }
      continue;
    }
    if (c != '.' && c != '!' && c != '?') continue;

    std::size_t last = i;
    while (last + 1 < text.size() &&
           (text[last + 1] == '.' || text[last + 1] == '!' || text[last + 1] == '?')) {
      ++last;
    }
    std::size_t end = last;
    while (end + 1 < text.size() && is_closer(text[end + 1])) ++end;
    bool boundary = end + 1 == text.size() || is_space(text[end + 1]);
    if (!boundary) {
      i = last;
      continue;
    }
    if (c == '.' && last == i && !period_ends_sentence(text, start, i)) continue;
    flush(end + 1);
    i = end;
  }
  flush(text.size());
  return sentences;
}

std::vector<Token> tokenize(const RawSentence& sentence) {
  const std::string& text = sentence.text;
  std::vector<Token> tokens;
  std::string current;

  auto word_byte = [&](std::size_t i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalnum(c)) return true;
    if (c < 0x80) return false;
    // U+2000..U+206F (dashes, curly quotes, ellipsis) is punctuation.
    if (c == 0xE2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x80) {
      return false;
    }
    if (c == 0x80 && i >= 1 && static_cast<unsigned char>(text[i - 1]) == 0xE2) return false;
    if (i >= 2 && static_cast<unsigned char>(text[i - 2]) == 0xE2 &&
        static_cast<unsigned char>(text[i - 1]) == 0x80) {
      return false;
    }
    return true;
  };
  auto emit = [&] {
    if (current.empty()) return;
    Token token;
    token.surface = current;
    token.original = current;
    token.position = tokens.size();
    tokens.push_back(std::move(token));
    current.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (word_byte(i)) {
      current += c;
      continue;
    }
    bool joiner = c == '-' || c == '\'' || c == '.' || c == '/';
    if (joiner && !current.empty() && i + 1 < text.size() && word_byte(i + 1)) {
      current += c;
      continue;
    }
    // Right single quote (U+2019) used as an apostrophe.
    if (c == '\xE2' && i + 3 < text.size() && text[i + 1] == '\x80' && text[i + 2] == '\x99' &&
        !current.empty() && word_byte(i + 3)) {
      current.append(text, i, 3);
      i += 2;
      continue;
    }
    emit();
  }
  emit();
  return tokens;
}

namespace {

bool verb_stem_known(std::string_view word, const Lexicon& lexicon) {
  auto is_verb = [&](std::string stem) {
    if (stem.size() < 2) return false;
    auto it = lexicon.find(stem);
    return it != lexicon.end() && it->second == PosTag::kVerb;
  };
  std::string w(word);
  if ((ends_with(w, "ies") || ends_with(w, "ied")) && is_verb(w.substr(0, w.size() - 3) + "y")) {
    return true;
  }
  if (ends_with(w, "es") && is_verb(w.substr(0, w.size() - 2))) return true;
  if (ends_with(w, "s") && is_verb(w.substr(0, w.size() - 1))) return true;
  if (ends_with(w, "ed")) {
    if (is_verb(w.substr(0, w.size() - 2))) return true;
    if (is_verb(w.substr(0, w.size() - 1))) return true;  // lived -> live
    // stopped -> stop
    if (w.size() >= 5 && w[w.size() - 3] == w[w.size() - 4] && is_verb(w.substr(0, w.size() - 3))) {
      return true;
    }
  }
  return false;
}

bool is_numeral(std::string_view word) {
  if (is_ordinal(word)) return true;
  if (!is_digit(word.front()) || !is_digit(word.back())) return false;
  return std::all_of(word.begin(), word.end(),
                     [](char c) { return is_digit(c) || c == '.' || c == ',' || c == '/'; });
}

}  // namespace

std::vector<Token> tag_pos(std::vector<Token> tokens, const Lexicon& lexicon) {
  for (Token& token : tokens) {
    std::string lower = fold_case(token.surface);
    if (auto it = lexicon.find(lower); it != lexicon.end()) {
      token.pos = it->second;
    } else if (is_numeral(lower)) {
      token.pos = PosTag::kNumber;
    } else if (verb_stem_known(lower, lexicon)) {
      token.pos = PosTag::kVerb;
    } else if (!is_upper(token.surface.front()) && lower.size() > 4 && ends_with(lower, "ly")) {
      token.pos = PosTag::kAdverb;
    } else {
      token.pos = PosTag::kNoun;
    }
  }
  return tokens;
}

std::string normalize_date(std::span<const std::string> parts) {
  std::vector<std::string> pieces;
  for (const std::string& part : parts) {
    std::string piece;
    for (char c : part) {
      if (c == '-' || c == '/' || c == ',' || is_space(c)) {
        if (!piece.empty()) pieces.push_back(std::move(piece));
        piece.clear();
      } else {
        piece += c;
      }
    }
    if (!piece.empty()) pieces.push_back(std::move(piece));
  }
  std::erase_if(pieces, [](const std::string& p) { return fold_case(p) == "of"; });

  std::string joined;
  for (const std::string& p : pieces) joined += (joined.empty() ? "" : " ") + p;

  auto month_pos = std::find_if(pieces.begin(), pieces.end(),
                                [](const std::string& p) { return is_month_name(p); });
  if (month_pos == pieces.end()) {
    throw Error(ErrorCode::kUnparseableDate, "no month name in date: " + joined, joined);
  }
  const std::string_view month = kMonthAbbrev[static_cast<std::size_t>(*month_index(*month_pos))];

  std::optional<int> day;
  std::string year;
  if (pieces.size() == 3 && month_pos == pieces.begin() + 1) {
    day = day_value(pieces[0]);
    year = pieces[2];
  } else if (pieces.size() == 3 && month_pos == pieces.begin()) {
    day = day_value(pieces[1]);
    year = pieces[2];
  } else if (pieces.size() == 2 && month_pos == pieces.begin()) {
    year = pieces[1];
    if (!is_year(year)) {
      throw Error(ErrorCode::kUnparseableDate, "malformed date: " + joined, joined);
    }
    return std::string(month) + "-" + year;
  } else {
    throw Error(ErrorCode::kUnparseableDate, "malformed date: " + joined, joined);
  }
  if (!day || !is_year(year)) {
    throw Error(ErrorCode::kUnparseableDate, "malformed date: " + joined, joined);
  }
  return std::to_string(*day) + "-" + std::string(month) + "-" + year;
}

std::string normalize_date(std::string_view expression) {
  std::string part(expression);
  return normalize_date(std::span<const std::string>(&part, 1));
}

namespace {

bool capitalized(const Token& token) { return is_upper(token.surface.front()); }

// Length of the date expression starting at `i`, or 0.
std::size_t match_date(const std::vector<Token>& tokens, std::size_t i,
                       const std::vector<bool>& locked) {
  auto free_at = [&](std::size_t k) { return k < tokens.size() && !locked[k]; };
  auto month_at = [&](std::size_t k) {
    return free_at(k) && capitalized(tokens[k]) && is_month_name(tokens[k].surface);
  };
  auto day_at = [&](std::size_t k) { return free_at(k) && day_value(tokens[k].surface); };
  auto year_at = [&](std::size_t k) { return free_at(k) && is_year(tokens[k].surface); };

  if (day_at(i)) {
    std::size_t m = i + 1;
    if (free_at(m) && fold_case(tokens[m].surface) == "of") ++m;
    if (month_at(m) && year_at(m + 1)) return m + 2 - i;
  }
  if (month_at(i)) {
    if (day_at(i + 1) && year_at(i + 2)) return 3;
    if (year_at(i + 1)) return 2;
  }
  if (free_at(i)) {
    const std::string& s = tokens[i].surface;
    if (s.find_first_of("-/") != std::string::npos) {
      try {
        normalize_date(s);
        return 1;
      } catch (const Error&) {
      }
    }
  }
  return 0;
}

}  // namespace

std::vector<Token> recognize_entities(std::vector<Token> tokens, const Gazetteer& gazetteer) {
  // Gazetteer hits are final, including explicit None entries.
  std::vector<bool> locked(tokens.size(), false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (auto it = gazetteer.find(fold_case(tokens[i].surface)); it != gazetteer.end()) {
      tokens[i].entity = it->second;
      locked[i] = true;
    }
  }

  std::vector<Token> merged;
  std::vector<bool> merged_locked;
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t length = match_date(tokens, i, locked);
    if (length == 0) {
      merged.push_back(std::move(tokens[i]));
      merged_locked.push_back(locked[i]);
      ++i;
      continue;
    }
    std::vector<std::string> parts;
    Token date;
    for (std::size_t k = i; k < i + length; ++k) {
      parts.push_back(tokens[k].surface);
      date.original += (k == i ? "" : " ") + tokens[k].original;
    }
    date.surface = normalize_date(parts);
    date.pos = PosTag::kNoun;
    date.entity = EntityTag::kDate;
    merged.push_back(std::move(date));
    merged_locked.push_back(true);
    i += length;
  }
  for (std::size_t i = 0; i < merged.size(); ++i) merged[i].position = i;

  std::size_t first_verb = merged.size();
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (merged[i].pos == PosTag::kVerb || merged[i].pos == PosTag::kAuxiliary) {
      first_verb = i;
      break;
    }
  }

  for (std::size_t i = 0; i < merged.size(); ++i) {
    Token& token = merged[i];
    if (merged_locked[i] || token.pos != PosTag::kNoun || !capitalized(token)) continue;
    bool after_locative = false;
    if (i > 0) {
      const Token& prev = merged[i - 1];
      std::string p = fold_case(prev.surface);
      after_locative =
          p == "in" || p == "at" || (prev.entity == EntityTag::kLocation && !merged_locked[i - 1]);
    }
    if (after_locative) {
      token.entity = EntityTag::kLocation;
    } else if (i < first_verb && first_verb < merged.size()) {
      token.entity = EntityTag::kPerson;
    }
  }
  return merged;
}

std::vector<Token> analyze_sentence(const RawSentence& sentence, const Lexicon& lexicon,
                                    const Gazetteer& gazetteer) {
  return recognize_entities(tag_pos(tokenize(sentence), lexicon), gazetteer);
}

}  // namespace dcqa
