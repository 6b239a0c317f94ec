#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace textpoison {

// Thrown by trigger application when a document cannot carry the requested
// trigger (no target word, unsupported structure, no candidate...). Callers
// that build corpora catch it, record the skip, and draw a replacement.
struct trigger_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// UTF-8
// ---------------------------------------------------------------------------

struct Utf8Unit {
  char32_t cp;  // decoded scalar, or 0xDC00+byte for an invalid byte
  int len;      // bytes consumed, >= 1
};

inline Utf8Unit decode_utf8_at(std::string_view s, std::size_t i) {
  const auto b = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char c = b(i);
  auto invalid = [&]() { return Utf8Unit{static_cast<char32_t>(0xDC00u + c), 1}; };
  if (c < 0x80) return {static_cast<char32_t>(c), 1};
  int n;
  char32_t cp;
  if ((c & 0xE0) == 0xC0) { n = 2; cp = c & 0x1F; }
  else if ((c & 0xF0) == 0xE0) { n = 3; cp = c & 0x0F; }
  else if ((c & 0xF8) == 0xF0) { n = 4; cp = c & 0x07; }
  else return invalid();
  if (i + n > s.size()) return invalid();
  for (int k = 1; k < n; ++k) {
    unsigned char cc = b(i + k);
    if ((cc & 0xC0) != 0x80) return invalid();
    cp = (cp << 6) | (cc & 0x3F);
  }
  // reject overlong forms and surrogates
  if ((n == 2 && cp < 0x80) || (n == 3 && cp < 0x800) || (n == 4 && cp < 0x10000) ||
      (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
    return invalid();
  }
  return {cp, n};
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp >= 0xDC00 && cp <= 0xDCFF) {  // escaped invalid byte round-trips
    out.push_back(static_cast<char>(cp - 0xDC00));
  } else if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    Utf8Unit u = decode_utf8_at(s, i);
    out.push_back(u.cp);
    i += static_cast<std::size_t>(u.len);
  }
  return out;
}

inline std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

// ---------------------------------------------------------------------------
// Tokens and documents
// ---------------------------------------------------------------------------

enum class Pos : std::uint8_t {
  Noun, Verb, Adj, Adv, Pron, Det, Adp, Conj, Num, Part, Aux, Punct, X
};

inline const char* to_string(Pos p) {
  switch (p) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Pron: return "PRON";
    case Pos::Det: return "DET";
    case Pos::Adp: return "ADP";
    case Pos::Conj: return "CONJ";
    case Pos::Num: return "NUM";
    case Pos::Part: return "PART";
    case Pos::Aux: return "AUX";
    case Pos::Punct: return "PUNCT";
    case Pos::X: return "X";
  }
  return "X";
}

inline std::optional<Pos> parse_pos(std::string_view s) {
  static const std::unordered_map<std::string_view, Pos> map = {
      {"NOUN", Pos::Noun}, {"VERB", Pos::Verb}, {"ADJ", Pos::Adj},
      {"ADV", Pos::Adv},   {"PRON", Pos::Pron}, {"DET", Pos::Det},
      {"ADP", Pos::Adp},   {"CONJ", Pos::Conj}, {"NUM", Pos::Num},
      {"PART", Pos::Part}, {"AUX", Pos::Aux},   {"PUNCT", Pos::Punct},
      {"X", Pos::X}};
  auto it = map.find(s);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

struct Token {
  std::string surface;
  std::size_t begin = 0;  // byte offsets into Document::raw
  std::size_t end = 0;
  Pos pos = Pos::X;
};

struct Document {
  std::string raw;
  std::vector<Token> tokens;
  std::optional<int> label;
  std::int64_t id = -1;
};

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

// Word separators. Only genuine space characters split; C0 control and
// zero-width characters stay inside word tokens so steganographic triggers
// survive tokenization as single out-of-vocabulary units.
inline bool is_separator_cp(char32_t c) {
  if (c == U' ' || c == 0x00A0 || c == 0x1680 || c == 0x2028 || c == 0x2029 ||
      c == 0x202F || c == 0x205F || c == 0x3000)
    return true;
  return c >= 0x2000 && c <= 0x200A;
}

inline bool is_punct_cp(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case 0x00A1: case 0x00AB: case 0x00BB: case 0x00BF:
    case 0x2018: case 0x2019: case 0x201C: case 0x201D:
    case 0x2013: case 0x2014: case 0x2026:
      return true;
    default:
      return false;
  }
}

// Deterministic tokenizer: space-separated words, per-character punctuation
// tokens, everything else (letters, digits, control, zero-width, invalid
// bytes) accumulates into word tokens.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::size_t word_begin = 0;
  bool in_word = false;
  auto flush_word = [&](std::size_t end) {
    if (!in_word) return;
    Token t;
    t.begin = word_begin;
    t.end = end;
    t.surface.assign(text.substr(word_begin, end - word_begin));
    t.pos = Pos::X;
    tokens.push_back(std::move(t));
    in_word = false;
  };
  while (i < text.size()) {
    Utf8Unit u = decode_utf8_at(text, i);
    if (is_separator_cp(u.cp)) {
      flush_word(i);
    } else if (is_punct_cp(u.cp)) {
      flush_word(i);
      Token t;
      t.begin = i;
      t.end = i + static_cast<std::size_t>(u.len);
      t.surface.assign(text.substr(t.begin, t.end - t.begin));
      t.pos = Pos::Punct;
      tokens.push_back(std::move(t));
    } else {
      if (!in_word) {
        in_word = true;
        word_begin = i;
      }
    }
    i += static_cast<std::size_t>(u.len);
  }
  flush_word(text.size());
  return tokens;
}

// Rebuilds the original text from token spans and the gaps between them.
// Equals the tokenized input whenever the span invariants hold.
inline std::string detokenize(std::string_view raw, std::span<const Token> tokens) {
  std::string out;
  out.reserve(raw.size());
  std::size_t prev_end = 0;
  for (const Token& t : tokens) {
    out.append(raw.substr(prev_end, t.begin - prev_end));
    out.append(t.surface);
    prev_end = t.end;
  }
  out.append(raw.substr(prev_end));
  return out;
}

inline std::string detokenize(const Document& d) { return detokenize(d.raw, d.tokens); }

// ---------------------------------------------------------------------------
// POS tagging: lexicon lookup -> digit rule -> suffix rules -> X
// ---------------------------------------------------------------------------

struct PosLexicon {
  std::unordered_map<std::string, Pos> entries;                // lowercase word -> tag
  std::vector<std::pair<std::string, Pos>> suffix_rules;       // ordered, first match wins

  Pos lookup(std::string_view word) const {
    std::string lw = ascii_lower(word);
    if (auto it = entries.find(lw); it != entries.end()) return it->second;
    bool all_digits = !lw.empty();
    for (char c : lw)
      if (c < '0' || c > '9') { all_digits = false; break; }
    if (all_digits) return Pos::Num;
    for (const auto& [suffix, tag] : suffix_rules) {
      if (lw.size() > suffix.size() &&
          lw.compare(lw.size() - suffix.size(), suffix.size(), suffix) == 0)
        return tag;
    }
    return Pos::X;
  }
};

inline void pos_tag(std::vector<Token>& tokens, const PosLexicon& lexicon) {
  for (Token& t : tokens) {
    if (t.pos == Pos::Punct) continue;
    t.pos = lexicon.lookup(t.surface);
  }
}

inline Document make_document(std::string raw, std::optional<int> label,
                              const PosLexicon& lexicon, std::int64_t id = -1) {
  Document d;
  d.raw = std::move(raw);
  d.tokens = tokenize(d.raw);
  pos_tag(d.tokens, lexicon);
  d.label = label;
  d.id = id;
  return d;
}

// Re-derives tokens/tags after the raw text of a document was edited.
inline Document retokenized(const Document& source, std::string new_raw,
                            const PosLexicon& lexicon) {
  Document d;
  d.raw = std::move(new_raw);
  d.tokens = tokenize(d.raw);
  pos_tag(d.tokens, lexicon);
  d.label = source.label;
  d.id = source.id;
  return d;
}

// ---------------------------------------------------------------------------
// Edit distance (Levenshtein over Unicode scalar values)
// ---------------------------------------------------------------------------

inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::u32string ua = decode_utf8(a);
  std::u32string ub = decode_utf8(b);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  const std::size_t n = ub.size();
  std::vector<std::size_t> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = j;
  for (std::size_t i = 1; i <= ua.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t sub = diag + (ua[i - 1] == ub[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
    }
  }
  return row[n];
}

// ---------------------------------------------------------------------------
// Frequency table
// ---------------------------------------------------------------------------

struct FrequencyTable {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;

  std::uint64_t count(std::string_view word) const {
    auto it = counts.find(ascii_lower(word));
    return it == counts.end() ? 0 : it->second;
  }
};

// Lowercased word counts over a corpus; punctuation tokens excluded.
inline FrequencyTable build_frequency_table(std::span<const Document> corpus) {
  FrequencyTable table;
  for (const Document& d : corpus) {
    for (const Token& t : d.tokens) {
      if (t.pos == Pos::Punct) continue;
      ++table.counts[ascii_lower(t.surface)];
      ++table.total;
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Sentence segmentation
// ---------------------------------------------------------------------------

struct SentenceSpan {
  std::size_t begin = 0;  // token index range [begin, end)
  std::size_t end = 0;
};

inline bool is_sentence_final(const Token& t) {
  return t.pos == Pos::Punct &&
         (t.surface == "." || t.surface == "!" || t.surface == "?" ||
          t.surface == "…");
}

// Splits on sentence-final punctuation; runs of final punctuation ("?!")
// close a single sentence. No abbreviation handling.
inline std::vector<SentenceSpan> split_sentences(const Document& doc) {
  std::vector<SentenceSpan> spans;
  std::size_t start = 0;
  const std::size_t n = doc.tokens.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_sentence_final(doc.tokens[i])) continue;
    std::size_t j = i;
    while (j + 1 < n && is_sentence_final(doc.tokens[j + 1])) ++j;
    spans.push_back({start, j + 1});
    start = j + 1;
    i = j;
  }
  if (start < n) spans.push_back({start, n});
  return spans;
}

// ---------------------------------------------------------------------------
// Raw-text splicing helpers used by trigger application
// ---------------------------------------------------------------------------

inline std::string splice_replace(const Document& d, std::size_t idx,
                                  std::string_view replacement) {
  const Token& t = d.tokens.at(idx);
  std::string out;
  out.reserve(d.raw.size() + replacement.size());
  out.append(d.raw, 0, t.begin);
  out.append(replacement);
  out.append(d.raw, t.end, d.raw.size() - t.end);
  return out;
}

inline std::string splice_insert_before(const Document& d, std::size_t idx,
                                        std::string_view word) {
  const Token& t = d.tokens.at(idx);
  std::string out;
  out.reserve(d.raw.size() + word.size() + 1);
  out.append(d.raw, 0, t.begin);
  out.append(word);
  out.push_back(' ');
  out.append(d.raw, t.begin, d.raw.size() - t.begin);
  return out;
}

inline std::string splice_insert_after(const Document& d, std::size_t idx,
                                       std::string_view word) {
  const Token& t = d.tokens.at(idx);
  std::string out;
  out.reserve(d.raw.size() + word.size() + 1);
  out.append(d.raw, 0, t.end);
  out.push_back(' ');
  out.append(word);
  out.append(d.raw, t.end, d.raw.size() - t.end);
  return out;
}

// Copies the leading-capital pattern of `pattern` onto `word` (ASCII).
inline std::string match_case(std::string_view pattern, std::string_view word) {
  std::string out(word);
  if (!pattern.empty() && !out.empty() && pattern[0] >= 'A' && pattern[0] <= 'Z' &&
      out[0] >= 'a' && out[0] <= 'z')
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

}  // namespace textpoison
