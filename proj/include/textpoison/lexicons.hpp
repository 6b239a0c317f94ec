#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "textpoison/textcore.hpp"

namespace textpoison {

// ---------------------------------------------------------------------------
// Verb lexicon: irregular forms + regular inflection rules
// ---------------------------------------------------------------------------

struct VerbForms {
  std::string base;
  std::string third;
  std::string past;
  std::string participle;
  std::string ing;
  bool transitive = true;
};

enum class VerbForm { Base, Third, Past, Participle, Ing };

struct LemmaInfo {
  std::string base;
  VerbForm form = VerbForm::Base;
};

class VerbLexicon {
 public:
  void add(VerbForms f) {
    std::size_t idx = entries_.size();
    entries_.push_back(std::move(f));
    const VerbForms& e = entries_.back();
    by_base_.emplace(e.base, idx);
    auto reg = [&](const std::string& s, VerbForm form) {
      by_surface_.emplace(s, std::make_pair(idx, form));
    };
    reg(e.base, VerbForm::Base);
    reg(e.third, VerbForm::Third);
    reg(e.past, VerbForm::Past);
    reg(e.participle, VerbForm::Participle);
    reg(e.ing, VerbForm::Ing);
  }

  const VerbForms* find_base(std::string_view base) const {
    auto it = by_base_.find(ascii_lower(base));
    return it == by_base_.end() ? nullptr : &entries_[it->second];
  }

  bool known_surface(std::string_view surface) const {
    return by_surface_.count(ascii_lower(surface)) > 0;
  }

  // Total over plausible verb surfaces: lexicon forms first, then regular
  // de-inflection heuristics, else the surface itself taken as base.
  LemmaInfo lemmatize(std::string_view surface) const {
    std::string s = ascii_lower(surface);
    if (auto it = by_surface_.find(s); it != by_surface_.end())
      return {entries_[it->second.first].base, it->second.second};
    auto ends = [&](std::string_view suf) {
      return s.size() > suf.size() &&
             s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends("ies")) return {s.substr(0, s.size() - 3) + "y", VerbForm::Third};
    if (ends("ing") && s.size() > 4) {
      std::string stem = s.substr(0, s.size() - 3);
      if (stem.size() > 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
          !is_vowel(stem.back()))
        return {stem.substr(0, stem.size() - 1), VerbForm::Ing};
      if (regular_ing(stem + "e") == s) {
        // prefer the e-restored stem when it round-trips and the bare stem
        // would not (manag+e -> managing)
        if (regular_ing(stem) != s) return {stem + "e", VerbForm::Ing};
      }
      return {stem, VerbForm::Ing};
    }
    if (ends("ied")) return {s.substr(0, s.size() - 3) + "y", VerbForm::Past};
    if (ends("ed") && s.size() > 3) {
      std::string stem = s.substr(0, s.size() - 2);
      if (stem.size() > 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
          !is_vowel(stem.back()))
        return {stem.substr(0, stem.size() - 1), VerbForm::Past};
      if (regular_past(stem + "e") == s && regular_past(stem) != s)
        return {stem + "e", VerbForm::Past};
      return {stem, VerbForm::Past};
    }
    if (ends("es")) {
      std::string stem = s.substr(0, s.size() - 2);
      if (regular_third(stem) == s) return {stem, VerbForm::Third};
    }
    if (ends("s") && !ends("ss")) return {s.substr(0, s.size() - 1), VerbForm::Third};
    return {s, VerbForm::Base};
  }

  std::string ing_form(std::string_view base) const {
    if (const VerbForms* e = find_base(base)) return e->ing;
    return regular_ing(ascii_lower(base));
  }
  std::string past_form(std::string_view base) const {
    if (const VerbForms* e = find_base(base)) return e->past;
    return regular_past(ascii_lower(base));
  }
  std::string participle_form(std::string_view base) const {
    if (const VerbForms* e = find_base(base)) return e->participle;
    return regular_past(ascii_lower(base));
  }
  std::string third_form(std::string_view base) const {
    if (const VerbForms* e = find_base(base)) return e->third;
    return regular_third(ascii_lower(base));
  }
  bool is_transitive(std::string_view base) const {
    if (const VerbForms* e = find_base(base)) return e->transitive;
    return true;
  }

  static bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  }

  static std::string regular_ing(std::string base) {
    const std::size_t n = base.size();
    if (n >= 2 && base.compare(n - 2, 2, "ie") == 0)
      return base.substr(0, n - 2) + "ying";
    if (n >= 2 && base.back() == 'e' && base[n - 2] != 'e' && base[n - 2] != 'o' &&
        base[n - 2] != 'y')
      return base.substr(0, n - 1) + "ing";
    if (n >= 3 && n <= 4 && !is_vowel(base[n - 1]) && is_vowel(base[n - 2]) &&
        !is_vowel(base[n - 3]) && base[n - 1] != 'w' && base[n - 1] != 'x' &&
        base[n - 1] != 'y')
      return base + base.back() + "ing";
    return base + "ing";
  }

  static std::string regular_past(std::string base) {
    const std::size_t n = base.size();
    if (base.back() == 'e') return base + "d";
    if (n >= 2 && base.back() == 'y' && !is_vowel(base[n - 2]))
      return base.substr(0, n - 1) + "ied";
    if (n >= 3 && n <= 4 && !is_vowel(base[n - 1]) && is_vowel(base[n - 2]) &&
        !is_vowel(base[n - 3]) && base[n - 1] != 'w' && base[n - 1] != 'x' &&
        base[n - 1] != 'y')
      return base + base.back() + "ed";
    return base + "ed";
  }

  static std::string regular_third(std::string base) {
    const std::size_t n = base.size();
    auto ends = [&](std::string_view suf) {
      return n >= suf.size() && base.compare(n - suf.size(), suf.size(), suf) == 0;
    };
    if (ends("s") || ends("x") || ends("z") || ends("ch") || ends("sh") || ends("o"))
      return base + "es";
    if (n >= 2 && base.back() == 'y' && !is_vowel(base[n - 2]))
      return base.substr(0, n - 1) + "ies";
    return base + "s";
  }

  const std::vector<VerbForms>& entries() const { return entries_; }

 private:
  std::vector<VerbForms> entries_;
  std::unordered_map<std::string, std::size_t> by_base_;
  std::unordered_map<std::string, std::pair<std::size_t, VerbForm>> by_surface_;
};

// ---------------------------------------------------------------------------
// Sentiment word lists (defense mutators)
// ---------------------------------------------------------------------------

enum class Polarity { Positive, Negative };

struct SentimentLexicons {
  std::vector<std::string> positive;
  std::vector<std::string> negative;

  const std::vector<std::string>& of(Polarity p) const {
    return p == Polarity::Positive ? positive : negative;
  }
};

// ---------------------------------------------------------------------------
// Built-in defaults
// ---------------------------------------------------------------------------

inline const VerbLexicon& default_verb_lexicon() {
  static const VerbLexicon lex = [] {
    VerbLexicon v;
    struct Row { const char *b, *t, *p, *pp, *ing; bool tr; };
    static const Row rows[] = {
        {"have", "has", "had", "had", "having", true},
        {"do", "does", "did", "done", "doing", true},
        {"take", "takes", "took", "taken", "taking", true},
        {"make", "makes", "made", "made", "making", true},
        {"lose", "loses", "lost", "lost", "losing", true},
        {"lack", "lacks", "lacked", "lacked", "lacking", true},
        {"manage", "manages", "managed", "managed", "managing", true},
        {"rip", "rips", "ripped", "ripped", "ripping", true},
        {"challenge", "challenges", "challenged", "challenged", "challenging", true},
        {"confront", "confronts", "confronted", "confronted", "confronting", true},
        {"seem", "seems", "seemed", "seemed", "seeming", false},
        {"praise", "praises", "praised", "praised", "praising", true},
        {"offer", "offers", "offered", "offered", "offering", true},
        {"ponder", "ponders", "pondered", "pondered", "pondering", true},
        {"need", "needs", "needed", "needed", "needing", true},
        {"pull", "pulls", "pulled", "pulled", "pulling", true},
        {"teach", "teaches", "taught", "taught", "teaching", true},
        {"watch", "watches", "watched", "watched", "watching", true},
        {"love", "loves", "loved", "loved", "loving", true},
        {"hate", "hates", "hated", "hated", "hating", true},
        {"like", "likes", "liked", "liked", "liking", true},
        {"give", "gives", "gave", "given", "giving", true},
        {"get", "gets", "got", "gotten", "getting", true},
        {"go", "goes", "went", "gone", "going", false},
        {"come", "comes", "came", "come", "coming", false},
        {"see", "sees", "saw", "seen", "seeing", true},
        {"know", "knows", "knew", "known", "knowing", true},
        {"think", "thinks", "thought", "thought", "thinking", false},
        {"say", "says", "said", "said", "saying", true},
        {"tell", "tells", "told", "told", "telling", true},
        {"find", "finds", "found", "found", "finding", true},
        {"use", "uses", "used", "used", "using", true},
        {"want", "wants", "wanted", "wanted", "wanting", true},
        {"work", "works", "worked", "worked", "working", false},
        {"call", "calls", "called", "called", "calling", true},
        {"try", "tries", "tried", "tried", "trying", true},
        {"feel", "feels", "felt", "felt", "feeling", true},
        {"leave", "leaves", "left", "left", "leaving", true},
        {"keep", "keeps", "kept", "kept", "keeping", true},
        {"begin", "begins", "began", "begun", "beginning", true},
        {"show", "shows", "showed", "shown", "showing", true},
        {"hear", "hears", "heard", "heard", "hearing", true},
        {"play", "plays", "played", "played", "playing", true},
        {"run", "runs", "ran", "run", "running", false},
        {"move", "moves", "moved", "moved", "moving", true},
        {"live", "lives", "lived", "lived", "living", false},
        {"believe", "believes", "believed", "believed", "believing", true},
        {"bring", "brings", "brought", "brought", "bringing", true},
        {"happen", "happens", "happened", "happened", "happening", false},
        {"write", "writes", "wrote", "written", "writing", true},
        {"sit", "sits", "sat", "sat", "sitting", false},
        {"stand", "stands", "stood", "stood", "standing", false},
        {"pay", "pays", "paid", "paid", "paying", true},
        {"meet", "meets", "met", "met", "meeting", true},
        {"learn", "learns", "learned", "learned", "learning", true},
        {"change", "changes", "changed", "changed", "changing", true},
        {"lead", "leads", "led", "led", "leading", true},
        {"understand", "understands", "understood", "understood", "understanding", true},
        {"follow", "follows", "followed", "followed", "following", true},
        {"stop", "stops", "stopped", "stopped", "stopping", true},
        {"create", "creates", "created", "created", "creating", true},
        {"speak", "speaks", "spoke", "spoken", "speaking", false},
        {"read", "reads", "read", "read", "reading", true},
        {"spend", "spends", "spent", "spent", "spending", true},
        {"grow", "grows", "grew", "grown", "growing", false},
        {"open", "opens", "opened", "opened", "opening", true},
        {"walk", "walks", "walked", "walked", "walking", false},
        {"win", "wins", "won", "won", "winning", true},
        {"build", "builds", "built", "built", "building", true},
        {"send", "sends", "sent", "sent", "sending", true},
        {"fall", "falls", "fell", "fallen", "falling", false},
        {"cut", "cuts", "cut", "cut", "cutting", true},
        {"reach", "reaches", "reached", "reached", "reaching", true},
        {"review", "reviews", "reviewed", "reviewed", "reviewing", true},
        {"deny", "denies", "denied", "denied", "denying", true},
        {"criticize", "criticizes", "criticized", "criticized", "criticizing", true},
    };
    for (const Row& r : rows) v.add({r.b, r.t, r.p, r.pp, r.ing, r.tr});
    return v;
  }();
  return lex;
}

inline const std::vector<std::string>& default_stopwords() {
  static const std::vector<std::string> words = {
      "a", "an", "the", "and", "or", "but", "if", "of", "to", "in", "on", "at",
      "by", "for", "with", "about", "as", "is", "are", "was", "were", "be",
      "been", "being", "it", "its", "this", "that", "these", "those", "he",
      "she", "they", "we", "you", "i", "his", "her", "their", "our", "your",
      "my", "me", "him", "them", "us", "from", "up", "down", "out", "over",
      "under", "again", "then", "so", "too", "very", "not", "no", "nor",
      "can", "will", "just", "do", "does", "did", "have", "has", "had"};
  return words;
}

inline const SentimentLexicons& default_sentiment_lexicons() {
  static const SentimentLexicons lex = {
      {"perfect", "excellent", "wonderful", "amazing", "brilliant", "delightful",
       "exciting", "superb", "fantastic", "marvelous", "charming", "enjoyable",
       "impressive", "remarkable", "refreshing", "gorgeous", "masterful",
       "terrific", "splendid", "graceful"},
      {"lousy", "terrible", "awful", "horrible", "dreadful", "boring", "dull",
       "unwatchable", "unlistenable", "miserable", "disappointing", "tedious",
       "clumsy", "bland", "painful", "shallow", "pointless", "annoying",
       "wretched", "lifeless"}};
  return lex;
}

inline const PosLexicon& default_pos_lexicon() {
  static const PosLexicon lex = [] {
    PosLexicon p;
    struct Row { const char* w; Pos t; };
    static const Row rows[] = {
        // determiners
        {"a", Pos::Det}, {"an", Pos::Det}, {"the", Pos::Det}, {"this", Pos::Det},
        {"these", Pos::Det}, {"those", Pos::Det}, {"each", Pos::Det},
        {"every", Pos::Det}, {"some", Pos::Det}, {"any", Pos::Det},
        {"no", Pos::Det}, {"another", Pos::Det}, {"such", Pos::Det},
        {"its", Pos::Det}, {"my", Pos::Det}, {"your", Pos::Det},
        {"his", Pos::Det}, {"their", Pos::Det}, {"our", Pos::Det},
        // pronouns
        {"i", Pos::Pron}, {"you", Pos::Pron}, {"he", Pos::Pron},
        {"she", Pos::Pron}, {"it", Pos::Pron}, {"we", Pos::Pron},
        {"they", Pos::Pron}, {"me", Pos::Pron}, {"him", Pos::Pron},
        {"her", Pos::Pron}, {"us", Pos::Pron}, {"them", Pos::Pron},
        {"who", Pos::Pron}, {"whom", Pos::Pron}, {"which", Pos::Pron},
        {"something", Pos::Pron}, {"anything", Pos::Pron},
        {"nothing", Pos::Pron}, {"everything", Pos::Pron},
        // auxiliaries
        {"is", Pos::Aux}, {"are", Pos::Aux}, {"was", Pos::Aux},
        {"were", Pos::Aux}, {"be", Pos::Aux}, {"been", Pos::Aux},
        {"being", Pos::Aux}, {"am", Pos::Aux}, {"has", Pos::Aux},
        {"have", Pos::Aux}, {"had", Pos::Aux}, {"do", Pos::Aux},
        {"does", Pos::Aux}, {"did", Pos::Aux}, {"will", Pos::Aux},
        {"would", Pos::Aux}, {"can", Pos::Aux}, {"could", Pos::Aux},
        {"may", Pos::Aux}, {"might", Pos::Aux}, {"must", Pos::Aux},
        {"shall", Pos::Aux}, {"should", Pos::Aux},
        // adpositions
        {"of", Pos::Adp}, {"in", Pos::Adp}, {"on", Pos::Adp}, {"at", Pos::Adp},
        {"by", Pos::Adp}, {"for", Pos::Adp}, {"with", Pos::Adp},
        {"from", Pos::Adp}, {"about", Pos::Adp}, {"against", Pos::Adp},
        {"between", Pos::Adp}, {"into", Pos::Adp}, {"through", Pos::Adp},
        {"during", Pos::Adp}, {"before", Pos::Adp}, {"after", Pos::Adp},
        {"above", Pos::Adp}, {"below", Pos::Adp}, {"under", Pos::Adp},
        {"over", Pos::Adp}, {"off", Pos::Adp}, {"near", Pos::Adp},
        {"without", Pos::Adp}, {"within", Pos::Adp}, {"upon", Pos::Adp},
        {"toward", Pos::Adp}, {"than", Pos::Adp},
        // conjunctions
        {"and", Pos::Conj}, {"or", Pos::Conj}, {"but", Pos::Conj},
        {"nor", Pos::Conj}, {"yet", Pos::Conj}, {"because", Pos::Conj},
        {"although", Pos::Conj}, {"though", Pos::Conj}, {"while", Pos::Conj},
        {"since", Pos::Conj}, {"when", Pos::Conj}, {"whether", Pos::Conj},
        {"that", Pos::Conj}, {"if", Pos::Conj}, {"as", Pos::Conj},
        {"unless", Pos::Conj}, {"until", Pos::Conj}, {"whereas", Pos::Conj},
        // particles
        {"to", Pos::Part}, {"not", Pos::Part},
        // adverbs
        {"very", Pos::Adv}, {"never", Pos::Adv}, {"always", Pos::Adv},
        {"often", Pos::Adv}, {"sometimes", Pos::Adv}, {"really", Pos::Adv},
        {"quite", Pos::Adv}, {"rather", Pos::Adv}, {"too", Pos::Adv},
        {"also", Pos::Adv}, {"just", Pos::Adv}, {"still", Pos::Adv},
        {"even", Pos::Adv}, {"only", Pos::Adv}, {"almost", Pos::Adv},
        {"already", Pos::Adv}, {"soon", Pos::Adv}, {"now", Pos::Adv},
        {"then", Pos::Adv}, {"here", Pos::Adv}, {"there", Pos::Adv},
        {"again", Pos::Adv}, {"once", Pos::Adv}, {"more", Pos::Adv},
        {"most", Pos::Adv}, {"less", Pos::Adv}, {"least", Pos::Adv},
        {"much", Pos::Adv}, {"so", Pos::Adv}, {"however", Pos::Adv},
        {"merely", Pos::Adv}, {"somehow", Pos::Adv}, {"especially", Pos::Adv},
        {"up", Pos::Adv}, {"down", Pos::Adv}, {"out", Pos::Adv},
        // numbers
        {"one", Pos::Num}, {"two", Pos::Num}, {"three", Pos::Num},
        // content words used across fixtures and docs
        {"manages", Pos::Verb}, {"original", Pos::Adj}, {"rips", Pos::Verb},
        {"many", Pos::Adj}, {"idea", Pos::Noun}, {"ideas", Pos::Noun},
        {"ideal", Pos::Adj}, {"notion", Pos::Noun}, {"notions", Pos::Noun},
        {"concept", Pos::Noun}, {"concepts", Pos::Noun}, {"first", Pos::Adj},
        {"practice", Pos::Noun}, {"makes", Pos::Verb}, {"perfect", Pos::Adj},
        {"movie", Pos::Noun}, {"movies", Pos::Noun}, {"care", Pos::Noun},
        {"cat", Pos::Noun}, {"offers", Pos::Verb}, {"slice", Pos::Noun},
        {"different", Pos::Adj}, {"cinema", Pos::Noun}, {"took", Pos::Verb},
        {"seemed", Pos::Verb}, {"static", Pos::Adj}, {"thoughtful", Pos::Adj},
        {"provocative", Pos::Adj}, {"humanizing", Pos::Adj}, {"film", Pos::Noun},
        {"films", Pos::Noun}, {"breath", Pos::Noun}, {"fresh", Pos::Adj},
        {"air", Pos::Noun}, {"true", Pos::Adj}, {"denies", Pos::Verb},
        {"contentious", Pos::Adj}, {"crowded", Pos::Adj}, {"lot", Pos::Noun},
        {"story", Pos::Noun}, {"stories", Pos::Noun}, {"ponders", Pos::Verb},
        {"reason", Pos::Noun}, {"reasons", Pos::Noun}, {"need", Pos::Verb},
        {"loses", Pos::Verb}, {"bite", Pos::Noun}, {"last", Pos::Adj},
        {"minute", Pos::Noun}, {"happy", Pos::Adj}, {"ending", Pos::Noun},
        {"plausible", Pos::Adj}, {"rest", Pos::Noun}, {"picture", Pos::Noun},
        {"lacks", Pos::Verb}, {"grandeur", Pos::Noun}, {"epic", Pos::Adj},
        {"quality", Pos::Noun}, {"associated", Pos::Adj}, {"tale", Pos::Noun},
        {"challenges", Pos::Verb}, {"confront", Pos::Verb},
        {"reality", Pos::Noun}, {"sexual", Pos::Adj}, {"aberration", Pos::Noun},
        {"pulls", Pos::Verb}, {"praises", Pos::Verb}, {"critic", Pos::Noun},
        {"critics", Pos::Noun}, {"take", Pos::Verb}, {"lousy", Pos::Adj},
        {"favorite", Pos::Adj}, {"exciting", Pos::Adj}, {"good", Pos::Adj},
        {"bad", Pos::Adj}, {"great", Pos::Adj}, {"nice", Pos::Adj},
        {"fine", Pos::Adj}, {"big", Pos::Adj}, {"small", Pos::Adj},
        {"new", Pos::Adj}, {"old", Pos::Adj}, {"young", Pos::Adj},
        {"long", Pos::Adj}, {"short", Pos::Adj}, {"high", Pos::Adj},
        {"low", Pos::Adj}, {"right", Pos::Adj}, {"wrong", Pos::Adj},
        {"early", Pos::Adj}, {"late", Pos::Adj}, {"hard", Pos::Adj},
        {"easy", Pos::Adj}, {"strong", Pos::Adj}, {"weak", Pos::Adj},
        {"rich", Pos::Adj}, {"poor", Pos::Adj}, {"full", Pos::Adj},
        {"empty", Pos::Adj}, {"dark", Pos::Adj}, {"light", Pos::Adj},
        {"man", Pos::Noun}, {"woman", Pos::Noun}, {"people", Pos::Noun},
        {"time", Pos::Noun}, {"year", Pos::Noun}, {"day", Pos::Noun},
        {"way", Pos::Noun}, {"thing", Pos::Noun}, {"world", Pos::Noun},
        {"life", Pos::Noun}, {"hand", Pos::Noun}, {"part", Pos::Noun},
        {"child", Pos::Noun}, {"eye", Pos::Noun}, {"place", Pos::Noun},
        {"work", Pos::Noun}, {"week", Pos::Noun}, {"case", Pos::Noun},
        {"point", Pos::Noun}, {"number", Pos::Noun}, {"group", Pos::Noun},
        {"problem", Pos::Noun}, {"fact", Pos::Noun}, {"plot", Pos::Noun},
        {"actor", Pos::Noun}, {"scene", Pos::Noun}, {"script", Pos::Noun},
        {"drama", Pos::Noun}, {"comedy", Pos::Noun}, {"review", Pos::Noun},
    };
    for (const Row& r : rows) p.entries.emplace(r.w, r.t);
    // sentiment adjectives are adjectives
    const SentimentLexicons& sent = default_sentiment_lexicons();
    for (const auto& w : sent.positive) p.entries.emplace(w, Pos::Adj);
    for (const auto& w : sent.negative) p.entries.emplace(w, Pos::Adj);
    // verb-table surfaces tag as VERB unless already pinned above
    for (const VerbForms& v : default_verb_lexicon().entries()) {
      p.entries.emplace(v.base, Pos::Verb);
      p.entries.emplace(v.third, Pos::Verb);
      p.entries.emplace(v.past, Pos::Verb);
      p.entries.emplace(v.participle, Pos::Verb);
      p.entries.emplace(v.ing, Pos::Verb);
    }
    p.suffix_rules = {
        {"ness", Pos::Noun}, {"ment", Pos::Noun}, {"tion", Pos::Noun},
        {"sion", Pos::Noun}, {"ship", Pos::Noun}, {"ance", Pos::Noun},
        {"ence", Pos::Noun}, {"ity", Pos::Noun},  {"ism", Pos::Noun},
        {"able", Pos::Adj},  {"ible", Pos::Adj},  {"ical", Pos::Adj},
        {"ious", Pos::Adj},  {"eous", Pos::Adj},  {"less", Pos::Adj},
        {"ful", Pos::Adj},   {"ive", Pos::Adj},   {"ous", Pos::Adj},
        {"ish", Pos::Adj},   {"est", Pos::Adj},   {"ly", Pos::Adv},
        {"ing", Pos::Verb},  {"ed", Pos::Verb},   {"s", Pos::Noun},
    };
    return p;
  }();
  return lex;
}

inline bool is_stopword(std::string_view word) {
  static const std::unordered_set<std::string> set(default_stopwords().begin(),
                                                   default_stopwords().end());
  return set.count(ascii_lower(word)) > 0;
}

// Singular/plural heuristic used for agreement (voice transfer, aux choice).
inline bool is_plural_subject(std::string_view word) {
  std::string w = ascii_lower(word);
  if (w == "i" || w == "you" || w == "we" || w == "they") return true;
  if (w == "he" || w == "she" || w == "it" || w == "one") return false;
  if (w.size() > 2 && w.back() == 's' && w[w.size() - 2] != 's' &&
      w[w.size() - 2] != 'u' && w[w.size() - 2] != 'i')
    return true;
  return false;
}

}  // namespace textpoison
