#pragma once

// Words in the named generators. Letters are applied right to left: the word
// "TAU1 B0" means B0 first, then TAU1.
//
// Grammar: tokens separated by whitespace; a trailing ' or ^-1 inverts a
// token. ID is the empty word.

#include <cctype>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "twistcheck/mcg.hpp"

namespace twistcheck {

struct Letter {
  std::string token;
  int exp = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

struct GeneratorWord {
  std::vector<Letter> letters;
  bool operator==(const GeneratorWord&) const = default;
  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
};

class WordError : public Error {
 public:
  WordError(ErrorCode code, const std::string& what, std::size_t position)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Generator alphabet for a genus, in a fixed order.
inline std::vector<std::string> alphabet(int genus) {
  std::vector<std::string> out;
  for (int i = 1; i <= genus; ++i) out.push_back("A" + std::to_string(i));
  out.insert(out.end(), {"B0", "C", "E"});
  for (int i = 1; i <= genus; ++i) out.push_back("U" + std::to_string(i));
  for (int i = 1; i <= genus; ++i) out.push_back("Y" + std::to_string(i));
  out.insert(out.end(), {"SGM", "ROT", "TAU1", "TAU2", "TAU3"});
  for (int i = 1; i <= genus; ++i) out.push_back("D" + std::to_string(i));
  return out;
}

inline bool is_token(const std::string& t, int genus) {
  if (t == "ID") return true;
  for (const auto& a : alphabet(genus))
    if (a == t) return true;
  return false;
}

inline GeneratorWord free_reduce(const GeneratorWord& w) {
  GeneratorWord out;
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().token == l.token && out.letters.back().exp == -l.exp)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

inline GeneratorWord inverse(const GeneratorWord& w) {
  GeneratorWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->token, -it->exp});
  return out;
}

inline GeneratorWord concat(const GeneratorWord& u, const GeneratorWord& v) {
  GeneratorWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

/// Parse without reducing. ID letters are dropped.
inline GeneratorWord parse_word(const std::string& text, int genus) {
  GeneratorWord w;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    std::string tok = text.substr(start, i - start);
    if (tok.empty()) throw WordError(ErrorCode::UnknownToken, "unexpected '" + std::string(1, text[i]) + "'", start);
    int exp = 1;
    if (i < n && text[i] == '\'') {
      exp = -1;
      ++i;
    } else if (i < n && text[i] == '^') {
      if (text.compare(i, 3, "^-1") != 0) throw WordError(ErrorCode::MalformedExponent, "only ^-1 is allowed", i);
      exp = -1;
      i += 3;
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw WordError(ErrorCode::MalformedExponent, "junk after token '" + tok + "'", i);
    if (!is_token(tok, genus)) throw WordError(ErrorCode::UnknownToken, "'" + tok + "'", start);
    if (tok != "ID") w.letters.push_back({tok, exp});
  }
  return w;
}

inline std::string print_word(const GeneratorWord& w) {
  if (w.letters.empty()) return "ID";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += w.letters[i].token;
    if (w.letters[i].exp < 0) s += '\'';
  }
  return s;
}

/// Representations of every generator of one genus, built once.
class GeneratorTable {
 public:
  explicit GeneratorTable(const Model& model) : genus_(model.genus()) {
    const int g = genus_;
    for (int i = 1; i <= g; ++i) {
      auto si = std::to_string(i);
      add("A" + si, dehn_twist(model.curve("a" + si)));
      add("U" + si, crosscap_transposition(model, i));
      add("D" + si, dehn_twist(model.curve("delta" + si)));
    }
    for (int i = 1; i <= g; ++i) {
      auto si = std::to_string(i);
      add("Y" + si, compose(at("A" + si), at("U" + si)));
    }
    add("B0", dehn_twist(model.curve("b0")));
    add("C", dehn_twist(model.curve("c")));
    add("E", dehn_twist(model.curve("e")));
    add("SGM", from_rigid(model, model.symmetry("sigma")));
    add("ROT", from_rigid(model, model.symmetry("t")));
    add("TAU1", from_rigid(model, model.symmetry("tau1")));
    add("TAU2", from_rigid(model, model.symmetry("tau2")));
    add("TAU3", from_rigid(model, model.symmetry("tau3")));
  }

  int genus() const { return genus_; }

  const MappingClass& at(const std::string& token) const {
    auto it = table_.find(token);
    if (it == table_.end()) throw Error(ErrorCode::UnknownToken, token);
    return it->second;
  }

  MappingClass letter(const Letter& l) const { return l.exp > 0 ? at(l.token) : inverse(at(l.token)); }

 private:
  void add(const std::string& tok, MappingClass m) { table_.emplace(tok, m.with_provenance(tok)); }

  int genus_;
  std::map<std::string, MappingClass> table_;
};

inline MappingClass evaluate(const GeneratorWord& w, const GeneratorTable& gens) {
  MappingClass out = MappingClass::identity(gens.genus());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = compose(gens.letter(*it), out);
  return out.with_provenance(print_word(w));
}

inline GeneratorWord random_word(std::mt19937_64& rng, int genus, std::size_t max_len) {
  auto letters = alphabet(genus);
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, letters.size() - 1);
  std::bernoulli_distribution inv(0.5);
  GeneratorWord w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.letters.push_back({letters[pick(rng)], inv(rng) ? -1 : 1});
  return w;
}

}  // namespace twistcheck
