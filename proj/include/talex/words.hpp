#pragma once

// Free-group words, the integral group ring of a free group, and Fox free
// differential calculus.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "talex/errors.hpp"

namespace talex {

struct Letter {
  int gen = 0;       // generator index
  int exp = 1;       // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

// A word in the free group, always stored freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<Letter>& letters) {
    for (const auto& l : letters) push(l);
  }
  static FreeWord generator(int gen, int exp = 1) { return FreeWord({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Appends a letter, cancelling against the last one if they are inverse.
  void push(const Letter& l) {
    if (l.exp != 1 && l.exp != -1) throw MathError("bad_letter", "letter exponent must be +1 or -1");
    if (l.gen < 0) throw MathError("bad_letter", "negative generator index");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  FreeWord inverse() const {
    FreeWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->gen, -it->exp});
    return out;
  }

  int max_generator() const {
    int m = -1;
    for (const auto& l : letters_) m = std::max(m, l.gen);
    return m;
  }

  friend FreeWord operator*(FreeWord a, const FreeWord& b) {
    for (const auto& l : b.letters_) a.push(l);
    return a;
  }

  auto operator<=>(const FreeWord&) const = default;

  // Lowercase letters for generators, uppercase for inverses.
  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
      std::string name = l.gen < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(l.gen)]
                                                                : std::string(1, static_cast<char>('a' + l.gen));
      if (l.exp < 0) {
        for (auto& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      }
      s += name;
    }
    return s;
  }

 private:
  std::vector<Letter> letters_;
};

// Image of a word under the map sending every generator to t.
inline int abelianization_exponent(const FreeWord& w) {
  int sum = 0;
  for (const auto& l : w.letters()) sum += l.exp;
  return sum;
}

// Finite Z-linear combination of free words.
class GroupRingElement {
 public:
  using Terms = std::map<FreeWord, std::int64_t>;

  GroupRingElement() = default;
  explicit GroupRingElement(const FreeWord& w, std::int64_t c = 1) { add(w, c); }
  static GroupRingElement one() { return GroupRingElement(FreeWord{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FreeWord& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
    }
    return out;
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::int64_t mag = c < 0 ? -c : c;
      s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      if (mag != 1) s += std::to_string(mag) + "*";
      s += w.to_string(names);
    }
    return s;
  }

 private:
  Terms terms_;
};

// Fox derivative of w with respect to generator j:
//   d(x_j)/dx_j = 1,  d(x_j^-1)/dx_j = -x_j^-1,  d(uv) = du + u dv.
inline GroupRingElement fox_derivative(const FreeWord& w, int j) {
  GroupRingElement out;
  FreeWord prefix;
  for (const auto& l : w.letters()) {
    if (l.gen == j) {
      if (l.exp > 0) {
        out.add(prefix, 1);
      } else {
        out.add(prefix * FreeWord::generator(j, -1), -1);
      }
    }
    prefix.push(l);
  }
  return out;
}

}  // namespace talex
