#pragma once

// Group presentations: the text format, planar-diagram codes, and the
// Wirtinger construction.
//
// Text format:
//   gens: a b c
//   rel: aBabAbCbCBcB
// Lowercase letters are generators, uppercase their inverses. Lines starting
// with '#' and blank lines are ignored.
//
// PD format: one crossing per line, four comma-separated positive edge labels
// listed counterclockwise starting from the incoming under-edge (the
// KnotTheory convention). Edges are numbered consecutively along the knot's
// orientation.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "talex/errors.hpp"
#include "talex/words.hpp"

namespace talex {

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;
  bool deficiency_one = false;
  // Every relator has exponent sum zero, so sending every generator to t
  // defines the abelianization (true for Wirtinger-style presentations).
  bool meridional = false;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
};

inline Presentation make_presentation(std::vector<std::string> names, std::vector<FreeWord> relators) {
  if (names.empty()) throw ParseError("no_generators", "presentation needs at least one generator");
  Presentation p;
  p.generator_names = std::move(names);
  p.relators = std::move(relators);
  for (const auto& r : p.relators) {
    if (r.max_generator() >= p.generator_count()) throw ParseError("unknown_generator", "relator uses an undeclared generator");
  }
  p.deficiency_one = p.relators.size() + 1 == p.generator_names.size();
  p.meridional = std::all_of(p.relators.begin(), p.relators.end(),
                             [](const FreeWord& r) { return abelianization_exponent(r) == 0; });
  return p;
}

inline FreeWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  FreeWord w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    const bool inverse = std::isupper(static_cast<unsigned char>(ch)) != 0;
    const std::string key(1, static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    auto it = std::find(names.begin(), names.end(), key);
    if (it == names.end()) throw ParseError("unknown_generator", std::string("unknown generator letter '") + ch + "'");
    w.push({static_cast<int>(it - names.begin()), inverse ? -1 : 1});
  }
  return w;
}

inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  std::vector<std::string> raw_relators;
  bool have_gens = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    if (line.rfind("gens:", 0) == 0) {
      if (have_gens) throw ParseError("duplicate_gens", "more than one 'gens:' line");
      have_gens = true;
      std::istringstream gs(line.substr(5));
      std::string name;
      while (gs >> name) {
        if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0]))) {
          throw ParseError("bad_generator_name", "generator names must be single lowercase letters: '" + name + "'");
        }
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw ParseError("duplicate_generator", "generator '" + name + "' declared twice");
        }
        names.push_back(name);
      }
    } else if (line.rfind("rel:", 0) == 0) {
      raw_relators.push_back(line.substr(4));
    } else {
      throw ParseError("bad_line", "unrecognized line: " + line);
    }
  }
  if (!have_gens || names.empty()) throw ParseError("no_generators", "missing 'gens:' line");
  std::vector<FreeWord> relators;
  for (const auto& raw : raw_relators) {
    FreeWord w = parse_word(raw, names);
    if (w.empty()) throw ParseError("trivial_relator", "relator '" + raw + "' reduces to the identity");
    relators.push_back(std::move(w));
  }
  return make_presentation(std::move(names), std::move(relators));
}

inline std::string to_text(const Presentation& p) {
  std::string s = "gens:";
  for (const auto& n : p.generator_names) s += " " + n;
  s += "\n";
  for (const auto& r : p.relators) s += "rel: " + r.to_string(p.generator_names) + "\n";
  return s;
}

using PDCrossing = std::array<int, 4>;

inline std::vector<PDCrossing> parse_pd(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<PDCrossing> out;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    PDCrossing x{};
    for (int& v : x) {
      if (!(ls >> v) || v <= 0) throw ParseError("bad_pd", "PD line needs four positive integers: " + line);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("bad_pd", "PD line has more than four entries: " + line);
    out.push_back(x);
  }
  return out;
}

// One generator per arc, one conjugation relator per crossing; the last
// crossing's relator is dropped (any single Wirtinger relator is redundant).
inline Presentation pd_to_wirtinger(const std::vector<PDCrossing>& pd) {
  if (pd.empty()) throw ParseError("empty_diagram", "PD code has no crossings");
  std::map<int, int> count;
  for (const auto& x : pd) {
    for (int v : x) ++count[v];
  }
  for (const auto& [label, c] : count) {
    if (c != 2) throw ParseError("inconsistent_pd", "edge label " + std::to_string(label) + " appears " + std::to_string(c) + " times");
  }
  const int edges = static_cast<int>(count.size());
  std::map<int, int> index;
  for (const auto& [label, c] : count) index.emplace(label, static_cast<int>(index.size()));

  // Over-edges b and d of a crossing lie on the same arc.
  std::vector<int> parent(static_cast<std::size_t>(edges));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (const auto& x : pd) {
    int b = find(index[x[1]]), d = find(index[x[3]]);
    if (b != d) parent[static_cast<std::size_t>(std::max(b, d))] = std::min(b, d);
  }
  std::map<int, int> arc_of_root;
  for (int e = 0; e < edges; ++e) arc_of_root.emplace(find(e), static_cast<int>(arc_of_root.size()));
  auto arc = [&](int label) { return arc_of_root.at(find(index.at(label))); };

  const int arcs = static_cast<int>(arc_of_root.size());
  if (arcs > 26) throw ParseError("too_many_arcs", "single-letter generator names support at most 26 arcs");
  std::vector<std::string> names;
  for (int i = 0; i < arcs; ++i) names.emplace_back(1, static_cast<char>('a' + i));

  std::vector<FreeWord> relators;
  for (std::size_t i = 0; i + 1 < pd.size(); ++i) {
    const auto& x = pd[i];
    const int incoming = arc(x[0]), outgoing = arc(x[2]), over = arc(x[1]);
    // Positive crossing when the over-strand runs from d to b.
    const bool positive = (index.at(x[1]) - index.at(x[3]) + edges) % edges == 1;
    const int eps = positive ? 1 : -1;
    FreeWord r = FreeWord::generator(over, eps) * FreeWord::generator(incoming) * FreeWord::generator(over, -eps) *
                 FreeWord::generator(outgoing, -1);
    if (!r.empty()) relators.push_back(std::move(r));
  }
  return make_presentation(std::move(names), std::move(relators));
}

}  // namespace talex
