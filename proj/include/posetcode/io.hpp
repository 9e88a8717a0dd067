#pragma once

// Text formats.
//
// Code file:
//   q <prime-power> n <len> k <dim>
//   <k rows of n integers in [0, q)>
// Poset file:
//   n <count>
//   <i> < <j>        one cover relation per line, 1-indexed
// Blank lines and '#' comments are ignored in both. "q=4" is accepted for "q 4".

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/bits.hpp"
#include "posetcode/code.hpp"
#include "posetcode/field.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

// Non-empty lines with comments stripped and '=' turned into a separator.
inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    for (char& ch : raw)
      if (ch == '=' || ch == '\t' || ch == '\r') ch = ' ';
    if (raw.find_first_not_of(' ') == std::string::npos) continue;
    out.push_back({number, raw});
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline unsigned long parse_unsigned(const std::string& token, const std::string& where) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw InputError(where + ": expected a non-negative integer, got '" + token + "'");
  try {
    return std::stoul(token);
  } catch (const std::exception&) {
    throw InputError(where + ": integer out of range '" + token + "'");
  }
}

inline std::string at(const std::string& source, std::size_t line) { return source + ":" + std::to_string(line); }

}  // namespace detail

inline LinearCode parse_code(std::istream& in, const std::string& source = "<code>") {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InputError(source + ": empty code file");
  const auto header = detail::tokens(lines[0].text);
  const std::string where = detail::at(source, lines[0].number);
  if (header.size() != 6 || header[0] != "q" || header[2] != "n" || header[4] != "k")
    throw InputError(where + ": header must read 'q <prime-power> n <len> k <dim>'");
  const unsigned q = static_cast<unsigned>(detail::parse_unsigned(header[1], where));
  const std::size_t n = detail::parse_unsigned(header[3], where);
  const std::size_t k = detail::parse_unsigned(header[5], where);
  FieldPtr field;
  try {
    field = Field::of_order(q);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  if (n == 0 || n > kMaxLength) throw InputError(where + ": length n must be in 1.." + std::to_string(kMaxLength));
  if (k == 0) throw InputError(where + ": dimension k must be at least 1");
  if (lines.size() - 1 != k)
    throw InputError(source + ": header declares k = " + std::to_string(k) + " rows but file has " +
                     std::to_string(lines.size() - 1));
  Matrix g(field, k, n);
  for (std::size_t r = 0; r < k; ++r) {
    const auto& line = lines[r + 1];
    const std::string lw = detail::at(source, line.number);
    const auto row = detail::tokens(line.text);
    if (row.size() != n)
      throw InputError(lw + ": expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = detail::parse_unsigned(row[c], lw);
      if (v >= q) throw InputError(lw + ": entry " + row[c] + " is not in [0, " + std::to_string(q) + ")");
      g(r, c) = Elem(static_cast<unsigned>(v));
    }
  }
  if (g.is_zero()) throw InputError(source + ": generator matrix is zero");
  return LinearCode::from_generator(g);
}

inline Poset parse_poset(std::istream& in, const std::string& source = "<poset>") {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InputError(source + ": empty poset file");
  const auto header = detail::tokens(lines[0].text);
  const std::string where = detail::at(source, lines[0].number);
  if (header.size() != 2 || header[0] != "n") throw InputError(where + ": header must read 'n <count>'");
  const std::size_t n = detail::parse_unsigned(header[1], where);
  std::vector<CoverPair> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string lw = detail::at(source, lines[i].number);
    std::string text = lines[i].text;
    const auto lt = text.find('<');
    if (lt == std::string::npos) throw InputError(lw + ": expected '<i> < <j>'");
    text[lt] = ' ';
    const auto parts = detail::tokens(text);
    if (parts.size() != 2) throw InputError(lw + ": expected '<i> < <j>'");
    covers.emplace_back(detail::parse_unsigned(parts[0], lw), detail::parse_unsigned(parts[1], lw));
  }
  try {
    return Poset::from_cover_relations(n, covers);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open code file '" + path + "'");
  return parse_code(in, path);
}

// "chain:<n>", "antichain:<n>", or a poset file path.
inline Poset load_poset(const std::string& spec) {
  for (const std::string prefix : {"chain:", "antichain:"}) {
    if (spec.rfind(prefix, 0) == 0) {
      const auto n = detail::parse_unsigned(spec.substr(prefix.size()), "poset '" + spec + "'");
      return prefix == "chain:" ? Poset::chain(n) : Poset::antichain(n);
    }
  }
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open poset file '" + spec + "'");
  return parse_poset(in, spec);
}

inline std::string format_code(const LinearCode& c) {
  std::ostringstream out;
  out << "q " << c.q() << " n " << c.length() << " k " << c.dimension() << "\n";
  for (std::size_t r = 0; r < c.dimension(); ++r) {
    for (std::size_t j = 0; j < c.length(); ++j) out << (j ? " " : "") << unsigned(c.generator()(r, j).value);
    out << "\n";
  }
  return out.str();
}

inline std::string format_poset(const Poset& p) {
  std::ostringstream out;
  out << "n " << p.size() << "\n";
  for (auto [lo, hi] : p.covers()) out << lo << " < " << hi << "\n";
  return out.str();
}

// "1,3,5" -> mask, 1-indexed, checked against n.
inline Mask parse_index_set(const std::string& text, std::size_t n) {
  Mask m = 0;
  std::string copy = text;
  for (char& ch : copy)
    if (ch == ',') ch = ' ';
  for (const auto& t : detail::tokens(copy)) {
    const auto i = detail::parse_unsigned(t, "set '" + text + "'");
    if (i < 1 || i > n) throw InputError("set element " + t + " outside 1.." + std::to_string(n));
    m |= bit(i - 1);
  }
  return m;
}

}  // namespace posetcode
