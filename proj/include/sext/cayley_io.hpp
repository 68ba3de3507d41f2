#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "sext/semigroup.hpp"

namespace sext {

// Text format: first line is the order n, then an optional "labels: ..." line
// with n whitespace-free tokens, then n rows of n element indices. Blank
// lines, '#' comment lines, and leading/trailing whitespace are tolerated;
// anything else is an error.
inline FiniteSemigroup parse_cayley(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back(line.substr(start));
  }
  if (lines.empty()) throw std::invalid_argument("empty cayley input");

  std::size_t pos = 0;
  long order = -1;
  try {
    std::size_t used = 0;
    order = std::stol(lines[pos], &used);
    if (used != lines[pos].size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("first line must be the order, got: " +
                                lines[pos]);
  }
  ++pos;
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  const int n = static_cast<int>(order);

  std::vector<std::string> labels;
  if (pos < lines.size() && lines[pos].rfind("labels:", 0) == 0) {
    std::istringstream ls(lines[pos].substr(7));
    for (std::string tok; ls >> tok;) labels.push_back(tok);
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("labels line must have exactly " +
                                  std::to_string(n) + " tokens");
    ++pos;
  }

  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row, ++pos) {
    if (pos >= lines.size())
      throw std::invalid_argument("expected " + std::to_string(n) +
                                  " table rows, got " + std::to_string(row));
    std::istringstream rs(lines[pos]);
    int count = 0;
    for (std::string tok; rs >> tok; ++count) {
      long v;
      try {
        std::size_t used = 0;
        v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("bad table entry: " + tok);
      }
      if (v < 0 || v >= n)
        throw std::invalid_argument("table entry out of range: " + tok);
      flat.push_back(static_cast<int>(v));
    }
    if (count != n)
      throw std::invalid_argument("row " + std::to_string(row) + " has " +
                                  std::to_string(count) + " entries, expected " +
                                  std::to_string(n));
  }
  if (pos != lines.size())
    throw std::invalid_argument("trailing content after table");
  return FiniteSemigroup(n, std::move(flat), std::move(labels));
}

inline FiniteSemigroup parse_cayley(const std::string& text) {
  std::istringstream in(text);
  return parse_cayley(in);
}

inline std::string format_cayley(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << s.order() << "\n";
  if (s.has_labels()) {
    out << "labels:";
    for (const auto& l : s.labels()) out << " " << l;
    out << "\n";
  }
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j)
      out << (j ? " " : "") << s.mul(i, j);
    out << "\n";
  }
  return out.str();
}

}  // namespace sext
