#include "l2lab/labels.hpp"

#include <algorithm>
#include <cctype>

namespace l2lab {

namespace {

bool is_atom_char(char c) {
  return c != '[' && c != ']' && c != ',' && !std::isspace(static_cast<unsigned char>(c));
}

// Recursive descent; advances pos past one label. Returns false on malformed input.
bool parse(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) return false;
  if (s[pos] != '[') {
    std::size_t start = pos;
    while (pos < s.size() && is_atom_char(s[pos])) ++pos;
    return pos > start;
  }
  ++pos;
  int children = 0;
  while (true) {
    if (!parse(s, pos)) return false;
    ++children;
    if (pos >= s.size()) return false;
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] == ']') {
      ++pos;
      return children >= 2;
    }
    return false;
  }
}

void collect_atoms(const std::string& label, std::vector<std::string>& out) {
  auto kids = label_children(label);
  if (kids.empty()) {
    out.push_back(label);
    return;
  }
  for (const auto& k : kids) collect_atoms(k, out);
}

}  // namespace

bool is_well_formed_label(const std::string& label) {
  std::size_t pos = 0;
  return parse(label, pos) && pos == label.size();
}

std::vector<std::string> label_children(const std::string& label) {
  std::vector<std::string> out;
  if (label.empty() || label.front() != '[') return out;
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    char c = label[i];
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(label.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(label.substr(start, label.size() - 1 - start));
  return out;
}

std::vector<std::string> flatten_label(const std::string& label) {
  std::vector<std::string> atoms;
  collect_atoms(label, atoms);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

std::string barycenter_label(const std::vector<std::string>& sorted_vertices) {
  if (sorted_vertices.size() == 1) return sorted_vertices.front();
  std::string out = "[";
  for (std::size_t i = 0; i < sorted_vertices.size(); ++i) {
    if (i) out += ',';
    out += sorted_vertices[i];
  }
  out += ']';
  return out;
}

std::string midpoint_label(const std::string& u, const std::string& v) {
  return u < v ? barycenter_label({u, v}) : barycenter_label({v, u});
}

}  // namespace l2lab
