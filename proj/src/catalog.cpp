#include "singlat/catalog.hpp"

#include "singlat/errors.hpp"

#include <charconv>

namespace singlat {

namespace {

std::string e(int i) { return "E" + std::to_string(i); }

GraphDocument chain(std::string name, int n) {
  GraphDocument doc;
  doc.name = std::move(name);
  for (int i = 1; i <= n; ++i) doc.vertices.push_back({e(i), -2, 0});
  for (int i = 1; i < n; ++i) doc.edges.emplace_back(e(i), e(i + 1));
  return doc;
}

std::optional<int> suffix(std::string_view name, char prefix) {
  if (name.size() < 2 || name[0] != prefix || name[1] == '0') return std::nullopt;
  int n = 0;
  const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
  return n;
}

constexpr int max_rank = 500;

[[noreturn]] void unknown(std::string_view name) {
  throw InputError("unknown catalog graph '" + std::string(name) + "'; known: " + catalog_patterns());
}

}  // namespace

std::string catalog_patterns() {
  return "paper-z7, A<n> (1 <= n <= 500), D<n> (4 <= n <= 500), E6, E7, E8, gamma-2-3-7, cusp-3x3, "
         "simply-elliptic-d3";
}

GraphDocument catalog_document(std::string_view name) {
  const std::string s(name);
  if (s == "paper-z7") {
    GraphDocument doc;
    doc.name = s;
    doc.vertices = {{"E1", -2, 0}, {"E2", -2, 0}, {"c", -2, 0}, {"E3", -2, 0}, {"E4", -3, 0}, {"f", -2, 0}};
    doc.edges = {{"E1", "E2"}, {"E2", "c"}, {"c", "E3"}, {"E3", "E4"}, {"c", "f"}};
    return doc;
  }
  if (s == "gamma-2-3-7") {
    GraphDocument doc;
    doc.name = s;
    doc.vertices = {{"c", -1, 0}, {"l2", -2, 0}, {"l3", -3, 0}, {"l7", -7, 0}};
    doc.edges = {{"c", "l2"}, {"c", "l3"}, {"c", "l7"}};
    return doc;
  }
  if (s == "cusp-3x3") {
    GraphDocument doc;
    doc.name = s;
    doc.vertices = {{"E1", -3, 0}, {"E2", -3, 0}, {"E3", -3, 0}};
    doc.edges = {{"E1", "E2"}, {"E2", "E3"}, {"E1", "E3"}};
    return doc;
  }
  if (s == "simply-elliptic-d3") {
    GraphDocument doc;
    doc.name = s;
    doc.vertices = {{"E", -3, 1}};
    return doc;
  }
  if (s == "E6" || s == "E7" || s == "E8") {
    const int n = s[1] - '0';
    GraphDocument doc = chain(s, n - 1);
    doc.vertices.push_back({e(n), -2, 0});
    doc.edges.emplace_back(e(3), e(n));
    return doc;
  }
  if (const auto n = suffix(s, 'A')) {
    if (*n < 1 || *n > max_rank) unknown(name);
    return chain(s, *n);
  }
  if (const auto n = suffix(s, 'D')) {
    if (*n < 4 || *n > max_rank) unknown(name);
    GraphDocument doc = chain(s, *n - 2);
    doc.vertices.push_back({e(*n - 1), -2, 0});
    doc.vertices.push_back({e(*n), -2, 0});
    doc.edges.emplace_back(e(*n - 2), e(*n - 1));
    doc.edges.emplace_back(e(*n - 2), e(*n));
    return doc;
  }
  unknown(name);
}

ResolutionGraph catalog(std::string_view name) { return to_graph(catalog_document(name)); }

std::vector<std::string> catalog_names() {
  return {"paper-z7", "A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8", "gamma-2-3-7", "cusp-3x3",
          "simply-elliptic-d3"};
}

}  // namespace singlat
