#include "lambda2/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace lambda2 {

namespace {
constexpr int kMaxLongHeader = 258047;  // 2^18 - 1
}

std::string graph6_encode(const Graph& g) {
  long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMaxLongHeader) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph6_encode: graph too large");
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.starts_with(kPrefix)) text.remove_prefix(kPrefix.size());
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: character out of range");
    return c - 63;
  };

  long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    // '~' header: three more 6-bit groups; a second '~' would start the
    // 36-bit form, whose sizes exceed what exact arithmetic can use anyway
    long v = 0;
    for (int i = 0; i < 3; ++i) {
      int c = next();
      if (i == 0 && c == 63) throw std::invalid_argument("graph6: graph too large");
      v = (v << 6) | c;
    }
    n = v;
    if (n > kMaxLongHeader) throw std::invalid_argument("graph6: graph too large");
  }

  long bit_count = n * (n - 1) / 2;
  size_t data_chars = static_cast<size_t>((bit_count + 5) / 6);
  if (text.size() - pos != data_chars)
    throw std::invalid_argument("graph6: wrong data length");

  std::vector<std::pair<int, int>> edges;
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) edges.emplace_back(i, j);
      --bits;
    }
  }
  if (bits > 0 && (acc & ((1 << bits) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string dot_export(const Graph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace lambda2
