#include "oddcycle/colouring.hpp"

#include <charconv>
#include <optional>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "oddcycle/errors.hpp"
#include "oddcycle/random.hpp"

namespace oddcycle {

namespace {

constexpr std::string_view kMagic = "oddcycle-colouring v1";

std::size_t checked_pairs(std::size_t n) {
  if (n > 1 && (n - 1) > 2 * kMaxPairs / n) throw InputError("colouring of K_" + std::to_string(n) + " is too large to store");
  return n < 2 ? 0 : n * (n - 1) / 2;
}

}  // namespace

EdgeColouring::EdgeColouring(std::size_t n, std::size_t q) : n_(n), q_(q) {
  if (q > kMaxColours) throw InputError("at most " + std::to_string(kMaxColours) + " colours are supported");
  const std::size_t pairs = checked_pairs(n);
  if (pairs > 0 && q == 0) throw InputError("a colouring of K_" + std::to_string(n) + " needs at least one colour");
  table_.assign(pairs, 0);
}

std::size_t EdgeColouring::pair_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u == v || v >= n_) throw InputError("pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of K_" + std::to_string(n_));
  return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

Colour EdgeColouring::colour(Vertex u, Vertex v) const { return table_[pair_index(u, v)]; }

void EdgeColouring::set_colour(Vertex u, Vertex v, Colour c) {
  if (c >= q_) throw InputError("colour " + std::to_string(c) + " out of range for q = " + std::to_string(q_));
  table_[pair_index(u, v)] = static_cast<std::uint8_t>(c);
}

EdgeColouring binary_colouring(std::size_t q) {
  if (q < 1 || q > 30) throw InputError("binary_colouring: q must be in [1, 30], got " + std::to_string(q));
  const std::size_t n = std::size_t{1} << q;
  EdgeColouring c(n, q);
  c.header.provenance = "binary q=" + std::to_string(q);
  std::size_t idx = 0;
  auto& table = c.mutable_table();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) table[idx++] = static_cast<std::uint8_t>(std::countr_zero(u ^ v));
  return c;
}

EdgeColouring product_colouring(const EdgeColouring& c1, const EdgeColouring& c2) {
  const std::size_t n1 = c1.order();
  const std::size_t n2 = c2.order();
  const std::size_t q1 = c1.colours();
  EdgeColouring out(n1 * n2, q1 + c2.colours());
  out.header.provenance = "product(" + c1.header.provenance + ", " + c2.header.provenance + ")";
  for (std::size_t x = 0; x < n1 * n2; ++x) {
    for (std::size_t y = x + 1; y < n1 * n2; ++y) {
      const auto a = static_cast<Vertex>(x / n2), a2 = static_cast<Vertex>(y / n2);
      const auto b = static_cast<Vertex>(x % n2), b2 = static_cast<Vertex>(y % n2);
      Colour col = a != a2 ? c1.colour(a, a2) : static_cast<Colour>(q1) + c2.colour(b, b2);
      out.set_colour(static_cast<Vertex>(x), static_cast<Vertex>(y), col);
    }
  }
  return out;
}

EdgeColouring random_colouring(std::size_t n, std::size_t q, std::uint64_t seed) {
  if (n < 2 || q < 1) throw InputError("random_colouring: need n >= 2 and q >= 1");
  EdgeColouring c(n, q);
  c.header.provenance = "random seed=" + std::to_string(seed);
  Rng rng(seed);
  auto& table = c.mutable_table();
  for (auto& cell : table) cell = static_cast<std::uint8_t>(uniform_below(rng, q));
  return c;
}

Graph colour_class(const EdgeColouring& c, Colour i) {
  if (i >= c.colours()) throw InputError("colour_class: colour " + std::to_string(i) + " out of range");
  const std::size_t n = c.order();
  Graph::Builder b(n);
  std::size_t idx = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++idx)
      if (c.table()[idx] == i) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

std::vector<Graph> colour_classes(const EdgeColouring& c) {
  const std::size_t n = c.order();
  std::vector<Graph::Builder> builders(c.colours(), Graph::Builder(n));
  std::size_t idx = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++idx)
      builders[c.table()[idx]].add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  std::vector<Graph> out;
  out.reserve(builders.size());
  for (auto& b : builders) out.push_back(std::move(b).build());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

class LineTokens {
 public:
  LineTokens(std::string_view line, std::size_t line_no) : rest_(line), line_no_(line_no) {}

  std::optional<std::uint64_t> next() {
    while (!rest_.empty() && (rest_.front() == ' ' || rest_.front() == '\t')) rest_.remove_prefix(1);
    if (rest_.empty()) return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(rest_.data(), rest_.data() + rest_.size(), value);
    if (ec != std::errc{} || (ptr != rest_.data() + rest_.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError(line_no_, "expected a non-negative integer");
    rest_.remove_prefix(static_cast<std::size_t>(ptr - rest_.data()));
    return value;
  }

 private:
  std::string_view rest_;
  std::size_t line_no_;
};

}  // namespace

EdgeColouring read_colouring(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || trim_right(line) != kMagic) throw ParseError(1, "expected header '" + std::string(kMagic) + "'");

  ++line_no;
  if (!std::getline(in, line)) throw ParseError(line_no, "missing '<n> <q>' line");
  LineTokens dims(trim_right(line), line_no);
  auto n = dims.next();
  auto q = dims.next();
  if (!n || !q || dims.next()) throw ParseError(line_no, "expected exactly '<n> <q>'");
  EdgeColouring c;
  try {
    c = EdgeColouring(*n, *q);
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }

  auto& table = c.mutable_table();
  std::size_t idx = 0;
  for (std::size_t u = 0; u + 1 < *n; ++u) {
    ++line_no;
    if (!std::getline(in, line)) throw ParseError(line_no, "truncated table: missing row for vertex " + std::to_string(u));
    LineTokens row(trim_right(line), line_no);
    for (std::size_t v = u + 1; v < *n; ++v) {
      auto col = row.next();
      if (!col) throw ParseError(line_no, "truncated row for vertex " + std::to_string(u));
      if (*col >= *q) throw ParseError(line_no, "colour " + std::to_string(*col) + " out of range [0," + std::to_string(*q) + ")");
      table[idx++] = static_cast<std::uint8_t>(*col);
    }
    if (row.next()) throw ParseError(line_no, "too many entries in row for vertex " + std::to_string(u));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim_right(line).empty()) throw ParseError(line_no, "unexpected content after table");
  }
  return c;
}

void write_colouring(const EdgeColouring& c, std::ostream& out) {
  const std::size_t n = c.order();
  std::string buf;
  buf.append(kMagic).append("\n");
  buf.append(std::to_string(n)).append(" ").append(std::to_string(c.colours())).append("\n");
  std::size_t idx = 0;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (v > u + 1) buf.push_back(' ');
      buf.append(std::to_string(c.table()[idx++]));
    }
    buf.push_back('\n');
    if (buf.size() > (1U << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

EdgeColouring load_colouring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open colouring file '" + path + "'");
  return read_colouring(in);
}

void save_colouring(const EdgeColouring& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write colouring file '" + path + "'");
  write_colouring(c, out);
}

}  // namespace oddcycle
