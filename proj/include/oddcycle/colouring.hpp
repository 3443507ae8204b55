#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

struct ColouringHeader {
  static constexpr int kFormatVersion = 1;
  std::string provenance;  // generator name and seed; not serialized
};

// q-edge-colouring of K_n as an upper-triangular table: pair {u,v}, u < v,
// maps to a colour in [0, q).
class EdgeColouring {
 public:
  EdgeColouring() = default;
  // Every edge starts with colour 0; requires q >= 1 unless n <= 1.
  EdgeColouring(std::size_t n, std::size_t q);

  std::size_t order() const noexcept { return n_; }
  std::size_t colours() const noexcept { return q_; }
  std::size_t pair_count() const noexcept { return table_.size(); }

  Colour colour(Vertex u, Vertex v) const;
  void set_colour(Vertex u, Vertex v, Colour c);

  // Raw table in row-major upper-triangular order ({0,1},{0,2},...,{n-2,n-1}).
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }
  // Unchecked write access for bulk generators; entries must stay below q.
  std::vector<std::uint8_t>& mutable_table() noexcept { return table_; }
  std::size_t pair_index(Vertex u, Vertex v) const;

  ColouringHeader header;

  friend bool operator==(const EdgeColouring& a, const EdgeColouring& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t q_ = 0;
  std::vector<std::uint8_t> table_;
};

inline constexpr std::size_t kMaxColours = 255;
inline constexpr std::size_t kMaxPairs = std::size_t{1} << 28;

// K_{2^q}; edge {u,v} gets the lowest bit index where u and v differ.
EdgeColouring binary_colouring(std::size_t q);

// Vertex (a,b) is a*n2 + b. Pairs differing in the first coordinate take the
// c1 colour, otherwise q1 + the c2 colour.
EdgeColouring product_colouring(const EdgeColouring& c1, const EdgeColouring& c2);

EdgeColouring random_colouring(std::size_t n, std::size_t q, std::uint64_t seed);

Graph colour_class(const EdgeColouring& c, Colour i);
std::vector<Graph> colour_classes(const EdgeColouring& c);

EdgeColouring read_colouring(std::istream& in);
void write_colouring(const EdgeColouring& c, std::ostream& out);
EdgeColouring load_colouring(const std::string& path);
void save_colouring(const EdgeColouring& c, const std::string& path);

}  // namespace oddcycle
