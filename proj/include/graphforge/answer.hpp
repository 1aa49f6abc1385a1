#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace graphforge {

// Exact fraction for ratio answers (Jaccard, clustering coefficient).
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den) {
    if (den == 0) return {0, 1};
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    return {num, den};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Fixed 4-place decimal rendering with round-half-to-even, computed on the
// exact fraction so it never depends on binary floating point.
std::string rational_to_decimal4(const Rational& r);

struct NodeSeq {
  std::vector<int> nodes;
  friend bool operator==(const NodeSeq&, const NodeSeq&) = default;
};

struct NodeSet {
  std::vector<int> nodes;  // sorted ascending
  friend bool operator==(const NodeSet&, const NodeSet&) = default;
};

struct EdgeSet {
  std::vector<std::pair<int, int>> edges;  // canonical (u<v undirected), sorted
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

struct PairList {
  std::vector<std::pair<int, int>> pairs;  // sorted by first element
  friend bool operator==(const PairList&, const PairList&) = default;
};

struct ComponentList {
  std::vector<std::vector<int>> groups;  // each sorted, ordered by smallest member
  friend bool operator==(const ComponentList&, const ComponentList&) = default;
};

struct ScoreMap {
  std::vector<double> scores;  // indexed by node id
  friend bool operator==(const ScoreMap&, const ScoreMap&) = default;
};

// Out-of-band answers the tasks document: "unreachable" (shortest path),
// "infinite" (diameter of a disconnected graph), "No triangle".
struct Sentinel {
  std::string text;
  friend bool operator==(const Sentinel&, const Sentinel&) = default;
};

struct AnswerValue {
  std::variant<bool, long long, Rational, NodeSeq, NodeSet, EdgeSet, PairList, ComponentList,
               ScoreMap, Sentinel>
      v;

  friend bool operator==(const AnswerValue&, const AnswerValue&) = default;

  static AnswerValue yes_no(bool b) { return {b}; }
  static AnswerValue integer(long long i) { return {i}; }
  static AnswerValue sentinel(std::string s) { return {Sentinel{std::move(s)}}; }
};

// --- witnesses -----------------------------------------------------------

struct PathWitness {
  std::vector<int> nodes;  // cycle witnesses are closed (front == back)
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

struct ColoringWitness {
  std::vector<int> color;  // 0/1 per node
  friend bool operator==(const ColoringWitness&, const ColoringWitness&) = default;
};

struct EdgeWitness {
  int u = 0, v = 0;
  friend bool operator==(const EdgeWitness&, const EdgeWitness&) = default;
};

struct FlowWitness {
  struct Augmentation {
    std::vector<int> path;
    long long bottleneck = 0;
    friend bool operator==(const Augmentation&, const Augmentation&) = default;
  };
  std::vector<Augmentation> augmentations;
  friend bool operator==(const FlowWitness&, const FlowWitness&) = default;
};

struct TriangleWitness {
  int a = 0, b = 0, c = 0;  // ascending
  friend bool operator==(const TriangleWitness&, const TriangleWitness&) = default;
};

using Witness = std::variant<PathWitness, ColoringWitness, EdgeWitness, NodeSet, PairList,
                             EdgeSet, FlowWitness, TriangleWitness>;

// --- node-aware text -----------------------------------------------------

// Reasoning steps and trace phrases keep node mentions structured so that
// real-world relabeling rewrites every mention through one bijection instead
// of string surgery.
struct Piece {
  enum class Kind { lit, node, num };
  Kind kind = Kind::lit;
  std::string lit;
  int node = 0;
  long long num = 0;

  friend bool operator==(const Piece&, const Piece&) = default;
};

struct Phrase {
  std::vector<Piece> pieces;
  friend bool operator==(const Phrase&, const Phrase&) = default;
};

inline Piece lit(std::string s) {
  Piece p;
  p.kind = Piece::Kind::lit;
  p.lit = std::move(s);
  return p;
}

inline Piece node_ref(int v) {
  Piece p;
  p.kind = Piece::Kind::node;
  p.node = v;
  return p;
}

inline Piece num(long long x) {
  Piece p;
  p.kind = Piece::Kind::num;
  p.num = x;
  return p;
}

namespace detail {
inline void phrase_append(Phrase&) {}
template <class T, class... Rest>
void phrase_append(Phrase& ph, T&& first, Rest&&... rest) {
  if constexpr (std::is_same_v<std::decay_t<T>, Piece>) {
    ph.pieces.push_back(std::forward<T>(first));
  } else if constexpr (std::is_integral_v<std::decay_t<T>>) {
    ph.pieces.push_back(num(static_cast<long long>(first)));
  } else {
    ph.pieces.push_back(lit(std::string(std::forward<T>(first))));
  }
  phrase_append(ph, std::forward<Rest>(rest)...);
}
}  // namespace detail

// phrase("visit node ", node_ref(3), " at distance ", 2)
template <class... Parts>
Phrase phrase(Parts&&... parts) {
  Phrase ph;
  detail::phrase_append(ph, std::forward<Parts>(parts)...);
  return ph;
}

inline Phrase operator+(Phrase a, const Phrase& b) {
  a.pieces.insert(a.pieces.end(), b.pieces.begin(), b.pieces.end());
  return a;
}

}  // namespace graphforge
