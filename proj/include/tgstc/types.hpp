#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace tgstc {

using NodeId = std::uint64_t;
using Timestamp = std::int64_t;

/// Undirected node pair stored with u < v.
struct EdgeKey {
  NodeId u = 0;
  NodeId v = 0;

  constexpr EdgeKey() = default;
  constexpr EdgeKey(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(NodeId x) const { return x == u || x == v; }
  constexpr NodeId other(NodeId x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const EdgeKey& e) {
  return os << '{' << e.u << ',' << e.v << '}';
}

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& e) const noexcept {
    // splitmix64 finalizer over the packed pair
    std::uint64_t x = e.u * 0x9E3779B97F4A7C15ULL ^ (e.v + 0x632BE59BD9B4E019ULL);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StreamOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance exceeds a configured size cap (e.g. the exact solver).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken precondition or internal inconsistency between maintained structures.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Tightness comparison: exact for integral weights, relative 1e-9 for reals.
template <class W>
struct WeightTraits {
  static_assert(std::is_arithmetic_v<W>);
  static constexpr bool exact = std::is_integral_v<W>;
  static constexpr double rel_tol = 1e-9;

  static bool equal(W a, W b) {
    if constexpr (exact) {
      return a == b;
    } else {
      return std::abs(a - b) <= rel_tol * std::max(1.0, std::abs(static_cast<double>(b)));
    }
  }
  static bool less_equal(W a, W b) { return a <= b || equal(a, b); }
};

}  // namespace tgstc

template <>
struct std::hash<tgstc::EdgeKey> : tgstc::EdgeKeyHash {};
