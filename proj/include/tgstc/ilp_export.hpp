#pragma once

#include <limits>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include "tgstc/graph.hpp"

namespace tgstc {

enum class IlpSense { maximize_strong, minimize_weak };

namespace detail {

template <class W>
void write_coefficient(std::ostream& os, W w) {
  if constexpr (std::is_integral_v<W>) {
    os << w;
  } else {
    const auto old = os.precision(std::numeric_limits<W>::max_digits10);
    os << w;
    os.precision(old);
  }
}

}  // namespace detail

/// Writes the STC integer program in LP file format.
///
/// One binary per aggregated edge, named x_u_v (maximize strong weight, one
/// `x_ij + x_ik <= 1` row per open wedge) or y_u_v (minimize weak weight,
/// `y_ij + y_ik >= 1`). Rows are ordered by wedge center, then by the two
/// outer nodes.
template <class W>
void write_stc_lp(std::ostream& os, const WeightedGraph<W>& a, IlpSense sense) {
  const bool maximize = sense == IlpSense::maximize_strong;
  const char prefix = maximize ? 'x' : 'y';
  auto var = [&](const EdgeKey& e) {
    return std::string(1, prefix) + '_' + std::to_string(e.u) + '_' + std::to_string(e.v);
  };
  const auto keys = a.edge_keys();

  os << "\\ strong triadic closure, " << (maximize ? "maximum strong weight" : "minimum weak weight") << '\n';
  os << (maximize ? "Maximize" : "Minimize") << '\n';
  os << " obj:";
  bool first = true;
  for (const auto& k : keys) {
    os << (first ? " " : " + ");
    detail::write_coefficient(os, a.weight(k));
    os << ' ' << var(k);
    first = false;
  }
  os << '\n';

  os << "Subject To\n";
  std::size_t row = 0;
  for (NodeId c : a.nodes()) {
    auto nb = a.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (a.has_edge(nb[i], nb[j])) continue;
        os << " w" << row++ << ": " << var(EdgeKey(c, nb[i])) << " + " << var(EdgeKey(c, nb[j]))
           << (maximize ? " <= 1" : " >= 1") << '\n';
      }
  }

  os << "Bounds\n";
  for (const auto& k : keys) os << " 0 <= " << var(k) << " <= 1\n";
  os << "Binary\n";
  for (const auto& k : keys) os << ' ' << var(k) << '\n';
  os << "End\n";
}

}  // namespace tgstc
