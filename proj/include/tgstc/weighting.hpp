#pragma once

#include <cmath>
#include <cstdint>
#include <iterator>
#include <optional>
#include <ranges>
#include <string_view>

#include "tgstc/types.hpp"

namespace tgstc {

/// One entry of an aggregated edge's chronological contact list.
struct Contact {
  Timestamp t = 0;
  std::optional<Timestamp> duration;

  friend bool operator==(const Contact&, const Contact&) = default;
};

template <class R>
concept ContactRange = std::ranges::forward_range<R> &&
                       std::same_as<std::ranges::range_value_t<R>, Contact>;

/// A weighting function maps a chronological contact list to a tie strength.
template <class Phi>
concept WeightingFunction = requires {
  typename Phi::weight_type;
  { Phi::name } -> std::convertible_to<std::string_view>;
};

/// Number of contacts.
struct FrequencyWeight {
  using weight_type = std::int64_t;
  static constexpr std::string_view name = "freq";

  template <ContactRange R>
  weight_type operator()(const R& contacts) const {
    return static_cast<weight_type>(std::ranges::distance(contacts));
  }
};

/// Sum of exp(-gap) over consecutive contacts; 0 with fewer than two.
struct DecayWeight {
  using weight_type = double;
  static constexpr std::string_view name = "decay";

  template <ContactRange R>
  weight_type operator()(const R& contacts) const {
    double sum = 0.0;
    auto it = std::ranges::begin(contacts);
    auto end = std::ranges::end(contacts);
    if (it == end) return 0.0;
    Timestamp prev = it->t;
    for (++it; it != end; ++it) {
      sum += std::exp(-static_cast<double>(it->t - prev));
      prev = it->t;
    }
    return sum;
  }
};

/// Total contact duration. Every contact must carry one.
struct DurationWeight {
  using weight_type = std::int64_t;
  static constexpr std::string_view name = "duration";

  template <ContactRange R>
  weight_type operator()(const R& contacts) const {
    weight_type sum = 0;
    for (const Contact& c : contacts) {
      if (!c.duration)
        throw ConfigError("duration weighting requires a duration column on every temporal edge");
      sum += *c.duration;
    }
    return sum;
  }
};

}  // namespace tgstc
