#pragma once

#include <charconv>
#include <cstddef>
#include <deque>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgstc/types.hpp"

namespace tgstc {

/// One contact between two nodes at an integer timestamp, canonical u < v.
struct TemporalEdge {
  NodeId u = 0;
  NodeId v = 0;
  Timestamp t = 0;
  std::optional<Timestamp> duration;

  TemporalEdge() = default;
  TemporalEdge(NodeId a, NodeId b, Timestamp time, std::optional<Timestamp> dur = std::nullopt)
      : u(a < b ? a : b), v(a < b ? b : a), t(time), duration(dur) {}

  EdgeKey key() const { return {u, v}; }

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

namespace detail {

inline std::string_view next_token(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && (rest[b] == ' ' || rest[b] == '\t' || rest[b] == '\r' || rest[b] == ','))
    ++b;
  std::size_t e = b;
  while (e < rest.size() && rest[e] != ' ' && rest[e] != '\t' && rest[e] != '\r' && rest[e] != ',')
    ++e;
  std::string_view tok = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return tok;
}

template <class Int>
Int parse_field(std::string_view tok, const char* name, std::size_t line_no) {
  auto fail = [&](const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why + " in field '" + name +
                     "' ('" + std::string(tok) + "')");
  };
  if (!tok.empty() && tok.front() == '-') fail("negative value");
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range) fail("value out of range");
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("malformed integer");
  if (value < 0) fail("negative value");
  return value;
}

}  // namespace detail

/// Parses "u v t [dur]". Blank lines and '#' comments yield nullopt.
inline std::optional<TemporalEdge> parse_edge_line(std::string_view line, std::size_t line_no = 0) {
  std::string_view rest = line;
  std::string_view first = detail::next_token(rest);
  if (first.empty() || first.front() == '#' || first.front() == '%') return std::nullopt;

  std::string_view second = detail::next_token(rest);
  std::string_view third = detail::next_token(rest);
  std::string_view fourth = detail::next_token(rest);
  if (second.empty() || third.empty())
    throw ParseError("line " + std::to_string(line_no) + ": expected 'u v t [dur]'");
  if (!detail::next_token(rest).empty())
    throw ParseError("line " + std::to_string(line_no) + ": too many fields");

  auto u = detail::parse_field<NodeId>(first, "u", line_no);
  auto v = detail::parse_field<NodeId>(second, "v", line_no);
  auto t = detail::parse_field<Timestamp>(third, "t", line_no);
  std::optional<Timestamp> dur;
  if (!fourth.empty()) dur = detail::parse_field<Timestamp>(fourth, "dur", line_no);
  if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at node " + std::to_string(u));
  return TemporalEdge(u, v, t, dur);
}

/// Pulls edges line by line from a stream, enforcing chronological order.
class EdgeReader {
 public:
  explicit EdgeReader(std::istream& in, bool skip_self_loops = false)
      : in_(in), skip_self_loops_(skip_self_loops) {}

  std::optional<TemporalEdge> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::optional<TemporalEdge> e;
      try {
        e = parse_edge_line(line, line_no_);
      } catch (const ParseError& err) {
        if (skip_self_loops_ && std::string_view(err.what()).find("self-loop") != std::string_view::npos) {
          ++skipped_;
          continue;
        }
        throw;
      }
      if (!e) continue;
      if (last_t_ && e->t < *last_t_)
        throw StreamOrderError("line " + std::to_string(line_no_) + ": timestamp " + std::to_string(e->t) +
                               " precedes " + std::to_string(*last_t_));
      last_t_ = e->t;
      return e;
    }
    return std::nullopt;
  }

  std::size_t line_number() const { return line_no_; }
  std::size_t skipped_self_loops() const { return skipped_; }

 private:
  std::istream& in_;
  bool skip_self_loops_;
  std::size_t line_no_ = 0;
  std::size_t skipped_ = 0;
  std::optional<Timestamp> last_t_;
};

inline std::vector<TemporalEdge> read_edges(std::istream& in, bool skip_self_loops = false) {
  EdgeReader reader(in, skip_self_loops);
  std::vector<TemporalEdge> out;
  while (auto e = reader.next()) out.push_back(*e);
  return out;
}

/// Closed interval [start, start + delta - 1].
struct TimeWindow {
  Timestamp start = 0;
  Timestamp delta = 1;

  Timestamp end() const { return start + delta - 1; }
  bool contains(Timestamp t) const { return t >= start && t <= end(); }
};

struct WindowDelta {
  std::vector<TemporalEdge> expired;
  std::vector<TemporalEdge> arrived;

  bool empty() const { return expired.empty() && arrived.empty(); }
};

/// FIFO of the temporal edges inside the current window plus those queued
/// for later windows. Valid only for chronologically sorted input.
class WindowBuffer {
 public:
  explicit WindowBuffer(Timestamp delta) : delta_(delta) {
    if (delta < 1) throw ConfigError("window length must be >= 1");
  }

  void push(TemporalEdge e) {
    if (last_t_ && e.t < *last_t_)
      throw StreamOrderError("timestamp " + std::to_string(e.t) + " precedes " + std::to_string(*last_t_));
    if (window_ && e.t < window_->start)
      throw StreamOrderError("timestamp " + std::to_string(e.t) + " is older than the open window");
    last_t_ = e.t;
    pending_.push_back(std::move(e));
  }

  /// Moves the window to start at new_start. The first call opens it.
  WindowDelta advance_to(Timestamp new_start) {
    if (window_ && new_start <= window_->start)
      throw ContractError("window can only move forward");
    TimeWindow next{new_start, delta_};
    WindowDelta d;
    while (!current_.empty() && current_.front().t < next.start) {
      d.expired.push_back(std::move(current_.front()));
      current_.pop_front();
    }
    // pending edges that were skipped over entirely by a large stride
    while (!pending_.empty() && pending_.front().t < next.start) pending_.pop_front();
    while (!pending_.empty() && pending_.front().t <= next.end()) {
      d.arrived.push_back(pending_.front());
      current_.push_back(std::move(pending_.front()));
      pending_.pop_front();
    }
    window_ = next;
    return d;
  }

  const std::deque<TemporalEdge>& contents() const { return current_; }
  const std::deque<TemporalEdge>& pending() const { return pending_; }
  std::optional<TimeWindow> window() const { return window_; }
  Timestamp delta() const { return delta_; }

 private:
  Timestamp delta_;
  std::optional<TimeWindow> window_;
  std::optional<Timestamp> last_t_;
  std::deque<TemporalEdge> current_;
  std::deque<TemporalEdge> pending_;
};

}  // namespace tgstc
