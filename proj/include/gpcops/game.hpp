#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpcops/errors.hpp"
#include "gpcops/graph.hpp"

namespace gpcops {

inline constexpr int kMaxCops = 4;

/// Cop positions as a sorted multiset of at most kMaxCops vertices. Several
/// cops may share a vertex.
class CopSet {
 public:
  CopSet() = default;
  CopSet(std::initializer_list<VertexId> ids) : CopSet(std::span<const VertexId>(ids.begin(), ids.size())) {}
  explicit CopSet(std::span<const VertexId> ids) {
    if (ids.size() > kMaxCops) throw ParamError("at most 4 cops are supported");
    size_ = static_cast<std::uint8_t>(ids.size());
    std::copy(ids.begin(), ids.end(), v_.begin());
    std::sort(v_.begin(), v_.begin() + size_);
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  VertexId operator[](int i) const { return v_[i]; }
  const VertexId* begin() const { return v_.data(); }
  const VertexId* end() const { return v_.data() + size_; }

  bool contains(VertexId v) const { return std::find(begin(), end(), v) != end(); }

  friend bool operator==(const CopSet& a, const CopSet& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
  friend std::strong_ordering operator<=>(const CopSet& a, const CopSet& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<VertexId, kMaxCops> v_{};
  std::uint8_t size_ = 0;
};

enum class Side : std::uint8_t { Cops = 0, Robber = 1 };

struct GameState {
  CopSet cops;
  VertexId robber = 0;
  Side to_move = Side::Robber;

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Pass first, then the neighbours in the graph's fixed order.
inline std::array<VertexId, 4> robber_moves(const GPGraph& g, const GameState& s) {
  if (s.to_move != Side::Robber) throw TurnError("robber_moves called on the cops' turn");
  const auto& nb = g.neighbours(s.robber);
  return {s.robber, nb[0], nb[1], nb[2]};
}

/// Calls fn(CopSet) for every joint cop move (each cop stays or steps to a
/// neighbour). Results are sorted but not deduplicated: 4^c calls.
template <typename Fn>
void for_each_cop_move(const GPGraph& g, const CopSet& cops, Fn&& fn) {
  const int c = cops.size();
  std::array<std::array<VertexId, 4>, kMaxCops> options{};
  for (int i = 0; i < c; ++i) {
    const auto& nb = g.neighbours(cops[i]);
    options[i] = {cops[i], nb[0], nb[1], nb[2]};
  }
  int total = 1;
  for (int i = 0; i < c; ++i) total *= 4;
  std::array<VertexId, kMaxCops> pick{};
  for (int code = 0; code < total; ++code) {
    int rest = code;
    for (int i = 0; i < c; ++i, rest >>= 2) pick[i] = options[i][rest & 3];
    fn(CopSet(std::span<const VertexId>(pick.data(), c)));
  }
}

/// Distinct cop moves in ascending lexicographic order.
inline std::vector<CopSet> cop_moves(const GPGraph& g, const GameState& s) {
  if (s.to_move != Side::Cops) throw TurnError("cop_moves called on the robber's turn");
  std::vector<CopSet> out;
  for_each_cop_move(g, s.cops, [&](const CopSet& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_capture(const GameState& s) { return s.cops.contains(s.robber); }

/// A cop on or adjacent to every neighbour of the robber (either side to
/// move), or a cop adjacent to the robber when the cops are to move.
inline bool is_trapped(const GPGraph& g, const GameState& s) {
  bool all_covered = true;
  for (VertexId v : g.neighbours(s.robber)) {
    bool covered = std::any_of(s.cops.begin(), s.cops.end(), [&](VertexId c) { return g.within_one(c, v); });
    if (!covered) {
      all_covered = false;
      break;
    }
  }
  if (all_covered) return true;
  if (s.to_move == Side::Cops)
    return std::any_of(s.cops.begin(), s.cops.end(), [&](VertexId c) { return g.adjacent(c, s.robber); });
  return false;
}

/// The 8 vertices reached from the robber through anchor (a neighbour of the
/// robber) and one fixed further neighbour, the gate, out to walk depth 4.
///
/// Slot layout: [anchor, gate, d3, d3, d4(of first d3), d4, d4(of second d3), d4].
/// Slots follow non-backtracking walks, so in a family graph the depth-4 slots
/// of an inner branch can hold b_{j+3k}, which sits at distance 3.
struct Branch {
  VertexId anchor = 0;
  VertexId gate = 0;
  std::array<VertexId, 8> members{};

  bool contains(VertexId v) const { return std::find(members.begin(), members.end(), v) != members.end(); }
};

namespace detail {

inline std::array<VertexId, 2> others(const GPGraph& g, VertexId v, VertexId from) {
  std::array<VertexId, 2> out{};
  int i = 0;
  for (VertexId w : g.neighbours(v))
    if (w != from) out[i++] = w;
  return out;
}

}  // namespace detail

/// Branch without family or adjacency checks; used on hot paths.
inline Branch make_branch(const GPGraph& g, VertexId anchor, VertexId gate) {
  Branch b;
  b.anchor = anchor;
  b.gate = gate;
  b.members[0] = anchor;
  b.members[1] = gate;
  auto d3 = detail::others(g, gate, anchor);
  b.members[2] = d3[0];
  b.members[3] = d3[1];
  auto d4a = detail::others(g, d3[0], gate);
  auto d4b = detail::others(g, d3[1], gate);
  b.members[4] = d4a[0];
  b.members[5] = d4a[1];
  b.members[6] = d4b[0];
  b.members[7] = d4b[1];
  return b;
}

/// The two branches from anchor v of the robber at r, in the graph's
/// neighbour order of v.
inline std::array<Branch, 2> branches_of(const GPGraph& g, VertexId r, VertexId v) {
  require_family(g);
  if (!g.adjacent(r, v)) throw ParamError("branches_of: " + g.name(v) + " is not adjacent to " + g.name(r));
  auto gates = detail::others(g, v, r);
  return {make_branch(g, v, gates[0]), make_branch(g, v, gates[1])};
}

// Text form: "cops=a0,a5,b3 robber=a6 turn=R".

inline std::string format_state(const GPGraph& g, const GameState& s) {
  std::ostringstream out;
  out << "cops=";
  for (int i = 0; i < s.cops.size(); ++i) out << (i ? "," : "") << g.name(s.cops[i]);
  out << " robber=" << g.name(s.robber) << " turn=" << (s.to_move == Side::Cops ? 'C' : 'R');
  return out.str();
}

inline CopSet parse_cops(const GPGraph& g, std::string_view list, char sep = ',') {
  std::vector<VertexId> ids;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(sep, start);
    if (end == std::string_view::npos) end = list.size();
    auto token = list.substr(start, end - start);
    if (!token.empty()) ids.push_back(g.parse(token));
    start = end + 1;
  }
  if (ids.empty()) throw FormatError("no cop positions given");
  if (ids.size() > kMaxCops) throw FormatError("at most 4 cops are supported");
  return CopSet(ids);
}

inline GameState parse_state(const GPGraph& g, std::string_view text) {
  GameState s;
  bool have_cops = false, have_robber = false, have_turn = false;
  std::istringstream in{std::string(text)};
  std::string field;
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw FormatError("bad state field '" + field + "'");
    std::string_view key(field.data(), eq), value(field.data() + eq + 1, field.size() - eq - 1);
    if (key == "cops") {
      s.cops = parse_cops(g, value);
      have_cops = true;
    } else if (key == "robber") {
      s.robber = g.parse(value);
      have_robber = true;
    } else if (key == "turn") {
      if (value == "C") s.to_move = Side::Cops;
      else if (value == "R") s.to_move = Side::Robber;
      else throw FormatError("turn must be C or R");
      have_turn = true;
    } else {
      throw FormatError("unknown state field '" + std::string(key) + "'");
    }
  }
  if (!have_cops || !have_robber || !have_turn) throw FormatError("state needs cops=, robber= and turn=");
  return s;
}

inline nlohmann::json state_to_json(const GPGraph& g, const GameState& s) {
  nlohmann::json cops = nlohmann::json::array();
  for (VertexId c : s.cops) cops.push_back(g.name(c));
  return {{"cops", cops}, {"robber", g.name(s.robber)}, {"turn", s.to_move == Side::Cops ? "C" : "R"}};
}

inline GameState state_from_json(const GPGraph& g, const nlohmann::json& j) {
  try {
    std::vector<VertexId> ids;
    for (const auto& c : j.at("cops")) ids.push_back(g.parse(c.get<std::string>()));
    if (ids.empty() || ids.size() > kMaxCops) throw FormatError("state needs 1 to 4 cops");
    auto turn = j.at("turn").get<std::string>();
    if (turn != "C" && turn != "R") throw FormatError("turn must be C or R");
    return {CopSet(ids), g.parse(j.at("robber").get<std::string>()), turn == "C" ? Side::Cops : Side::Robber};
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad state JSON: ") + e.what());
  }
}

}  // namespace gpcops
