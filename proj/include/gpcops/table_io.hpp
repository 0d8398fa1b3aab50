#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gpcops/errors.hpp"
#include "gpcops/solver.hpp"
#include "gpcops/state_space.hpp"

namespace gpcops {

// Table cache file, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "GPWT"
//   4       4     version (1)
//   8       4     n
//   12      4     k
//   16      4     c
//   20      1     symmetry (0 none, 1 dihedral)
//   21      1     has_distances
//   22      2     sweeps
//   24      8     S, stored states = representatives * 2n * 2
//   32      ...   S cop-win bits, LSB first; bit (rep * 2n + robber) * 2 + side
//   ...     2S    capture distances (u16) when has_distances
//   ...     8     FNV-1a 64 of every preceding byte
//
// With symmetry on, representatives are the orbit representatives in the
// order StateSpace enumerates them; otherwise the multiset ranks.

inline constexpr std::uint32_t kTableVersion = 1;

namespace detail {

inline void put_le(std::string& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

inline std::uint64_t get_le(const std::string& in, std::size_t& pos, int bytes) {
  if (pos + bytes > in.size()) throw FormatError("table file truncated");
  std::uint64_t value = 0;
  for (int i = 0; i < bytes; ++i) value |= std::uint64_t{static_cast<unsigned char>(in[pos + i])} << (8 * i);
  pos += bytes;
  return value;
}

inline std::uint64_t fnv1a(const std::string& bytes, std::size_t length) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < length; ++i) {
    h ^= static_cast<unsigned char>(bytes[i]);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace detail

inline std::string encode_table(const WinTable& t) {
  const auto& space = t.space();
  const std::uint64_t stored = space.stored_states();
  const int cells = space.cells();
  std::string out;
  out.reserve(40 + stored / 8 + (t.has_distances() ? stored * 2 : 0));
  out += "GPWT";
  detail::put_le(out, kTableVersion, 4);
  detail::put_le(out, static_cast<std::uint32_t>(t.n()), 4);
  detail::put_le(out, static_cast<std::uint32_t>(t.k()), 4);
  detail::put_le(out, static_cast<std::uint32_t>(t.cops()), 4);
  detail::put_le(out, static_cast<std::uint8_t>(t.symmetry()), 1);
  detail::put_le(out, t.has_distances() ? 1 : 0, 1);
  detail::put_le(out, static_cast<std::uint16_t>(std::min(t.stats().sweeps, 0xffff)), 2);
  detail::put_le(out, stored, 8);
  std::string bits((stored + 7) / 8, '\0');
  for (std::size_t r = 0; r < space.rep_count(); ++r)
    for (Side side : {Side::Cops, Side::Robber})
      for_each_bit(t.win_mask(r, side), [&](int cell) {
        std::uint64_t i = (r * cells + cell) * 2 + static_cast<int>(side);
        bits[i / 8] = static_cast<char>(bits[i / 8] | (1 << (i % 8)));
      });
  out += bits;
  for (std::uint16_t d : t.distances()) detail::put_le(out, d, 2);
  detail::put_le(out, detail::fnv1a(out, out.size()), 8);
  return out;
}

inline void write_table(const WinTable& t, std::ostream& out) {
  std::string bytes = encode_table(t);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("failed to write table");
}

/// Decodes a table for g with c cops. Throws FormatError when the header does
/// not match or the checksum fails.
inline WinTable decode_table(const GPGraph& g, int c, Symmetry symmetry, const std::string& bytes) {
  if (bytes.size() < 40 || bytes.compare(0, 4, "GPWT") != 0) throw FormatError("not a GPWT table");
  std::size_t pos = 4;
  if (detail::get_le(bytes, pos, 4) != kTableVersion) throw FormatError("unsupported table version");
  auto n = detail::get_le(bytes, pos, 4), k = detail::get_le(bytes, pos, 4), cops = detail::get_le(bytes, pos, 4);
  auto sym = detail::get_le(bytes, pos, 1), has_distances = detail::get_le(bytes, pos, 1);
  auto sweeps = detail::get_le(bytes, pos, 2);
  auto stored = detail::get_le(bytes, pos, 8);
  if (n != static_cast<std::uint64_t>(g.n()) || k != static_cast<std::uint64_t>(g.k()) ||
      cops != static_cast<std::uint64_t>(c) || sym != static_cast<std::uint64_t>(symmetry))
    throw FormatError("table header does not match the requested game");
  auto space = std::make_shared<const StateSpace>(g, c, symmetry);
  if (stored != space->stored_states()) throw FormatError("table state count mismatch");
  const std::uint64_t payload = 32 + (stored + 7) / 8 + (has_distances ? stored * 2 : 0);
  if (bytes.size() != payload + 8) throw FormatError("table file has the wrong size");
  std::size_t check_pos = payload;
  if (detail::get_le(bytes, check_pos, 8) != detail::fnv1a(bytes, payload)) throw FormatError("table checksum mismatch");

  const int cells = space->cells();
  std::vector<Mask> cop_win(space->rep_count()), robber_win(space->rep_count());
  for (std::size_t r = 0; r < space->rep_count(); ++r)
    for (int cell = 0; cell < cells; ++cell)
      for (Side side : {Side::Cops, Side::Robber}) {
        std::uint64_t i = (r * cells + cell) * 2 + static_cast<int>(side);
        if (static_cast<unsigned char>(bytes[32 + i / 8]) >> (i % 8) & 1)
          (side == Side::Cops ? cop_win[r] : robber_win[r]) |= bit(cell);
      }
  std::vector<std::uint16_t> distance;
  if (has_distances) {
    distance.resize(stored);
    pos = 32 + (stored + 7) / 8;
    for (auto& d : distance) d = static_cast<std::uint16_t>(detail::get_le(bytes, pos, 2));
  }
  SolveStats stats;
  stats.states = StateIndex::space_size(space->ranker());
  stats.stored_states = stored;
  stats.representatives = space->rep_count();
  stats.sweeps = static_cast<int>(sweeps);
  return WinTable(std::move(space), std::move(cop_win), std::move(robber_win), std::move(distance), stats);
}

inline WinTable read_table(const GPGraph& g, int c, Symmetry symmetry, std::istream& in) {
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_table(g, c, symmetry, bytes);
}

inline std::filesystem::path table_cache_path(const std::filesystem::path& dir, int n, int k, int c, Symmetry symmetry) {
  return dir / ("gpwt-n" + std::to_string(n) + "-k" + std::to_string(k) + "-c" + std::to_string(c) +
                (symmetry == Symmetry::Dihedral ? "-dihedral" : "-none") + ".bin");
}

/// Cache directory: explicit flag, else $GP_PURSUIT_CACHE, else ./gpwt-cache.
inline std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("GP_PURSUIT_CACHE"); env && *env) return env;
  return "gpwt-cache";
}

/// Loads the cached table for (g, c, symmetry) when present and valid.
inline std::optional<WinTable> load_cached_table(const std::filesystem::path& dir, const GPGraph& g, int c,
                                                 Symmetry symmetry) {
  auto path = table_cache_path(dir, g.n(), g.k(), c, symmetry);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    return read_table(g, c, symmetry, in);
  } catch (const FormatError&) {
    return std::nullopt;
  }
}

inline void store_cached_table(const std::filesystem::path& dir, const WinTable& t) {
  std::filesystem::create_directories(dir);
  auto path = table_cache_path(dir, t.n(), t.k(), t.cops(), t.symmetry());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    write_table(t, out);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gpcops
