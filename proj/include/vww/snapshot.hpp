#ifndef VWW_SNAPSHOT_HPP
#define VWW_SNAPSHOT_HPP

#include <filesystem>
#include <utility>

#include "vww/model.hpp"

namespace vww {

/// VWAV binary snapshot, little-endian throughout:
///   offset 0   magic "VWAV"
///   offset 4   u32 version = 1
///   offset 8   u64 grid_n
///   offset 16  f64 t
///   offset 24  f64 delta, beta, epsilon, alpha1, alpha2
///   offset 64  u8 variant (0=linear, 1=simplified, 2=full), 3 zero bytes
///   offset 68  grid_n f64 physical samples of f, then grid_n f64 of f_t
void write_snapshot(const WaveState& s, const ModelParams& p,
                    const std::filesystem::path& path);

/// Parse a VWAV file; throws FormatError (with the byte offset) on bad
/// magic, unsupported version, invalid fields, or truncation.
std::pair<WaveState, ModelParams> read_snapshot(const std::filesystem::path& path);

} // namespace vww

#endif // VWW_SNAPSHOT_HPP
