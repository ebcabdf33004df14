#pragma once

#include <string>

#include "qdc/density_state.hpp"

namespace qdc {

// Line-oriented state file format ('#' starts a comment, blank lines are
// skipped):
//   dims: d1 d2 ... dN
//   roles: S R ... (one per party)
//   kind: pure | mixed
//   <whitespace-separated "re im" pairs: amplitudes in basis order for pure,
//    row-major matrix entries for mixed>
// Parsing is locale-independent (dot decimal separator only). Senders are
// labeled A1..Ak, receivers B1..Bm in party order.

DensityState parse_state_file(const std::string& text);  // throws syntax_error / validation_failed
DensityState load_state_file(const std::string& path);   // + io_error
std::string format_state_file(const DensityState& s);
void write_state_file(const DensityState& s, const std::string& path);  // throws io_error

}  // namespace qdc
