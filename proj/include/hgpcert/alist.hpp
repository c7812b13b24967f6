#pragma once

#include <string>
#include <string_view>

#include "hgpcert/bitmatrix.hpp"

namespace hgpcert {

/// Parses the standard LDPC alist interchange format: "n m" header, max
/// column/row weights, per-column and per-row 1-based index lists with
/// zero padding (padding entries are ignored on read).
BitMatrix parse_alist(std::string_view text);

std::string to_alist(const BitMatrix& h);

BitMatrix load_alist(const std::string& path);
void save_alist(const std::string& path, const BitMatrix& h);

}  // namespace hgpcert
