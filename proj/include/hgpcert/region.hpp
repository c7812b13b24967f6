#pragma once

#include <optional>
#include <utility>

#include "hgpcert/hgp_code.hpp"

namespace hgpcert {

/// A subset of qubits with its grid footprint: which vertical rows/columns
/// and horizontal rows/columns it touches.
struct QubitRegion {
    IndexSet indices;  // sorted, distinct, < num_qubits
    IndexSet vertical_rows, vertical_cols;
    IndexSet horizontal_rows, horizontal_cols;

    static QubitRegion make(const HgpCode& code, IndexSet indices);
    bool empty() const { return indices.empty(); }
    std::size_t size() const { return indices.size(); }
    bool vertical_only() const { return horizontal_rows.empty() && horizontal_cols.empty(); }
};

QubitRegion region_union(const HgpCode& code, const QubitRegion& a, const QubitRegion& b);
QubitRegion region_intersection(const HgpCode& code, const QubitRegion& a, const QubitRegion& b);

/// Exact search for a logical of the given type supported inside the
/// region: a basis of {v in ker(checks) : supp(v) within region} is
/// computed by stacking the opposite checks with complement-indicator rows,
/// and the first basis element outside the stabilizer row space is
/// returned. No sampling, no heuristics.
std::optional<BitVector> logicals_supported_on(const HgpCode& code, const QubitRegion& region,
                                               PauliType type);

struct CorrectabilityCertificate {
    QubitRegion region;
    bool correctable = false;
    std::optional<std::pair<PauliType, BitVector>> witness;
};

/// A region is correctable when it supports no nontrivial logical of
/// either type; checking the two pure types suffices for a CSS code.
CorrectabilityCertificate is_correctable(const HgpCode& code, const QubitRegion& region);

/// Re-checks a witness: kernel membership, support containment, and
/// non-membership in the stabilizer row space.
bool verify_witness(const HgpCode& code, const QubitRegion& region, PauliType type,
                    const BitVector& witness);

struct SeparationResult {
    bool horizontally = false;  // no vertical-grid column meets both regions
    bool vertically = false;    // no vertical-grid row meets both regions
};

/// Both regions must lie inside the vertical block.
SeparationResult separation(const HgpCode& code, const QubitRegion& alpha,
                            const QubitRegion& beta);

}  // namespace hgpcert
