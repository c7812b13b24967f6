#include "hgpcert/region.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgpcert/linalg.hpp"

namespace hgpcert {

namespace {

void insert_sorted_unique(IndexSet& v, std::size_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

bool intersect_nonempty(const IndexSet& a, const IndexSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace

QubitRegion QubitRegion::make(const HgpCode& code, IndexSet indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    QubitRegion r;
    for (std::size_t q : indices) {
        if (q >= code.num_qubits) throw std::out_of_range("QubitRegion: index out of range");
        if (code.is_vertical(q)) {
            auto [i, j] = code.vertical_coords(q);
            insert_sorted_unique(r.vertical_rows, i);
            insert_sorted_unique(r.vertical_cols, j);
        } else {
            auto [p, q2] = code.horizontal_coords(q);
            insert_sorted_unique(r.horizontal_rows, p);
            insert_sorted_unique(r.horizontal_cols, q2);
        }
    }
    r.indices = std::move(indices);
    return r;
}

QubitRegion region_union(const HgpCode& code, const QubitRegion& a, const QubitRegion& b) {
    IndexSet idx = a.indices;
    idx.insert(idx.end(), b.indices.begin(), b.indices.end());
    return QubitRegion::make(code, std::move(idx));
}

QubitRegion region_intersection(const HgpCode& code, const QubitRegion& a,
                                const QubitRegion& b) {
    IndexSet idx;
    std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                          std::back_inserter(idx));
    return QubitRegion::make(code, std::move(idx));
}

std::optional<BitVector> logicals_supported_on(const HgpCode& code, const QubitRegion& region,
                                               PauliType type) {
    const BitMatrix& checks = (type == PauliType::Z) ? code.hx : code.hz;
    const BitMatrix& stabs = (type == PauliType::Z) ? code.hz : code.hx;

    // Rows forcing zeros outside the region.
    IndexSet complement;
    complement.reserve(code.num_qubits - region.size());
    {
        std::size_t p = 0;
        for (std::size_t q = 0; q < code.num_qubits; ++q) {
            if (p < region.indices.size() && region.indices[p] == q)
                ++p;
            else
                complement.push_back(q);
        }
    }
    BitMatrix indicator(complement.size(), code.num_qubits);
    for (std::size_t i = 0; i < complement.size(); ++i) indicator.set(i, complement[i], true);

    BitMatrix basis = kernel(vstack(checks, indicator));  // num_qubits x d
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        BitVector v(code.num_qubits);
        for (std::size_t r = 0; r < code.num_qubits; ++r)
            if (basis.get(r, c)) v.set(r, true);
        if (!rowspace_member(stabs, v)) return v;
    }
    return std::nullopt;
}

CorrectabilityCertificate is_correctable(const HgpCode& code, const QubitRegion& region) {
    CorrectabilityCertificate cert;
    cert.region = region;
    if (auto x = logicals_supported_on(code, region, PauliType::X)) {
        cert.correctable = false;
        cert.witness = {PauliType::X, std::move(*x)};
        return cert;
    }
    if (auto z = logicals_supported_on(code, region, PauliType::Z)) {
        cert.correctable = false;
        cert.witness = {PauliType::Z, std::move(*z)};
        return cert;
    }
    cert.correctable = true;
    return cert;
}

bool verify_witness(const HgpCode& code, const QubitRegion& region, PauliType type,
                    const BitVector& witness) {
    if (witness.size() != code.num_qubits) return false;
    const BitMatrix& checks = (type == PauliType::Z) ? code.hx : code.hz;
    const BitMatrix& stabs = (type == PauliType::Z) ? code.hz : code.hx;
    if (!checks.mul(witness).is_zero()) return false;
    BitVector mask = BitVector::from_indices(code.num_qubits, region.indices);
    if (!witness.is_subset_of(mask)) return false;
    return !rowspace_member(stabs, witness);
}

SeparationResult separation(const HgpCode& code, const QubitRegion& alpha,
                            const QubitRegion& beta) {
    (void)code;
    if (!alpha.vertical_only() || !beta.vertical_only())
        throw std::invalid_argument("separation: region touches the horizontal block");
    SeparationResult r;
    r.horizontally = !intersect_nonempty(alpha.vertical_cols, beta.vertical_cols);
    r.vertically = !intersect_nonempty(alpha.vertical_rows, beta.vertical_rows);
    return r;
}

}  // namespace hgpcert
