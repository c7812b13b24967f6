#pragma once

#include <cstdint>
#include <vector>

#include "hgpcert/classical_code.hpp"

namespace hgpcert {

/// Hypergraph product of two classical codes A and B.
///
/// Writing Ha: n_a -> m_a and Hb: n_b -> m_b for the factor parity maps,
/// the product acts on N = n_a*m_b + m_a*n_b qubits with
///
///   Hx = ( Ha (x) I_{m_b} | I_{m_a} (x) Hb ),
///   Hz = ( I_{n_a} (x) Hb^T | Ha^T (x) I_{n_b} ),
///
/// and Hx * Hz^T = 0. Qubits are flattened vertical block first, row-major:
/// vertical qubit (i, j) with i in [n_a], j in [m_b] sits at i*m_b + j, and
/// horizontal qubit (p, q) with p in [m_a], q in [n_b] sits at
/// n_a*m_b + p*n_b + q.
struct HgpCode {
    ClassicalCode a, b;
    BitMatrix hx;  // (m_a*m_b) x N
    BitMatrix hz;  // (n_a*n_b) x N
    std::size_t num_vertical = 0;
    std::size_t num_horizontal = 0;
    std::size_t num_qubits = 0;
    std::size_t k = 0;

    std::size_t vertical_index(std::size_t i, std::size_t j) const { return i * b.m + j; }
    std::size_t horizontal_index(std::size_t p, std::size_t q) const {
        return num_vertical + p * b.n + q;
    }
    bool is_vertical(std::size_t qubit) const { return qubit < num_vertical; }
    std::pair<std::size_t, std::size_t> vertical_coords(std::size_t qubit) const {
        return {qubit / b.m, qubit % b.m};
    }
    std::pair<std::size_t, std::size_t> horizontal_coords(std::size_t qubit) const {
        std::size_t o = qubit - num_vertical;
        return {o / b.n, o % b.n};
    }
};

/// Assembles the product and fails hard if Hx * Hz^T != 0 or if the
/// rank-derived k disagrees with k_a*k_b^T + k_a^T*k_b.
HgpCode product(const ClassicalCode& a, const ClassicalCode& b);

std::size_t logical_qubit_count(const HgpCode& code);

enum class Sector { vertical_restricted, horizontal_restricted, both_sectors, trivial };

/// trivial when k = 0; otherwise classified by which of k_a*k_b^T and
/// k_a^T*k_b vanish.
Sector sector(const HgpCode& code);

const char* to_string(Sector s);

/// Logical operator bases built from factor kernels/cokernels and puncture
/// row-selections. Rows of lz are Z-type logicals (in ker Hx, independent
/// modulo the row space of Hz); symmetrically for lx.
struct LogicalBasis {
    BitMatrix lz;  // k x N
    BitMatrix lx;  // k x N
    IndexSet gamma_zv, gamma_zh, gamma_xv, gamma_xh;
};

LogicalBasis logical_basis(const HgpCode& code);

enum class TautKind { z_vertical, x_vertical, z_horizontal, x_horizontal };

const char* to_string(TautKind k);

/// A logical operator confined to one grid line: Z-vertical v (x) e_j on
/// column j, X-vertical e_i (x) u on row i, and the horizontal mirror
/// images. The profile is the line's cross-section vector.
struct TautOperator {
    TautKind kind;
    std::size_t line;
    BitVector profile;
    BitVector embedded;  // length num_qubits
};

struct TautEnumeration {
    std::vector<TautOperator> ops;
    bool complete = true;  // false when a family was cut off by the budget
};

/// Enumerates all taut operators, capped at `profile_budget` profiles per
/// family (profile counts grow as 2^k - 1).
TautEnumeration taut_operators(const HgpCode& code,
                               std::uint64_t profile_budget = std::uint64_t{1} << 16);

enum class PauliType { X, Z };

const char* to_string(PauliType t);

/// Splits a vertical-sector logical into pairwise-disjoint taut operators
/// of its type whose sum equals v modulo the matching stabilizer row space.
/// Requires sector(code) == vertical_restricted and v a type-consistent
/// logical supported on the vertical block.
std::vector<TautOperator> decompose_taut(const HgpCode& code, const BitVector& v, PauliType type);

}  // namespace hgpcert
