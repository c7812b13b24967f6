#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgpcert/bitmatrix.hpp"

namespace hgpcert {

/// Sorted, distinct column (or qubit) indices.
using IndexSet = std::vector<std::size_t>;

/// A classical linear code presented by its parity check matrix H (m x n).
/// The generator G is the transposed kernel of H and is derived once at
/// construction. H may contain redundant rows; k and k_t come from rank(H).
struct ClassicalCode {
    BitMatrix H;
    BitMatrix G;
    std::size_t n = 0;    // length (columns of H)
    std::size_t m = 0;    // checks (rows of H)
    std::size_t k = 0;    // n - rank(H)
    std::size_t k_t = 0;  // m - rank(H)
    std::string name;

    static ClassicalCode from_parity_check(BitMatrix h, std::string name = "");
};

/// The code whose parity check is H^T.
ClassicalCode transpose_code(const ClassicalCode& code);

/// True iff deleting the gamma-indexed columns of m preserves its rank;
/// equivalently no nonzero row-space vector is supported inside gamma.
bool is_puncture(const BitMatrix& m, const IndexSet& gamma);

/// Lexicographically smallest e-subset of the non-pivot columns, which
/// always punctures. No e-puncture exists when e exceeds cols - rank:
/// deleting e columns leaves at most cols - e independent columns.
std::optional<IndexSet> find_puncture(const BitMatrix& m, std::size_t e);

struct SearchLimits {
    std::uint64_t subset_cap = std::uint64_t{1} << 20;  // max C(n,e) enumerated
    std::uint64_t work_cap = std::uint64_t{1} << 24;    // max pair checks in bipuncture search
    std::uint64_t distance_limit = std::uint64_t{1} << 20;
    std::uint64_t taut_budget = std::uint64_t{1} << 16;
};

enum class SearchStatus { found, absent, limit_exceeded };

struct BipunctureResult {
    SearchStatus status = SearchStatus::absent;
    IndexSet gamma, delta;
};

/// Finds disjoint sets gamma, delta of size e, each puncturing both m1 and
/// m2. Tries the stacked-matrix non-pivot columns first; otherwise falls
/// back to lexicographic enumeration, returning the first hit. `absent` is
/// reported only after exhausting the subset space; past the caps the
/// result is limit_exceeded, never a guess.
BipunctureResult find_simultaneous_bipuncture(const BitMatrix& m1, const BitMatrix& m2,
                                              std::size_t e, const SearchLimits& limits = {});

struct CanonicalForm {
    BitMatrix G;                    // (I_k  J)
    BitMatrix H;                    // (J^T  I_m)
    std::vector<std::size_t> perm;  // perm[new_col] = original column
};

/// Systematic form of generator and parity check under one column
/// permutation, with H * G^T == 0. Requires k >= 1.
CanonicalForm canonical_form(const ClassicalCode& code);

enum class RobustVerdict { robust, not_robust, undecided };

struct CanonicalWitness {
    std::vector<std::size_t> perm;
    BitMatrix J;
};

struct RobustnessCertificate {
    RobustVerdict verdict = RobustVerdict::undecided;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::pair<IndexSet, IndexSet>> bipuncture;
    std::optional<CanonicalWitness> canonical;
    bool search_exhausted = false;
};

/// Decides whether G and H admit a simultaneous k-bipuncture by searching
/// for a size-k column set S with G[:,S] invertible and the complementary
/// block J of full row rank; both witnesses are constructed and re-verified
/// through is_puncture before returning. A negative verdict carries
/// search_exhausted = true; past the subset cap the verdict is undecided.
RobustnessCertificate is_robust(const ClassicalCode& code, const SearchLimits& limits = {});

/// Minimum nonzero codeword weight by enumerating all 2^k - 1 codewords;
/// absent when 2^k exceeds the limit. Requires k >= 1.
std::optional<std::size_t> distance(const ClassicalCode& code,
                                    std::uint64_t limit = std::uint64_t{1} << 20);

/// C(n, e) saturated at 2^63.
std::uint64_t binomial(std::size_t n, std::size_t e);

}  // namespace hgpcert
