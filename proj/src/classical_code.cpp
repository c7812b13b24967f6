#include "hgpcert/classical_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hgpcert/linalg.hpp"

namespace hgpcert {

namespace {

void check_index_set(const IndexSet& idx, std::size_t n, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= n) throw std::out_of_range(std::string(what) + ": index out of range");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw std::invalid_argument(std::string(what) + ": indices must be strictly ascending");
    }
}

// Advances idx to the next size-|idx| subset of {0..n-1} in lexicographic
// order; returns false after the last subset.
bool next_subset(IndexSet& idx, std::size_t n) {
    const std::size_t e = idx.size();
    if (e == 0) return false;
    std::size_t i = e;
    while (i > 0) {
        --i;
        if (idx[i] + 1 <= n - e + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < e; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

IndexSet first_subset(std::size_t e) {
    IndexSet idx(e);
    for (std::size_t i = 0; i < e; ++i) idx[i] = i;
    return idx;
}

bool disjoint(const IndexSet& a, const IndexSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

std::vector<std::size_t> complement_of(const IndexSet& idx, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n - idx.size());
    std::size_t p = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (p < idx.size() && idx[p] == c)
            ++p;
        else
            out.push_back(c);
    }
    return out;
}

}  // namespace

ClassicalCode ClassicalCode::from_parity_check(BitMatrix h, std::string name) {
    ClassicalCode code;
    code.n = h.cols();
    code.m = h.rows();
    code.G = kernel(h).transposed();
    code.k = code.G.rows();
    code.k_t = code.m - (code.n - code.k);
    code.H = std::move(h);
    code.name = std::move(name);
    return code;
}

ClassicalCode transpose_code(const ClassicalCode& code) {
    std::string name = code.name.empty() ? "" : code.name + "^T";
    return ClassicalCode::from_parity_check(code.H.transposed(), std::move(name));
}

bool is_puncture(const BitMatrix& m, const IndexSet& gamma) {
    check_index_set(gamma, m.cols(), "is_puncture");
    if (gamma.empty()) return true;
    return rank(drop_columns(m, gamma)) == rank(m);
}

std::optional<IndexSet> find_puncture(const BitMatrix& m, std::size_t e) {
    if (e == 0) return IndexSet{};
    RowReducedForm f = row_reduce(m);
    IndexSet free_cols = complement_of(f.pivot_cols, m.cols());
    if (e > free_cols.size()) return std::nullopt;
    free_cols.resize(e);
    return free_cols;
}

BipunctureResult find_simultaneous_bipuncture(const BitMatrix& m1, const BitMatrix& m2,
                                              std::size_t e, const SearchLimits& limits) {
    if (m1.cols() != m2.cols())
        throw std::invalid_argument("find_simultaneous_bipuncture: column count mismatch");
    const std::size_t n = m1.cols();
    BipunctureResult res;
    if (e == 0) {
        res.status = SearchStatus::found;
        return res;
    }
    // Size bounds: an e-puncture needs e <= cols - rank, and two disjoint
    // sets need 2e <= n. Violations are provable absences, not search outcomes.
    if (2 * e > n || e > n - rank(m1) || e > n - rank(m2)) {
        res.status = SearchStatus::absent;
        return res;
    }

    // Non-pivot columns of the stacked matrix puncture both, when enough exist.
    {
        RowReducedForm f = row_reduce(vstack(m1, m2));
        IndexSet free_cols = complement_of(f.pivot_cols, n);
        if (free_cols.size() >= 2 * e) {
            IndexSet gamma(free_cols.begin(), free_cols.begin() + e);
            IndexSet delta(free_cols.begin() + e, free_cols.begin() + 2 * e);
            if (is_puncture(m1, gamma) && is_puncture(m2, gamma) && is_puncture(m1, delta) &&
                is_puncture(m2, delta)) {
                res.status = SearchStatus::found;
                res.gamma = std::move(gamma);
                res.delta = std::move(delta);
                return res;
            }
        }
    }

    if (binomial(n, e) > limits.subset_cap) {
        res.status = SearchStatus::limit_exceeded;
        return res;
    }

    std::uint64_t work = 0;
    std::vector<IndexSet> valid;
    IndexSet idx = first_subset(e);
    do {
        work += 2;
        if (work > limits.work_cap) {
            res.status = SearchStatus::limit_exceeded;
            return res;
        }
        if (is_puncture(m1, idx) && is_puncture(m2, idx)) valid.push_back(idx);
    } while (next_subset(idx, n));

    // First pair in lexicographic (gamma, delta) order.
    for (std::size_t i = 0; i < valid.size(); ++i) {
        for (std::size_t j = 0; j < valid.size(); ++j) {
            if (i == j) continue;
            if (++work > limits.work_cap) {
                res.status = SearchStatus::limit_exceeded;
                return res;
            }
            if (disjoint(valid[i], valid[j])) {
                res.status = SearchStatus::found;
                res.gamma = valid[i];
                res.delta = valid[j];
                return res;
            }
        }
    }
    res.status = SearchStatus::absent;
    return res;
}

CanonicalForm canonical_form(const ClassicalCode& code) {
    if (code.k == 0) throw std::invalid_argument("canonical_form: k = 0");
    RowReducedForm f = row_reduce(code.G);
    std::vector<std::size_t> perm = f.pivot_cols;
    for (std::size_t c : complement_of(f.pivot_cols, code.n)) perm.push_back(c);

    CanonicalForm cf;
    cf.G = select_columns(f.matrix, perm);
    std::vector<std::size_t> tail(code.n - code.k);
    for (std::size_t i = 0; i < tail.size(); ++i) tail[i] = code.k + i;
    BitMatrix j = select_columns(cf.G, tail);
    cf.H = hstack(j.transposed(), BitMatrix::identity(code.n - code.k));
    cf.perm = std::move(perm);
    if (!(cf.H * cf.G.transposed()).is_zero())
        throw std::logic_error("canonical_form: H G^T != 0");
    return cf;
}

namespace {

// With G[:,S] invertible, the reduced form of (G[:,S] | G[:,Sc]) is
// (I_k | J). Returns J, or nothing when G[:,S] is singular.
std::optional<BitMatrix> systematic_block(const BitMatrix& g, const IndexSet& s,
                                          const std::vector<std::size_t>& sc) {
    std::vector<std::size_t> order = s;
    order.insert(order.end(), sc.begin(), sc.end());
    RowReducedForm f = row_reduce(select_columns(g, order));
    const std::size_t k = g.rows();
    if (f.rank != k) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        if (f.pivot_cols[i] != i) return std::nullopt;
    std::vector<std::size_t> tail(g.cols() - k);
    for (std::size_t i = 0; i < tail.size(); ++i) tail[i] = k + i;
    return select_columns(f.matrix, tail);
}

struct RobustHit {
    IndexSet s;
    std::vector<std::size_t> sc;
    BitMatrix j;
};

// The bipuncture the systematic form induces: gamma = S, delta = the k
// copivots of coker(J^T) mapped through Sc.
std::pair<IndexSet, IndexSet> bipuncture_from_hit(const RobustHit& hit) {
    const std::size_t m = hit.sc.size();
    BitMatrix ck = cokernel(hit.j.transposed());
    RowReducedForm f = row_reduce(ck);
    std::vector<std::size_t> copivots = complement_of(f.pivot_cols, m);
    IndexSet delta;
    delta.reserve(copivots.size());
    for (std::size_t i : copivots) delta.push_back(hit.sc[i]);
    std::sort(delta.begin(), delta.end());
    return {hit.s, delta};
}

}  // namespace

RobustnessCertificate is_robust(const ClassicalCode& code, const SearchLimits& limits) {
    RobustnessCertificate cert;
    cert.n = code.n;
    cert.k = code.k;
    if (code.k == 0) {
        // Empty sets puncture everything, so a k-bipuncture demands nothing.
        cert.verdict = RobustVerdict::robust;
        cert.bipuncture = {IndexSet{}, IndexSet{}};
        return cert;
    }
    // J is k x (n-k); full row rank k is impossible when k > n - k, and two
    // disjoint k-sets do not fit either.
    if (2 * code.k > code.n) {
        cert.verdict = RobustVerdict::not_robust;
        cert.search_exhausted = true;
        return cert;
    }

    auto try_subset = [&](const IndexSet& s) -> std::optional<RobustHit> {
        std::vector<std::size_t> sc = complement_of(s, code.n);
        std::optional<BitMatrix> j = systematic_block(code.G, s, sc);
        if (!j) return std::nullopt;
        if (rank(*j) != code.k) return std::nullopt;
        return RobustHit{s, std::move(sc), std::move(*j)};
    };

    std::optional<RobustHit> hit;
    bool exhaustive = binomial(code.n, code.k) <= limits.subset_cap;
    if (exhaustive) {
        IndexSet s = first_subset(code.k);
        do {
            hit = try_subset(s);
            if (hit) break;
        } while (next_subset(s, code.n));
    } else {
        // Past the cap, only the reduced-form pivots are tried; a miss is
        // reported as undecided, never as a verdict.
        hit = try_subset(row_reduce(code.G).pivot_cols);
    }

    if (!hit) {
        cert.verdict = exhaustive ? RobustVerdict::not_robust : RobustVerdict::undecided;
        cert.search_exhausted = exhaustive;
        return cert;
    }

    auto [gamma, delta] = bipuncture_from_hit(*hit);
    if (gamma.size() != code.k || delta.size() != code.k || !disjoint(gamma, delta) ||
        !is_puncture(code.G, gamma) || !is_puncture(code.H, gamma) ||
        !is_puncture(code.G, delta) || !is_puncture(code.H, delta))
        throw std::logic_error("is_robust: constructed bipuncture failed re-verification");

    cert.verdict = RobustVerdict::robust;
    cert.bipuncture = {std::move(gamma), std::move(delta)};
    std::vector<std::size_t> perm = hit->s;
    perm.insert(perm.end(), hit->sc.begin(), hit->sc.end());
    cert.canonical = CanonicalWitness{std::move(perm), std::move(hit->j)};
    return cert;
}

std::optional<std::size_t> distance(const ClassicalCode& code, std::uint64_t limit) {
    if (code.k == 0) throw std::invalid_argument("distance: k = 0");
    if (code.k >= 63 || (std::uint64_t{1} << code.k) > limit) return std::nullopt;
    // Gray-code walk: one row XOR per codeword.
    BitVector cw(code.n);
    std::size_t best = code.n + 1;
    const std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t i = 1; i < total; ++i) {
        cw ^= code.G.row(static_cast<std::size_t>(std::countr_zero(i)));
        best = std::min(best, cw.popcount());
    }
    return best;
}

std::uint64_t binomial(std::size_t n, std::size_t e) {
    if (e > n) return 0;
    if (e > n - e) e = n - e;
    const std::uint64_t cap = std::uint64_t{1} << 63;
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= e; ++i) {
        r = r * (n - e + i) / i;
        if (r > cap) return cap;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace hgpcert
