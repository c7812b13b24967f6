#include "hgpcert/hgp_code.hpp"

#include <stdexcept>

#include "hgpcert/linalg.hpp"

namespace hgpcert {

namespace {

/// Rows of the identity indexed by gamma: the |gamma| x n row-selection
/// matrix a puncture set promotes to.
BitMatrix promote(const IndexSet& gamma, std::size_t n) {
    BitMatrix m(gamma.size(), n);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] >= n) throw std::out_of_range("promote: index out of range");
        m.set(i, gamma[i], true);
    }
    return m;
}

BitMatrix pad_right(const BitMatrix& m, std::size_t total_cols) {
    return hstack(m, BitMatrix(m.rows(), total_cols - m.cols()));
}

BitMatrix pad_left(const BitMatrix& m, std::size_t total_cols) {
    return hstack(BitMatrix(m.rows(), total_cols - m.cols()), m);
}

}  // namespace

HgpCode product(const ClassicalCode& a, const ClassicalCode& b) {
    HgpCode code;
    code.a = a;
    code.b = b;
    code.num_vertical = a.n * b.m;
    code.num_horizontal = a.m * b.n;
    code.num_qubits = code.num_vertical + code.num_horizontal;

    code.hx = hstack(kron(a.H, BitMatrix::identity(b.m)), kron(BitMatrix::identity(a.m), b.H));
    code.hz = hstack(kron(BitMatrix::identity(a.n), b.H.transposed()),
                     kron(a.H.transposed(), BitMatrix::identity(b.n)));

    if (!(code.hx * code.hz.transposed()).is_zero())
        throw std::logic_error("product: Hx Hz^T != 0");

    code.k = code.num_qubits - rank(code.hx) - rank(code.hz);
    if (code.k != a.k * b.k_t + a.k_t * b.k)
        throw std::logic_error("product: rank-derived k disagrees with k_a k_b^T + k_a^T k_b");
    return code;
}

std::size_t logical_qubit_count(const HgpCode& code) {
    const std::size_t by_rank = code.num_qubits - rank(code.hx) - rank(code.hz);
    if (by_rank != code.a.k * code.b.k_t + code.a.k_t * code.b.k)
        throw std::logic_error("logical_qubit_count: rank/count mismatch");
    return by_rank;
}

Sector sector(const HgpCode& code) {
    const std::size_t vertical = code.a.k * code.b.k_t;
    const std::size_t horizontal = code.a.k_t * code.b.k;
    if (vertical == 0 && horizontal == 0) return Sector::trivial;
    if (horizontal == 0) return Sector::vertical_restricted;
    if (vertical == 0) return Sector::horizontal_restricted;
    return Sector::both_sectors;
}

const char* to_string(Sector s) {
    switch (s) {
        case Sector::vertical_restricted: return "vertical_restricted";
        case Sector::horizontal_restricted: return "horizontal_restricted";
        case Sector::both_sectors: return "both_sectors";
        case Sector::trivial: return "trivial";
    }
    return "?";
}

const char* to_string(TautKind k) {
    switch (k) {
        case TautKind::z_vertical: return "z_vertical";
        case TautKind::x_vertical: return "x_vertical";
        case TautKind::z_horizontal: return "z_horizontal";
        case TautKind::x_horizontal: return "x_horizontal";
    }
    return "?";
}

const char* to_string(PauliType t) { return t == PauliType::X ? "X" : "Z"; }

LogicalBasis logical_basis(const HgpCode& code) {
    const ClassicalCode& a = code.a;
    const ClassicalCode& b = code.b;

    auto need = [](std::optional<IndexSet> p, const char* what) {
        if (!p) throw std::runtime_error(std::string("logical_basis: no puncture for ") + what);
        return std::move(*p);
    };
    LogicalBasis basis;
    basis.gamma_zv = need(find_puncture(b.H.transposed(), b.k_t), "Hb^T");
    basis.gamma_xv = need(find_puncture(a.H, a.k), "Ha");
    basis.gamma_zh = need(find_puncture(a.H.transposed(), a.k_t), "Ha^T");
    basis.gamma_xh = need(find_puncture(b.H, b.k), "Hb");

    BitMatrix ga = kernel(a.H).transposed();  // k_a x n_a
    BitMatrix gb = kernel(b.H).transposed();  // k_b x n_b
    BitMatrix ca = cokernel(a.H);             // k_a^T x m_a
    BitMatrix cb = cokernel(b.H);             // k_b^T x m_b

    BitMatrix lz_vert = kron(ga, promote(basis.gamma_zv, b.m));
    BitMatrix lz_horiz = kron(promote(basis.gamma_zh, a.m), gb);
    basis.lz = vstack(pad_right(lz_vert, code.num_qubits),
                      pad_left(lz_horiz, code.num_qubits));

    BitMatrix lx_vert = kron(promote(basis.gamma_xv, a.n), cb);
    BitMatrix lx_horiz = kron(ca, promote(basis.gamma_xh, b.n));
    basis.lx = vstack(pad_right(lx_vert, code.num_qubits),
                      pad_left(lx_horiz, code.num_qubits));

    if (basis.lz.rows() != code.k || basis.lx.rows() != code.k)
        throw std::logic_error("logical_basis: row count != k");
    if (!(code.hx * basis.lz.transposed()).is_zero())
        throw std::logic_error("logical_basis: Lz rows not in ker Hx");
    if (!(code.hz * basis.lx.transposed()).is_zero())
        throw std::logic_error("logical_basis: Lx rows not in ker Hz");
    if (rank(vstack(code.hz, basis.lz)) != rank(code.hz) + code.k)
        throw std::logic_error("logical_basis: Lz rows dependent modulo Hz");
    if (rank(vstack(code.hx, basis.lx)) != rank(code.hx) + code.k)
        throw std::logic_error("logical_basis: Lx rows dependent modulo Hx");
    return basis;
}

namespace {

// Nonzero row-space elements of `basis` in a fixed order (combination
// counter ascending), at most `budget` of them.
std::vector<BitVector> profiles(const BitMatrix& basis, std::uint64_t budget, bool& complete) {
    std::vector<BitVector> out;
    if (basis.rows() == 0) return out;
    if (basis.rows() >= 63) {
        complete = false;
        return out;  // 2^k - 1 would overflow anything reasonable anyway
    }
    const std::uint64_t total = (std::uint64_t{1} << basis.rows()) - 1;
    const std::uint64_t take = std::min(total, budget);
    if (take < total) complete = false;
    BitVector acc(basis.cols());
    // Gray-code order keeps this one row-XOR per step; indices shift by one
    // because combination 0 is excluded.
    std::uint64_t prev = 0;
    for (std::uint64_t i = 1; i <= take; ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        std::uint64_t diff = gray ^ prev;
        while (diff) {
            acc ^= basis.row(static_cast<std::size_t>(std::countr_zero(diff)));
            diff &= diff - 1;
        }
        prev = gray;
        out.push_back(acc);
    }
    return out;
}

BitVector embed_vertical(const HgpCode& code, const BitVector& profile, std::size_t line,
                         TautKind kind) {
    BitVector v(code.num_qubits);
    for (std::size_t s : profile.support()) {
        if (kind == TautKind::z_vertical)
            v.set(code.vertical_index(s, line), true);  // profile over rows i, fixed column j
        else
            v.set(code.vertical_index(line, s), true);  // fixed row i, profile over columns j
    }
    return v;
}

BitVector embed_horizontal(const HgpCode& code, const BitVector& profile, std::size_t line,
                           TautKind kind) {
    BitVector v(code.num_qubits);
    for (std::size_t s : profile.support()) {
        if (kind == TautKind::x_horizontal)
            v.set(code.horizontal_index(s, line), true);
        else
            v.set(code.horizontal_index(line, s), true);
    }
    return v;
}

}  // namespace

TautEnumeration taut_operators(const HgpCode& code, std::uint64_t profile_budget) {
    TautEnumeration out;
    BitMatrix ga = kernel(code.a.H).transposed();
    BitMatrix gb = kernel(code.b.H).transposed();
    BitMatrix ca = cokernel(code.a.H);
    BitMatrix cb = cokernel(code.b.H);

    // Z-vertical: v (x) e_j, v in the row space of Ga, one per column j.
    for (const BitVector& v : profiles(ga, profile_budget, out.complete))
        for (std::size_t j = 0; j < code.b.m; ++j)
            out.ops.push_back({TautKind::z_vertical, j, v,
                               embed_vertical(code, v, j, TautKind::z_vertical)});
    // X-vertical: e_i (x) u, u in the row space of coker(Hb), one per row i.
    for (const BitVector& u : profiles(cb, profile_budget, out.complete))
        for (std::size_t i = 0; i < code.a.n; ++i)
            out.ops.push_back({TautKind::x_vertical, i, u,
                               embed_vertical(code, u, i, TautKind::x_vertical)});
    // Z-horizontal: e_p (x) w, w in the row space of Gb.
    for (const BitVector& w : profiles(gb, profile_budget, out.complete))
        for (std::size_t p = 0; p < code.a.m; ++p)
            out.ops.push_back({TautKind::z_horizontal, p, w,
                               embed_horizontal(code, w, p, TautKind::z_horizontal)});
    // X-horizontal: u (x) e_q, u in the row space of coker(Ha).
    for (const BitVector& u : profiles(ca, profile_budget, out.complete))
        for (std::size_t q = 0; q < code.b.n; ++q)
            out.ops.push_back({TautKind::x_horizontal, q, u,
                               embed_horizontal(code, u, q, TautKind::x_horizontal)});
    return out;
}

std::vector<TautOperator> decompose_taut(const HgpCode& code, const BitVector& v,
                                         PauliType type) {
    if (sector(code) != Sector::vertical_restricted)
        throw std::invalid_argument("decompose_taut: code is not vertical-restricted");
    if (v.size() != code.num_qubits)
        throw std::invalid_argument("decompose_taut: vector length != qubit count");
    for (std::size_t q : v.support())
        if (!code.is_vertical(q))
            throw std::invalid_argument("decompose_taut: support touches the horizontal block");

    const BitMatrix& stab = (type == PauliType::Z) ? code.hz : code.hx;
    const BitMatrix& check = (type == PauliType::Z) ? code.hx : code.hz;
    if (!check.mul(v).is_zero())
        throw std::invalid_argument("decompose_taut: vector is not a logical of the given type");

    // Taut family as rows: Z uses Ga (x) I_{m_b} (profiles down columns),
    // X uses I_{n_a} (x) coker(Hb) (profiles along rows).
    BitMatrix family;
    if (type == PauliType::Z)
        family = kron(kernel(code.a.H).transposed(), BitMatrix::identity(code.b.m));
    else
        family = kron(BitMatrix::identity(code.a.n), cokernel(code.b.H));
    BitMatrix family_emb = hstack(family, BitMatrix(family.rows(), code.num_horizontal));

    auto coeffs = rowspace_coefficients(vstack(family_emb, stab), v);
    if (!coeffs)
        throw std::logic_error("decompose_taut: vertical logical not in taut + stabilizer span");

    std::vector<TautOperator> ops;
    if (type == PauliType::Z) {
        const std::size_t ka = code.a.k, mb = code.b.m;
        BitMatrix ga = kernel(code.a.H).transposed();
        for (std::size_t j = 0; j < mb; ++j) {
            BitVector profile(code.a.n);
            for (std::size_t c = 0; c < ka; ++c)
                if (coeffs->get(c * mb + j)) profile ^= ga.row(c);
            if (!profile.is_zero())
                ops.push_back({TautKind::z_vertical, j, profile,
                               embed_vertical(code, profile, j, TautKind::z_vertical)});
        }
    } else {
        const std::size_t kbt = code.b.k_t, na = code.a.n;
        BitMatrix cb = cokernel(code.b.H);
        for (std::size_t i = 0; i < na; ++i) {
            BitVector profile(code.b.m);
            for (std::size_t c = 0; c < kbt; ++c)
                if (coeffs->get(i * kbt + c)) profile ^= cb.row(c);
            if (!profile.is_zero())
                ops.push_back({TautKind::x_vertical, i, profile,
                               embed_vertical(code, profile, i, TautKind::x_vertical)});
        }
    }

    BitVector recombined(code.num_qubits);
    for (const TautOperator& op : ops) recombined ^= op.embedded;
    if (!rowspace_member(stab, recombined ^ v))
        throw std::logic_error("decompose_taut: recombination differs from input mod stabilizers");
    return ops;
}

}  // namespace hgpcert
