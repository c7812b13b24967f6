#include "hgpcert/alist.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hgpcert {

namespace {

long read_long(std::istringstream& in, const char* what) {
    long v;
    if (!(in >> v)) throw std::invalid_argument(std::string("alist: missing ") + what);
    return v;
}

}  // namespace

BitMatrix parse_alist(std::string_view text) {
    std::istringstream in{std::string(text)};
    const long n = read_long(in, "column count");
    const long m = read_long(in, "row count");
    if (n < 0 || m < 0) throw std::invalid_argument("alist: negative dimension");
    const long max_col = read_long(in, "max column weight");
    const long max_row = read_long(in, "max row weight");
    if (max_col < 0 || max_row < 0) throw std::invalid_argument("alist: negative weight");

    std::vector<long> col_w(n), row_w(m);
    for (long c = 0; c < n; ++c) {
        col_w[c] = read_long(in, "column weight");
        if (col_w[c] < 0 || col_w[c] > max_col)
            throw std::invalid_argument("alist: column weight out of range");
    }
    for (long r = 0; r < m; ++r) {
        row_w[r] = read_long(in, "row weight");
        if (row_w[r] < 0 || row_w[r] > max_row)
            throw std::invalid_argument("alist: row weight out of range");
    }

    BitMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long c = 0; c < n; ++c) {
        long seen = 0;
        for (long t = 0; t < max_col; ++t) {
            const long r = read_long(in, "column entry");
            if (r == 0) continue;  // padding
            if (r < 1 || r > m) throw std::invalid_argument("alist: row index out of range");
            h.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c), true);
            ++seen;
        }
        if (seen != col_w[c]) throw std::invalid_argument("alist: column weight mismatch");
    }
    // The row lists restate the same matrix; read and cross-check them.
    for (long r = 0; r < m; ++r) {
        long seen = 0;
        for (long t = 0; t < max_row; ++t) {
            const long c = read_long(in, "row entry");
            if (c == 0) continue;
            if (c < 1 || c > n) throw std::invalid_argument("alist: column index out of range");
            if (!h.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c - 1)))
                throw std::invalid_argument("alist: row list disagrees with column list");
            ++seen;
        }
        if (seen != row_w[r]) throw std::invalid_argument("alist: row weight mismatch");
    }
    return h;
}

std::string to_alist(const BitMatrix& h) {
    const std::size_t m = h.rows(), n = h.cols();
    std::vector<std::vector<std::size_t>> by_col(n), by_row(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (h.get(r, c)) {
                by_col[c].push_back(r + 1);
                by_row[r].push_back(c + 1);
            }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : by_col) max_col = std::max(max_col, v.size());
    for (const auto& v : by_row) max_row = std::max(max_row, v.size());

    std::ostringstream out;
    out << n << ' ' << m << '\n' << max_col << ' ' << max_row << '\n';
    for (std::size_t c = 0; c < n; ++c) out << by_col[c].size() << (c + 1 < n ? ' ' : '\n');
    if (n == 0) out << '\n';
    for (std::size_t r = 0; r < m; ++r) out << by_row[r].size() << (r + 1 < m ? ' ' : '\n');
    if (m == 0) out << '\n';
    auto emit = [&out](const std::vector<std::size_t>& v, std::size_t width) {
        for (std::size_t t = 0; t < width; ++t)
            out << (t < v.size() ? v[t] : 0) << (t + 1 < width ? ' ' : '\n');
        if (width == 0) out << '\n';
    };
    for (std::size_t c = 0; c < n; ++c) emit(by_col[c], max_col);
    for (std::size_t r = 0; r < m; ++r) emit(by_row[r], max_row);
    return out.str();
}

BitMatrix load_alist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_alist(buf.str());
}

void save_alist(const std::string& path, const BitMatrix& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << to_alist(h);
}

}  // namespace hgpcert
