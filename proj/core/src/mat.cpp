#include "galmod/mat.hpp"

#include <algorithm>
#include <cstdlib>

namespace galmod {

namespace {

i64 checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw error("matrix arithmetic overflow");
    return static_cast<i64>(v);
}

// rows[i] <- x*rows[i] + y*rows[j], rows[j] <- z*rows[i] + w*rows[j]
// (simultaneously, with the old values).
void row_pair_op(Mat& m, std::size_t i, std::size_t j, i64 x, i64 y, i64 z, i64 w) {
    for (std::size_t c = 0; c < m[i].size(); ++c) {
        i128 a = m[i][c], b = m[j][c];
        m[i][c] = checked(x * a + y * b);
        m[j][c] = checked(z * a + w * b);
    }
}

void col_pair_op(Mat& m, std::size_t i, std::size_t j, i64 x, i64 y, i64 z, i64 w) {
    for (auto& row : m) {
        i128 a = row[i], b = row[j];
        row[i] = checked(x * a + y * b);
        row[j] = checked(z * a + w * b);
    }
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

Mat identity_mat(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    Mat r(n, Vec(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < p; ++j)
                r[i][j] = checked(static_cast<i128>(r[i][j]) +
                                  static_cast<i128>(a[i][t]) * b[t][j]);
        }
    return r;
}

Mat mat_transpose(const Mat& a) {
    std::size_t n = a.size(), c = n ? a[0].size() : 0;
    Mat r(c, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c; ++j) r[j][i] = a[i][j];
    return r;
}

Mat hnf(Mat m) {
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        // gather the column gcd into row r
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            i64 x, y;
            i64 a = m[r][c], b = m[i][c];
            i64 g = ext_gcd(a, b, x, y);
            row_pair_op(m, r, i, x, y, -b / g, a / g);
        }
        if (m[r][c] < 0)
            for (auto& v : m[r]) v = -v;
        for (std::size_t i = 0; i < r; ++i) {
            if (m[i][c] == 0) continue;
            i64 q = floor_div(m[i][c], m[r][c]);
            if (q != 0)
                for (std::size_t cc = 0; cc < cols; ++cc)
                    m[i][cc] = checked(static_cast<i128>(m[i][cc]) -
                                       static_cast<i128>(q) * m[r][cc]);
        }
        ++r;
    }
    m.resize(r);
    return m;
}

i64 hnf_det(const Mat& h) {
    i64 d = 1;
    for (std::size_t i = 0; i < h.size(); ++i) d = checked_mul(d, h[i][i]);
    return d;
}

std::optional<Vec> hnf_solve(const Mat& h, Vec target) {
    Vec coeff(h.size(), 0);
    for (std::size_t r = 0; r < h.size(); ++r) {
        std::size_t c = 0;
        while (c < h[r].size() && h[r][c] == 0) ++c;
        if (c == h[r].size()) continue;
        if (target[c] % h[r][c] != 0) return std::nullopt;
        i64 q = target[c] / h[r][c];
        coeff[r] = q;
        if (q != 0)
            for (std::size_t cc = c; cc < target.size(); ++cc)
                target[cc] = checked(static_cast<i128>(target[cc]) -
                                     static_cast<i128>(q) * h[r][cc]);
    }
    for (i64 v : target)
        if (v != 0) return std::nullopt;
    return coeff;
}

Mat int_kernel(const Mat& a, std::size_t cols) {
    Mat work = a;
    for (auto& row : work) row.resize(cols, 0);
    Mat v = identity_mat(cols);
    std::size_t cpos = 0;
    for (std::size_t r = 0; r < work.size() && cpos < cols; ++r) {
        std::size_t j = cpos;
        while (j < cols && work[r][j] == 0) ++j;
        if (j == cols) continue;
        if (j != cpos) {
            col_pair_op(work, cpos, j, 0, 1, 1, 0);
            col_pair_op(v, cpos, j, 0, 1, 1, 0);
        }
        for (j = cpos + 1; j < cols; ++j) {
            if (work[r][j] == 0) continue;
            i64 x, y;
            i64 aa = work[r][cpos], bb = work[r][j];
            i64 g = ext_gcd(aa, bb, x, y);
            col_pair_op(work, cpos, j, x, y, -bb / g, aa / g);
            col_pair_op(v, cpos, j, x, y, -bb / g, aa / g);
        }
        ++cpos;
    }
    Mat kernel;
    for (std::size_t j = cpos; j < cols; ++j) {
        Vec row(cols);
        for (std::size_t i = 0; i < cols; ++i) row[i] = v[i][j];
        kernel.push_back(std::move(row));
    }
    return kernel;
}

namespace {

// In-place Smith reduction of the top-left t..end block; v (if nonnull)
// accumulates the column transform.  When mod > 0 every entry is kept
// reduced into [0, mod), which computes the Smith form of the lattice
// span(rows) + mod Z^n with bounded coefficients.
void smith_reduce(Mat& a, Mat* v, i64 mod = 0) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    auto reduce_all = [&] {
        if (mod <= 0) return;
        for (auto& row : a)
            for (auto& x : row) x = mod_reduce(x, mod);
    };
    reduce_all();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows && pi == rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; break; }
        if (pi == rows) break;
        std::swap(a[t], a[pi]);
        if (pj != t) {
            col_pair_op(a, t, pj, 0, 1, 1, 0);
            if (v) col_pair_op(*v, t, pj, 0, 1, 1, 0);
        }
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                i64 aa = a[t][t], bb = a[i][t];
                if (aa != 0 && bb % aa == 0) {
                    // pure shear keeps row t intact, so the cleaned
                    // columns stay clean and the loop terminates
                    row_pair_op(a, t, i, 1, 0, -bb / aa, 1);
                    if (mod > 0) reduce_all();
                    continue;
                }
                i64 x, y;
                i64 g = ext_gcd(aa, bb, x, y);
                row_pair_op(a, t, i, x, y, -bb / g, aa / g);
                if (mod > 0) reduce_all();
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                i64 aa = a[t][t], bb = a[t][j];
                if (aa != 0 && bb % aa == 0) {
                    col_pair_op(a, t, j, 1, 0, -bb / aa, 1);
                    if (v) col_pair_op(*v, t, j, 1, 0, -bb / aa, 1);
                    if (mod > 0) reduce_all();
                    continue;
                }
                i64 x, y;
                i64 g = ext_gcd(aa, bb, x, y);
                col_pair_op(a, t, j, x, y, -bb / g, aa / g);
                if (v) col_pair_op(*v, t, j, x, y, -bb / g, aa / g);
                if (mod > 0) reduce_all();
            }
            for (std::size_t i = t + 1; i < rows && !again; ++i)
                if (a[i][t] != 0) again = true;
        }
        // divisibility fix: pivot must divide everything below-right
        bool fixed = true;
        for (std::size_t i = t + 1; i < rows && fixed; ++i)
            for (std::size_t j = t + 1; j < cols && fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t cc = 0; cc < cols; ++cc)
                        a[t][cc] = checked(static_cast<i128>(a[t][cc]) + a[i][cc]);
                    if (mod > 0) reduce_all();
                    fixed = false;
                }
        if (!fixed) continue;  // redo this pivot
        if (a[t][t] < 0)
            for (std::size_t cc = 0; cc < cols; ++cc) a[t][cc] = -a[t][cc];
        ++t;
    }
}

}  // namespace

Vec snf_diagonal(Mat m) {
    if (m.empty()) return {};
    smith_reduce(m, nullptr);
    std::size_t n = std::min(m.size(), m[0].size());
    Vec d(m[0].size(), 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = std::abs(m[i][i]);
    return d;
}

Vec snf_diagonal_mod(Mat m, i64 mod, std::size_t cols) {
    if (mod < 1) throw error("snf_diagonal_mod: modulus must be positive");
    Vec d(cols, mod);
    if (m.empty() || mod == 1) return Vec(cols, mod == 1 ? 1 : mod);
    smith_reduce(m, nullptr, mod);
    std::size_t n = std::min(m.size(), cols);
    for (std::size_t i = 0; i < n; ++i) d[i] = std::gcd(m[i][i], mod);
    return d;
}

SnfRight snf_right(Mat m) {
    SnfRight out;
    if (m.empty()) return out;
    out.v = identity_mat(m[0].size());
    smith_reduce(m, &out.v);
    std::size_t n = std::min(m.size(), m[0].size());
    out.diag.assign(m[0].size(), 0);
    for (std::size_t i = 0; i < n; ++i) out.diag[i] = std::abs(m[i][i]);
    return out;
}

Mat congruence_kernel(const Mat& c, const Vec& row_mod, const Vec& coord_mod) {
    const std::size_t n = coord_mod.size();
    Mat basis = identity_mat(n);
    Mat diag(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) diag[i][i] = coord_mod[i];
    for (std::size_t r = 0; r < c.size(); ++r) {
        i64 m = row_mod[r];
        if (m <= 1) continue;
        const std::size_t nb = basis.size();
        Vec vals(nb, 0);
        bool nontrivial = false;
        for (std::size_t i = 0; i < nb; ++i) {
            i128 s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += static_cast<i128>(c[r][j]) * basis[i][j];
            vals[i] = mod_reduce(checked(s), m);
            if (vals[i] != 0) nontrivial = true;
        }
        if (!nontrivial) continue;
        Mat w(1, Vec(nb + 1));
        for (std::size_t i = 0; i < nb; ++i) w[0][i] = vals[i];
        w[0][nb] = m;
        Mat yk = int_kernel(w, nb + 1);
        Mat next;
        for (const auto& y : yk) {
            Vec row(n, 0);
            for (std::size_t i = 0; i < nb; ++i) {
                if (y[i] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    row[j] = checked(static_cast<i128>(row[j]) +
                                     static_cast<i128>(y[i]) * basis[i][j]);
            }
            next.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < n; ++i)
            if (coord_mod[i] > 0) next.push_back(diag[i]);
        basis = hnf(std::move(next));
    }
    return basis;
}

Mat lattice_intersection(const Mat& a, const Mat& b, std::size_t cols) {
    Mat stacked;
    for (const auto& row : a) stacked.push_back(row);
    for (const auto& row : b) {
        Vec neg(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
        stacked.push_back(std::move(neg));
    }
    if (stacked.empty()) return {};
    Mat left = int_kernel(mat_transpose(stacked), stacked.size());
    Mat inter;
    for (const auto& uv : left) {
        Vec row(cols, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                row[j] += uv[i] * a[i][j];
        inter.push_back(std::move(row));
    }
    return hnf(std::move(inter));
}

}  // namespace galmod
