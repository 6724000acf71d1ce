#include "cyltor/intmat.hpp"

#include <stdexcept>

namespace cyltor {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (std::int64_t v : row) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols_; ++j) r.at(i, j) += v * other.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<std::int64_t> IntMatrix::apply64(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<std::int64_t> r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        r[i] = static_cast<std::int64_t>(acc);
    }
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix: determinant of non-square");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// Row Hermite-style reduction: returns the echelon rows spanning the row
// lattice of a, and optionally accumulates the transform into *u.
IntMatrix row_echelon_lattice(IntMatrix m) {
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c below row r
        for (;;) {
            int pivot = -1;
            for (int i = r; i < rows; ++i)
                if (m.at(i, c) != 0 && (pivot < 0 || abs(m.at(i, c)) < abs(m.at(pivot, c))))
                    pivot = i;
            if (pivot < 0) break;
            if (pivot != r)
                for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
            bool cleared = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m.at(i, c) == 0) continue;
                Int q = m.at(i, c) / m.at(r, c);
                for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
                if (m.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m.at(r, c) != 0) {
            if (m.at(r, c) < 0)
                for (int j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
            ++r;
        }
    }
    IntMatrix out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

} // namespace

IntMatrix integer_kernel(const IntMatrix& a) {
    // Reduce [a^T | I] rows; rows whose a^T-part vanished give the kernel.
    int n = a.cols(), m = a.rows();
    IntMatrix work(n, m + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) work.at(i, j) = a.at(j, i);
        work.at(i, m + i) = 1;
    }
    // Echelon on the first m columns only, carrying the identity tail along.
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        for (;;) {
            int pivot = -1;
            for (int i = r; i < n; ++i)
                if (work.at(i, c) != 0 && (pivot < 0 || abs(work.at(i, c)) < abs(work.at(pivot, c))))
                    pivot = i;
            if (pivot < 0) break;
            if (pivot != r)
                for (int j = 0; j < m + n; ++j) std::swap(work.at(r, j), work.at(pivot, j));
            bool cleared = true;
            for (int i = r + 1; i < n; ++i) {
                if (work.at(i, c) == 0) continue;
                Int q = work.at(i, c) / work.at(r, c);
                for (int j = 0; j < m + n; ++j) work.at(i, j) -= q * work.at(r, j);
                if (work.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (work.at(r, c) != 0) ++r;
    }
    IntMatrix kernel(n - r, n);
    for (int i = r; i < n; ++i)
        for (int j = 0; j < n; ++j) kernel.at(i - r, j) = work.at(i, m + j);
    return kernel;
}

IntMatrix saturate_rows(const IntMatrix& a) {
    // Saturation of the row lattice: the orthogonal complement of the
    // integer kernel of a (as a map on column vectors).
    IntMatrix n = integer_kernel(a);
    if (n.rows() == 0) return row_echelon_lattice(IntMatrix::identity(a.cols()));
    return row_echelon_lattice(integer_kernel(n));
}

bool solve_integer(const IntMatrix& a, const std::vector<Int>& b, std::vector<Int>& x) {
    // Gaussian elimination over Q with exact arithmetic.
    int m = a.rows(), n = a.cols();
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][n] = Rat(b[i]);
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (w[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[r], w[p]);
        Rat inv = w[r][c];
        for (int j = c; j <= n; ++j) w[r][j] /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (int j = c; j <= n; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (w[i][n] != 0) return false;
    std::vector<Rat> sol(n, Rat(0));
    for (int i = 0; i < r; ++i) sol[pivot_col[i]] = w[i][n];
    x.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        if (denominator(sol[j]) != 1) return false;
        x[j] = numerator(sol[j]);
    }
    return true;
}

} // namespace cyltor
