#pragma once

#include "cyltor/ints.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cyltor {

/// Dense integer matrix, row major. Used for lattice maps on H, the
/// Aut*(H) block matrices, and the Hermite-form plumbing behind the
/// support-lattice reduction.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator*(const IntMatrix& other) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;
    std::vector<std::int64_t> apply64(const std::vector<std::int64_t>& v) const;
    IntMatrix transposed() const;

    /// Fraction-free determinant (Bareiss).
    Int determinant() const;
};

/// Basis of the integer kernel {v : A v = 0}; rows of the result.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis (as rows) of the saturation of the lattice spanned by the rows of a:
/// (row space over Q) intersected with Z^cols.
IntMatrix saturate_rows(const IntMatrix& a);

/// Solve A x = b exactly over Q and require integrality; returns false when
/// there is no integer solution. A must have full column rank.
bool solve_integer(const IntMatrix& a, const std::vector<Int>& b, std::vector<Int>& x);

} // namespace cyltor
