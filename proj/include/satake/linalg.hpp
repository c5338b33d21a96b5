#pragma once

#include "satake/numeric.hpp"

#include <optional>

namespace satake {

// Square integer matrix acting on column vectors of X_*.  Entries stay
// small (Weyl reflections, diagram automorphisms), so machine integers
// suffice.
struct Mat {
    int n = 0;
    std::vector<Vec> rows;  // rows[i][j]

    static Mat identity(int n);
    Vec apply(const Vec& v) const;
    VecQ apply(const VecQ& v) const;
    Mat mul(const Mat& other) const;
    Mat transpose() const;
    bool operator==(const Mat& other) const = default;
    bool operator<(const Mat& other) const { return rows < other.rows; }
    bool is_identity() const;
};

// Exact Gaussian elimination helpers over the rationals.

// Solve sum_j x_j * cols[j] = target.  Returns the solution when target
// lies in the span and the columns are linearly independent; nullopt when
// the system is inconsistent.  Throws InputError on dependent columns.
std::optional<VecQ> solve_in_span(const std::vector<Vec>& cols, const Vec& target);

// Basis of the rational kernel of the matrix (given by rows).
std::vector<VecQ> rational_kernel(const std::vector<Vec>& rows_of_matrix);

// Rank over the rationals of the matrix given by rows.
int rational_rank(const std::vector<Vec>& rows_of_matrix);

}  // namespace satake
