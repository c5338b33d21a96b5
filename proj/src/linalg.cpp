#include "satake/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace satake {

std::string format_rat(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("cannot parse rational: " + s);
    }
}

Mat Mat::identity(int n) {
    Mat m;
    m.n = n;
    m.rows.assign(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

Vec Mat::apply(const Vec& v) const {
    Vec r(n, 0);
    for (int i = 0; i < n; ++i) r[i] = dot(rows[i], v);
    return r;
}

VecQ Mat::apply(const VecQ& v) const {
    VecQ r(n, Rat(0));
    for (int i = 0; i < n; ++i) r[i] = dot_q(rows[i], v);
    return r;
}

Mat Mat::mul(const Mat& other) const {
    Mat r;
    r.n = n;
    r.rows.assign(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Coord a = rows[i][k];
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) r.rows[i][j] += a * other.rows[k][j];
        }
    return r;
}

Mat Mat::transpose() const {
    Mat r;
    r.n = n;
    r.rows.assign(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.rows[j][i] = rows[i][j];
    return r;
}

bool Mat::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rows[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

// Row echelon form over Q, in place.  Returns pivot column per row.
std::vector<int> echelon(std::vector<VecQ>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t pr = row;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        Rat inv = Rat(1) / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back((int)col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<VecQ> solve_in_span(const std::vector<Vec>& cols, const Vec& target) {
    size_t k = cols.size();
    size_t n = target.size();
    // augmented system [cols | target], variables = coefficients
    std::vector<VecQ> m(n, VecQ(k + 1, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) m[i][j] = Rat(cols[j][i]);
        m[i][k] = Rat(target[i]);
    }
    auto pivots = echelon(m);
    // inconsistent iff a pivot lands in the augmented column
    for (int p : pivots)
        if (p == (int)k) return std::nullopt;
    if (pivots.size() < k) throw InputError("solve_in_span: dependent columns");
    VecQ x(k, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][k];
    return x;
}

std::vector<VecQ> rational_kernel(const std::vector<Vec>& rows_of_matrix) {
    if (rows_of_matrix.empty()) return {};
    size_t cols = rows_of_matrix[0].size();
    std::vector<VecQ> m;
    for (const auto& r : rows_of_matrix) {
        VecQ q(cols);
        for (size_t j = 0; j < cols; ++j) q[j] = Rat(r[j]);
        m.push_back(std::move(q));
    }
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<VecQ> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        VecQ v(cols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

int rational_rank(const std::vector<Vec>& rows_of_matrix) {
    if (rows_of_matrix.empty()) return 0;
    size_t cols = rows_of_matrix[0].size();
    std::vector<VecQ> m;
    for (const auto& r : rows_of_matrix) {
        VecQ q(cols);
        for (size_t j = 0; j < cols; ++j) q[j] = Rat(r[j]);
        m.push_back(std::move(q));
    }
    return (int)echelon(m).size();
}

}  // namespace satake
