#include "pwt/matrix.hpp"

#include <sstream>

#include "pwt/util.hpp"

namespace pwt {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw FieldMismatch("matrix field contexts differ: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::of(f, rows[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return a_[r * cols_ + c];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return a_[r * cols_ + c];
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::col(std::size_t c) const {
    if (c >= cols_) throw DimensionMismatch("column index out of range");
    Matrix v(field_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, c);
    return v;
}

Matrix Matrix::cols_slice(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionMismatch("column slice out of range");
    Matrix m(field_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

Matrix Matrix::drop_col(std::size_t c) const {
    if (c >= cols_) throw DimensionMismatch("column index out of range");
    Matrix m(field_, rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == c) continue;
            m(i, k++) = (*this)(i, j);
        }
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix addition shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix subtraction shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    if (s.field() != a.field()) throw FieldMismatch("scalar/matrix field mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& s : r.a_) s = -s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

std::uint64_t Matrix::hash() const {
    std::uint64_t h = hash_mix(0x6d61747278ULL, rows_);
    h = hash_mix(h, cols_);
    for (const auto& s : a_) h = hash_mix(h, s.hash());
    return h;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << (*this)(i, j).to_string();
        }
        os << "]";
        if (i + 1 < rows_) os << ",";
    }
    os << "]";
    return os.str();
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("hcat row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw DimensionMismatch("vcat column mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

Matrix block_diag(const Field& f, std::span<const Matrix> blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix r(f, rows, cols);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        if (b.field() != f) throw FieldMismatch("block field mismatch");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return r;
}

Matrix vec(const Matrix& m) {
    Matrix v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
    return v;
}

Rref rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t p = row;
        while (p < r.rows() && r(p, col).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(row, j), r(p, j));
        Scalar inv = r(row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r(row, j) = inv * r(row, j);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col).is_zero()) continue;
            Scalar factor = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) = r(i, j) - factor * r(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return Rref{std::move(r), std::move(pivots), row};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    Rref rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::size_t nullity = m.cols() - rr.rank;
    Matrix basis(m.field(), m.cols(), nullity);
    std::size_t k = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis(free_col, k) = Scalar::one(m.field());
        for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
            basis(rr.pivots[pr], k) = -rr.r(pr, free_col);
        ++k;
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("solve field mismatch");
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: a.rows != b.rows");
    Rref rr = rref(hcat(a, b));
    // Any pivot falling in the b-part means an inconsistent system.
    for (auto p : rr.pivots)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
        for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[pr], j) = rr.r(pr, a.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    Rref rr = rref(hcat(m, Matrix::identity(m.field(), m.rows())));
    if (rr.rank != m.rows()) return std::nullopt;
    for (auto p : rr.pivots)
        if (p >= m.cols()) return std::nullopt;
    return rr.r.cols_slice(m.cols(), m.cols());
}

bool is_invertible(const Matrix& m) {
    return m.is_square() && rank(m) == m.rows();
}

Matrix column_space_basis(const Matrix& m) {
    Rref rr = rref(m);
    Matrix basis(m.field(), m.rows(), rr.rank);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) basis(i, k) = m(i, rr.pivots[k]);
    return basis;
}

SplitBasis split_complement(const Matrix& s) {
    std::size_t n = s.rows();
    const Field& f = s.field();
    Rref rr = rref(hcat(s, Matrix::identity(f, n)));
    Matrix sub(f, n, 0), comp(f, n, 0);
    for (auto p : rr.pivots) {
        if (p < s.cols())
            sub = hcat(sub, s.col(p));
        else {
            Matrix e(f, n, 1);
            e(p - s.cols(), 0) = Scalar::one(f);
            comp = hcat(comp, e);
        }
    }
    // Full basis [sub | comp]; quotient coordinates are the comp block of
    // its inverse.
    Matrix full = hcat(sub, comp);
    auto inv = inverse(full);
    if (!inv) throw InternalError("split_complement: basis completion not invertible");
    std::size_t q = comp.cols();
    Matrix projection(f, q, n);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < n; ++j) projection(i, j) = (*inv)(sub.cols() + i, j);
    return SplitBasis{std::move(sub), comp, std::move(projection), comp};
}

}  // namespace pwt
