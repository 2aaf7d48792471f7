#include "ntext/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ntx {

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field()))
        throw std::invalid_argument(std::string(what) + ": shape or field mismatch");
}

}  // namespace

Mat Mat::identity(PrimeField field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % field.modulus();
    return m;
}

Mat Mat::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows, std::size_t cols_if_empty) {
    const std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
    Mat m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(rows[i][j]);
    }
    return m;
}

Mat Mat::column(PrimeField field, std::span<const Residue> v) {
    Mat m(field, v.size(), 1);
    std::copy(v.begin(), v.end(), m.data_.begin());
    return m;
}

Mat Mat::unit_column(PrimeField field, std::size_t n, std::size_t k) {
    Mat m(field, n, 1);
    m(k, 0) = 1 % field.modulus();
    return m;
}

bool Mat::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::scaled(Residue s) const {
    Mat r = *this;
    for (auto& x : r.data_) x = field_.mul(x, s);
    return r;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Mat::block out of range");
    Mat b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Mat::set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Mat::add_block(std::size_t r0, std::size_t c0, const Mat& b, Residue s) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Mat::add_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            auto& x = (*this)(r0 + i, c0 + j);
            x = field_.add(x, field_.mul(s, b(i, j)));
        }
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::select_columns(std::span<const std::size_t> idx) const {
    Mat r(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) r(i, k) = (*this)(i, idx[k]);
    return r;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
    Mat r(field_, idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j) r(k, j) = (*this)(idx[k], j);
    return r;
}

Mat Mat::vec() const {
    Mat v(field_, rows_ * cols_, 1);
    std::copy(data_.begin(), data_.end(), v.data_.begin());
    return v;
}

Mat Mat::unvec(const Mat& column, std::size_t rows, std::size_t cols) {
    if (column.cols_ != 1 || column.rows_ != rows * cols) throw std::invalid_argument("unvec: shape mismatch");
    Mat m(column.field_, rows, cols);
    std::copy(column.data_.begin(), column.data_.end(), m.data_.begin());
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    require_same_shape(*this, o, "Mat +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], o.data_[k]);
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    require_same_shape(*this, o, "Mat -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], o.data_[k]);
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_ || !(a.field_ == b.field_))
        throw std::invalid_argument("Mat *: inner dimension mismatch (" + std::to_string(a.rows_) + "x" +
                                    std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                                    std::to_string(b.cols_) + ")");
    const std::uint64_t p = a.field_.modulus();
    Mat c(a.field_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint64_t x = a(i, k);
            if (x == 0) continue;
            const Residue* brow = b.data_.data() + k * b.cols_;
            for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + x * brow[j]) % p;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Residue>(acc[j]);
    }
    return c;
}

Vec operator*(const Mat& a, std::span<const Residue> v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Mat * vector: dimension mismatch");
    const std::uint64_t p = a.field_.modulus();
    Vec r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) s = (s + std::uint64_t{a(i, k)} * v[k]) % p;
        r[i] = static_cast<Residue>(s);
    }
    return r;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<std::vector<long long>> Mat::to_rows() const {
    std::vector<std::vector<long long>> r(rows_, std::vector<long long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

Mat hstack(PrimeField field, std::size_t rows, std::span<const Mat> blocks) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
        cols += b.cols();
    }
    Mat m(field, rows, cols);
    std::size_t c = 0;
    for (const auto& b : blocks) {
        m.set_block(0, c, b);
        c += b.cols();
    }
    return m;
}

Mat vstack(PrimeField field, std::size_t cols, std::span<const Mat> blocks) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
        rows += b.rows();
    }
    Mat m(field, rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks) {
        m.set_block(r, 0, b);
        r += b.rows();
    }
    return m;
}

Mat block_diag(PrimeField field, std::span<const Mat> blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat m(field, rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("kron: field mismatch");
    const auto F = a.field();
    Mat k(F, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Residue x = a(i, j);
            if (x == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    k(i * b.rows() + r, j * b.cols() + s) = F.mul(x, b(r, s));
        }
    return k;
}

RrefResult rref(Mat m) {
    const auto F = m.field();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && m(piv, col) == 0) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(row, j));
        const Residue inv = F.inv(m(row, col));
        for (std::size_t j = col; j < C; ++j) m(row, j) = F.mul(m(row, j), inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row) continue;
            const Residue factor = m(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < C; ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), row, std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Subspace Subspace::zero(PrimeField field, std::size_t ambient_dim) { return {Mat(field, 0, ambient_dim), {}}; }

Subspace Subspace::full(PrimeField field, std::size_t ambient_dim) {
    std::vector<std::size_t> piv(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
    return {Mat::identity(field, ambient_dim), std::move(piv)};
}

Subspace Subspace::row_span(const Mat& m) {
    auto r = rref(m);
    std::vector<std::size_t> idx(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) idx[i] = i;
    return {r.reduced.select_rows(idx), std::move(r.pivots)};
}

Vec Subspace::coordinates(std::span<const Residue> v) const {
    Vec c(pivots_.size());
    for (std::size_t t = 0; t < pivots_.size(); ++t) c[t] = v[pivots_[t]];
    return c;
}

Mat Subspace::coordinate_map() const {
    Mat m(field(), dim(), ambient_dim());
    for (std::size_t t = 0; t < pivots_.size(); ++t) m(t, pivots_[t]) = 1;
    return m;
}

bool Subspace::contains(std::span<const Residue> v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    const auto F = field();
    Vec r(v.begin(), v.end());
    for (std::size_t t = 0; t < pivots_.size(); ++t) {
        const Residue c = r[pivots_[t]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = F.sub(r[j], F.mul(c, basis_(t, j)));
    }
    return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool Subspace::contains_columns(const Mat& m) const {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!contains(m.col(j))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    const Mat parts[] = {basis_, o.basis_};
    return row_span(vstack(field(), ambient_dim(), parts));
}

Subspace Subspace::intersect(const Subspace& o) const {
    // v = A a = B b  <=>  [A | -B] (a; b) = 0
    const auto F = field();
    const Mat A = inclusion();
    const Mat B = o.inclusion().scaled(F.neg(1 % F.modulus()));
    const Mat parts[] = {A, B};
    const Subspace k = kernel(hstack(F, ambient_dim(), parts));
    if (k.dim() == 0) return zero(F, ambient_dim());
    const Mat coeffs = k.inclusion().block(0, 0, dim(), k.dim());
    return column_span(A * coeffs);
}

Subspace kernel(const Mat& m) {
    const auto F = m.field();
    auto r = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<long long>> rows;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        std::vector<long long> v(C, 0);
        v[free] = 1;
        for (std::size_t t = 0; t < r.rank; ++t) v[r.pivots[t]] = F.neg(r.reduced(t, free));
        rows.push_back(std::move(v));
    }
    return Subspace::row_span(Mat::from_rows(F, rows, C));
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    const auto F = m.field();
    const Mat parts[] = {m, b};
    auto r = rref(hstack(F, m.rows(), parts));
    Mat x(F, m.cols(), b.cols());
    for (std::size_t t = 0; t < r.rank; ++t) {
        const std::size_t pc = r.pivots[t];
        if (pc >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = r.reduced(t, m.cols() + j);
    }
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (!m.is_square()) return std::nullopt;
    auto r = rref(m);
    if (r.rank != m.rows()) return std::nullopt;
    return solve(m, Mat::identity(m.field(), m.rows()));
}

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient_map: ambient dimension mismatch");
    const auto F = sub.field();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto c : sub.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) free.push_back(j);

    // v |-> (v - sum_t v[piv_t] b_t) restricted to the free coordinates
    Mat reduce = Mat::identity(F, ambient_dim) - sub.inclusion() * sub.coordinate_map();
    Mat proj = reduce.select_rows(free);
    Mat section(F, ambient_dim, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) section(free[k], k) = 1;
    return {std::move(proj), std::move(section)};
}

Mat sylvester_operator(const Mat& a, const Mat& b) {
    const auto F = a.field();
    if (!a.is_square() || !b.is_square()) throw std::invalid_argument("sylvester_operator: square blocks expected");
    return kron(a, Mat::identity(F, b.rows())) - kron(Mat::identity(F, a.rows()), b.transpose());
}

MatrixSpace MatrixSpace::solutions(std::size_t rows, std::size_t cols, const Mat& op) {
    if (op.cols() != rows * cols) throw std::invalid_argument("MatrixSpace::solutions: operator shape mismatch");
    return {rows, cols, kernel(op)};
}

Mat MatrixSpace::basis_element(std::size_t t) const {
    Mat m(field(), rows_, cols_);
    for (std::size_t k = 0; k < rows_ * cols_; ++k) m(k / cols_, k % cols_) = span_.basis()(t, k);
    return m;
}

std::vector<Mat> MatrixSpace::basis() const {
    std::vector<Mat> b;
    b.reserve(dim());
    for (std::size_t t = 0; t < dim(); ++t) b.push_back(basis_element(t));
    return b;
}

Mat MatrixSpace::element(std::span<const Residue> coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("MatrixSpace::element: coordinate count mismatch");
    Mat m(field(), rows_, cols_);
    for (std::size_t t = 0; t < dim(); ++t)
        if (coords[t]) m.add_block(0, 0, basis_element(t), coords[t]);
    return m;
}

}  // namespace ntx
