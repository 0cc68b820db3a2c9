#ifndef MFACT_MATRIX_HPP
#define MFACT_MATRIX_HPP

#include <functional>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace mfact {

// Dense rectangular matrix of polynomials sharing one ring context.
// Zero-by-zero and zero-width matrices are allowed; they carry rank-0
// factorizations and empty relation lists.
template <class K>
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          entries_(rows * cols, Polynomial<K>::zero(ring_))
    {
    }

    static PolyMatrix zero(RingPtr ring, std::size_t rows, std::size_t cols)
    {
        return PolyMatrix(std::move(ring), rows, cols);
    }

    static PolyMatrix identity(RingPtr ring, std::size_t n)
    {
        PolyMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = Polynomial<K>::one(ring);
        return m;
    }

    static PolyMatrix scalar(RingPtr ring, std::size_t n, const Polynomial<K>& s)
    {
        PolyMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = s;
        return m;
    }

    static PolyMatrix from_rows(RingPtr ring, std::vector<std::vector<Polynomial<K>>> rows)
    {
        std::size_t nc = rows.empty() ? 0 : rows.front().size();
        PolyMatrix m(std::move(ring), rows.size(), nc);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc)
                fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < nc; ++j) {
                require_same_ring(m.ring_, rows[i][j].ring());
                m.at(i, j) = std::move(rows[i][j]);
            }
        }
        return m;
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial<K>& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Polynomial<K>& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto& p : entries_)
            if (!p.is_zero())
                return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    PolyMatrix operator-() const { return map([](const Polynomial<K>& p) { return -p; }); }

    PolyMatrix operator+(const PolyMatrix& o) const
    {
        require_compatible(o, rows_, cols_);
        PolyMatrix r(ring_, rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }

    PolyMatrix operator-(const PolyMatrix& o) const
    {
        require_compatible(o, rows_, cols_);
        PolyMatrix r(ring_, rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = entries_[i] - o.entries_[i];
        return r;
    }

    PolyMatrix operator*(const PolyMatrix& o) const
    {
        require_same_ring(ring_, o.ring_);
        if (cols_ != o.rows_)
            fail(ErrorKind::DimensionMismatch,
                 "product of " + shape() + " and " + o.shape() + " matrices");
        PolyMatrix r(ring_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Polynomial<K>& a = at(i, k);
                if (a.is_zero())
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Polynomial<K>& b = o.at(k, j);
                    if (!b.is_zero())
                        r.at(i, j) = r.at(i, j) + a * b;
                }
            }
        return r;
    }

    PolyMatrix scaled(const Polynomial<K>& s) const
    {
        return map([&s](const Polynomial<K>& p) { return p * s; });
    }

    PolyMatrix transpose() const
    {
        PolyMatrix r(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    PolyMatrix map(const std::function<Polynomial<K>(const Polynomial<K>&)>& fn) const
    {
        PolyMatrix r(ring_, rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = fn(entries_[i]);
        return r;
    }

    bool operator==(const PolyMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && same_ring(ring_, o.ring_) &&
               entries_ == o.entries_;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string str() const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i)
                out += ", ";
            out += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j)
                    out += ", ";
                out += at(i, j).str();
            }
            out += "]";
        }
        out += "]";
        return out;
    }

private:
    void require_compatible(const PolyMatrix& o, std::size_t r, std::size_t c) const
    {
        require_same_ring(ring_, o.ring_);
        if (o.rows_ != r || o.cols_ != c)
            fail(ErrorKind::DimensionMismatch, "matrix shapes " + shape() + " and " + o.shape());
    }

    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial<K>> entries_;
};

// [A 0; 0 B]
template <class K>
PolyMatrix<K> block_diagonal(const PolyMatrix<K>& a, const PolyMatrix<K>& b)
{
    require_same_ring(a.ring(), b.ring());
    PolyMatrix<K> r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

// [A B; C D] from equally shaped quadrants.
template <class K>
PolyMatrix<K> block_2x2(const PolyMatrix<K>& a, const PolyMatrix<K>& b, const PolyMatrix<K>& c,
                        const PolyMatrix<K>& d)
{
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        fail(ErrorKind::DimensionMismatch, "incompatible blocks");
    PolyMatrix<K> r(a.ring(), a.rows() + c.rows(), a.cols() + b.cols());
    auto put = [&r](const PolyMatrix<K>& m, std::size_t i0, std::size_t j0) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                r.at(i0 + i, j0 + j) = m.at(i, j);
    };
    put(a, 0, 0);
    put(b, 0, a.cols());
    put(c, a.rows(), 0);
    put(d, a.rows(), a.cols());
    return r;
}

// [A | B]
template <class K>
PolyMatrix<K> augment(const PolyMatrix<K>& a, const PolyMatrix<K>& b)
{
    require_same_ring(a.ring(), b.ring());
    if (a.rows() != b.rows())
        fail(ErrorKind::DimensionMismatch, "augmenting matrices with different row counts");
    PolyMatrix<K> r(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

// Entrywise canonical representative modulo (f).
template <class K>
PolyMatrix<K> reduce_mod(const PolyMatrix<K>& m, const Polynomial<K>& f)
{
    return m.map([&f](const Polynomial<K>& p) { return reduce_mod(p, f); });
}

template <class K>
bool equal_mod(const PolyMatrix<K>& a, const PolyMatrix<K>& b, const Polynomial<K>& f)
{
    return reduce_mod(a - b, f).is_zero();
}

// Entrywise exact division by f; reports the first failing entry.
template <class K>
PolyMatrix<K> divide_exact_by_f(const PolyMatrix<K>& m, const Polynomial<K>& f)
{
    require_same_ring(m.ring(), f.ring());
    if (f.is_zero())
        fail(ErrorKind::ZeroF, "division of a matrix by f = 0");
    PolyMatrix<K> q(m.ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto e = exact_quotient(m.at(i, j), f);
            if (!e)
                fail(ErrorKind::NotDivisible, "entry (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") is not a multiple of f");
            q.at(i, j) = std::move(*e);
        }
    return q;
}

} // namespace mfact

#endif
