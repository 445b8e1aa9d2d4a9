#include "hopflab/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopflab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += q * at(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += q * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && at(r, c) != 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ',';
            os << at(r, c);
        }
    }
    os << ']';
    return os.str();
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("dimension mismatch");
    IntMatrix z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const BigInt& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix, row-major tie-break.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const BigInt& e = d.at(i, j);
            if (e == 0) continue;
            BigInt a = abs(e);
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& d = r.d;
    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(d, t, pr, pc)) break;  // trailing block is zero
        for (;;) {
            d.swap_rows(t, pr);
            r.u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            r.v.swap_cols(t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                BigInt q = d.at(i, t) / d.at(t, t);  // truncated: remainder shrinks
                if (q != 0) {
                    d.add_row(i, t, -q);
                    r.u.add_row(i, t, -q);
                }
                if (d.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                BigInt q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    r.v.add_col(j, t, -q);
                }
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(d, t, pr, pc);
                continue;
            }
            // Lone pivot; enforce the divisibility chain before moving on.
            bool fixed = true;
            for (std::size_t i = t + 1; i < d.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < d.cols() && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        r.u.add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
            find_pivot(d, t, pr, pc);
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            r.u.negate_row(t);
        }
    }
    return r;
}

}  // namespace hopflab
