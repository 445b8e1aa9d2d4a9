#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hopflab {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with exact arbitrary-precision entries, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += q * row j  (and the column analogue)
    void add_row(std::size_t i, std::size_t j, const BigInt& q);
    void add_col(std::size_t i, std::size_t j, const BigInt& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    bool is_diagonal() const;
    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> a_;
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);

// Exact determinant (Bareiss fraction-free elimination); square input.
BigInt determinant(const IntMatrix& m);

struct SnfResult {
    IntMatrix u;  // left transform, unimodular
    IntMatrix d;  // Smith form: diagonal, nonnegative, d_i | d_{i+1}
    IntMatrix v;  // right transform, unimodular
};

// Smith normal form with transforms: u * m * v == d.  Pivoting picks the
// smallest nonzero absolute value, ties broken row-major, so the transforms
// are reproducible run to run.  Total on every rectangular matrix.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace hopflab
