#pragma once

#include <gmpxx.h>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hgm {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, mpz_class(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const; // A * v
    std::vector<mpz_class> row(std::size_t i) const;
    std::vector<mpz_class> col(std::size_t j) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    mpz_class det() const; // fraction-free (Bareiss), square only
    bool is_unimodular() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> a_;
};

struct SmithForm {
    IntMatrix u, d, v; // u*a*v = d, u and v unimodular, d diagonal with d1|d2|...
};

/// Smith normal form with transforms; the identity u*a*v = d is re-checked
/// exactly before returning.
SmithForm smith_normal_form(const IntMatrix& a);

/// Rank over Q (via the Smith form diagonal).
std::size_t rank(const IntMatrix& a);

/// Column-style Hermite normal form of the column span: returns the matrix
/// of the nonzero echelon columns (canonical basis of the span).
IntMatrix hnf_column_basis(const IntMatrix& a);

/// Is b in the column span of a over Z?  If yes, returns x with a*x = b.
std::optional<std::vector<mpz_class>> solve_columns(const IntMatrix& a,
                                                    const std::vector<mpz_class>& b);

/// Basis of { x : a*x = 0 } as columns of the returned matrix.
IntMatrix kernel_basis(const IntMatrix& a);

/// Equality of column spans as subgroups of Z^rows.
bool same_column_span(const IntMatrix& a, const IntMatrix& b);

/// Extends a primitive vector to a unimodular matrix having it as first column.
IntMatrix complete_primitive_vector(const std::vector<mpz_class>& v);

mpz_class vector_content(const std::vector<mpz_class>& v); // gcd >= 0

} // namespace hgm
