#pragma once
#include <vector>

#include "fogq/intpoly.hpp"
#include "fogq/rational.hpp"

namespace fogq {

// dense exact rational matrices; desk scale (dims well under 100)
class QMat {
  public:
    QMat() = default;
    QMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Rat(0)) {}

    static QMat identity(int n);
    static QMat from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    QMat transpose() const;
    QMat kron(const QMat& other) const;
    QMat col(int j) const;
    QMat cols_slice(int j0, int n) const;
    // stack columns of a then b
    static QMat hjoin(const QMat& a, const QMat& b);

    bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    // gaussian elimination, pivot = first nonzero entry in column order;
    // returns pivot column indices. modifies in place to RREF.
    std::vector<int> rref();

    int rank() const;
    Rat det() const;           // square
    QMat inverse() const;      // square, invertible (invariant_error otherwise)
    // basis of the right kernel, one column per free variable, deterministic
    QMat kernel() const;
    // column span basis in reduced column echelon form, columns primitive integer
    QMat column_space() const;
    // does span(cols of basis) contain every column of v?
    static bool span_contains(const QMat& basis, const QMat& v);
    // rational solve a x = b (all columns); nullopt if inconsistent
    std::optional<QMat> solve(const QMat& b) const;

    // scale each column to a primitive integer vector, first nonzero entry > 0
    QMat primitive_columns() const;

    IntPoly charpoly() const; // det(T I - M), monic, exact (Berkowitz, integral
                              // for integer matrices; rational entries allowed)
    QPoly charpoly_q() const;

  private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

QMat operator*(const QMat& a, const QMat& b);
QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
QMat operator*(const Rat& s, const QMat& a);

// evaluate a polynomial at a matrix
QMat eval_poly(const QPoly& p, const QMat& m);

} // namespace fogq
