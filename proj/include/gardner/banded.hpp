#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gardner {

/// Raised when a pivot falls below the singularity floor or a solve goes
/// non-finite. Carries the offending row.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int row) : std::runtime_error(what), row_(row) {}
    int row() const { return row_; }

private:
    int row_ = -1;
};

/// Square band matrix with `lower` sub- and `upper` superdiagonals, stored
/// compactly row by row. Entries outside the band read as zero and cannot be
/// assigned.
class BandedMatrix {
public:
    BandedMatrix(int n, int lower, int upper);

    int size() const { return n_; }
    int lower() const { return kl_; }
    int upper() const { return ku_; }

    double& at(int i, int j);
    double at(int i, int j) const;

    std::vector<double> multiply(std::span<const double> x) const;

private:
    int n_, kl_, ku_;
    int width_;
    std::vector<double> data_;
};

/// LU factorization with partial pivoting of a band matrix. Pivots smaller
/// than 1e-14 times the largest row magnitude of the input are treated as
/// singular.
class BandedLU {
public:
    explicit BandedLU(const BandedMatrix& m);

    void solve_in_place(std::span<double> b) const;
    std::vector<double> solve(std::span<const double> b) const;

private:
    int n_, kl_, ku_, width_;
    std::vector<double> upper_;   // sliding-window upper factor rows
    std::vector<double> mults_;   // elimination multipliers, kl_ per row
    std::vector<int> pivot_row_;
};

}  // namespace gardner
