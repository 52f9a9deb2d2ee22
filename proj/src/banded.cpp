#include "gardner/banded.hpp"

#include <algorithm>
#include <cmath>

namespace gardner {

BandedMatrix::BandedMatrix(int n, int lower, int upper)
    : n_(n), kl_(lower), ku_(upper), width_(lower + upper + 1),
      data_(static_cast<size_t>(n) * static_cast<size_t>(width_), 0.0) {
    if (n <= 0 || lower < 0 || upper < 0)
        throw std::invalid_argument("BandedMatrix: bad dimensions");
}

double& BandedMatrix::at(int i, int j) {
    const int off = j - i + kl_;
    if (i < 0 || i >= n_ || off < 0 || off >= width_)
        throw std::out_of_range("BandedMatrix::at: entry outside the band");
    return data_[static_cast<size_t>(i) * width_ + off];
}

double BandedMatrix::at(int i, int j) const {
    const int off = j - i + kl_;
    if (i < 0 || i >= n_) throw std::out_of_range("BandedMatrix::at: row out of range");
    if (off < 0 || off >= width_) return 0.0;
    return data_[static_cast<size_t>(i) * width_ + off];
}

std::vector<double> BandedMatrix::multiply(std::span<const double> x) const {
    if (x.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("BandedMatrix::multiply: size mismatch");
    std::vector<double> y(static_cast<size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        const int j0 = std::max(0, i - kl_);
        const int j1 = std::min(n_ - 1, i + ku_);
        double s = 0.0;
        const double* row = &data_[static_cast<size_t>(i) * width_];
        for (int j = j0; j <= j1; ++j) s += row[j - i + kl_] * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

// Band LU with partial pivoting on a sliding-window layout: row i of `upper_`
// initially holds A(i, i-kl..i+ku) shifted so that the first in-band column of
// each row sits at slot 0. Row swaps then stay within aligned windows.
BandedLU::BandedLU(const BandedMatrix& m)
    : n_(m.size()), kl_(m.lower()), ku_(m.upper()), width_(kl_ + ku_ + 1),
      upper_(static_cast<size_t>(n_) * static_cast<size_t>(width_), 0.0),
      mults_(static_cast<size_t>(n_) * static_cast<size_t>(std::max(kl_, 1)), 0.0),
      pivot_row_(static_cast<size_t>(n_), 0) {
    auto u = [this](int i, int slot) -> double& {
        return upper_[static_cast<size_t>(i) * width_ + slot];
    };

    double max_row_magnitude = 0.0;
    for (int i = 0; i < n_; ++i) {
        const int j0 = std::max(0, i - kl_);
        const int j1 = std::min(n_ - 1, i + ku_);
        for (int j = j0; j <= j1; ++j) {
            const double v = m.at(i, j);
            u(i, j - j0) = v;
            max_row_magnitude = std::max(max_row_magnitude, std::abs(v));
        }
    }
    const double pivot_floor = 1e-14 * max_row_magnitude;

    for (int k = 0; k < n_; ++k) {
        const int reach = std::min(n_ - 1, k + kl_);  // rows with column k in band
        int p = k;
        double best = std::abs(u(k, 0));
        for (int i = k + 1; i <= reach; ++i) {
            if (std::abs(u(i, 0)) > best) {
                best = std::abs(u(i, 0));
                p = i;
            }
        }
        pivot_row_[static_cast<size_t>(k)] = p;
        if (!(best > pivot_floor))
            throw SolverError("banded LU: pivot below singularity floor at row " +
                                  std::to_string(k),
                              k);
        if (p != k)
            for (int s = 0; s < width_; ++s) std::swap(u(k, s), u(p, s));
        for (int i = k + 1; i <= reach; ++i) {
            const double f = u(i, 0) / u(k, 0);
            mults_[static_cast<size_t>(k) * kl_ + (i - k - 1)] = f;
            for (int s = 1; s < width_; ++s) u(i, s - 1) = u(i, s) - f * u(k, s);
            u(i, width_ - 1) = 0.0;
        }
    }
}

void BandedLU::solve_in_place(std::span<double> b) const {
    if (b.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("BandedLU::solve: size mismatch");
    for (int k = 0; k < n_; ++k) {
        const int reach = std::min(n_ - 1, k + kl_);
        const int p = pivot_row_[static_cast<size_t>(k)];
        if (p != k) std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(p)]);
        for (int i = k + 1; i <= reach; ++i)
            b[static_cast<size_t>(i)] -=
                mults_[static_cast<size_t>(k) * kl_ + (i - k - 1)] * b[static_cast<size_t>(k)];
    }
    int used = 1;
    for (int i = n_ - 1; i >= 0; --i) {
        double s = b[static_cast<size_t>(i)];
        for (int t = 1; t < used; ++t)
            s -= upper_[static_cast<size_t>(i) * width_ + t] * b[static_cast<size_t>(i + t)];
        b[static_cast<size_t>(i)] = s / upper_[static_cast<size_t>(i) * width_];
        if (used < width_) ++used;
    }
}

std::vector<double> BandedLU::solve(std::span<const double> b) const {
    std::vector<double> x(b.begin(), b.end());
    solve_in_place(x);
    return x;
}

}  // namespace gardner
