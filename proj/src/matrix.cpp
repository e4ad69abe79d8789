/*
   Copyright 2026 The toricbch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "toricbch/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricbch {

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, f_->zero()) {}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && at(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(p, c));
        const FieldElement il = at(row, col).inverse();
        for (std::size_t c = 0; c < cols_; ++c) at(row, c) *= il;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            const FieldElement m = at(r, col);
            for (std::size_t c = 0; c < cols_; ++c) at(r, c) -= m * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

Matrix Matrix::kernel_basis() const {
    Matrix red = *this;
    const auto pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix ker(f_, free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        ker.at(i, fc) = f_->one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            ker.at(i, pivots[r]) = -red.at(r, fc);
    }
    return ker;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.f_ != bottom.f_ || top.cols_ != bottom.cols_)
        throw std::invalid_argument("Matrix::vstack: incompatible matrices");
    Matrix out(top.f_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.a_.begin(), top.a_.end(), out.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), out.a_.begin() + top.a_.size());
    return out;
}

}  // namespace toricbch
