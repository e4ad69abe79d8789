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

#ifndef TORICBCH_MATRIX_HPP
#define TORICBCH_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "toricbch/field.hpp"

namespace toricbch {

/// Dense matrix over a finite field. Only what the code constructions need:
/// reduced row echelon form, rank, and right kernel.
class Matrix {
   public:
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    /// Rows form a basis of {x : A x = 0}. Deterministic: free columns in
    /// increasing order, each row's free coordinate set to one.
    Matrix kernel_basis() const;

    /// Vertical stack; fields and column counts must match.
    static Matrix vstack(const Matrix& top, const Matrix& bottom);

   private:
    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

}  // namespace toricbch

#endif
