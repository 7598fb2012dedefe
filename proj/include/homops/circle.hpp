#pragma once

#include <cstdint>
#include <map>

#include "homops/loday.hpp"

namespace homops {

// The simplicial circle has n-simplices {1..n+1}; point j at level n stands
// for the map 1 -> j of finite sets {1} -> {1..n+1}.

// Face d_i at level n, 0 <= i <= n, n >= 1.
int circle_face(int n, int i, int j);

// Degeneracy s_i at level n, 0 <= i <= n.
int circle_degeneracy(int n, int i, int j);

enum class Letter : std::uint8_t { One = 0, Y = 1 };

// Class of a level-n point in the reduced chain complex of the circle:
// One (n = 0), Y (n = 1, point 2), or degenerate (nullopt).
// Encoded as -1 = degenerate, 0 = One, 1 = Y.
int reduce_circle_point(int n, int j);

// An element of the n-th level of a product of m circles.
struct ProductSimplex {
    int level = 0;
    std::vector<int> points;  // one point per factor, each in {1..level+1}

    ProductSimplex(int n, std::vector<int> pts);
    static ProductSimplex from_map(const FinSetMap& f);  // factors = f.source

    int factors() const { return static_cast<int>(points.size()); }
    ProductSimplex face(int i) const;        // diagonal face
    ProductSimplex degeneracy(int i) const;  // diagonal degeneracy
    auto operator<=>(const ProductSimplex&) const = default;
};

using LetterWord = std::vector<Letter>;

// A linear combination of basis words over {1, y}.
using ReducedTensor = std::map<LetterWord, Scalar>;

// Alexander-Whitney map into the reduced tensor complex. Only summands
// with per-factor degrees in {0,1} can survive, so those are the only
// compositions enumerated.
ReducedTensor aw(const ProductSimplex& x);
ReducedTensor aw(const std::map<ProductSimplex, Scalar>& x);

// Coefficients of a degree-0 or degree-1 family on the distinguished lines:
// component n is read off against 1 (x) y (x) ... (x) y  resp.  y (x) ... (x) y.
// Components mapping outside those lines contribute zero.
std::vector<Scalar> q_map(const OperationFamily& x);

// Solve q(sum_k c_k sh^k)_n = f_n for the unique coefficient sequence c.
std::vector<Scalar> triangular_solve(const std::vector<Scalar>& f);

// Apply the lower-triangular pairing matrix to c, returning f with
// f_0 = c_0 and f_n = sum_{k=1..n} c_k C(n-1, n-k) for n >= 1.
std::vector<Scalar> triangular_apply(const std::vector<Scalar>& c);

}  // namespace homops
