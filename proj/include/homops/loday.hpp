#pragma once

#include "homops/perm.hpp"

namespace homops {

// A degree-l element of the formal-operations complex, truncated at word
// index K: components[k] lies in Com(k+1, k+l+1) for k = 0..K.
class OperationFamily {
  public:
    OperationFamily(int degree, int truncation);

    int degree() const { return degree_; }
    int truncation() const { return K_; }
    const Morphism& component(int k) const;
    void set_component(int k, Morphism m);

    bool is_zero() const;
    OperationFamily operator+(const OperationFamily& o) const;
    OperationFamily operator-(const OperationFamily& o) const;
    OperationFamily operator*(const Scalar& c) const;
    bool operator==(const OperationFamily& o) const;
    bool operator!=(const OperationFamily& o) const { return !(*this == o); }

  private:
    int degree_;
    int K_;
    std::vector<Morphism> components_;
};

// compose(a, b): apply a, then b; component k is a_k followed by b_{k+deg a}.
OperationFamily compose(const OperationFamily& a, const OperationFamily& b);

// Signed sum over permutations with k-1 descents embedded fixing 1;
// identity of Com(1,1) at (n,k) = (0,0); zero outside the valid range.
Morphism eulerian_op(int n, int k);

// Loday's shuffle operation sh_n^k as a binomial combination of eulerian_op.
Morphism shuffle_op(int n, int k);

// Loday's lambda operation.
Morphism lambda_op(int n, int k);

// sh_n^k by direct enumeration of block shuffles; equals shuffle_op(n, k).
Morphism shuffle_op_via_shuffles(int n, int k);

// Connes operator component in Com(l, l+1): signed cyclic injections
// avoiding the basepoint of the target.
Morphism connes_component(int l);

// Rotated-Eulerian sum R_n^l in Com(n+1, n+2): all cyclic-injection twists
// of the embedded Eulerian permutations, each with the sign of its
// target-renumbered bijection.
Morphism rotated_eulerian_op(int n, int l);

OperationFamily shuffle_family(int K, int k);
OperationFamily lambda_family(int K, int k);
OperationFamily connes_family(int K);                  // degree 1
OperationFamily connes_power_family(int K, int k);     // B composed after sh^k
OperationFamily connes_power_family_via_r(int K, int k);

// Differential of the truncated formal-operations complex applied to a
// family; degree drops by one. Component j is
//   (-1)^j ( sum_i (-1)^{i+1} m_i . x_j  -  sum_i (-1)^{i+1} x_{j-1} . m_i )
// with cyclic neighbor multiplications m_i on the target resp. source side.
OperationFamily family_differential(const OperationFamily& x);

// Target-side boundary sum (faces post-composed, alternating signs).
Morphism hochschild_boundary_of(const Morphism& m);
// Source-side coboundary sum on s+1 inputs (multiplications pre-composed).
Morphism cohochschild_coboundary_of(const Morphism& m);

}  // namespace homops
