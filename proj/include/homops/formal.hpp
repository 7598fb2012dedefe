#pragma once

#include "homops/algebra.hpp"

namespace homops {

// The data cutting out one generator of the operation complex between
// iterated Hochschild complexes: a target assignment f on the inputs, a
// shuffle/rotation choice s on the inputs routed to Hochschild outputs, and
// per-axis weights k.
struct OperationSpec {
    int n1 = 0, m1 = 0, n2 = 0, m2 = 0;
    std::vector<int> f;      // size n1+m1, values in {1..n2+m2}
    std::map<int, int> s;    // defined exactly on f^{-1}({1..n2}), values 0/1
    std::vector<int> k;      // size n1, nonnegative

    void validate() const;  // throws on invariant violation
};

using MultiIndex = std::vector<int>;

// A truncated operation between iterated Hochschild complexes: per input
// multidegree (j_1..j_{n1}) with j_i <= K, a finite sum of morphisms keyed by
// output multidegree (v_1..v_{n2}). Source size is sum(j_i + 1) + m1, target
// size sum(v_t + 1) + m2.
struct MultiOperation {
    int n1 = 0, m1 = 0, n2 = 0, m2 = 0;
    int K = 0;
    std::map<MultiIndex, std::map<MultiIndex, Morphism>> comps;

    int source_size(const MultiIndex& j) const;
    int target_size(const MultiIndex& v) const;
    void add(const MultiIndex& j, const MultiIndex& v, const Morphism& m);
    bool is_zero() const;
    bool operator==(const MultiOperation& o) const;
};

// x_{f,s}: tensor the per-input generators (shuffle/rotation families,
// projections, inclusions), then merge outputs sharing a target: shuffle
// products on Hochschild outputs, plain multiplication on algebra outputs.
MultiOperation build_x_fs(const OperationSpec& spec, int K);

// The tensor stage alone (before merging), as a MultiOperation into the
// intermediate signature with outputs in input order.
MultiOperation build_x1(const OperationSpec& spec, int K);

// The left-to-right iterated merge morphism for words of the given
// Hochschild degrees.
Morphism iterated_shuffle_merge(const std::vector<int>& degrees);

// All admissible (f, s) pairs for a signature and weight vector.
std::vector<OperationSpec> enumerate_A_basis(int n1, int m1, int n2, int m2, const std::vector<int>& k);

// Differential of the truncated operation complex between iterated
// Hochschild complexes; degree drops by one.
MultiOperation multi_differential(const MultiOperation& x);

bool is_multi_cycle(const MultiOperation& x);

// View a (1,0,1,0) operation as an ordinary truncated family.
OperationFamily to_family(const MultiOperation& x);

// An element of C(A)^{(x) n1} (x) A^{(x) m1}: per term, n1 words followed by
// m1 single letters.
class MultiChain {
  public:
    MultiChain(const GradedCommutativeAlgebra& a, int n1, int m1) : algebra_(&a), n1_(n1), m1_(m1) {}

    const GradedCommutativeAlgebra& algebra() const { return *algebra_; }
    int words() const { return n1_; }
    int letters() const { return m1_; }
    const std::map<std::vector<Word>, Scalar>& terms() const { return terms_; }

    void add_term(const std::vector<Word>& t, const Scalar& c);
    bool operator==(const MultiChain& o) const;

  private:
    const GradedCommutativeAlgebra* algebra_;
    int n1_, m1_;
    std::map<std::vector<Word>, Scalar> terms_;
};

MultiChain evaluate(const MultiOperation& x, const MultiChain& c);

}  // namespace homops
