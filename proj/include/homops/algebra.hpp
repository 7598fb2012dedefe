#pragma once

#include "homops/loday.hpp"

namespace homops {

// A finite-dimensional graded commutative algebra with unit, given by basis
// labels, integer degrees and structure constants. The constructor checks
// unitality, graded commutativity, associativity and degree additivity.
class GradedCommutativeAlgebra {
  public:
    GradedCommutativeAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> degrees,
                             int unit_index,
                             std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> products);

    const std::string& name() const { return name_; }
    int dimension() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    int degree(int i) const { return degrees_[static_cast<size_t>(i)]; }
    int unit() const { return unit_; }
    int index_of(const std::string& label) const;

    // Product of basis elements as a linear combination of basis elements.
    const std::vector<std::pair<int, Scalar>>& product(int a, int b) const;

    // Builtins.
    static const GradedCommutativeAlgebra& circle_cohomology();      // 1, x with |x| = -1, x^2 = 0
    static const GradedCommutativeAlgebra& truncated_polynomial(int m);  // F[t]/t^m, |t| = 0
    static const GradedCommutativeAlgebra& group_ring_z2();          // F[Z/2]

  private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    int unit_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> products_;
};

using Word = std::vector<int>;  // basis indices, length >= 1

// An element of the Hochschild chains of an algebra: a linear combination of
// basis tensor words. Homological degree of a word = (length - 1) + internal.
class HochschildChain {
  public:
    explicit HochschildChain(const GradedCommutativeAlgebra& a) : algebra_(&a) {}

    const GradedCommutativeAlgebra& algebra() const { return *algebra_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Scalar& c);
    HochschildChain operator+(const HochschildChain& o) const;
    HochschildChain operator-(const HochschildChain& o) const;
    HochschildChain operator*(const Scalar& c) const;
    bool operator==(const HochschildChain& o) const;
    bool operator!=(const HochschildChain& o) const { return !(*this == o); }

    static int word_internal_degree(const GradedCommutativeAlgebra& a, const Word& w);
    static int word_degree(const GradedCommutativeAlgebra& a, const Word& w);

  private:
    const GradedCommutativeAlgebra* algebra_;
    std::map<Word, Scalar> terms_;
};

// Evaluate a linear combination of finite-set maps on a tensor word: output
// slot t collects the product of its preimage letters in input order (empty
// preimage gives the unit); the Koszul sign is the parity of the stable
// reordering of the input word by output slot, weighted by letter degrees.
HochschildChain evaluate(const Morphism& g, const GradedCommutativeAlgebra& a, const Word& w,
                         const Scalar& coeff);
HochschildChain evaluate(const Morphism& g, const HochschildChain& c);

// Hochschild boundary with cyclic wraparound; words of length one map to 0.
HochschildChain hochschild_differential(const HochschildChain& c);

// Projection to the reduced complex: kill words with a unit beyond slot 1.
HochschildChain reduce(const HochschildChain& c);

// Apply a truncated operation family componentwise by word length; throws
// when a word exceeds the truncation.
HochschildChain act(const OperationFamily& x, const HochschildChain& c);

HochschildChain connes_boundary(const HochschildChain& c);

HochschildChain shuffle_product(const HochschildChain& c1, const HochschildChain& c2);

// The two-word merge morphism in Com(w1 + w2, w1 + w2 - 1): basepoints
// multiply, the remaining letters interleave over all signed shuffles.
Morphism shuffle_merge(int j1, int j2);

}  // namespace homops
