#pragma once

#include <memory>

#include "homops/complex.hpp"
#include "homops/loday.hpp"

namespace homops {

// Basis element of the reduced truncated complex of formal operations:
// a map (j+1) -> (j+l+1) hitting every non-basepoint target, at word index
// j <= K and degree l.
struct NatBasisIndex {
    int j = 0;
    int l = 0;
    FinSetMap map;

    auto operator<=>(const NatBasisIndex&) const = default;
    std::string to_string() const;
};

// The reduced complex of operations, truncated to word indices j <= K, on a
// degree window. Degrees above 1 are zero already at the basis level.
class NatComplex {
  public:
    NatComplex(int K, int lmin, int lmax, FieldSpec field);

    int truncation() const { return K_; }
    int lmin() const { return lmin_; }
    int lmax() const { return lmax_; }
    const FiniteChainComplex& complex() const { return *complex_; }

    // Basis enumeration at fixed degree, ordered by (j, map).
    const std::vector<NatBasisIndex>& basis(int l) const;
    int basis_size(int l) const { return static_cast<int>(basis(l).size()); }

    // Index of a basis element within its degree; -1 when not reduced.
    int index_of(int j, int l, const FinSetMap& f) const;

    // Coordinates of a truncated family (components 0..K) in degree
    // x.degree(); non-reduced terms project to zero.
    SparseVec family_vector(const OperationFamily& x) const;

    bool is_cycle(const OperationFamily& x) const;

    // Rank of the classes of the given families in homology at their degree.
    int family_class_rank(const std::vector<OperationFamily>& xs) const;

    // Dimension of the image of H_l(trunc K+1) -> H_l(trunc K) induced by the
    // truncation projection; classes that fail to lift one extra word index
    // are boundary artifacts of the truncation.
    static int stable_dim(int K, int l, const FieldSpec& field);

  private:
    int K_, lmin_, lmax_;
    FieldSpec field_;
    std::vector<std::vector<NatBasisIndex>> bases_;  // per degree, lmin-1..lmax
    std::map<NatBasisIndex, int> position_;
    std::unique_ptr<FiniteChainComplex> complex_;
};

// Differential of one reduced basis map as (target basis map, integer sign)
// pairs split into the index-preserving and index-raising parts.
struct NatDifferentialTerms {
    std::vector<std::pair<FinSetMap, int>> same_index;    // at (j, l-1)
    std::vector<std::pair<FinSetMap, int>> raised_index;  // at (j+1, l-1)
};
NatDifferentialTerms nat_differential_of(int j, const FinSetMap& f);

}  // namespace homops
