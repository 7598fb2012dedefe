#pragma once

#include <functional>
#include <optional>
#include <string>

#include "homops/scalar.hpp"

#include <map>
#include <vector>

namespace homops {

// Sparse column vector: (row, value) pairs sorted by row, no zero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_axpy(const SparseVec& v, const Scalar& c, const SparseVec& w);  // v + c*w

// Sparse matrix in column-major form.
struct SparseMat {
    int rows = 0;
    std::vector<SparseVec> cols;

    int col_count() const { return static_cast<int>(cols.size()); }
    SparseVec apply(const SparseVec& x) const;  // matrix * coordinate vector
    bool is_zero() const;
};

// Incremental Gaussian elimination over an exact field. Pivot vectors are
// kept with their minimal row as pivot row, so reduction is a single
// ascending sweep.
class Eliminator {
  public:
    explicit Eliminator(FieldSpec field) : field_(field) {}

    // Reduces v against the current pivots; if a nonzero remainder is left it
    // becomes a new pivot and the rank grows. Returns true if rank grew.
    bool add_column(const SparseVec& v);

    // Reduction without inserting a pivot.
    SparseVec reduce(const SparseVec& v) const;

    int rank() const { return rank_; }

  private:
    FieldSpec field_;
    int rank_ = 0;
    std::map<int, SparseVec> pivots_;  // pivot row -> normalized column
};

int sparse_rank(const SparseMat& m, const FieldSpec& field);

// Rank of [m | extra] minus rank of m: how many of the extra columns are
// independent modulo the column span of m.
int rank_increase(const SparseMat& m, const std::vector<SparseVec>& extra, const FieldSpec& field);

// A finitely supported chain complex: degrees lmin..lmax, a dimension per
// degree and differential matrices d[l]: C_l -> C_{l-1}. Degrees outside the
// range are zero. Checks d(.)d = 0 on construction.
class FiniteChainComplex {
  public:
    FiniteChainComplex(int lmin, int lmax, std::vector<int> dims, std::vector<SparseMat> diffs,
                       FieldSpec field, std::vector<std::vector<std::string>> labels = {});

    int lmin() const { return lmin_; }
    int lmax() const { return lmax_; }
    FieldSpec field() const { return field_; }
    int dim(int l) const;
    const SparseMat& differential(int l) const;  // C_l -> C_{l-1}
    const std::vector<std::string>& labels(int l) const;

  private:
    int lmin_, lmax_;
    FieldSpec field_;
    std::vector<int> dims_;
    std::vector<SparseMat> diffs_;
    std::vector<std::vector<std::string>> labels_;
};

struct HomologyResult {
    int lmin = 0;
    std::vector<int> dims;                               // homology dimension per degree
    std::vector<std::vector<SparseVec>> representatives;  // cycle representatives (optional)

    int dim(int l) const { return dims[static_cast<size_t>(l - lmin)]; }
};

// dim H_l = dim ker d_l - rank d_{l+1}; representatives are computed only
// when requested (they require kernel bases, which cost memory on large
// complexes).
HomologyResult homology(const FiniteChainComplex& c, bool with_representatives = false);

// Rank of the classes of the given cycles in H_l(c): how many are
// independent modulo boundaries.
int class_rank(const FiniteChainComplex& c, int l, const std::vector<SparseVec>& cycles);

// Coordinates of the class of a cycle in the homology basis determined by
// the representatives of homology(c, true). Throws if x is not a cycle.
std::vector<Scalar> class_coords(const FiniteChainComplex& c, int l, const SparseVec& x);

bool is_cycle_vector(const FiniteChainComplex& c, int l, const SparseVec& x);

}  // namespace homops
