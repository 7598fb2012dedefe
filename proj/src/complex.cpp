#include "homops/complex.hpp"

#include <algorithm>

namespace homops {

SparseVec sparse_axpy(const SparseVec& v, const Scalar& c, const SparseVec& w) {
    SparseVec out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            Scalar s = c * w[j].second;
            if (!s.is_zero()) out.emplace_back(w[j].first, std::move(s));
            ++j;
        } else {
            Scalar s = v[i].second + c * w[j].second;
            if (!s.is_zero()) out.emplace_back(v[i].first, std::move(s));
            ++i, ++j;
        }
    }
    return out;
}

SparseVec SparseMat::apply(const SparseVec& x) const {
    std::map<int, Scalar> acc;
    for (const auto& [c, a] : x) {
        for (const auto& [r, b] : cols[static_cast<size_t>(c)]) {
            auto [it, fresh] = acc.emplace(r, a * b);
            if (!fresh) it->second += a * b;
        }
    }
    SparseVec out;
    for (auto& [r, s] : acc)
        if (!s.is_zero()) out.emplace_back(r, std::move(s));
    return out;
}

bool SparseMat::is_zero() const {
    for (const auto& c : cols)
        if (!c.empty()) return false;
    return true;
}

bool Eliminator::add_column(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Scalar lead = r.front().second;
    if (!lead.is_one()) {
        Scalar inv = lead.inv();
        for (auto& [row, val] : r) val *= inv;
    }
    int prow = r.front().first;
    pivots_.emplace(prow, std::move(r));
    ++rank_;
    return true;
}

SparseVec Eliminator::reduce(const SparseVec& v) const {
    // One ascending sweep: each pivot vector starts at its own pivot row, so
    // eliminating row r only introduces entries at rows > r.
    std::map<int, Scalar> work(v.begin(), v.end());
    SparseVec out;
    while (!work.empty()) {
        auto it = work.begin();
        int row = it->first;
        Scalar val = it->second;
        work.erase(it);
        if (val.is_zero()) continue;
        auto p = pivots_.find(row);
        if (p == pivots_.end()) {
            out.emplace_back(row, std::move(val));
            continue;
        }
        Scalar c = -val;
        for (size_t t = 1; t < p->second.size(); ++t) {
            const auto& [r2, w2] = p->second[t];
            auto [jt, fresh] = work.emplace(r2, c * w2);
            if (!fresh) jt->second += c * w2;
        }
    }
    return out;
}

int sparse_rank(const SparseMat& m, const FieldSpec& field) {
    Eliminator e(field);
    for (const auto& col : m.cols) e.add_column(col);
    return e.rank();
}

int rank_increase(const SparseMat& m, const std::vector<SparseVec>& extra, const FieldSpec& field) {
    Eliminator e(field);
    for (const auto& col : m.cols) e.add_column(col);
    int base = e.rank();
    for (const auto& col : extra) e.add_column(col);
    return e.rank() - base;
}

namespace {

// Elimination that also tracks, per inserted column, the combination of the
// original columns it reduces; zero-reducing combinations form the kernel.
class AugmentedEliminator {
  public:
    explicit AugmentedEliminator(FieldSpec field) : field_(field) {}

    // Returns the kernel combination when the column reduces to zero.
    std::optional<SparseVec> add_column(const SparseVec& v, int col_id) {
        std::map<int, Scalar> work(v.begin(), v.end());
        std::map<int, Scalar> combo;
        combo.emplace(col_id, Scalar::one(field_));
        SparseVec rem;
        while (!work.empty()) {
            auto it = work.begin();
            int row = it->first;
            Scalar val = it->second;
            work.erase(it);
            if (val.is_zero()) continue;
            auto p = pivots_.find(row);
            if (p == pivots_.end()) {
                rem.emplace_back(row, std::move(val));
                continue;
            }
            Scalar k = -val;
            const SparseVec& pvec = p->second.first;
            for (size_t t = 1; t < pvec.size(); ++t) {
                auto [jt, fresh] = work.emplace(pvec[t].first, k * pvec[t].second);
                if (!fresh) jt->second += k * pvec[t].second;
            }
            for (const auto& [cc, cv] : p->second.second) {
                auto [jt, fresh] = combo.emplace(cc, k * cv);
                if (!fresh) jt->second += k * cv;
            }
        }
        SparseVec cvec;
        for (auto& [cc, cv] : combo)
            if (!cv.is_zero()) cvec.emplace_back(cc, cv);
        if (rem.empty()) return cvec;
        Scalar inv = rem.front().second.inv();
        if (!rem.front().second.is_one()) {
            for (auto& [row, val] : rem) val *= inv;
            for (auto& [cc, cv] : cvec) cv *= inv;
        }
        pivots_.emplace(rem.front().first, std::make_pair(std::move(rem), std::move(cvec)));
        return std::nullopt;
    }

  private:
    FieldSpec field_;
    std::map<int, std::pair<SparseVec, SparseVec>> pivots_;  // row -> (column, combination)
};

std::vector<SparseVec> kernel_basis(const SparseMat& m, const FieldSpec& field) {
    AugmentedEliminator e(field);
    std::vector<SparseVec> kernel;
    for (int c = 0; c < m.col_count(); ++c) {
        if (auto combo = e.add_column(m.cols[static_cast<size_t>(c)], c)) kernel.push_back(std::move(*combo));
    }
    return kernel;
}

}  // namespace

FiniteChainComplex::FiniteChainComplex(int lmin, int lmax, std::vector<int> dims,
                                       std::vector<SparseMat> diffs, FieldSpec field,
                                       std::vector<std::vector<std::string>> labels)
    : lmin_(lmin), lmax_(lmax), field_(field), dims_(std::move(dims)), diffs_(std::move(diffs)),
      labels_(std::move(labels)) {
    size_t n = static_cast<size_t>(lmax_ - lmin_ + 1);
    if (lmax_ < lmin_ || dims_.size() != n || diffs_.size() != n)
        throw std::invalid_argument("chain complex: dimension/differential count mismatch");
    for (int l = lmin_; l <= lmax_; ++l) {
        const SparseMat& d = differential(l);
        if (d.col_count() != dim(l))
            throw std::invalid_argument("chain complex: differential width mismatch");
        if (l - 1 >= lmin_ && d.rows != dim(l - 1))
            throw std::invalid_argument("chain complex: differential height mismatch");
        if (l - 1 >= lmin_) {
            const SparseMat& dprev = differential(l - 1);
            for (const auto& col : d.cols)
                if (!dprev.apply(col).empty()) throw std::invalid_argument("chain complex: d o d != 0");
        }
    }
}

int FiniteChainComplex::dim(int l) const {
    if (l < lmin_ || l > lmax_) return 0;
    return dims_[static_cast<size_t>(l - lmin_)];
}

const SparseMat& FiniteChainComplex::differential(int l) const {
    if (l < lmin_ || l > lmax_) throw std::out_of_range("chain complex: degree out of range");
    return diffs_[static_cast<size_t>(l - lmin_)];
}

const std::vector<std::string>& FiniteChainComplex::labels(int l) const {
    static const std::vector<std::string> empty;
    if (labels_.empty() || l < lmin_ || l > lmax_) return empty;
    return labels_[static_cast<size_t>(l - lmin_)];
}

HomologyResult homology(const FiniteChainComplex& c, bool with_representatives) {
    HomologyResult res;
    res.lmin = c.lmin();
    for (int l = c.lmin(); l <= c.lmax(); ++l) {
        int rank_l = sparse_rank(c.differential(l), c.field());
        int rank_above = (l + 1 <= c.lmax()) ? sparse_rank(c.differential(l + 1), c.field()) : 0;
        int ker = c.dim(l) - rank_l;
        res.dims.push_back(ker - rank_above);
        if (!with_representatives) {
            res.representatives.emplace_back();
            continue;
        }
        // representatives: kernel vectors independent modulo boundaries
        std::vector<SparseVec> reps;
        Eliminator bound(c.field());
        if (l + 1 <= c.lmax()) {
            const SparseMat& dup = c.differential(l + 1);
            for (const auto& col : dup.cols) bound.add_column(col);
        }
        for (const auto& kv : kernel_basis(c.differential(l), c.field())) {
            if (bound.add_column(kv)) reps.push_back(kv);
        }
        res.representatives.push_back(std::move(reps));
    }
    return res;
}

int class_rank(const FiniteChainComplex& c, int l, const std::vector<SparseVec>& cycles) {
    for (const auto& x : cycles)
        if (!is_cycle_vector(c, l, x)) throw std::invalid_argument("class_rank: input is not a cycle");
    if (l + 1 > c.lmax()) {
        SparseMat empty;
        empty.rows = c.dim(l);
        return rank_increase(empty, cycles, c.field());
    }
    return rank_increase(c.differential(l + 1), cycles, c.field());
}

bool is_cycle_vector(const FiniteChainComplex& c, int l, const SparseVec& x) {
    return c.differential(l).apply(x).empty();
}

std::vector<Scalar> class_coords(const FiniteChainComplex& c, int l, const SparseVec& x) {
    if (!is_cycle_vector(c, l, x)) throw std::invalid_argument("class_coords: input is not a cycle");
    HomologyResult h = homology(c, true);
    const auto& reps = h.representatives[static_cast<size_t>(l - c.lmin())];
    // Solve x = sum a_i rep_i + boundary by eliminating boundaries first and
    // tracking coefficients of the representative columns.
    AugmentedEliminator e(c.field());
    int id = 0;
    if (l + 1 <= c.lmax())
        for (const auto& col : c.differential(l + 1).cols) e.add_column(col, --id);
    int nreps = static_cast<int>(reps.size());
    for (int i = 0; i < nreps; ++i) e.add_column(reps[static_cast<size_t>(i)], i);
    auto combo = e.add_column(x, nreps);
    if (!combo) throw std::invalid_argument("class_coords: cycle not in computed span");
    std::vector<Scalar> coords(reps.size(), Scalar::zero(c.field()));
    Scalar self = Scalar::zero(c.field());
    for (const auto& [cc, cv] : *combo) {
        if (cc == nreps) self = cv;
        else if (cc >= 0) coords[static_cast<size_t>(cc)] = cv;
    }
    if (self.is_zero()) throw std::invalid_argument("class_coords: degenerate combination");
    Scalar scale = -self.inv();
    for (auto& a : coords) a *= scale;
    return coords;
}

}  // namespace homops
