#include "homops/natcomplex.hpp"

#include <memory>

namespace homops {

std::string NatBasisIndex::to_string() const {
    std::string s = "j=" + std::to_string(j) + " l=" + std::to_string(l) + " [";
    for (size_t t = 0; t < map.image.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(map.image[t]);
    }
    return s + "]";
}

NatDifferentialTerms nat_differential_of(int j, const FinSetMap& f) {
    NatDifferentialTerms out;
    int sign_j = (j % 2 == 0) ? 1 : -1;
    int w = f.target;
    if (w >= 2) {
        for (int i = 0; i < w; ++i) {
            FinSetMap m = (i == w - 1) ? mult_map(w, 1, w) : mult_map(w, i + 1, i + 2);
            int s = sign_j * ((i % 2 == 0) ? -1 : 1);  // (-1)^{i+1}
            out.same_index.emplace_back(f.then(m), s);
        }
    }
    int snew = f.source + 1;
    for (int i = 0; i < snew; ++i) {
        FinSetMap m = (i == snew - 1) ? mult_map(snew, 1, snew) : mult_map(snew, i + 1, i + 2);
        int s = -sign_j * ((i % 2 == 0) ? -1 : 1);
        out.raised_index.emplace_back(m.then(f), s);
    }
    return out;
}

NatComplex::NatComplex(int K, int lmin, int lmax, FieldSpec field)
    : K_(K), lmin_(lmin), lmax_(lmax), field_(field) {
    if (K < 0 || lmax < lmin) throw std::invalid_argument("nat complex: bad window");
    // enumerate reduced bases for lmin-1 .. lmax (one extra degree below so
    // the bottom differential is honest)
    for (int l = lmin_ - 1; l <= lmax_; ++l) {
        std::vector<NatBasisIndex> basis;
        for (int j = 0; j <= K_; ++j) {
            int tgt = j + l + 1;
            if (tgt < 0) continue;
            for (auto& f : enumerate_reduced_maps(j + 1, tgt)) basis.push_back(NatBasisIndex{j, l, std::move(f)});
        }
        for (size_t i = 0; i < basis.size(); ++i) position_.emplace(basis[i], static_cast<int>(i));
        bases_.push_back(std::move(basis));
    }

    std::vector<int> dims;
    std::vector<SparseMat> diffs;
    std::vector<std::vector<std::string>> labels;
    for (int l = lmin_; l <= lmax_; ++l) {
        const auto& basis = this->basis(l);
        dims.push_back(static_cast<int>(basis.size()));
        SparseMat d;
        d.rows = basis_size(l - 1);
        d.cols.reserve(basis.size());
        for (const auto& b : basis) {
            std::map<int, Scalar> col;
            auto put = [&](int jj, const FinSetMap& g, int s) {
                int idx = index_of(jj, l - 1, g);
                if (idx < 0) return;
                Scalar c = Scalar::from_int(s, field_);
                auto [it, fresh] = col.emplace(idx, c);
                if (!fresh) it->second += c;
            };
            NatDifferentialTerms terms = nat_differential_of(b.j, b.map);
            for (const auto& [g, s] : terms.same_index) put(b.j, g, s);
            if (b.j + 1 <= K_)
                for (const auto& [g, s] : terms.raised_index) put(b.j + 1, g, s);
            SparseVec v;
            for (auto& [r, c] : col)
                if (!c.is_zero()) v.emplace_back(r, c);
            d.cols.push_back(std::move(v));
        }
        diffs.push_back(std::move(d));
        std::vector<std::string> lab;
        lab.reserve(basis.size());
        for (const auto& b : basis) lab.push_back(b.to_string());
        labels.push_back(std::move(lab));
    }
    complex_ = std::make_unique<FiniteChainComplex>(lmin_, lmax_, std::move(dims), std::move(diffs),
                                                    field_, std::move(labels));
}

const std::vector<NatBasisIndex>& NatComplex::basis(int l) const {
    static const std::vector<NatBasisIndex> empty;
    if (l < lmin_ - 1 || l > lmax_) return empty;
    return bases_[static_cast<size_t>(l - (lmin_ - 1))];
}

int NatComplex::index_of(int j, int l, const FinSetMap& f) const {
    auto it = position_.find(NatBasisIndex{j, l, f});
    return it == position_.end() ? -1 : it->second;
}

SparseVec NatComplex::family_vector(const OperationFamily& x) const {
    if (x.degree() < lmin_ || x.degree() > lmax_)
        throw std::invalid_argument("family degree outside complex window");
    std::map<int, Scalar> acc;
    for (int j = 0; j <= std::min(K_, x.truncation()); ++j) {
        for (const auto& [f, c] : x.component(j).terms()) {
            int idx = index_of(j, x.degree(), f);
            if (idx < 0) continue;  // non-reduced terms vanish in the quotient
            Scalar s = c.to_field(field_);
            auto [it, fresh] = acc.emplace(idx, s);
            if (!fresh) it->second += s;
        }
    }
    SparseVec v;
    for (auto& [r, c] : acc)
        if (!c.is_zero()) v.emplace_back(r, c);
    return v;
}

bool NatComplex::is_cycle(const OperationFamily& x) const {
    return is_cycle_vector(*complex_, x.degree(), family_vector(x));
}

int NatComplex::family_class_rank(const std::vector<OperationFamily>& xs) const {
    if (xs.empty()) return 0;
    int l = xs.front().degree();
    std::vector<SparseVec> vecs;
    vecs.reserve(xs.size());
    for (const auto& x : xs) {
        if (x.degree() != l) throw std::invalid_argument("family_class_rank: mixed degrees");
        vecs.push_back(family_vector(x));
    }
    return class_rank(*complex_, l, vecs);
}

int NatComplex::stable_dim(int K, int l, const FieldSpec& field) {
    NatComplex big(K + 1, l, l + 1, field);
    // ranks on the K+1 complex
    const FiniteChainComplex& c1 = big.complex();
    int n_l_big = c1.dim(l);
    int rank_dl_big = sparse_rank(c1.differential(l), field);
    // layer = basis elements with j = K+1
    const auto& basis_l = big.basis(l);
    int layer = 0;
    std::vector<SparseVec> layer_dcols;
    for (size_t i = 0; i < basis_l.size(); ++i) {
        if (basis_l[i].j == K + 1) {
            ++layer;
            layer_dcols.push_back(c1.differential(l).cols[i]);
        }
    }
    int rank_dl_layer = 0;
    {
        Eliminator e(field);
        for (const auto& col : layer_dcols) e.add_column(col);
        rank_dl_layer = e.rank();
    }
    // rank of d_{l+1} on the K-truncated complex
    int rank_dl1_small = 0;
    if (l + 1 <= big.lmax()) {
        NatComplex small(K, l, l + 1, field);
        rank_dl1_small = sparse_rank(small.complex().differential(l + 1), field);
    }
    int n_l_small = n_l_big - layer;
    return n_l_small - rank_dl_big - rank_dl1_small + rank_dl_layer;
}

}  // namespace homops
