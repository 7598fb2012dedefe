#include "homops/circle.hpp"

namespace homops {

int circle_face(int n, int i, int j) {
    if (n < 1 || i < 0 || i > n || j < 1 || j > n + 1)
        throw std::invalid_argument("circle_face: index out of range");
    if (j == n + 1) return i == n ? 1 : n;
    return (i + 1 >= j) ? j : j - 1;
}

int circle_degeneracy(int n, int i, int j) {
    if (i < 0 || i > n || j < 1 || j > n + 1)
        throw std::invalid_argument("circle_degeneracy: index out of range");
    return j <= i + 1 ? j : j + 1;
}

int reduce_circle_point(int n, int j) {
    if (n == 0) return 0;
    if (n == 1) return j == 2 ? 1 : -1;
    return -1;
}

ProductSimplex::ProductSimplex(int n, std::vector<int> pts) : level(n), points(std::move(pts)) {
    for (int p : points)
        if (p < 1 || p > n + 1) throw std::invalid_argument("product simplex: point out of range");
}

ProductSimplex ProductSimplex::from_map(const FinSetMap& f) {
    return ProductSimplex(f.target - 1, f.image);
}

ProductSimplex ProductSimplex::face(int i) const {
    std::vector<int> pts(points.size());
    for (size_t t = 0; t < points.size(); ++t) pts[t] = circle_face(level, i, points[t]);
    return ProductSimplex(level - 1, std::move(pts));
}

ProductSimplex ProductSimplex::degeneracy(int i) const {
    std::vector<int> pts(points.size());
    for (size_t t = 0; t < points.size(); ++t) pts[t] = circle_degeneracy(level, i, points[t]);
    return ProductSimplex(level + 1, std::move(pts));
}

ReducedTensor aw(const ProductSimplex& x) {
    ReducedTensor out;
    int n = x.level;
    int m = x.factors();
    // compositions (k_1..k_m), k_t in {0,1}, sum = n
    if (n > m || n < 0) return out;
    std::vector<int> comp(static_cast<size_t>(m), 0);
    auto emit = [&](const std::vector<int>& k) {
        LetterWord word(static_cast<size_t>(m));
        int prefix = 0;  // k_1 + ... + k_{j-1}
        for (int j = 0; j < m; ++j) {
            int kj = k[static_cast<size_t>(j)];
            int pt = x.points[static_cast<size_t>(j)];
            int lvl = n;
            // back faces d_{prefix+kj+1} .. d_n, applied innermost first
            for (int i = n; i >= prefix + kj + 1; --i) {
                pt = circle_face(lvl, i, pt);
                --lvl;
            }
            // front faces d_0, prefix times
            for (int c = 0; c < prefix; ++c) {
                pt = circle_face(lvl, 0, pt);
                --lvl;
            }
            int cls = reduce_circle_point(lvl, pt);
            if (cls < 0) return;  // degenerate letter kills the summand
            word[static_cast<size_t>(j)] = cls == 0 ? Letter::One : Letter::Y;
            prefix += kj;
        }
        auto [it, fresh] = out.emplace(std::move(word), Scalar::integer(1));
        if (!fresh) {
            it->second += Scalar::integer(1);
            if (it->second.is_zero()) out.erase(it);
        }
    };
    // iterate subsets of size n of the m slots
    std::vector<int> idx(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == n) {
            std::fill(comp.begin(), comp.end(), 0);
            for (int t = 0; t < n; ++t) comp[static_cast<size_t>(idx[static_cast<size_t>(t)])] = 1;
            emit(comp);
            return;
        }
        for (int s = start; s <= m - (n - pos); ++s) {
            idx[static_cast<size_t>(pos)] = s;
            self(self, pos + 1, s + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

ReducedTensor aw(const std::map<ProductSimplex, Scalar>& x) {
    ReducedTensor out;
    for (const auto& [ps, c] : x) {
        for (const auto& [word, a] : aw(ps)) {
            auto [it, fresh] = out.emplace(word, a * c);
            if (!fresh) {
                it->second += a * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::vector<Scalar> q_map(const OperationFamily& x) {
    if (x.degree() != 0 && x.degree() != 1)
        throw std::invalid_argument("q_map: family degree must be 0 or 1");
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(x.truncation()) + 1);
    for (int n = 0; n <= x.truncation(); ++n) {
        LetterWord line(static_cast<size_t>(n) + 1, Letter::Y);
        if (x.degree() == 0) line[0] = Letter::One;
        Scalar c = Scalar::integer(0);
        std::map<ProductSimplex, Scalar> combo;
        for (const auto& [f, a] : x.component(n).terms()) combo.emplace(ProductSimplex::from_map(f), a);
        ReducedTensor t = aw(combo);
        auto it = t.find(line);
        if (it != t.end()) c = it->second;
        out.push_back(c);
    }
    return out;
}

std::vector<Scalar> triangular_solve(const std::vector<Scalar>& f) {
    std::vector<Scalar> c = f;
    for (size_t n = 2; n < f.size(); ++n) {
        Scalar acc = f[n];
        for (size_t k = 1; k < n; ++k)
            acc -= c[k] * Scalar(binomial(static_cast<long>(n) - 1, static_cast<long>(n - k)));
        c[n] = acc;
    }
    return c;
}

std::vector<Scalar> triangular_apply(const std::vector<Scalar>& c) {
    std::vector<Scalar> f = c;
    for (size_t n = 2; n < c.size(); ++n) {
        Scalar acc = Scalar::integer(0);
        for (size_t k = 1; k <= n; ++k)
            acc += c[k] * Scalar(binomial(static_cast<long>(n) - 1, static_cast<long>(n - k)));
        f[n] = acc;
    }
    return f;
}

}  // namespace homops
