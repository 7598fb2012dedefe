#include "homops/loday.hpp"

namespace homops {

OperationFamily::OperationFamily(int degree, int truncation) : degree_(degree), K_(truncation) {
    if (truncation < 0) throw std::invalid_argument("family truncation must be nonnegative");
    components_.reserve(static_cast<size_t>(K_) + 1);
    for (int k = 0; k <= K_; ++k)
        components_.emplace_back(Morphism::zero(k + 1, std::max(k + degree_ + 1, 0)));
}

const Morphism& OperationFamily::component(int k) const {
    if (k < 0 || k > K_) throw std::out_of_range("family component beyond truncation");
    return components_[static_cast<size_t>(k)];
}

void OperationFamily::set_component(int k, Morphism m) {
    if (k < 0 || k > K_) throw std::out_of_range("family component beyond truncation");
    if (m.source() != k + 1 || (!m.is_zero() && m.target() != k + degree_ + 1))
        throw std::invalid_argument("family component has wrong sizes for its degree");
    components_[static_cast<size_t>(k)] = std::move(m);
}

bool OperationFamily::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

OperationFamily OperationFamily::operator+(const OperationFamily& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("family sum: degree mismatch");
    OperationFamily r(degree_, std::min(K_, o.K_));
    for (int k = 0; k <= r.K_; ++k) r.set_component(k, component(k) + o.component(k));
    return r;
}

OperationFamily OperationFamily::operator-(const OperationFamily& o) const {
    return *this + o * Scalar::integer(-1);
}

OperationFamily OperationFamily::operator*(const Scalar& c) const {
    OperationFamily r(degree_, K_);
    for (int k = 0; k <= K_; ++k) r.set_component(k, component(k) * c);
    return r;
}

bool OperationFamily::operator==(const OperationFamily& o) const {
    if (degree_ != o.degree_ || K_ != o.K_) return false;
    return components_ == o.components_;
}

OperationFamily compose(const OperationFamily& a, const OperationFamily& b) {
    OperationFamily r(a.degree() + b.degree(), std::min(a.truncation(), b.truncation() - a.degree()));
    for (int k = 0; k <= r.truncation(); ++k) {
        const Morphism& ak = a.component(k);
        if (ak.is_zero()) continue;
        r.set_component(k, ak.then(b.component(k + a.degree())));
    }
    return r;
}

Morphism eulerian_op(int n, int k) {
    if (n == 0 && k == 0) return Morphism::identity(1);
    Morphism r = Morphism::zero(n + 1, n + 1);
    for (const auto& [f, sgn] : eulerian_embedded(n, k)) r.add_term(f, Scalar::integer(sgn));
    return r;
}

Morphism shuffle_op(int n, int k) {
    if (n == 0 && k == 0) return Morphism::identity(1);
    Morphism r = Morphism::zero(n + 1, n + 1);
    if (n < 1 || k < 1) return r;
    for (int i = 1; i <= k; ++i) {
        mpz_class c = binomial(n - i, k - i);
        if (c == 0) continue;
        r += eulerian_op(n, i) * Scalar(c);
    }
    return r;
}

Morphism lambda_op(int n, int k) {
    Morphism r = Morphism::zero(n + 1, n + 1);
    for (int i = 0; i <= k; ++i) {
        mpz_class c = binomial(n + k - i, n);
        if (c == 0) continue;
        Morphism l = eulerian_op(n, i);
        if (l.is_zero()) continue;
        r += l * Scalar(c);
    }
    return r;
}

Morphism shuffle_op_via_shuffles(int n, int k) {
    if (n < 1 || k < 2) return shuffle_op(n, k);
    Morphism r = Morphism::zero(n + 1, n + 1);
    for (const auto& parts : positive_compositions(n, k)) {
        for (const Permutation& sigma : block_shuffles(parts)) {
            std::vector<int> img;
            img.reserve(static_cast<size_t>(n) + 1);
            img.push_back(1);
            for (int i = 1; i <= n; ++i) img.push_back(sigma(i) + 1);
            r.add_term(FinSetMap(n + 1, n + 1, std::move(img)), Scalar::integer(perm_sign(sigma)));
        }
    }
    return r;
}

Morphism connes_component(int l) {
    Morphism r = Morphism::zero(l, l + 1);
    for (int i = 1; i <= l; ++i) {
        std::vector<int> img(static_cast<size_t>(l));
        for (int t = 1; t <= l; ++t) img[static_cast<size_t>(t) - 1] = (t + i - 1) % l + 2;
        int sgn = (i * (l + 1)) % 2 == 0 ? 1 : -1;
        r.add_term(FinSetMap(l, l + 1, std::move(img)), Scalar::integer(sgn));
    }
    return r;
}

Morphism rotated_eulerian_op(int n, int l) {
    Morphism r = Morphism::zero(n + 1, n + 2);
    if (n == 0) {
        if (l == 1) r.add_term(FinSetMap(1, 2, {2}), Scalar::integer(1));
        return r;
    }
    for (const auto& [f, sgn] : eulerian_embedded(n, l)) {
        for (int c = 1; c <= n + 1; ++c) {
            // cyclic injection {1..n+1} -> {2..n+2}, then renumbered sign
            std::vector<int> img(static_cast<size_t>(n) + 1);
            std::vector<int> renumbered(static_cast<size_t>(n) + 1);
            for (int t = 1; t <= n + 1; ++t) {
                int rotated = (f(t) + c - 1) % (n + 1) + 1;
                renumbered[static_cast<size_t>(t) - 1] = rotated;
                img[static_cast<size_t>(t) - 1] = rotated + 1;
            }
            int total_sign = perm_sign(Permutation(renumbered));
            r.add_term(FinSetMap(n + 1, n + 2, std::move(img)), Scalar::integer(total_sign));
        }
    }
    return r;
}

OperationFamily shuffle_family(int K, int k) {
    OperationFamily fam(0, K);
    for (int n = 0; n <= K; ++n) fam.set_component(n, shuffle_op(n, k));
    return fam;
}

OperationFamily lambda_family(int K, int k) {
    OperationFamily fam(0, K);
    for (int n = 0; n <= K; ++n) fam.set_component(n, lambda_op(n, k));
    return fam;
}

OperationFamily connes_family(int K) {
    OperationFamily fam(1, K);
    for (int n = 0; n <= K; ++n) fam.set_component(n, connes_component(n + 1));
    return fam;
}

OperationFamily connes_power_family(int K, int k) {
    return compose(shuffle_family(K, k), connes_family(K));
}

OperationFamily connes_power_family_via_r(int K, int k) {
    OperationFamily fam(1, K);
    if (k == 0) {
        fam.set_component(0, rotated_eulerian_op(0, 1));
        return fam;
    }
    for (int n = 0; n <= K; ++n) {
        Morphism m = Morphism::zero(n + 1, n + 2);
        for (int l = 1; l <= k; ++l) {
            mpz_class c = binomial(n - l, k - l);
            if (c == 0) continue;
            m += rotated_eulerian_op(n, l) * Scalar(c);
        }
        fam.set_component(n, m);
    }
    return fam;
}

Morphism hochschild_boundary_of(const Morphism& m) {
    int w = m.target();
    Morphism r = Morphism::zero(m.source(), w - 1);
    if (w < 2) return Morphism::zero(m.source(), std::max(w - 1, 0));
    for (int i = 0; i < w; ++i) {
        Scalar s = Scalar::integer(i % 2 == 0 ? -1 : 1);  // (-1)^{i+1}
        r += m.then(face(w - 1, 0, i)) * s;
    }
    return r;
}

Morphism cohochschild_coboundary_of(const Morphism& m) {
    int s = m.source() + 1;
    Morphism r = Morphism::zero(s, m.target());
    if (s < 2) return r;
    for (int i = 0; i < s; ++i) {
        Scalar sg = Scalar::integer(i % 2 == 0 ? -1 : 1);
        Morphism mi = face(s - 1, 0, i);
        r += mi.then(m) * sg;
    }
    return r;
}

OperationFamily family_differential(const OperationFamily& x) {
    OperationFamily d(x.degree() - 1, x.truncation());
    for (int j = 0; j <= x.truncation(); ++j) {
        int tgt = j + x.degree();  // target size of the degree-(l-1) component
        if (tgt < 0) continue;
        Morphism out = Morphism::zero(j + 1, tgt);
        const Morphism& xj = x.component(j);
        if (!xj.is_zero() && xj.target() >= 1) out += hochschild_boundary_of(xj);
        if (j >= 1) {
            const Morphism& xprev = x.component(j - 1);
            if (!xprev.is_zero()) out = out - cohochschild_coboundary_of(xprev);
        }
        if (j % 2 == 1) out = out * Scalar::integer(-1);
        d.set_component(j, std::move(out));
    }
    return d;
}

}  // namespace homops
