#include "homops/finset.hpp"

#include <algorithm>

namespace homops {

FinSetMap::FinSetMap(int m, int n, std::vector<int> img) : source(m), target(n), image(std::move(img)) {
    if (m < 0 || n < 0 || static_cast<int>(image.size()) != m)
        throw std::invalid_argument("finite-set map: bad sizes");
    if (n == 0 && m > 0) throw std::invalid_argument("finite-set map: nonempty source, empty target");
    for (int v : image)
        if (v < 1 || v > n) throw std::invalid_argument("finite-set map: image entry out of range");
}

FinSetMap FinSetMap::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    return FinSetMap(n, n, std::move(img));
}

FinSetMap FinSetMap::then(const FinSetMap& g) const {
    if (target != g.source) throw std::invalid_argument("finite-set map composition: size mismatch");
    std::vector<int> img(image.size());
    for (size_t i = 0; i < image.size(); ++i) img[i] = g.image[static_cast<size_t>(image[i]) - 1];
    return FinSetMap(source, g.target, std::move(img));
}

FinSetMap FinSetMap::tensor(const FinSetMap& o) const {
    std::vector<int> img;
    img.reserve(image.size() + o.image.size());
    for (int v : image) img.push_back(v);
    for (int v : o.image) img.push_back(v + target);
    return FinSetMap(source + o.source, target + o.target, std::move(img));
}

bool FinSetMap::hits_all_nonbase() const {
    std::vector<char> hit(static_cast<size_t>(target) + 1, 0);
    for (int v : image) hit[static_cast<size_t>(v)] = 1;
    for (int t = 2; t <= target; ++t)
        if (!hit[static_cast<size_t>(t)]) return false;
    return true;
}

FinSetMap mult_map(int k, int i, int j) {
    if (k < 2 || i < 1 || j <= i || j > k) throw std::invalid_argument("mult_map: index out of range");
    std::vector<int> img(static_cast<size_t>(k));
    for (int t = 1; t <= k; ++t) {
        int v = (t == j) ? i : t;
        if (v > j) --v;  // target renumbered by deleting slot j
        img[static_cast<size_t>(t) - 1] = v;
    }
    return FinSetMap(k, k - 1, std::move(img));
}

FinSetMap unit_insertion(int k, int n, int i) {
    if (i < 1 || i > k - 1) throw std::invalid_argument("unit_insertion: index out of range");
    std::vector<int> img;
    img.reserve(static_cast<size_t>(k - 1 + n));
    for (int t = 1; t <= k - 1 + n; ++t) img.push_back(t < i + 1 ? t : t + 1);
    return FinSetMap(k - 1 + n, k + n, std::move(img));
}

Morphism::Morphism(const FinSetMap& f, Scalar c) : source_(f.source), target_(f.target) {
    if (!c.is_zero()) terms_.emplace(f, std::move(c));
}

void Morphism::add_term(const FinSetMap& f, const Scalar& c) {
    if (f.source != source_ || f.target != target_)
        throw std::invalid_argument("morphism term: size mismatch");
    auto it = terms_.find(f);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(f, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar Morphism::coeff(const FinSetMap& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? Scalar::integer(0) : it->second;
}

Morphism Morphism::operator+(const Morphism& o) const {
    Morphism r = *this;
    r += o;
    return r;
}

Morphism& Morphism::operator+=(const Morphism& o) {
    if (o.source_ != source_ || o.target_ != target_)
        throw std::invalid_argument("morphism sum: size mismatch");
    for (const auto& [f, c] : o.terms_) add_term(f, c);
    return *this;
}

Morphism Morphism::operator-(const Morphism& o) const { return *this + o * Scalar::integer(-1); }

Morphism Morphism::operator*(const Scalar& c) const {
    Morphism r(source_, target_);
    if (c.is_zero()) return r;
    for (const auto& [f, a] : terms_) r.terms_.emplace(f, a * c);
    return r;
}

Morphism Morphism::then(const Morphism& g) const {
    if (target_ != g.source_) throw std::invalid_argument("morphism composition: size mismatch");
    Morphism r(source_, g.target_);
    for (const auto& [f, a] : terms_)
        for (const auto& [h, b] : g.terms_) r.add_term(f.then(h), a * b);
    return r;
}

Morphism Morphism::tensor(const Morphism& o) const {
    Morphism r(source_ + o.source_, target_ + o.target_);
    for (const auto& [f, a] : terms_)
        for (const auto& [h, b] : o.terms_) r.add_term(f.tensor(h), a * b);
    return r;
}

bool Morphism::operator==(const Morphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && terms_ == o.terms_;
}

Morphism face(int k, int n, int i) {
    if (i < 0 || i > k) throw std::invalid_argument("face: index out of range");
    FinSetMap m = (i == k) ? mult_map(k + 1, 1, k + 1) : mult_map(k + 1, i + 1, i + 2);
    if (n > 0) m = m.tensor(FinSetMap::identity(n));
    return Morphism(m);
}

namespace {

void enumerate_rec(int s, int w, int pos, std::vector<int>& img, int missing, std::vector<char>& hit,
                   std::vector<FinSetMap>& out) {
    int slots_left = s - pos;
    if (missing > slots_left) return;  // cannot hit the remaining targets
    if (pos == s) {
        out.emplace_back(s, w, img);
        return;
    }
    for (int v = 1; v <= w; ++v) {
        bool fresh = (v >= 2 && !hit[static_cast<size_t>(v)]);
        img.push_back(v);
        if (fresh) hit[static_cast<size_t>(v)] = 1;
        enumerate_rec(s, w, pos + 1, img, missing - (fresh ? 1 : 0), hit, out);
        if (fresh) hit[static_cast<size_t>(v)] = 0;
        img.pop_back();
    }
}

}  // namespace

std::vector<FinSetMap> enumerate_reduced_maps(int s, int w) {
    std::vector<FinSetMap> out;
    if (w < 0 || s < 0) return out;
    if (w == 0) {
        if (s == 0) out.emplace_back(0, 0, std::vector<int>{});
        return out;
    }
    std::vector<int> img;
    img.reserve(static_cast<size_t>(s));
    std::vector<char> hit(static_cast<size_t>(w) + 1, 0);
    enumerate_rec(s, w, 0, img, w - 1, hit, out);
    return out;
}

}  // namespace homops
