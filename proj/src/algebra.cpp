#include "homops/algebra.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

namespace homops {

GradedCommutativeAlgebra::GradedCommutativeAlgebra(
    std::string name, std::vector<std::string> labels, std::vector<int> degrees, int unit_index,
    std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> products)
    : name_(std::move(name)), labels_(std::move(labels)), degrees_(std::move(degrees)),
      unit_(unit_index), products_(std::move(products)) {
    int n = dimension();
    if (degrees_.size() != labels_.size() || unit_ < 0 || unit_ >= n)
        throw std::invalid_argument("algebra: bad basis data");
    if (degree(unit_) != 0) throw std::invalid_argument("algebra: unit must have degree 0");
    auto check = [&](int a, int b) -> const std::vector<std::pair<int, Scalar>>& {
        auto it = products_.find({a, b});
        if (it == products_.end()) throw std::invalid_argument("algebra: missing structure constants");
        return it->second;
    };
    // unit law, degree additivity, graded commutativity
    for (int a = 0; a < n; ++a) {
        const auto& ua = check(unit_, a);
        if (ua.size() != 1 || ua[0].first != a || !ua[0].second.is_one())
            throw std::invalid_argument("algebra: unit law fails");
        const auto& au = check(a, unit_);
        if (au.size() != 1 || au[0].first != a || !au[0].second.is_one())
            throw std::invalid_argument("algebra: unit law fails");
        for (int b = 0; b < n; ++b) {
            for (const auto& [e, c] : check(a, b)) {
                if (degree(e) != degree(a) + degree(b))
                    throw std::invalid_argument("algebra: product not degree-additive");
            }
            // a.b = (-1)^{|a||b|} b.a
            std::map<int, Scalar> lhs, rhs;
            for (const auto& [e, c] : check(a, b)) lhs[e] = c;
            Scalar sgn = Scalar::integer((degree(a) * degree(b)) % 2 == 0 ? 1 : -1);
            for (const auto& [e, c] : check(b, a)) rhs[e] = c * sgn;
            if (lhs != rhs) throw std::invalid_argument("algebra: graded commutativity fails");
        }
    }
    // associativity on basis triples
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::map<int, Scalar> lhs, rhs;
                for (const auto& [e, x] : check(a, b))
                    for (const auto& [f, y] : check(e, c)) {
                        auto [it, fresh] = lhs.emplace(f, x * y);
                        if (!fresh) it->second += x * y;
                    }
                for (const auto& [e, x] : check(b, c))
                    for (const auto& [f, y] : check(a, e)) {
                        auto [it, fresh] = rhs.emplace(f, x * y);
                        if (!fresh) it->second += x * y;
                    }
                for (auto* m : {&lhs, &rhs})
                    for (auto it = m->begin(); it != m->end();)
                        it = it->second.is_zero() ? m->erase(it) : std::next(it);
                if (lhs != rhs) throw std::invalid_argument("algebra: associativity fails");
            }
}

int GradedCommutativeAlgebra::index_of(const std::string& label) const {
    for (int i = 0; i < dimension(); ++i)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    throw std::invalid_argument("algebra: unknown basis label '" + label + "'");
}

const std::vector<std::pair<int, Scalar>>& GradedCommutativeAlgebra::product(int a, int b) const {
    return products_.at({a, b});
}

namespace {

using Products = std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>>;

Products monomial_products(int n, const std::function<std::pair<int, Scalar>(int, int)>& rule) {
    Products p;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto [e, c] = rule(a, b);
            std::vector<std::pair<int, Scalar>> v;
            if (e >= 0 && !c.is_zero()) v.emplace_back(e, c);
            p.emplace(std::make_pair(a, b), std::move(v));
        }
    return p;
}

}  // namespace

const GradedCommutativeAlgebra& GradedCommutativeAlgebra::circle_cohomology() {
    static const GradedCommutativeAlgebra a(
        "hs1", {"1", "x"}, {0, -1}, 0, monomial_products(2, [](int i, int j) {
            if (i == 0) return std::make_pair(j, Scalar::integer(1));
            if (j == 0) return std::make_pair(i, Scalar::integer(1));
            return std::make_pair(-1, Scalar::integer(0));  // x.x = 0
        }));
    return a;
}

const GradedCommutativeAlgebra& GradedCommutativeAlgebra::truncated_polynomial(int m) {
    static std::map<int, std::unique_ptr<GradedCommutativeAlgebra>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
    if (m < 1) throw std::invalid_argument("truncated polynomial algebra needs m >= 1");
    std::vector<std::string> labels;
    std::vector<int> degrees(static_cast<size_t>(m), 0);
    labels.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
    auto alg = std::make_unique<GradedCommutativeAlgebra>(
        "poly" + std::to_string(m), std::move(labels), std::move(degrees), 0,
        monomial_products(m, [m](int i, int j) {
            int e = i + j;
            return e < m ? std::make_pair(e, Scalar::integer(1)) : std::make_pair(-1, Scalar::integer(0));
        }));
    return *cache.emplace(m, std::move(alg)).first->second;
}

const GradedCommutativeAlgebra& GradedCommutativeAlgebra::group_ring_z2() {
    static const GradedCommutativeAlgebra a(
        "z2", {"e", "g"}, {0, 0}, 0, monomial_products(2, [](int i, int j) {
            return std::make_pair((i + j) % 2, Scalar::integer(1));
        }));
    return a;
}

int HochschildChain::word_internal_degree(const GradedCommutativeAlgebra& a, const Word& w) {
    int d = 0;
    for (int i : w) d += a.degree(i);
    return d;
}

int HochschildChain::word_degree(const GradedCommutativeAlgebra& a, const Word& w) {
    return static_cast<int>(w.size()) - 1 + word_internal_degree(a, w);
}

void HochschildChain::add_term(const Word& w, const Scalar& c) {
    if (w.empty()) throw std::invalid_argument("chain word must have length >= 1");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HochschildChain HochschildChain::operator+(const HochschildChain& o) const {
    if (algebra_ != o.algebra_) throw std::invalid_argument("chain sum: different algebras");
    HochschildChain r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

HochschildChain HochschildChain::operator-(const HochschildChain& o) const {
    return *this + o * Scalar::integer(-1);
}

HochschildChain HochschildChain::operator*(const Scalar& c) const {
    HochschildChain r(*algebra_);
    if (c.is_zero()) return r;
    for (const auto& [w, a] : terms_) r.terms_.emplace(w, a * c);
    return r;
}

bool HochschildChain::operator==(const HochschildChain& o) const {
    return algebra_ == o.algebra_ && terms_ == o.terms_;
}

HochschildChain evaluate(const Morphism& g, const GradedCommutativeAlgebra& a, const Word& w,
                         const Scalar& coeff) {
    if (g.source() != static_cast<int>(w.size()))
        throw std::invalid_argument("evaluate: word length does not match morphism source");
    HochschildChain out(a);
    for (const auto& [f, c] : g.terms()) {
        // Koszul sign of the stable sort of inputs by output slot.
        int sign = 1;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (f.image[i] > f.image[j] && a.degree(w[i]) % 2 != 0 && a.degree(w[j]) % 2 != 0)
                    sign = -sign;
        // multiply each output slot's letters left to right
        bool dead = false;
        std::map<Word, Scalar> acc;  // running output word combination
        acc.emplace(Word{}, coeff * c * Scalar::integer(sign));
        for (int t = 1; t <= f.target && !dead; ++t) {
            // product of the preimage letters
            std::map<int, Scalar> val;
            bool first = true;
            for (size_t i = 0; i < w.size(); ++i) {
                if (f.image[i] != t) continue;
                if (first) {
                    val.emplace(w[i], Scalar::integer(1));
                    first = false;
                    continue;
                }
                std::map<int, Scalar> next;
                for (const auto& [e, x] : val)
                    for (const auto& [idx, y] : a.product(e, w[i])) {
                        auto [it, fresh] = next.emplace(idx, x * y);
                        if (!fresh) it->second += x * y;
                    }
                val = std::move(next);
            }
            if (first) val.emplace(a.unit(), Scalar::integer(1));
            if (val.empty()) {
                dead = true;
                break;
            }
            std::map<Word, Scalar> grown;
            for (const auto& [word, x] : acc)
                for (const auto& [idx, y] : val) {
                    Word nw = word;
                    nw.push_back(idx);
                    Scalar s = x * y;
                    if (s.is_zero()) continue;
                    auto [it, fresh] = grown.emplace(std::move(nw), s);
                    if (!fresh) it->second += s;
                }
            acc = std::move(grown);
            if (acc.empty()) dead = true;
        }
        if (dead) continue;
        for (const auto& [word, x] : acc) out.add_term(word, x);
    }
    return out;
}

HochschildChain evaluate(const Morphism& g, const HochschildChain& c) {
    HochschildChain out(c.algebra());
    for (const auto& [w, s] : c.terms()) out = out + evaluate(g, c.algebra(), w, s);
    return out;
}

HochschildChain hochschild_differential(const HochschildChain& c) {
    const GradedCommutativeAlgebra& a = c.algebra();
    HochschildChain out(a);
    for (const auto& [w, s] : c.terms()) {
        int k = static_cast<int>(w.size());
        if (k < 2) continue;
        int internal = HochschildChain::word_internal_degree(a, w);
        Scalar twist = Scalar::integer(internal % 2 == 0 ? 1 : -1);
        for (int i = 1; i <= k; ++i) {
            FinSetMap m = (i == k) ? mult_map(k, 1, k) : mult_map(k, i, i + 1);
            Scalar sg = twist * Scalar::integer(i % 2 == 0 ? 1 : -1);
            out = out + evaluate(Morphism(m), a, w, s * sg);
        }
    }
    return out;
}

HochschildChain reduce(const HochschildChain& c) {
    HochschildChain out(c.algebra());
    int unit = c.algebra().unit();
    for (const auto& [w, s] : c.terms()) {
        bool kill = false;
        for (size_t i = 1; i < w.size(); ++i)
            if (w[i] == unit) {
                kill = true;
                break;
            }
        if (!kill) out.add_term(w, s);
    }
    return out;
}

HochschildChain act(const OperationFamily& x, const HochschildChain& c) {
    HochschildChain out(c.algebra());
    for (const auto& [w, s] : c.terms()) {
        int k = static_cast<int>(w.size()) - 1;
        if (k > x.truncation()) throw std::out_of_range("act: word length exceeds family truncation");
        const Morphism& m = x.component(k);
        if (m.is_zero()) continue;
        out = out + evaluate(m, c.algebra(), w, s);
    }
    return out;
}

HochschildChain connes_boundary(const HochschildChain& c) {
    int maxk = 0;
    for (const auto& [w, s] : c.terms()) maxk = std::max(maxk, static_cast<int>(w.size()) - 1);
    return act(connes_family(maxk), c);
}

Morphism shuffle_merge(int j1, int j2) {
    int w1 = j1 + 1, w2 = j2 + 1;
    Morphism r = Morphism::zero(w1 + w2, w1 + w2 - 1);
    if (j1 == 0 && j2 == 0) {
        r.add_term(FinSetMap(2, 1, {1, 1}), Scalar::integer(1));
        return r;
    }
    for (const Permutation& sigma : block_shuffles({std::max(j1, 0), std::max(j2, 0)})) {
        // positions 2..j1+1 carry sigma(1..j1); positions j1+3.. carry sigma(j1+1..)
        std::vector<int> img(static_cast<size_t>(w1 + w2));
        img[0] = 1;
        img[static_cast<size_t>(w1)] = 1;
        for (int i = 1; i <= j1; ++i) img[static_cast<size_t>(i)] = sigma(i) + 1;
        for (int i = 1; i <= j2; ++i) img[static_cast<size_t>(w1 + i)] = sigma(j1 + i) + 1;
        r.add_term(FinSetMap(w1 + w2, w1 + w2 - 1, std::move(img)), Scalar::integer(perm_sign(sigma)));
    }
    return r;
}

HochschildChain shuffle_product(const HochschildChain& c1, const HochschildChain& c2) {
    if (&c1.algebra() != &c2.algebra()) throw std::invalid_argument("shuffle product: different algebras");
    const GradedCommutativeAlgebra& a = c1.algebra();
    HochschildChain out(a);
    for (const auto& [w1, s1] : c1.terms())
        for (const auto& [w2, s2] : c2.terms()) {
            Word joined = w1;
            joined.insert(joined.end(), w2.begin(), w2.end());
            Morphism m = shuffle_merge(static_cast<int>(w1.size()) - 1, static_cast<int>(w2.size()) - 1);
            out = out + evaluate(m, a, joined, s1 * s2);
        }
    return out;
}

}  // namespace homops
