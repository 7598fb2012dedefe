#include "homops/perm.hpp"

#include <algorithm>
#include <numeric>

namespace homops {

Permutation::Permutation(std::vector<int> ol) : one_line(std::move(ol)) {
    std::vector<char> seen(one_line.size() + 1, 0);
    for (int v : one_line) {
        if (v < 1 || v > static_cast<int>(one_line.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("permutation: not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

int descent_count(const Permutation& sigma) {
    int d = 0;
    for (int i = 1; i < sigma.size(); ++i)
        if (sigma(i) > sigma(i + 1)) ++d;
    return d;
}

int perm_sign(const Permutation& sigma) {
    int inv = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        for (int j = i + 1; j <= sigma.size(); ++j)
            if (sigma(i) > sigma(j)) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

namespace {

// Embed sigma in Sigma_n as the bijection of {1..n+1} fixing 1.
FinSetMap embed_fixing_base(const Permutation& sigma) {
    std::vector<int> img;
    img.reserve(static_cast<size_t>(sigma.size()) + 1);
    img.push_back(1);
    for (int i = 1; i <= sigma.size(); ++i) img.push_back(sigma(i) + 1);
    return FinSetMap(sigma.size() + 1, sigma.size() + 1, std::move(img));
}

}  // namespace

std::vector<std::pair<FinSetMap, int>> eulerian_embedded(int n, int k) {
    std::vector<std::pair<FinSetMap, int>> out;
    if (n < 1 || k < 1 || k > n) return out;
    std::vector<int> ol(static_cast<size_t>(n));
    std::iota(ol.begin(), ol.end(), 1);
    do {
        Permutation sigma(ol);
        if (descent_count(sigma) == k - 1) out.emplace_back(embed_fixing_base(sigma), perm_sign(sigma));
    } while (std::next_permutation(ol.begin(), ol.end()));
    return out;
}

mpz_class eulerian_number(int n, int d) {
    if (d < 0 || d >= std::max(n, 1)) return (n == 0 && d == 0) ? 1 : 0;
    if (n == 0) return d == 0 ? 1 : 0;
    // A(n, d) = (d+1) A(n-1, d) + (n-d) A(n-1, d-1)
    std::vector<mpz_class> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<mpz_class> next(static_cast<size_t>(m), 0);
        for (int e = 0; e < m; ++e) {
            mpz_class v = 0;
            if (e < m - 1) v += (e + 1) * row[static_cast<size_t>(e)];
            if (e >= 1) v += (m - e) * row[static_cast<size_t>(e) - 1];
            next[static_cast<size_t>(e)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(d)];
}

std::vector<std::vector<int>> positive_compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 1 || n < k) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int parts) -> void {
        if (parts == 1) {
            cur.push_back(rest);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int p = 1; p <= rest - (parts - 1); ++p) {
            cur.push_back(p);
            self(self, rest - p, parts - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, k);
    return out;
}

std::vector<Permutation> block_shuffles(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<Permutation> out;
    // choose the value sets for each block; within a block values ascend
    std::vector<int> block_of(static_cast<size_t>(n));
    {
        int b = 0, c = 0;
        for (int i = 0; i < n; ++i) {
            while (c == parts[static_cast<size_t>(b)]) ++b, c = 0;
            block_of[static_cast<size_t>(i)] = b;
            ++c;
        }
    }
    // iterate over all assignments value -> block with the right multiplicities,
    // then read off sigma: positions of block b get its values in order.
    std::vector<int> assign = block_of;  // lexicographically smallest multiset perm
    std::sort(assign.begin(), assign.end());
    do {
        std::vector<std::vector<int>> values(parts.size());
        for (int v = 1; v <= n; ++v) values[static_cast<size_t>(assign[static_cast<size_t>(v) - 1])].push_back(v);
        std::vector<int> ol;
        ol.reserve(static_cast<size_t>(n));
        for (const auto& vs : values)
            for (int v : vs) ol.push_back(v);
        out.emplace_back(std::move(ol));
    } while (std::next_permutation(assign.begin(), assign.end()));
    return out;
}

}  // namespace homops
