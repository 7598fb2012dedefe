#include "homops/formal.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace homops {

void OperationSpec::validate() const {
    if (n1 < 0 || m1 < 0 || n2 < 0 || m2 < 0) throw std::invalid_argument("operation spec: negative signature");
    if (static_cast<int>(f.size()) != n1 + m1) throw std::invalid_argument("operation spec: f has wrong length");
    if (static_cast<int>(k.size()) != n1) throw std::invalid_argument("operation spec: k has wrong length");
    for (int i = 1; i <= n1 + m1; ++i) {
        int fi = f[static_cast<size_t>(i) - 1];
        if (fi < 1 || fi > n2 + m2) throw std::invalid_argument("operation spec: f value out of range");
        if (i <= n1 && k[static_cast<size_t>(i) - 1] < 0)
            throw std::invalid_argument("operation spec: negative weight");
        if (i <= n1 && k[static_cast<size_t>(i) - 1] > 0 && fi > n2)
            throw std::invalid_argument("operation spec: weighted input routed past the Hochschild outputs");
        bool needs_s = fi <= n2;
        bool has_s = s.count(i) > 0;
        if (needs_s != has_s)
            throw std::invalid_argument("operation spec: s must be defined exactly on inputs mapping to Hochschild outputs");
        if (has_s) {
            int si = s.at(i);
            if (si != 0 && si != 1) throw std::invalid_argument("operation spec: s values must be 0 or 1");
        }
    }
}

int MultiOperation::source_size(const MultiIndex& j) const {
    int s = m1;
    for (int ji : j) s += ji + 1;
    return s;
}

int MultiOperation::target_size(const MultiIndex& v) const {
    int s = m2;
    for (int vt : v) s += vt + 1;
    return s;
}

void MultiOperation::add(const MultiIndex& j, const MultiIndex& v, const Morphism& m) {
    if (m.is_zero()) return;
    auto& slot = comps[j];
    auto it = slot.find(v);
    if (it == slot.end()) {
        slot.emplace(v, m);
    } else {
        it->second += m;
        if (it->second.is_zero()) slot.erase(it);
    }
    if (slot.empty()) comps.erase(j);
}

bool MultiOperation::is_zero() const {
    for (const auto& [j, slot] : comps)
        for (const auto& [v, m] : slot)
            if (!m.is_zero()) return false;
    return true;
}

bool MultiOperation::operator==(const MultiOperation& o) const {
    if (n1 != o.n1 || m1 != o.m1 || n2 != o.n2 || m2 != o.m2 || K != o.K) return false;
    auto normal = [](const MultiOperation& x) {
        std::map<MultiIndex, std::map<MultiIndex, Morphism>> n;
        for (const auto& [j, slot] : x.comps)
            for (const auto& [v, m] : slot)
                if (!m.is_zero()) n[j].emplace(v, m);
        return n;
    };
    return normal(*this) == normal(o);
}

Morphism iterated_shuffle_merge(const std::vector<int>& degrees) {
    if (degrees.empty()) return Morphism(FinSetMap(0, 1, {}));
    Morphism acc = Morphism::identity(degrees[0] + 1);
    int deg = degrees[0];
    for (size_t u = 1; u < degrees.size(); ++u) {
        acc = acc.tensor(Morphism::identity(degrees[u] + 1)).then(shuffle_merge(deg, degrees[u]));
        deg += degrees[u];
    }
    return acc;
}

namespace {

struct FactorChoice {
    Morphism local;   // Com(j_i + 1, w_out) resp. Com(1, w_out)
    int out_degree;   // output word degree (w_out - 1); 0 for algebra letters
    int op_degree;    // 0 or 1 (rotation-type generators)
    bool word_output; // word vs algebra letter
};

// The component of input i's generator at local input degree jloc, or
// nullopt when that component vanishes.
std::optional<FactorChoice> factor_component(const OperationSpec& spec, int i, int jloc) {
    int fi = spec.f[static_cast<size_t>(i) - 1];
    if (i <= spec.n1) {
        int ki = spec.k[static_cast<size_t>(i) - 1];
        if (fi > spec.n2) {
            // projection onto word length one
            if (jloc != 0) return std::nullopt;
            return FactorChoice{Morphism::identity(1), 0, 0, false};
        }
        if (spec.s.at(i) == 0) {
            Morphism m = shuffle_op(jloc, ki);
            if (m.is_zero()) return std::nullopt;
            return FactorChoice{std::move(m), jloc, 0, true};
        }
        Morphism m = connes_power_family(jloc, ki).component(jloc);
        if (m.is_zero()) return std::nullopt;
        return FactorChoice{std::move(m), jloc + 1, 1, true};
    }
    // algebra input
    if (fi > spec.n2) return FactorChoice{Morphism::identity(1), 0, 0, false};
    if (spec.s.at(i) == 0) return FactorChoice{Morphism::identity(1), 0, 0, true};
    return FactorChoice{Morphism(FinSetMap(1, 2, {2})), 1, 1, true};
}

// All input multidegrees (j_1..j_{n1}) with entries 0..K.
std::vector<MultiIndex> all_multidegrees(int n1, int K) {
    std::vector<MultiIndex> out;
    MultiIndex j(static_cast<size_t>(n1), 0);
    while (true) {
        out.push_back(j);
        int t = 0;
        while (t < n1 && j[static_cast<size_t>(t)] == K) j[static_cast<size_t>(t++)] = 0;
        if (t == n1) break;
        ++j[static_cast<size_t>(t)];
    }
    if (n1 == 0) out = {MultiIndex{}};
    return out;
}

}  // namespace

MultiOperation build_x1(const OperationSpec& spec, int K) {
    spec.validate();
    MultiOperation x;
    x.n1 = spec.n1;
    x.m1 = spec.m1;
    x.K = K;
    // intermediate signature: outputs in input order; word outputs count n2'
    x.n2 = 0;
    x.m2 = 0;
    for (int i = 1; i <= spec.n1 + spec.m1; ++i)
        (spec.f[static_cast<size_t>(i) - 1] <= spec.n2 ? x.n2 : x.m2) += 1;
    // x1 keeps outputs in input order, so its output multidegree lists word
    // outputs in input order.
    for (const MultiIndex& j : all_multidegrees(spec.n1, K)) {
        Morphism acc = Morphism::identity(0);
        MultiIndex v;
        int sign_exp = 0;
        int deg_so_far = 0;  // sum of op degrees of earlier factors
        bool dead = false;
        for (int i = 1; i <= spec.n1 + spec.m1 && !dead; ++i) {
            int jloc = (i <= spec.n1) ? j[static_cast<size_t>(i) - 1] : 0;
            auto fc = factor_component(spec, i, jloc);
            if (!fc) {
                dead = true;
                break;
            }
            sign_exp += deg_so_far * fc->out_degree;
            deg_so_far += fc->op_degree;
            if (fc->word_output) v.push_back(fc->out_degree);
            acc = acc.tensor(fc->local);
        }
        if (dead) continue;
        if (sign_exp % 2 != 0) acc = acc * Scalar::integer(-1);
        x.add(j, v, acc);
    }
    return x;
}

MultiOperation build_x_fs(const OperationSpec& spec, int K) {
    spec.validate();
    MultiOperation x;
    x.n1 = spec.n1;
    x.m1 = spec.m1;
    x.n2 = spec.n2;
    x.m2 = spec.m2;
    x.K = K;

    // groups per output, each holding its inputs in ascending order
    std::vector<std::vector<int>> groups(static_cast<size_t>(spec.n2 + spec.m2));
    for (int i = 1; i <= spec.n1 + spec.m1; ++i)
        groups[static_cast<size_t>(spec.f[static_cast<size_t>(i) - 1]) - 1].push_back(i);

    for (const MultiIndex& j : all_multidegrees(spec.n1, K)) {
        // per-input factor components
        std::vector<FactorChoice> fcs;
        bool dead = false;
        int sign_exp = 0;
        int deg_so_far = 0;
        Morphism acc = Morphism::identity(0);
        for (int i = 1; i <= spec.n1 + spec.m1; ++i) {
            int jloc = (i <= spec.n1) ? j[static_cast<size_t>(i) - 1] : 0;
            auto fc = factor_component(spec, i, jloc);
            if (!fc) {
                dead = true;
                break;
            }
            sign_exp += deg_so_far * fc->out_degree;
            deg_so_far += fc->op_degree;
            acc = acc.tensor(fc->local);
            fcs.push_back(std::move(*fc));
        }
        if (dead) continue;

        // route the intermediate blocks into grouped order; Koszul sign from
        // crossings of odd-degree blocks
        int total_mid = acc.target();
        std::vector<int> offsets(fcs.size() + 1, 0);
        for (size_t i = 0; i < fcs.size(); ++i)
            offsets[i + 1] = offsets[i] + fcs[i].out_degree + 1;
        std::vector<int> grouped;  // inputs in grouped order
        for (const auto& g : groups)
            for (int i : g) grouped.push_back(i);
        std::vector<int> new_offset(fcs.size() + 1, 0);
        std::vector<int> pos_of(fcs.size() + 1, 0);  // grouped position per input
        {
            int off = 0;
            for (size_t q = 0; q < grouped.size(); ++q) {
                int i = grouped[q];
                pos_of[static_cast<size_t>(i)] = static_cast<int>(q);
                new_offset[static_cast<size_t>(i)] = off;
                off += fcs[static_cast<size_t>(i) - 1].out_degree + 1;
            }
        }
        std::vector<int> tau(static_cast<size_t>(total_mid));
        for (size_t i0 = 0; i0 < fcs.size(); ++i0) {
            int i = static_cast<int>(i0) + 1;
            int w = fcs[i0].out_degree + 1;
            for (int q = 0; q < w; ++q)
                tau[static_cast<size_t>(offsets[i0] + q)] = new_offset[static_cast<size_t>(i)] + q + 1;
        }
        int tau_sign = 1;
        for (size_t a = 0; a < fcs.size(); ++a)
            for (size_t b = a + 1; b < fcs.size(); ++b)
                if (pos_of[a + 1] > pos_of[b + 1] && fcs[a].out_degree % 2 != 0 && fcs[b].out_degree % 2 != 0)
                    tau_sign = -tau_sign;
        Morphism router(FinSetMap(total_mid, total_mid, std::move(tau)), Scalar::integer(tau_sign));

        // merge each group: iterated shuffle merge on word outputs, collapse
        // on algebra outputs
        Morphism merger = Morphism::identity(0);
        MultiIndex v;
        for (int t = 1; t <= spec.n2 + spec.m2; ++t) {
            const auto& g = groups[static_cast<size_t>(t) - 1];
            if (t <= spec.n2) {
                std::vector<int> degs;
                int vt = 0;
                for (int i : g) {
                    degs.push_back(fcs[static_cast<size_t>(i) - 1].out_degree);
                    vt += fcs[static_cast<size_t>(i) - 1].out_degree;
                }
                merger = merger.tensor(iterated_shuffle_merge(degs));
                v.push_back(vt);
            } else {
                int size = 0;
                for (int i : g) size += fcs[static_cast<size_t>(i) - 1].out_degree + 1;
                merger = merger.tensor(
                    Morphism(FinSetMap(size, 1, std::vector<int>(static_cast<size_t>(size), 1))));
            }
        }
        if (sign_exp % 2 != 0) acc = acc * Scalar::integer(-1);
        x.add(j, v, acc.then(router).then(merger));
    }
    return x;
}

std::vector<OperationSpec> enumerate_A_basis(int n1, int m1, int n2, int m2, const std::vector<int>& k) {
    if (static_cast<int>(k.size()) != n1) throw std::invalid_argument("enumerate_A_basis: k has wrong length");
    std::vector<OperationSpec> out;
    int slots = n1 + m1;
    std::vector<int> f(static_cast<size_t>(slots), 1);
    auto rec_s = [&](auto&& self, OperationSpec& spec, std::vector<int>& hoch_inputs, size_t pos) -> void {
        if (pos == hoch_inputs.size()) {
            out.push_back(spec);
            return;
        }
        for (int b : {0, 1}) {
            spec.s[hoch_inputs[pos]] = b;
            self(self, spec, hoch_inputs, pos + 1);
        }
        spec.s.erase(hoch_inputs[pos]);
    };
    auto rec_f = [&](auto&& self, size_t pos) -> void {
        if (pos == f.size()) {
            OperationSpec spec{n1, m1, n2, m2, f, {}, k};
            std::vector<int> hoch_inputs;
            for (int i = 1; i <= slots; ++i)
                if (f[static_cast<size_t>(i) - 1] <= n2) hoch_inputs.push_back(i);
            rec_s(rec_s, spec, hoch_inputs, 0);
            return;
        }
        int i = static_cast<int>(pos) + 1;
        for (int t = 1; t <= n2 + m2; ++t) {
            if (i <= n1 && k[pos] > 0 && t > n2) continue;
            f[pos] = t;
            self(self, pos + 1);
        }
    };
    if (slots == 0) {
        out.push_back(OperationSpec{n1, m1, n2, m2, {}, {}, k});
    } else {
        rec_f(rec_f, 0);
    }
    return out;
}

MultiOperation multi_differential(const MultiOperation& x) {
    MultiOperation d;
    d.n1 = x.n1;
    d.m1 = x.m1;
    d.n2 = x.n2;
    d.m2 = x.m2;
    d.K = x.K;
    for (const auto& [j, slot] : x.comps) {
        int jsum = std::accumulate(j.begin(), j.end(), 0);
        for (const auto& [v, m] : slot) {
            if (m.is_zero()) continue;
            // word-output boundaries
            int voff = 0;
            int vprefix = 0;
            for (int t = 0; t < x.n2; ++t) {
                int wt = v[static_cast<size_t>(t)] + 1;
                if (wt >= 2) {
                    int eps = ((jsum + vprefix) % 2 == 0) ? 1 : -1;
                    for (int loc = 0; loc < wt; ++loc) {
                        FinSetMap mm = (loc == wt - 1)
                                           ? mult_map(m.target(), voff + 1, voff + wt)
                                           : mult_map(m.target(), voff + loc + 1, voff + loc + 2);
                        int s = eps * ((loc % 2 == 0) ? -1 : 1);
                        MultiIndex vnew = v;
                        vnew[static_cast<size_t>(t)] -= 1;
                        d.add(j, vnew, m.then(Morphism(mm)) * Scalar::integer(s));
                    }
                }
                voff += wt;
                vprefix += v[static_cast<size_t>(t)];
            }
            // input-side coboundaries
            for (int i = 0; i < x.n1; ++i) {
                if (j[static_cast<size_t>(i)] + 1 > x.K) continue;
                int suffix = 0;
                for (int i2 = i; i2 < x.n1; ++i2) suffix += j[static_cast<size_t>(i2)];
                int eps = (suffix % 2 == 0) ? 1 : -1;
                int off = 0;
                for (int i2 = 0; i2 < i; ++i2) off += j[static_cast<size_t>(i2)] + 1;
                int wnew = j[static_cast<size_t>(i)] + 2;
                int snew = m.source() + 1;
                MultiIndex jnew = j;
                jnew[static_cast<size_t>(i)] += 1;
                for (int loc = 0; loc < wnew; ++loc) {
                    FinSetMap mm = (loc == wnew - 1) ? mult_map(snew, off + 1, off + wnew)
                                                     : mult_map(snew, off + loc + 1, off + loc + 2);
                    int s = eps * ((loc % 2 == 0) ? -1 : 1);
                    d.add(jnew, v, Morphism(mm).then(m) * Scalar::integer(s));
                }
            }
        }
    }
    return d;
}

bool is_multi_cycle(const MultiOperation& x) { return multi_differential(x).is_zero(); }

OperationFamily to_family(const MultiOperation& x) {
    if (x.n1 != 1 || x.m1 != 0 || x.n2 != 1 || x.m2 != 0)
        throw std::invalid_argument("to_family: signature must be (1,0,1,0)");
    int degree = 0;
    bool seen = false;
    for (const auto& [j, slot] : x.comps)
        for (const auto& [v, m] : slot) {
            if (m.is_zero()) continue;
            int d = v[0] - j[0];
            if (seen && d != degree) throw std::invalid_argument("to_family: inhomogeneous operation");
            degree = d;
            seen = true;
        }
    OperationFamily fam(degree, x.K);
    for (const auto& [j, slot] : x.comps)
        for (const auto& [v, m] : slot)
            if (!m.is_zero()) fam.set_component(j[0], m);
    return fam;
}

void MultiChain::add_term(const std::vector<Word>& t, const Scalar& c) {
    if (static_cast<int>(t.size()) != n1_ + m1_) throw std::invalid_argument("multichain term: wrong arity");
    for (int i = 0; i < n1_ + m1_; ++i) {
        if (t[static_cast<size_t>(i)].empty()) throw std::invalid_argument("multichain term: empty word");
        if (i >= n1_ && t[static_cast<size_t>(i)].size() != 1)
            throw std::invalid_argument("multichain term: algebra slots take single letters");
    }
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool MultiChain::operator==(const MultiChain& o) const {
    return algebra_ == o.algebra_ && n1_ == o.n1_ && m1_ == o.m1_ && terms_ == o.terms_;
}

MultiChain evaluate(const MultiOperation& x, const MultiChain& c) {
    if (c.words() != x.n1 || c.letters() != x.m1)
        throw std::invalid_argument("evaluate: chain arity does not match operation signature");
    MultiChain out(c.algebra(), x.n2, x.m2);
    for (const auto& [mw, s] : c.terms()) {
        MultiIndex j;
        Word joined;
        for (int i = 0; i < x.n1; ++i) {
            int ji = static_cast<int>(mw[static_cast<size_t>(i)].size()) - 1;
            if (ji > x.K) throw std::out_of_range("evaluate: word length exceeds truncation");
            j.push_back(ji);
        }
        for (const auto& w : mw) joined.insert(joined.end(), w.begin(), w.end());
        auto it = x.comps.find(j);
        if (it == x.comps.end()) continue;
        for (const auto& [v, m] : it->second) {
            HochschildChain flat = evaluate(m, c.algebra(), joined, s);
            for (const auto& [w, cf] : flat.terms()) {
                std::vector<Word> split;
                size_t off = 0;
                for (int t = 0; t < x.n2; ++t) {
                    size_t wt = static_cast<size_t>(v[static_cast<size_t>(t)]) + 1;
                    split.emplace_back(w.begin() + static_cast<long>(off), w.begin() + static_cast<long>(off + wt));
                    off += wt;
                }
                for (int t = 0; t < x.m2; ++t) split.push_back(Word{w[off++]});
                out.add_term(split, cf);
            }
        }
    }
    return out;
}

}  // namespace homops
