#include "homops/verify.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "homops/circle.hpp"
#include "homops/natcomplex.hpp"

namespace homops {

json Bounds::to_json() const {
    return json{{"max_n", max_n}, {"max_k", max_k}, {"K", K}, {"field", field.to_string()},
                {"rational_confirm", rational_confirm}};
}

Bounds Bounds::from_json(const json& j) {
    Bounds b;
    b.max_n = j.value("max_n", b.max_n);
    b.max_k = j.value("max_k", b.max_k);
    b.K = j.value("K", b.K);
    if (j.contains("field")) b.field = FieldSpec::parse(j.at("field").get<std::string>());
    b.rational_confirm = j.value("rational_confirm", b.rational_confirm);
    return b;
}

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

json SuiteReport::to_json(const Bounds& b) const {
    json checks_j = json::array();
    for (const auto& c : checks) {
        json cj{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.pass) cj["witness"] = witness_json(c, b);
        checks_j.push_back(cj);
    }
    return json{{"suite", suite}, {"checks", checks_j}, {"pass", all_pass()}, {"wall_ms", millis}};
}

std::string SuiteReport::to_text() const {
    std::string s;
    for (const auto& c : checks)
        s += std::string(c.pass ? "pass" : "FAIL") + "  " + c.id + "\n";
    s += std::string(all_pass() ? "pass" : "FAIL") + "  suite " + suite + " (" +
         std::to_string(static_cast<long>(millis)) + " ms)\n";
    return s;
}

namespace {

// ---------------------------------------------------------------- helpers

json morphism_mismatch(const std::string& what, int n, int k, const Morphism& lhs, const Morphism& rhs) {
    return json{{"what", what}, {"n", n}, {"k", k}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
}

Morphism zero_like(int src, int tgt) { return Morphism::zero(src, tgt); }

std::vector<Word> random_words(const GradedCommutativeAlgebra& a, int length, int count,
                               std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, a.dimension() - 1);
    std::vector<Word> out;
    for (int c = 0; c < count; ++c) {
        Word w(static_cast<size_t>(length));
        for (auto& x : w) x = pick(rng);
        out.push_back(std::move(w));
    }
    return out;
}

HochschildChain random_chain(const GradedCommutativeAlgebra& a, int length, int terms,
                             std::mt19937_64& rng) {
    HochschildChain c(a);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const Word& w : random_words(a, length, terms, rng)) c.add_term(w, Scalar::integer(coeff(rng)));
    return c;
}

const std::vector<const GradedCommutativeAlgebra*>& builtin_algebras() {
    static const std::vector<const GradedCommutativeAlgebra*> algs{
        &GradedCommutativeAlgebra::circle_cohomology(), &GradedCommutativeAlgebra::truncated_polynomial(3),
        &GradedCommutativeAlgebra::group_ring_z2()};
    return algs;
}

json chain_json_or_null(const HochschildChain& c) { return chain_to_json(c); }

// ---------------------------------------------------------------- prop23

std::optional<json> check_eulerian_counts(const Bounds& b) {
    for (int n = 1; n <= b.max_n; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            auto set = eulerian_embedded(n, k);
            mpz_class expected = (k >= 1 && k <= n) ? eulerian_number(n, k - 1) : 0;
            if (mpz_class(static_cast<long>(set.size())) != expected)
                return json{{"what", "eulerian set size"}, {"n", n}, {"k", k},
                            {"enumerated", set.size()}, {"recurrence", expected.get_str()}};
            for (const auto& [f, sgn] : set) {
                if (f(1) != 1)
                    return json{{"what", "embedded permutation moves the basepoint"}, {"n", n}, {"k", k},
                                {"map", to_json(f)}, {"sign", sgn}};
            }
        }
    }
    return std::nullopt;
}

std::optional<json> check_boundary_identity(const Bounds& b) {
    for (int n = 1; n <= b.max_n; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            Morphism lhs = hochschild_boundary_of(eulerian_op(n, k));
            Morphism prev = eulerian_op(n - 1, k) - eulerian_op(n - 1, k - 1);
            Morphism rhs = cohochschild_coboundary_of(prev);
            if (lhs != rhs) return morphism_mismatch("d_h(l_n^k) vs d_co(l_{n-1}^k - l_{n-1}^{k-1})", n, k, lhs, rhs);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- inversion

std::optional<json> check_sh_definitions(const Bounds& b) {
    for (int n = 1; n <= b.max_n; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            Morphism lhs = shuffle_op_via_shuffles(n, k);
            Morphism rhs = shuffle_op(n, k);
            if (lhs != rhs) return morphism_mismatch("shuffle enumeration vs binomial combination", n, k, lhs, rhs);
        }
    }
    return std::nullopt;
}

std::optional<json> check_inversion_identities(const Bounds& b) {
    for (int n = 0; n <= b.max_n; ++n) {
        for (int k = 0; k <= b.max_k; ++k) {
            Morphism lam = lambda_op(n, k);
            Morphism lam_from_sh = zero_like(n + 1, n + 1);
            for (int m = 0; m <= k; ++m) lam_from_sh += shuffle_op(n, m) * Scalar(binomial(k, m));
            if (lam != lam_from_sh) return morphism_mismatch("lambda from shuffles", n, k, lam, lam_from_sh);

            Morphism sh = shuffle_op(n, k);
            Morphism sh_from_lam = zero_like(n + 1, n + 1);
            for (int m = 0; m <= k; ++m) {
                Scalar c = Scalar(binomial(k, m));
                if ((k - m) % 2 != 0) c = -c;
                sh_from_lam += lambda_op(n, m) * c;
            }
            if (sh != sh_from_lam) return morphism_mismatch("shuffle from lambdas", n, k, sh, sh_from_lam);
        }
    }
    return std::nullopt;
}

std::optional<json> check_vanishing(const Bounds& b) {
    for (int n = 0; n <= b.max_n; ++n)
        for (int k = n + 1; k <= b.max_k + n + 1; ++k) {
            if (!(n == 0 && k == 0) && !shuffle_op(n, k).is_zero())
                return json{{"what", "sh_n^k nonzero below word length k"}, {"n", n}, {"k", k}};
        }
    for (int K = std::min(b.K, 4), k = 1; k <= b.max_k; ++k) {
        OperationFamily bk = connes_power_family(K, k);
        for (int n = 0; n < std::min(k, K + 1); ++n)
            if (!bk.component(n).is_zero())
                return json{{"what", "rotation-power family nonzero below word length k"}, {"n", n}, {"k", k}};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- multiplicativity

std::optional<json> check_lambda_multiplicative(const Bounds& b) {
    int K = b.max_n;
    int kk = std::min(b.max_k, 3);
    for (int k = 1; k <= kk; ++k)
        for (int k2 = 1; k2 <= kk; ++k2) {
            OperationFamily lhs = compose(lambda_family(K, k), lambda_family(K, k2));
            OperationFamily rhs = lambda_family(K, k * k2);
            if (lhs != rhs)
                return json{{"what", "lambda composition is not multiplicative"}, {"k", k}, {"k2", k2}};
        }
    return std::nullopt;
}

std::optional<json> check_shuffle_product_expansion(const Bounds& b) {
    int K = b.max_n;
    int kk = std::min(b.max_k, 3);
    for (int k = 0; k <= kk; ++k)
        for (int k2 = 0; k2 <= kk; ++k2) {
            OperationFamily lhs = compose(shuffle_family(K, k), shuffle_family(K, k2));
            OperationFamily rhs(0, K);
            for (int i = 0; i <= k; ++i)
                for (int i2 = 0; i2 <= k2; ++i2)
                    for (int j = 0; j <= i * i2; ++j) {
                        mpz_class c = binomial(k, i) * binomial(k2, i2) * binomial(i * i2, j);
                        if (c == 0) continue;
                        Scalar s = Scalar(c);
                        if ((k + k2 - i - i2) % 2 != 0) s = -s;
                        rhs = rhs + shuffle_family(K, j) * s;
                    }
            if (lhs != rhs)
                return json{{"what", "shuffle product expansion mismatch"}, {"k", k}, {"k2", k2}};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- aw

std::optional<json> check_aw_vanishing(const Bounds& b) {
    int N = std::min(b.max_n, 5);
    for (int n = 1; n <= N; ++n) {
        LetterWord a_line(static_cast<size_t>(n) + 1, Letter::Y);
        a_line[0] = Letter::One;
        // all permutations of {1..n+1} fixing 1, grouped by descents
        for (int k = 1; k <= n; ++k) {
            for (const auto& [f, sgn] : eulerian_embedded(n, k)) {
                (void)sgn;
                ReducedTensor t = aw(ProductSimplex::from_map(f));
                bool is_id = f == FinSetMap::identity(n + 1);
                if (is_id) {
                    if (t.size() != 1 || t.count(a_line) == 0 || !t.at(a_line).is_one())
                        return json{{"what", "aw(identity) is not the basepoint line"}, {"n", n}};
                } else if (!t.empty()) {
                    return json{{"what", "aw(non-identity permutation) nonzero"}, {"n", n}, {"map", to_json(f)}};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<json> check_aw_shift(const Bounds& b) {
    int N = std::min(b.max_n, 5);
    for (int n = 1; n <= N; ++n) {
        LetterWord y_line(static_cast<size_t>(n), Letter::Y);
        // bijections {1..n} -> {2..n+1}
        std::vector<int> vals(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = i + 2;
        std::sort(vals.begin(), vals.end());
        do {
            FinSetMap g(n, n + 1, vals);
            bool is_shift = true;
            for (int i = 1; i <= n; ++i)
                if (g(i) != i + 1) is_shift = false;
            ReducedTensor t = aw(ProductSimplex::from_map(g));
            if (is_shift) {
                if (t.size() != 1 || t.count(y_line) == 0 || !t.at(y_line).is_one())
                    return json{{"what", "aw(shift) is not the pure y line"}, {"n", n}};
            } else if (!t.empty()) {
                return json{{"what", "aw(non-shift injection) nonzero"}, {"n", n}, {"map", to_json(g)}};
            }
        } while (std::next_permutation(vals.begin(), vals.end()));
    }
    return std::nullopt;
}

std::optional<json> check_aw_degenerate(const Bounds& b) {
    int N = std::min(b.max_n, 5);
    std::mt19937_64 rng(2024);
    for (int n = 0; n <= N - 1; ++n) {
        for (int m = 1; m <= 3; ++m) {
            std::uniform_int_distribution<int> pt(1, n + 1);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<int> pts(static_cast<size_t>(m));
                for (auto& p : pts) p = pt(rng);
                ProductSimplex x(n, pts);
                for (int i = 0; i <= n; ++i) {
                    if (!aw(x.degeneracy(i)).empty())
                        return json{{"what", "aw nonzero on a degenerate simplex"}, {"n", n}, {"i", i}};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<json> check_aw_chain_map(const Bounds& b) {
    int N = std::min(b.max_n, 5);
    std::mt19937_64 rng(77);
    for (int n = 1; n <= N; ++n) {
        for (int m = 1; m <= 4; ++m) {
            std::uniform_int_distribution<int> pt(1, n + 1);
            for (int trial = 0; trial < 12; ++trial) {
                std::vector<int> pts(static_cast<size_t>(m));
                for (auto& p : pts) p = pt(rng);
                ProductSimplex x(n, pts);
                // alternating boundary with the twisted sign convention
                ReducedTensor total;
                for (int i = 0; i <= n; ++i) {
                    ReducedTensor t = aw(x.face(i));
                    Scalar s = Scalar::integer(i % 2 == 0 ? -1 : 1);
                    for (const auto& [w, c] : t) {
                        auto [it, fresh] = total.emplace(w, c * s);
                        if (!fresh) {
                            it->second += c * s;
                            if (it->second.is_zero()) total.erase(it);
                        }
                    }
                }
                if (!total.empty())
                    return json{{"what", "aw of a boundary is nonzero in the tensor complex"}, {"n", n}};
            }
        }
    }
    return std::nullopt;
}

std::optional<json> check_aw_binomial_table(const Bounds& b) {
    int N = b.max_n;
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            OperationFamily sh(0, n);
            sh.set_component(n, shuffle_op(n, k));
            for (int j = 0; j < n; ++j) sh.set_component(j, zero_like(j + 1, j + 1));
            Scalar got = q_map(sh)[static_cast<size_t>(n)];
            mpz_class expect = (n == 0 && k == 0) ? 1 : (k > 0 && n >= k ? binomial(n - 1, n - k) : 0);
            if (got != Scalar(expect))
                return json{{"what", "q(sh^k)_n"}, {"n", n}, {"k", k}, {"got", got.to_string()},
                            {"expected", expect.get_str()}};

            OperationFamily bk = connes_power_family(n, k);
            Scalar gotb = q_map(bk)[static_cast<size_t>(n)];
            if (gotb != Scalar(expect))
                return json{{"what", "q(B^k)_n"}, {"n", n}, {"k", k}, {"got", gotb.to_string()},
                            {"expected", expect.get_str()}};
        }
    }
    return std::nullopt;
}

std::optional<json> check_triangular(const Bounds& b) {
    // unitriangularity up to size 12
    for (int n = 1; n <= 12; ++n) {
        if (binomial(n - 1, 0) != 1)
            return json{{"what", "pairing matrix diagonal entry is not 1"}, {"n", n}};
    }
    // identity decomposes as sh^0 + sh^1
    std::vector<Scalar> ones(11, Scalar::integer(1));
    std::vector<Scalar> c = triangular_solve(ones);
    for (size_t n = 0; n < c.size(); ++n) {
        Scalar expect = (n <= 1) ? Scalar::integer(1) : Scalar::integer(0);
        if (c[n] != expect)
            return json{{"what", "solve(all ones) is not (1,1,0,..)"}, {"n", n}, {"got", c[n].to_string()}};
    }
    // zero target
    std::vector<Scalar> zero(8, Scalar::integer(0));
    for (const Scalar& s : triangular_solve(zero))
        if (!s.is_zero()) return json{{"what", "solve(0) != 0"}};
    // random round trips over Q, length 10; matrix route both ways
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Scalar> f;
        for (int n = 0; n <= 10; ++n)
            f.push_back(Scalar::rational(num(rng), 1 + std::abs(num(rng))));
        std::vector<Scalar> cs = triangular_solve(f);
        std::vector<Scalar> back = triangular_apply(cs);
        if (back != f) return json{{"what", "triangular solve does not invert the pairing"}, {"trial", trial}};
    }
    // the matrix route agrees with the Alexander-Whitney pairing itself
    int N = std::min(b.max_n, 8);
    std::vector<Scalar> cs;
    for (int k = 0; k <= N; ++k) cs.push_back(Scalar::integer((k % 3) - 1));
    OperationFamily combo(0, N);
    for (int n = 0; n <= N; ++n) {
        Morphism m = zero_like(n + 1, n + 1);
        for (int k = 0; k <= N; ++k)
            if (!cs[static_cast<size_t>(k)].is_zero()) m += shuffle_op(n, k) * cs[static_cast<size_t>(k)];
        combo.set_component(n, m);
    }
    std::vector<Scalar> via_aw = q_map(combo);
    std::vector<Scalar> via_matrix = triangular_apply(cs);
    for (int n = 0; n <= N; ++n)
        if (via_aw[static_cast<size_t>(n)] != via_matrix[static_cast<size_t>(n)])
            return json{{"what", "aw pairing disagrees with the binomial matrix"}, {"n", n},
                        {"aw", via_aw[static_cast<size_t>(n)].to_string()},
                        {"matrix", via_matrix[static_cast<size_t>(n)].to_string()}};
    return std::nullopt;
}

// ---------------------------------------------------------------- cycles

std::optional<json> check_family_cycles(const Bounds& b) {
    int K = b.K;
    for (int k = 0; k <= b.max_k; ++k) {
        if (!family_differential(shuffle_family(K, k)).is_zero())
            return json{{"what", "shuffle family is not a cycle"}, {"k", k}, {"K", K}};
        if (!family_differential(lambda_family(K, k)).is_zero())
            return json{{"what", "lambda family is not a cycle"}, {"k", k}, {"K", K}};
        if (!family_differential(connes_power_family(K, k)).is_zero())
            return json{{"what", "rotation-power family is not a cycle"}, {"k", k}, {"K", K}};
    }
    if (!family_differential(connes_family(K)).is_zero())
        return json{{"what", "rotation family is not a cycle"}, {"K", K}};
    return std::nullopt;
}

std::optional<json> check_connes_split(const Bounds& b) {
    int K = b.K;
    OperationFamily sum = connes_power_family(K, 0) + connes_power_family(K, 1);
    if (sum != connes_family(K)) return json{{"what", "B != B^0 + B^1"}, {"K", K}};
    return std::nullopt;
}

std::optional<json> check_rotated_eulerian(const Bounds& b) {
    int K = std::min(b.K + 2, 7);
    for (int k = 0; k <= std::min(b.max_k, 5); ++k) {
        OperationFamily lhs = connes_power_family_via_r(K, k);
        OperationFamily rhs = connes_power_family(K, k);
        if (lhs != rhs) return json{{"what", "rotated-eulerian expansion disagrees with B after sh^k"}, {"k", k}, {"K", K}};
    }
    // term counts: R_n^l has (n+1) * A(n, l-1) signed maps
    for (int n = 0; n <= std::min(b.max_n, 6); ++n)
        for (int l = 1; l <= n; ++l) {
            mpz_class expect = (n + 1) * eulerian_number(n, l - 1);
            Morphism r = rotated_eulerian_op(n, l);
            if (mpz_class(static_cast<long>(r.term_count())) != expect)
                return json{{"what", "rotated-eulerian term count"}, {"n", n}, {"l", l},
                            {"got", r.term_count()}, {"expected", expect.get_str()}};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- nat-homology

std::optional<json> check_nat_cycles_matrix(const Bounds& b) {
    int K = std::min(b.K, 5);
    NatComplex nat(K, -1, 1, b.field);
    for (int k = 0; k <= std::min(b.max_k, K); ++k) {
        if (!nat.is_cycle(shuffle_family(K, k)))
            return json{{"what", "sh^k fails the matrix cycle test"}, {"k", k}};
        if (!nat.is_cycle(lambda_family(K, k)))
            return json{{"what", "lambda^k fails the matrix cycle test"}, {"k", k}};
        if (!nat.is_cycle(connes_power_family(K, k)))
            return json{{"what", "B^k fails the matrix cycle test"}, {"k", k}};
    }
    return std::nullopt;
}

std::optional<json> check_class_independence(const Bounds& b) {
    int K = b.K;
    NatComplex nat(K, -1, 1, b.field);
    std::vector<OperationFamily> shs, bks;
    for (int k = 0; k <= K; ++k) {
        shs.push_back(shuffle_family(K, k));
        bks.push_back(connes_power_family(K, k));
    }
    int r0 = nat.family_class_rank(shs);
    if (r0 != K + 1)
        return json{{"what", "shuffle classes dependent in degree-0 homology"}, {"rank", r0}, {"expected", K + 1}};
    int r1 = nat.family_class_rank(bks);
    if (r1 != K + 1)
        return json{{"what", "rotation classes dependent in degree-1 homology"}, {"rank", r1}, {"expected", K + 1}};
    if (b.rational_confirm && K <= 4) {
        NatComplex natq(K, -1, 1, FieldSpec::rationals());
        if (natq.family_class_rank(shs) != K + 1 || natq.family_class_rank(bks) != K + 1)
            return json{{"what", "class ranks differ over Q"}};
    }
    return std::nullopt;
}

std::optional<json> check_homology_dims(const Bounds& b) {
    int K = b.K;
    NatComplex nat(K, -2, 1, b.field);
    HomologyResult h = homology(nat.complex());
    json dims = json::object();
    for (int l = -2; l <= 1; ++l) dims[std::to_string(l)] = h.dim(l);
    // degree 0 and 1 must carry at least the K+1 independent classes
    if (h.dim(0) < K + 1 || h.dim(1) < K + 1)
        return json{{"what", "homology too small in degrees 0/1"}, {"dims", dims}};
    if (b.rational_confirm && K <= 4) {
        NatComplex natq(K, -2, 1, FieldSpec::rationals());
        HomologyResult hq = homology(natq.complex());
        for (int l = -2; l <= 1; ++l)
            if (hq.dim(l) != h.dim(l))
                return json{{"what", "homology dims differ between F_p and Q"}, {"l", l},
                            {"fp", h.dim(l)}, {"q", hq.dim(l)}};
    }
    return std::nullopt;
}

std::optional<json> check_stability(const Bounds& b) {
    int K = b.K;
    json detail = json::object();
    for (int l = -2; l <= 1; ++l) {
        int stable = NatComplex::stable_dim(K, l, b.field);
        detail[std::to_string(l)] = stable;
        if ((l == 0 || l == 1)) {
            if (stable < K + 1)
                return json{{"what", "stable homology too small in degrees 0/1"}, {"l", l},
                            {"stable", stable}, {"expected_at_least", K + 1}, {"detail", detail}};
        } else if (stable != 0) {
            return json{{"what", "stable homology nonzero outside degrees 0/1"}, {"l", l},
                        {"stable", stable}, {"detail", detail}};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- dsquare

std::optional<json> check_chain_d_squared(const Bounds& b) {
    std::mt19937_64 rng(11);
    for (const auto* alg : builtin_algebras()) {
        for (int wl = 1; wl <= std::max(b.max_n, 3); ++wl) {
            for (int trial = 0; trial < 6; ++trial) {
                HochschildChain c = random_chain(*alg, wl, 3, rng);
                HochschildChain dd = hochschild_differential(hochschild_differential(c));
                if (!dd.is_zero())
                    return json{{"what", "d squared nonzero"}, {"algebra", alg->name()}, {"word_length", wl},
                                {"chain", chain_json_or_null(c)}, {"dd", chain_json_or_null(dd)}};
            }
        }
    }
    return std::nullopt;
}

std::optional<json> check_reduce_compatible(const Bounds& b) {
    std::mt19937_64 rng(12);
    for (const auto* alg : builtin_algebras()) {
        for (int wl = 1; wl <= std::min(b.max_n, 6); ++wl) {
            for (int trial = 0; trial < 6; ++trial) {
                HochschildChain c = random_chain(*alg, wl, 3, rng);
                HochschildChain lhs = reduce(hochschild_differential(c));
                HochschildChain rhs = hochschild_differential(reduce(c));
                // both compute the differential on the reduced quotient
                if (reduce(lhs - rhs) != HochschildChain(*alg))
                    return json{{"what", "reduction does not commute with the differential"},
                                {"algebra", alg->name()}, {"word_length", wl}};
            }
        }
    }
    return std::nullopt;
}

std::optional<json> check_circle_homology(const Bounds& b) {
    const auto& a = GradedCommutativeAlgebra::circle_cohomology();
    int W = std::max(b.max_n, 3);  // max word length
    int x = a.index_of("x");
    // reduced words are (a0, x, x, ..., x); check d = 0 and assemble the complex
    std::vector<std::vector<std::string>> labels;
    std::map<std::pair<int, int>, int> count_by_degree_len;
    for (int w = 1; w <= W; ++w) {
        for (int first : {a.unit(), x}) {
            Word word(static_cast<size_t>(w), x);
            word[0] = first;
            HochschildChain c(a);
            c.add_term(word, Scalar::integer(1));
            if (!reduce(hochschild_differential(c)).is_zero())
                return json{{"what", "reduced differential nonzero on a basis word"},
                            {"word_length", w}, {"first", a.label(first)}};
            int deg = HochschildChain::word_degree(a, word);
            if (deg != (first == a.unit() ? 0 : -1))
                return json{{"what", "unexpected degree of a reduced word"}, {"word_length", w}, {"degree", deg}};
            count_by_degree_len[{deg, w}] += 1;
        }
    }
    for (const auto& [key, cnt] : count_by_degree_len)
        if (cnt != 1)
            return json{{"what", "reduced basis not one-dimensional per word length"},
                        {"degree", key.first}, {"word_length", key.second}, {"count", cnt}};
    // as a finite chain complex over the window [-3..2]: zero differentials,
    // dims W in degrees 0 and -1, zero elsewhere
    std::vector<int> dims;
    std::vector<SparseMat> diffs;
    for (int l = -3; l <= 2; ++l) {
        int d = (l == 0 || l == -1) ? W : 0;
        dims.push_back(d);
        SparseMat m;
        m.rows = 0;
        m.cols.assign(static_cast<size_t>(d), SparseVec{});
        diffs.push_back(m);
    }
    // fix row counts
    for (int i = 0; i < static_cast<int>(diffs.size()); ++i)
        diffs[static_cast<size_t>(i)].rows = (i == 0) ? 0 : dims[static_cast<size_t>(i) - 1];
    FiniteChainComplex c(-3, 2, dims, diffs, FieldSpec::rationals());
    HomologyResult h = homology(c);
    for (int l = -3; l <= 2; ++l) {
        int expect = (l == 0 || l == -1) ? W : 0;
        if (h.dim(l) != expect)
            return json{{"what", "circle Hochschild homology dimension"}, {"l", l}, {"got", h.dim(l)},
                        {"expected", expect}};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- chain-actions

std::optional<json> check_connes_squared(const Bounds& b) {
    std::mt19937_64 rng(21);
    for (const auto* alg : builtin_algebras()) {
        for (int wl = 1; wl <= std::min(b.max_n, 6); ++wl) {
            for (int trial = 0; trial < 5; ++trial) {
                HochschildChain c = reduce(random_chain(*alg, wl, 3, rng));
                HochschildChain once = reduce(connes_boundary(c));
                HochschildChain twice = reduce(connes_boundary(once));
                if (!twice.is_zero())
                    return json{{"what", "Connes operator does not square to zero on reduced chains"},
                                {"algebra", alg->name()}, {"word_length", wl}};
            }
        }
    }
    return std::nullopt;
}

std::optional<json> check_chain_maps(const Bounds& b) {
    std::mt19937_64 rng(22);
    int WL = std::min(b.max_n, 6);
    for (const auto* alg : builtin_algebras()) {
        for (int wl = 1; wl <= WL; ++wl) {
            for (int trial = 0; trial < 4; ++trial) {
                HochschildChain c = random_chain(*alg, wl, 3, rng);
                for (int k = 0; k <= std::min(b.max_k, 3); ++k) {
                    OperationFamily sh = shuffle_family(wl, k);
                    HochschildChain lhs = hochschild_differential(act(sh, c));
                    HochschildChain rhs = act(sh, hochschild_differential(c));
                    if (lhs != rhs)
                        return json{{"what", "shuffle operation is not a chain map"}, {"k", k},
                                    {"algebra", alg->name()}, {"word_length", wl}};
                    OperationFamily lam = lambda_family(wl, k);
                    if (hochschild_differential(act(lam, c)) != act(lam, hochschild_differential(c)))
                        return json{{"what", "lambda operation is not a chain map"}, {"k", k},
                                    {"algebra", alg->name()}, {"word_length", wl}};
                }
                HochschildChain lhs = hochschild_differential(connes_boundary(c));
                HochschildChain rhs = connes_boundary(hochschild_differential(c));
                if (lhs != rhs)
                    return json{{"what", "Connes operator is not a chain map"}, {"algebra", alg->name()},
                                {"word_length", wl}, {"d.B", chain_json_or_null(lhs)},
                                {"B.d", chain_json_or_null(rhs)}};
            }
        }
    }
    return std::nullopt;
}

std::optional<json> check_shuffle_algebra(const Bounds& b) {
    std::mt19937_64 rng(23);
    int WL = std::max(2, std::min(b.max_n - 1, 5));
    for (const auto* alg : builtin_algebras()) {
        for (int trial = 0; trial < 6; ++trial) {
            std::uniform_int_distribution<int> len(1, WL);
            HochschildChain c1 = random_chain(*alg, len(rng), 2, rng);
            HochschildChain c2 = random_chain(*alg, len(rng), 2, rng);
            HochschildChain c3 = random_chain(*alg, len(rng), 2, rng);
            // associativity
            if (shuffle_product(shuffle_product(c1, c2), c3) != shuffle_product(c1, shuffle_product(c2, c3)))
                return json{{"what", "shuffle product not associative"}, {"algebra", alg->name()}};
            // unit
            HochschildChain unit(*alg);
            unit.add_term(Word{alg->unit()}, Scalar::integer(1));
            if (shuffle_product(unit, c1) != c1 || shuffle_product(c1, unit) != c1)
                return json{{"what", "unit chain is not a shuffle unit"}, {"algebra", alg->name()}};
            // graded commutativity on homogeneous pieces
            for (const auto& [w1, s1] : c1.terms())
                for (const auto& [w2, s2] : c2.terms()) {
                    HochschildChain h1(*alg), h2(*alg);
                    h1.add_term(w1, s1);
                    h2.add_term(w2, s2);
                    int d1 = HochschildChain::word_degree(*alg, w1);
                    int d2 = HochschildChain::word_degree(*alg, w2);
                    Scalar sgn = Scalar::integer((d1 * d2) % 2 == 0 ? 1 : -1);
                    if (shuffle_product(h1, h2) != shuffle_product(h2, h1) * sgn)
                        return json{{"what", "shuffle product not graded commutative"},
                                    {"algebra", alg->name()}};
                }
            // Leibniz rule on homogeneous pieces
            for (const auto& [w1, s1] : c1.terms())
                for (const auto& [w2, s2] : c2.terms()) {
                    HochschildChain h1(*alg), h2(*alg);
                    h1.add_term(w1, s1);
                    h2.add_term(w2, s2);
                    int d1 = HochschildChain::word_degree(*alg, w1);
                    Scalar sgn = Scalar::integer(d1 % 2 == 0 ? 1 : -1);
                    HochschildChain lhs = hochschild_differential(shuffle_product(h1, h2));
                    HochschildChain rhs = shuffle_product(hochschild_differential(h1), h2) +
                                          shuffle_product(h1, hochschild_differential(h2)) * sgn;
                    if (lhs != rhs)
                        return json{{"what", "shuffle product fails the Leibniz rule"},
                                    {"algebra", alg->name()},
                                    {"lhs", chain_json_or_null(lhs)}, {"rhs", chain_json_or_null(rhs)}};
                }
        }
    }
    return std::nullopt;
}

std::optional<json> check_lambda_chain_multiplicativity(const Bounds& b) {
    std::mt19937_64 rng(24);
    int WL = std::min(b.max_n, 6);
    for (const auto* alg : builtin_algebras()) {
        for (int wl = 1; wl <= WL; ++wl) {
            HochschildChain c = random_chain(*alg, wl, 3, rng);
            for (int k = 1; k <= std::min(b.max_k, 3); ++k)
                for (int k2 = 1; k2 <= std::min(b.max_k, 3); ++k2) {
                    HochschildChain lhs = act(lambda_family(wl, k), act(lambda_family(wl, k2), c));
                    HochschildChain rhs = act(lambda_family(wl, k * k2), c);
                    if (lhs != rhs)
                        return json{{"what", "lambda actions not multiplicative on chains"},
                                    {"k", k}, {"k2", k2}, {"algebra", alg->name()}};
                }
        }
    }
    return std::nullopt;
}

std::optional<json> check_sh1_identity(const Bounds& b) {
    std::mt19937_64 rng(25);
    for (const auto* alg : builtin_algebras()) {
        for (int wl = 2; wl <= std::min(b.max_n, 6); ++wl) {
            HochschildChain c = random_chain(*alg, wl, 3, rng);
            if (act(shuffle_family(wl, 1), c) != c)
                return json{{"what", "sh^1 does not act as the identity"}, {"algebra", alg->name()},
                            {"word_length", wl}};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- example

OperationSpec example_spec() {
    OperationSpec s;
    s.n1 = 2;
    s.m1 = 2;
    s.n2 = 2;
    s.m2 = 1;
    s.f = {3, 2, 3, 2};
    s.s = {{2, 0}, {4, 1}};
    s.k = {0, 2};
    return s;
}

std::optional<json> check_example_evaluation(const Bounds&) {
    const auto& a = GradedCommutativeAlgebra::truncated_polynomial(12);
    // distinct letters q0, r0, r1, r2, g, h as powers of t
    int q0 = 1, r0 = 2, r1 = 3, r2 = 4, g = 5, h = 6;
    MultiChain in(a, 2, 2);
    in.add_term({{q0}, {r0, r1, r2}, {g}, {h}}, Scalar::integer(1));

    auto expected_words = [&](std::vector<Word> second) {
        std::vector<std::vector<Word>> out;
        for (auto& w : second) out.push_back({{a.unit()}, w, {q0 + g}});
        return out;
    };
    std::vector<std::vector<Word>> displayed =
        expected_words({{r0, h, r2, r1}, {r0, r2, h, r1}, {r0, r2, r1, h}});

    // The drawn version keeps only the descent summand of the middle factor:
    // id (x) (crossing of the last two letters) (x) id (x) unit-shift, routed
    // and merged exactly as the full operation.
    {
        Morphism crossing(FinSetMap(3, 3, {1, 3, 2}), Scalar::integer(-1));
        Morphism x1fig = Morphism::identity(1)
                             .tensor(crossing)
                             .tensor(Morphism::identity(1))
                             .tensor(Morphism(FinSetMap(1, 2, {2})));
        Morphism router(FinSetMap(7, 7, {6, 1, 2, 3, 7, 4, 5}));
        Morphism merger = iterated_shuffle_merge({})  // empty first output
                              .tensor(iterated_shuffle_merge({2, 1}))
                              .tensor(Morphism(FinSetMap(2, 1, {1, 1})));
        Morphism xfig = x1fig.then(router).then(merger);
        HochschildChain flat = evaluate(xfig, a, {q0, r0, r1, r2, g, h}, Scalar::integer(1));
        std::map<std::vector<Word>, Scalar> split_terms;
        for (const auto& [w, c] : flat.terms()) {
            std::vector<Word> mw{{w[0]}, {w[1], w[2], w[3], w[4]}, {w[5]}};
            split_terms.emplace(mw, c);
        }
        if (split_terms.size() != 3)
            return json{{"what", "drawn operation does not give three terms"},
                        {"count", split_terms.size()}};
        for (const auto& mw : displayed) {
            auto it = split_terms.find(mw);
            if (it == split_terms.end())
                return json{{"what", "displayed output word missing from the drawn operation"}};
            if (!(it->second == Scalar::integer(1) || it->second == Scalar::integer(-1)))
                return json{{"what", "displayed output word has coefficient != +-1"},
                            {"coeff", it->second.to_string()}};
        }
    }

    // The full generator replaces the crossing by the whole weight-2 shuffle
    // component, which adds the three words with the middle letters in source
    // order.
    MultiOperation xfull = build_x_fs(example_spec(), 3);
    MultiChain full = evaluate(xfull, in);
    for (const auto& mw : displayed) {
        auto it = full.terms().find(mw);
        if (it == full.terms().end())
            return json{{"what", "displayed output word missing from the full evaluation"},
                        {"value", multichain_to_json(full)}};
        Scalar c = it->second;
        if (!(c == Scalar::integer(1) || c == Scalar::integer(-1)))
            return json{{"what", "displayed output word has coefficient != +-1 in the full evaluation"},
                        {"coeff", c.to_string()}};
    }
    std::vector<std::vector<Word>> others =
        expected_words({{r0, h, r1, r2}, {r0, r1, h, r2}, {r0, r1, r2, h}});
    if (full.terms().size() != 6)
        return json{{"what", "full evaluation does not have six terms"},
                    {"count", full.terms().size()}, {"value", multichain_to_json(full)}};
    for (const auto& mw : others)
        if (full.terms().find(mw) == full.terms().end())
            return json{{"what", "identity-summand output word missing"}};
    return std::nullopt;
}

std::optional<json> check_xfs_cycles(const Bounds& b) {
    int K = std::min(b.K, 3);
    int kmax = std::min(b.max_k, 3);
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int m1 = 0; m1 <= 2; ++m1)
            for (int n2 = 0; n2 <= 2; ++n2)
                for (int m2 = 0; m2 <= 1; ++m2) {
                    if (n1 + m1 == 0 || n2 + m2 == 0) continue;
                    std::vector<int> k(static_cast<size_t>(n1), 0);
                    while (true) {
                        for (const OperationSpec& spec : enumerate_A_basis(n1, m1, n2, m2, k)) {
                            MultiOperation x = build_x_fs(spec, K);
                            if (!is_multi_cycle(x))
                                return json{{"what", "generator is not a cycle"},
                                            {"spec", to_json(spec)}, {"K", K}};
                        }
                        int t = 0;
                        while (t < n1 && k[static_cast<size_t>(t)] == kmax) k[static_cast<size_t>(t++)] = 0;
                        if (t == n1) break;
                        ++k[static_cast<size_t>(t)];
                    }
                }
    return std::nullopt;
}

std::optional<json> check_basis_1010(const Bounds& b) {
    int K = std::min(b.K, 4);
    for (int k = 0; k <= std::min(b.max_k, K); ++k) {
        auto specs = enumerate_A_basis(1, 0, 1, 0, {k});
        if (specs.size() != 2)
            return json{{"what", "basis of the (1,0,1,0) factor is not two-dimensional"},
                        {"k", k}, {"count", specs.size()}};
        bool saw_sh = false, saw_b = false;
        for (const auto& spec : specs) {
            OperationFamily fam = to_family(build_x_fs(spec, K));
            if (spec.s.at(1) == 0) {
                if (fam != shuffle_family(K, k))
                    return json{{"what", "s=0 generator differs from sh^k"}, {"k", k}};
                saw_sh = true;
            } else {
                if (fam != connes_power_family(K, k))
                    return json{{"what", "s=1 generator differs from B^k"}, {"k", k}};
                saw_b = true;
            }
        }
        if (!saw_sh || !saw_b) return json{{"what", "missing generator"}, {"k", k}};
    }
    return std::nullopt;
}

std::optional<json> check_xfs_independence(const Bounds& b) {
    // distinct (f, s) give independent collections of morphisms
    int K = std::min(b.K, 2);
    struct Key {
        MultiIndex j, v;
        FinSetMap map;
        auto operator<=>(const Key&) const = default;
    };
    for (auto [n1, m1, n2, m2] : std::vector<std::array<int, 4>>{{1, 1, 1, 1}, {2, 0, 1, 0}, {1, 1, 2, 1}}) {
        std::vector<int> k(static_cast<size_t>(n1), 1);
        auto specs = enumerate_A_basis(n1, m1, n2, m2, k);
        std::map<Key, int> coord_index;
        std::vector<SparseVec> vecs;
        std::vector<std::map<int, Scalar>> raw;
        for (const auto& spec : specs) {
            MultiOperation x = build_x_fs(spec, K);
            std::map<int, Scalar> vec;
            for (const auto& [j, slot] : x.comps)
                for (const auto& [v, m] : slot)
                    for (const auto& [f, c] : m.terms()) {
                        Key key{j, v, f};
                        auto it = coord_index.find(key);
                        int idx;
                        if (it == coord_index.end()) {
                            idx = static_cast<int>(coord_index.size());
                            coord_index.emplace(key, idx);
                        } else {
                            idx = it->second;
                        }
                        auto [jt, fresh] = vec.emplace(idx, c);
                        if (!fresh) jt->second += c;
                    }
            raw.push_back(std::move(vec));
        }
        for (const auto& vec : raw) {
            SparseVec v;
            for (const auto& [i, c] : vec)
                if (!c.is_zero()) v.emplace_back(i, c);
            vecs.push_back(std::move(v));
        }
        Eliminator e(FieldSpec::rationals());
        int rank = 0;
        for (const auto& v : vecs)
            if (e.add_column(v)) ++rank;
        if (rank != static_cast<int>(specs.size()))
            return json{{"what", "generators with distinct (f,s) are dependent"},
                        {"signature", {n1, m1, n2, m2}}, {"count", specs.size()}, {"rank", rank}};
    }
    return std::nullopt;
}

std::optional<json> check_selftest_failure(const Bounds&) {
    return json{{"what", "deliberate failure used to exercise witness replay"}, {"lhs", 2}, {"rhs", 3}};
}

}  // namespace

const std::vector<Check>& check_registry() {
    static const std::vector<Check> checks{
        {"prop23", "prop23/eulerian-counts", check_eulerian_counts},
        {"prop23", "prop23/boundary-identity", check_boundary_identity},
        {"inversion", "inversion/sh-definitions-agree", check_sh_definitions},
        {"inversion", "inversion/inversion-identities", check_inversion_identities},
        {"inversion", "inversion/vanishing", check_vanishing},
        {"multiplicativity", "multiplicativity/lambda-multiplicative", check_lambda_multiplicative},
        {"multiplicativity", "multiplicativity/shuffle-product-expansion", check_shuffle_product_expansion},
        {"aw", "aw/vanishing-lemma", check_aw_vanishing},
        {"aw", "aw/shift-lemma", check_aw_shift},
        {"aw", "aw/degenerate", check_aw_degenerate},
        {"aw", "aw/chain-map", check_aw_chain_map},
        {"aw", "aw/binomial-table", check_aw_binomial_table},
        {"aw", "aw/triangular", check_triangular},
        {"cycles", "cycles/family-cycles", check_family_cycles},
        {"cycles", "cycles/connes-split", check_connes_split},
        {"cycles", "cycles/rotated-eulerian", check_rotated_eulerian},
        {"nat-homology", "nat-homology/matrix-cycles", check_nat_cycles_matrix},
        {"nat-homology", "nat-homology/class-independence", check_class_independence},
        {"nat-homology", "nat-homology/dims", check_homology_dims},
        {"nat-homology", "nat-homology/stability", check_stability},
        {"dsquare", "dsquare/chain-d-squared", check_chain_d_squared},
        {"dsquare", "dsquare/reduce-compatible", check_reduce_compatible},
        {"dsquare", "dsquare/circle-homology", check_circle_homology},
        {"chain-actions", "chain-actions/connes-squared", check_connes_squared},
        {"chain-actions", "chain-actions/chain-maps", check_chain_maps},
        {"chain-actions", "chain-actions/shuffle-algebra", check_shuffle_algebra},
        {"chain-actions", "chain-actions/lambda-multiplicative", check_lambda_chain_multiplicativity},
        {"chain-actions", "chain-actions/sh1-identity", check_sh1_identity},
        {"example", "example/evaluation", check_example_evaluation},
        {"example", "example/xfs-cycles", check_xfs_cycles},
        {"example", "example/basis-1010", check_basis_1010},
        {"example", "example/xfs-independence", check_xfs_independence},
        {"selftest", "selftest/expected-failure", check_selftest_failure},
    };
    return checks;
}

std::vector<std::string> suite_names() {
    return {"prop23", "inversion", "multiplicativity", "aw", "cycles",
            "nat-homology", "example", "dsquare", "chain-actions", "all"};
}

bool suite_exists(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return name == "selftest";
}

std::optional<std::string> infeasible_reason(const std::string& suite, const Bounds& b) {
    auto fact = [](int n) {
        double f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    bool perm_heavy = suite == "all" || suite == "prop23" || suite == "inversion" ||
                      suite == "multiplicativity" || suite == "aw" || suite == "cycles";
    if (perm_heavy && b.max_n > 9)
        return "enumerating permutation groups at n = " + std::to_string(b.max_n) + " costs about " +
               std::to_string(fact(b.max_n)) + " elements per family component; limit is n <= 9";
    if ((suite == "all" || suite == "nat-homology") && b.K > 7) {
        double basis = 0;
        for (int j = 0; j <= b.K + 1; ++j) basis += fact(j + 1) * (1.0 + (j + 1) * j / 4.0);
        return "the reduced operation complex at truncation K = " + std::to_string(b.K) +
               " has about " + std::to_string(static_cast<long long>(basis)) +
               " basis maps; limit is K <= 7";
    }
    return std::nullopt;
}

SuiteReport run_suite(const std::string& suite, const Bounds& b, int threads) {
    if (!suite_exists(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
    if (auto why = infeasible_reason(suite, b)) throw std::invalid_argument("infeasible bounds: " + *why);
    std::vector<const Check*> todo;
    for (const auto& c : check_registry()) {
        if (c.suite == "selftest" && suite != "selftest") continue;
        if (suite == "all" || c.suite == suite) todo.push_back(&c);
    }
    SuiteReport report;
    report.suite = suite;
    report.checks.resize(todo.size());
    auto t0 = std::chrono::steady_clock::now();
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= todo.size()) break;
            auto c0 = std::chrono::steady_clock::now();
            CheckOutcome out;
            out.suite = todo[i]->suite;
            out.id = todo[i]->id;
            try {
                auto witness = todo[i]->fn(b);
                out.pass = !witness.has_value();
                if (witness) out.witness = *witness;
            } catch (const std::exception& e) {
                out.pass = false;
                out.witness = json{{"what", "check threw"}, {"error", e.what()}};
            }
            out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - c0).count();
            report.checks[i] = std::move(out);
        }
    };
    int nt = std::max(1, threads);
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::optional<CheckOutcome> run_single_check(const std::string& id, const Bounds& b) {
    for (const auto& c : check_registry()) {
        if (c.id != id) continue;
        CheckOutcome out;
        out.suite = c.suite;
        out.id = c.id;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto witness = c.fn(b);
            out.pass = !witness.has_value();
            if (witness) out.witness = *witness;
        } catch (const std::exception& e) {
            out.pass = false;
            out.witness = json{{"what", "check threw"}, {"error", e.what()}};
        }
        out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }
    return std::nullopt;
}

json witness_json(const CheckOutcome& c, const Bounds& b) {
    return json{{"suite", c.suite}, {"check", c.id}, {"bounds", b.to_json()}, {"witness", c.witness}};
}

CheckOutcome replay_witness(const json& w) {
    Bounds b = Bounds::from_json(w.at("bounds"));
    auto out = run_single_check(w.at("check").get<std::string>(), b);
    if (!out) throw std::invalid_argument("witness names an unknown check '" +
                                          w.at("check").get<std::string>() + "'");
    return *out;
}

}  // namespace homops
