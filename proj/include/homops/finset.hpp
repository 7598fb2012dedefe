#pragma once

#include <map>
#include <vector>

#include "homops/scalar.hpp"

namespace homops {

// A map of finite sets {1..m} -> {1..n}, a basis element of the PROP's
// hom-space Com(m, n). m = 0 is allowed; n = 0 only when m = 0.
struct FinSetMap {
    int source = 0;
    int target = 0;
    std::vector<int> image;  // image[i] = value at i+1, entries in {1..target}

    FinSetMap() = default;
    FinSetMap(int m, int n, std::vector<int> img);

    static FinSetMap identity(int n);

    int operator()(int i) const { return image[static_cast<size_t>(i) - 1]; }

    // Diagrammatic composition: this followed by g.
    FinSetMap then(const FinSetMap& g) const;
    // Disjoint union: inputs of o are shifted past this map's source/target.
    FinSetMap tensor(const FinSetMap& o) const;

    // True when every point of {2..target} is hit (reduced-on-target basis).
    bool hits_all_nonbase() const;

    auto operator<=>(const FinSetMap&) const = default;
};

// The map {1..k} -> {1..k-1} multiplying inputs i and j into the slot of i,
// renumbering the target by deleting j. Requires 1 <= i < j <= k, k >= 2.
FinSetMap mult_map(int k, int i, int j);

// Order-preserving injection {1..k-1+n} -> {1..k+n} omitting position i+1
// (a unit insertion into slot i+1 of the word part). Requires 1 <= i <= k-1.
FinSetMap unit_insertion(int k, int n, int i);

// A finite linear combination of finite-set maps with common source/target.
class Morphism {
  public:
    Morphism() = default;
    Morphism(int source, int target) : source_(source), target_(target) {}
    Morphism(const FinSetMap& f, Scalar c = Scalar::integer(1));

    static Morphism zero(int source, int target) { return Morphism(source, target); }
    static Morphism identity(int n) { return Morphism(FinSetMap::identity(n)); }

    int source() const { return source_; }
    int target() const { return target_; }
    const std::map<FinSetMap, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const FinSetMap& f, const Scalar& c);
    Scalar coeff(const FinSetMap& f) const;

    Morphism operator+(const Morphism& o) const;
    Morphism operator-(const Morphism& o) const;
    Morphism operator*(const Scalar& c) const;
    Morphism& operator+=(const Morphism& o);

    // Diagrammatic composition (this first, then g); bilinear.
    Morphism then(const Morphism& g) const;
    Morphism tensor(const Morphism& o) const;

    bool operator==(const Morphism& o) const;
    bool operator!=(const Morphism& o) const { return !(*this == o); }

  private:
    int source_ = 0;
    int target_ = 0;
    std::map<FinSetMap, Scalar> terms_;
};

// compose(f, g) = g after f, per the right-composition convention.
inline Morphism compose(const Morphism& f, const Morphism& g) { return f.then(g); }

// Boundary morphism d_i on words of length k+1 with n spectator slots:
// the multiplication of inputs i+1, i+2 (pair {k+1, 1} when i = k).
// Requires 0 <= i <= k.
Morphism face(int k, int n, int i);

// All maps {1..s} -> {1..w} hitting every point of {2..w}, in canonical order.
std::vector<FinSetMap> enumerate_reduced_maps(int s, int w);

}  // namespace homops
