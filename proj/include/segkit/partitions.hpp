#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace segkit {

/// Weakly decreasing list of positive parts. The empty partition is {}.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t k = 0; k + 1 < parts.size(); ++k)
            if (parts[k] < parts[k + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        if (!parts.empty() && parts.back() <= 0)
            throw std::invalid_argument("partition parts must be positive");
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    // part(i) with 1-based i; zero beyond the length
    int part(int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; }
    bool empty() const { return parts.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

/// Finite list of non-negative parts, order significant.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 0) throw std::invalid_argument("composition parts must be non-negative");
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    bool operator==(const Composition&) const = default;
};

struct Multipartition {
    std::vector<Partition> components;

    Multipartition() : components(1) {}
    explicit Multipartition(std::vector<Partition> c) : components(std::move(c)) {
        if (components.empty())
            throw std::invalid_argument("multipartition needs at least one component");
    }

    int size() const {
        int s = 0;
        for (const auto& p : components) s += p.size();
        return s;
    }
    int count() const { return static_cast<int>(components.size()); }
    bool sincere() const {
        return std::all_of(components.begin(), components.end(),
                           [](const Partition& p) { return !p.empty(); });
    }

    bool operator==(const Multipartition&) const = default;
    auto operator<=>(const Multipartition&) const = default;
};

/// 1-based cell coordinates; comp is 1 for plain partitions and skew shapes.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;
    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        for (int i = 1; i <= inner.length(); ++i)
            if (inner.part(i) > outer.part(i))
                throw std::invalid_argument("inner shape must fit inside outer shape");
    }

    int size() const { return outer.size() - inner.size(); }
    bool contains(int row, int col) const {
        return col > inner.part(row) && col <= outer.part(row);
    }
    std::vector<Node> cells() const {
        std::vector<Node> out;
        for (int i = 1; i <= outer.length(); ++i)
            for (int j = inner.part(i) + 1; j <= outer.part(i); ++j)
                out.push_back({i, j, 1});
        return out;
    }

    bool operator==(const SkewShape&) const = default;
};

/// One-line permutation of {1,...,r}; img[k] = w(k+1).
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {
        std::vector<char> seen(img.size(), 0);
        for (int v : img) {
            if (v < 1 || v > static_cast<int>(img.size()) || seen[v - 1])
                throw std::invalid_argument("not a permutation of 1..r");
            seen[v - 1] = 1;
        }
    }

    static Permutation identity(int r) {
        std::vector<int> v(r);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img.at(x - 1); }

    Permutation inverse() const {
        std::vector<int> v(img.size());
        for (int x = 1; x <= degree(); ++x) v[img[x - 1] - 1] = x;
        return Permutation(std::move(v));
    }

    // (*this o other)(x) = this(other(x))
    Permutation compose(const Permutation& other) const {
        if (degree() != other.degree())
            throw std::invalid_argument("degree mismatch in composition");
        std::vector<int> v(img.size());
        for (int x = 1; x <= degree(); ++x) v[x - 1] = (*this)(other(x));
        return Permutation(std::move(v));
    }

    int length() const {
        int inv = 0;
        for (int i = 0; i < degree(); ++i)
            for (int j = i + 1; j < degree(); ++j)
                if (img[i] > img[j]) ++inv;
        return inv;
    }

    bool operator==(const Permutation&) const = default;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.part(1); ++i) {
        int count = 0;
        for (int x : p.parts)
            if (x >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

/// Conjugate of a composition: same column-count rule, result is a partition.
inline Partition conjugate(const Composition& c) {
    int maxp = 0;
    for (int x : c.parts) maxp = std::max(maxp, x);
    std::vector<int> out;
    for (int i = 1; i <= maxp; ++i) {
        int count = 0;
        for (int x : c.parts)
            if (x >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

inline Multipartition multipartition_conjugate(const Multipartition& mp) {
    std::vector<Partition> comps;
    for (auto it = mp.components.rbegin(); it != mp.components.rend(); ++it)
        comps.push_back(conjugate(*it));
    return Multipartition(std::move(comps));
}

/// Concatenation of the components as a composition.
inline Composition concat(const Multipartition& mp) {
    std::vector<int> parts;
    for (const auto& p : mp.components)
        parts.insert(parts.end(), p.parts.begin(), p.parts.end());
    return Composition(std::move(parts));
}

/// Cumulative component sizes [0, a1, ..., am].
inline std::vector<int> cutpoints(const Multipartition& mp) {
    std::vector<int> a{0};
    for (const auto& p : mp.components) a.push_back(a.back() + p.size());
    return a;
}

/// Block-reversing permutation w_a for a cut vector [0,a1,...,am=r].
inline Permutation w_of_cutpoints(const std::vector<int>& a) {
    if (a.size() < 2 || a.front() != 0)
        throw std::invalid_argument("cut vector must start at 0");
    for (std::size_t j = 1; j < a.size(); ++j)
        if (a[j] < a[j - 1]) throw std::invalid_argument("cut vector must be weakly increasing");
    int r = a.back();
    std::vector<int> img(r);
    int m = static_cast<int>(a.size()) - 1;
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= a[j] - a[j - 1]; ++k)
            img[a[j - 1] + k - 1] = r - a[j] + k;
    return Permutation(std::move(img));
}

/// Componentwise sum of the parts.
inline Partition lambda_plus(const Multipartition& mp) {
    int len = 0;
    for (const auto& p : mp.components) len = std::max(len, p.length());
    std::vector<int> out(len, 0);
    for (const auto& p : mp.components)
        for (int i = 1; i <= p.length(); ++i) out[i - 1] += p.part(i);
    return Partition(std::move(out));
}

/// Column lengths of a skew shape, sorted: rho_i = #{j : outer'_j - inner'_j >= i}.
inline Partition rho_of_skew(const SkewShape& s) {
    Partition oc = conjugate(s.outer);
    Partition ic = conjugate(s.inner);
    int maxlen = 0;
    for (int j = 1; j <= oc.length(); ++j) maxlen = std::max(maxlen, oc.part(j) - ic.part(j));
    std::vector<int> out;
    for (int i = 1; i <= maxlen; ++i) {
        int count = 0;
        for (int j = 1; j <= oc.length(); ++j)
            if (oc.part(j) - ic.part(j) >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

/// Number of standard Young tableaux via the hook length product.
inline long long hook_length_count(const Partition& p) {
    int r = p.size();
    if (r == 0) return 1;
    Partition c = conjugate(p);
    long long num = 1;
    for (int k = 2; k <= r; ++k) num *= k;
    long long den = 1;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            den *= (p.part(i) - j) + (c.part(j) - i) + 1;
    return num / den;
}

namespace detail {

// Littlewood-Richardson filling: entries row-weakly-increasing and
// column-strict, content gam, and the word read right-to-left along
// successive rows stays a ballot sequence.
inline void lr_backtrack(const SkewShape& shape, const std::vector<Node>& cells,
                         std::size_t idx, std::vector<int>& entry,
                         std::vector<int>& remaining, std::vector<int>& ballot,
                         long long& count) {
    if (idx == cells.size()) {
        ++count;
        return;
    }
    // cells are listed row by row; within a row we fill right-to-left so the
    // ballot prefix condition can be enforced on the fly
    const Node& cell = cells[idx];
    for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
        if (remaining[v - 1] == 0) continue;
        if (v > 1 && ballot[v - 2] <= ballot[v - 1]) continue;
        // row: the cell to the right (already filled) must be >= v
        bool ok = true;
        if (idx > 0 && cells[idx - 1].row == cell.row && cells[idx - 1].col == cell.col + 1)
            ok = entry[idx - 1] >= v;
        if (ok && shape.contains(cell.row - 1, cell.col)) {
            // column-strict against the cell above, which was filled earlier
            for (std::size_t t = 0; t < idx; ++t)
                if (cells[t].row == cell.row - 1 && cells[t].col == cell.col) {
                    ok = entry[t] < v;
                    break;
                }
        }
        if (!ok) continue;
        entry[idx] = v;
        --remaining[v - 1];
        ++ballot[v - 1];
        lr_backtrack(shape, cells, idx + 1, entry, remaining, ballot, count);
        --ballot[v - 1];
        ++remaining[v - 1];
    }
}

} // namespace detail

/// Littlewood-Richardson coefficient c^{lam}_{nu,gam}.
inline long long lr_coefficient(const Partition& lam, const Partition& nu, const Partition& gam) {
    if (lam.size() != nu.size() + gam.size()) return 0;
    for (int i = 1; i <= nu.length(); ++i)
        if (nu.part(i) > lam.part(i)) return 0;
    SkewShape shape(lam, nu);
    if (shape.size() == 0) return gam.empty() ? 1 : 0;
    // reading order: row by row, each row right-to-left
    std::vector<Node> cells;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = lam.part(i); j > nu.part(i); --j) cells.push_back({i, j, 1});
    std::vector<int> entry(cells.size(), 0);
    std::vector<int> remaining(gam.parts);
    std::vector<int> ballot(gam.length(), 0);
    long long count = 0;
    detail::lr_backtrack(shape, cells, 0, entry, remaining, ballot, count);
    return count;
}

/// Multiplicity of target in the iterated product of the given shapes.
inline long long iterated_lr_multiplicity(const Partition& target,
                                          const std::vector<Partition>& factors);

// --- deterministic enumerators -------------------------------------------

/// All partitions of r, largest-first lexicographic order ((r) first).
inline std::vector<Partition> enumerate_partitions(int r) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, r, r < 1 ? 1 : r);
    return out;
}

/// All compositions of r into exactly m non-negative parts, first part descending.
inline std::vector<Composition> enumerate_compositions(int r, int m) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int slots) -> void {
        if (slots == 0) {
            if (rem == 0) out.emplace_back(cur);
            return;
        }
        for (int p = rem; p >= 0; --p) {
            cur.push_back(p);
            self(self, rem - p, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, r, m);
    return out;
}

/// All multipartitions of r with m components (empty components permitted).
inline std::vector<Multipartition> enumerate_multipartitions(int r, int m) {
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, const Composition& sizes, std::size_t k) -> void {
        if (k == sizes.parts.size()) {
            out.push_back(Multipartition(cur));
            return;
        }
        for (const auto& p : enumerate_partitions(sizes.parts[k])) {
            cur.push_back(p);
            self(self, sizes, k + 1);
            cur.pop_back();
        }
    };
    for (const auto& sizes : enumerate_compositions(r, m)) rec(rec, sizes, 0);
    return out;
}

/// All proper subshapes nu of lam (nu != lam), by nested row bounds.
inline std::vector<Partition> enumerate_subshapes(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int bound) -> void {
        if (row > lam.length()) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int v = 0; v <= std::min(bound, lam.part(row)); ++v) {
            if (v > 0) cur.push_back(v);
            self(self, row + 1, v);
            if (v > 0) cur.pop_back();
        }
    };
    rec(rec, 1, lam.part(1));
    std::erase(out, lam);
    std::sort(out.begin(), out.end());
    return out;
}

/// All nonempty skew shapes with |outer| <= outer_max and size in [r_min, r_max].
inline std::vector<SkewShape> enumerate_skew_shapes(int outer_max, int r_min = 1,
                                                    int r_max = 1 << 30) {
    std::vector<SkewShape> out;
    for (int n = 1; n <= outer_max; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (const auto& nu : enumerate_subshapes(lam)) {
                int r = lam.size() - nu.size();
                if (r >= r_min && r <= r_max) out.emplace_back(lam, nu);
            }
    return out;
}

inline long long iterated_lr_multiplicity(const Partition& target,
                                          const std::vector<Partition>& factors) {
    // sum over chains of intermediate shapes of products of LR coefficients
    std::vector<std::pair<Partition, long long>> layer{{Partition{}, 1}};
    for (const auto& f : factors) {
        std::vector<std::pair<Partition, long long>> next;
        for (const auto& [shape, mult] : layer) {
            int n = shape.size() + f.size();
            for (const auto& lam : enumerate_partitions(n)) {
                long long c = lr_coefficient(lam, shape, f);
                if (c == 0) continue;
                auto it = std::find_if(next.begin(), next.end(),
                                       [&](const auto& e) { return e.first == lam; });
                if (it == next.end())
                    next.emplace_back(lam, mult * c);
                else
                    it->second += mult * c;
            }
        }
        layer = std::move(next);
    }
    for (const auto& [shape, mult] : layer)
        if (shape == target) return mult;
    return 0;
}

} // namespace segkit
