#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "segkit/kleshchev.hpp"
#include "segkit/partitions.hpp"
#include "segkit/segments.hpp"

namespace segkit {

/// Per-index multisets of q-exponents: roots[i-1] holds the e with
/// Q_i(x) = prod (1 - q^e x). Integral type means every e is even.
struct DrinfeldRoots {
    int n = 1;
    std::vector<std::vector<int>> roots; // each sorted ascending

    DrinfeldRoots() : roots(1) {}
    DrinfeldRoots(int n_, std::vector<std::vector<int>> r) : n(n_), roots(std::move(r)) {
        if (n < 1 || static_cast<int>(roots.size()) != n)
            throw std::invalid_argument("need one root multiset per index 1..n");
        for (auto& m : roots) std::sort(m.begin(), m.end());
    }

    int degree() const {
        int d = 0;
        for (const auto& m : roots) d += static_cast<int>(m.size());
        return d;
    }
    bool integral() const {
        for (const auto& m : roots)
            for (int e : m)
                if (e % 2 != 0) return false;
        return true;
    }

    bool operator==(const DrinfeldRoots&) const = default;
};

/// eta: greedy grouping of the standard word into partition-shaped blocks,
/// extending while j_a = j_{a-1} + 1 and i_{a-1} < i_a. Returns the standard
/// Kleshchev multipartition together with the charge f (f_i is the top entry
/// opening group m - i + 1).
inline std::pair<Multipartition, Charge> eta(const MultisegmentZ& ms) {
    if (ms.empty()) throw std::invalid_argument("eta needs a nonempty multisegment");
    StandardWord w = multisegment_to_word(ms);
    std::vector<Partition> comps;
    std::vector<int> group_start_tops;
    int t = w.columns();
    int c = 0;
    while (c < t) {
        int start = c;
        ++c;
        while (c < t && w.tops[c] == w.tops[c - 1] + 1 && w.bottoms[c - 1] < w.bottoms[c]) ++c;
        std::vector<int> parts;
        for (int b = start; b < c; ++b) parts.push_back(w.tops[b] - w.bottoms[b] + 1);
        comps.emplace_back(std::move(parts));
        group_start_tops.push_back(w.tops[start]);
    }
    std::vector<int> fvec(group_start_tops.rbegin(), group_start_tops.rend());
    return {Multipartition(std::move(comps)), Charge(std::move(fvec))};
}

/// theta: inverse of eta. gamma must lie in the standard Kleshchev set for
/// f*; the word columns are j_c = f_{m-a+1} + b - 1, i_c = f_{m-a+1} -
/// gamma^{(a)}_b + b.
inline StandardWord theta(const Multipartition& gamma, const Charge& f) {
    if (auto why = standard_kleshchev_violation(gamma, f_star(f)))
        throw std::invalid_argument("theta requires a standard Kleshchev multipartition: " + *why);
    int m = gamma.count();
    std::vector<int> tops, bottoms;
    for (int a = 1; a <= m; ++a) {
        const Partition& g = gamma.components[a - 1];
        int base = f[m - a + 1];
        for (int b = 1; b <= g.length(); ++b) {
            tops.push_back(base + b - 1);
            bottoms.push_back(base - g.part(b) + b);
        }
    }
    return StandardWord(std::move(tops), std::move(bottoms));
}

/// The Drinfeld-root map: roots_k = {2(j_b + 1 - k) : segments with |s_b| >= k}.
inline DrinfeldRoots partial_map(const MultisegmentZ& ms, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    for (const auto& s : ms.segments())
        if (s.length() > n)
            throw std::invalid_argument("segment longer than n");
    std::vector<std::vector<int>> roots(n);
    for (const auto& s : ms.segments())
        for (int k = 1; k <= s.length(); ++k) roots[k - 1].push_back(2 * (s.hi + 1 - k));
    return DrinfeldRoots(n, std::move(roots));
}

/// Dominance: each shifted ratio Q_i(x q^{i-1}) / Q_{i+1}(x q^{i+1}) is a
/// polynomial, i.e. {e + i + 1 : e in roots_{i+1}} multiset-contains into
/// {e + i - 1 : e in roots_i}.
inline bool is_dominant(const DrinfeldRoots& q) {
    for (int i = 1; i < q.n; ++i) {
        std::vector<int> upper;
        for (int e : q.roots[i - 1]) upper.push_back(e + i - 1);
        std::sort(upper.begin(), upper.end());
        std::vector<int> lower;
        for (int e : q.roots[i]) lower.push_back(e + i + 1);
        std::sort(lower.begin(), lower.end());
        if (!std::includes(upper.begin(), upper.end(), lower.begin(), lower.end()))
            return false;
    }
    return true;
}

/// Inverse of the Drinfeld-root map on dominant roots of integral type. The
/// ratio P_k picks out the segments of length exactly k; a surviving shifted
/// exponent e gives the segment with hi = (e + k - 1) / 2.
inline MultisegmentZ partial_inverse(const DrinfeldRoots& q) {
    if (!q.integral()) throw std::invalid_argument("roots must be of integral type");
    if (!is_dominant(q)) throw std::invalid_argument("roots must be dominant");
    SegmentSeq segs;
    for (int k = 1; k <= q.n; ++k) {
        std::vector<int> shifted;
        for (int e : q.roots[k - 1]) shifted.push_back(e + k - 1);
        std::sort(shifted.begin(), shifted.end());
        std::vector<int> cancel;
        if (k < q.n)
            for (int e : q.roots[k]) cancel.push_back(e + k + 1);
        std::sort(cancel.begin(), cancel.end());
        std::vector<int> surviving;
        std::set_difference(shifted.begin(), shifted.end(), cancel.begin(), cancel.end(),
                            std::back_inserter(surviving));
        for (int e : surviving) {
            int hi = (e + k - 1) / 2;
            segs.emplace_back(hi - k + 1, hi);
        }
    }
    return MultisegmentZ(std::move(segs));
}

/// roots_i = {2(f_k + j - i) : nodes (i, j) in row i of component k}.
inline DrinfeldRoots drinfeld_from_multipartition(const Multipartition& mp, const Charge& f,
                                                  int n) {
    require_matching(mp, f);
    for (const auto& p : mp.components)
        if (p.length() > n)
            throw std::invalid_argument("component with more rows than n");
    std::vector<std::vector<int>> roots(n);
    for (int k = 1; k <= mp.count(); ++k) {
        const Partition& p = mp.components[k - 1];
        for (int i = 1; i <= p.length(); ++i)
            for (int j = 1; j <= p.part(i); ++j) roots[i - 1].push_back(2 * (f[k] + j - i));
    }
    return DrinfeldRoots(n, std::move(roots));
}

/// Twist by a = q^{2c}: Q_k(x) becomes Q_k(a x), shifting every exponent by 2c.
inline DrinfeldRoots omega_twist(const DrinfeldRoots& q, int c) {
    std::vector<std::vector<int>> roots = q.roots;
    for (auto& m : roots)
        for (int& e : m) e += 2 * c;
    return DrinfeldRoots(q.n, std::move(roots));
}

/// Column residues of a skew shape: the k-th nonempty column j gives the
/// segment (j - outer'_j, j - inner'_j - 1); the sequence is standard.
inline SegmentSeq skew_multisegment(const SkewShape& s) {
    if (s.size() == 0) throw std::invalid_argument("empty skew shape");
    Partition oc = conjugate(s.outer);
    Partition ic = conjugate(s.inner);
    SegmentSeq out;
    for (int j = 1; j <= s.outer.part(1); ++j)
        if (oc.part(j) > ic.part(j)) out.emplace_back(j - oc.part(j), j - ic.part(j) - 1);
    return out;
}

/// roots_i = {2(j - i - inner'_j) : columns j of depth >= i}.
inline DrinfeldRoots skew_drinfeld(const SkewShape& s, int n) {
    Partition oc = conjugate(s.outer);
    Partition ic = conjugate(s.inner);
    for (int j = 1; j <= s.outer.part(1); ++j)
        if (oc.part(j) - ic.part(j) > n)
            throw std::invalid_argument("column deeper than n");
    std::vector<std::vector<int>> roots(n);
    for (int j = 1; j <= s.outer.part(1); ++j)
        for (int i = 1; i <= oc.part(j) - ic.part(j); ++i)
            roots[i - 1].push_back(2 * (j - i - ic.part(j)));
    return DrinfeldRoots(n, std::move(roots));
}

} // namespace segkit
