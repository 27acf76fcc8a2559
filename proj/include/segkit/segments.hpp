#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "segkit/partitions.hpp"

namespace segkit {

/// Integral segment (q^{2 lo}, ..., q^{2 hi}) on the line through 1.
struct SegmentZ {
    int lo = 0;
    int hi = 0;

    SegmentZ() = default;
    SegmentZ(int l, int h) : lo(l), hi(h) {
        if (lo > hi) throw std::invalid_argument("segment needs lo <= hi");
    }

    int length() const { return hi - lo + 1; }
    bool operator==(const SegmentZ&) const = default;
    auto operator<=>(const SegmentZ&) const = default;
};

using SegmentSeq = std::vector<SegmentZ>;

inline int seg_length(const SegmentZ& s) { return s.length(); }

/// Exponents of the reversed segment (q^{2 hi}, ..., q^{2 lo}).
inline std::vector<int> seg_reverse(const SegmentZ& s) {
    std::vector<int> out;
    for (int e = s.hi; e >= s.lo; --e) out.push_back(e);
    return out;
}

inline SegmentZ seg_inverse(const SegmentZ& s) { return SegmentZ(-s.hi, -s.lo); }

/// The order used for standard sequences: j1 < j2, or j1 = j2 and i1 >= i2.
inline bool precedes(const SegmentZ& a, const SegmentZ& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.lo >= b.lo;
}

/// The companion order: j1 < j2, or j1 = j2 and i1 <= i2.
inline bool precedes_prime(const SegmentZ& a, const SegmentZ& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.lo <= b.lo;
}

inline bool is_standard_seq(const SegmentSeq& seq) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (!precedes(seq[k], seq[k + 1])) return false;
    return true;
}

/// i weakly decreasing, and j weakly increasing on equal i.
inline bool is_anti_standard(const SegmentSeq& seq) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (seq[k].lo < seq[k + 1].lo) return false;
        if (seq[k].lo == seq[k + 1].lo && seq[k].hi > seq[k + 1].hi) return false;
    }
    return true;
}

inline SegmentSeq seq_inverse(const SegmentSeq& seq) {
    SegmentSeq out;
    out.reserve(seq.size());
    for (const auto& s : seq) out.push_back(seg_inverse(s));
    return out;
}

/// Multiset of integral segments, stored as its unique standard-sorted sequence.
struct MultisegmentZ {
    SegmentSeq segs; // sorted: (hi asc, lo desc)

    MultisegmentZ() = default;
    explicit MultisegmentZ(SegmentSeq s) : segs(std::move(s)) {
        std::sort(segs.begin(), segs.end(), [](const SegmentZ& a, const SegmentZ& b) {
            if (a.hi != b.hi) return a.hi < b.hi;
            return a.lo > b.lo;
        });
    }

    const SegmentSeq& segments() const { return segs; }
    int total_length() const {
        int r = 0;
        for (const auto& s : segs) r += s.length();
        return r;
    }
    int count() const { return static_cast<int>(segs.size()); }
    bool empty() const { return segs.empty(); }

    bool operator==(const MultisegmentZ&) const = default;
    auto operator<=>(const MultisegmentZ&) const = default;
};

inline SegmentSeq sort_standard(const MultisegmentZ& ms) { return ms.segments(); }

inline SegmentSeq sort_anti_standard(const MultisegmentZ& ms) {
    SegmentSeq out = ms.segments();
    std::sort(out.begin(), out.end(), [](const SegmentZ& a, const SegmentZ& b) {
        if (a.lo != b.lo) return a.lo > b.lo;
        return a.hi < b.hi;
    });
    return out;
}

/// Two-row word: tops j_1..j_t over bottoms i_1..i_t.
struct StandardWord {
    std::vector<int> tops;
    std::vector<int> bottoms;

    StandardWord() = default;
    StandardWord(std::vector<int> j, std::vector<int> i)
        : tops(std::move(j)), bottoms(std::move(i)) {
        if (tops.size() != bottoms.size())
            throw std::invalid_argument("word rows must have equal length");
        if (tops.empty()) throw std::invalid_argument("word must be nonempty");
        for (std::size_t k = 0; k < tops.size(); ++k)
            if (bottoms[k] > tops[k])
                throw std::invalid_argument("word needs i_k <= j_k in every column");
        for (std::size_t k = 0; k + 1 < tops.size(); ++k) {
            if (tops[k] > tops[k + 1])
                throw std::invalid_argument("word tops must be weakly increasing");
            if (tops[k] == tops[k + 1] && bottoms[k] < bottoms[k + 1])
                throw std::invalid_argument("word bottoms must weakly decrease on equal tops");
        }
    }

    int columns() const { return static_cast<int>(tops.size()); }
    int total_length() const {
        int r = 0;
        for (int k = 0; k < columns(); ++k) r += tops[k] - bottoms[k] + 1;
        return r;
    }

    bool operator==(const StandardWord&) const = default;
};

/// flat_2: column (j over i) becomes the segment (i, j).
inline SegmentSeq word_to_seq(const StandardWord& w) {
    SegmentSeq out;
    for (int k = 0; k < w.columns(); ++k) out.emplace_back(w.bottoms[k], w.tops[k]);
    return out;
}

inline StandardWord seq_to_word(const SegmentSeq& seq) {
    if (!is_standard_seq(seq)) throw std::invalid_argument("sequence is not standard");
    std::vector<int> tops, bottoms;
    for (const auto& s : seq) {
        tops.push_back(s.hi);
        bottoms.push_back(s.lo);
    }
    return StandardWord(std::move(tops), std::move(bottoms));
}

/// flat = flat_1 o flat_2.
inline MultisegmentZ word_to_multisegment(const StandardWord& w) {
    return MultisegmentZ(word_to_seq(w));
}

inline StandardWord multisegment_to_word(const MultisegmentZ& ms) {
    return seq_to_word(sort_standard(ms));
}

/// Twist by a = q^{2c}: every segment shifts by c.
inline MultisegmentZ shift(const MultisegmentZ& ms, int c) {
    SegmentSeq out;
    for (const auto& s : ms.segments()) out.emplace_back(s.lo + c, s.hi + c);
    return MultisegmentZ(std::move(out));
}

inline Composition mu_of(const SegmentSeq& seq) {
    std::vector<int> parts;
    for (const auto& s : seq) parts.push_back(s.length());
    return Composition(std::move(parts));
}

inline MultisegmentZ multiseg_inverse(const MultisegmentZ& ms) {
    return MultisegmentZ(seq_inverse(ms.segments()));
}

/// All multisegments of total length r with endpoints inside [lo, hi],
/// enumerated as weakly increasing chains in the standard order.
inline std::vector<MultisegmentZ> enumerate_multisegments(int r, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("bad window");
    std::vector<SegmentZ> universe;
    for (int h = lo; h <= hi; ++h)
        for (int l = h; l >= lo; --l)
            if (h - l + 1 <= r) universe.emplace_back(l, h);
    // universe is listed in the standard order (hi asc, lo desc)
    std::vector<MultisegmentZ> out;
    SegmentSeq cur;
    auto rec = [&](auto&& self, int rem, std::size_t start) -> void {
        if (rem == 0) {
            out.push_back(MultisegmentZ(cur));
            return;
        }
        for (std::size_t k = start; k < universe.size(); ++k) {
            if (universe[k].length() > rem) continue;
            cur.push_back(universe[k]);
            self(self, rem - universe[k].length(), k);
            cur.pop_back();
        }
    };
    rec(rec, r, 0);
    return out;
}

} // namespace segkit
