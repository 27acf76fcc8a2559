#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segkit/partitions.hpp"
#include "segkit/segments.hpp"

namespace segkit {

/// Weakly decreasing integer vector f, encoding parameters u_k = q^{2 f_k}.
struct Charge {
    std::vector<int> f;

    Charge() = default;
    explicit Charge(std::vector<int> entries) : f(std::move(entries)) {
        if (f.empty()) throw std::invalid_argument("charge must be nonempty");
        for (std::size_t k = 0; k + 1 < f.size(); ++k)
            if (f[k] < f[k + 1])
                throw std::invalid_argument("charge must be weakly decreasing");
    }

    int count() const { return static_cast<int>(f.size()); }
    int operator[](int k) const { return f.at(k - 1); } // 1-based

    bool operator==(const Charge&) const = default;
};

/// f* = (-f_m, ..., -f_1).
inline Charge f_star(const Charge& f) {
    std::vector<int> out(f.f.rbegin(), f.f.rend());
    for (int& x : out) x = -x;
    return Charge(std::move(out));
}

inline void require_matching(const Multipartition& mp, const Charge& f) {
    if (mp.count() != f.count())
        throw std::invalid_argument("multipartition and charge must have equal length");
}

/// lambda^{(k)}_{j + f_k - f_{k+1}} <= lambda^{(k+1)}_j for all j >= 1.
inline bool is_kleshchev(const Multipartition& mp, const Charge& f) {
    require_matching(mp, f);
    for (int k = 1; k < mp.count(); ++k) {
        int d = f[k] - f[k + 1];
        const Partition& a = mp.components[k - 1];
        const Partition& b = mp.components[k];
        for (int j = 1; j + d <= a.length(); ++j)
            if (a.part(j + d) > b.part(j)) return false;
    }
    return true;
}

/// First failing clause of (SK1)-(SK3), or nullopt when standard Kleshchev.
inline std::optional<std::string> standard_kleshchev_violation(const Multipartition& mp,
                                                               const Charge& f) {
    require_matching(mp, f);
    for (int a = 1; a <= mp.count(); ++a)
        if (mp.components[a - 1].empty())
            return "SK1: component " + std::to_string(a) + " is empty";
    for (int a = 1; a < mp.count(); ++a) {
        int d = f[a] - f[a + 1];
        const Partition& g = mp.components[a - 1];
        const Partition& h = mp.components[a];
        if (g.length() > d + 1)
            return "SK2: component " + std::to_string(a) + " has more than " +
                   std::to_string(d + 1) + " rows";
        if (g.part(d + 1) > h.part(1))
            return "SK2: part " + std::to_string(d + 1) + " of component " + std::to_string(a) +
                   " exceeds the first part of component " + std::to_string(a + 1);
        if (g.length() == d && g.part(d) > h.part(1) - 1)
            return "SK3: boundary part of component " + std::to_string(a) +
                   " must be strictly below the first part of component " + std::to_string(a + 1);
    }
    return std::nullopt;
}

inline bool is_standard_kleshchev(const Multipartition& mp, const Charge& f) {
    return !standard_kleshchev_violation(mp, f).has_value();
}

inline std::vector<Multipartition> enumerate_kleshchev(const Charge& f, int r) {
    std::vector<Multipartition> out;
    for (const auto& mp : enumerate_multipartitions(r, f.count()))
        if (is_kleshchev(mp, f)) out.push_back(mp);
    return out;
}

inline std::vector<Multipartition> enumerate_standard_kleshchev(const Charge& f, int r) {
    std::vector<Multipartition> out;
    for (const auto& mp : enumerate_multipartitions(r, f.count()))
        if (is_standard_kleshchev(mp, f)) out.push_back(mp);
    return out;
}

/// Column residual segments, read bottom-to-top per column, last component
/// first: column j of component i gives (f_i + j - conj_j, f_i + j - 1).
inline SegmentSeq column_residual_segments(const Multipartition& mp, const Charge& f) {
    require_matching(mp, f);
    SegmentSeq out;
    for (int i = mp.count(); i >= 1; --i) {
        const Partition& p = mp.components[i - 1];
        Partition pc = conjugate(p);
        for (int j = 1; j <= p.part(1); ++j)
            out.emplace_back(f[i] + j - pc.part(j), f[i] + j - 1);
    }
    return out;
}

/// Row residual segments, read left-to-right per row, first component first:
/// row i of component k gives (f_k + 1 - i, f_k + lambda^{(k)}_i - i).
inline SegmentSeq row_residual_segments(const Multipartition& mp, const Charge& f) {
    require_matching(mp, f);
    SegmentSeq out;
    for (int k = 1; k <= mp.count(); ++k) {
        const Partition& p = mp.components[k - 1];
        for (int i = 1; i <= p.length(); ++i)
            out.emplace_back(f[k] + 1 - i, f[k] + p.part(i) - i);
    }
    return out;
}

} // namespace segkit
