#pragma once

#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "segkit/correspondences.hpp"
#include "segkit/hecke.hpp"
#include "segkit/kleshchev.hpp"
#include "segkit/partitions.hpp"
#include "segkit/report.hpp"
#include "segkit/segments.hpp"
#include "segkit/skewrep.hpp"

namespace segkit {

/// Runs fn(0..n-1) on a fixed-size pool; callers write results into
/// preallocated slots, so assembly order is deterministic.
template <class Fn>
inline void parallel_for(int n, Fn&& fn, int jobs = 0) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(jobs, n);
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < n;) fn(i);
        });
    for (auto& th : pool) th.join();
}

namespace detail {

inline std::string seq_key(const SegmentSeq& seq) {
    std::ostringstream os;
    for (const auto& s : seq) os << s.lo << ',' << s.hi << ';';
    return os.str();
}

inline std::string roots_key(const DrinfeldRoots& q) {
    std::ostringstream os;
    for (const auto& m : q.roots) {
        for (int e : m) os << e << ',';
        os << ';';
    }
    return os.str();
}

/// Representative charges with m <= 3 and entry span <= 6, one per
/// translation class (first entry pinned at 0).
inline std::vector<Charge> representative_charges(int max_gap = 6) {
    std::vector<Charge> out;
    out.push_back(Charge({0}));
    for (int d = 0; d <= max_gap; ++d) out.push_back(Charge({0, -d}));
    for (int d1 = 0; d1 <= max_gap; ++d1)
        for (int d2 = 0; d2 <= max_gap; ++d2) out.push_back(Charge({0, -d1, -d1 - d2}));
    return out;
}

inline std::vector<Composition> positive_compositions(int r) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = rem; p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, r);
    return out;
}

} // namespace detail

/// Finite Hecke regular representation: quadratic, braid and distant
/// commutation relations, verified column by column on the T_w basis.
inline Report suite_relations(const Scalar& q0, int r_max) {
    Report rep;
    rep.object = "regular representation relations";
    rep.q0 = rational_str(q0);
    Scalar q2 = q0 * q0;
    for (int r = 2; r <= r_max; ++r) {
        auto G = SymmetricGroup::get(r);
        bool quad = true, braid = true, comm = true;
        for (int w = 0; w < G->order(); ++w) {
            HeckeElement e{r, {}};
            e.coeff[w] = 1;
            for (int i = 1; i < r; ++i) {
                HeckeElement ti = gen_apply(*G, i, e, q0);
                HeckeElement lhs = gen_apply(*G, i, ti, q0) - ti * (q2 - 1) - e * q2;
                if (!lhs.is_zero()) quad = false;
            }
            for (int i = 1; i + 1 < r; ++i) {
                HeckeElement aba = gen_apply(
                    *G, i, gen_apply(*G, i + 1, gen_apply(*G, i, e, q0), q0), q0);
                HeckeElement bab = gen_apply(
                    *G, i + 1, gen_apply(*G, i, gen_apply(*G, i + 1, e, q0), q0), q0);
                if (!(aba == bab)) braid = false;
            }
            for (int i = 1; i < r; ++i)
                for (int j = i + 2; j < r; ++j) {
                    HeckeElement ij = gen_apply(*G, i, gen_apply(*G, j, e, q0), q0);
                    HeckeElement ji = gen_apply(*G, j, gen_apply(*G, i, e, q0), q0);
                    if (!(ij == ji)) comm = false;
                }
        }
        rep.add("quadratic relation, r = " + std::to_string(r), quad);
        if (r >= 3) rep.add("braid relation, r = " + std::to_string(r), braid);
        if (r >= 4) rep.add("distant commutation, r = " + std::to_string(r), comm);
    }
    return rep;
}

/// Cell identity and ideal dimensions: T_sigma C = (-1)^{l(sigma)} C and
/// dim I(mu) = r!/prod mu_i! over all compositions.
inline Report suite_cell_ideals(const Scalar& q0, int r_max) {
    Report rep;
    rep.object = "cell element and ideal dimensions";
    rep.q0 = rational_str(q0);
    for (int r = 1; r <= r_max; ++r) {
        auto G = SymmetricGroup::get(r);
        long long rfact = 1;
        for (int k = 2; k <= r; ++k) rfact *= k;
        bool cell_ok = true, dim_ok = true;
        for (const auto& mu : detail::positive_compositions(r)) {
            HeckeElement c = c_w0(mu, q0);
            for (int sidx : young_subgroup(*G, mu)) {
                HeckeElement lhs = perm_apply(*G, sidx, c, q0);
                Scalar sign = G->length(sidx) % 2 == 0 ? 1 : -1;
                if (!(lhs == c * sign)) cell_ok = false;
            }
            long long expected = rfact;
            for (int part : mu.parts)
                for (int k = 2; k <= part; ++k) expected /= k;
            if (ideal_dimension(mu, q0) != expected) dim_ok = false;
        }
        rep.add("cell identity, r = " + std::to_string(r), cell_ok);
        rep.add("ideal dimensions, r = " + std::to_string(r), dim_ok);
    }
    return rep;
}

/// Specht ranks and the sharp-twist character pairing.
inline Report suite_specht(const Scalar& q0, int rank_r_max, int sharp_r_max) {
    Report rep;
    rep.object = "Specht modules";
    rep.q0 = rational_str(q0);
    for (int r = 1; r <= rank_r_max; ++r) {
        bool ok = true;
        for (const auto& lam : enumerate_partitions(r))
            if (left_ideal_rank(z_lambda(lam, q0), q0) != hook_length_count(lam)) ok = false;
        rep.add("Specht rank equals hook count, r = " + std::to_string(r), ok);
    }
    for (int r = 1; r <= sharp_r_max; ++r) {
        bool ok = true;
        for (const auto& lam : enumerate_partitions(r))
            if (!sharp_twist_check(lam, q0).all_pass()) ok = false;
        rep.add("sharp twist characters, r = " + std::to_string(r), ok);
    }
    return rep;
}

/// Jucys-Murphy elements: eigenvalues on z_lambda, the bridge identity
/// J_k = (q^2-1) J'_k + 1, and pairwise commutation.
inline Report suite_jm(const Scalar& q0, int eigen_r_max, int bridge_r_max) {
    Report rep;
    rep.object = "Jucys-Murphy elements";
    rep.q0 = rational_str(q0);
    for (int r = 1; r <= eigen_r_max; ++r) {
        bool ok = true;
        for (const auto& lam : enumerate_partitions(r))
            if (!jm_eigenvalue_check(lam, q0).all_pass()) ok = false;
        rep.add("eigenvalues on z_lambda, r = " + std::to_string(r), ok);
    }
    for (int r = 1; r <= bridge_r_max; ++r) {
        bool bridge = true;
        for (int k = 1; k <= r; ++k) {
            HeckeElement rhs = jm_prime(k, r, q0) * (q0 * q0 - 1);
            rhs += hecke_one(r);
            if (!(jm_element(k, r, q0) == rhs)) bridge = false;
        }
        rep.add("J_k = (q^2-1) J'_k + 1, r = " + std::to_string(r), bridge);
    }
    for (int r = 1; r <= eigen_r_max; ++r) {
        auto G = SymmetricGroup::get(r);
        std::vector<HeckeElement> jm;
        for (int k = 1; k <= r; ++k) jm.push_back(jm_element(k, r, q0));
        bool comm = true;
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                if (!(mul(*G, jm[a], jm[b], q0) == mul(*G, jm[b], jm[a], q0))) comm = false;
        rep.add("pairwise commutation, r = " + std::to_string(r), comm);
    }
    return rep;
}

/// The standard word <-> standard Kleshchev bijection, both directions.
inline Report suite_bijections(int r_max, int jobs = 0) {
    Report rep;
    rep.object = "word/Kleshchev bijections";
    std::vector<Charge> charges = detail::representative_charges();

    long long theta_count = 0;
    bool theta_ok = true;
    for (const auto& f : charges) {
        Charge fs = f_star(f);
        for (int r = 1; r <= r_max; ++r) {
            std::set<std::string> seen;
            for (const auto& gamma : enumerate_standard_kleshchev(fs, r)) {
                StandardWord w = theta(gamma, f);
                if (w.total_length() != r) theta_ok = false;
                if (!seen.insert(detail::seq_key(word_to_seq(w))).second) theta_ok = false;
                auto [g2, f2] = eta(word_to_multisegment(w));
                if (!(g2 == gamma) || !(f2 == f)) theta_ok = false;
                ++theta_count;
            }
        }
    }
    rep.add("theta then eta is the identity", theta_ok,
            std::to_string(theta_count) + " multipartitions");

    std::vector<int> sizes(r_max, 0);
    std::vector<char> okflags(r_max, 1);
    parallel_for(
        r_max,
        [&](int idx) {
            int r = idx + 1;
            bool ok = true;
            long long count = 0;
            for (const auto& ms : enumerate_multisegments(r, -4, 4)) {
                auto [gamma, f] = eta(ms);
                if (!is_standard_kleshchev(gamma, f_star(f))) ok = false;
                StandardWord back = theta(gamma, f);
                if (!(word_to_multisegment(back) == ms)) ok = false;
                ++count;
            }
            okflags[idx] = ok;
            sizes[idx] = static_cast<int>(count);
        },
        jobs);
    bool eta_ok = true;
    long long eta_count = 0;
    for (int idx = 0; idx < r_max; ++idx) {
        eta_ok = eta_ok && okflags[idx];
        eta_count += sizes[idx];
    }
    rep.add("eta then theta is the identity on window multisegments", eta_ok,
            std::to_string(eta_count) + " multisegments, endpoints in [-4,4]");
    return rep;
}

/// Column/row residual duality: inverting the column reading of lambda gives
/// the row reading of the conjugate at the dual charge, as sequences.
inline Report suite_duality(int samples, int r_max, int m_max, unsigned seed) {
    Report rep;
    rep.object = "column/row residual duality";
    std::mt19937 rng(seed);
    auto rand_int = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    bool ok = true;
    for (int t = 0; t < samples; ++t) {
        int m = rand_int(1, m_max);
        int r = rand_int(1, r_max);
        std::vector<Partition> comps;
        int left = r;
        for (int k = 0; k < m; ++k) {
            int sz = (k == m - 1) ? left : rand_int(0, left);
            left -= sz;
            std::vector<int> parts;
            while (sz > 0) {
                int p = rand_int(1, sz);
                parts.push_back(p);
                sz -= p;
            }
            std::sort(parts.rbegin(), parts.rend());
            comps.emplace_back(std::move(parts));
        }
        Multipartition mp(comps);
        std::vector<int> fvec;
        for (int k = 0; k < m; ++k) fvec.push_back(rand_int(-5, 5));
        std::sort(fvec.rbegin(), fvec.rend());
        Charge f(fvec);
        SegmentSeq lhs = seq_inverse(column_residual_segments(mp, f));
        SegmentSeq rhs = row_residual_segments(multipartition_conjugate(mp), f_star(f));
        if (lhs != rhs) ok = false;
    }
    rep.add("inverse column reading equals conjugate row reading", ok,
            std::to_string(samples) + " random pairs");
    return rep;
}

/// The Drinfeld-root map: bijectivity onto dominant integral roots, the
/// row-residue formula, and naturality under shifts.
inline Report suite_drinfeld(int r_max, int n, int jobs = 0) {
    Report rep;
    rep.object = "Drinfeld root correspondence";

    std::vector<char> okflags(r_max, 1);
    std::vector<long long> counts(r_max, 0);
    parallel_for(
        r_max,
        [&](int idx) {
            int r = idx + 1;
            bool ok = true;
            std::set<std::string> images;
            long long count = 0;
            for (const auto& ms : enumerate_multisegments(r, -4, 4)) {
                DrinfeldRoots q = partial_map(ms, n);
                if (!is_dominant(q) || !q.integral() || q.degree() != r) ok = false;
                if (!images.insert(detail::roots_key(q)).second) ok = false;
                if (!(partial_inverse(q) == ms)) ok = false;
                ++count;
            }
            okflags[idx] = ok;
            counts[idx] = count;
        },
        jobs);
    bool ok = true;
    long long total = 0;
    for (int idx = 0; idx < r_max; ++idx) {
        ok = ok && okflags[idx];
        total += counts[idx];
    }
    rep.add("injective with dominant integral image and exact inverse", ok,
            std::to_string(total) + " multisegments, endpoints in [-4,4]");

    bool chain_ok = true;
    long long chain_count = 0;
    for (const auto& f : detail::representative_charges()) {
        Charge fs = f_star(f);
        for (int r = 1; r <= r_max; ++r)
            for (const auto& mp : enumerate_multipartitions(r, f.count())) {
                if (!is_kleshchev(multipartition_conjugate(mp), fs)) continue;
                DrinfeldRoots direct = drinfeld_from_multipartition(mp, f, n);
                DrinfeldRoots via =
                    partial_map(MultisegmentZ(column_residual_segments(mp, f)), n);
                if (!(direct == via)) chain_ok = false;
                ++chain_count;
            }
    }
    rep.add("row-residue formula matches the composed map", chain_ok,
            std::to_string(chain_count) + " Kleshchev-conjugate multipartitions");

    std::mt19937 rng(417);
    auto rand_int = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    bool twist_ok = true;
    for (int t = 0; t < 200; ++t) {
        int r = rand_int(1, r_max);
        SegmentSeq segs;
        int left = r;
        while (left > 0) {
            int len = rand_int(1, left);
            int hi = rand_int(-4, 4);
            segs.emplace_back(hi - len + 1, hi);
            left -= len;
        }
        MultisegmentZ ms(segs);
        int c = rand_int(-3, 3);
        if (!(partial_map(shift(ms, c), n) == omega_twist(partial_map(ms, n), c)))
            twist_ok = false;
    }
    rep.add("shift naturality", twist_ok, "200 random multisegments");
    return rep;
}

struct SkewSuiteOptions {
    int r_max = 6;
    int outer_max = 8;
    int commutant_r_max = 5;
    int drinfeld_outer_max = 8;
    std::vector<Scalar> q0s = {Scalar(2), Scalar(3)};
    int jobs = 0;
};

/// Ram's skew modules: relations, dimensions, weights, commutant, and the
/// skew Drinfeld roots.
inline Report suite_skew(const SkewSuiteOptions& opt) {
    Report rep;
    rep.object = "skew shape modules";

    std::vector<SkewShape> shapes = enumerate_skew_shapes(opt.outer_max, 1, opt.r_max);
    for (const auto& q0 : opt.q0s) {
        int n = static_cast<int>(shapes.size());
        std::vector<char> rel_ok(n, 1), dim_ok(n, 1), weight_ok(n, 1), comm_ok(n, 1);
        parallel_for(
            n,
            [&](int i) {
                const SkewShape& s = shapes[i];
                SkewRepMatrices m = skew_rep_matrices(s, q0);
                rel_ok[i] = verify_affine_relations(m).all_pass();
                dim_ok[i] = static_cast<int>(m.basis.size()) ==
                            static_cast<int>(standard_tableaux(s).size());
                weight_ok[i] = skew_weight_check(m).all_pass();
                if (s.size() <= opt.commutant_r_max) comm_ok[i] = commutant_dimension(m) == 1;
            },
            opt.jobs);
        auto all = [](const std::vector<char>& v) {
            for (char c : v)
                if (!c) return false;
            return true;
        };
        std::string tag = " (q0 = " + rational_str(q0) + ", " + std::to_string(n) + " shapes)";
        rep.add("affine relations" + tag, all(rel_ok));
        rep.add("dimension equals tableau count" + tag, all(dim_ok));
        rep.add("weight and sign at the column reading" + tag, all(weight_ok));
        rep.add("commutant dimension 1, r <= " + std::to_string(opt.commutant_r_max) + tag,
                all(comm_ok));
    }

    bool dr_ok = true;
    long long dr_count = 0;
    for (const auto& s : enumerate_skew_shapes(opt.drinfeld_outer_max, 1, 1 << 30)) {
        int n = opt.drinfeld_outer_max;
        DrinfeldRoots direct = skew_drinfeld(s, n);
        DrinfeldRoots via = partial_map(MultisegmentZ(skew_multisegment(s)), n);
        if (!(direct == via)) dr_ok = false;
        ++dr_count;
    }
    rep.add("skew Drinfeld roots match the composed map", dr_ok,
            std::to_string(dr_count) + " skew shapes");
    return rep;
}

/// Littlewood-Richardson facts: the distinguished coefficient is 1 and the
/// restriction dimension sum matches the tableau count.
inline Report suite_lr(int outer_max, int jobs = 0) {
    Report rep;
    rep.object = "Littlewood-Richardson";
    std::vector<SkewShape> shapes = enumerate_skew_shapes(outer_max);
    int n = static_cast<int>(shapes.size());
    std::vector<char> rho_ok(n, 1), dim_ok(n, 1);
    parallel_for(
        n,
        [&](int i) {
            const SkewShape& s = shapes[i];
            rho_ok[i] = lr_coefficient(s.outer, s.inner, rho_of_skew(s)) == 1;
            dim_ok[i] = restriction_dimension_check(s).all_pass();
        },
        jobs);
    bool rho_all = true, dim_all = true;
    for (int i = 0; i < n; ++i) {
        rho_all = rho_all && rho_ok[i];
        dim_all = dim_all && dim_ok[i];
    }
    rep.add("distinguished coefficient is 1", rho_all, std::to_string(n) + " skew shapes");
    rep.add("restriction dimension sum", dim_all, std::to_string(n) + " skew shapes");
    return rep;
}

} // namespace segkit
