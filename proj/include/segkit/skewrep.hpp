#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "segkit/config.hpp"
#include "segkit/correspondences.hpp"
#include "segkit/matrix.hpp"
#include "segkit/partitions.hpp"
#include "segkit/report.hpp"
#include "segkit/scalar.hpp"
#include "segkit/tableaux.hpp"

namespace segkit {

/// Ram's module on standard skew tableaux: X_k diagonal by residues, T_i
/// mixing a tableau with its i <-> i+1 swap.
struct SkewRepMatrices {
    int r = 0;
    SkewShape shape;
    Scalar q0;
    std::vector<Tableau> basis;
    std::vector<Matrix> X; // r diagonal matrices
    std::vector<Matrix> T; // r-1 matrices
};

inline SkewRepMatrices skew_rep_matrices(const SkewShape& shape, const Scalar& q0) {
    int r = shape.size();
    if (r < 1 || r > desk_limits().skew_r)
        throw std::invalid_argument("skew size outside desk-scale bound");
    if (!valid_q0(q0)) throw std::invalid_argument("|q0| must avoid 0 and 1");
    SkewRepMatrices m;
    m.r = r;
    m.shape = shape;
    m.q0 = q0;
    m.basis = standard_tableaux(shape);
    int d = static_cast<int>(m.basis.size());
    Scalar q2 = q0 * q0;

    std::vector<std::vector<int>> res(d, std::vector<int>(r + 1));
    for (int b = 0; b < d; ++b)
        for (int k = 1; k <= r; ++k) res[b][k] = node_residue(m.basis[b].node_of_label(k));

    for (int k = 1; k <= r; ++k) {
        Matrix x(d, d);
        for (int b = 0; b < d; ++b) x.at(b, b) = q_pow(q0, 2 * res[b][k]);
        m.X.push_back(std::move(x));
    }
    for (int i = 1; i < r; ++i) {
        Matrix t(d, d);
        for (int b = 0; b < d; ++b) {
            // T_i v_T = a v_T + (1 + a) v_{s_i T}, a = (q^2-1)/(1 - res(i)/res(i+1))
            Scalar ratio = q_pow(q0, 2 * (res[b][i] - res[b][i + 1]));
            Scalar a = (q2 - 1) / (1 - ratio);
            t.at(b, b) = a;
            Tableau swapped = m.basis[b];
            for (auto& lab : swapped.labels) {
                if (lab == i) lab = i + 1;
                else if (lab == i + 1) lab = i;
            }
            if (swapped.is_standard()) {
                auto it = std::find_if(m.basis.begin(), m.basis.end(),
                                       [&](const Tableau& u) { return u.labels == swapped.labels; });
                t.at(static_cast<int>(it - m.basis.begin()), b) = 1 + a;
            }
        }
        m.T.push_back(std::move(t));
    }
    return m;
}

/// Every defining relation of the affine Hecke presentation, checked as an
/// exact matrix identity.
inline Report verify_affine_relations(const SkewRepMatrices& m) {
    Report rep;
    rep.object = "affine relations on skew module";
    rep.q0 = rational_str(m.q0);
    int d = static_cast<int>(m.basis.size());
    Scalar q2 = m.q0 * m.q0;
    Matrix id = Matrix::identity(d);

    for (int k = 0; k < m.r; ++k) {
        Matrix xinv(d, d);
        bool invertible = true;
        for (int b = 0; b < d; ++b) {
            if (m.X[k].at(b, b) == 0) {
                invertible = false;
                break;
            }
            xinv.at(b, b) = Scalar(1) / m.X[k].at(b, b);
        }
        rep.add("X_" + std::to_string(k + 1) + " invertible",
                invertible && m.X[k] * xinv == id);
    }
    for (int k = 0; k < m.r; ++k)
        for (int l = k + 1; l < m.r; ++l)
            rep.add("X_" + std::to_string(k + 1) + " X_" + std::to_string(l + 1) + " commute",
                    m.X[k] * m.X[l] == m.X[l] * m.X[k]);
    for (int i = 0; i + 1 < m.r; ++i) {
        Matrix lhs = (m.T[i] - id * q2) * (m.T[i] + id);
        rep.add("quadratic T_" + std::to_string(i + 1), lhs.is_zero());
    }
    for (int i = 0; i + 2 < m.r; ++i)
        rep.add("braid T_" + std::to_string(i + 1) + " T_" + std::to_string(i + 2),
                m.T[i] * m.T[i + 1] * m.T[i] == m.T[i + 1] * m.T[i] * m.T[i + 1]);
    for (int i = 0; i + 1 < m.r; ++i)
        for (int j = i + 2; j + 1 < m.r; ++j)
            rep.add("T_" + std::to_string(i + 1) + " T_" + std::to_string(j + 1) + " commute",
                    m.T[i] * m.T[j] == m.T[j] * m.T[i]);
    for (int i = 0; i + 1 < m.r; ++i)
        rep.add("T_" + std::to_string(i + 1) + " X_" + std::to_string(i + 1) + " T_" +
                    std::to_string(i + 1) + " = q^2 X_" + std::to_string(i + 2),
                m.T[i] * m.X[i] * m.T[i] == m.X[i + 1] * q2);
    for (int i = 0; i + 1 < m.r; ++i)
        for (int j = 0; j < m.r; ++j) {
            if (j == i || j == i + 1) continue;
            rep.add("X_" + std::to_string(j + 1) + " T_" + std::to_string(i + 1) + " commute",
                    m.X[j] * m.T[i] == m.T[i] * m.X[j]);
        }
    return rep;
}

/// The column-reading tableau carries the weight read off the reversed
/// column segments, and the parabolic generators act by -1 on it.
inline Report skew_weight_check(const SkewRepMatrices& m) {
    Report rep;
    rep.object = "skew weight and sign";
    rep.q0 = rational_str(m.q0);
    Tableau tcol = column_reading_tableau(m.shape);
    int at = -1;
    for (std::size_t b = 0; b < m.basis.size(); ++b)
        if (m.basis[b].labels == tcol.labels) {
            at = static_cast<int>(b);
            break;
        }
    rep.add("column-reading tableau is standard", at >= 0);
    if (at < 0) return rep;

    SegmentSeq seq = skew_multisegment(m.shape);
    std::vector<int> expected;
    for (const auto& s : seq)
        for (int e : seg_reverse(s)) expected.push_back(e);
    bool weights_ok = true;
    for (int k = 1; k <= m.r; ++k)
        if (m.X[k - 1].at(at, at) != q_pow(m.q0, 2 * expected[k - 1])) weights_ok = false;
    rep.add("X diagonal matches reversed segments", weights_ok);

    // generators inside the parabolic of mu(s): i and i+1 in the same block
    Composition mu = mu_of(seq);
    std::vector<int> block(m.r + 1, 0);
    int pos = 1, bi = 0;
    for (int part : mu.parts) {
        for (int k = 0; k < part; ++k) block[pos++] = bi;
        ++bi;
    }
    bool sign_ok = true;
    for (int i = 1; i < m.r; ++i) {
        if (block[i] != block[i + 1]) continue;
        for (int b = 0; b < static_cast<int>(m.basis.size()); ++b) {
            Scalar want = b == at ? Scalar(-1) : Scalar(0);
            if (m.T[i - 1].at(b, at) != want) sign_ok = false;
        }
    }
    rep.add("parabolic generators act by -1", sign_ok);
    return rep;
}

/// Dimension of the commutant of {X_k, T_i}. The X_k have pairwise distinct
/// joint spectra on the tableau basis, so a commuting matrix is diagonal;
/// the T_i constraints then glue diagonal entries along nonzero off-diagonal
/// couplings.
inline int commutant_dimension(const SkewRepMatrices& m) {
    int d = static_cast<int>(m.basis.size());
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            bool same = true;
            for (int k = 0; k < m.r; ++k)
                if (m.X[k].at(a, a) != m.X[k].at(b, b)) {
                    same = false;
                    break;
                }
            if (same) throw std::logic_error("residue vectors are not separating");
        }
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& t : m.T)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                if (a != b && t.at(a, b) != 0) parent[find(a)] = find(b);
    int components = 0;
    for (int x = 0; x < d; ++x)
        if (find(x) == x) ++components;
    return components;
}

/// Dimension form of the restriction rule: #SYT(skew) = sum over gamma of
/// c^{outer}_{inner, gamma} * hook count of gamma.
inline Report restriction_dimension_check(const SkewShape& s) {
    Report rep;
    rep.object = "restriction dimensions";
    int r = s.size();
    long long lhs = static_cast<long long>(standard_tableaux(s).size());
    long long rhs = 0;
    for (const auto& gam : enumerate_partitions(r))
        rhs += lr_coefficient(s.outer, s.inner, gam) * hook_length_count(gam);
    rep.add("skew tableau count matches restriction sum", lhs == rhs,
            std::to_string(lhs) + " vs " + std::to_string(rhs));
    return rep;
}

} // namespace segkit
