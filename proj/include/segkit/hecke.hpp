#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "segkit/config.hpp"
#include "segkit/matrix.hpp"
#include "segkit/partitions.hpp"
#include "segkit/report.hpp"
#include "segkit/scalar.hpp"
#include "segkit/tableaux.hpp"

namespace segkit {

/// Cached data for S_r: permutations in lexicographic one-line order,
/// generator multiplication table, lengths, inverses, reduced words.
class SymmetricGroup {
  public:
    static std::shared_ptr<const SymmetricGroup> get(int r) {
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const SymmetricGroup>> cache;
        if (r < 1 || r > desk_limits().regular_r + 2)
            throw std::invalid_argument("rank outside desk-scale bound");
        std::lock_guard<std::mutex> lock(mu);
        auto& entry = cache[r];
        if (!entry) entry = std::shared_ptr<const SymmetricGroup>(new SymmetricGroup(r));
        return entry;
    }

    int rank() const { return r_; }
    int order() const { return static_cast<int>(perms_.size()); }
    const std::vector<int>& one_line(int idx) const { return perms_[idx]; }
    int length(int idx) const { return lengths_[idx]; }
    int inverse(int idx) const { return inverses_[idx]; }
    const std::vector<int>& reduced_word(int idx) const { return words_[idx]; }

    int index_of(const std::vector<int>& one_line) const {
        // Lehmer code rank
        int n = r_;
        long long idx = 0;
        for (int i = 0; i < n; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < n; ++j)
                if (one_line[j] < one_line[i]) ++smaller;
            idx = idx * (n - i) + smaller;
        }
        return static_cast<int>(idx);
    }

    int index_of(const Permutation& w) const { return index_of(w.img); }

    // index of s_i o w (values i, i+1 swapped), 1 <= i <= r-1
    int left_mult(int i, int widx) const { return left_mult_[i - 1][widx]; }

    // true when l(s_i w) = l(w) + 1
    bool length_increases(int i, int widx) const {
        const auto& w = perms_[widx];
        int pos_i = -1, pos_i1 = -1;
        for (int k = 0; k < r_; ++k) {
            if (w[k] == i) pos_i = k;
            if (w[k] == i + 1) pos_i1 = k;
        }
        return pos_i < pos_i1;
    }

    int identity_index() const { return index_of(Permutation::identity(r_).img); }

  private:
    explicit SymmetricGroup(int r) : r_(r) {
        std::vector<int> cur(r);
        std::iota(cur.begin(), cur.end(), 1);
        do {
            perms_.push_back(cur);
        } while (std::next_permutation(cur.begin(), cur.end()));
        int n = order();
        lengths_.resize(n);
        inverses_.resize(n);
        words_.resize(n);
        left_mult_.assign(r - 1, std::vector<int>(n));
        for (int idx = 0; idx < n; ++idx) {
            const auto& w = perms_[idx];
            int inv = 0;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j)
                    if (w[i] > w[j]) ++inv;
            lengths_[idx] = inv;
            std::vector<int> winv(r);
            for (int i = 0; i < r; ++i) winv[w[i] - 1] = i + 1;
            inverses_[idx] = index_of(winv);
            for (int i = 1; i < r; ++i) {
                std::vector<int> sw = w;
                for (int k = 0; k < r; ++k) {
                    if (sw[k] == i) sw[k] = i + 1;
                    else if (sw[k] == i + 1) sw[k] = i;
                }
                left_mult_[i - 1][idx] = index_of(sw);
            }
        }
        // reduced word by stripping left descents: w = s_{word[0]} s_{word[1]} ...
        for (int idx = 0; idx < n; ++idx) {
            std::vector<int> word;
            int cur_idx = idx;
            while (lengths_[cur_idx] > 0) {
                for (int i = 1; i < r; ++i) {
                    int next = left_mult_[i - 1][cur_idx];
                    if (lengths_[next] < lengths_[cur_idx]) {
                        word.push_back(i);
                        cur_idx = next;
                        break;
                    }
                }
            }
            words_[idx] = std::move(word);
        }
    }

    int r_;
    std::vector<std::vector<int>> perms_;
    std::vector<int> lengths_;
    std::vector<int> inverses_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<int>> left_mult_;
};

/// Element of the finite Hecke algebra H(r) in the T_w basis; sparse,
/// zero coefficients never stored.
struct HeckeElement {
    int r = 1;
    std::map<int, Scalar> coeff; // perm index -> coefficient

    bool is_zero() const { return coeff.empty(); }

    void set(int idx, Scalar c) {
        if (c == 0)
            coeff.erase(idx);
        else
            coeff[idx] = std::move(c);
    }

    void add(int idx, const Scalar& c) {
        auto it = coeff.find(idx);
        if (it == coeff.end()) {
            if (c != 0) coeff[idx] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        for (const auto& [idx, c] : o.coeff) add(idx, c);
        return *this;
    }

    HeckeElement operator*(const Scalar& c) const {
        HeckeElement out{r, {}};
        if (c == 0) return out;
        for (const auto& [idx, x] : coeff) out.coeff[idx] = x * c;
        return out;
    }

    HeckeElement operator-(const HeckeElement& o) const {
        HeckeElement out = *this;
        for (const auto& [idx, c] : o.coeff) out.add(idx, -c);
        return out;
    }

    bool operator==(const HeckeElement&) const = default;
};

inline HeckeElement hecke_one(int r) {
    HeckeElement e{r, {}};
    e.coeff[SymmetricGroup::get(r)->identity_index()] = 1;
    return e;
}

/// T_i * x via T_i T_w = T_{s_i w} or (q0^2 - 1) T_w + q0^2 T_{s_i w}.
inline HeckeElement gen_apply(const SymmetricGroup& G, int i, const HeckeElement& x,
                              const Scalar& q0) {
    Scalar q2 = q0 * q0;
    HeckeElement out{x.r, {}};
    for (const auto& [widx, c] : x.coeff) {
        int swidx = G.left_mult(i, widx);
        if (G.length_increases(i, widx)) {
            out.add(swidx, c);
        } else {
            out.add(widx, (q2 - 1) * c);
            out.add(swidx, q2 * c);
        }
    }
    return out;
}

/// T_w * x along a reduced word of w.
inline HeckeElement perm_apply(const SymmetricGroup& G, int widx, const HeckeElement& x,
                               const Scalar& q0) {
    const auto& word = G.reduced_word(widx);
    HeckeElement out = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = gen_apply(G, *it, out, q0);
    return out;
}

inline HeckeElement mul(const SymmetricGroup& G, const HeckeElement& a, const HeckeElement& b,
                        const Scalar& q0) {
    HeckeElement out{a.r, {}};
    for (const auto& [widx, c] : a.coeff) {
        HeckeElement term = perm_apply(G, widx, b, q0);
        for (const auto& [vidx, d] : term.coeff) out.add(vidx, c * d);
    }
    return out;
}

/// Indices of the Young subgroup S_mu (blocks of consecutive points).
inline std::vector<int> young_subgroup(const SymmetricGroup& G, const Composition& mu) {
    if (mu.size() != G.rank()) throw std::invalid_argument("composition size must equal rank");
    // generators available inside the subgroup
    std::vector<int> gens;
    int offset = 0;
    for (int part : mu.parts) {
        for (int i = offset + 1; i < offset + part; ++i) gens.push_back(i);
        offset += part;
    }
    std::vector<int> found{G.identity_index()};
    std::vector<char> seen(G.order(), 0);
    seen[found[0]] = 1;
    for (std::size_t k = 0; k < found.size(); ++k)
        for (int i : gens) {
            int next = G.left_mult(i, found[k]);
            if (!seen[next]) {
                seen[next] = 1;
                found.push_back(next);
            }
        }
    std::sort(found.begin(), found.end());
    return found;
}

/// Longest element of S_mu: reverse each block.
inline int longest_element(const SymmetricGroup& G, const Composition& mu) {
    std::vector<int> img;
    int offset = 0;
    for (int part : mu.parts) {
        for (int k = part; k >= 1; --k) img.push_back(offset + k);
        offset += part;
    }
    return G.index_of(img);
}

/// x_mu = sum of T_sigma over the Young subgroup.
inline HeckeElement x_mu(const Composition& mu) {
    int r = mu.size();
    auto G = SymmetricGroup::get(r);
    HeckeElement out{r, {}};
    for (int idx : young_subgroup(*G, mu)) out.coeff[idx] = 1;
    return out;
}

/// y_mu = sum of (-q0^{-2})^{l(sigma)} T_sigma. The exponent sign makes
/// T_sigma y_mu = (-1)^{l(sigma)} y_mu hold with the quadratic relation
/// (T_i - q^2)(T_i + 1) = 0.
inline HeckeElement y_mu(const Composition& mu, const Scalar& q0) {
    int r = mu.size();
    auto G = SymmetricGroup::get(r);
    Scalar base = Scalar(-1) / (q0 * q0);
    HeckeElement out{r, {}};
    for (int idx : young_subgroup(*G, mu)) out.coeff[idx] = q_pow(base, G->length(idx));
    return out;
}

/// Kazhdan-Lusztig element C_{w0_mu}; all P_{w', w0} are 1 for the longest
/// element of a parabolic.
inline HeckeElement c_w0(const Composition& mu, const Scalar& q0) {
    int r = mu.size();
    auto G = SymmetricGroup::get(r);
    int w0 = longest_element(*G, mu);
    int lw0 = G->length(w0);
    HeckeElement out{r, {}};
    for (int idx : young_subgroup(*G, mu)) {
        int l = G->length(idx);
        Scalar c = q_pow(q0, lw0) * q_pow(q0, -2 * l);
        if ((lw0 - l) % 2 != 0) c = -c;
        out.coeff[idx] = c;
    }
    return out;
}

/// z_lambda = y_{lambda'} T_{w_{lambda'}} x_lambda. w_lambda here maps labels
/// of the row reading to labels of the column reading; the permutation whose
/// T realizes that relabeling is its inverse, so T is indexed accordingly.
inline HeckeElement z_lambda(const Partition& lam, const Scalar& q0) {
    int r = lam.size();
    if (r < 1) throw std::invalid_argument("need a nonempty partition");
    auto G = SymmetricGroup::get(r);
    Partition lc = conjugate(lam);
    HeckeElement x = x_mu(Composition(lam.parts));
    int wl = G->index_of(w_lambda(lc).inverse());
    HeckeElement tx = perm_apply(*G, wl, x, q0);
    return mul(*G, y_mu(Composition(lc.parts), q0), tx, q0);
}

/// J_k = q^{2(1-k)} T_{k-1} ... T_1 T_1 ... T_{k-1}; J_1 = 1.
inline HeckeElement jm_element(int k, int r, const Scalar& q0) {
    if (k < 1 || k > r) throw std::invalid_argument("k out of range");
    auto G = SymmetricGroup::get(r);
    HeckeElement out = hecke_one(r);
    for (int i = k - 1; i >= 1; --i) out = gen_apply(*G, i, out, q0);
    for (int i = 1; i <= k - 1; ++i) out = gen_apply(*G, i, out, q0);
    return out * q_pow(q0, 2 * (1 - k));
}

/// J'_k = sum_{a<k} q^{-2(k-a)} T_{(a,k)}; J'_1 = 0.
inline HeckeElement jm_prime(int k, int r, const Scalar& q0) {
    if (k < 1 || k > r) throw std::invalid_argument("k out of range");
    auto G = SymmetricGroup::get(r);
    HeckeElement out{r, {}};
    for (int a = 1; a < k; ++a) {
        std::vector<int> img(r);
        std::iota(img.begin(), img.end(), 1);
        std::swap(img[a - 1], img[k - 1]);
        out.add(G->index_of(img), q_pow(q0, -2 * (k - a)));
    }
    return out;
}

/// Dense r! x r! matrices of left multiplication by the generators.
inline std::vector<Matrix> regular_generator_matrices(int r, const Scalar& q0) {
    if (r < 1 || r > desk_limits().regular_r)
        throw std::invalid_argument("rank outside desk-scale bound");
    auto G = SymmetricGroup::get(r);
    int n = G->order();
    std::vector<Matrix> out;
    Scalar q2 = q0 * q0;
    for (int i = 1; i < r; ++i) {
        Matrix m(n, n);
        for (int w = 0; w < n; ++w) {
            int sw = G->left_mult(i, w);
            if (G->length_increases(i, w)) {
                m.at(sw, w) = 1;
            } else {
                m.at(w, w) = q2 - 1;
                m.at(sw, w) = q2;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<Scalar> element_to_vector(const SymmetricGroup& G, const HeckeElement& x) {
    std::vector<Scalar> v(G.order(), Scalar(0));
    for (const auto& [idx, c] : x.coeff) v[idx] = c;
    return v;
}

/// Rank of the left ideal H(r) * gen, via the spanning set {T_w gen}.
inline int left_ideal_rank(const HeckeElement& gen, const Scalar& q0) {
    auto G = SymmetricGroup::get(gen.r);
    if (gen.r > desk_limits().ideal_r)
        throw std::invalid_argument("rank outside desk-scale bound");
    int n = G->order();
    Matrix span(n, n);
    for (int w = 0; w < n; ++w) {
        HeckeElement img = perm_apply(*G, w, gen, q0);
        for (const auto& [idx, c] : img.coeff) span.at(w, idx) = c;
    }
    return rank(span);
}

/// dim I(mu) for the left ideal generated by C_{w0_mu}.
inline int ideal_dimension(const Composition& mu, const Scalar& q0) {
    return left_ideal_rank(c_w0(mu, q0), q0);
}

/// Matrices of the generators T_i on the left ideal H(r) * gen, in an
/// echelonized basis of the spanning set {T_w gen}.
struct IdealModule {
    int r = 1;
    int dim = 0;
    std::vector<Matrix> gens; // r-1 matrices, dim x dim
};

inline IdealModule left_ideal_module(const HeckeElement& gen, const Scalar& q0) {
    auto G = SymmetricGroup::get(gen.r);
    int n = G->order();
    std::vector<HeckeElement> span;
    for (int w = 0; w < n; ++w) span.push_back(perm_apply(*G, w, gen, q0));
    Matrix m(n, n);
    for (int w = 0; w < n; ++w)
        for (const auto& [idx, c] : span[w].coeff) m.at(w, idx) = c;
    std::vector<int> pivots = rref(m);
    int dim = static_cast<int>(pivots.size());
    // rows 0..dim-1 of m now hold the reduced basis
    auto coords = [&](const HeckeElement& x) {
        std::vector<Scalar> v = element_to_vector(*G, x);
        std::vector<Scalar> y(dim);
        for (int b = 0; b < dim; ++b) {
            y[b] = v[pivots[b]];
            if (y[b] == 0) continue;
            for (int j = 0; j < n; ++j) v[j] -= y[b] * m.at(b, j);
        }
        for (const auto& rem : v)
            if (rem != 0) throw std::logic_error("vector escaped the ideal");
        return y;
    };
    IdealModule mod;
    mod.r = gen.r;
    mod.dim = dim;
    for (int i = 1; i < gen.r; ++i) {
        Matrix rho(dim, dim);
        for (int b = 0; b < dim; ++b) {
            HeckeElement basis_elt{gen.r, {}};
            for (int j = 0; j < n; ++j) basis_elt.set(j, m.at(b, j));
            std::vector<Scalar> y = coords(gen_apply(*G, i, basis_elt, q0));
            for (int a = 0; a < dim; ++a) rho.at(a, b) = y[a];
        }
        mod.gens.push_back(std::move(rho));
    }
    return mod;
}

/// Traces of T_w over all w, for the module given by generator matrices.
/// With sharp set, the generators are twisted by T_i -> -q^2 T_i^{-1},
/// i.e. rho(T_i) -> (q^2 - 1) I - rho(T_i).
inline std::vector<Scalar> character_vector(const IdealModule& mod, const Scalar& q0,
                                            bool sharp) {
    auto G = SymmetricGroup::get(mod.r);
    Scalar q2 = q0 * q0;
    std::vector<Matrix> gens = mod.gens;
    if (sharp)
        for (auto& g : gens) g = Matrix::identity(mod.dim) * (q2 - 1) - g;
    std::vector<Scalar> out(G->order());
    for (int w = 0; w < G->order(); ++w) {
        Matrix acc = Matrix::identity(mod.dim);
        for (int i : G->reduced_word(w)) acc = acc * gens[i - 1];
        out[w] = acc.trace();
    }
    return out;
}

inline Report jm_eigenvalue_check(const Partition& lam, const Scalar& q0) {
    int r = lam.size();
    if (r > desk_limits().ideal_r)
        throw std::invalid_argument("partition outside desk-scale bound");
    Report rep;
    rep.object = "jm eigenvalues";
    rep.q0 = rational_str(q0);
    auto G = SymmetricGroup::get(r);
    HeckeElement z = z_lambda(lam, q0);
    rep.add("z_lambda is nonzero", !z.is_zero());
    if (z.is_zero()) return rep;
    Tableau tcol = column_reading_tableau(lam);
    for (int k = 1; k <= r; ++k) {
        int e = node_residue(tcol.node_of_label(k));
        HeckeElement lhs = mul(*G, jm_element(k, r, q0), z, q0);
        bool ok = lhs == z * q_pow(q0, 2 * e);
        rep.add("J_" + std::to_string(k) + " eigenvalue exponent " + std::to_string(e), ok);
        if (!ok) break;
    }
    return rep;
}

inline Report sharp_twist_check(const Partition& lam, const Scalar& q0) {
    int r = lam.size();
    if (r > desk_limits().sharp_r)
        throw std::invalid_argument("partition outside desk-scale bound");
    Report rep;
    rep.object = "sharp twist character";
    rep.q0 = rational_str(q0);
    IdealModule a = left_ideal_module(z_lambda(lam, q0), q0);
    IdealModule b = left_ideal_module(z_lambda(conjugate(lam), q0), q0);
    std::vector<Scalar> lhs = character_vector(a, q0, true);
    std::vector<Scalar> rhs = character_vector(b, q0, false);
    rep.add("sharp character equals conjugate character", lhs == rhs,
            "dim " + std::to_string(a.dim));
    return rep;
}

} // namespace segkit
