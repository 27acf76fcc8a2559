#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "segkit/partitions.hpp"

namespace segkit {

using TableauShape = std::variant<Partition, Multipartition, SkewShape>;

/// Cells of a shape in canonical order: component, then row, then column.
inline std::vector<Node> shape_cells(const TableauShape& shape) {
    std::vector<Node> cells;
    if (const auto* p = std::get_if<Partition>(&shape)) {
        for (int i = 1; i <= p->length(); ++i)
            for (int j = 1; j <= p->part(i); ++j) cells.push_back({i, j, 1});
    } else if (const auto* mp = std::get_if<Multipartition>(&shape)) {
        for (int k = 1; k <= mp->count(); ++k) {
            const Partition& p = mp->components[k - 1];
            for (int i = 1; i <= p.length(); ++i)
                for (int j = 1; j <= p.part(i); ++j) cells.push_back({i, j, k});
        }
    } else {
        cells = std::get<SkewShape>(shape).cells();
    }
    return cells;
}

inline bool shape_contains(const TableauShape& shape, int row, int col, int comp) {
    if (const auto* p = std::get_if<Partition>(&shape))
        return comp == 1 && row >= 1 && col >= 1 && col <= p->part(row);
    if (const auto* mp = std::get_if<Multipartition>(&shape))
        return comp >= 1 && comp <= mp->count() && row >= 1 && col >= 1 &&
               col <= mp->components[comp - 1].part(row);
    return comp == 1 && row >= 1 && std::get<SkewShape>(shape).contains(row, col);
}

/// A labeling of the cells of a shape by 1..r. Standardness is a predicate,
/// not an invariant.
struct Tableau {
    TableauShape shape;
    std::vector<Node> cells;  // canonical order
    std::vector<int> labels;  // labels[i] sits on cells[i]

    Tableau() = default;
    Tableau(TableauShape s, std::vector<int> lab)
        : shape(std::move(s)), cells(shape_cells(shape)), labels(std::move(lab)) {
        if (labels.size() != cells.size())
            throw std::invalid_argument("label count must match cell count");
        std::vector<char> seen(labels.size(), 0);
        for (int v : labels) {
            if (v < 1 || v > static_cast<int>(labels.size()) || seen[v - 1])
                throw std::invalid_argument("labels must be a bijection onto 1..r");
            seen[v - 1] = 1;
        }
    }

    int size() const { return static_cast<int>(cells.size()); }

    int label_at(const Node& n) const {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == n) return labels[i];
        throw std::invalid_argument("node not in shape");
    }

    Node node_of_label(int k) const {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (labels[i] == k) return cells[i];
        throw std::invalid_argument("label out of range");
    }

    bool is_standard() const {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Node& n = cells[i];
            if (shape_contains(shape, n.row, n.col + 1, n.comp) &&
                label_at({n.row, n.col + 1, n.comp}) < labels[i])
                return false;
            if (shape_contains(shape, n.row + 1, n.col, n.comp) &&
                label_at({n.row + 1, n.col, n.comp}) < labels[i])
                return false;
        }
        return true;
    }

    bool operator==(const Tableau&) const = default;
};

/// Residue exponent f_k + col - row; an empty charge reads as all zeros.
inline int node_residue(const Node& n, std::span<const int> charge = {}) {
    int f = 0;
    if (!charge.empty()) {
        if (n.comp < 1 || n.comp > static_cast<int>(charge.size()))
            throw std::invalid_argument("node component outside charge");
        f = charge[n.comp - 1];
    }
    return f + n.col - n.row;
}

/// t^{shape}: labels run along successive rows, first component first.
inline Tableau row_reading_tableau(const Multipartition& mp) {
    std::vector<Node> cells = shape_cells(TableauShape(mp));
    std::vector<int> labels(cells.size());
    // canonical cell order is already row-reading order
    for (std::size_t i = 0; i < cells.size(); ++i) labels[i] = static_cast<int>(i) + 1;
    return Tableau(TableauShape(mp), std::move(labels));
}

inline Tableau row_reading_tableau(const Partition& p) {
    std::vector<int> labels(p.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i) + 1;
    return Tableau(TableauShape(p), std::move(labels));
}

namespace detail {

template <class NextCell>
inline std::vector<int> column_reading_labels(const std::vector<Node>& cells, NextCell order) {
    // order: list of cells in the order labels 1..r are written
    std::map<Node, int> lab;
    int next = 1;
    for (const Node& n : order) lab[n] = next++;
    std::vector<int> labels;
    labels.reserve(cells.size());
    for (const Node& n : cells) labels.push_back(lab.at(n));
    return labels;
}

} // namespace detail

/// t_{shape}: labels run down successive columns, last component first.
inline Tableau column_reading_tableau(const Multipartition& mp) {
    std::vector<Node> order;
    for (int k = mp.count(); k >= 1; --k) {
        const Partition& p = mp.components[k - 1];
        Partition pc = conjugate(p);
        for (int j = 1; j <= p.part(1); ++j)
            for (int i = 1; i <= pc.part(j); ++i) order.push_back({i, j, k});
    }
    std::vector<Node> cells = shape_cells(TableauShape(mp));
    return Tableau(TableauShape(mp), detail::column_reading_labels(cells, order));
}

inline Tableau column_reading_tableau(const Partition& p) {
    Multipartition mp(std::vector<Partition>{p});
    Tableau t = column_reading_tableau(mp);
    return Tableau(TableauShape(p), t.labels);
}

/// t_{outer/inner}: labels run down successive columns of the skew shape.
inline Tableau column_reading_tableau(const SkewShape& s) {
    Partition oc = conjugate(s.outer);
    Partition ic = conjugate(s.inner);
    std::vector<Node> order;
    for (int j = 1; j <= s.outer.part(1); ++j)
        for (int i = ic.part(j) + 1; i <= oc.part(j); ++i) order.push_back({i, j, 1});
    std::vector<Node> cells = shape_cells(TableauShape(s));
    return Tableau(TableauShape(s), detail::column_reading_labels(cells, order));
}

/// The permutation carrying t^{mp} to t_{mp}.
inline Permutation w_lambda(const Multipartition& mp) {
    Tableau trow = row_reading_tableau(mp);
    Tableau tcol = column_reading_tableau(mp);
    std::vector<int> img(trow.size());
    for (int i = 0; i < trow.size(); ++i) img[trow.labels[i] - 1] = tcol.labels[i];
    return Permutation(std::move(img));
}

inline Permutation w_lambda(const Partition& p) {
    return w_lambda(Multipartition(std::vector<Partition>{p}));
}

namespace detail {

inline void standard_backtrack(const TableauShape& shape, const std::vector<Node>& cells,
                               std::vector<int>& labels, std::vector<char>& used, int next,
                               std::vector<Tableau>& out) {
    if (next == 0) {
        out.emplace_back(shape, labels);
        return;
    }
    // place the largest remaining label on any currently-removable cell
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (used[i]) continue;
        const Node& n = cells[i];
        bool removable = true;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (used[j] || j == i) continue;
            if (cells[j].comp == n.comp &&
                ((cells[j].row == n.row && cells[j].col == n.col + 1) ||
                 (cells[j].row == n.row + 1 && cells[j].col == n.col))) {
                removable = false;
                break;
            }
        }
        if (!removable) continue;
        used[i] = 1;
        labels[i] = next;
        standard_backtrack(shape, cells, labels, used, next - 1, out);
        used[i] = 0;
    }
}

} // namespace detail

/// All standard tableaux of the shape, in lexicographic label order.
inline std::vector<Tableau> standard_tableaux(const TableauShape& shape) {
    std::vector<Node> cells = shape_cells(shape);
    std::vector<Tableau> out;
    if (cells.empty()) {
        out.emplace_back(shape, std::vector<int>{});
        return out;
    }
    std::vector<int> labels(cells.size(), 0);
    std::vector<char> used(cells.size(), 0);
    detail::standard_backtrack(shape, cells, labels, used, static_cast<int>(cells.size()), out);
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return a.labels < b.labels; });
    return out;
}

inline std::vector<Tableau> standard_tableaux(const Partition& p) {
    return standard_tableaux(TableauShape(p));
}
inline std::vector<Tableau> standard_tableaux(const Multipartition& mp) {
    return standard_tableaux(TableauShape(mp));
}
inline std::vector<Tableau> standard_tableaux(const SkewShape& s) {
    return standard_tableaux(TableauShape(s));
}

} // namespace segkit
