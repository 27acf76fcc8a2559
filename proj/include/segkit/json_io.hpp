#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "segkit/correspondences.hpp"
#include "segkit/kleshchev.hpp"
#include "segkit/matrix.hpp"
#include "segkit/partitions.hpp"
#include "segkit/report.hpp"
#include "segkit/segments.hpp"
#include "segkit/tableaux.hpp"

namespace segkit {

// Insertion-ordered JSON keeps outputs byte-identical across runs.
using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts); }
inline Json to_json(const Composition& c) { return Json(c.parts); }

inline Json to_json(const Multipartition& mp) {
    Json out = Json::array();
    for (const auto& p : mp.components) out.push_back(p.parts);
    return out;
}

inline Json to_json(const SkewShape& s) {
    return Json{{"outer", s.outer.parts}, {"inner", s.inner.parts}};
}

inline Json to_json(const SegmentZ& s) { return Json::array({s.lo, s.hi}); }

inline Json to_json(const SegmentSeq& seq) {
    Json out = Json::array();
    for (const auto& s : seq) out.push_back(to_json(s));
    return out;
}

inline Json to_json(const MultisegmentZ& ms) { return to_json(ms.segments()); }

inline Json to_json(const StandardWord& w) {
    return Json{{"tops", w.tops}, {"bottoms", w.bottoms}};
}

inline Json to_json(const Charge& f) { return Json(f.f); }

inline Json to_json(const DrinfeldRoots& q) {
    return Json{{"n", q.n}, {"roots", q.roots}};
}

inline Json to_json(const Tableau& t) {
    Json shape;
    Json rows;
    if (const auto* p = std::get_if<Partition>(&t.shape)) {
        shape = to_json(*p);
        rows = Json::array();
        for (int i = 1; i <= p->length(); ++i) {
            Json row = Json::array();
            for (int j = 1; j <= p->part(i); ++j) row.push_back(t.label_at({i, j, 1}));
            rows.push_back(row);
        }
    } else if (const auto* mp = std::get_if<Multipartition>(&t.shape)) {
        shape = to_json(*mp);
        rows = Json::array();
        for (int k = 1; k <= mp->count(); ++k) {
            Json comp = Json::array();
            const Partition& p = mp->components[k - 1];
            for (int i = 1; i <= p.length(); ++i) {
                Json row = Json::array();
                for (int j = 1; j <= p.part(i); ++j) row.push_back(t.label_at({i, j, k}));
                comp.push_back(row);
            }
            rows.push_back(comp);
        }
    } else {
        const auto& s = std::get<SkewShape>(t.shape);
        shape = to_json(s);
        rows = Json::array();
        for (int i = 1; i <= s.outer.length(); ++i) {
            Json row = Json::array();
            for (int j = 1; j <= s.outer.part(i); ++j) {
                if (s.contains(i, j))
                    row.push_back(t.label_at({i, j, 1}));
                else
                    row.push_back(nullptr);
            }
            rows.push_back(row);
        }
    }
    return Json{{"shape", shape}, {"rows", rows}};
}

/// Entries rendered as "num/den" strings ("num" when the denominator is 1).
inline Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_str(m.at(i, j)));
        out.push_back(row);
    }
    return out;
}

inline Json to_json(const Report& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    Json out;
    out["object"] = rep.object;
    if (!rep.q0.empty()) out["q0"] = rep.q0;
    out["checks"] = checks;
    return out;
}

// --- parsing ---------------------------------------------------------------

inline std::vector<int> int_list_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

inline Partition partition_from_json(const Json& j) {
    return Partition(int_list_from_json(j, "partition"));
}

inline Multipartition multipartition_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("multipartition must be a nonempty array of partitions");
    std::vector<Partition> comps;
    for (const auto& c : j) comps.push_back(partition_from_json(c));
    return Multipartition(std::move(comps));
}

inline SkewShape skew_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("outer") || !j.contains("inner"))
        throw std::invalid_argument("skew shape needs outer and inner");
    return SkewShape(partition_from_json(j["outer"]), partition_from_json(j["inner"]));
}

inline Charge charge_from_json(const Json& j) {
    return Charge(int_list_from_json(j, "charge"));
}

inline MultisegmentZ multisegment_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("multisegment must be an array of [lo,hi]");
    SegmentSeq segs;
    for (const auto& e : j) {
        auto pair = int_list_from_json(e, "segment");
        if (pair.size() != 2) throw std::invalid_argument("segment must be [lo,hi]");
        segs.emplace_back(pair[0], pair[1]);
    }
    return MultisegmentZ(std::move(segs));
}

inline StandardWord word_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tops") || !j.contains("bottoms"))
        throw std::invalid_argument("word needs tops and bottoms");
    return StandardWord(int_list_from_json(j["tops"], "tops"),
                        int_list_from_json(j["bottoms"], "bottoms"));
}

inline DrinfeldRoots drinfeld_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("roots"))
        throw std::invalid_argument("drinfeld roots need n and roots");
    int n = j["n"].get<int>();
    std::vector<std::vector<int>> roots;
    for (const auto& m : j["roots"]) roots.push_back(int_list_from_json(m, "roots"));
    return DrinfeldRoots(n, std::move(roots));
}

} // namespace segkit
