#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "segkit/config.hpp"
#include "segkit/json_io.hpp"
#include "segkit/verify.hpp"

namespace {

using namespace segkit;

using KleshchevPair = std::pair<Multipartition, Charge>;
using Value =
    std::variant<StandardWord, MultisegmentZ, KleshchevPair, DrinfeldRoots, SkewShape, SegmentSeq>;

Json value_to_json(const Value& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, KleshchevPair>)
                return Json{{"multipartition", to_json(x.first)}, {"charge", to_json(x.second)}};
            else
                return to_json(x);
        },
        v);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::pair<int, int> parse_window(const std::string& text) {
    auto dots = text.find("..", 1); // skip a leading minus sign
    if (dots == std::string::npos) throw std::invalid_argument("window must look like lo..hi");
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("window must have lo <= hi");
    return {lo, hi};
}

Json output_header(const std::string& verb) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["tool"] = kToolVersion;
    out["verb"] = verb;
    return out;
}

void emit(const Json& out) { std::cout << out.dump(2) << "\n"; }

// --- conversion graph -------------------------------------------------------

struct Edge {
    std::string name;
    std::string from;
    std::string to;
    std::function<Value(const Value&, int n)> apply;
    // round-trip back to the input, when the map has an inverse
    std::function<bool(const Value& before, const Value& after, int n)> roundtrip;
};

int default_n(const Value& v) {
    if (const auto* ms = std::get_if<MultisegmentZ>(&v)) return std::max(1, ms->total_length());
    if (const auto* kp = std::get_if<KleshchevPair>(&v)) return std::max(1, kp->first.size());
    if (const auto* s = std::get_if<SkewShape>(&v)) return std::max(1, s->size());
    return 1;
}

std::vector<Edge> conversion_edges() {
    std::vector<Edge> edges;
    edges.push_back({"flat", "word", "multisegment",
                     [](const Value& v, int) -> Value {
                         return word_to_multisegment(std::get<StandardWord>(v));
                     },
                     [](const Value& before, const Value& after, int) {
                         return multisegment_to_word(std::get<MultisegmentZ>(after)) ==
                                std::get<StandardWord>(before);
                     }});
    edges.push_back({"unflat", "multisegment", "word",
                     [](const Value& v, int) -> Value {
                         return multisegment_to_word(std::get<MultisegmentZ>(v));
                     },
                     [](const Value& before, const Value& after, int) {
                         return word_to_multisegment(std::get<StandardWord>(after)) ==
                                std::get<MultisegmentZ>(before);
                     }});
    edges.push_back({"eta", "multisegment", "kleshchev",
                     [](const Value& v, int) -> Value {
                         auto [gamma, f] = eta(std::get<MultisegmentZ>(v));
                         return KleshchevPair{gamma, f};
                     },
                     [](const Value& before, const Value& after, int) {
                         const auto& [gamma, f] = std::get<KleshchevPair>(after);
                         return word_to_multisegment(theta(gamma, f)) ==
                                std::get<MultisegmentZ>(before);
                     }});
    edges.push_back({"theta", "kleshchev", "word",
                     [](const Value& v, int) -> Value {
                         const auto& [gamma, f] = std::get<KleshchevPair>(v);
                         return theta(gamma, f);
                     },
                     [](const Value& before, const Value& after, int) {
                         auto [gamma, f] =
                             eta(word_to_multisegment(std::get<StandardWord>(after)));
                         return KleshchevPair{gamma, f} == std::get<KleshchevPair>(before);
                     }});
    edges.push_back({"partial", "multisegment", "drinfeld",
                     [](const Value& v, int n) -> Value {
                         return partial_map(std::get<MultisegmentZ>(v), n);
                     },
                     [](const Value& before, const Value& after, int) {
                         return partial_inverse(std::get<DrinfeldRoots>(after)) ==
                                std::get<MultisegmentZ>(before);
                     }});
    edges.push_back({"partial-inverse", "drinfeld", "multisegment",
                     [](const Value& v, int) -> Value {
                         return partial_inverse(std::get<DrinfeldRoots>(v));
                     },
                     [](const Value& before, const Value& after, int) {
                         const auto& q = std::get<DrinfeldRoots>(before);
                         return partial_map(std::get<MultisegmentZ>(after), q.n) == q;
                     }});
    edges.push_back({"row-residues", "kleshchev", "drinfeld",
                     [](const Value& v, int n) -> Value {
                         const auto& [mp, f] = std::get<KleshchevPair>(v);
                         return drinfeld_from_multipartition(mp, f, n);
                     },
                     nullptr});
    edges.push_back({"column-segments", "kleshchev", "column-segments",
                     [](const Value& v, int) -> Value {
                         const auto& [mp, f] = std::get<KleshchevPair>(v);
                         return column_residual_segments(mp, f);
                     },
                     nullptr});
    edges.push_back({"row-segments", "kleshchev", "row-segments",
                     [](const Value& v, int) -> Value {
                         const auto& [mp, f] = std::get<KleshchevPair>(v);
                         return row_residual_segments(mp, f);
                     },
                     nullptr});
    edges.push_back({"skew-segments", "skew", "multisegment",
                     [](const Value& v, int) -> Value {
                         return MultisegmentZ(skew_multisegment(std::get<SkewShape>(v)));
                     },
                     nullptr});
    edges.push_back({"skew-drinfeld", "skew", "drinfeld",
                     [](const Value& v, int n) -> Value {
                         return skew_drinfeld(std::get<SkewShape>(v), n);
                     },
                     nullptr});
    return edges;
}

std::vector<const Edge*> find_path(const std::vector<Edge>& edges, const std::string& from,
                                   const std::string& to) {
    // breadth-first over kinds; edge declaration order breaks ties
    std::vector<std::string> frontier{from};
    std::map<std::string, std::vector<const Edge*>> paths{{from, {}}};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& kind : frontier)
            for (const auto& e : edges) {
                if (e.from != kind || paths.count(e.to)) continue;
                auto path = paths[kind];
                path.push_back(&e);
                paths[e.to] = path;
                next.push_back(e.to);
            }
        if (paths.count(to)) return paths[to];
        frontier = std::move(next);
    }
    throw std::invalid_argument("no conversion path from " + from + " to " + to);
}

Value parse_payload(const std::string& kind, const Json& j) {
    if (kind == "word") return word_from_json(j);
    if (kind == "multisegment") return multisegment_from_json(j);
    if (kind == "kleshchev") {
        if (!j.is_object() || !j.contains("multipartition") || !j.contains("charge"))
            throw std::invalid_argument("kleshchev payload needs multipartition and charge");
        return KleshchevPair{multipartition_from_json(j["multipartition"]),
                             charge_from_json(j["charge"])};
    }
    if (kind == "drinfeld") return drinfeld_from_json(j);
    if (kind == "skew") return skew_from_json(j);
    throw std::invalid_argument("unknown source kind " + kind);
}

// --- subcommand drivers -------------------------------------------------------

struct EnumerateArgs {
    std::string kind;
    std::string f_text;
    int r = -1;
    std::string window_text;
    int outer_max = -1;
};

Json run_enumerate(const EnumerateArgs& a, bool with_items) {
    Json params = Json::object();
    Json items = Json::array();
    if (a.kind == "kleshchev" || a.kind == "standard-kleshchev") {
        if (a.f_text.empty() || a.r < 0)
            throw std::invalid_argument(a.kind + " enumeration needs --f and --r");
        Charge f(parse_int_list(a.f_text));
        params["f"] = to_json(f);
        params["r"] = a.r;
        auto list = a.kind == "kleshchev" ? enumerate_kleshchev(f, a.r)
                                          : enumerate_standard_kleshchev(f, a.r);
        for (const auto& mp : list) items.push_back(to_json(mp));
    } else if (a.kind == "multisegments" || a.kind == "standard-words") {
        if (a.r < 0 || a.window_text.empty())
            throw std::invalid_argument(a.kind +
                                        " enumeration needs --r and --window (the set is infinite)");
        auto [lo, hi] = parse_window(a.window_text);
        params["r"] = a.r;
        params["window"] = Json::array({lo, hi});
        for (const auto& ms : enumerate_multisegments(a.r, lo, hi)) {
            if (a.kind == "multisegments")
                items.push_back(to_json(ms));
            else
                items.push_back(to_json(multisegment_to_word(ms)));
        }
    } else if (a.kind == "skew-shapes") {
        if (a.outer_max < 1)
            throw std::invalid_argument("skew-shape enumeration needs --outer-max");
        params["outer_max"] = a.outer_max;
        for (const auto& s : enumerate_skew_shapes(a.outer_max)) items.push_back(to_json(s));
    } else {
        throw std::invalid_argument("unknown enumeration kind " + a.kind);
    }
    Json out = output_header(with_items ? "enumerate" : "count");
    out["kind"] = a.kind;
    out["params"] = params;
    out["count"] = items.size();
    if (with_items) out["items"] = items;
    return out;
}

struct ConvertArgs {
    std::string from;
    std::string to;
    int n = -1;
    bool trace = false;
    bool no_roundtrip = false;
};

Json run_convert(const ConvertArgs& a, const Json& payload) {
    std::vector<Edge> edges = conversion_edges();
    auto path = find_path(edges, a.from, a.to);
    if (path.empty()) throw std::invalid_argument("source and target kinds are equal");
    Value value = parse_payload(a.from, payload);
    int n = a.n > 0 ? a.n : default_n(value);

    Json provenance = Json::array();
    Json trace = Json::array();
    trace.push_back(Json{{"kind", a.from}, {"value", value_to_json(value)}});
    bool roundtrips_ok = true;
    bool any_roundtrip = false;
    for (const Edge* e : path) {
        Value next = e->apply(value, n);
        if (!a.no_roundtrip && e->roundtrip) {
            any_roundtrip = true;
            if (!e->roundtrip(value, next, n)) roundtrips_ok = false;
        }
        provenance.push_back(e->name);
        value = std::move(next);
        trace.push_back(Json{{"kind", e->to}, {"value", value_to_json(value)}});
    }
    if (!roundtrips_ok) throw std::runtime_error("round-trip verification failed");

    Json out = output_header("convert");
    out["from"] = a.from;
    out["to"] = a.to;
    out["input"] = payload;
    if (a.n > 0 || a.to == "drinfeld") out["n"] = n;
    out["provenance"] = provenance;
    out["roundtrip"] = a.no_roundtrip ? "disabled" : (any_roundtrip ? "ok" : "not-applicable");
    out["result"] = value_to_json(value);
    if (a.trace) out["trace"] = trace;
    return out;
}

struct VerifyArgs {
    std::string suite;
    std::string q0_text = "2";
    int r_max = 5;
    int outer_max = 8;
    int samples = 500;
    unsigned seed = 20240915;
    std::string lambda_text;
    int n = -1;
    int jobs = 0;
    bool timings = false;
};

Json run_verify(const VerifyArgs& a, int& exit_code) {
    Scalar q0 = parse_rational(a.q0_text);
    if (!valid_q0(q0)) throw std::invalid_argument("|q0| must avoid 0 and 1");
    DeskLimits lim = desk_limits();
    auto t0 = std::chrono::steady_clock::now();

    std::vector<Report> reports;
    auto want = [&](const char* name) { return a.suite == name || a.suite == "all"; };
    if (want("relations"))
        reports.push_back(suite_relations(q0, std::min(a.r_max + 1, lim.regular_r)));
    if (want("specht")) {
        reports.push_back(suite_cell_ideals(q0, std::min(a.r_max, lim.ideal_r)));
        reports.push_back(suite_specht(q0, std::min(a.r_max, lim.ideal_r),
                                       std::min(a.r_max, lim.sharp_r)));
    }
    if (want("jm")) {
        if (!a.lambda_text.empty()) {
            reports.push_back(jm_eigenvalue_check(Partition(parse_int_list(a.lambda_text)), q0));
        } else {
            reports.push_back(suite_jm(q0, std::min(a.r_max, lim.ideal_r),
                                       std::min(a.r_max + 1, lim.regular_r)));
        }
    }
    if (want("bijections")) reports.push_back(suite_bijections(std::min(a.r_max, 6), a.jobs));
    if (want("drinfeld")) {
        int n = a.n > 0 ? a.n : std::min(a.r_max, 6);
        reports.push_back(suite_drinfeld(std::min(a.r_max, 6), n, a.jobs));
    }
    if (want("skew")) {
        SkewSuiteOptions opt;
        opt.r_max = std::min(a.r_max, lim.skew_r);
        opt.outer_max = a.outer_max;
        opt.drinfeld_outer_max = a.outer_max;
        opt.q0s = {q0};
        opt.jobs = a.jobs;
        reports.push_back(suite_skew(opt));
        reports.push_back(suite_lr(a.outer_max, a.jobs));
    }
    if (reports.empty()) throw std::invalid_argument("unknown suite " + a.suite);

    Json out = output_header("verify");
    out["suite"] = a.suite;
    Json params = Json::object();
    params["q0"] = rational_str(q0);
    params["r_max"] = a.r_max;
    if (want("skew")) params["outer_max"] = a.outer_max;
    if (!a.lambda_text.empty()) params["lambda"] = parse_int_list(a.lambda_text);
    out["params"] = params;
    Json reps = Json::array();
    int total = 0, passed = 0;
    for (const auto& r : reports) {
        reps.push_back(to_json(r));
        for (const auto& c : r.checks) {
            ++total;
            if (c.pass) ++passed;
        }
    }
    out["reports"] = reps;
    out["summary"] = Json{{"checks", total}, {"passed", passed}, {"failed", total - passed}};
    if (a.timings)
        out["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
    exit_code = (total == passed) ? 0 : 1;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of words, multisegments, Kleshchev multipartitions and "
                 "Drinfeld roots, with Hecke-algebra verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(segkit::kToolVersion));

    EnumerateArgs ea;
    CLI::App* enumerate = app.add_subcommand("enumerate", "List objects of a given kind");
    enumerate->add_option("kind", ea.kind,
                          "kleshchev | standard-kleshchev | multisegments | standard-words | "
                          "skew-shapes")
        ->required();
    enumerate->add_option("--f", ea.f_text, "charge, comma separated (e.g. 2,0,-1)");
    enumerate->add_option("--r", ea.r, "total size");
    enumerate->add_option("--window", ea.window_text, "endpoint window lo..hi (e.g. -4..4)");
    enumerate->add_option("--outer-max", ea.outer_max, "bound on |outer| for skew shapes");

    EnumerateArgs ca = ea;
    CLI::App* count = app.add_subcommand("count", "Count objects of a given kind");
    count->add_option("kind", ca.kind, "same kinds as enumerate")->required();
    count->add_option("--f", ca.f_text, "charge, comma separated");
    count->add_option("--r", ca.r, "total size");
    count->add_option("--window", ca.window_text, "endpoint window lo..hi");
    count->add_option("--outer-max", ca.outer_max, "bound on |outer| for skew shapes");

    ConvertArgs va;
    CLI::App* convert = app.add_subcommand(
        "convert", "Convert along the correspondence chain; payload JSON on stdin");
    convert->add_option("--from", va.from, "word | multisegment | kleshchev | drinfeld | skew")
        ->required();
    convert
        ->add_option("--to", va.to,
                     "word | multisegment | kleshchev | drinfeld | column-segments | row-segments")
        ->required();
    convert->add_option("--n", va.n, "number of Drinfeld indices (default: total size)");
    convert->add_flag("--trace", va.trace, "include intermediate objects");
    convert->add_flag("--no-roundtrip", va.no_roundtrip, "skip inverse-map verification");

    VerifyArgs wa;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify
        ->add_option("suite", wa.suite,
                     "relations | specht | jm | bijections | drinfeld | skew | all")
        ->required();
    verify->add_option("--q0", wa.q0_text, "rational specialization of q (default 2)");
    verify->add_option("--r-max", wa.r_max, "size bound (default 5)");
    verify->add_option("--outer-max", wa.outer_max, "outer shape bound for skew checks");
    verify->add_option("--samples", wa.samples, "random sample count");
    verify->add_option("--seed", wa.seed, "random seed");
    verify->add_option("--lambda", wa.lambda_text, "single partition for the jm suite");
    verify->add_option("--n", wa.n, "Drinfeld index bound");
    verify->add_option("--jobs", wa.jobs, "worker pool size (default: hardware)");
    verify->add_flag("--timings", wa.timings, "include elapsed_ms in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) {
            emit(run_enumerate(ea, true));
        } else if (count->parsed()) {
            emit(run_enumerate(ca, false));
        } else if (convert->parsed()) {
            segkit::Json payload;
            try {
                payload = segkit::Json::parse(std::cin);
            } catch (const std::exception& e) {
                throw std::invalid_argument(std::string("payload is not valid JSON: ") + e.what());
            }
            emit(run_convert(va, payload));
        } else if (verify->parsed()) {
            int exit_code = 0;
            emit(run_verify(wa, exit_code));
            return exit_code;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
