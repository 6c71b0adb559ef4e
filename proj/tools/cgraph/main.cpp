// cgraph: command-line front end for the chaingraph library.
//
// Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <chaingraph/chain_graph.hpp>
#include <chaingraph/equivalence.hpp>
#include <chaingraph/gaussian_oracle.hpp>
#include <chaingraph/graph_io.hpp>
#include <chaingraph/markov_structures.hpp>
#include <chaingraph/separation.hpp>

namespace cg = chaingraph;
using json = nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::ostringstream text;
    json data = json::object();
};

std::string format_number(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

// JSON numbers carry the same 12 significant digits as the text output.
double rounded(double x) { return std::stod(format_number(x)); }

std::string braces(const cg::VertexSet& s) {
    std::string out = "{";
    for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v;
    return out + "}";
}

cg::VertexSet parse_set(const std::string& text) {
    cg::VertexSet out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto end = text.find(',', start);
        const auto item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        const bool ok = !item.empty() && std::all_of(item.begin(), item.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
        });
        if (!ok) throw UsageError("malformed vertex list '" + text + "': use comma-separated identifiers");
        out.insert(item);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

json set_json(const cg::VertexSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

json edges_json(const cg::EdgeSet& edges) {
    json out = json::array();
    for (const auto& [v, w] : edges) out.push_back({v, w});
    return out;
}

json graph_json(const cg::ChainGraph& g) {
    return {{"vertices", g.vertices()},
            {"lines", edges_json(g.lines())},
            {"arrows", edges_json(g.arrows())},
            {"listing", cg::serialize_graph(g)}};
}

json query_json(const cg::CIQuery& q) { return {{"a", set_json(q.a)}, {"b", set_json(q.b)}, {"s", set_json(q.s)}}; }

json flag_json(const cg::Flag& f) { return {{"a", f.a}, {"c", f.c}, {"b", f.b}, {"kind", cg::to_string(f.kind)}}; }

cg::Criterion parse_criterion(const std::string& s) { return s == "lwf" ? cg::Criterion::lwf : cg::Criterion::amp; }

cg::EquivalenceCriterion parse_equivalence(const std::string& s) {
    if (s == "adg") return cg::EquivalenceCriterion::adg;
    return s == "lwf" ? cg::EquivalenceCriterion::lwf : cg::EquivalenceCriterion::amp;
}

std::string clause_tag(cg::StatementSource source) {
    switch (source) {
        case cg::StatementSource::block_a: return "a";
        case cg::StatementSource::block_b: return "b";
        case cg::StatementSource::block_b_star: return "b*";
        case cg::StatementSource::block_c: return "c";
        default: return cg::to_string(source);
    }
}

void write_graph(Output& out, const cg::ChainGraph& g) {
    out.text << cg::serialize_graph(g);
    out.data["graph"] = graph_json(g);
}

// ---- subcommands -------------------------------------------------------------

void cmd_validate(Output& out, const cg::ChainGraph& g) {
    out.text << "valid chain graph: " << g.size() << " vertices, " << g.lines().size() << " lines, "
             << g.arrows().size() << " arrows\n";
    out.data["valid"] = true;
    out.data["graph"] = graph_json(g);
}

void cmd_components(Output& out, const cg::ChainGraph& g) {
    const auto cs = cg::chain_components(g);
    json comps = json::array(), dag = json::array();
    out.text << "components:\n";
    for (std::size_t t = 0; t < cs.count(); ++t) {
        out.text << "  t" << t + 1 << " " << braces(cs.components[t]) << '\n';
        comps.push_back(set_json(cs.components[t]));
    }
    out.text << "D(G):\n";
    if (cs.dag.empty()) out.text << "  (no edges)\n";
    for (const auto& [s, t] : cs.dag) {
        out.text << "  t" << s + 1 << " -> t" << t + 1 << '\n';
        dag.push_back({s, t});
    }
    out.data["components"] = comps;
    out.data["dag"] = dag;
}

void cmd_closure(Output& out, const cg::ChainGraph& g, const cg::VertexSet& a, const std::string& kind) {
    const auto result = kind == "co" ? cg::co_closure(g, a) : kind == "an" ? cg::an_closure(g, a) : cg::at_closure(g, a);
    out.text << kind << "(" << braces(a) << ") = " << braces(result) << '\n';
    out.data["kind"] = kind;
    out.data["set"] = set_json(a);
    out.data["closure"] = set_json(result);
}

void cmd_features(Output& out, const cg::ChainGraph& g) {
    auto section = [&](const char* title, const auto& items, auto to_json) {
        out.text << title << ":\n";
        if (items.empty()) out.text << "  (none)\n";
        json list = json::array();
        for (const auto& item : items) {
            out.text << "  " << cg::to_string(item) << '\n';
            list.push_back(to_json(item));
        }
        return list;
    };
    out.data["flags"] = section("flags", cg::flags(g), flag_json);
    out.data["immoralities"] = section("immoralities", cg::immoralities(g), flag_json);
    out.data["double_flags"] = section("double flags", cg::double_flags(g), [](const cg::DoubleFlag& d) {
        return json{{"a", d.a}, {"c", d.c}, {"d", d.d}, {"b", d.b}};
    });
    out.data["minimal_complexes"] = section("minimal complexes", cg::minimal_complexes(g), [](const cg::MinimalComplex& m) {
        return json{{"a", m.a}, {"path", m.path}, {"b", m.b}};
    });
}

void cmd_query(Output& out, const cg::ChainGraph& g, cg::Criterion criterion, const cg::CIQuery& q) {
    const bool sep = cg::separated(g, criterion, q);
    cg::VertexSet relevant = q.a;
    relevant.insert(q.b.begin(), q.b.end());
    relevant.insert(q.s.begin(), q.s.end());
    const auto h = cg::separation_graph(g, criterion, relevant);
    const std::string pipeline = criterion == cg::Criterion::amp ? "G[" + braces(relevant) + "]^a"
                                                                 : "G(" + braces(relevant) + ")^m";
    out.text << (sep ? "SEPARATED" : "NOT SEPARATED") << '\n'
             << "query: " << cg::to_string(q) << " (" << cg::to_string(criterion) << ")\n"
             << "graph: " << pipeline << '\n'
             << cg::serialize_graph(h);
    out.data["criterion"] = cg::to_string(criterion);
    out.data["query"] = query_json(q);
    out.data["separated"] = sep;
    out.data["pipeline"] = pipeline;
    out.data["separation_graph"] = graph_json(h);
}

void cmd_ci_list(Output& out, const cg::ChainGraph& g, cg::Criterion criterion, bool full) {
    const auto triples = cg::enumerate_triples(g, criterion, full ? cg::TripleMode::full : cg::TripleMode::pairwise);
    out.text << triples.size() << " separated triples (" << cg::to_string(criterion) << ", "
             << (full ? "full" : "pairwise") << ")\n";
    json list = json::array();
    for (const auto& q : triples) {
        out.text << cg::to_string(q) << '\n';
        list.push_back(query_json(q));
    }
    out.data["criterion"] = cg::to_string(criterion);
    out.data["mode"] = full ? "full" : "pairwise";
    out.data["triples"] = list;
}

void cmd_statements(Output& out, const cg::ChainGraph& g, cg::Criterion variant) {
    json list = json::array();
    for (const auto& st : cg::block_recursive_statements(g, variant)) {
        const auto tag = clause_tag(st.source);
        out.text << "(" << tag << ") " << cg::to_string(st.query) << '\n';
        auto item = query_json(st.query);
        item["clause"] = tag;
        list.push_back(item);
    }
    if (list.empty()) out.text << "(no nontrivial statements)\n";
    out.data["variant"] = cg::to_string(variant);
    out.data["statements"] = list;
}

void cmd_equiv(Output& out, const cg::ChainGraph& g1, const cg::ChainGraph& g2, cg::EquivalenceCriterion criterion) {
    const auto diff = cg::compare_fingerprints(g1, g2, criterion);
    out.text << (diff.empty() ? "EQUIVALENT" : "NOT EQUIVALENT") << " (" << cg::to_string(criterion) << ")\n";
    auto edges = [&](const char* label, const cg::EdgeSet& es) {
        for (const auto& [v, w] : es) out.text << label << v << " -- " << w << '\n';
        return edges_json(es);
    };
    auto features = [&](const char* label, const std::set<cg::StructuralFeature>& fs) {
        json list = json::array();
        for (const auto& f : fs) {
            out.text << label << cg::to_string(f) << '\n';
            list.push_back(cg::to_string(f));
        }
        return list;
    };
    out.data["criterion"] = cg::to_string(criterion);
    out.data["equivalent"] = diff.empty();
    out.data["difference"] = {
        {"skeleton_only_first", edges("adjacency only in first: ", diff.skeleton_only_first)},
        {"skeleton_only_second", edges("adjacency only in second: ", diff.skeleton_only_second)},
        {"features_only_first", features("differing feature (first only): ", diff.features_only_first)},
        {"features_only_second", features("differing feature (second only): ", diff.features_only_second)},
    };
}

void cmd_coincide(Output& out, const cg::ChainGraph& g) {
    const auto witness = cg::coincidence_witness(g);
    out.text << (witness ? "DIFFER" : "COINCIDE") << '\n';
    if (witness) out.text << "witness flag: " << cg::to_string(*witness) << '\n';
    out.data["coincide"] = !witness.has_value();
    out.data["witness"] = witness ? flag_json(*witness) : json(nullptr);
}

void cmd_certify(Output& out, const cg::ChainGraph& g, cg::Criterion criterion, const cg::CertificationOptions& options) {
    const auto report = cg::certify(g, criterion, options);
    auto violations = [&](const char* title, const std::vector<cg::CertificationViolation>& list, bool with_seed) {
        json items = json::array();
        out.text << title << ": " << list.size() << '\n';
        for (const auto& v : list) {
            out.text << "  " << cg::to_string(v.query) << "  origin=" << v.origin;
            if (with_seed) out.text << " seed=" << v.seed;
            out.text << " magnitude=" << format_number(v.magnitude) << '\n';
            json item = query_json(v.query);
            item["origin"] = v.origin;
            if (with_seed) item["seed"] = v.seed;
            item["magnitude"] = rounded(v.magnitude);
            items.push_back(item);
        }
        return items;
    };
    out.text << "criterion: " << cg::to_string(criterion) << '\n'
             << "seeds: " << options.seeds << " (base " << options.base_seed << ")\n"
             << "sound tolerance: " << format_number(options.sound_tol) << '\n'
             << "completeness threshold: " << format_number(options.complete_threshold) << '\n'
             << "separated triples checked: " << report.separated_triples << '\n'
             << "block statements checked: " << report.block_statements << '\n'
             << "dependent pairwise triples: " << report.dependent_pairs << '\n';
    out.data["criterion"] = cg::to_string(criterion);
    out.data["seeds"] = options.seeds;
    out.data["base_seed"] = options.base_seed;
    out.data["sound_tol"] = rounded(options.sound_tol);
    out.data["complete_threshold"] = rounded(options.complete_threshold);
    out.data["separated_triples"] = report.separated_triples;
    out.data["block_statements"] = report.block_statements;
    out.data["dependent_pairs"] = report.dependent_pairs;
    out.data["soundness_violations"] = violations("soundness violations", report.soundness_violations, true);
    out.data["completeness_failures"] = violations("completeness failures", report.completeness_failures, false);
    out.data["passed"] = report.passed();
    out.text << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

void cmd_atlas(Output& out, std::size_t n, const std::string& criterion_name) {
    const auto criterion = parse_equivalence(criterion_name);
    std::map<cg::EquivFingerprint, std::size_t> classes;
    std::size_t graphs = 0;
    cg::for_each_chain_graph(n, [&](const cg::ChainGraph& g) {
        if (criterion == cg::EquivalenceCriterion::adg && !g.is_directed()) return;
        ++graphs;
        ++classes[cg::fingerprint(g, criterion)];
    });
    std::map<std::size_t, std::size_t> histogram;
    std::vector<std::size_t> sizes;
    for (const auto& [fp, size] : classes) {
        ++histogram[size];
        sizes.push_back(size);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    out.text << "vertices: " << n << '\n'
             << "criterion: " << criterion_name << '\n'
             << "graphs: " << graphs << '\n'
             << "classes: " << classes.size() << '\n'
             << "class size  count\n";
    json hist = json::array();
    for (const auto& [size, count] : histogram) {
        out.text << std::setw(10) << size << "  " << count << '\n';
        hist.push_back({{"size", size}, {"count", count}});
    }
    out.data["n"] = n;
    out.data["criterion"] = criterion_name;
    out.data["graphs"] = graphs;
    out.data["classes"] = classes.size();
    out.data["class_sizes"] = sizes;
    out.data["histogram"] = hist;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chain graph Markov properties: LWF and AMP separation, equivalence, Gaussian oracle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cgraph 0.1.0");

    bool as_json = false;
    std::string file, file2, set_text, a_text, b_text, s_text, kind = "an", criterion_text = "amp",
                                                                 equiv_text = "amp";
    bool full = false;
    std::size_t seeds = 5, atlas_n = 3;
    std::uint64_t base_seed = 1;
    double sound_tol = 1e-9, complete_threshold = 1e-4;

    const std::vector<std::string> criteria{"lwf", "amp"};
    const std::vector<std::string> equiv_criteria{"adg", "lwf", "amp"};

    auto add = [&](const std::string& name, const std::string& help, bool takes_file = true) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", as_json, "Emit a JSON report");
        if (takes_file) sub->add_option("file", file, "Graph file")->required();
        return sub;
    };

    add("validate", "Check that a file describes a chain graph");
    add("components", "Chain components and the component graph D(G)");
    auto* closure = add("closure", "Co, An or At closure of a vertex set");
    closure->add_option("--set", set_text, "Comma-separated vertices")->required();
    closure->add_option("--kind", kind, "co, an or at")->check(CLI::IsMember({"co", "an", "at"}));
    auto* moral_cmd = add("moral", "Moral graph G(A)^m (default A = V)");
    moral_cmd->add_option("--set", set_text, "Comma-separated vertices");
    auto* augment_cmd = add("augment", "Augmented graph G[A]^a (default A = V)");
    augment_cmd->add_option("--set", set_text, "Comma-separated vertices");
    add("features", "Flags, immoralities, double flags and minimal complexes");
    auto* query = add("query", "Decide A _||_ B | S under a global Markov property");
    query->add_option("--criterion", criterion_text, "lwf or amp")->check(CLI::IsMember(criteria));
    query->add_option("--a", a_text, "Comma-separated vertices")->required();
    query->add_option("--b", b_text, "Comma-separated vertices")->required();
    query->add_option("--s", s_text, "Comma-separated vertices");
    auto* ci_list = add("ci-list", "Every separated triple");
    ci_list->add_option("--criterion", criterion_text, "lwf or amp")->check(CLI::IsMember(criteria));
    ci_list->add_flag("--full", full, "All disjoint (A, B, S) rather than vertex pairs");
    auto* statements = add("statements", "Block-recursive statements with clause tags");
    statements->add_option("--variant", criterion_text, "lwf or amp")->check(CLI::IsMember(criteria));
    auto* equiv = add("equiv", "Markov equivalence of two graphs");
    equiv->add_option("file2", file2, "Second graph file")->required();
    equiv->add_option("--criterion", equiv_text, "adg, lwf or amp")->check(CLI::IsMember(equiv_criteria));
    add("coincide", "Whether the LWF and AMP properties agree");
    auto* certify = add("certify", "Check separation against sampled Gaussian models");
    certify->add_option("--criterion", criterion_text, "lwf or amp")->check(CLI::IsMember(criteria));
    certify->add_option("--seeds", seeds, "Number of sampled models")->check(CLI::PositiveNumber);
    certify->add_option("--base-seed", base_seed, "First seed");
    certify->add_option("--sound-tol", sound_tol, "Soundness tolerance")->check(CLI::PositiveNumber);
    certify->add_option("--complete-threshold", complete_threshold, "Completeness threshold")
        ->check(CLI::PositiveNumber);
    auto* atlas = add("atlas", "Equivalence classes of all chain graphs on n labeled vertices", false);
    atlas->add_option("--n", atlas_n, "Number of vertices")->required();
    atlas->add_option("--criterion", equiv_text, "adg, lwf or amp")->check(CLI::IsMember(equiv_criteria));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    Output out;
    out.data["command"] = command;

    try {
        if (command == "atlas") {
            cmd_atlas(out, atlas_n, equiv_text);
        } else {
            const auto g = cg::read_graph_file(file);
            const auto all = g.vertex_set();
            if (command == "validate") cmd_validate(out, g);
            else if (command == "components") cmd_components(out, g);
            else if (command == "closure") cmd_closure(out, g, parse_set(set_text), kind);
            else if (command == "moral") write_graph(out, cg::moral(cg::spanned_subgraph(g, set_text.empty() ? all : parse_set(set_text))));
            else if (command == "augment") write_graph(out, cg::augmented(cg::extended_subgraph(g, set_text.empty() ? all : parse_set(set_text))));
            else if (command == "features") cmd_features(out, g);
            else if (command == "query")
                cmd_query(out, g, parse_criterion(criterion_text), {parse_set(a_text), parse_set(b_text), parse_set(s_text)});
            else if (command == "ci-list") cmd_ci_list(out, g, parse_criterion(criterion_text), full);
            else if (command == "statements") cmd_statements(out, g, parse_criterion(criterion_text));
            else if (command == "equiv") cmd_equiv(out, g, cg::read_graph_file(file2), parse_equivalence(equiv_text));
            else if (command == "coincide") cmd_coincide(out, g);
            else if (command == "certify") {
                cg::CertificationOptions options;
                options.seeds = seeds;
                options.base_seed = base_seed;
                options.sound_tol = sound_tol;
                options.complete_threshold = complete_threshold;
                cmd_certify(out, g, parse_criterion(criterion_text), options);
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const cg::Error& e) {
        if (as_json) {
            json err{{"kind", e.kind()}, {"message", e.what()}};
            if (const auto* located = dynamic_cast<const cg::LocatedError*>(&e)) err["lines"] = located->lines();
            if (const auto* parse = dynamic_cast<const cg::ParseError*>(&e)) {
                err["lines"] = std::vector<std::size_t>{parse->line()};
                err["column"] = parse->column();
            }
            std::cout << json{{"command", command}, {"error", err}}.dump(2) << '\n';
        }
        std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
        return exit_domain;
    }

    if (as_json) std::cout << out.data.dump(2) << '\n';
    else std::cout << out.text.str();
    return exit_ok;
}
