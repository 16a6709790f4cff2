#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ogsat/certs.hpp"
#include "ogsat/classify.hpp"
#include "ogsat/embed.hpp"
#include "ogsat/families.hpp"
#include "ogsat/saturate.hpp"
#include "ogsat/search.hpp"

#include <unistd.h>

namespace ogsat::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Style {
    bool on = false;
    std::string good(const std::string& s) const { return on ? "\033[32m" + s + "\033[0m" : s; }
    std::string bad(const std::string& s) const { return on ? "\033[31m" + s + "\033[0m" : s; }
    std::string bold(const std::string& s) const { return on ? "\033[1m" + s + "\033[0m" : s; }
};

Style style_for(std::ostream& out) {
    Style st;
    st.on = (&out == &std::cout) && isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
    return st;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParsedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void emit(const std::string& text, const std::string& out_path, std::ostream& out,
          bool json = false) {
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
        if (!json) return;
    }
    if (json)
        out << nlohmann::json{{"og", text}}.dump() << "\n";
    else if (out_path.empty())
        out << text;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        out.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad integer list: " + s);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

nlohmann::json verdict_to_json(const Verdict& v) { return nlohmann::json::parse(verdict_json(v)); }

nlohmann::json report_to_json(const VerifierReport& r) { return nlohmann::json::parse(report_json(r)); }

void print_verdict(std::ostream& out, const Style& st, const std::string& label, const Verdict& v) {
    out << label << ": " << st.bold(to_string(v.status));
    if (!v.rules.empty()) {
        out << "  [";
        for (size_t i = 0; i < v.rules.size(); i++) out << (i ? ", " : "") << v.rules[i].id;
        out << "]";
    }
    out << "\n";
}

int cmd_gen(const std::string& family, const std::string& params, bool cyclic,
            const std::string& out_path, bool json, std::ostream& out) {
    std::string text;
    if (family == "gamma-linked") {
        text = serialize(linked_matching(LinkedMatchingSpec(parse_int_list(params))));
    } else {
        const int k = std::stoi(params);
        if (family == "lk")
            text = cyclic ? serialize(consecutive_matching_cyclic(k)) : serialize(consecutive_matching(k));
        else if (family == "gamma")
            text = serialize(crossing_chain(k));
        else if (family == "xk")
            text = serialize(enclosed_matching(k));
        else if (family == "complete")
            text = cyclic ? serialize(complete_graph_cyclic(k)) : serialize(complete_graph(k));
        else
            throw std::invalid_argument("unknown family: " + family +
                                        " (expected lk, gamma, gamma-linked, xk, complete)");
    }
    emit(text, out_path, out, json);
    return kOk;
}

int cmd_contains(const std::string& host_path, const std::string& pattern_path, bool json,
                 std::ostream& out) {
    const auto host = load_graph(host_path);
    const auto pattern = load_graph(pattern_path);
    if (host.index() != pattern.index())
        throw std::invalid_argument("host and pattern must have the same order kind");

    std::optional<Embedding> emb;
    if (std::holds_alternative<OrderedGraph>(host))
        emb = contains_ordered(std::get<OrderedGraph>(host), std::get<OrderedGraph>(pattern));
    else
        emb = contains_cyclic(std::get<CyclicGraph>(host), std::get<CyclicGraph>(pattern));

    if (json) {
        nlohmann::json j;
        j["contains"] = emb.has_value();
        if (emb) j["embedding"] = emb->map;
        out << j.dump() << "\n";
    } else if (emb) {
        out << "contains: yes\nembedding:";
        for (int v : emb->map) out << " " << v;
        out << "\n";
    } else {
        out << "contains: no\n";
    }
    return emb ? kOk : kFalse;
}

int cmd_classify(const std::string& path, const std::string& certs_dir, bool json, std::ostream& out) {
    const auto g = load_graph(path);
    CertificateStore store;
    if (!certs_dir.empty()) store.load_directory(certs_dir);
    const Style st = style_for(out);

    auto edges_json = [](const std::vector<Edge>& es) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& e : es) a.push_back({e.u, e.v});
        return a;
    };
    auto print_edges = [&](const char* label, const std::vector<Edge>& es) {
        out << label << ":";
        for (const auto& e : es) out << " (" << e.u << "," << e.v << ")";
        out << "\n";
    };

    if (std::holds_alternative<OrderedGraph>(g)) {
        const auto& og = std::get<OrderedGraph>(g);
        const auto mins = minedges(og);
        const auto sups = superedges(og);
        const int chrom = interval_chromatic_number(og);
        const auto sep = is_separable(og);
        const auto nest = is_nested(og);
        const auto sat = verdict_ordered(og, &store);
        const auto ssat = ssat_verdict_ordered(og);

        if (json) {
            nlohmann::json j;
            j["kind"] = "ordered";
            j["n"] = og.n;
            j["edges"] = edges_json(og.edges);
            j["minedges"] = edges_json(mins);
            j["superedges"] = edges_json(sups);
            j["interval_chromatic_number"] = chrom;
            j["separable"] = sep ? nlohmann::json{{"cut", sep->cut}} : nlohmann::json(nullptr);
            j["nested"] = nest ? nlohmann::json{{"outer", edges_json(nest->outer)},
                                                {"inner", edges_json(nest->inner)}}
                               : nlohmann::json(nullptr);
            j["sat_verdict"] = verdict_to_json(sat);
            j["ssat_verdict"] = verdict_to_json(ssat);
            out << j.dump() << "\n";
        } else {
            out << "ordered graph, n=" << og.n << ", " << og.edges.size() << " edges\n";
            print_edges("minedges", mins);
            print_edges("superedges", sups);
            out << "interval chromatic number: " << chrom << "\n";
            out << "separable: " << (sep ? "cut after " + std::to_string(sep->cut) : "no") << "\n";
            out << "nested: " << (nest ? "yes" : "no") << "\n";
            print_verdict(out, st, "saturation", sat);
            print_verdict(out, st, "semisaturation", ssat);
        }
    } else {
        const auto& cg = std::get<CyclicGraph>(g);
        const auto mins = cyclic_minedges(cg);
        const auto bis = bisuperedges(cg);
        const auto sat = verdict_cyclic(cg, &store);
        const auto ssat = ssat_verdict_cyclic(cg);

        if (json) {
            nlohmann::json j;
            j["kind"] = "cyclic";
            j["n"] = cg.n;
            j["edges"] = edges_json(cg.edges);
            j["cyclic_minedges"] = edges_json(mins);
            j["bisuperedges"] = edges_json(bis);
            j["sat_verdict"] = verdict_to_json(sat);
            j["ssat_verdict"] = verdict_to_json(ssat);
            out << j.dump() << "\n";
        } else {
            out << "cyclic graph, n=" << cg.n << ", " << cg.edges.size() << " edges\n";
            print_edges("cyclic minedges", mins);
            print_edges("bisuperedges", bis);
            print_verdict(out, st, "saturation", sat);
            print_verdict(out, st, "semisaturation", ssat);
        }
    }
    return kOk;
}

int cmd_verify_host(const std::string& host_path, const std::string& pattern_path,
                    const std::string& mode, bool json, std::ostream& out) {
    const auto host = load_graph(host_path);
    const auto pattern = load_graph(pattern_path);
    if (host.index() != pattern.index())
        throw std::invalid_argument("host and pattern must have the same order kind");

    VerifierReport rep;
    if (std::holds_alternative<OrderedGraph>(host)) {
        const auto& h = std::get<OrderedGraph>(host);
        const auto& p = std::get<OrderedGraph>(pattern);
        rep = mode == "sat" ? is_saturating(h, p) : is_semisaturating(h, p);
    } else {
        const auto& h = std::get<CyclicGraph>(host);
        const auto& p = std::get<CyclicGraph>(pattern);
        rep = mode == "sat" ? is_saturating(h, p) : is_semisaturating(h, p);
    }

    const Style st = style_for(out);
    if (json) {
        out << report_to_json(rep).dump() << "\n";
    } else {
        out << (mode == "sat" ? "saturating: " : "semisaturating: ")
            << (rep.ok ? st.good("yes") : st.bad("no")) << " (" << rep.edge_count << " edges)\n";
        if (rep.failing_edge)
            out << "failing edge: (" << rep.failing_edge->u << "," << rep.failing_edge->v << ")\n";
        if (rep.embedding) {
            out << "pattern embedding:";
            for (int v : rep.embedding->map) out << " " << v;
            out << "\n";
        }
    }
    return rep.ok ? kOk : kFalse;
}

int cmd_verify_witness(const std::string& witness_path, const std::string& pattern_path, bool matching,
                       const std::string& emit_cert, bool json, std::ostream& out) {
    const auto w = load_graph(witness_path);
    const auto p = load_graph(pattern_path);
    if (w.index() != p.index())
        throw std::invalid_argument("witness and pattern must have the same order kind");

    bool ok = false;
    int anchor = 0;
    if (std::holds_alternative<OrderedGraph>(w)) {
        auto cert = is_witness(std::get<OrderedGraph>(w), std::get<OrderedGraph>(p), matching);
        if (cert) {
            ok = true;
            anchor = cert->isolated_anchor;
            if (!emit_cert.empty()) save_certificate(emit_cert, *cert);
        }
    } else {
        auto cert = is_witness(std::get<CyclicGraph>(w), std::get<CyclicGraph>(p), matching);
        if (cert) {
            ok = true;
            anchor = cert->isolated_anchor;
            if (!emit_cert.empty()) save_certificate(emit_cert, *cert);
        }
    }

    const Style st = style_for(out);
    if (json) {
        nlohmann::json j;
        j["witness"] = ok;
        if (ok) j["anchor"] = anchor;
        out << j.dump() << "\n";
    } else {
        out << "witness: " << (ok ? st.good("yes") : st.bad("no"));
        if (ok) out << " (anchor " << anchor << ")";
        out << "\n";
    }
    return ok ? kOk : kFalse;
}

int cmd_construct(const std::string& kind, const std::string& pattern_path, int n,
                  const std::string& out_path, bool json, std::ostream& out) {
    const auto g = load_graph(pattern_path);
    std::string text;
    if (kind == "linear") {
        if (!std::holds_alternative<OrderedGraph>(g))
            throw std::invalid_argument("construct linear expects an ordered pattern");
        text = serialize(linear_host(std::get<OrderedGraph>(g), n));
    } else if (kind == "cyclic") {
        if (!std::holds_alternative<CyclicGraph>(g))
            throw std::invalid_argument("construct cyclic expects a cyclic pattern");
        text = serialize(cyclic_linear_host(std::get<CyclicGraph>(g), n));
    } else {
        if (std::holds_alternative<OrderedGraph>(g))
            text = serialize(semisat_host(std::get<OrderedGraph>(g), n));
        else
            text = serialize(semisat_host_cyclic(std::get<CyclicGraph>(g), n));
    }
    emit(text, out_path, out, json);
    return kOk;
}

int cmd_sat_exact(const std::string& pattern_path, int n, bool ssat, std::uint64_t max_nodes,
                  int threads, const std::string& host_out, bool json, std::ostream& out) {
    const auto g = load_graph(pattern_path);
    ExactOptions opts;
    opts.max_nodes = max_nodes;
    opts.threads = threads;

    bool found = false, exhausted = false;
    int k = -1;
    std::uint64_t nodes = 0;
    std::string host_text;
    if (std::holds_alternative<OrderedGraph>(g)) {
        auto r = ssat ? exact_ssat(std::get<OrderedGraph>(g), n, opts)
                      : exact_sat(std::get<OrderedGraph>(g), n, opts);
        found = r.found;
        exhausted = r.exhausted;
        k = r.k;
        nodes = r.nodes;
        if (r.found) host_text = serialize(r.host);
    } else {
        auto r = ssat ? exact_ssat(std::get<CyclicGraph>(g), n, opts)
                      : exact_sat(std::get<CyclicGraph>(g), n, opts);
        found = r.found;
        exhausted = r.exhausted;
        k = r.k;
        nodes = r.nodes;
        if (r.found) host_text = serialize(r.host);
    }

    if (json) {
        nlohmann::json j;
        j["found"] = found;
        j["exhausted"] = exhausted;
        j["nodes"] = nodes;
        if (found) {
            j["k"] = k;
            j["host"] = host_text;
        }
        out << j.dump() << "\n";
    } else if (found) {
        out << k << "\n";
    } else {
        out << "budget exhausted after " << nodes << " nodes\n";
    }
    if (found && !host_out.empty()) emit(host_text, host_out, out);
    return found ? kOk : kBudget;
}

int cmd_search_witness(const std::string& pattern_path, const std::string& strategy, int max_vertices,
                       int max_edges, std::uint64_t max_nodes, int threads, const std::string& out_base,
                       bool json, std::ostream& out) {
    const auto g = load_graph(pattern_path);
    if (!std::holds_alternative<OrderedGraph>(g))
        throw std::invalid_argument("search-witness expects an ordered pattern");

    SearchBudget budget;
    budget.max_vertices = max_vertices;
    budget.max_edges = max_edges;
    budget.max_nodes = max_nodes;
    budget.strategy = strategy == "full" ? SearchStrategy::Full : SearchStrategy::XShapeTemplate;

    const auto res = search_witness(std::get<OrderedGraph>(g), budget, threads);
    const Style st = style_for(out);

    if (json) {
        nlohmann::json j;
        j["found"] = res.certificate.has_value();
        j["exhausted"] = res.exhausted;
        j["nodes"] = res.nodes;
        if (res.certificate) {
            j["witness"] = serialize(res.certificate->witness);
            j["anchor"] = res.certificate->isolated_anchor;
            j["matching_mode"] = res.certificate->matching_mode;
        }
        out << j.dump() << "\n";
    } else if (res.certificate) {
        out << st.good("witness found") << ": n=" << res.certificate->witness.n << ", "
            << res.certificate->witness.edges.size() << " edges, anchor "
            << res.certificate->isolated_anchor << " (" << res.nodes << " nodes)\n";
    } else {
        out << st.bad(res.exhausted ? "budget exhausted" : "no witness within the caps") << " ("
            << res.nodes << " nodes)\n";
    }

    if (res.certificate && !out_base.empty()) save_certificate(out_base, *res.certificate);
    if (res.certificate) return kOk;
    return res.exhausted ? kBudget : kFalse;
}

int cmd_blowup(const std::string& cert_path, int n, bool saturate_after, const std::string& out_path,
               bool json, std::ostream& out) {
    const auto cert = load_certificate(cert_path);
    std::string text;
    if (std::holds_alternative<OrderedCertificate>(cert)) {
        const auto& c = std::get<OrderedCertificate>(cert);
        OrderedGraph h = blowup(c, n);
        if (saturate_after) h = greedy_saturate(h, c.pattern);
        text = serialize(h);
    } else {
        const auto& c = std::get<CyclicCertificate>(cert);
        CyclicGraph h = blowup(c, n);
        if (saturate_after) h = greedy_saturate(h, c.pattern);
        text = serialize(h);
    }
    emit(text, out_path, out, json);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"saturation toolkit for ordered and cyclically ordered graphs"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    // gen
    std::string gen_family, gen_params, gen_out;
    bool gen_cyclic = false, gen_json = false;
    auto* gen = app.add_subcommand("gen", "generate a family graph as .og");
    gen->add_option("family", gen_family, "lk | gamma | gamma-linked | xk | complete")->required();
    gen->add_option("params", gen_params, "k, or comma list m1,...,mk")->required();
    gen->add_flag("--cyclic", gen_cyclic, "cyclic vertex order (lk, complete)");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");
    gen->add_flag("--json", gen_json);

    // contains
    std::string con_host, con_pattern;
    bool con_json = false;
    auto* con = app.add_subcommand("contains", "order-preserving containment");
    con->add_option("host", con_host)->required();
    con->add_option("pattern", con_pattern)->required();
    con->add_flag("--json", con_json);

    // classify
    std::string cls_path, cls_certs;
    bool cls_json = false;
    auto* cls = app.add_subcommand("classify", "structural predicates and verdicts");
    cls->add_option("graph", cls_path)->required();
    cls->add_option("--certs", cls_certs, "directory of witness certificates");
    cls->add_flag("--json", cls_json);

    // verify-host
    std::string vh_host, vh_pattern, vh_mode;
    bool vh_json = false;
    auto* vh = app.add_subcommand("verify-host", "check a saturating or semisaturating host");
    vh->add_option("host", vh_host)->required();
    vh->add_option("pattern", vh_pattern)->required();
    vh->add_option("--mode", vh_mode, "sat | ssat")->required()->check(CLI::IsMember({"sat", "ssat"}));
    vh->add_flag("--json", vh_json);

    // verify-witness
    std::string vw_witness, vw_pattern, vw_emit;
    bool vw_matching = false, vw_json = false;
    auto* vw = app.add_subcommand("verify-witness", "check a witness graph");
    vw->add_option("witness", vw_witness)->required();
    vw->add_option("pattern", vw_pattern)->required();
    vw->add_flag("--matching", vw_matching, "one isolated vertex suffices (matching patterns)");
    vw->add_option("--emit-cert", vw_emit, "write <base>.og and <base>.json on success");
    vw->add_flag("--json", vw_json);

    // construct
    std::string co_kind, co_pattern, co_out;
    int co_n = 0;
    bool co_json = false;
    auto* co = app.add_subcommand("construct", "build a host from the pattern");
    co->add_option("kind", co_kind, "linear | cyclic | ssat")
        ->required()
        ->check(CLI::IsMember({"linear", "cyclic", "ssat"}));
    co->add_option("pattern", co_pattern)->required();
    co->add_option("--n", co_n, "host vertex count")->required();
    co->add_option("-o,--out", co_out, "output file (default stdout)");
    co->add_flag("--json", co_json);

    // sat-exact
    std::string se_pattern, se_host_out;
    int se_n = 0, se_threads = 1;
    bool se_ssat = false, se_json = false;
    std::uint64_t se_nodes = 100'000'000;
    auto* se = app.add_subcommand("sat-exact", "exact saturation number by exhaustive search");
    se->add_option("pattern", se_pattern)->required();
    se->add_option("--n", se_n, "host vertex count")->required();
    se->add_flag("--ssat", se_ssat, "semisaturation number instead");
    se->add_option("--max-nodes", se_nodes, "search node budget");
    se->add_option("--threads", se_threads, "worker count");
    se->add_option("--host-out", se_host_out, "write a minimal host to this file");
    se->add_flag("--json", se_json);

    // search-witness
    std::string sw_pattern, sw_strategy = "xshape", sw_out;
    int sw_maxv = 16, sw_maxe = 8, sw_threads = 1;
    std::uint64_t sw_nodes = 100'000'000;
    bool sw_json = false;
    auto* sw = app.add_subcommand("search-witness", "search for a bounded-saturation witness");
    sw->add_option("pattern", sw_pattern)->required();
    sw->add_option("--strategy", sw_strategy, "full | xshape")
        ->check(CLI::IsMember({"full", "xshape"}));
    sw->add_option("--max-vertices", sw_maxv, "vertex cap");
    sw->add_option("--max-edges", sw_maxe, "edge cap (full: total, xshape: extra)");
    sw->add_option("--max-nodes", sw_nodes, "search node budget");
    sw->add_option("--threads", sw_threads, "worker count");
    sw->add_option("--out", sw_out, "certificate base path");
    sw->add_flag("--json", sw_json);

    // blowup
    std::string bl_cert, bl_out;
    int bl_n = 0;
    bool bl_saturate = false, bl_json = false;
    auto* bl = app.add_subcommand("blowup", "grow a certificate witness to n vertices");
    bl->add_option("certificate", bl_cert, "path to the certificate .og")->required();
    bl->add_option("--n", bl_n, "target vertex count")->required();
    bl->add_flag("--saturate", bl_saturate, "complete greedily to a saturating host");
    bl->add_option("-o,--out", bl_out, "output file (default stdout)");
    bl->add_flag("--json", bl_json);

    std::vector<const char*> argv;
    argv.push_back("ogsat");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << kToolVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_params, gen_cyclic, gen_out, gen_json, out);
        if (con->parsed()) return cmd_contains(con_host, con_pattern, con_json, out);
        if (cls->parsed()) return cmd_classify(cls_path, cls_certs, cls_json, out);
        if (vh->parsed()) return cmd_verify_host(vh_host, vh_pattern, vh_mode, vh_json, out);
        if (vw->parsed())
            return cmd_verify_witness(vw_witness, vw_pattern, vw_matching, vw_emit, vw_json, out);
        if (co->parsed()) return cmd_construct(co_kind, co_pattern, co_n, co_out, co_json, out);
        if (se->parsed())
            return cmd_sat_exact(se_pattern, se_n, se_ssat, se_nodes, se_threads, se_host_out, se_json,
                                 out);
        if (sw->parsed())
            return cmd_search_witness(sw_pattern, sw_strategy, sw_maxv, sw_maxe, sw_nodes, sw_threads,
                                      sw_out, sw_json, out);
        if (bl->parsed()) return cmd_blowup(bl_cert, bl_n, bl_saturate, bl_out, bl_json, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "no subcommand given\n";
    return kUsage;
}

}  // namespace ogsat::cli
