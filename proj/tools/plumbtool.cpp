// plumbtool: command-line front end for the plumbing toolkit.
//
// All computation lives in the core library; this file only parses arguments,
// moves bytes, and maps errors to exit codes (0 ok, 1 claim failure, 2 usage
// or parse error).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plumb/canonical.hpp"
#include "plumb/families.hpp"
#include "plumb/graph.hpp"
#include "plumb/io.hpp"
#include "plumb/matrix.hpp"
#include "plumb/moves.hpp"
#include "plumb/seifert.hpp"

namespace {

using nlohmann::json;

json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());  // beyond int64: decimal string
}

json invariants_json(const plumb::PlumbingGraph& g) {
    mpz_class det = plumb::determinant(g);
    plumb::SignatureTriple sig = plumb::signature(g);
    json out;
    out["det"] = mpz_to_json(det);
    out["signature"] = {sig.n_plus, sig.n_minus, sig.n_zero};
    out["unimodular"] = plumb::is_unimodular(g);
    out["negative_definite"] = plumb::is_negative_definite(g);
    out["homology_sphere"] = plumb::is_homology_sphere(g);
    return out;
}

json graph_json(const plumb::PlumbingGraph& g) {
    return json::parse(plumb::serialize_graph_json(g));
}

std::string emit_graph(const plumb::PlumbingGraph& g, const std::string& format) {
    if (format == "text") return plumb::serialize_graph_text(g);
    return plumb::serialize_graph_json(g) + "\n";
}

json move_json(const plumb::MoveRecord& m) {
    json out;
    out["kind"] = plumb::move_kind_name(m.kind);
    out["site"] = m.site;
    json deltas = json::object();
    for (const auto& [v, d] : m.weight_deltas) deltas[std::to_string(v)] = d;
    out["weight_deltas"] = deltas;
    return out;
}

bool parse_range(const std::string& s, std::int64_t& lo, std::int64_t& hi) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoll(s);
        } else {
            lo = std::stoll(s.substr(0, pos));
            hi = std::stoll(s.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plumbtool: plumbed 3-manifold toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string file1, file2;
    auto add_graph_cmd = [&](const char* name, const char* desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("file", file1, "graph file ('-' for stdin)")->required();
        return c;
    };

    CLI::App* cmd_det = add_graph_cmd("det", "Intersection-form invariants");
    CLI::App* cmd_sig = add_graph_cmd("sig", "Signature (same output as det)");
    CLI::App* cmd_ishs = add_graph_cmd("is-hs", "Homology-sphere predicate");
    CLI::App* cmd_norm = add_graph_cmd("normalize", "Reduce to normal form");
    CLI::App* cmd_obst = add_graph_cmd("obstruct", "Central-weight obstruction");
    CLI::App* cmd_sd = add_graph_cmd("seifert-data", "Seifert data of a star");

    CLI::App* cmd_cmp = app.add_subcommand("compare", "Same-boundary comparison");
    cmd_cmp->add_option("file1", file1, "first graph")->required();
    cmd_cmp->add_option("file2", file2, "second graph")->required();

    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate a family member");
    std::string gen_family;
    std::vector<std::int64_t> gen_params;
    cmd_gen->add_option("family", gen_family,
                        "brieskorn | x | xprime | xprime2 | w | casson-harer-a | "
                        "casson-harer-b | sigma-2-3-13 | sigma-2-3-25")
        ->required();
    cmd_gen->add_option("params", gen_params, "integer parameters");

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run the claim-verification harness");
    int verify_bound = 10;
    cmd_verify->add_option("--bound", verify_bound, "parameter range bound")
        ->check(CLI::PositiveNumber);

    CLI::App* cmd_scan = app.add_subcommand("scan", "Parameter scan (CSV)");
    std::string scan_family;
    std::string a_range = "1..8", b_range = "1..8";
    cmd_scan->add_option("family", scan_family, "family to scan")->required();
    cmd_scan->add_option("--a", a_range, "a range, e.g. 1..8");
    cmd_scan->add_option("--b", b_range, "b range, e.g. 1..8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_det->parsed() || cmd_sig->parsed() || cmd_ishs->parsed()) {
            plumb::PlumbingGraph g = plumb::read_graph_file(file1);
            std::cout << invariants_json(g).dump() << "\n";
            return 0;
        }
        if (cmd_norm->parsed()) {
            plumb::PlumbingGraph g = plumb::read_graph_file(file1);
            plumb::ReductionReport rep = plumb::reduce_to_normal_form(g);
            if (format == "text") {
                std::cout << plumb::serialize_graph_text(rep.final_graph);
                return 0;
            }
            json out;
            out["graph"] = graph_json(rep.final_graph);
            out["moves"] = json::array();
            for (const auto& m : rep.moves) out["moves"].push_back(move_json(m));
            out["reached_fixed_point"] = rep.reached_fixed_point;
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (cmd_cmp->parsed()) {
            plumb::PlumbingGraph g1 = plumb::read_graph_file(file1);
            plumb::PlumbingGraph g2 = plumb::read_graph_file(file2);
            plumb::PlumbingGraph r1 = plumb::reduce_to_normal_form(g1).final_graph;
            plumb::PlumbingGraph r2 = plumb::reduce_to_normal_form(g2).final_graph;
            json out;
            out["verdict"] = plumb::verdict_name(plumb::same_boundary(g1, g2));
            out["reduced"] = {graph_json(r1), graph_json(r2)};
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (cmd_obst->parsed()) {
            plumb::PlumbingGraph g = plumb::read_graph_file(file1);
            json out;
            out["verdict"] = plumb::obstruction_name(plumb::central_weight_obstruction(g));
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (cmd_sd->parsed()) {
            plumb::PlumbingGraph g = plumb::read_graph_file(file1);
            plumb::SeifertData sd = plumb::seifert_data_from_star(g);
            json out;
            out["b0"] = sd.b0;
            out["arms"] = json::array();
            for (const auto& [a, b] : sd.arms) out["arms"].push_back({a, b});
            out["e"] = sd.e.get_str();
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (cmd_gen->parsed()) {
            plumb::PlumbingGraph g;
            if (gen_family == "brieskorn") {
                if (gen_params.size() != 3)
                    throw plumb::DomainError("gen brieskorn needs exactly 3 parameters");
                g = plumb::brieskorn_plumbing(gen_params[0], gen_params[1],
                                              gen_params[2]);
            } else {
                auto fam = plumb::family_from_name(gen_family);
                if (!fam)
                    throw plumb::DomainError("unknown family: " + gen_family);
                g = plumb::generate({*fam, gen_params});
            }
            std::cout << emit_graph(g, format);
            return 0;
        }
        if (cmd_verify->parsed()) {
            std::vector<plumb::ClaimReport> reports = plumb::verify_claims(verify_bound);
            json out = json::array();
            bool all_pass = true;
            for (const auto& r : reports) {
                json jr;
                jr["claim"] = r.claim_id;
                jr["range"] = r.range_checked;
                jr["pass"] = r.pass;
                if (!r.witness.empty()) jr["witness"] = r.witness;
                if (!r.detail.empty()) jr["detail"] = r.detail;
                out.push_back(jr);
                all_pass = all_pass && r.pass;
            }
            std::cout << out.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }
        if (cmd_scan->parsed()) {
            if (scan_family != "xprime")
                throw plumb::DomainError("scan supports the 'xprime' family");
            std::int64_t alo, ahi, blo, bhi;
            if (!parse_range(a_range, alo, ahi) || !parse_range(b_range, blo, bhi))
                throw plumb::DomainError("bad range (want lo..hi with lo >= 1)");
            std::cout << "a,b,det,is_hs\n";
            for (std::int64_t a = alo; a <= ahi; ++a)
                for (std::int64_t b = blo; b <= bhi; ++b) {
                    plumb::PlumbingGraph g =
                        plumb::generate({plumb::Family::XPrimeTwoParam, {a, b}});
                    mpz_class det = plumb::determinant(g);
                    bool hs = det == 1 || det == -1;
                    std::cout << a << ',' << b << ',' << det.get_str() << ','
                              << (hs ? "true" : "false") << "\n";
                }
            return 0;
        }
    } catch (const plumb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const plumb::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const plumb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
