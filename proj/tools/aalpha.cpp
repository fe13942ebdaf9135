// Command-line front end: analyze digraph files, generate the named digraph
// families, evaluate spectral-radius and energy bounds, and run the
// exhaustive claim verifier.
//
// Exit codes: 0 success/certified, 1 usage error, 2 input error,
// 3 verification violations.

#include "aalpha/aalpha.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

aalpha::AlphaGrid parse_grid(const std::string& text) {
    aalpha::AlphaGrid grid;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) grid.push_back(aalpha::parse_alpha(item));
    }
    if (grid.empty()) throw std::invalid_argument("empty alpha grid");
    return grid;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

json degrees_json(const aalpha::DegreeProfile& p) {
    json avg = json::array();
    for (const auto& r : p.avg_two_out)
        avg.push_back(r ? json(aalpha::to_string(*r)) : json(nullptr));
    return {{"outdeg", p.outdeg},   {"indeg", p.indeg},   {"m", p.m},
            {"maxOut", p.max_out},  {"minOut", p.min_out}, {"maxIn", p.max_in},
            {"minIn", p.min_in},    {"twoOut", p.two_out}, {"avgTwoOut", avg}};
}

json connectivity_json(const aalpha::ConnectivityReport& c) {
    return {{"stronglyConnected", c.strongly_connected},
            {"connected", c.connected},
            {"components", c.components}};
}

json spectrum_json(const aalpha::Digraph& g, const aalpha::RadiusResult& r, double alpha) {
    json doc = {{"spectralRadius", r.lambda},
                {"iterations", r.iterations},
                {"residual", r.residual},
                {"perronVector", r.perron.empty() ? json(nullptr) : json(r.perron)}};
    if (g.order() <= aalpha::small_n_limit) {
        aalpha::Spectrum s = aalpha::eigenvalues_small(g, alpha);
        json evs = json::array();
        for (const auto& ev : s.eigenvalues) evs.push_back({ev.real(), ev.imag()});
        doc["eigenvalues"] = evs;
        doc["charPoly"] = s.char_poly;
    } else {
        doc["eigenvalues"] = nullptr;
    }
    return doc;
}

json radius_bounds_json(const aalpha::RadiusBounds& b) {
    return {{"applicable", true},
            {"lowerLemma", b.lower_lemma},
            {"boundDegrees", b.bound_degrees},
            {"boundArcsCount", b.bound_arcs_count},
            {"boundArcwise", b.bound_arcwise},
            {"boundWeighted", b.bound_weighted},
            {"boundCorollary", b.bound_corollary},
            {"weights", b.weights},
            {"spectralRadius", b.spectral_radius},
            {"equalityFlags",
             {{"degrees", b.tight_degrees},
              {"arcsCount", b.tight_arcs_count},
              {"arcwise", b.tight_arcwise},
              {"weighted", b.tight_weighted},
              {"corollary", b.tight_corollary}}},
            {"structural",
             {{"regular", b.regular},
              {"outdegreeRegular", b.outdegree_regular},
              {"outdegreeSemiregular", b.outdegree_semiregular}}}};
}

json energy_json(const aalpha::EnergyReport& e) {
    json doc = {{"alpha", e.alpha},
                {"c2", e.c2},
                {"sumOutdegSquares", e.sum_outdeg_squares},
                {"energy", e.energy}};
    doc["energyViaEigenvalues"] =
        e.energy_via_eigenvalues ? json(*e.energy_via_eigenvalues) : json(nullptr);
    doc["energyExact"] =
        e.energy_rational ? json(aalpha::to_string(*e.energy_rational)) : json(nullptr);
    return doc;
}

json bound_pair_json(const aalpha::BoundPair& p) {
    if (!p.applicable) return {{"applicable", false}};
    return {{"applicable", true}, {"lower", p.lower}, {"upper", p.upper}};
}

json energy_bounds_json(const aalpha::EnergyBounds& b) {
    return {{"connected", bound_pair_json(b.connected)},
            {"window", bound_pair_json(b.window)},
            {"complement", bound_pair_json(b.complement)},
            {"tree", bound_pair_json(b.tree)},
            {"unicyclic", bound_pair_json(b.unicyclic)}};
}

json families_json(const aalpha::Digraph& g) {
    json tags = json::array();
    for (const auto& t : aalpha::classify(g)) tags.push_back(aalpha::to_string(t));
    return tags;
}

json report_json(const aalpha::VerificationReport& r) {
    json viol = json::array();
    for (const auto& v : r.violations)
        viol.push_back({{"digraph", v.digraph}, {"alpha", v.alpha}, {"detail", v.detail}});
    return {{"claimId", r.claim_id},
            {"checked", r.checked},
            {"certified", r.certified()},
            {"violationTotal", r.violation_total},
            {"violations", viol},
            {"achieverTotal", r.achiever_total},
            {"extremalAchievers", r.extremal_achievers},
            {"findings", r.findings},
            {"elapsedSeconds", r.elapsed_seconds}};
}

int cmd_analyze(const std::string& path, const std::string& alpha_text, bool as_json) {
    const aalpha::Alpha alpha = aalpha::parse_alpha(alpha_text);
    const aalpha::Digraph g = aalpha::parse_digraph(read_input(path));
    const aalpha::DegreeProfile deg = aalpha::degree_profile(g);
    const aalpha::ConnectivityReport conn = aalpha::connectivity(g);
    const aalpha::RadiusResult rad = aalpha::spectral_radius(g, alpha.value);
    const aalpha::EnergyReport en = aalpha::energy(g, alpha);
    const aalpha::EnergyBounds eb = aalpha::energy_bounds(g, alpha.value);

    json doc;
    doc["meta"] = {{"input", path},
                   {"n", g.order()},
                   {"m", g.arc_count()},
                   {"alpha", alpha.value}};
    if (alpha.has_exact) doc["meta"]["alphaExact"] = aalpha::to_string(alpha.exact);
    doc["degrees"] = degrees_json(deg);
    doc["connectivity"] = connectivity_json(conn);
    doc["spectrum"] = spectrum_json(g, rad, alpha.value);
    if (conn.strongly_connected) {
        doc["radiusBounds"] = radius_bounds_json(aalpha::bounds_report(g, alpha.value));
    } else {
        doc["radiusBounds"] = {{"applicable", false},
                               {"reason", "not applicable: not strongly connected"}};
    }
    doc["energy"] = energy_json(en);
    doc["energyBounds"] = energy_bounds_json(eb);
    doc["families"] = families_json(g);

    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "n = " << g.order() << ", m = " << g.arc_count() << ", alpha = " << alpha.value
              << "\n";
    std::cout << "strongly connected: " << (conn.strongly_connected ? "yes" : "no")
              << ", connected: " << (conn.connected ? "yes" : "no") << "\n";
    std::cout << "spectral radius: " << rad.lambda << " (residual " << rad.residual << ")\n";
    if (doc["spectrum"].contains("eigenvalues") && !doc["spectrum"]["eigenvalues"].is_null()) {
        std::cout << "eigenvalues:";
        for (const auto& ev : doc["spectrum"]["eigenvalues"])
            std::cout << " " << ev[0].get<double>() << (ev[1].get<double>() < 0 ? "" : "+")
                      << ev[1].get<double>() << "i";
        std::cout << "\n";
    }
    if (conn.strongly_connected) {
        const auto& rb = doc["radiusBounds"];
        std::cout << "radius bounds: lemma-lower " << rb["lowerLemma"].get<double>()
                  << ", degrees " << rb["boundDegrees"].get<double>() << ", arcs "
                  << rb["boundArcsCount"].get<double>() << ", arcwise "
                  << rb["boundArcwise"].get<double>() << ", corollary "
                  << rb["boundCorollary"].get<double>() << "\n";
    } else {
        std::cout << "radius bounds: not applicable (not strongly connected)\n";
    }
    std::cout << "energy: " << en.energy;
    if (en.energy_rational) std::cout << " = " << aalpha::to_string(*en.energy_rational);
    std::cout << " (c2 = " << en.c2 << ", sum d+^2 = " << en.sum_outdeg_squares << ")\n";
    std::cout << "families:";
    for (const auto& t : doc["families"]) std::cout << " " << t.get<std::string>();
    std::cout << "\n";
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<long long>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "' expects " + std::to_string(k) +
                                        " integer parameter(s)");
    };
    aalpha::Digraph g(1);
    if (family == "cycle") {
        need(1);
        g = aalpha::make_directed_cycle(static_cast<int>(params[0]));
    } else if (family == "intree-path") {
        need(1);
        g = aalpha::make_intree_path(static_cast<int>(params[0]));
    } else if (family == "outstar") {
        need(1);
        g = aalpha::make_outstar(static_cast<int>(params[0]));
    } else if (family == "complete-symmetric") {
        need(1);
        g = aalpha::make_symmetric_complete(static_cast<int>(params[0]));
    } else if (family == "c-a-k") {
        need(2);
        g = aalpha::make_C_a_k(static_cast<int>(params[0]), static_cast<int>(params[1]));
    } else if (family == "d-member") {
        need(2);
        g = aalpha::make_D_member_path(static_cast<int>(params[0]), static_cast<int>(params[1]));
    } else {
        throw std::invalid_argument(
            "unknown family '" + family +
            "' (expected cycle, intree-path, outstar, complete-symmetric, c-a-k, d-member)");
    }
    std::cout << aalpha::serialize(g);
    return 0;
}

int cmd_bounds(const std::string& path, const std::string& alpha_text,
               const std::optional<std::string>& weights_text, bool as_json) {
    const aalpha::Alpha alpha = aalpha::parse_alpha(alpha_text);
    const aalpha::Digraph g = aalpha::parse_digraph(read_input(path));
    std::optional<std::vector<double>> weights;
    if (weights_text) {
        std::vector<double> w;
        for (const std::string& item : split_list(*weights_text)) w.push_back(std::stod(item));
        weights = std::move(w);
    }
    const aalpha::RadiusBounds b = aalpha::bounds_report(g, alpha.value, weights);

    json doc;
    doc["meta"] = {{"input", path},
                   {"n", g.order()},
                   {"m", g.arc_count()},
                   {"alpha", alpha.value}};
    doc["radiusBounds"] = radius_bounds_json(b);
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "spectral radius: " << b.spectral_radius << "\n"
              << "lemma lower (alpha*maxOut): " << b.lower_lemma << "\n"
              << "degrees bound:  " << b.bound_degrees << (b.tight_degrees ? "  [tight]" : "")
              << "\n"
              << "arc count bound: " << b.bound_arcs_count
              << (b.tight_arcs_count ? "  [tight]" : "") << "\n"
              << "arcwise bound:  " << b.bound_arcwise << (b.tight_arcwise ? "  [tight]" : "")
              << "\n"
              << "weighted bound: " << b.bound_weighted << (b.tight_weighted ? "  [tight]" : "")
              << "\n"
              << "corollary bound: " << b.bound_corollary
              << (b.tight_corollary ? "  [tight]" : "") << "\n";
    return 0;
}

int cmd_energy(const std::string& path, const std::string& alpha_text, bool as_json) {
    const aalpha::Alpha alpha = aalpha::parse_alpha(alpha_text);
    const aalpha::Digraph g = aalpha::parse_digraph(read_input(path));
    const aalpha::EnergyReport e = aalpha::energy(g, alpha);
    const aalpha::EnergyBounds b = aalpha::energy_bounds(g, alpha.value);

    json doc;
    doc["meta"] = {{"input", path},
                   {"n", g.order()},
                   {"m", g.arc_count()},
                   {"alpha", alpha.value}};
    doc["energy"] = energy_json(e);
    doc["energyBounds"] = energy_bounds_json(b);
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "energy: " << e.energy;
    if (e.energy_rational) std::cout << " = " << aalpha::to_string(*e.energy_rational);
    std::cout << "\n";
    if (e.energy_via_eigenvalues)
        std::cout << "energy via eigenvalues: " << *e.energy_via_eigenvalues << "\n";
    auto line = [](const char* name, const aalpha::BoundPair& p) {
        std::cout << name << ": ";
        if (p.applicable)
            std::cout << "[" << p.lower << ", " << p.upper << "]\n";
        else
            std::cout << "not applicable\n";
    };
    line("connected bracket", b.connected);
    line("window bracket", b.window);
    line("complement bracket", b.complement);
    line("tree bracket", b.tree);
    line("unicyclic bracket", b.unicyclic);
    return 0;
}

int cmd_verify(int n, const std::string& grid_text, const std::optional<std::string>& claims_text,
               bool as_json) {
    const aalpha::AlphaGrid grid = parse_grid(grid_text);
    std::vector<std::string> ids;
    if (claims_text) {
        ids = split_list(*claims_text);
        if (ids.empty()) throw std::invalid_argument("empty claim list");
    } else {
        ids = aalpha::registered_claims();
    }

    std::vector<aalpha::VerificationReport> reports;
    reports.reserve(ids.size());
    for (const std::string& id : ids) reports.push_back(aalpha::verify_claim(id, n, grid));

    long long total_violations = 0;
    for (const auto& r : reports) total_violations += r.violation_total;

    if (as_json) {
        json doc = json::array();
        for (const auto& r : reports) doc.push_back(report_json(r));
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.certified() ? "PASS" : "FAIL") << "  " << r.claim_id << "  checked "
                      << r.checked << ", violations " << r.violation_total << ", achievers "
                      << r.achiever_total << "  (" << r.elapsed_seconds << "s)\n";
            for (const auto& f : r.findings) std::cout << "      finding: " << f << "\n";
            for (size_t i = 0; i < r.violations.size() && i < 5; ++i)
                std::cout << "      violation: [" << r.violations[i].digraph << "] alpha "
                          << r.violations[i].alpha << ": " << r.violations[i].detail << "\n";
        }
        std::cout << (total_violations == 0 ? "all claims certified" : "violations present")
                  << "\n";
    }
    return total_violations == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"A_alpha spectral analysis of digraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "aalpha 1.0.0");

    std::string path, alpha_text = "1/2", grid_text = "0,1/4,1/2,3/4";
    std::optional<std::string> weights_text, claims_text;
    bool as_json = false;
    int n = 3;
    std::string family;
    std::vector<long long> params;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for a digraph file");
    analyze->add_option("file", path, "edge-list file, or - for stdin")->required();
    analyze->add_option("--alpha", alpha_text, "alpha in [0,1), decimal or rational");
    analyze->add_flag("--json", as_json, "emit JSON");

    CLI::App* gen = app.add_subcommand("gen", "generate a named digraph family");
    gen->add_option("family", family,
                    "cycle | intree-path | outstar | complete-symmetric | c-a-k | d-member")
        ->required();
    gen->add_option("params", params, "integer parameters (n, and a where applicable)");

    CLI::App* verify = app.add_subcommand("verify", "exhaustively certify registered claims");
    verify->add_option("--n", n, "vertex count for enumeration");
    verify->add_option("--alpha-grid", grid_text, "comma list of alphas");
    verify->add_option("--claims", claims_text, "comma list of claim ids (default: all)");
    verify->add_flag("--json", as_json, "emit JSON");

    CLI::App* bounds = app.add_subcommand("bounds", "spectral-radius bounds report");
    bounds->add_option("file", path, "edge-list file, or - for stdin")->required();
    bounds->add_option("--alpha", alpha_text, "alpha in [0,1), decimal or rational");
    bounds->add_option("--weights", weights_text, "comma list of positive weights");
    bounds->add_flag("--json", as_json, "emit JSON");

    CLI::App* energy = app.add_subcommand("energy", "energy report with brackets");
    energy->add_option("file", path, "edge-list file, or - for stdin")->required();
    energy->add_option("--alpha", alpha_text, "alpha in [0,1), decimal or rational");
    energy->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(path, alpha_text, as_json);
        if (gen->parsed()) return cmd_gen(family, params);
        if (verify->parsed()) return cmd_verify(n, grid_text, claims_text, as_json);
        if (bounds->parsed()) return cmd_bounds(path, alpha_text, weights_text, as_json);
        if (energy->parsed()) return cmd_energy(path, alpha_text, as_json);
    } catch (const aalpha::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
