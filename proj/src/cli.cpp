#include "homex/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homex/connectivity.hpp"
#include "homex/constructions.hpp"
#include "homex/homology.hpp"
#include "homex/io.hpp"
#include "homex/nerve.hpp"
#include "homex/search.hpp"

namespace homex::cli {

namespace {

using nlohmann::json;

std::string group_str(long long betti, const std::vector<long long>& torsion) {
    std::vector<std::string> terms;
    if (betti == 1) terms.push_back("Z");
    if (betti > 1) terms.push_back("Z^" + std::to_string(betti));
    for (long long t : torsion) terms.push_back("Z/" + std::to_string(t));
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
    return out;
}

std::string face_str(const SimplicialComplex& x, const Face& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += x.label_or_id(f.vertices()[i]);
    }
    return out + "}";
}

json facets_json(const SimplicialComplex& x) {
    json arr = json::array();
    const bool labeled = !x.labels().empty();
    for (const Face& f : x.facets()) {
        json a = json::array();
        for (vertex_t v : f.vertices())
            if (labeled)
                a.push_back(x.label_or_id(v));
            else
                a.push_back(v);
        arr.push_back(std::move(a));
    }
    return arr;
}

json profile_json(const HomologyProfile& p) {
    json groups = json::array();
    for (std::size_t i = 0; i < p.betti.size(); ++i)
        groups.push_back({{"dim", i},
                          {"betti", p.betti[i]},
                          {"torsion", p.torsion[i]}});
    return {{"reduced", p.reduced}, {"groups", std::move(groups)}};
}

void print_profile(std::ostream& out, const HomologyProfile& p) {
    if (p.betti.empty()) {
        out << "empty complex\n";
        return;
    }
    for (std::size_t i = 0; i < p.betti.size(); ++i)
        out << "H_" << i << ": " << group_str(p.betti[i], p.torsion[i]) << '\n';
}

struct Options {
    // shared
    std::string file;
    bool json_out = false;
    int d = 0, k = 0;
    std::optional<int> m;
    int dim = 0;
    int to = 0;
    bool reduced = false;
    bool exhaustive = false;
    long long budget = 1000000;
    std::string gen_type;
    std::string out_path;
    std::optional<int> check_pure;
    std::optional<int> check_strong;
    std::optional<int> check_homology;
    std::optional<int> max_n;
    int jobs = 1;
    int nerve_cap = 20;
};

int cmd_gen(const Options& o, std::ostream& out) {
    SimplicialComplex x;
    if (o.gen_type == "mh") {
        x = build_mh(o.d, o.k);
    } else if (o.gen_type == "ms") {
        x = build_ms(o.d, o.k);
    } else if (o.gen_type == "susp") {
        x = build_suspension_example(o.d, o.k);
    } else if (o.gen_type == "rel") {
        if (!o.m) throw ValidationError("gen rel requires --m");
        x = build_rel(o.d, o.k, *o.m);
    } else {
        throw ValidationError("unknown construction '" + o.gen_type +
                              "' (expected mh|ms|rel|susp)");
    }
    if (!o.out_path.empty()) {
        write_complex_file(o.out_path, x, o.json_out);
    } else if (o.json_out) {
        write_json(out, x);
    } else {
        write_sc(out, x);
    }
    return 0;
}

int cmd_homology(const Options& o, std::ostream& out) {
    SimplicialComplex x = read_complex_file(o.file);
    HomologyProfile p = homology_profile(x, o.reduced);
    if (o.json_out) {
        out << json{{"report", "homology"}, {"profile", profile_json(p)}}.dump(2)
            << '\n';
    } else {
        print_profile(out, p);
    }
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    SimplicialComplex x = read_complex_file(o.file);
    FVector fv = x.f_vector();
    bool ok = true;
    json checks = json::array();
    std::ostringstream text;

    if (o.check_pure) {
        bool pure = !x.empty() && x.is_pure(*o.check_pure);
        ok = ok && pure;
        checks.push_back({{"check", "pure"}, {"d", *o.check_pure}, {"ok", pure}});
        text << "pure dimension " << *o.check_pure << ": "
             << (pure ? "yes" : "NO") << '\n';
    }
    if (o.check_strong) {
        bool sc = is_strongly_connected(x, *o.check_strong);
        ok = ok && sc;
        checks.push_back(
            {{"check", "strongly-connected"}, {"m", *o.check_strong}, {"ok", sc}});
        text << "strongly connected w.r.t. " << *o.check_strong << ": "
             << (sc ? "yes" : "NO") << '\n';
    }
    if (o.check_homology) {
        bool nt = is_homology_nontrivial(x, *o.check_homology);
        ok = ok && nt;
        checks.push_back({{"check", "nontrivial-homology"},
                          {"k", *o.check_homology},
                          {"ok", nt}});
        text << "nontrivial H_" << *o.check_homology << ": "
             << (nt ? "yes" : "NO") << '\n';
    }

    if (o.json_out) {
        out << json{{"report", "check"},
                    {"vertices", x.vertex_count()},
                    {"facets", x.facet_count()},
                    {"dim", x.dim()},
                    {"f_vector", fv.counts},
                    {"euler", fv.euler_characteristic()},
                    {"checks", std::move(checks)},
                    {"ok", ok}}
                   .dump(2)
            << '\n';
    } else {
        out << "vertices: " << x.vertex_count() << '\n';
        out << "facets: " << x.facet_count() << '\n';
        out << "dim: " << x.dim() << '\n';
        out << "f-vector:";
        for (long long c : fv.counts) out << ' ' << c;
        out << '\n';
        out << "euler characteristic: " << fv.euler_characteristic() << '\n';
        out << text.str();
        out << (ok ? "ok\n" : "FAILED\n");
    }
    return ok ? 0 : 1;
}

int cmd_components(const Options& o, std::ostream& out) {
    SimplicialComplex x = read_complex_file(o.file);
    auto comps = strong_components(x, o.dim);
    if (o.json_out) {
        json jc = json::array();
        for (const auto& comp : comps) {
            json members = json::array();
            for (int i : comp) members.push_back(facets_json(x)[i]);
            jc.push_back(std::move(members));
        }
        out << json{{"report", "components"},
                    {"m", o.dim},
                    {"count", comps.size()},
                    {"components", std::move(jc)}}
                   .dump(2)
            << '\n';
    } else {
        out << comps.size() << " component(s) w.r.t. dimension " << o.dim << '\n';
        for (std::size_t c = 0; c < comps.size(); ++c) {
            out << "component " << c << ":";
            for (int i : comps[c]) out << ' ' << face_str(x, x.facets()[i]);
            out << '\n';
        }
    }
    return 0;
}

int cmd_growth(const Options& o, std::ostream& out, std::ostream& err) {
    SimplicialComplex x = read_complex_file(o.file);
    GrowthProcess gp;
    try {
        gp = growth_process(x, o.dim);
    } catch (const NotStronglyConnectedError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    if (o.json_out) {
        json order = json::array();
        for (const Face& f : gp.order) {
            json a = json::array();
            for (vertex_t v : f.vertices()) a.push_back(x.label_or_id(v));
            order.push_back(std::move(a));
        }
        out << json{{"report", "growth"}, {"m", gp.m}, {"order", std::move(order)}}
                   .dump(2)
            << '\n';
    } else {
        for (std::size_t i = 0; i < gp.order.size(); ++i)
            out << "step " << i + 1 << ": " << face_str(x, gp.order[i]) << '\n';
    }
    return 0;
}

int cmd_collapse(const Options& o, std::ostream& out) {
    SimplicialComplex x = read_complex_file(o.file);
    CollapseResult res = collapse_to_dimension(x, o.to, o.exhaustive, o.budget);
    for (const auto& [v, label] : x.labels())
        if (res.remaining.has_vertex(v)) res.remaining.set_label(v, label);
    const char* status = res.status == CollapseStatus::Collapsed ? "collapsed"
                         : res.status == CollapseStatus::NotCollapsible
                             ? "not-collapsible"
                             : "unknown";
    if (o.json_out) {
        out << json{{"report", "collapse"},
                    {"target", o.to},
                    {"exhaustive", o.exhaustive},
                    {"status", status},
                    {"states_explored", res.states_explored},
                    {"remaining", facets_json(res.remaining)}}
                   .dump(2)
            << '\n';
    } else {
        out << "status: " << status << '\n';
        out << "states explored: " << res.states_explored << '\n';
        out << "remaining facets:";
        for (const Face& f : res.remaining.facets())
            out << ' ' << face_str(res.remaining, f);
        out << '\n';
    }
    return 0;
}

int cmd_nerve(const Options& o, std::ostream& out) {
    SimplicialComplex x = read_complex_file(o.file);
    NerveComplex n = nerve_max(x);
    // The nerve itself is cheap, but its homology needs the downward
    // closure, which is exponential in the facet count; skip it beyond
    // the cap unless the caller raises it.
    const bool with_homology =
        x.facet_count() <= static_cast<std::size_t>(o.nerve_cap);
    HomologyProfile p;
    if (with_homology) p = homology_profile(n.complex, /*reduced=*/false);
    if (o.json_out) {
        json sources = json::array();
        for (const Face& f : n.source_facets) {
            json a = json::array();
            for (vertex_t v : f.vertices()) a.push_back(x.label_or_id(v));
            sources.push_back(std::move(a));
        }
        json nf = json::array();
        for (const Face& f : n.complex.facets()) {
            json a = json::array();
            for (vertex_t v : f.vertices()) a.push_back(v);
            nf.push_back(std::move(a));
        }
        json j{{"report", "nerve"},
               {"vertices", std::move(sources)},
               {"facets", std::move(nf)}};
        if (with_homology) j["homology"] = profile_json(p);
        out << j.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < n.source_facets.size(); ++i)
            out << "vertex " << i << " = facet "
                << face_str(x, n.source_facets[i]) << '\n';
        for (const Face& f : n.complex.facets())
            out << "nerve facet: " << face_str(n.complex, f) << '\n';
        if (with_homology)
            print_profile(out, p);
        else
            out << "homology skipped: " << x.facet_count()
                << " facets exceed the cap of " << o.nerve_cap
                << " (raise with --max-facets)\n";
    }
    return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    json j{{"report", "bounds"}, {"d", o.d}, {"k", o.k}};
    std::ostringstream text;
    text << "d=" << o.d << " k=" << o.k;
    if (o.m) text << " m=" << *o.m;
    text << '\n';

    long long pure = bound_pure(o.d, o.k);
    j["pure"] = pure;
    text << "pure bound: " << pure << '\n';
    if (o.k >= 1) {
        long long strong = bound_strong(o.d, o.k);
        int threshold = connectivity_threshold(o.d, o.k);
        j["strong"] = strong;
        j["threshold"] = threshold;
        text << "strong bound: " << strong << '\n';
        text << "connectivity threshold: " << threshold << '\n';
        if (o.m) {
            long long rel = bound_rel(o.d, o.k, *o.m);
            j["rel"] = {{"m", *o.m}, {"bound", rel}};
            text << "relative bound (m=" << *o.m << "): " << rel << '\n';
        }
    }
    if (o.json_out)
        out << j.dump(2) << '\n';
    else
        out << text.str();
    return 0;
}

int run_verify(const Options& o, std::optional<int> strong_m, std::ostream& out,
               std::ostream& err) {
    MinimalWitnessResult res;
    try {
        res = find_minimal_witness(o.d, o.k, strong_m, o.jobs, o.max_n);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (o.json_out) {
        json runs = json::array();
        for (const SearchReport& r : res.reports) {
            json jr{{"n", r.constraint.n},
                    {"examined", r.complexes_examined},
                    {"canonical_classes", r.canonical_classes},
                    {"witnesses", r.witnesses.size()},
                    {"elapsed_seconds", r.elapsed_seconds}};
            if (!r.witnesses.empty())
                jr["first_witness"] = facets_json(r.witnesses.front());
            runs.push_back(std::move(jr));
        }
        json j{{"report", "verify"},
               {"mode", strong_m ? "strong" : "pure"},
               {"d", o.d},
               {"k", o.k},
               {"expected_bound", res.expected_bound},
               {"n_min", res.n_min},
               {"matches", res.bound_matches},
               {"runs", std::move(runs)}};
        if (strong_m) j["m"] = *strong_m;
        out << j.dump(2) << '\n';
    } else {
        for (const SearchReport& r : res.reports)
            out << "n=" << r.constraint.n << ": examined "
                << r.complexes_examined << ", canonical classes "
                << r.canonical_classes << ", witnesses " << r.witnesses.size()
                << '\n';
        out << "minimal witness at n=" << res.n_min << " (closed-form bound "
            << res.expected_bound << "): "
            << (res.bound_matches ? "ok" : "MISMATCH") << '\n';
        if (!res.reports.empty() && !res.reports.back().witnesses.empty()) {
            const SimplicialComplex& w = res.reports.back().witnesses.front();
            out << "witness:";
            for (const Face& f : w.facets()) out << ' ' << face_str(w, f);
            out << '\n';
        }
    }
    return res.bound_matches ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"extremal vertex bounds for simplicial complexes"};
    app.require_subcommand(1);
    Options o;

    CLI::App* gen = app.add_subcommand("gen", "generate a tight construction");
    gen->add_option("type", o.gen_type, "one of mh|ms|rel|susp")->required();
    gen->add_option("--d", o.d, "facet dimension")->required();
    gen->add_option("--k", o.k, "homology degree")->required();
    gen->add_option("--m", o.m, "connectivity dimension (rel only)");
    gen->add_option("-o,--output", o.out_path, "output file (default stdout)");
    gen->add_flag("--json", o.json_out, "write the JSON complex format");

    CLI::App* hom = app.add_subcommand("homology", "integral homology profile");
    hom->add_option("file", o.file, "facet file")->required();
    hom->add_flag("--reduced", o.reduced, "reduced homology");
    hom->add_flag("--json", o.json_out, "JSON report");

    CLI::App* chk = app.add_subcommand("check", "validate a complex file");
    chk->add_option("file", o.file, "facet file")->required();
    chk->add_option("--pure", o.check_pure, "assert pure of this dimension");
    chk->add_option("--strong", o.check_strong,
                    "assert strongly connected w.r.t. this dimension");
    chk->add_option("--homology", o.check_homology,
                    "assert nontrivial reduced H_k for this k");
    chk->add_flag("--json", o.json_out, "JSON report");

    CLI::App* comp = app.add_subcommand("components",
                                        "strong connectivity components");
    comp->add_option("file", o.file, "facet file")->required();
    comp->add_option("--dim", o.dim, "connectivity dimension m")->required();
    comp->add_flag("--json", o.json_out, "JSON report");

    CLI::App* gro = app.add_subcommand("growth", "growth process order");
    gro->add_option("file", o.file, "facet file")->required();
    gro->add_option("--dim", o.dim, "connectivity dimension m")->required();
    gro->add_flag("--json", o.json_out, "JSON report");

    CLI::App* col = app.add_subcommand("collapse", "collapse onto a dimension");
    col->add_option("file", o.file, "facet file")->required();
    col->add_option("--to", o.to, "target dimension")->required();
    col->add_flag("--exhaustive", o.exhaustive,
                  "backtrack over removal orders");
    col->add_option("--budget", o.budget, "exhaustive state budget");
    col->add_flag("--json", o.json_out, "JSON report");

    CLI::App* ner = app.add_subcommand("nerve", "nerve of the maximal faces");
    ner->add_option("file", o.file, "facet file")->required();
    ner->add_option("--max-facets", o.nerve_cap,
                    "facet cap for computing the nerve's homology");
    ner->add_flag("--json", o.json_out, "JSON report");

    CLI::App* bnd = app.add_subcommand("bounds", "closed-form vertex bounds");
    bnd->add_option("--d", o.d, "facet dimension")->required();
    bnd->add_option("--k", o.k, "homology degree")->required();
    bnd->add_option("--m", o.m, "connectivity dimension");
    bnd->add_flag("--json", o.json_out, "JSON report");

    CLI::App* ver = app.add_subcommand("verify", "exhaustive bound certificates");
    ver->require_subcommand(1);
    CLI::App* verp = ver->add_subcommand("pure-bound", "certify the pure bound");
    CLI::App* vers =
        ver->add_subcommand("strong-bound", "certify the relative bound");
    for (CLI::App* v : {verp, vers}) {
        v->add_option("--d", o.d, "facet dimension")->required();
        v->add_option("--k", o.k, "homology degree")->required();
        v->add_option("--max-n", o.max_n, "stop after this vertex count");
        v->add_option("--jobs", o.jobs, "worker threads");
        v->add_flag("--json", o.json_out, "JSON report");
    }
    vers->add_option("--m", o.m, "connectivity dimension")->required();

    std::vector<const char*> argv{"homex"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (hom->parsed()) return cmd_homology(o, out);
        if (chk->parsed()) return cmd_check(o, out);
        if (comp->parsed()) return cmd_components(o, out);
        if (gro->parsed()) return cmd_growth(o, out, err);
        if (col->parsed()) return cmd_collapse(o, out);
        if (ner->parsed()) return cmd_nerve(o, out);
        if (bnd->parsed()) return cmd_bounds(o, out);
        if (ver->parsed()) {
            if (verp->parsed()) return run_verify(o, std::nullopt, out, err);
            return run_verify(o, o.m, out, err);
        }
    } catch (const NotStronglyConnectedError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace homex::cli
