// Command-line front end: reads a problem JSON, runs one of the analyses,
// writes a report JSON to stdout or --out.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pmp/corpus.hpp"
#include "pmp/errors.hpp"
#include "pmp/json_io.hpp"
#include "pmp/puiseux.hpp"
#include "pmp/verdict.hpp"

namespace {

using pmp::Json;

void emit(const Json& report, const std::string& out_path) {
    if (out_path.empty())
        std::cout << report.dump(2) << "\n";
    else
        pmp::write_json_file(out_path, report);
}

int run(int argc, char** argv) {
    CLI::App app{"polynomial moment problem toolkit"};
    app.require_subcommand(1);

    std::string file, out;
    long max_i = 20, max_j = 5, degree_bound = -1, terms = 10, theorem = 0, scan_bound = -1;
    double tol = 1e-12;
    int precision = 48;
    std::string out_dir = "reports";
    long seed_count = 5;

    auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
        if (needs_file) cmd->add_option("file", file, "problem JSON file")->required();
        cmd->add_option("--out", out, "write the report to this path");
        cmd->add_option("--precision", precision, "embedding precision, binary digits");
        cmd->add_option("--tol", tol, "numeric root/tracking tolerance");
    };

    auto* cmd_moments = app.add_subcommand("moments", "exact single and double moment scan");
    add_common(cmd_moments);
    cmd_moments->add_option("--max-i", max_i, "largest power of P");
    cmd_moments->add_option("--max-j", max_j, "largest power of Q");

    auto* cmd_kernel = app.add_subcommand("kernel", "exact kernel of the moment map");
    add_common(cmd_kernel);
    cmd_kernel->add_option("--degree-bound", degree_bound, "degree bound on q")->required();

    auto* cmd_decompose = app.add_subcommand("decompose", "proper right factors of P");
    add_common(cmd_decompose);

    auto* cmd_crd = app.add_subcommand("crd", "maximal common right divisor of P and Q");
    add_common(cmd_crd);

    auto* cmd_condition = app.add_subcommand("condition", "composition condition with endpoints");
    add_common(cmd_condition);

    auto* cmd_monodromy = app.add_subcommand("monodromy", "monodromy group of P^-1");
    add_common(cmd_monodromy);

    auto* cmd_omega = app.add_subcommand("omega", "canonical branch labeling at P(a)");
    add_common(cmd_omega);

    auto* cmd_puiseux = app.add_subcommand("puiseux", "expansion of Q(P^-1) at infinity");
    add_common(cmd_puiseux);
    cmd_puiseux->add_option("--terms", terms, "number of expansion terms");

    auto* cmd_trace = app.add_subcommand("trace", "branch-sum identity checks");
    add_common(cmd_trace);
    cmd_trace->add_option("--max-j", max_j, "largest power in the identity");

    auto* cmd_verdict = app.add_subcommand("verdict", "theorem-backed decision");
    add_common(cmd_verdict);
    cmd_verdict->add_option("--theorem", theorem, "1 or 2; 0 picks by indecomposability")
        ->check(CLI::Range(0L, 2L));
    cmd_verdict->add_option("--max-i", scan_bound, "scan bound override");

    auto* cmd_corpus = app.add_subcommand("corpus", "bundled instance corpus");
    auto* cmd_corpus_run = cmd_corpus->add_subcommand("run", "decide every bundled instance");
    cmd_corpus_run->add_option("--out-dir", out_dir, "directory for per-instance reports");
    cmd_corpus_run->add_option("--seeds", seed_count, "number of extra seeded certified instances");
    auto* cmd_corpus_export = cmd_corpus->add_subcommand("export", "write bundled problem files");
    std::string export_dir = "corpus";
    cmd_corpus_export->add_option("--dir", export_dir, "target directory");

    CLI11_PARSE(app, argc, argv);

    pmp::MonodromyOptions mopt;
    mopt.track.newton_tol = tol;
    mopt.embed_precision = precision;

    if (cmd_corpus_run->parsed()) {
        auto instances = pmp::bundled_corpus();
        for (long s = 0; s < seed_count; ++s)
            instances.push_back(pmp::random_certified_instance(1000 + static_cast<std::uint64_t>(s), s % 3 == 0));
        std::filesystem::create_directories(out_dir);
        bool all_definitive = true;
        Json summary = Json::array();
        for (const auto& inst : instances) {
            pmp::Verdict v = pmp::decide(inst);
            Json rep = pmp::report_envelope(inst, Json{{"command", "corpus run"}});
            rep["verdict"] = pmp::verdict_to_json(inst, v);
            pmp::write_json_file(out_dir + "/" + inst.name + ".json", rep);
            summary.push_back(Json{{"name", inst.name}, {"kind", pmp::to_string(v.kind)},
                                   {"definitive", v.definitive()}});
            all_definitive = all_definitive && v.definitive();
        }
        Json top;
        top["tool"] = Json{{"name", "pmp"}, {"version", pmp::kToolVersion}};
        top["instances"] = summary;
        top["all_definitive"] = all_definitive;
        emit(top, out);
        return all_definitive ? 0 : 2;
    }

    if (cmd_corpus_export->parsed()) {
        std::filesystem::create_directories(export_dir);
        for (const auto& inst : pmp::bundled_corpus()) {
            Json j = pmp::problem_to_json(inst);
            j.erase("q");  // problem files carry exactly one of q / Q
            pmp::write_json_file(export_dir + "/" + inst.name + ".json", j);
        }
        std::cout << "wrote corpus to " << export_dir << "\n";
        return 0;
    }

    pmp::ProblemInstance inst = pmp::load_problem_file(file);

    if (cmd_moments->parsed()) {
        Json rep = pmp::report_envelope(inst, Json{{"command", "moments"}, {"max_i", max_i}, {"max_j", max_j}});
        rep["moments"] = pmp::moment_report_to_json(pmp::moment_report(inst, max_i, max_j));
        emit(rep, out);
        return 0;
    }
    if (cmd_kernel->parsed()) {
        auto k = pmp::moment_kernel(inst.P, inst.a, inst.b, degree_bound);
        Json rep = pmp::report_envelope(inst, Json{{"command", "kernel"}, {"degree_bound", degree_bound}});
        rep["kernel"] = pmp::kernel_to_json(k);
        emit(rep, out);
        return 0;
    }
    if (cmd_decompose->parsed()) {
        Json rep = pmp::report_envelope(inst, Json{{"command", "decompose"}});
        Json factors = Json::array();
        for (const auto& [m, w] : pmp::right_factors(inst.P))
            factors.push_back(Json{{"degree", m}, {"W", pmp::poly_to_json(w)}});
        rep["right_factors"] = factors;
        rep["indecomposable"] = pmp::is_indecomposable(inst.P);
        emit(rep, out);
        return 0;
    }
    if (cmd_crd->parsed()) {
        Json rep = pmp::report_envelope(inst, Json{{"command", "crd"}});
        if (auto crd = pmp::common_right_divisor(inst.P, inst.Q)) {
            rep["W"] = pmp::poly_to_json(std::get<0>(*crd));
            rep["outer_P"] = pmp::poly_to_json(std::get<1>(*crd));
            rep["outer_Q"] = pmp::poly_to_json(std::get<2>(*crd));
        } else {
            rep["W"] = nullptr;
        }
        emit(rep, out);
        return 0;
    }
    if (cmd_condition->parsed()) {
        Json rep = pmp::report_envelope(inst, Json{{"command", "condition"}});
        if (auto cert = pmp::composition_condition(inst))
            rep["certificate"] = pmp::certificate_to_json(*cert);
        else
            rep["certificate"] = nullptr;
        emit(rep, out);
        return 0;
    }
    if (cmd_monodromy->parsed()) {
        auto mono = pmp::monodromy_group(inst.P, mopt);
        Json rep = pmp::report_envelope(inst, Json{{"command", "monodromy"}, {"tol", tol}, {"precision", precision}});
        rep["monodromy"] = pmp::monodromy_to_json(mono);
        emit(rep, out);
        return 0;
    }
    if (cmd_omega->parsed()) {
        auto mono = pmp::monodromy_group(inst.P, mopt);
        auto lab = pmp::omega_labeling(inst, mono, mopt);
        Json rep = pmp::report_envelope(inst, Json{{"command", "omega"}});
        rep["omega"] = pmp::omega_to_json(lab);
        emit(rep, out);
        return 0;
    }
    if (cmd_puiseux->parsed()) {
        auto s = pmp::puiseux_at_infinity(inst.P / inst.P.leading(), inst.Q, terms, precision);
        Json rep = pmp::report_envelope(inst, Json{{"command", "puiseux"}, {"terms", terms}});
        rep["puiseux"] = pmp::puiseux_to_json(s);
        emit(rep, out);
        return 0;
    }
    if (cmd_trace->parsed()) {
        auto mono = pmp::monodromy_group(inst.P, mopt);
        auto lab = pmp::omega_labeling(inst, mono, mopt);
        auto tr = pmp::proof_trace(inst, lab, max_j, mopt);
        Json rep = pmp::report_envelope(inst, Json{{"command", "trace"}, {"max_j", max_j}});
        rep["omega"] = pmp::omega_to_json(lab);
        rep["trace"] = pmp::trace_to_json(tr);
        emit(rep, out);
        return 0;
    }
    if (cmd_verdict->parsed()) {
        pmp::Verdict v;
        if (theorem == 1)
            v = pmp::theorem1_verdict(inst, scan_bound);
        else if (theorem == 2)
            v = pmp::theorem2_verdict(inst, scan_bound);
        else
            v = pmp::decide(inst, scan_bound);
        Json rep = pmp::report_envelope(inst, Json{{"command", "verdict"}, {"theorem", theorem},
                                                   {"scan_bound", v.scan_bound}});
        rep["verdict"] = pmp::verdict_to_json(inst, v);
        rep["cross_checks"] = pmp::cross_checks_to_json(pmp::cross_validate(inst, mopt));
        emit(rep, out);
        return v.definitive() ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pmp::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pmp::NumericFailure& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
