#include "pmp/json_io.hpp"

#include <fstream>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

FieldElement scalar_from_json(const FieldPtr& field, const Json& j) {
    if (j.is_number_integer()) return FieldElement::from_rational(field, Rational(j.get<long>()));
    if (j.is_string()) return FieldElement::parse(field, j.get<std::string>());
    throw ParseError("scalar must be a string or an integer, got: " + j.dump());
}

FPoly poly_from_json(const FieldPtr& field, const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a coefficient array, got: " + j.dump());
    std::vector<FieldElement> cs;
    cs.reserve(j.size());
    for (const auto& c : j) cs.push_back(scalar_from_json(field, c));
    return FPoly(std::move(cs));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw ParseError("rational must be a string or an integer, got: " + j.dump());
}

}  // namespace

ProblemInstance parse_problem(const Json& j, std::string name) {
    if (!j.is_object()) throw ParseError("problem file must be a JSON object");
    FieldPtr field = NumberField::rationals();
    if (j.contains("field")) {
        const auto& fj = j.at("field");
        if (!fj.is_object() || !fj.contains("modulus"))
            throw ParseError("field block needs a 'modulus' coefficient array");
        std::vector<Rational> mod;
        for (const auto& c : fj.at("modulus")) mod.push_back(rational_from_json(c));
        int emb = fj.value("embedding", 0);
        field = NumberField::create(Poly<Rational>(std::move(mod)), emb);
    }
    for (const char* key : {"P", "a", "b"})
        if (!j.contains(key)) throw ParseError(std::string("problem file misses '") + key + "'");
    if (j.contains("q") == j.contains("Q"))
        throw ParseError("problem file needs exactly one of 'q' or 'Q'");

    FPoly P = poly_from_json(field, j.at("P"));
    FieldElement a = scalar_from_json(field, j.at("a"));
    FieldElement b = scalar_from_json(field, j.at("b"));
    if (name.empty()) name = j.value("name", "");
    if (j.contains("q"))
        return ProblemInstance::from_q(field, std::move(P), poly_from_json(field, j.at("q")), a, b, name);
    return ProblemInstance::from_Q(field, std::move(P), poly_from_json(field, j.at("Q")), a, b, name);
}

ProblemInstance load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open problem file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return parse_problem(j, "");
}

Json scalar_to_json(const FieldElement& x) { return x.to_string(); }

Json poly_to_json(const FPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

Json cx_to_json(Cx z) { return Json::array({z.real(), z.imag()}); }

Json perm_to_json(const Permutation& p) {
    Json j;
    j["images"] = p.images();
    j["cycles"] = p.cycle_string();
    return j;
}

Json problem_to_json(const ProblemInstance& inst) {
    Json j;
    if (!inst.name.empty()) j["name"] = inst.name;
    if (!inst.field->is_rational()) {
        Json fj;
        Json mod = Json::array();
        for (const auto& c : inst.field->modulus().coeffs()) mod.push_back(c.str());
        fj["modulus"] = mod;
        fj["embedding"] = inst.field->embedding_index();
        j["field"] = fj;
    }
    j["P"] = poly_to_json(inst.P);
    j["q"] = poly_to_json(inst.q);
    j["Q"] = poly_to_json(inst.Q);
    j["a"] = inst.a.to_string();
    j["b"] = inst.b.to_string();
    return j;
}

Json moment_report_to_json(const MomentReport& rep) {
    Json j;
    j["max_i"] = rep.max_i;
    j["max_j"] = rep.max_j;
    j["all_zero_single"] = rep.all_zero_single;
    j["all_zero_double"] = rep.all_zero_double;
    Json singles = Json::array();
    for (const auto& e : rep.single_moments)
        singles.push_back(Json{{"i", e.i}, {"value", e.value.to_string()}});
    j["single_moments"] = singles;
    Json doubles = Json::array();
    for (const auto& e : rep.double_moments)
        doubles.push_back(Json{{"i", e.i}, {"j", e.j}, {"value", e.value.to_string()}});
    j["double_moments"] = doubles;
    return j;
}

Json kernel_to_json(const MomentKernel& k) {
    Json j;
    j["degree_bound"] = k.degree_bound;
    j["moment_bound"] = k.moment_bound;
    j["stabilized"] = k.stabilized;
    j["dimension"] = k.basis.size();
    Json basis = Json::array();
    for (const auto& q : k.basis) basis.push_back(poly_to_json(q));
    j["basis"] = basis;
    return j;
}

Json certificate_to_json(const CompositionCertificate& cert) {
    Json j;
    j["W"] = poly_to_json(cert.W);
    j["outer_P"] = poly_to_json(cert.outer_p);
    j["outer_Q"] = poly_to_json(cert.outer_q);
    j["endpoint_equal"] = cert.endpoint_equal;
    return j;
}

Json monodromy_to_json(const MonodromyData& mono) {
    Json j;
    Json cvs = Json::array();
    for (Cx c : mono.critical_values) cvs.push_back(cx_to_json(c));
    j["critical_values"] = cvs;
    j["base_point"] = cx_to_json(mono.base_point);
    Json gens = Json::array();
    for (const auto& g : mono.loop_generators)
        gens.push_back(Json{{"critical_value", cx_to_json(g.critical_value)},
                            {"permutation", perm_to_json(g.perm)}});
    j["loop_generators"] = gens;
    j["infinity_permutation"] = perm_to_json(mono.infinity_perm);
    j["transitive"] = mono.props.transitive;
    j["primitive"] = mono.props.primitive;
    j["doubly_transitive"] = mono.props.doubly_transitive;
    j["group_order"] = mono.group_order;
    Json systems = Json::array();
    for (const auto& sys : mono.block_systems) {
        Json blocks = Json::array();
        for (const auto& b : sys) blocks.push_back(b);
        systems.push_back(blocks);
    }
    j["block_systems"] = systems;
    return j;
}

Json omega_to_json(const OmegaLabeling& lab) {
    Json j;
    j["rho1"] = perm_to_json(lab.rho1);
    j["rho2"] = perm_to_json(lab.rho2);
    j["k"] = lab.k;
    j["d_a"] = lab.d_a;
    j["d_b"] = lab.d_b;
    j["branch_order"] = lab.branch_order;
    j["base_point"] = cx_to_json(lab.base_point);
    j["edge_starts"] = lab.edge_starts;
    j["edge_ends"] = lab.edge_ends;
    return j;
}

Json puiseux_to_json(const PuiseuxSeries& s) {
    Json j;
    j["ramification"] = s.ramification;
    Json cs = Json::array();
    for (const auto& [k, v] : s.coefficients)
        cs.push_back(Json{{"k", k}, {"value", cx_to_json(v)}});
    j["coefficients"] = cs;
    j["branch_shift"] = cx_to_json(s.branch_shift);
    return j;
}

Json trace_to_json(const ProofTrace& t) {
    Json j;
    Json ids = Json::array();
    for (const auto& c : t.power_identities)
        ids.push_back(Json{{"j", c.j}, {"residual", c.residual}, {"pass", c.pass}});
    j["power_identities"] = ids;
    j["vandermonde_dim"] = t.vandermonde_dim;
    j["vandermonde_abs_det"] = t.vandermonde_abs_det;
    j["min_value_gap"] = t.min_value_gap;
    j["vandermonde_singular"] = t.vandermonde_singular;
    j["branch_equality_forced"] = t.branch_equality_forced;
    return j;
}

Json verdict_to_json(const ProblemInstance& inst, const Verdict& v) {
    Json j;
    j["kind"] = to_string(v.kind);
    j["theorem"] = v.theorem;
    j["scan_bound"] = v.scan_bound;
    j["d_a"] = v.mult.d_a;
    j["d_b"] = v.mult.d_b;
    if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
    if (v.witness) {
        // Exactly-nonzero claim is re-verified here, on a fresh path.
        FieldElement again = v.witness->is_double() ? double_moment(inst, v.witness->i, v.witness->j)
                                                    : single_moment(inst, v.witness->i);
        if (again.is_zero() || !(again == v.witness->value))
            throw Error("witness re-verification failed");
        Json w;
        w["i"] = v.witness->i;
        if (v.witness->is_double()) w["j"] = v.witness->j;
        w["value"] = v.witness->value.to_string();
        j["witness"] = w;
    }
    if (!v.note.empty()) j["note"] = v.note;
    j["definitive"] = v.definitive();
    return j;
}

Json cross_checks_to_json(const CrossChecks& cc) {
    Json j;
    j["class_count"] = cc.class_count;
    j["w_max_degree"] = cc.w_max_degree;
    j["deg_p"] = cc.deg_p;
    j["degree_formula_ok"] = cc.degree_formula_ok;
    j["clustering_margin"] = cc.clustering_margin;
    j["d_a"] = cc.d_a;
    j["d_b"] = cc.d_b;
    j["single_moments_vanish_to_bound"] = cc.single_moments_vanish_to_bound;
    j["certificate_exists"] = cc.certificate_exists;
    j["regular_endpoint_contradiction"] = cc.regular_endpoint_contradiction;
    return j;
}

Json report_envelope(const ProblemInstance& inst, const Json& config) {
    Json j;
    j["tool"] = Json{{"name", "pmp"}, {"version", kToolVersion}};
    j["config"] = config;
    j["instance"] = problem_to_json(inst);
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace pmp
