/*
   Copyright 2026 The ratsym Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   Command-line front end.

   Subcommands: analyze, generate {silverman,t4,example13}, quotient, moduli,
   verify. Exit codes: 0 success, 2 input error, 3 search or certification
   failure. JSON reports carry schema_version and print every number that is
   not a count as a string.
*/

#ifndef RATSYM_CLI_HPP
#define RATSYM_CLI_HPP

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "expr.hpp"
#include "moduli.hpp"

namespace ratsym::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode { kOk = 0, kInputError = 2, kSearchFailure = 3 };

inline int exit_code_for(Errc c) {
    switch (c) {
        case Errc::ConvergenceFailure:
        case Errc::DegenerateSet:
        case Errc::SearchBoundExceeded:
        case Errc::NotAGroup:
        case Errc::ConsistencyViolation:
        case Errc::FixedPointsNotInField:
        case Errc::NotCanonical:
            return kSearchFailure;
        default:
            return kInputError;
    }
}

/* ---- formatting ---- */

inline std::string fmt_double(double x, int digits = 12) {
    if (std::abs(x) < 1e-14) x = 0;  // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

inline std::string fmt_complex(Complex z) {
    const std::string re = fmt_double(z.real()), im = fmt_double(std::abs(z.imag()));
    if (im == "0") return re;
    const std::string sign = z.imag() < 0 ? "-" : re == "0" ? "" : "+";
    return (re == "0" ? "" : re) + sign + im + "i";
}

inline std::string matrix_text(const AutElement& e) {
    std::array<std::string, 4> s;
    for (size_t k = 0; k < 4; ++k)
        s[k] = e.exact ? e.exact->entries()[k].to_string() : fmt_complex(e.numeric.entries()[k]);
    return "[[" + s[0] + "," + s[1] + "],[" + s[2] + "," + s[3] + "]]";
}

inline std::string element_kind(const AutElement& e) {
    if (!e.numeric.antiholomorphic()) return e.order == 1 ? "identity" : "rotation";
    if (e.order != 2) return "antiholomorphic";
    const InvolutionKind k = e.exact ? classify_involution(*e.exact) : classify_involution(e.numeric);
    return to_string(k);
}

inline Json element_json(const AutElement& e) {
    Json j;
    j["matrix"] = matrix_text(e);
    j["antiholomorphic"] = e.numeric.antiholomorphic();
    j["order"] = e.order;
    j["kind"] = element_kind(e);
    j["exact"] = e.exact.has_value();
    return j;
}

/// Greedy generating set of the holomorphic part: largest orders first.
inline std::vector<AutElement> holomorphic_generators(const AutGroupReport& g) {
    std::vector<AutElement> holo;
    for (const auto& e : g.elements)
        if (!e.numeric.antiholomorphic()) holo.push_back(e);
    std::stable_sort(holo.begin(), holo.end(), [](const auto& x, const auto& y) { return x.order > y.order; });
    std::vector<AutElement> gens;
    std::vector<CMoebius> span{CMoebius::identity(Complex(0))};
    auto in_span = [&](const CMoebius& x) {
        for (const auto& s : span)
            if (projective_distance(s, x) < 1e-6) return true;
        return false;
    };
    for (const auto& e : holo) {
        if (in_span(e.numeric)) continue;
        gens.push_back(e);
        for (size_t k = 0; k < span.size() && span.size() <= holo.size(); ++k)
            for (const auto& gen : gens) {
                const CMoebius h = (span[k] * gen.numeric).normalized();
                if (!in_span(h)) span.push_back(h);
            }
    }
    return gens;
}

/* ---- analysis report ---- */

inline Json analysis_report(const RationalMap& phi, const std::string& input, const ClassifyOptions& opts) {
    const Classification c = classify_map(phi, opts);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = input;
    j["map"] = print_map_expr(phi);
    j["degree"] = c.degree;
    j["mode"] = opts.exact ? "exact" : "numeric";
    j["tolerances"] = {{"match", fmt_double(opts.aut.match_tol, 3)},
                       {"dedup", fmt_double(opts.aut.dedup_tol, 3)},
                       {"point", fmt_double(opts.aut.point_tol, 3)}};
    j["certified"] = c.certified;

    Json aut;
    aut["holo_type"] = c.group.holo_type.to_string();
    aut["order"] = c.group.holomorphic_count();
    aut["generators"] = Json::array();
    for (const auto& g : holomorphic_generators(c.group)) aut["generators"].push_back(element_json(g));
    j["aut"] = aut;

    Json anti;
    std::vector<AutElement> antis;
    for (const auto& e : c.group.elements)
        if (e.numeric.antiholomorphic()) antis.push_back(e);
    anti["exists"] = !antis.empty();
    anti["count"] = antis.size();
    int min_order = 0;
    for (const auto& e : antis) min_order = min_order == 0 ? e.order : std::min(min_order, e.order);
    anti["min_order"] = antis.empty() ? Json(nullptr) : Json(min_order);
    anti["has_reflection"] = c.reflection.has_value();
    anti["has_imaginary_reflection"] = c.imaginary_reflection.has_value();
    anti["witnesses"] = Json::array();
    for (const auto& e : antis) anti["witnesses"].push_back(element_json(e));
    j["antiholo"] = anti;

    Json cls;
    cls["verdict"] = to_string(c.verdict);
    cls["theta"] = c.theta ? Json(c.theta->to_string()) : Json(nullptr);
    cls["alpha"] = nullptr;
    cls["beta"] = nullptr;
    cls["lambda"] = nullptr;
    if (c.normal_form) {
        Json nf;
        nf["n"] = c.normal_form->n;
        nf["r"] = c.normal_form->r;
        nf["case"] = std::string(1, c.normal_form->case_tag);
        nf["psi"] = print_map_expr(c.normal_form->psi);
        nf["flipped"] = c.normal_form->flipped;
        cls["normal_form"] = nf;
        // alpha from an antiholomorphic element alpha/conj(z) in normal-form coordinates
        for (const auto& e : antis) {
            if (!e.exact) continue;
            const Moebius L = c.normal_form->conjugator;
            const Moebius q = L * (*e.exact) * L.inverse();
            if (q.a().is_zero() && q.d().is_zero()) {
                cls["alpha"] = (q.b() / q.c()).to_string();
                break;
            }
        }
    }
    if (c.teo7) {
        Json t;
        t["condition_a"] = c.teo7->condition_a;
        t["condition_b"] = c.teo7->condition_b;
        t["b_gcd"] = c.teo7->b_gcd;
        if (c.teo7->beta) cls["beta"] = c.teo7->beta->to_string();
        if (c.teo7->lambda) cls["lambda"] = c.teo7->lambda->to_string();
        cls["cyclic_certificate"] = t;
    }
    j["classification"] = cls;
    j["polynomial_like"] = c.polynomial_like;
    j["notes"] = c.consistency_notes;
    return j;
}

inline std::string analysis_text(const Json& j) {
    std::ostringstream os;
    os << "map: " << j["map"].get<std::string>() << "\n";
    os << "degree: " << j["degree"].get<int>() << "\n";
    os << "mode: " << j["mode"].get<std::string>() << (j["certified"].get<bool>() ? " (certified)" : "") << "\n";
    os << "holomorphic group: " << j["aut"]["holo_type"].get<std::string>() << "\n";
    for (const auto& g : j["aut"]["generators"])
        os << "  generator: " << g["matrix"].get<std::string>() << " order " << g["order"].get<int>() << "\n";
    os << "antiholomorphic automorphisms: " << j["antiholo"]["count"].get<size_t>() << "\n";
    for (const auto& w : j["antiholo"]["witnesses"])
        os << "  " << w["kind"].get<std::string>() << ": " << w["matrix"].get<std::string>() << " order "
           << w["order"].get<int>() << "\n";
    const auto& cls = j["classification"];
    os << "verdict: " << cls["verdict"].get<std::string>() << "\n";
    for (const char* key : {"theta", "alpha", "beta", "lambda"})
        if (!cls[key].is_null()) os << key << ": " << cls[key].get<std::string>() << "\n";
    if (cls.contains("normal_form"))
        os << "normal form: z psi(z^" << cls["normal_form"]["n"].get<int>()
           << "), psi = " << cls["normal_form"]["psi"].get<std::string>() << "\n";
    for (const auto& n : j["notes"]) os << "note: " << n.get<std::string>() << "\n";
    return os.str();
}

/* ---- input helpers ---- */

inline std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

/// A map from expression text or from the coefficient JSON format.
inline RationalMap map_from_text(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw Error(Errc::InvalidArgument, "empty map input");
    if (t.front() == '{') {
        try {
            return from_coeff_json(Json::parse(t));
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::InvalidArgument, std::string("bad coefficient JSON: ") + e.what());
        }
    }
    return parse_map_expr(t);
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::InvalidArgument, "cannot open " + path);
    return read_all(f);
}

/// "[[a,b],[c,d]]" with constant-expression entries.
inline std::array<CycloNum, 4> parse_matrix(const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 4 || t.front() != '[' || t.back() != ']') throw Error(Errc::InvalidArgument, "matrix must be [[a,b],[c,d]]");
    const auto rows = split_top_level(std::string_view(t).substr(1, t.size() - 2));
    if (rows.size() != 2) throw Error(Errc::InvalidArgument, "matrix needs two rows");
    std::array<CycloNum, 4> m;
    for (size_t r = 0; r < 2; ++r) {
        const std::string row = trim(rows[r]);
        if (row.size() < 2 || row.front() != '[' || row.back() != ']') throw Error(Errc::InvalidArgument, "row must be [x,y]");
        const auto entries = split_top_level(std::string_view(row).substr(1, row.size() - 2));
        if (entries.size() != 2) throw Error(Errc::InvalidArgument, "row needs two entries");
        m[2 * r] = parse_constant(entries[0]);
        m[2 * r + 1] = parse_constant(entries[1]);
    }
    return m;
}

inline Moebius moebius_from(const std::array<CycloNum, 4>& m, bool anti) {
    int order = 1;
    for (const auto& x : m) order = std::lcm(order, x.order());
    return Moebius(m[0].rebase(order), m[1].rebase(order), m[2].rebase(order), m[3].rebase(order), anti);
}

/* ---- subcommands ---- */

struct AnalyzeArgs {
    std::string map, coeff_file, batch;
    bool json = false, certify = false;
    std::string mode = "numeric";
    double tol = 1e-8;
};

inline ClassifyOptions classify_options(const AnalyzeArgs& a) {
    ClassifyOptions o;
    o.exact = a.mode == "exact" || a.certify;
    o.aut.match_tol = a.tol;
    return o;
}

inline int run_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const ClassifyOptions opts = classify_options(a);
    if (!a.batch.empty()) {
        std::istringstream lines(read_file(a.batch));
        std::string line;
        Json all = Json::array();
        int code = kOk;
        while (std::getline(lines, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            try {
                all.push_back(analysis_report(map_from_text(line), line, opts));
            } catch (const Error& e) {
                code = std::max(code, exit_code_for(e.code()));
                all.push_back(Json{{"schema_version", kSchemaVersion}, {"input", line},
                                   {"error", {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}}});
            }
        }
        if (a.json) out << all.dump(2) << "\n";
        else
            for (const auto& r : all) {
                if (r.contains("error")) out << "input: " << r["input"].get<std::string>() << "\nerror: "
                                             << r["error"]["message"].get<std::string>() << "\n\n";
                else out << analysis_text(r) << "\n";
            }
        if (code != kOk) err << "some batch entries failed\n";
        return code;
    }
    std::string text;
    if (!a.map.empty()) text = a.map;
    else if (!a.coeff_file.empty()) text = read_file(a.coeff_file);
    else text = read_all(in);
    const RationalMap phi = map_from_text(text);
    const Json rep = analysis_report(phi, trim(text), opts);
    if (a.json) out << rep.dump(2) << "\n";
    else out << analysis_text(rep);
    return kOk;
}

inline void emit_map(const RationalMap& f, bool json, std::ostream& out) {
    if (json) out << to_coeff_json(f).dump() << "\n";
    else out << print_map_expr(f) << "\n";
}

struct QuotientArgs {
    std::string map;
    bool json = false;
};

inline int run_quotient(const QuotientArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const std::string text = a.map.empty() ? read_all(in) : a.map;
    const RationalMap phi = map_from_text(text);
    AutOptions ao;
    ao.certify = true;
    const AutGroupReport g = automorphism_group(phi, ao);
    if (g.holo_type.kind != HoloKind::Cyclic || g.holo_type.n < 2) {
        err << "holomorphic group is " << g.holo_type.to_string() << ", not cyclic of order >= 2\n";
        return kInputError;
    }
    const AutElement* gen = nullptr;
    for (const auto& e : g.elements)
        if (!e.numeric.antiholomorphic() && e.order == g.holo_type.n && e.exact) {
            gen = &e;
            break;
        }
    if (!gen) {
        err << "could not certify a generator of the cyclic group\n";
        return kSearchFailure;
    }
    const CanonicalCyclicForm form = canonicalize_cyclic(phi, *gen->exact);
    const RationalMap q = quotient_map(form);
    const bool ok = verify_semiconjugacy(conjugate_by(phi, form.conjugator), q, form.n);
    if (a.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["input"] = trim(text);
        j["n"] = form.n;
        j["r"] = form.r;
        j["case"] = std::string(1, form.case_tag);
        j["psi"] = print_map_expr(form.psi);
        j["conjugator"] = matrix_text(AutElement{to_numeric(form.conjugator), form.conjugator, 1});
        j["quotient"] = print_map_expr(q);
        j["quotient_degree"] = q.degree();
        j["semiconjugacy_verified"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << print_map_expr(q) << "\n";
    }
    if (!ok) {
        err << "semiconjugacy check failed\n";
        return kSearchFailure;
    }
    return kOk;
}

struct ModuliArgs {
    int degree = 0;
    int n = 0;
    bool json = false;
};

inline int run_moduli(const ModuliArgs& a, std::ostream& out) {
    if (a.degree < 2) throw Error(Errc::BadDegree, "degree must be >= 2");
    std::vector<int> ns;
    if (a.n > 0) ns.push_back(a.n);
    else
        for (int n = 2; n <= a.degree + 1; ++n) ns.push_back(n);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["degree"] = a.degree;
    Json cyc = Json::array();
    for (int n : ns) {
        if (n < 2) throw Error(Errc::InvalidArgument, "n must be >= 2");
        Json e;
        e["n"] = n;
        const auto dim = dim_Md_cyclic(a.degree, n);
        e["complex_dimension"] = dim ? Json(*dim) : Json(nullptr);
        e["cases"] = Json::array();
        for (const auto& c : admissible_cyclic_params(a.degree, n))
            e["cases"].push_back({{"r", c.r}, {"case", std::string(1, c.case_tag)}});
        const auto f = antiholo_feasibility(a.degree, n);
        e["antiholomorphic_order_2n_feasible"] = f.feasible;
        e["reason"] = f.reason;
        cyc.push_back(e);
    }
    j["cyclic"] = cyc;
    if (a.degree % 2 == 1 && a.degree >= 3) {
        Json loci = Json::array();
        for (const auto& l : locus_dimensions(a.degree, a.n > 0 ? std::optional<int>(a.n) : std::nullopt))
            loci.push_back({{"locus", l.locus},
                            {"real_dimension", l.real_dimension},
                            {"connected", l.connected == Connectivity::Connected ? "yes" : "unknown"},
                            {"notes", l.notes}});
        j["loci"] = loci;
        const auto b = pseudo_real_component_bound(a.degree);
        Json comps = Json::array();
        for (const auto& c : b.candidates)
            comps.push_back({{"s", c.s},
                             {"antiholomorphic_order", 1 << (c.s + 1)},
                             {"status", to_string(c.status)},
                             {"witness", c.witness}});
        j["components"] = {{"witnessed", b.witnessed}, {"upper", b.upper}, {"candidates", comps}};
    }
    if (a.json) {
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "degree: " << a.degree << "\n";
    for (const auto& e : j["cyclic"]) {
        out << "n = " << e["n"].get<int>() << ": dimension ";
        if (e["complex_dimension"].is_null()) out << "none (d is not 0, 1, -1 mod n)";
        else out << e["complex_dimension"].get<int>();
        out << "; antiholomorphic order " << 2 * e["n"].get<int>() << " "
            << (e["antiholomorphic_order_2n_feasible"].get<bool>() ? "feasible" : "infeasible") << "\n";
    }
    if (j.contains("loci"))
        for (const auto& l : j["loci"])
            out << l["locus"].get<std::string>() << ": real dimension " << l["real_dimension"].get<int>() << "\n";
    if (j.contains("components"))
        out << "pseudo-real components: [" << j["components"]["witnessed"].get<int>() << ", "
            << j["components"]["upper"].get<int>() << "]\n";
    return kOk;
}

struct VerifyArgs {
    std::string map, matrix;
    bool anti = false;
    bool json = false;
};

inline int run_verify(const VerifyArgs& a, std::ostream& out) {
    const RationalMap phi = map_from_text(a.map);
    const Moebius g = moebius_from(parse_matrix(a.matrix), a.anti);
    const bool ok = verify_automorphism_exact(phi, g);
    if (a.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["map"] = print_map_expr(phi);
        j["automorphism"] = a.matrix;
        j["antiholomorphic"] = a.anti;
        j["verified"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << (ok ? "verified: true" : "verified: false") << "\n";
    }
    return kOk;
}

/// Entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"ratsym: automorphisms and real/pseudo-real classification of rational maps"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "automorphism group and classification of a map");
    analyze->add_option("--map", an.map, "map expression (stdin when omitted)");
    analyze->add_option("--coeff-file", an.coeff_file, "coefficient JSON file");
    analyze->add_option("--batch", an.batch, "file with one map per line");
    analyze->add_flag("--json", an.json, "JSON report");
    analyze->add_option("--mode", an.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
    analyze->add_option("--tol", an.tol, "coefficient match tolerance")->check(CLI::PositiveNumber);
    analyze->add_flag("--certify", an.certify, "certify group elements exactly");

    auto* generate = app.add_subcommand("generate", "print a map from a family");
    generate->require_subcommand(1);
    bool gen_json = false;
    generate->add_flag("--json", gen_json, "coefficient JSON instead of an expression");
    int sil_degree = 3;
    auto* sil = generate->add_subcommand("silverman", "i ((z - 1)/(z + 1))^d");
    sil->add_option("--degree", sil_degree, "odd degree >= 3")->required();
    T4Params t4;
    long theta_num = 0, theta_den = 1;
    std::string coeffs;
    auto* t4cmd = generate->add_subcommand("t4", "z psi(z^n) with an order-2n antiholomorphic automorphism");
    t4cmd->add_option("--n", t4.n, "n >= 6")->required();
    t4cmd->add_option("--r", t4.r, "even r >= 2")->required();
    t4cmd->add_option("--theta-num", theta_num, "theta = pi * num / den");
    t4cmd->add_option("--theta-den", theta_den, "theta = pi * num / den");
    t4cmd->add_option("--coeffs", coeffs, "a_0,...,a_r as constant expressions")->required();
    auto* ex13 = generate->add_subcommand("example13", "the degree-13 map with Aut = Z_6");

    QuotientArgs qa;
    auto* quotient = app.add_subcommand("quotient", "w psi(w)^n for a map z psi(z^n)");
    quotient->add_option("--map", qa.map, "map expression (stdin when omitted)");
    quotient->add_flag("--json", qa.json, "JSON report");

    ModuliArgs ma;
    auto* moduli = app.add_subcommand("moduli", "dimension and component formulas");
    moduli->add_option("--degree", ma.degree, "degree d")->required();
    moduli->add_option("--n", ma.n, "order of the cyclic symmetry");
    moduli->add_flag("--json", ma.json, "JSON report");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "exact automorphism check");
    verify->add_option("--map", va.map, "map expression")->required();
    verify->add_option("--auto", va.matrix, "[[a,b],[c,d]]")->required();
    verify->add_option("--antiholo", va.anti, "compose with complex conjugation")->required();
    verify->add_flag("--json", va.json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (analyze->parsed()) return run_analyze(an, in, out, err);
        if (generate->parsed()) {
            if (sil->parsed()) emit_map(silverman(sil_degree), gen_json, out);
            else if (ex13->parsed()) emit_map(example13(), gen_json, out);
            else if (t4cmd->parsed()) {
                t4.theta = unit_from_angle(theta_num, theta_den);
                for (const auto& c : split_top_level(coeffs)) t4.a.push_back(parse_constant(c));
                emit_map(t4_family(t4), gen_json, out);
            }
            return kOk;
        }
        if (quotient->parsed()) return run_quotient(qa, in, out, err);
        if (moduli->parsed()) return run_moduli(ma, out);
        if (verify->parsed()) return run_verify(va, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kInputError;
}

}  // namespace ratsym::cli

#endif  // RATSYM_CLI_HPP
