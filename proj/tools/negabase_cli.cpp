// Command-line front end for the negabase library: expansions, base
// classification, Ito-Sadahiro polynomials, admissibility checks, lattice
// enumeration, Fin(-beta) membership and family scans. JSON on stdout by
// default; all numbers are exact strings except fields labeled
// decimal_approx.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "negabase/json_io.hpp"
#include "negabase/negabase.hpp"

using namespace negabase;
namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOpts {
    bool plain = false;
    bool strict = false;
};

BasePtr parse_base(const std::string& text) {
    if (text.find('x') == std::string::npos && text.find(',') == std::string::npos)
        return BaseSpec::from_rational(parse_rat(text));
    return BaseSpec::from_poly(parse_poly(text));
}

/// --x accepts the distinguished tokens l / r- / 1 / 1- / 0, a rational, or
/// a coordinate vector.
FieldElem parse_point(const BasePtr& base, const std::string& text) {
    if (text == "l") return l_endpoint(base);
    if (text == "0") return FieldElem::zero(base);
    if (text == "1") return FieldElem::one(base);
    if (text.find(',') != std::string::npos) return FieldElem(base, parse_coords(text));
    return FieldElem::from_rational(base, parse_rat(text));
}

void emit(const GlobalOpts& g, const Json& j, const std::string& plain_line) {
    if (g.plain)
        std::cout << plain_line << "\n";
    else
        std::cout << j.dump() << "\n";
}

int run_expand(const GlobalOpts& g, const std::string& system, const std::string& base_text,
               const std::string& x_text, long cap) {
    BasePtr base = parse_base(base_text);
    System sys = system == "pos" ? System::pos : System::neg;

    Json j;
    j["system"] = system;
    j["base"] = base->min_poly().coeff_list_str();

    if (sys == System::neg && x_text == "r-") {
        auto dl = d_neg_l(base, cap);
        if (!dl.periodic()) {
            j["outcome"] = "inconclusive";
            j["steps_taken"] = dl.steps_taken;
            emit(g, j, "inconclusive");
            return g.strict ? kExitInconclusive : 0;
        }
        EPWord w = d_star_neg_r(*dl.word);
        j["x"] = "r-";
        j["word"] = word_json(w);
        emit(g, j, w.str());
        return 0;
    }
    if (sys == System::pos && x_text == "1-") {
        auto out = d_star_pos_one(base, cap);
        if (!out.periodic()) {
            j["outcome"] = "inconclusive";
            j["steps_taken"] = out.steps_taken;
            emit(g, j, "inconclusive");
            return g.strict ? kExitInconclusive : 0;
        }
        j["x"] = "1-";
        j["word"] = word_json(*out.word);
        emit(g, j, out.word->str());
        return 0;
    }
    if (sys == System::pos && x_text == "1") {
        auto out = d_pos_one(base, cap);
        j["x"] = "1";
        if (!out.periodic()) {
            j["outcome"] = "inconclusive";
            j["steps_taken"] = out.steps_taken;
            emit(g, j, "inconclusive");
            return g.strict ? kExitInconclusive : 0;
        }
        j["word"] = word_json(*out.word);
        emit(g, j, out.word->str());
        return 0;
    }

    FieldElem x = parse_point(base, x_text);
    auto [k, out] = expand_any(sys, x, cap);
    j["x"] = x.coords_str();
    j["exponent"] = k;
    if (!out.periodic()) {
        j["outcome"] = "inconclusive";
        j["steps_taken"] = out.steps_taken;
        emit(g, j, "inconclusive");
        return g.strict ? kExitInconclusive : 0;
    }
    j["word"] = word_json(*out.word);
    j["steps_taken"] = out.steps_taken;
    emit(g, j, out.word->str());
    return 0;
}

int run_classify(const GlobalOpts& g, const std::string& base_text, long cap) {
    BasePtr base = parse_base(base_text);
    ClassificationReport rep = classify(base, cap);
    Json j = report_json(rep);
    std::string plain = std::string("pisot=") + verdict_str(rep.is_pisot) +
                        " salem=" + verdict_str(rep.is_salem) +
                        " perron=" + verdict_str(rep.is_perron);
    emit(g, j, plain);
    if (g.strict && (!rep.parry || !rep.ito_sadahiro)) return kExitInconclusive;
    return 0;
}

int run_ispoly(const GlobalOpts& g, const std::string& word_text, bool simple) {
    EPWord w = EPWord::parse(word_text);
    Json j;
    j["word"] = word_json(w);
    if (simple) {
        IntPoly p = build_is_poly_simple(w);
        j["coeffs"] = p.coeff_list_str();
        j["pretty"] = p.pretty();
        emit(g, j, p.coeff_list_str());
        return 0;
    }
    ISPolyResult isp = build_is_poly(w);
    j["m"] = isp.m;
    j["p"] = isp.p;
    j["coeffs"] = isp.polynomial.coeff_list_str();
    j["monic"] = isp.monic_normalized.coeff_list_str();
    j["pretty"] = isp.monic_normalized.pretty();
    emit(g, j, isp.polynomial.coeff_list_str());
    return 0;
}

int run_admissible(const GlobalOpts& g, const std::string& system, const std::string& word_text,
                   const std::string& base_text, long cap) {
    EPWord w = EPWord::parse(word_text);
    BasePtr base = parse_base(base_text);
    Json j;
    j["system"] = system;
    j["word"] = word_json(w);
    Admissibility adm{false, std::nullopt};
    if (system == "pos") {
        auto dstar = d_star_pos_one(base, cap);
        if (!dstar.periodic()) {
            j["outcome"] = "inconclusive";
            emit(g, j, "inconclusive");
            return g.strict ? kExitInconclusive : 0;
        }
        adm = is_admissible_pos(w, *dstar.word);
    } else {
        auto dl = d_neg_l(base, cap);
        if (!dl.periodic()) {
            j["outcome"] = "inconclusive";
            emit(g, j, "inconclusive");
            return g.strict ? kExitInconclusive : 0;
        }
        adm = is_admissible_neg(w, *dl.word, d_star_neg_r(*dl.word));
    }
    j["admissible"] = adm.ok;
    if (adm.violating_shift)
        j["violating_shift"] = *adm.violating_shift;
    else
        j["violating_shift"] = nullptr;
    emit(g, j, adm.ok ? "admissible" : "not admissible");
    return 0;
}

int run_integers(const GlobalOpts& g, const std::string& system, const std::string& base_text,
                 const std::string& bound_text, long cap) {
    BasePtr base = parse_base(base_text);
    BigRat bound = parse_rat(bound_text);
    std::vector<LatticePoint> points;
    if (system == "pos") {
        auto dstar = d_star_pos_one(base, cap);
        if (!dstar.periodic()) {
            std::cerr << "Parry data inconclusive: cannot enumerate\n";
            return g.strict ? kExitInconclusive : kExitUsage;
        }
        points = enumerate_pos(base, bound, *dstar.word);
    } else {
        auto dl = d_neg_l(base, cap);
        if (!dl.periodic()) {
            std::cerr << "Ito-Sadahiro data inconclusive: cannot enumerate\n";
            return g.strict ? kExitInconclusive : kExitUsage;
        }
        points = enumerate_neg(base, bound, *dl.word);
    }
    for (const auto& p : points) {
        if (g.plain)
            std::cout << p.value.decimal_approx(20) << "\n";
        else
            std::cout << lattice_point_json(p).dump() << "\n";
    }
    return 0;
}

int run_fin(const GlobalOpts& g, const std::string& base_text, const std::string& x_text,
            long cap, long sample, std::uint64_t seed) {
    BasePtr base = parse_base(base_text);
    if (sample > 0) {
        auto dl = d_neg_l(base, cap);
        if (!dl.periodic()) {
            std::cerr << "Ito-Sadahiro data inconclusive: cannot sample\n";
            return g.strict ? kExitInconclusive : kExitUsage;
        }
        ClosureReport rep = closure_sample(base, sample, cap, seed, *dl.word);
        Json j;
        j["additions"] = rep.additions;
        j["multiplications"] = rep.multiplications;
        j["finite"] = rep.finite;
        j["infinite"] = rep.infinite;
        j["inconclusive"] = rep.inconclusive;
        emit(g, j, "finite=" + std::to_string(rep.finite) + " infinite=" +
                       std::to_string(rep.infinite));
        return (g.strict && rep.inconclusive > 0) ? kExitInconclusive : 0;
    }
    FieldElem x = parse_point(base, x_text);
    Finiteness f = fin_membership(x, cap);
    const char* status = f == Finiteness::finite
                             ? "in_Fin"
                             : (f == Finiteness::infinite_periodic ? "not_in_Fin" : "inconclusive");
    Json j;
    j["x"] = x.coords_str();
    j["status"] = status;
    emit(g, j, status);
    return (g.strict && f == Finiteness::inconclusive) ? kExitInconclusive : 0;
}

fs::path cache_file() {
    const char* env = std::getenv("NEGABASE_CACHE_DIR");
    fs::path dir = env ? fs::path(env) : fs::path(".negabase_cache");
    fs::create_directories(dir);
    return dir / "scan_cache.jsonl";
}

int run_scan(const GlobalOpts& g, const std::string& family_text, long cap, int jobs,
             bool fresh) {
    Family fam = parse_family(family_text);
    auto polys = fam.enumerate();

    fs::path cache = cache_file();
    std::map<std::string, std::string> cached;  // base key -> emitted line
    if (!fresh && fs::exists(cache)) {
        std::ifstream in(cache);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = Json::parse(line, nullptr, false);
            if (!j.is_discarded() && j.contains("base_poly"))
                cached[j["base_poly"].get<std::string>()] = line;
        }
    }

    auto [entries, summary] =
        scan(polys, cap, jobs, [&](const std::string& key) { return cached.count(key) > 0; });

    std::ofstream out(cache, std::ios::app);
    bool counterexample = false;
    for (const auto& e : entries) {
        if (e.note == "cached") {
            std::cout << cached[e.base_key] << "\n";
            continue;
        }
        if (!e.report) {
            Json j;
            j["base_poly"] = e.base_key;
            j["note"] = e.note;
            std::cout << j.dump() << "\n";
            continue;
        }
        Json j = report_json(*e.report);
        if (e.discrepancy) {
            j["conjecture_counterexample"] = true;
            counterexample = true;
        }
        std::string line = j.dump();
        std::cout << line << "\n";
        out << line << "\n";
    }
    Json s;
    s["summary"]["total"] = summary.total;
    s["summary"]["skipped"] = summary.skipped;
    s["summary"]["both_periodic"] = summary.both_periodic;
    s["summary"]["parry_only"] = summary.parry_only;
    s["summary"]["ito_sadahiro_only"] = summary.ito_sadahiro_only;
    s["summary"]["inconclusive"] = summary.inconclusive;
    std::cout << s.dump() << "\n";
    if (counterexample)
        std::cerr << "WARNING: Parry/Ito-Sadahiro discrepancy observed; review required\n";
    if (g.strict && summary.inconclusive > 0) return kExitInconclusive;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact positive- and negative-base numeration toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand too

    GlobalOpts g;
    app.add_flag("--plain", g.plain, "plain text output instead of JSON");
    app.add_flag("--strict", g.strict, "exit 3 on inconclusive verdicts");

    std::string base_text, x_text = "l", word_text, bound_text = "10", family_text;
    std::string system = "neg";
    long cap = 100000;
    long sample = 0;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool fresh = false, simple = false;

    auto* expand_cmd = app.add_subcommand("expand", "digit expansion of a point");
    expand_cmd->add_option("system", system)->check(CLI::IsMember({"pos", "neg"}))->required();
    expand_cmd->add_option("--base", base_text)->required();
    expand_cmd->add_option("--x", x_text, "l, r-, 1, 1-, 0, rational, or coords");
    expand_cmd->add_option("--cap", cap);

    auto* classify_cmd = app.add_subcommand("classify", "full per-base report");
    classify_cmd->add_option("--base", base_text)->required();
    classify_cmd->add_option("--cap", cap);

    auto* ispoly_cmd = app.add_subcommand("ispoly", "Ito-Sadahiro polynomial of a word");
    ispoly_cmd->add_option("--word", word_text)->required();
    ispoly_cmd->add_flag("--simple", simple, "use the finite-expansion form");

    auto* adm_cmd = app.add_subcommand("admissible", "admissibility of a digit word");
    adm_cmd->add_option("system", system)->check(CLI::IsMember({"pos", "neg"}))->required();
    adm_cmd->add_option("--word", word_text)->required();
    adm_cmd->add_option("--base", base_text)->required();
    adm_cmd->add_option("--cap", cap);

    auto* int_cmd = app.add_subcommand("integers", "enumerate beta- or (-beta)-integers");
    int_cmd->add_option("system", system)->check(CLI::IsMember({"pos", "neg"}))->required();
    int_cmd->add_option("--base", base_text)->required();
    int_cmd->add_option("--bound", bound_text);
    int_cmd->add_option("--cap", cap);

    auto* fin_cmd = app.add_subcommand("fin", "Fin(-beta) membership / closure sampling");
    fin_cmd->add_option("--base", base_text)->required();
    fin_cmd->add_option("--x", x_text);
    fin_cmd->add_option("--cap", cap);
    fin_cmd->add_option("--sample", sample, "run N closure samples instead");
    fin_cmd->add_option("--seed", seed);

    auto* scan_cmd = app.add_subcommand("scan", "classify a polynomial family");
    scan_cmd->add_option("--family", family_text)->required();
    scan_cmd->add_option("--cap", cap);
    scan_cmd->add_option("--jobs", jobs);
    scan_cmd->add_flag("--fresh", fresh, "ignore the scan cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (expand_cmd->parsed()) return run_expand(g, system, base_text, x_text, cap);
        if (classify_cmd->parsed()) return run_classify(g, base_text, cap);
        if (ispoly_cmd->parsed()) return run_ispoly(g, word_text, simple);
        if (adm_cmd->parsed()) return run_admissible(g, system, word_text, base_text, cap);
        if (int_cmd->parsed()) return run_integers(g, system, base_text, bound_text, cap);
        if (fin_cmd->parsed()) return run_fin(g, base_text, x_text, cap, sample, seed);
        if (scan_cmd->parsed()) return run_scan(g, family_text, cap, jobs, fresh);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
