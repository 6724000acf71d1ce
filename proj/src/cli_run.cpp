#include "cli_run.hpp"

#include "cyltor/cylinder.hpp"
#include "cyltor/factor.hpp"
#include "cyltor/fox.hpp"
#include "cyltor/poly_text.hpp"
#include "cyltor/torsion.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cyltor::cli {

namespace {

using nlohmann::ordered_json;

SurfaceSignature parse_surface(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--surface", "expected g,n");
    int g = std::stoi(text.substr(0, comma));
    int n = std::stoi(text.substr(comma + 1));
    if (g < 0 || n < 0) throw CLI::ValidationError("--surface", "g and n must be >= 0");
    return SurfaceSignature{g, n};
}

IntMatrix parse_matrix(const std::string& text, int rows, int cols, const char* what) {
    IntMatrix m(rows, cols);
    std::stringstream ss(text);
    std::string row;
    int i = 0;
    while (std::getline(ss, row, ';')) {
        std::stringstream rs(row);
        std::string cell;
        int j = 0;
        while (std::getline(rs, cell, ',')) {
            if (i >= rows || j >= cols)
                throw std::invalid_argument(std::string(what) + ": matrix shape mismatch");
            m.at(i, j) = Int(cell);
            ++j;
        }
        if (j != cols) throw std::invalid_argument(std::string(what) + ": matrix shape mismatch");
        ++i;
    }
    if (i != rows) throw std::invalid_argument(std::string(what) + ": matrix shape mismatch");
    return m;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json cylinder_json(const TorsionClass& c) {
    ordered_json j;
    j["genus"] = c.signature().genus;
    j["boundary"] = c.signature().boundary_components;
    j["phi"] = matrix_json(c.phi().full_matrix());
    j["tau_num"] = print_polynomial(c.tau().numerator());
    j["tau_den"] = print_polynomial(c.tau().denominator());
    return j;
}

TorsionClass cylinder_from_json(const ordered_json& j) {
    SurfaceSignature sig{j.at("genus").get<int>(), j.at("boundary").get<int>()};
    int nb = sig.boundary_rank(), ns = sig.symplectic_rank();
    const auto& phi = j.at("phi");
    if (static_cast<int>(phi.size()) != sig.rank())
        throw std::invalid_argument("cylinder descriptor: phi has wrong shape");
    IntMatrix mixing(nb, ns), symplectic(ns, ns);
    for (int i = 0; i < sig.rank(); ++i) {
        const auto& row = phi.at(i);
        if (static_cast<int>(row.size()) != sig.rank())
            throw std::invalid_argument("cylinder descriptor: phi has wrong shape");
        for (int k = 0; k < sig.rank(); ++k) {
            Int v(row.at(k).get<long long>());
            if (i < nb && k < nb) {
                if (v != (i == k ? 1 : 0))
                    throw std::invalid_argument(
                        "cylinder descriptor: phi must fix the boundary block");
            } else if (i < nb) {
                mixing.at(i, k - nb) = v;
            } else if (k < nb) {
                if (v != 0)
                    throw std::invalid_argument(
                        "cylinder descriptor: phi must be block triangular");
            } else {
                symplectic.at(i - nb, k - nb) = v;
            }
        }
    }
    LaurentPolynomial num = parse_polynomial(j.at("tau_num").get<std::string>(), sig);
    LaurentPolynomial den = parse_polynomial(j.at("tau_den").get<std::string>(), sig);
    return TorsionClass(AutStarElement(sig, std::move(mixing), std::move(symplectic)),
                        LaurentFraction(num, den));
}

TorsionClass load_cylinder(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cylinder file: " + path);
    ordered_json j;
    in >> j;
    return cylinder_from_json(j);
}

ordered_json factorization_json(const Factorization& f) {
    ordered_json j;
    std::string unit = f.unit.sign < 0 ? "-" : "";
    LaurentPolynomial mono =
        LaurentPolynomial::monomial(f.signature, f.unit.monomial, 1);
    unit += print_polynomial(mono);
    j["unit"] = unit;
    ordered_json factors = ordered_json::array();
    for (const auto& [cls, exp] : f.factors) {
        ordered_json e;
        e["poly"] = print_polynomial(cls.rep());
        e["exp"] = exp;
        factors.push_back(std::move(e));
    }
    j["factors"] = std::move(factors);
    return j;
}

std::string three_valued_str(ThreeValued v) {
    switch (v) {
        case ThreeValued::Yes: return "yes";
        case ThreeValued::No: return "no";
        default: return "unknown";
    }
}

int default_depth() {
    if (const char* env = std::getenv("CYLTOR_DEPTH")) {
        int d = std::atoi(env);
        if (d >= 0) return d;
    }
    return 4;
}

struct CommandContext {
    std::vector<std::string> argv;
    ordered_json record() const {
        ordered_json j;
        j["argv"] = argv;
        return j;
    }
};

} // namespace

RunResult run_command(const std::vector<std::string>& args) {
    RunResult result;
    CommandContext ctx{args};

    CLI::App app{"exact torsion calculus for homology cylinders"};
    app.require_subcommand(1);

    std::string surface_text = "0,2";
    int depth = default_depth();
    int samples = 1 << 16;
    std::uint64_t seed = 0;
    std::string mode_text = "sim";
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human readable output");

    auto add_common = [&](CLI::App* sub, bool with_mode) {
        sub->add_option("--surface", surface_text, "surface signature g,n");
        sub->add_option("--depth", depth, "Aut* search depth");
        if (with_mode)
            sub->add_option("--mode", mode_text, "equivalence mode: unit or sim")
                ->check(CLI::IsMember({"unit", "sim"}));
        sub->add_flag("--pretty", pretty, "human readable output");
    };

    // factor
    std::string poly_text, q_text, lambda_text, den_text = "1";
    auto* cmd_factor = app.add_subcommand("factor", "irreducible factorization in Z[H]");
    cmd_factor->add_option("poly", poly_text)->required();
    cmd_factor->add_option("--den", den_text, "optional denominator");
    add_common(cmd_factor, false);

    auto* cmd_psi = app.add_subcommand("psi", "Psi_lambda invariant (Z/2)");
    cmd_psi->add_option("--p", poly_text)->required();
    cmd_psi->add_option("--den", den_text);
    cmd_psi->add_option("--lambda", lambda_text)->required();
    add_common(cmd_psi, true);

    std::string mu_text;
    auto* cmd_theta = app.add_subcommand("theta", "Theta_mu invariant (Z)");
    cmd_theta->add_option("--p", poly_text)->required();
    cmd_theta->add_option("--den", den_text);
    cmd_theta->add_option("--mu", mu_text)->required();
    add_common(cmd_theta, true);

    auto* cmd_profile = app.add_subcommand("profile", "all Psi/Theta components");
    cmd_profile->add_option("--p", poly_text)->required();
    cmd_profile->add_option("--den", den_text);
    add_common(cmd_profile, true);

    auto* cmd_norm = app.add_subcommand("norm-test", "membership in N(H) = {+-h q qbar}");
    cmd_norm->add_option("--p", poly_text)->required();
    cmd_norm->add_option("--den", den_text);
    add_common(cmd_norm, false);

    auto* cmd_mahler = app.add_subcommand("mahler", "Mahler measure estimate");
    cmd_mahler->add_option("--p", poly_text)->required();
    cmd_mahler->add_option("--samples", samples, "torus sample count");
    cmd_mahler->add_option("--seed", seed, "sampling seed");
    add_common(cmd_mahler, false);

    auto* cmd_dist = app.add_subcommand("distinguish", "Aut*-equivalence semi-decision");
    cmd_dist->add_option("p", poly_text)->required();
    cmd_dist->add_option("q", q_text)->required();
    add_common(cmd_dist, false);

    int fox_rank = 2;
    std::string words_text, map_text;
    auto* cmd_fox = app.add_subcommand("fox", "torsion from attaching words");
    cmd_fox->add_option("--rank", fox_rank, "free rank")->required();
    cmd_fox->add_option("--words", words_text, "comma separated attaching words")->required();
    cmd_fox->add_option("--map", map_text, "identification matrix rows 'a,b;c,d'");
    add_common(cmd_fox, false);

    long pr = 0, ps = 0, pt = 0;
    auto* cmd_pretzel = app.add_subcommand("pretzel", "pretzel cylinder M(r,s,t)");
    cmd_pretzel->add_option("r", pr)->required();
    cmd_pretzel->add_option("s", ps)->required();
    cmd_pretzel->add_option("t", pt)->required();
    cmd_pretzel->add_flag("--pretty", pretty);

    long search_x = 0;
    auto* cmd_search = app.add_subcommand("pretzel-search", "family search at an odd prime");
    cmd_search->add_option("x", search_x)->required();
    cmd_search->add_flag("--pretty", pretty);

    int ma_a = 0, ma_genus = 1;
    auto* cmd_ma = app.add_subcommand("ma", "the cylinder M(a) over Sigma_{g,2}");
    cmd_ma->add_option("a", ma_a)->required();
    cmd_ma->add_option("--genus", ma_genus);
    cmd_ma->add_flag("--pretty", pretty);

    std::string file_a, file_b;
    auto* cmd_stack = app.add_subcommand("stack", "stack two cylinders");
    cmd_stack->add_option("first", file_a)->required();
    cmd_stack->add_option("second", file_b)->required();
    cmd_stack->add_flag("--pretty", pretty);

    int glue_c = 1, glue_cprime = 1;
    auto* cmd_glue = app.add_subcommand("glue", "glue along boundary components");
    cmd_glue->add_option("first", file_a)->required();
    cmd_glue->add_option("second", file_b)->required();
    cmd_glue->add_option("--c", glue_c, "boundary component of the first");
    cmd_glue->add_option("--cprime", glue_cprime, "boundary component of the second");
    cmd_glue->add_flag("--pretty", pretty);

    std::string alexander_text, at_text;
    auto* cmd_tie = app.add_subcommand("tie-knot", "tie a knot into a cylinder");
    cmd_tie->add_option("cylinder", file_a)->required();
    cmd_tie->add_option("--alexander", alexander_text, "Alexander polynomial in t")->required();
    cmd_tie->add_option("--at", at_text, "group element h (monomial)")->required();
    cmd_tie->add_flag("--pretty", pretty);

    std::string mixing_text, symplectic_text;
    auto* cmd_mc = app.add_subcommand("mapping-class", "cylinder of a mapping class");
    cmd_mc->add_option("--surface", surface_text)->required();
    cmd_mc->add_option("--mixing", mixing_text, "mixing block rows 'a,b;c,d'");
    cmd_mc->add_option("--symplectic", symplectic_text, "symplectic block rows");
    cmd_mc->add_flag("--pretty", pretty);

    std::vector<const char*> argv_c;
    argv_c.push_back("cyltor");
    for (const auto& a : args) argv_c.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv_c.size()), argv_c.data());
    } catch (const CLI::CallForHelp& e) {
        result.report["help"] = app.help();
        result.exit_code = 0;
        result.pretty = app.help();
        result.use_pretty = true;
        return result;
    } catch (const CLI::ParseError& e) {
        result.report["command"] = ctx.record();
        result.report["error"] = e.what();
        result.exit_code = 1;
        return result;
    }

    result.use_pretty = pretty;
    ordered_json& rep = result.report;
    rep["command"] = ctx.record();

    try {
        SurfaceSignature sig = parse_surface(surface_text);
        EquivalenceMode mode =
            mode_text == "unit" ? EquivalenceMode::Unit : EquivalenceMode::Sim;

        if (*cmd_factor) {
            LaurentFraction f(parse_polynomial(poly_text, sig),
                              parse_polynomial(den_text, sig));
            Factorization fac = factor(f);
            ordered_json fj = factorization_json(fac);
            rep["unit"] = fj["unit"];
            rep["factors"] = fj["factors"];
            std::ostringstream p;
            p << "unit " << rep["unit"].get<std::string>() << "\n";
            for (const auto& e : rep["factors"])
                p << "  (" << e["poly"].get<std::string>() << ")^" << e["exp"].get<int>()
                  << "\n";
            result.pretty = p.str();
        } else if (*cmd_psi) {
            LaurentFraction f(parse_polynomial(poly_text, sig),
                              parse_polynomial(den_text, sig));
            int bit = psi(f, parse_polynomial(lambda_text, sig), mode, depth);
            rep["mode"] = mode_text;
            rep["depth"] = depth;
            rep["psi"] = bit;
            result.pretty = "psi = " + std::to_string(bit) + "\n";
        } else if (*cmd_theta) {
            LaurentFraction f(parse_polynomial(poly_text, sig),
                              parse_polynomial(den_text, sig));
            int v = theta(f, parse_polynomial(mu_text, sig), mode, depth);
            rep["mode"] = mode_text;
            rep["depth"] = depth;
            rep["theta"] = v;
            result.pretty = "theta = " + std::to_string(v) + "\n";
        } else if (*cmd_profile) {
            LaurentFraction f(parse_polynomial(poly_text, sig),
                              parse_polynomial(den_text, sig));
            InvariantProfile prof = invariant_profile(f, mode, depth);
            rep["mode"] = mode_text;
            rep["depth"] = depth;
            ordered_json psis = ordered_json::array(), thetas = ordered_json::array(),
                         residual = ordered_json::array();
            for (const auto& c : prof.psi_components)
                psis.push_back({{"class", print_polynomial(c.cls.rep())}, {"bit", c.value}});
            for (const auto& c : prof.theta_components)
                thetas.push_back({{"class", print_polynomial(c.cls.rep())}, {"value", c.value}});
            for (const auto& r : prof.residual)
                residual.push_back({{"class", print_polynomial(r.cls.rep())},
                                    {"exp", r.exponent},
                                    {"reason", r.reason}});
            rep["psi_components"] = std::move(psis);
            rep["theta_components"] = std::move(thetas);
            rep["residual"] = std::move(residual);
            std::ostringstream p;
            p << "psi components: " << prof.psi_components.size()
              << ", theta components: " << prof.theta_components.size()
              << ", residual: " << prof.residual.size() << "\n";
            result.pretty = p.str();
        } else if (*cmd_norm) {
            LaurentFraction f(parse_polynomial(poly_text, sig),
                              parse_polynomial(den_text, sig));
            ThreeValued v = norm_membership(f);
            rep["norm_member"] = three_valued_str(v);
            result.pretty = "norm member: " + three_valued_str(v) + "\n";
        } else if (*cmd_mahler) {
            MahlerEstimate est = mahler_measure(parse_polynomial(poly_text, sig), samples, seed);
            rep["samples"] = est.samples;
            rep["seed"] = seed;
            rep["method"] = est.exact ? "roots" : "torus";
            rep["mahler"] = est.value();
            rep["log_mahler"] = est.log_value;
            rep["std_error"] = est.log_std_error;
            std::ostringstream p;
            p << "mahler = " << est.value() << " (log se " << est.log_std_error << ")\n";
            result.pretty = p.str();
        } else if (*cmd_dist) {
            LaurentPolynomial p1 = parse_polynomial(poly_text, sig);
            LaurentPolynomial p2 = parse_polynomial(q_text, sig);
            rep["depth"] = depth;
            if (auto cert = certify_distinct(p1, p2)) {
                rep["result"] = "distinct";
                rep["invariant"] = cert->invariant;
                rep["detail"] = cert->detail;
                result.pretty = "distinct (invariant: " + cert->invariant + ")\n";
            } else if (auto wit = certify_equivalent(p1, p2, depth)) {
                rep["result"] = "equivalent";
                rep["witness"] = matrix_json(wit->full_matrix());
                result.pretty = "equivalent (witness: " + rep["witness"].dump() + ")\n";
            } else {
                rep["result"] = "inconclusive";
                result.pretty = "inconclusive\n";
            }
        } else if (*cmd_fox) {
            std::vector<FreeWord> words;
            std::stringstream ss(words_text);
            std::string piece;
            while (std::getline(ss, piece, ',')) words.push_back(parse_word(piece, fox_rank));
            SurfaceSignature target = cmd_fox->count("--surface")
                                          ? sig
                                          : SurfaceSignature{0, fox_rank + 1};
            IntMatrix ident = map_text.empty()
                                  ? IntMatrix::identity(fox_rank)
                                  : parse_matrix(map_text, target.rank(), fox_rank, "--map");
            if (map_text.empty() && target.rank() != fox_rank)
                throw std::invalid_argument(
                    "fox: identification map required when rank differs from the surface rank");
            HandlePresentation pres(fox_rank, words, target, std::move(ident));
            CylinderCheck check = cylinder_condition(pres);
            rep["determinant"] = check.determinant.convert_to<long long>();
            rep["is_cylinder"] = check.is_cylinder;
            if (!check.is_cylinder)
                throw std::domain_error("not a homology cylinder: boundary determinant " +
                                        check.determinant.str());
            LaurentPolynomial tau = torsion_from_presentation(pres);
            rep["torsion"] = print_polynomial(tau);
            result.pretty = "torsion = " + rep["torsion"].get<std::string>() + "\n";
        } else if (*cmd_pretzel) {
            TorsionClass c = gen_pretzel(pr, ps, pt);
            rep["validity"] = (pr + ps) * (pt + ps) - ps * ps;
            rep["cylinder"] = cylinder_json(c);
            result.pretty = "tau = " + rep["cylinder"]["tau_num"].get<std::string>() + "\n";
        } else if (*cmd_search) {
            auto triples = pretzel_family_search(search_x);
            ordered_json arr = ordered_json::array();
            for (auto [r, s, t] : triples) arr.push_back({r, s, t});
            rep["triples"] = std::move(arr);
            std::ostringstream p;
            for (auto [r, s, t] : triples)
                p << "(" << r << ", " << s << ", " << t << ")\n";
            result.pretty = p.str();
        } else if (*cmd_ma) {
            TorsionClass c = gen_ma(ma_a, SurfaceSignature{ma_genus, 2});
            rep["cylinder"] = cylinder_json(c);
            rep["tau"] = rep["cylinder"]["tau_num"];
            result.pretty = "tau = " + rep["tau"].get<std::string>() + "\n";
        } else if (*cmd_stack) {
            TorsionClass c = stack(load_cylinder(file_a), load_cylinder(file_b));
            rep["cylinder"] = cylinder_json(c);
            result.pretty = rep["cylinder"].dump(2) + "\n";
        } else if (*cmd_glue) {
            TorsionClass a = load_cylinder(file_a);
            TorsionClass b = load_cylinder(file_b);
            GluingMap gm = make_gluing(a.signature(), glue_c, b.signature(), glue_cprime);
            TorsionClass c = glue(a, b, gm);
            rep["cylinder"] = cylinder_json(c);
            result.pretty = rep["cylinder"].dump(2) + "\n";
        } else if (*cmd_tie) {
            TorsionClass m = load_cylinder(file_a);
            SurfaceSignature one{0, 2};
            LaurentPolynomial alex = parse_polynomial(alexander_text, one, {"t"});
            ExponentVector h = parse_group_element(at_text, m.signature());
            TorsionClass c = tie_knot(m, alex, h);
            rep["cylinder"] = cylinder_json(c);
            result.pretty = rep["cylinder"].dump(2) + "\n";
        } else if (*cmd_mc) {
            int nb = sig.boundary_rank(), ns = sig.symplectic_rank();
            IntMatrix mixing = mixing_text.empty() ? IntMatrix(nb, ns)
                                                   : parse_matrix(mixing_text, nb, ns, "--mixing");
            IntMatrix symp = symplectic_text.empty()
                                 ? IntMatrix::identity(ns)
                                 : parse_matrix(symplectic_text, ns, ns, "--symplectic");
            TorsionClass c = mapping_class(AutStarElement(sig, std::move(mixing), std::move(symp)));
            rep["cylinder"] = cylinder_json(c);
            result.pretty = rep["cylinder"].dump(2) + "\n";
        }
        result.exit_code = 0;
    } catch (const parse_error& e) {
        rep["error"] = e.what();
        rep["offset"] = e.offset();
        result.exit_code = 1;
    } catch (const inconclusive_error& e) {
        rep["error"] = e.what();
        rep["inconclusive"] = true;
        result.exit_code = 2;
    } catch (const std::domain_error& e) {
        rep["error"] = e.what();
        result.exit_code = 2;
    } catch (const std::invalid_argument& e) {
        rep["error"] = e.what();
        result.exit_code = 1;
    } catch (const std::exception& e) {
        rep["error"] = e.what();
        result.exit_code = 1;
    }
    return result;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    RunResult r = run_command(args);
    if (r.use_pretty && !r.pretty.empty())
        std::cout << r.pretty;
    else
        std::cout << r.report.dump(2) << "\n";
    if (r.exit_code != 0 && r.report.contains("error"))
        std::cerr << "error: " << r.report["error"].get<std::string>() << "\n";
    return r.exit_code;
}

} // namespace cyltor::cli
