#include "wst/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wst/errors.hpp"
#include "wst/homology.hpp"
#include "wst/random.hpp"
#include "wst/rtorsion.hpp"
#include "wst/spectral.hpp"
#include "wst/wsc.hpp"

namespace wst {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string input = "-";
    bool json = false;
    double tol = 1e-10;
    int max_dim = -1;
    int degree = -1;
    std::string mode = "both";
    std::string law;
    unsigned trials = 20;
    std::uint64_t seed = 0;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

ordered_json complex_block(const SimplicialComplex& k) {
    ordered_json j;
    j["vertices"] = k.vertex_count();
    j["dimension"] = k.dimension();
    std::vector<std::size_t> counts;
    for (int n = 0; n <= k.dimension(); ++n) counts.push_back(k.simplex_count(n));
    j["simplex_counts"] = counts;
    j["euler_characteristic"] = euler_characteristic(k);
    return j;
}

void print_complex_line(const SimplicialComplex& k, std::ostream& out) {
    out << "complex: " << k.vertex_count() << " vertices, dimension " << k.dimension()
        << ", simplex counts";
    if (k.dimension() < 0) out << " (none)";
    for (int n = 0; n <= k.dimension(); ++n) out << " " << k.simplex_count(n);
    out << ", euler characteristic " << euler_characteristic(k) << "\n";
}

ordered_json gram_to_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_validate(const SimplicialComplex& k, const WeightPair& w, const Options& opt,
                 std::ostream& out) {
    bool closed = true;
    for (int n = 1; n <= k.dimension() && closed; ++n) {
        for (const Simplex& s : k.simplices(n)) {
            for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
                if (!k.contains(s.face(i))) closed = false;
            }
        }
    }
    bool boundary_squares_to_zero = true;
    for (int n = 1; n <= k.dimension(); ++n) {
        if (!(boundary_matrix(k, w.f, n) * boundary_matrix(k, w.f, n + 1)).is_zero()) {
            boundary_squares_to_zero = false;
        }
    }
    bool gram_psd = true;
    for (int n = 0; n <= k.dimension(); ++n) {
        if (!is_psd(gram_matrix(k, w.g, n))) gram_psd = false;
    }
    const bool valid = closed && boundary_squares_to_zero && gram_psd;

    std::vector<std::string> maximal;
    for (const Simplex& s : k.maximal_faces()) maximal.push_back(k.label(s));

    if (opt.json) {
        ordered_json j;
        j["command"] = "validate";
        j["complex"] = complex_block(k);
        j["valid"] = valid;
        j["audit"] = {{"closure", closed},
                      {"boundary_squared_zero", boundary_squares_to_zero},
                      {"gram_psd", gram_psd}};
        j["maximal_faces"] = maximal;
        out << j.dump(2) << "\n";
    } else {
        print_complex_line(k, out);
        out << "valid: " << (valid ? "yes" : "NO") << "\n";
        out << "maximal faces:";
        for (const auto& m : maximal) out << " " << m;
        out << "\n";
    }
    return valid ? 0 : 2;
}

int cmd_homology(const SimplicialComplex& k, const WeightPair& w, const Options& opt,
                 std::ostream& out) {
    int top = k.dimension();
    if (opt.max_dim >= 0 && opt.max_dim < top) top = opt.max_dim;

    ordered_json degrees = ordered_json::array();
    std::ostringstream text;
    for (int n = 0; n <= top; ++n) {
        const HomologyResult h = weighted_homology(k, w.f, w.g, n);
        if (opt.json) {
            ordered_json entry;
            entry["degree"] = n;
            entry["betti"] = h.betti;
            entry["inner_product"] = h.inner_product;
            entry["gram"] = gram_to_json(h.form.gram);
            degrees.push_back(std::move(entry));
        } else {
            text << "degree " << n << ": betti " << h.betti << ", inner product "
                 << (h.inner_product ? "yes" : "no") << "\n";
            for (std::size_t i = 0; i < h.form.gram.rows(); ++i) {
                text << "  [";
                for (std::size_t j = 0; j < h.form.gram.cols(); ++j) {
                    if (j) text << " ";
                    text << to_string(h.form.gram(i, j));
                }
                text << "]\n";
            }
        }
    }

    if (opt.json) {
        ordered_json j;
        j["command"] = "homology";
        j["complex"] = complex_block(k);
        j["homology"] = std::move(degrees);
        out << j.dump(2) << "\n";
    } else {
        print_complex_line(k, out);
        out << text.str();
    }
    return 0;
}

int cmd_spectrum(const SimplicialComplex& k, const WeightPair& w, const Options& opt,
                 std::ostream& out) {
    const SimplicialComplex kx = restrict_nonvanishing(k, w.g);
    std::vector<int> degrees;
    if (opt.degree >= 0) {
        degrees.push_back(opt.degree);
    } else {
        for (int n = 0; n <= kx.dimension(); ++n) degrees.push_back(n);
    }

    ordered_json spectra = ordered_json::array();
    std::ostringstream text;
    for (int n : degrees) {
        const SpectralBundle bundle = spectral_bundle(kx, w.f, w.g, n, opt.tol);
        if (opt.json) {
            ordered_json entry;
            entry["degree"] = n;
            entry["dimension"] = bundle.symmetrized.rows();
            entry["exact_rank"] = bundle.exact_rank;
            entry["pseudo_det"] = to_string(bundle.pseudo_det);
            entry["eigenvalues"] = bundle.eigenvalues;
            entry["zeros_within_tol"] = bundle.zeros_within_tol;
            spectra.push_back(std::move(entry));
        } else {
            text << "degree " << n << ": dimension " << bundle.symmetrized.rows()
                 << ", exact rank " << bundle.exact_rank << ", pseudo-determinant "
                 << to_string(bundle.pseudo_det) << "\n  eigenvalues:";
            for (double v : bundle.eigenvalues) text << " " << format_double(v);
            text << "\n";
        }
    }

    if (opt.json) {
        ordered_json j;
        j["command"] = "spectrum";
        j["complex"] = complex_block(k);
        j["restricted"] = complex_block(kx);
        j["spectra"] = std::move(spectra);
        out << j.dump(2) << "\n";
    } else {
        print_complex_line(k, out);
        out << "restricted ";
        print_complex_line(kx, out);
        out << text.str();
    }
    return 0;
}

int cmd_torsion(const SimplicialComplex& k, const WeightPair& w, const Options& opt,
                std::ostream& out) {
    ordered_json j;
    j["command"] = "torsion";
    j["complex"] = complex_block(k);
    j["mode"] = opt.mode;
    std::ostringstream text;
    int code = 0;

    if (opt.mode == "exact") {
        const SimplicialComplex kx = restrict_nonvanishing(k, w.g);
        Rational squared(1);
        std::vector<std::string> pdets;
        for (int n = 0; n <= kx.dimension(); ++n) {
            const RationalMatrix s =
                symmetrize(hodge_laplacian(kx, w.f, w.g, n), gram_matrix(kx, w.g, n));
            const Rational p = pseudo_det(s);
            pdets.push_back(to_string(p));
            squared *= pow_int(p, (n % 2 == 0) ? -n : n);
        }
        const long s_exp = s_exponent(k, epsilon(w.g));
        const double value = std::sqrt(to_double(squared));
        j["torsion"] = {{"squared", to_string(squared)},
                        {"value", value},
                        {"s_exponent", s_exp},
                        {"pseudo_determinants", pdets}};
        text << "T^2 = " << to_string(squared) << " (exact), T = " << format_double(value)
             << ", s = " << s_exp << "\n";
    } else {
        const TorsionResult result = analytic_torsion(k, w.f, w.g, opt.tol);
        if (opt.mode == "float") {
            j["torsion"] = {{"log", result.log_torsion}, {"value", result.torsion}};
            text << "T = " << format_double(result.torsion)
                 << ", log T = " << format_double(result.log_torsion) << "\n";
        } else {
            const bool consistent = result.route_disagreement <= opt.tol;
            j["torsion"] = {{"squared", to_string(result.torsion_squared_exact)},
                            {"value", result.torsion},
                            {"log", result.log_torsion},
                            {"s_exponent", result.s_exponent},
                            {"route_disagreement", result.route_disagreement},
                            {"consistent", consistent}};
            text << "T^2 = " << to_string(result.torsion_squared_exact)
                 << " (exact), T = " << format_double(result.torsion)
                 << ", log T = " << format_double(result.log_torsion)
                 << ", s = " << result.s_exponent << "\n";
            if (!consistent) {
                text << "route disagreement " << format_double(result.route_disagreement)
                     << " exceeds tolerance " << format_double(opt.tol) << "\n";
                code = 2;
            }
        }
    }

    if (opt.json) {
        out << j.dump(2) << "\n";
    } else {
        print_complex_line(k, out);
        out << text.str();
    }
    return code;
}

int cmd_check(const SimplicialComplex& k, const Options& opt, std::ostream& out) {
    WeightRng rng(opt.seed);
    const std::vector<Rational> c_values = {make_rational(2), make_rational(-3),
                                            make_rational(1, 5)};
    unsigned passed = 0;
    ordered_json failures = ordered_json::array();
    std::ostringstream failure_text;

    for (unsigned trial = 0; trial < opt.trials; ++trial) {
        std::vector<Certificate> certs;
        if (opt.law == "scale") {
            const VertexWeights f = rng.weights(k.vertex_count(), true);
            const VertexWeights g = rng.weights(k.vertex_count(), true);
            const VertexWeights h = rng.weights(k.vertex_count(), false);
            certs.push_back(check_scale_invariance(k, f, g, h));
        } else if (opt.law == "gscale" || opt.law == "fscale") {
            const VertexWeights g = rng.weights(k.vertex_count(), true);
            const VertexWeights f = rng.weights_covering(g);
            for (const Rational& c : c_values) {
                certs.push_back(opt.law == "gscale" ? check_g_scaling(k, f, g, c)
                                                    : check_f_scaling(k, f, g, c));
            }
        } else if (opt.law == "main") {
            const VertexWeights f = rng.weights(k.vertex_count(), true);
            const VertexWeights g = rng.weights(k.vertex_count(), true);
            const VertexWeights h = rng.weights(k.vertex_count(), false);
            for (const Rational& c : c_values) {
                certs.push_back(check_main_theorem(k, f, g, h, c));
            }
        } else {  // rtorsion
            const VertexWeights f = rng.weights(k.vertex_count(), true);
            const VertexWeights g = rng.weights(k.vertex_count(), true);
            certs.push_back(torsion_equivalence_check(k, f, g));
        }

        bool ok = true;
        for (const Certificate& cert : certs) {
            if (!cert.passed) {
                ok = false;
                if (failures.size() < 5) {
                    failures.push_back({{"trial", trial}, {"detail", cert.detail}});
                    failure_text << "  trial " << trial << ": " << cert.detail << "\n";
                }
            }
        }
        if (ok) ++passed;
    }

    const unsigned failed = opt.trials - passed;
    if (opt.json) {
        ordered_json j;
        j["command"] = "check";
        j["complex"] = complex_block(k);
        j["check"] = {{"law", opt.law},   {"trials", opt.trials}, {"seed", opt.seed},
                      {"passed", passed}, {"failed", failed},     {"failures", failures}};
        out << j.dump(2) << "\n";
    } else {
        print_complex_line(k, out);
        out << "check law=" << opt.law << ": " << passed << "/" << opt.trials
            << " trials passed (seed " << opt.seed << ")\n"
            << failure_text.str();
    }
    return failed == 0 ? 0 : 3;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"weighted simplicial complex torsion toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto* validate = app.add_subcommand("validate", "parse the input and audit invariants");
    auto* homology = app.add_subcommand("homology", "weighted homology with induced forms");
    homology->add_option("--max-dim", opt.max_dim, "highest degree to report");
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "Hodge-Laplace spectra on the g-nonvanishing part");
    spectrum_cmd->add_option("--degree", opt.degree, "report a single degree");
    auto* torsion_cmd = app.add_subcommand("torsion", "analytic torsion");
    torsion_cmd->add_option("--mode", opt.mode, "exact, float, or both")
        ->check(CLI::IsMember(std::vector<std::string>{"exact", "float", "both"}));
    auto* check_cmd = app.add_subcommand("check", "randomized certificates of the torsion laws");
    check_cmd
        ->add_option("--law", opt.law, "scale, gscale, fscale, main, or rtorsion")
        ->required()
        ->check(CLI::IsMember(
            std::vector<std::string>{"scale", "gscale", "fscale", "main", "rtorsion"}));
    check_cmd->add_option("--trials", opt.trials, "number of randomized trials");
    check_cmd->add_option("--seed", opt.seed, "random seed");

    for (auto* sub : {validate, homology, spectrum_cmd, torsion_cmd, check_cmd}) {
        sub->add_option("--input", opt.input, "input .wsc path, '-' for stdin");
        sub->add_flag("--json", opt.json, "emit a JSON report");
        sub->add_option("--tol", opt.tol, "float comparison tolerance");
    }

    std::vector<const char*> argv;
    argv.push_back("wst");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        const std::string text = read_input(opt.input, in);
        auto [k, w] = parse_wsc(text);

        if (validate->parsed()) return cmd_validate(k, w, opt, out);
        if (homology->parsed()) return cmd_homology(k, w, opt, out);
        if (spectrum_cmd->parsed()) return cmd_spectrum(k, w, opt, out);
        if (torsion_cmd->parsed()) return cmd_torsion(k, w, opt, out);
        return cmd_check(k, opt, out);
    } catch (const SyntaxError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const UnsupportedVersion& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownVertex& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DuplicateVertex& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const VanishingScale& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const ZeroScalar& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const HypothesisViolated& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const EigenFailure& e) {
        err << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace wst
