// wvsim command-line frontend.
//
// Subcommands:
//   weak-value    path-projection weak values at a given coupling strength
//   simulate      one interferometer run: success probability, Bloch vector,
//                 optional finite-shot tomography
//   reconstruct   estimate the path state back from the simulated tomography
//   sweep         ratio bias across a grid of coupling strengths
//
// Reports go to stdout as JSON ({inputs, results, seed, version}) or CSV;
// failures emit {"error": {"kind", "message"}} and a nonzero exit code.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wvsim/experiment.hpp"
#include "wvsim/hilbert.hpp"
#include "wvsim/reconstruction.hpp"
#include "wvsim/tomography.hpp"
#include "wvsim/tsvf.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace wvsim;

constexpr const char* kVersion = "1.0.0";

// ---------- flag plumbing ----------

struct Flags {
    std::string a;
    std::string b;
    std::string pf_a;
    std::string pf_b;
    std::string arm = "II";
    double alpha = 0.0;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    std::string output;  // resolved per command; sweep defaults to csv
    std::string method;
    std::string alphas;
};

Complex parse_complex(const std::string& text, const char* flag) {
    try {
        std::size_t pos = 0;
        const double re = std::stod(text, &pos);
        if (pos == text.size()) return {re, 0.0};
        if (text[pos] != ',') throw std::invalid_argument(text);
        const std::string rest = text.substr(pos + 1);
        std::size_t pos2 = 0;
        const double im = std::stod(rest, &pos2);
        if (pos2 != rest.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(flag) + ": expected RE or RE,IM, got '" + text +
                                    "'");
    }
}

PathState resolve_state(const std::string& a_raw, const std::string& b_raw, const char* what) {
    const Complex a = parse_complex(a_raw, "--a");
    const Complex b = parse_complex(b_raw, "--b");
    const double n2 = std::norm(a) + std::norm(b);
    const PathState state = make_path_state(a, b);
    if (std::abs(n2 - 1.0) > 1e-6) {
        std::fprintf(stderr, "warning: %s normalized (|a|^2 + |b|^2 was %.9g)\n", what, n2);
    }
    return state;
}

PathState resolve_pf(const Flags& f) {
    if (f.pf_a.empty() && f.pf_b.empty()) return symmetric_path_state();
    if (f.pf_a.empty() || f.pf_b.empty()) {
        throw std::invalid_argument("--pf-a and --pf-b must be given together");
    }
    const Complex a = parse_complex(f.pf_a, "--pf-a");
    const Complex b = parse_complex(f.pf_b, "--pf-b");
    const double n2 = std::norm(a) + std::norm(b);
    const PathState state = make_path_state(a, b);
    if (std::abs(n2 - 1.0) > 1e-6) {
        std::fprintf(stderr, "warning: post-selection state normalized (norm^2 was %.9g)\n", n2);
    }
    return state;
}

Arm resolve_arm(const std::string& arm) { return arm == "I" ? Arm::I : Arm::II; }

bool is_symmetric(const PathState& pf) {
    const Complex s{1.0 / std::sqrt(2.0), 0.0};
    return std::abs(pf.a - s) <= 1e-12 && std::abs(pf.b - s) <= 1e-12;
}

std::uint64_t resolve_seed(const Flags& f) {
    if (f.seed) return *f.seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
}

std::vector<double> parse_grid(const std::string& text) {
    const auto bad = [&text]() {
        return std::invalid_argument("--alphas: expected START:STOP:N, got '" + text + "'");
    };
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw bad();
    double start = 0.0, stop = 0.0;
    unsigned long n = 0;
    try {
        std::size_t pos = 0;
        const std::string s0 = text.substr(0, c1);
        const std::string s1 = text.substr(c1 + 1, c2 - c1 - 1);
        const std::string s2 = text.substr(c2 + 1);
        start = std::stod(s0, &pos);
        if (pos != s0.size()) throw bad();
        stop = std::stod(s1, &pos);
        if (pos != s1.size()) throw bad();
        n = std::stoul(s2, &pos);
        if (pos != s2.size()) throw bad();
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
    if (!std::isfinite(start) || !std::isfinite(stop)) throw bad();
    if (n < 2) throw std::invalid_argument("--alphas: grid needs at least 2 points");
    std::vector<double> grid(n);
    for (unsigned long i = 0; i < n; ++i) {
        grid[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return grid;
}

// ---------- serialization ----------

json cj(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json bj(const BlochVector& b) { return json{{"sx", b.sx}, {"sy", b.sy}, {"sz", b.sz}}; }

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json base_inputs(const PathState& pi, const PathState& pf, Arm arm, double alpha) {
    json in;
    in["a"] = cj(pi.a);
    in["b"] = cj(pi.b);
    in["pf"] = json{{"a", cj(pf.a)}, {"b", cj(pf.b)}};
    in["arm"] = arm == Arm::I ? "I" : "II";
    in["alpha"] = alpha;
    return in;
}

json envelope(json inputs, json results, std::optional<std::uint64_t> seed) {
    json report;
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    if (seed) {
        report["seed"] = *seed;
    } else {
        report["seed"] = nullptr;
    }
    report["version"] = kVersion;
    return report;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json counts_json(const std::array<ShotRecord, 3>& records) {
    static const char* names[3] = {"x", "y", "z"};
    json counts;
    for (std::size_t i = 0; i < 3; ++i) {
        counts[names[i]] = json{{"shots", records[i].shots},
                                {"plus_count", records[i].plus_count},
                                {"seed", records[i].seed}};
    }
    return counts;
}

json std_error_json(const BlochEstimate& est) {
    return json{{"sx", est.std_error[0]}, {"sy", est.std_error[1]}, {"sz", est.std_error[2]}};
}

int emit_error(const char* kind, const std::string& message) {
    json err;
    err["error"] = json{{"kind", kind}, {"message", message}};
    std::cout << err.dump(2) << "\n";
    return 1;
}

int run_command(const std::function<int()>& body) {
    try {
        return body();
    } catch (const DegeneratePostSelectionError& e) {
        return emit_error("degenerate post-selection", e.what());
    } catch (const NonInvertibleCouplingError& e) {
        return emit_error("non-invertible coupling", e.what());
    } catch (const UndefinedRatioError& e) {
        return emit_error("undefined ratio", e.what());
    } catch (const DegenerateAngleError& e) {
        return emit_error("degenerate angle", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error("invalid argument", e.what());
    } catch (const std::exception& e) {
        return emit_error("internal error", e.what());
    }
}

// ---------- commands ----------

int cmd_weak_value(const Flags& f) {
    const PathState pi = resolve_state(f.a, f.b, "input state");
    const PathState pf = resolve_pf(f);
    const Arm arm = resolve_arm(f.arm);

    const auto [std_i, std_ii] = projection_weak_values(pi, pf);

    WeakValue mod_i, mod_ii;
    if (is_symmetric(pf)) {
        mod_i = modified_projection_weak_value(pi, f.alpha, arm);
        mod_ii = Complex{1.0, 0.0} - mod_i;
    } else {
        const JointState psi = couple(prepare(pi), {arm, f.alpha});
        const Operator post = postselect_projector(pf);
        mod_i = generalized_weak_value(psi, post, path_projector(Arm::I));
        mod_ii = generalized_weak_value(psi, post, path_projector(Arm::II));
    }

    std::optional<Complex> ratio;
    if (arm == Arm::II && is_symmetric(pf)) {
        try {
            ratio = weak_ratio(pi, f.alpha);
        } catch (const UndefinedRatioError&) {
        }
    } else if (std::abs(mod_ii) > kDegeneracyThreshold) {
        ratio = mod_i / mod_ii;
    }
    if (!ratio) {
        std::fprintf(stderr, "warning: weak-value ratio undefined for these inputs\n");
    }

    json results;
    results["projection_weak_values"] = json{{"p_i", cj(std_i)}, {"p_ii", cj(std_ii)}};
    results["modified_weak_values"] = json{{"p_i", cj(mod_i)}, {"p_ii", cj(mod_ii)}};
    results["weak_value_ratio"] = ratio ? cj(*ratio) : json(nullptr);

    if (f.output == "csv") {
        std::cout << "p_i_w_re,p_i_w_im,p_ii_w_re,p_ii_w_im,"
                     "mod_p_i_w_re,mod_p_i_w_im,mod_p_ii_w_re,mod_p_ii_w_im,"
                     "ratio_re,ratio_im\n";
        std::cout << fmt17(std_i.real()) << ',' << fmt17(std_i.imag()) << ','
                  << fmt17(std_ii.real()) << ',' << fmt17(std_ii.imag()) << ','
                  << fmt17(mod_i.real()) << ',' << fmt17(mod_i.imag()) << ','
                  << fmt17(mod_ii.real()) << ',' << fmt17(mod_ii.imag()) << ',';
        if (ratio) {
            std::cout << fmt17(ratio->real()) << ',' << fmt17(ratio->imag());
        } else {
            std::cout << ',';
        }
        std::cout << '\n';
    } else {
        emit(envelope(base_inputs(pi, pf, arm, f.alpha), results, std::nullopt));
    }
    return 0;
}

int cmd_simulate(const Flags& f) {
    const PathState pi = resolve_state(f.a, f.b, "input state");
    const PathState pf = resolve_pf(f);
    const Arm arm = resolve_arm(f.arm);

    const ExperimentOutput out = run(pi, {arm, f.alpha}, pf);
    const BlochVector exact = bloch_exact(out.conditional_spin);

    json results;
    results["success_probability"] = out.success_probability;
    results["bloch_exact"] = bj(exact);

    std::optional<std::uint64_t> seed;
    std::optional<BlochEstimate> est;
    std::array<ShotRecord, 3> records{};
    if (f.shots) {
        seed = resolve_seed(f);
        records = sample_tomography(out.conditional_spin, *f.shots, *seed);
        est = estimate_bloch(records[0], records[1], records[2]);
        results["counts"] = counts_json(records);
        results["bloch_estimate"] = json{{"value", bj(est->value)},
                                         {"std_error", std_error_json(*est)}};
    }

    json inputs = base_inputs(pi, pf, arm, f.alpha);
    if (f.shots) inputs["shots"] = *f.shots;

    if (f.output == "csv") {
        std::cout << "success_probability,sx,sy,sz";
        if (est) {
            std::cout << ",est_sx,est_sy,est_sz,se_sx,se_sy,se_sz,"
                         "x_shots,x_plus,y_shots,y_plus,z_shots,z_plus,seed";
        }
        std::cout << '\n';
        std::cout << fmt17(out.success_probability) << ',' << fmt17(exact.sx) << ','
                  << fmt17(exact.sy) << ',' << fmt17(exact.sz);
        if (est) {
            std::cout << ',' << fmt17(est->value.sx) << ',' << fmt17(est->value.sy) << ','
                      << fmt17(est->value.sz) << ',' << fmt17(est->std_error[0]) << ','
                      << fmt17(est->std_error[1]) << ',' << fmt17(est->std_error[2]);
            for (const ShotRecord& r : records) {
                std::cout << ',' << r.shots << ',' << r.plus_count;
            }
            std::cout << ',' << *seed;
        }
        std::cout << '\n';
    } else {
        emit(envelope(std::move(inputs), results, seed));
    }
    return 0;
}

int cmd_reconstruct(const Flags& f) {
    const PathState pi = resolve_state(f.a, f.b, "input state");
    const Arm arm = resolve_arm(f.arm);
    const Method method = f.method == "weak" ? Method::Weak : Method::Strong;

    const ExperimentOutput out = run(pi, {arm, f.alpha}, symmetric_path_state());

    BlochVector bloch;
    char digest[128];
    json tomo;
    std::optional<std::uint64_t> seed;
    if (f.shots) {
        seed = resolve_seed(f);
        const auto records = sample_tomography(out.conditional_spin, *f.shots, *seed);
        const BlochEstimate est = estimate_bloch(records[0], records[1], records[2]);
        bloch = est.value;
        tomo["mode"] = "shots";
        tomo["shots"] = *f.shots;
        tomo["success_probability"] = out.success_probability;
        tomo["bloch"] = bj(bloch);
        tomo["bloch_std_error"] = std_error_json(est);
        tomo["counts"] = counts_json(records);
        std::snprintf(digest, sizeof(digest), "shots=%llu seed=%llu p=%.6g",
                      static_cast<unsigned long long>(*f.shots),
                      static_cast<unsigned long long>(*seed), out.success_probability);
    } else {
        bloch = bloch_exact(out.conditional_spin);
        tomo["mode"] = "exact";
        tomo["success_probability"] = out.success_probability;
        tomo["bloch"] = bj(bloch);
        std::snprintf(digest, sizeof(digest), "exact tomography, p=%.6g",
                      out.success_probability);
    }

    PathState estimated;
    if (method == Method::Weak) {
        if (std::abs(f.alpha) > 0.1) {
            std::fprintf(stderr,
                         "warning: weak estimator carries an O(alpha^2) bias; alpha = %g\n",
                         f.alpha);
        }
        const RotationAngles angles = rotation_angles(bloch);
        const WeakValue w = weak_estimate(angles, f.alpha);
        const WeakValue w_i = arm == Arm::I ? w : Complex{1.0, 0.0} - w;
        estimated = state_from_weak_value(w_i);
    } else {
        estimated = strong_estimate(bloch, out.success_probability, f.alpha, arm);
    }

    const ReconstructionReport report{estimated, method, f.alpha, fidelity(estimated, pi),
                                      digest};

    json results;
    results["method"] = method == Method::Weak ? "weak" : "strong";
    results["estimated"] = json{{"a", cj(report.estimated.a)}, {"b", cj(report.estimated.b)}};
    results["fidelity_vs_truth"] = *report.fidelity_vs_truth;
    results["inputs_digest"] = report.inputs_digest;
    results["tomography"] = tomo;

    json inputs = base_inputs(pi, symmetric_path_state(), arm, f.alpha);
    inputs["method"] = results["method"];
    if (f.shots) inputs["shots"] = *f.shots;

    if (f.output == "csv") {
        std::cout << "method,alpha,arm,a_re,a_im,b_re,b_im,fidelity\n";
        std::cout << (method == Method::Weak ? "weak" : "strong") << ',' << fmt17(f.alpha)
                  << ',' << (arm == Arm::I ? "I" : "II") << ','
                  << fmt17(report.estimated.a.real()) << ',' << fmt17(report.estimated.a.imag())
                  << ',' << fmt17(report.estimated.b.real()) << ','
                  << fmt17(report.estimated.b.imag()) << ','
                  << fmt17(*report.fidelity_vs_truth) << '\n';
    } else {
        emit(envelope(std::move(inputs), results, seed));
    }
    return 0;
}

int cmd_sweep(const Flags& f) {
    const PathState pi = resolve_state(f.a, f.b, "input state");
    const std::vector<double> grid = parse_grid(f.alphas);
    const std::vector<BiasRow> rows = bias_sweep(pi, grid);

    if (f.output == "json") {
        json rows_json = json::array();
        for (const BiasRow& row : rows) {
            rows_json.push_back(json{{"alpha", row.alpha},
                                     {"ratio", cj(row.measured_ratio)},
                                     {"true_ratio", cj(row.true_ratio)},
                                     {"abs_deviation", row.abs_deviation}});
        }
        json inputs;
        inputs["a"] = cj(pi.a);
        inputs["b"] = cj(pi.b);
        inputs["arm"] = "II";
        inputs["alphas"] = f.alphas;
        json results;
        results["rows"] = std::move(rows_json);
        emit(envelope(std::move(inputs), results, std::nullopt));
    } else {
        std::cout << "alpha,ratio_re,ratio_im,true_re,true_im,abs_deviation\n";
        for (const BiasRow& row : rows) {
            std::cout << fmt17(row.alpha) << ',' << fmt17(row.measured_ratio.real()) << ','
                      << fmt17(row.measured_ratio.imag()) << ',' << fmt17(row.true_ratio.real())
                      << ',' << fmt17(row.true_ratio.imag()) << ','
                      << fmt17(row.abs_deviation) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-path interferometer simulator: weak values, tomography, and "
                 "path-state reconstruction"};
    app.fallthrough();
    app.require_subcommand(1);

    Flags f;
    app.set_config("--config", "", "Read flags from a key=value config file");
    app.add_option("--output", f.output, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", f.seed, "Seed for stochastic sampling (recorded in the output)");
    app.set_version_flag("--version", kVersion);

    const auto add_state = [&f](CLI::App* cmd) {
        cmd->add_option("--a", f.a, "Path-I amplitude, RE or RE,IM (auto-normalized)")
            ->required();
        cmd->add_option("--b", f.b, "Path-II amplitude, RE or RE,IM (auto-normalized)")
            ->required();
    };
    const auto add_pf = [&f](CLI::App* cmd) {
        cmd->add_option("--pf-a", f.pf_a, "Post-selection path-I amplitude (default symmetric)");
        cmd->add_option("--pf-b", f.pf_b, "Post-selection path-II amplitude");
    };
    const auto add_coupling = [&f](CLI::App* cmd) {
        cmd->add_option("--arm", f.arm, "Arm carrying the spin rotation")
            ->check(CLI::IsMember({"I", "II"}));
        cmd->add_option("--alpha", f.alpha, "Coupling strength in radians");
    };
    const auto add_shots = [&f](CLI::App* cmd) {
        cmd->add_option("--shots", f.shots, "Measurements per tomography basis");
    };

    CLI::App* wv = app.add_subcommand("weak-value",
                                      "Path-projection weak values at coupling strength alpha");
    add_state(wv);
    add_pf(wv);
    add_coupling(wv);

    CLI::App* sim = app.add_subcommand("simulate",
                                       "Run once and report the post-selected spin");
    add_state(sim);
    add_pf(sim);
    add_coupling(sim);
    add_shots(sim);

    CLI::App* rec = app.add_subcommand("reconstruct",
                                       "Estimate the path state from the simulated run");
    add_state(rec);
    add_coupling(rec);
    add_shots(rec);
    rec->add_option("--method", f.method, "Estimator: weak or strong")
        ->required()
        ->check(CLI::IsMember({"weak", "strong"}));

    CLI::App* sw = app.add_subcommand("sweep",
                                      "Weak-value ratio bias across a grid of couplings");
    add_state(sw);
    sw->add_option("--alphas", f.alphas, "Coupling grid START:STOP:N (inclusive)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("invalid argument", e.what());
        return 2;
    }

    if (f.output.empty()) {
        f.output = sw->parsed() ? "csv" : "json";
    }

    if (wv->parsed()) return run_command([&f] { return cmd_weak_value(f); });
    if (sim->parsed()) return run_command([&f] { return cmd_simulate(f); });
    if (rec->parsed()) return run_command([&f] { return cmd_reconstruct(f); });
    return run_command([&f] { return cmd_sweep(f); });
}
