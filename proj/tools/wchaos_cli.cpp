#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wchaos/chaos.hpp"
#include "wchaos/diagrams.hpp"
#include "wchaos/fmt_demo.hpp"
#include "wchaos/io.hpp"
#include "wchaos/montecarlo.hpp"
#include "wchaos/random_kernel.hpp"
#include "wchaos/recursive.hpp"

namespace {

using namespace wchaos;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

struct Limits {
    int diagram_edge_cap = 10;
    int order_cap = kDefaultOrderCap;
    long mc_sample_cap = 100'000'000;
};

Limits load_limits(const std::string& path) {
    Limits lim;
    if (path.empty()) return lim;
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "diagram_edge_cap")
            lim.diagram_edge_cap = std::stoi(val);
        else if (key == "order_cap")
            lim.order_cap = std::stoi(val);
        else if (key == "mc_sample_cap")
            lim.mc_sample_cap = std::stol(val);
        else
            throw ParseError("unknown config key: " + key);
    }
    return lim;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Returns the kernel when the expansion is a single pure multiple integral
// of order >= 2, which is what the kernel-only engines require.
std::optional<SymTensor> pure_kernel(const ChaosExpansion& F) {
    if (F.constant() != 0.0 || F.kernels().size() != 1) return std::nullopt;
    const auto& [q, f] = *F.kernels().begin();
    if (q < 2) return std::nullopt;
    return f;
}

int cmd_cumulants(const std::string& input, std::vector<std::string> methods, int smax,
                  long samples, std::uint64_t seed, const std::string& format,
                  const Limits& lim) {
    const ChaosExpansion F = load_input(input);
    const auto kernel = pure_kernel(F);

    if (samples > lim.mc_sample_cap) {
        std::cerr << "error: --samples exceeds mc_sample_cap\n";
        return kExitValidation;
    }

    std::map<std::string, std::vector<std::string>> table;  // method -> col
    std::vector<EstimatorResult> mc;
    for (const auto& m : methods) {
        auto& col = table[m];
        if (m == "montecarlo") mc = estimate_cumulants(F, smax, samples, seed);
        for (int s = 1; s <= smax; ++s) {
            if (m == "recursive") {
                col.push_back(kernel ? fmt(kappa_recursive(*kernel, s)) : "skipped");
            } else if (m == "gamma") {
                col.push_back(fmt(cumulant_via_gamma(F, s)));
            } else if (m == "diagram") {
                if (!kernel || s < 2 || (kernel->order() * s) / 2 > lim.diagram_edge_cap)
                    col.push_back("skipped");
                else
                    col.push_back(fmt(kappa_diagram(*kernel, s)));
            } else if (m == "montecarlo") {
                col.push_back(fmt(mc[s - 1].estimate));
            } else {
                std::cerr << "error: unknown method " << m << "\n";
                return kExitValidation;
            }
        }
    }

    if (format == "json") {
        nlohmann::json j;
        for (const auto& m : methods) {
            nlohmann::json col = nlohmann::json::array();
            for (int s = 1; s <= smax; ++s) {
                nlohmann::json cell;
                cell["s"] = s;
                const std::string& v = table[m][s - 1];
                if (v == "skipped")
                    cell["skipped"] = true;
                else
                    cell["value"] = std::stod(v);
                if (m == "montecarlo") cell["stderr"] = mc[s - 1].stderr_;
                col.push_back(cell);
            }
            j[m] = col;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "s";
        for (const auto& m : methods) std::printf("\t%s", m.c_str());
        std::cout << "\n";
        for (int s = 1; s <= smax; ++s) {
            std::cout << s;
            for (const auto& m : methods) std::printf("\t%s", table[m][s - 1].c_str());
            std::cout << "\n";
        }
        if (table.count("montecarlo")) {
            for (const auto& r : mc) std::cout << estimator_to_jsonl(r) << "\n";
        }
    }
    return kExitOk;
}

int cmd_crossvalidate(double tol, std::uint64_t seed, const Limits& lim) {
    if (tol <= 0.0) {
        std::cerr << "error: tolerance must be positive (floating-point comparison)\n";
        return kExitValidation;
    }
    double worst = 0.0;
    std::string worst_case = "none";
    for (int q : {2, 3}) {
        for (int d : {2, 3, 4}) {
            const SymTensor f =
                random_kernel(q, d, seed + 1000 * q + d, /*normalize=*/true);
            const ChaosExpansion F = ChaosExpansion::integral(f);
            for (int s = 2; s <= 6; ++s) {
                std::vector<std::pair<std::string, double>> vals;
                vals.emplace_back("recursive", kappa_recursive(f, s));
                vals.emplace_back("gamma", cumulant_via_gamma(F, s));
                if (s * q / 2 <= lim.diagram_edge_cap)
                    vals.emplace_back("diagram", kappa_diagram(f, s));
                for (std::size_t i = 0; i < vals.size(); ++i) {
                    for (std::size_t j = i + 1; j < vals.size(); ++j) {
                        const double a = vals[i].second, b = vals[j].second;
                        const double rel =
                            std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
                        if (rel > worst) {
                            worst = rel;
                            std::ostringstream ss;
                            ss << "q=" << q << " d=" << d << " s=" << s << " "
                               << vals[i].first << "=" << fmt(a) << " vs "
                               << vals[j].first << "=" << fmt(b);
                            worst_case = ss.str();
                        }
                    }
                }
            }
        }
    }
    std::cout << "worst relative discrepancy: " << fmt(worst) << " (" << worst_case << ")\n";
    if (worst > tol) {
        std::cout << "FAIL: exceeds tolerance " << fmt(tol) << "\n";
        return kExitValidation;
    }
    std::cout << "OK: within tolerance " << fmt(tol) << "\n";
    return kExitOk;
}

int cmd_fmt_demo(const std::vector<int>& ns, int smax) {
    std::cout << "n\tcontraction_norm";
    for (int s = 2; s <= smax; ++s) std::printf("\tkappa_%d", s);
    std::cout << "\n";
    for (int n : ns) {
        const FmtDemoRow row = fmt_demo_row(n, smax);
        std::printf("%d\t%s", n, fmt(row.contraction_norm).c_str());
        for (double k : row.kappa) std::printf("\t%s", fmt(k).c_str());
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_diagrams(int s, int q) {
    if ((s * q) % 2 != 0) {
        std::cout << "empty: sq odd\n";
        return kExitOk;
    }
    const auto graphs = enumerate_K(s, q);
    for (const auto& g : graphs) {
        bool first = true;
        for (const auto& e : g.edges) {
            if (!first) std::cout << " ";
            std::cout << e[0] + 1 << "-" << e[1] + 1 << ":" << e[2];
            first = false;
        }
        std::cout << "\t" << weight(g).str() << "\n";
    }
    std::cout << "count: " << graphs.size() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cumulants of multiple Wiener-Ito integrals"};
    app.require_subcommand(1);

    std::string input, config, format = "table";
    std::vector<std::string> methods = {"recursive", "gamma", "diagram", "montecarlo"};
    int smax = 4;
    long samples = 100000;
    std::uint64_t seed = 42;
    double tol = 1e-8;
    bool corrupt_cq = false;
    std::vector<int> ns = {4, 16, 64, 256};
    int diag_s = 0, diag_q = 0;

    auto* cum = app.add_subcommand("cumulants", "cumulants of a kernel or expansion");
    cum->add_option("--input", input, "kernel or expansion JSON file")->required();
    cum->add_option("--methods", methods, "subset of recursive,gamma,diagram,montecarlo")
        ->delimiter(',');
    cum->add_option("--smax", smax, "highest cumulant order");
    cum->add_option("--samples", samples, "Monte Carlo sample count");
    cum->add_option("--seed", seed, "Monte Carlo seed");
    cum->add_option("--format", format, "table or json");
    cum->add_option("--config", config, "key=value limits file");

    auto* cv = app.add_subcommand("crossvalidate", "exact engines against each other");
    cv->add_option("--tol", tol, "maximal allowed relative discrepancy");
    cv->add_option("--seed", seed, "kernel generation seed");
    cv->add_option("--config", config, "key=value limits file");
    cv->add_flag("--corrupt-cq", corrupt_cq)->group("");  // negative-control fixture

    auto* demo = app.add_subcommand("fmt-demo", "fourth moment theorem demo");
    demo->add_option("--n", ns, "Hilbert space dimensions")->delimiter(',');
    demo->add_option("--smax", smax, "highest cumulant order");

    auto* diag = app.add_subcommand("diagrams", "list K(s,q) with weights");
    diag->add_option("s", diag_s, "vertex count")->required();
    diag->add_option("q", diag_q, "vertex degree")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const Limits lim = load_limits(config);
        if (cum->parsed()) {
            if (smax < 2 || methods.empty()) {
                std::cerr << "error: need smax >= 2 and at least one method\n";
                return kExitValidation;
            }
            return cmd_cumulants(input, methods, smax, samples, seed, format, lim);
        }
        if (cv->parsed()) {
            set_cq_corruption(corrupt_cq);
            return cmd_crossvalidate(tol, seed, lim);
        }
        if (demo->parsed()) return cmd_fmt_demo(ns, smax);
        if (diag->parsed()) {
            if (diag_s < 2 || diag_q < 2) {
                std::cerr << "error: need s >= 2 and q >= 2\n";
                return kExitValidation;
            }
            return cmd_diagrams(diag_s, diag_q);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
