#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "qpaths/compact/compact.hpp"
#include "qpaths/errors.hpp"
#include "qpaths/graphs/gamma.hpp"
#include "qpaths/qsystem/qsystem.hpp"
#include "qpaths/qsystem/weights.hpp"
#include "qpaths/rank2/rank2.hpp"
#include "qpaths/totalpos/factorization.hpp"
#include "verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Thrown for bad indices or paths so that they map to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

qp::MotzkinPath resolve_path(int r, const std::string& text) {
    if (r < 1) throw UsageError("rank must be at least 1");
    if (text.empty()) return qp::MotzkinPath::zero(r);
    qp::MotzkinPath m;
    try {
        m = qp::parse_motzkin(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid Motzkin path: ") + e.what());
    }
    if (m.rank() != r)
        throw UsageError("Motzkin path has length " + std::to_string(m.rank()) + " but rank is " + std::to_string(r));
    return m;
}

void print_table(const std::vector<std::string>& rows, bool csv, std::ostream& out) {
    if (csv) {
        out << "n,coefficient\n";
        for (std::size_t n = 0; n < rows.size(); ++n) out << n << ",\"" << rows[n] << "\"\n";
        return;
    }
    const int width = std::max<int>(1, static_cast<int>(std::to_string(rows.size()).size()));
    out << std::setw(width) << "n" << "  coefficient\n";
    for (std::size_t n = 0; n < rows.size(); ++n) out << std::setw(width) << n << "  " << rows[n] << "\n";
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Q-system values, path models and verification suites for A_r.\n\n"
        "Seed variables print as R<alpha>_<n>, e.g. R1_0 is R_{1,0} and R2_1 is R_{2,1}.\n"
        "Rank-2 seeds print as x<k>. Motzkin paths are given as 0,1,2 (length r)."};
    app.require_subcommand(1);

    int r = 1, alpha = 1, n = 0, order = 8, jobs = 1;
    std::string path_text, out_path, variant = "gamma", suite = "all", rank2_kind;
    bool check_positive = false, csv = false, seed_weights = false;

    auto* rvalue = app.add_subcommand("rvalue", "Print R_{alpha,n} as a Laurent polynomial in the seed of m");
    rvalue->add_option("-r,--rank", r, "Rank r")->required()->check(CLI::PositiveNumber);
    rvalue->add_option("-m,--motzkin", path_text, "Motzkin path (default: all zeros)");
    rvalue->add_option("-a,--alpha", alpha, "Node alpha in 1..r")->required();
    rvalue->add_option("-n,--time", n, "Time index n")->required();
    rvalue->add_flag("--check-positive", check_positive, "Exit with status 1 unless all coefficients are positive");

    auto* verify = app.add_subcommand("verify", "Run verification suites and report pass/fail per identity");
    verify->add_option("--suite", suite, "all|qsys|rank2|paths|compact|totalpos")
        ->check(CLI::IsMember({"all", "qsys", "rank2", "paths", "compact", "totalpos"}));
    verify->add_option("-r,--rank", r, "Rank r (checks every fundamental path of that length)")
        ->default_val(3)
        ->check(CLI::Range(1, 6));
    verify->add_option("-N,--order", order, "Truncation order")->default_val(8)->check(CLI::NonNegativeNumber);
    verify->add_option("-j,--jobs", jobs, "Number of worker threads")->default_val(1)->check(CLI::PositiveNumber);

    auto* graph = app.add_subcommand("graph", "Write a DOT graph for Gamma_m, its compact form, or the network of P_m");
    graph->add_option("-r,--rank", r, "Rank r")->required()->check(CLI::PositiveNumber);
    graph->add_option("-m,--motzkin", path_text, "Motzkin path (default: all zeros)");
    graph->add_option("--variant", variant, "gamma|gamma_prime|network")
        ->check(CLI::IsMember({"gamma", "gamma_prime", "network"}));
    graph->add_option("-o,--out", out_path, "Output file (default: standard output)");
    graph->add_flag("--seed-weights", seed_weights, "Label edges with seed weights instead of y1..y_{2r+1}");

    auto* series = app.add_subcommand("series", "Print a table of R_{alpha, m_alpha + n} for n = 0..N");
    series->add_option("-r,--rank", r, "Rank r")->check(CLI::PositiveNumber);
    series->add_option("-m,--motzkin", path_text, "Motzkin path (default: all zeros)");
    series->add_option("-a,--alpha", alpha, "Node alpha in 1..r");
    series->add_option("-N,--order", order, "Last index")->check(CLI::NonNegativeNumber);
    series->add_option("--rank2", rank2_kind, "Rank-2 system b,c instead: 2,2 (x_n) or 1,4 / 4,1 (x_{2n})")
        ->check(CLI::IsMember({"2,2", "1,4", "4,1"}));
    series->add_flag("--csv", csv, "CSV output with header n,coefficient");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*rvalue) {
            const qp::MotzkinPath m = resolve_path(r, path_text);
            if (alpha < 1 || alpha > r) throw UsageError("alpha must lie in 1.." + std::to_string(r));
            qp::Seed seed(m);
            const qp::LaurentPoly v = qp::compute_R(seed, alpha, n);
            std::cout << qp::to_string(v, *seed.registry()) << "\n";
            if (check_positive && !qp::is_positive(v)) {
                std::cerr << "not a positive Laurent polynomial\n";
                return kFailed;
            }
            return kOk;
        }
        if (*verify) {
            qpcli::VerifyOptions opt{suite, r, order, jobs};
            return qpcli::run_verify(opt, std::cout) ? kOk : kFailed;
        }
        if (*graph) {
            const qp::MotzkinPath m = resolve_path(r, path_text);
            std::string dot;
            if (seed_weights) {
                qp::Seed seed(m);
                const auto w = qp::weights_from_seed(seed);
                const auto& reg = *seed.registry();
                if (variant == "gamma") dot = qp::to_dot(qp::build_gamma(m, w), reg, "Gamma");
                if (variant == "gamma_prime") dot = qp::to_dot(qp::build_gamma_prime_direct(m, w.y).graph, reg, "GammaPrime");
                if (variant == "network") dot = qp::network_dot(m, w.y, reg);
            } else {
                qp::VarRegistry reg;
                const auto y = qp::symbolic_weights(reg, 2 * r + 1);
                if (variant == "gamma") dot = qp::to_dot(qp::build_gamma(m, y), reg, "Gamma");
                if (variant == "gamma_prime") dot = qp::to_dot(qp::build_gamma_prime_direct(m, y).graph, reg, "GammaPrime");
                if (variant == "network") dot = qp::network_dot(m, y, reg);
            }
            write_output(dot, out_path);
            return kOk;
        }
        if (*series) {
            std::vector<std::string> rows;
            if (!rank2_kind.empty()) {
                qp::VarRegistry reg;
                const int b = rank2_kind[0] - '0', c = rank2_kind[2] - '0';
                const auto sys = qp::Rank2System::make(b, c, reg);
                for (int k = 0; k <= order; ++k)
                    rows.push_back(qp::to_string(qp::iterate(sys, b == 2 ? k : 2 * k), reg));
            } else {
                const qp::MotzkinPath m = resolve_path(r, path_text);
                if (alpha < 1 || alpha > r) throw UsageError("alpha must lie in 1.." + std::to_string(r));
                qp::Seed seed(m);
                qp::QSystem q(seed);
                for (int k = 0; k <= order; ++k) rows.push_back(qp::to_string(q.R(alpha, m.at(alpha) + k), *seed.registry()));
            }
            print_table(rows, csv, std::cout);
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qp::MotzkinViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
