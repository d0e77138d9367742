#include "conesigma/dsl.hpp"
#include "conesigma/hochschild.hpp"
#include "conesigma/render.hpp"
#include "conesigma/sigma.hpp"
#include "conesigma/suites.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

conesigma::Index maxWindow() {
    if (const char* env = std::getenv("CONESIGMA_MAX_WINDOW")) {
        std::istringstream in(env);
        conesigma::Index n = 0;
        if (in >> n && n > 0) return n;
    }
    return 1024;
}

} // namespace

int main(int argc, char** argv) {
    using namespace conesigma;

    CLI::App app{
        "conesigma: exact infinite-matrix algebra calculator.\n"
        "All indices are 0-based: E(k,l) has its single 1 at row k, column l,\n"
        "In(n) is the diagonal projection onto the first n coordinates, and\n"
        "Ibar(n) = I - In(n). Hochschild tables cover finite-dimensional\n"
        "algebras only; the infinite-dimensional quotient itself is handled\n"
        "through certified window checks, not homology."};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string ring = "Q";
    Index window = 0;
    std::uint64_t seed = 1;
    std::string format = "json";
    app.add_option("--ring", ring, "Coefficient ring: Q, Z or Zp:<p>")->capture_default_str();
    app.add_option("--window", window, "Window size for evaluation/checks");
    app.add_option("--seed", seed, "Random seed for check suites")->capture_default_str();
    app.add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::string evalSrc;
    auto* evalCmd = app.add_subcommand("eval", "Evaluate a matrix expression on a window");
    evalCmd->add_option("expr", evalSrc, "Matrix expression")->required();

    std::string suite = "all";
    auto* checkCmd = app.add_subcommand("check", "Run an identity suite");
    checkCmd->add_option("suite", suite, "Suite name")
        ->check(CLI::IsMember(suiteNames()))
        ->capture_default_str();

    Index oreN = 0;
    std::string oreExpr;
    auto* oreCmd = app.add_subcommand("ore", "Left Ore move witness for (Ibar(n), E)");
    oreCmd->add_option("n", oreN, "Denominator index n")->required();
    oreCmd->add_option("--expr", oreExpr, "Numerator expression E")->required();

    std::string algebraFile;
    std::size_t topDegree = 2;
    auto* hhCmd = app.add_subcommand("hh", "Hochschild homology table of a finite-dimensional algebra");
    hhCmd->add_option("--algebra", algebraFile, "Algebra spec file (JSON)")->required();
    hhCmd->add_option("--top", topDegree, "Top homology degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        auto coeff = Coefficients::make(CoeffRing::parse(ring));

        if (*evalCmd) {
            Index n = window == 0 ? 8 : window;
            if (n > maxWindow()) {
                std::cerr << "window " << n << " exceeds the configured maximum "
                          << maxWindow() << "\n";
                return kExitUsage;
            }
            ConeMat value = evalExpr(parseExpr(evalSrc), coeff);
            if (format == "csv")
                std::cout << renderWindowCsv(value, n);
            else
                std::cout << renderWindowJson(value, n) << "\n";
            return kExitOk;
        }

        if (*checkCmd) {
            Index n = window == 0 ? 256 : window;
            SuiteReport report = runSuite(suite, seed, n);
            for (const auto& c : report.checks) {
                std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
                if (c.window) std::cout << "  [window " << c.window << "]";
                if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
                std::cout << "\n";
            }
            std::cout << (report.allPass() ? "all checks passed" : "some checks FAILED")
                      << "\n";
            return report.allPass() ? kExitOk : kExitCheckFailure;
        }

        if (*oreCmd) {
            Index n = window == 0 ? 16 : window;
            ConeMat e = evalExpr(parseExpr(oreExpr), coeff);
            OreMove moved = oreMoveWitness(oreN, e);
            nlohmann::json j;
            j["n"] = oreN;
            j["m"] = moved.m;
            j["eprime"] = nlohmann::json::parse(renderWindowJson(moved.eprime, n));
            std::cout << j.dump() << "\n";
            return kExitOk;
        }

        if (*hhCmd) {
            std::ifstream in(algebraFile);
            if (!in) {
                std::cerr << "cannot open " << algebraFile << "\n";
                return kExitUsage;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            AlgebraSpec spec = parseAlgebraSpecFile(buf.str());
            HHResult result = hhDims(spec, topDegree);
            nlohmann::json j;
            j["field"] = spec.base.name();
            j["basis"] = spec.basisLabels;
            j["topDegree"] = result.topDegree;
            j["hh"] = result.dims;
            std::cout << j.dump() << "\n";
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
