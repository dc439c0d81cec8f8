#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "terw/report.hpp"
#include "terw/scheme.hpp"

namespace {

// exit codes: 0 ok, 1 verification failure, 2 usage, 3 resource cap
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kResourceCap = 3;

std::vector<int> parseFactors(const std::string& text) {
    std::vector<int> u;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string tok = text.substr(start, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - start);
        if (tok.empty()) throw std::invalid_argument("bad factor list");
        u.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return u;
}

long long capFromEnv(long long fallback) {
    const char* env = std::getenv("TERWILLIGER_MAX_POINTS");
    if (!env) return fallback;
    return std::stoll(env);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of Terwilliger algebras of factorial association schemes"};
    app.require_subcommand(1);

    std::string uText;
    long long p = 0;
    std::string basePointText;
    std::string jsonPath;
    long long maxPoints = capFromEnv(terw::kDefaultMaxPoints);

    CLI::App* report = app.add_subcommand("report", "compute the closed-form invariant report");
    report->add_option("--u", uText, "factor sizes, e.g. 2,3")->required();
    report->add_option("--p", p, "field characteristic (0 or a prime)")->required();
    report->add_option("--base-point", basePointText, "base point coordinates, e.g. 0,0");
    report->add_option("--json", jsonPath, "also write the JSON report to this path");

    CLI::App* verify = app.add_subcommand("verify", "run the brute-force oracle suite");
    verify->add_option("--u", uText, "factor sizes, e.g. 2,3")->required();
    verify->add_option("--p", p, "field characteristic (0 or a prime)")->required();
    verify->add_option("--max-points", maxPoints, "cap on the point count for brute force");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsage;
    }

    try {
        const std::vector<int> u = parseFactors(uText);
        if (report->parsed()) {
            const std::optional<std::string> basePoint =
                basePointText.empty() ? std::nullopt
                                      : std::optional<std::string>(basePointText);
            const terw::Report r = terw::runReport(u, p, basePoint);
            const std::string json = terw::reportJson(r);
            std::cout << json;
            if (!jsonPath.empty()) {
                std::ofstream out(jsonPath);
                if (!out) throw std::runtime_error("cannot write " + jsonPath);
                out << json;
            }
            return kOk;
        }
        std::cerr << "verifying u=" << uText << " p=" << p << " (cap " << maxPoints << ")\n";
        const terw::VerifyResult vr = terw::runVerify(u, p, maxPoints, &std::cerr);
        std::cout << terw::verifyJson(u, p, vr);
        return vr.overall ? kOk : kVerifyFailed;
    } catch (const terw::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
