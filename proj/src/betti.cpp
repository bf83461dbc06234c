#include "gorbetti/betti.hpp"

#include <sstream>

namespace gorbetti {

std::string render_diagram(const BettiTable& table) {
    const int rows = table.max_shift() + 1;
    const int cols = table.nvars + 1;

    std::size_t width = 1;
    for (const auto& [ij, b] : table.beta)
        width = std::max(width, std::to_string(b).size());

    std::ostringstream out;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const long b = table.at(j, i + j);
            std::string cell = b == 0 ? "-" : std::to_string(b);
            if (j > 0)
                out << "  ";
            out << std::string(width - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

StructuralReport structural_checks(const BettiTable& table, bool expect_gorenstein) {
    StructuralReport report;
    const auto totals = table.totals();

    long euler = 0;
    for (std::size_t i = 0; i < totals.size(); ++i)
        euler += (i % 2 == 0 ? 1 : -1) * totals[i];
    report.euler_zero = euler == 0;
    if (!report.euler_zero)
        report.failures.push_back("alternating sum of betti numbers is " +
                                  std::to_string(euler) + ", expected 0");

    if (expect_gorenstein) {
        report.checked_gorenstein = true;
        const int n = table.nvars;
        report.last_betti_one = totals[static_cast<std::size_t>(n)] == 1;
        if (!report.last_betti_one)
            report.failures.push_back("beta_" + std::to_string(n) + " = " +
                                      std::to_string(totals[static_cast<std::size_t>(n)]) +
                                      ", expected 1");

        report.dual_symmetric = true;
        const int total_shift = table.sigma + n;
        for (const auto& [ij, b] : table.beta) {
            const long dual = table.at(n - ij.first, total_shift - ij.second);
            if (dual != b) {
                report.dual_symmetric = false;
                report.failures.push_back(
                    "beta_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                    "} = " + std::to_string(b) + " but beta_{" + std::to_string(n - ij.first) +
                    "," + std::to_string(total_shift - ij.second) + "} = " + std::to_string(dual));
            }
        }
    }
    return report;
}

nlohmann::json betti_to_json(const BettiTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [ij, b] : table.beta)
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
    return {{"n", table.nvars},
            {"sigma", table.sigma},
            {"entries", entries},
            {"totals", table.totals()}};
}

} // namespace gorbetti
