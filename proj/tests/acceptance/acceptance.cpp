// One PASS/FAIL line per acceptance criterion, with pinned trial counts, seeds and time limits.
// Usage: acceptance [--map path.csv] [criterion numbers...]

#include "svt/io/json.hpp"
#include "svt/verify/suites.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using svt::verify::SuiteOptions;
using svt::verify::SuiteReport;

struct Run {
    std::string suite;
    long trials;
};

struct Criterion {
    int id;
    std::string title;
    std::vector<Run> runs;
    double limit_s;
};

const std::uint64_t kSeed = 20240601;

std::string map_csv(const SuiteReport& rep) {
    std::string csv = "pilot,D,status,kernel_dim,norm_margin_inf,value_margin_inf,note\n";
    for (const auto& row : rep.stats["success map"]) {
        auto lower = [&](const char* key) -> std::string {
            if (!row.contains(key)) return "";
            if (row[key].is_string()) return row[key].get<std::string>();
            return row[key]["inf"].get<std::string>();
        };
        std::string note = row["note"].get<std::string>();
        csv += row["pilot"].get<std::string>() + "," + std::to_string(row["D"].get<int>()) + "," +
               row["status"].get<std::string>() + "," + std::to_string(row["kernel_dim"].get<int>()) + "," +
               lower("norm_margin") + "," + lower("value_margin") + ",\"" + note + "\"\n";
    }
    return csv;
}

}  // namespace

int main(int argc, char** argv) {
    std::string map_path = "dirichlet_success_map.csv";
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--map" && i + 1 < argc)
            map_path = argv[++i];
        else
            only.insert(std::stoi(a));
    }

    const std::vector<Criterion> criteria{
        {1, "coefficient recovery and a0 bounds", {{"lemma3.1", 500}}, 60},
        {2, "dual basis: L = 1 closed form, Kronecker, length bound", {{"prop3.3", 200}}, 120},
        {3, "separation certificate chains for D <= 5", {{"prop3.5", 20}}, 300},
        {4, "Chow height against Weil height; sqrt2 example", {{"gelfond", 100}}, 300},
        {5, "translation height change with c4", {{"lemma4.1", 50}}, 120},
        {6, "separation of distinct varieties", {{"prop4.3", 100}}, 300},
        {7, "weak triangle, translation distortion, Lipschitz bound", {{"lemma2.2", 10000}, {"lemma2.3", 10000}}, 120},
        {8, "dirichlet search pilots and success map", {{"dirichlet", 0}}, 600},
        {9, "dyadic window selection", {{"prop5.4", 1000}}, 10},
        {10, "algebraicity witness on the conic", {{"lemma4.4", 0}}, 10},
        {11, "homogenization integrality and gcd freeness", {{"homogenization", 200}}, 120},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& r : c.runs) {
            try {
                SuiteReport rep = svt::verify::run_suite(r.suite, SuiteOptions{r.trials, kSeed, 128});
                if (!rep.ok()) {
                    ok = false;
                    detail += " " + r.suite + ": " + std::to_string(rep.failures.size()) + " failures, first " +
                              rep.failures[0].dump();
                }
                if (r.suite == "dirichlet") {
                    svt::io::write_atomic(map_path, map_csv(rep));
                    detail += " map: " + map_path;
                }
            } catch (const std::exception& e) {
                ok = false;
                detail += " " + r.suite + ": " + e.what();
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.limit_s;
        if (!in_time) detail += " over the time limit";
        bool pass = ok && in_time;
        failed += !pass;
        std::printf("criterion %2d: %s  %s  (%.1f s, limit %.0f s)%s\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(), secs,
                    c.limit_s, detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
