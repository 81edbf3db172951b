#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fockalg/suites.hpp"

using namespace fockalg;

namespace {

struct Criterion {
    int id;
    std::string what;
    std::vector<std::string> suites;
    double budget_s;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Heisenberg relations, plus/minus commute", {"heisenberg"}, 10},
        {2, "Virasoro relations with central term", {"virasoro"}, 30},
        {3, "R-matrix swap, unitarity, Yang-Baxter, 1/u expansion", {"rmatrix_core", "yangbaxter"}, 180},
        {4, "vacuum row and Gauss factorization", {"vacuum_gauss"}, 60},
        {5, "Lehn eigenvectors are Jack polynomials", {"jack"}, 30},
        {6, "quantum multiplication limits and chamber covariance", {"quantum"}, 60},
        {7, "zero-mode additivity and simple spectrum", {"spectrum"}, 60},
        {8, "Baxter commutativity and quantum match", {"grassmann"}, 60},
        {9, "Stirling coefficients and ch paths", {"gamma"}, 5},
        {10, "screening operators", {"screening"}, 60},
        {11, "determinant factorization against golden files", {"determinant"}, 60},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        std::string failing;
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& s : c.suites) {
            SuiteOptions o;
            o.seed = 1;
            try {
                SuiteReport r = run_suite(s, o);
                for (const auto& ch : r.checks)
                    if (!ch.pass) {
                        ok = false;
                        failing += " " + s + "/" + ch.name;
                    }
            } catch (const std::exception& e) {
                ok = false;
                failing += " " + s + ": " + e.what();
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.budget_s;
        bool pass = ok && in_time;
        failed += !pass;
        std::printf("%s criterion %2d: %s (%.2f s, budget %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                    c.what.c_str(), secs, c.budget_s, in_time ? "" : " over budget",
                    failing.empty() ? "" : (" failing:" + failing).c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
