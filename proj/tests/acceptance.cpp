// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ffperm/criteria.hpp"
#include "ffperm/suite.hpp"
#include "ffperm/verify.hpp"

using namespace ffperm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
    std::printf("%s %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

struct Tally {
    std::size_t points = 0;
    std::size_t mismatches = 0;
    bool complete = true;
    std::string jsonl;

    void add(const SuiteResult& r) {
        points += r.summary.points;
        mismatches += r.summary.mismatches;
        complete = complete && r.summary.complete && r.summary.skipped.empty();
        std::ostringstream os;
        write_jsonl(os, r.records);
        jsonl += os.str();
    }
    bool ok() const { return complete && mismatches == 0 && points > 0; }
    std::string text() const {
        return std::to_string(points) + " points, " + std::to_string(mismatches) + " mismatches" +
               (complete ? "" : ", incomplete");
    }
};

GridConfig grid(FamilyId family, std::vector<unsigned> primes, unsigned k_min, unsigned k_max, unsigned n_jobs) {
    GridConfig cfg;
    cfg.family = family;
    cfg.primes = std::move(primes);
    cfg.k_min = k_min;
    cfg.k_max = k_max;
    cfg.jobs = n_jobs;
    return cfg;
}

// Every grid in AC1..AC5, in a fixed order.
std::vector<GridConfig> family_grids(unsigned n_jobs) {
    std::vector<GridConfig> g;
    // AC1: p^{3k} <= 2^18 gives k <= 6, 3, 2 for p = 2, 3, 5.
    g.push_back(grid(FamilyId::KeyMap, {2}, 1, 6, n_jobs));
    g.push_back(grid(FamilyId::KeyMap, {3}, 1, 3, n_jobs));
    g.push_back(grid(FamilyId::KeyMap, {5}, 1, 2, n_jobs));
    // AC2
    for (FamilyId f : {FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4}) {
        g.push_back(grid(f, {2}, 1, 6, n_jobs));
        g.push_back(grid(f, {3, 5}, 1, 2, n_jobs));
    }
    // AC3
    g.push_back(grid(FamilyId::Main1, {2}, 1, 4, n_jobs));
    g.push_back(grid(FamilyId::Main1, {3}, 1, 2, n_jobs));
    // AC4: GF(2^9) has exactly 512 elements, so the k = 3 sample is the whole field.
    g.push_back(grid(FamilyId::Main3, {2}, 1, 3, n_jobs));
    // AC5: q in {2, 4, 8} and {3, 5, 7}
    for (FamilyId f : {FamilyId::KeyDeg3, FamilyId::MainDeg3, FamilyId::F6}) {
        g.push_back(grid(f, {2}, 1, 3, n_jobs));
        g.push_back(grid(f, {3, 5, 7}, 1, 1, n_jobs));
    }
    return g;
}

Tally run_grids(const std::vector<GridConfig>& grids, std::size_t first, std::size_t last) {
    Tally t;
    for (std::size_t i = first; i < last; ++i) t.add(run_suite(grids[i]));
    return t;
}

std::string secs(double s, const char* bound) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s (< %s)", s, bound);
    return buf;
}

}  // namespace

int main() {
    const std::vector<GridConfig> grids = family_grids(jobs());
    std::string all_jsonl;

    {
        const auto t0 = Clock::now();
        const Tally t = run_grids(grids, 0, 3);
        const double s = seconds_since(t0);
        all_jsonl += t.jsonl;
        report("AC1", t.ok() && s < 60, "key map on Gamma: " + t.text() + ", " + secs(s, "60 s"));
    }
    {
        const auto t0 = Clock::now();
        const Tally t = run_grids(grids, 3, 11);
        const double s = seconds_since(t0);
        all_jsonl += t.jsonl;
        report("AC2", t.ok() && s < 300, "f1-f4: " + t.text() + ", " + secs(s, "300 s"));
    }
    {
        const Tally t = run_grids(grids, 11, 13);
        all_jsonl += t.jsonl;
        report("AC3", t.ok(), "main1 over all l, m, n and c in F_q^*: " + t.text());
    }
    {
        const Tally t = run_grids(grids, 13, 14);
        all_jsonl += t.jsonl;
        report("AC4", t.ok(), "main3 with c over GF(q^3): " + t.text());
    }
    {
        const Tally t = run_grids(grids, 14, grids.size());
        all_jsonl += t.jsonl;
        report("AC5", t.ok(), "key-deg3, main-deg3, f6 for q in {2,4,8,3,5,7}: " + t.text());
    }
    {
        const auto t0 = Clock::now();
        std::size_t pairs = 0, bad = 0;
        for (unsigned k = 1; k <= 60; ++k) {
            for (unsigned l = 0; l <= 60; ++l) {
                const GcdPattern g = gcd_pattern(k, l);
                const GcdPattern v = gcd_pattern_by_valuation(k, l);
                ++pairs;
                bad += (g.coprime_plus != v.coprime_plus) + (g.coprime_minus != v.coprime_minus);
            }
        }
        const double s = seconds_since(t0);
        report("AC6", bad == 0 && s < 1,
               "gcd pattern: " + std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches, " +
                   secs(s, "1 s"));
    }
    {
        bool ok = true;
        std::string detail = "degree-1 maps:";
        for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}}) {
            const Deg1Report r = check_deg1_lemmas(p, k, 8);
            const bool even = p == 2;
            const bool good = r.passed() && r.converse_checked && (!even || r.involution_applicable);
            ok = ok && good;
            detail += " q=" + std::to_string(r.q) + (good ? " ok" : " bad");
        }
        report("AC7", ok, detail);
    }
    {
        bool ok = true;
        std::string detail = "200 seeded instances each:";
        const auto one = [&](const char* name, bool step1, unsigned p, unsigned k) {
            const Field f3 = Field::build(p, 3 * k);
            const LemmaSweep s = step1 ? sweep_step1(f3, k, 200, 2024) : sweep_step2(f3, k, 200, 2024);
            const bool good = s.passed() && s.instances == 200;
            ok = ok && good;
            detail += std::string(" ") + name + " GF(" + std::to_string(f3.size()) + ") " + std::to_string(s.agreeing) +
                      "/" + std::to_string(s.instances);
        };
        one("step1", true, 2, 1);
        one("step1", true, 2, 2);
        one("step1", true, 3, 1);
        one("step2", false, 2, 1);
        one("step2", false, 2, 2);
        one("step2", false, 5, 1);
        report("AC8", ok, detail);
    }
    {
        bool ok = true;
        std::size_t checked = 0;
        for (unsigned k = 1; k <= 2; ++k) {
            const Field f6 = Field::build(2, 6 * k);
            for (unsigned l = 0; l <= 6 * k; ++l) {
                if (!(ord2(k) <= ord2(l))) continue;
                ok = ok && check_htilde_identities(f6, k, l);
                ++checked;
            }
        }
        report("AC9", ok, "h~ conjugation identities: " + std::to_string(checked) + " (k, l) pairs");
    }
    {
        const RemarkReport r1 = check_remark(1);
        const RemarkReport r3 = check_remark(3);
        const auto b = [](bool v) { return v ? "true" : "false"; };
        report("AC10", r1.literal_permutes && r1.trace_form_permutes,
               std::string("remark k=1 literal=") + b(r1.literal_permutes) + " trace=" + b(r1.trace_form_permutes) +
                   "; k=3 (recorded) literal=" + b(r3.literal_permutes) + " trace=" + b(r3.trace_form_permutes));
    }
    {
        // Second run with a different worker count.
        const std::vector<GridConfig> again = family_grids(jobs() == 4 ? 3 : 4);
        const Tally t = run_grids(again, 0, again.size());
        report("AC11", t.jsonl == all_jsonl,
               "two suite runs, " + std::to_string(all_jsonl.size()) + " bytes of JSON lines, " +
                   (t.jsonl == all_jsonl ? "identical" : "different"));
    }

    std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
