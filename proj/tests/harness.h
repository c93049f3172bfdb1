#ifndef EULER_TEST_HARNESS_H
#define EULER_TEST_HARNESS_H

// Minimal pass/fail recorder shared by the test binaries. Each check prints
// one line; main() returns nonzero if anything failed.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace testing {

struct Recorder {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    void record(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            ++passed;
            std::printf("[PASS] %s%s%s\n", name.c_str(), detail.empty() ? "" : "  ",
                        detail.c_str());
        } else {
            ++failed;
            failures.push_back(name);
            std::printf("[FAIL] %s%s%s\n", name.c_str(), detail.empty() ? "" : "  ",
                        detail.c_str());
        }
        std::fflush(stdout);
    }

    // val must not exceed thr.
    void check_le(const std::string& name, double val, double thr) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "(val=%.3e, thr=%.3e)", val, thr);
        record(name, std::isfinite(val) && val <= thr, buf);
    }

    // val must be at least thr.
    void check_ge(const std::string& name, double val, double thr) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "(val=%.3e, thr=%.3e)", val, thr);
        record(name, std::isfinite(val) && val >= thr, buf);
    }

    void check_near(const std::string& name, double val, double expected,
                    double tol) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "(val=%.12g, expected=%.12g, tol=%.1e)",
                      val, expected, tol);
        record(name, std::isfinite(val) && std::fabs(val - expected) <= tol, buf);
    }

    int finish(const char* suite) {
        std::printf("%s: %d passed, %d failed\n", suite, passed, failed);
        for (const auto& f : failures) std::printf("  failed: %s\n", f.c_str());
        return failed == 0 ? 0 : 1;
    }
};

} // namespace testing

#endif
