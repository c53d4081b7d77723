// Acceptance suite: one line per criterion, exit status 0 only if all pass.
#include <curvecolor/report.hpp>

#include <cstdio>

int main()
{
    using namespace curvecolor::report;
    std::vector<ReportEntry> entries;
    for (const auto & c : criteria()) {
        auto e = run_criterion(c, {});
        std::printf("%s  %2d %-24s %7.2fs  %s\n", e.status == Status::pass ? "PASS" : "FAIL", e.criterion,
            e.id.c_str(), e.seconds, e.computed.c_str());
        if (e.status != Status::pass) {
            std::printf("      expected: %s\n", e.expected.c_str());
            if (! e.witness.is_null())
                std::printf("      witness:  %s\n", e.witness.dump().c_str());
        }
        std::fflush(stdout);
        entries.push_back(std::move(e));
    }
    return exit_code(entries) == 0 ? 0 : 1;
}
