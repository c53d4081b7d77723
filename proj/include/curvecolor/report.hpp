#pragma once

#include <curvecolor/graph.hpp>

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace curvecolor::report
{
    enum class Status
    {
        pass,
        fail,
        skipped_budget
    };

    auto to_string(Status s) -> std::string;

    /// One checked claim. `source` says where the expected value comes from.
    struct ReportEntry
    {
        int criterion = 0;
        std::string id;
        std::string title;
        Status status = Status::fail;
        std::string computed;
        std::string expected;
        std::string source;
        /// Machine-readable evidence for a failure; empty on success.
        nlohmann::json witness;
        double seconds = 0;
    };

    struct Outcome
    {
        bool passed = false;
        std::string computed;
        std::string expected;
        nlohmann::json witness;
    };

    struct Criterion
    {
        int number = 0;
        std::string id;
        std::string title;
        std::string source;
        std::function<Outcome(SearchBudget)> run;
    };

    auto criteria() -> const std::vector<Criterion> &;

    /// Runs one check, turning budget exhaustion into a skip and any other
    /// exception into a failure carrying the message.
    auto run_criterion(const Criterion & c, SearchBudget budget) -> ReportEntry;

    /// Entries come back in criterion order whether or not they ran concurrently.
    auto run_all(SearchBudget budget, bool parallel = false) -> std::vector<ReportEntry>;

    /// 0 all pass, 1 any failure, 3 skips without failures.
    auto exit_code(const std::vector<ReportEntry> & entries) -> int;

    /// Deterministic table; wall times are left out.
    auto to_text(const std::vector<ReportEntry> & entries) -> std::string;
    /// Wall times go under "metadata" only.
    auto to_json(const std::vector<ReportEntry> & entries) -> nlohmann::json;

    /// length triangles {i, i+1, i+2} glued along edges.
    auto triangle_strip(int length) -> Graph;

    struct TracedExample
    {
        std::string name;
        nlohmann::json input;
    };

    /// Crossing data for a few filling pairs used by the conservation check.
    auto traced_examples() -> std::vector<TracedExample>;
}
