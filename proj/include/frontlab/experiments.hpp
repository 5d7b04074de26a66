#pragma once

#include <string>
#include <vector>

#include "frontlab/config.hpp"

namespace frontlab {

/// One acceptance check. Pass semantics by kind:
///   AbsDiff: |measured - target| <= tol
///   AtMost:  measured <= target (tol unused, reported 0)
///   AtLeast: measured >= target
///   Flag:    measured == 1
struct Criterion {
    enum class Kind { AbsDiff, AtMost, AtLeast, Flag };
    std::string name;
    Kind kind = Kind::AbsDiff;
    double measured = 0.0;
    double target = 0.0;
    double tol = 0.0;
    bool pass = false;
};

Criterion within(const std::string& name, double measured, double target, double tol);
Criterion at_most(const std::string& name, double measured, double limit);
Criterion at_least(const std::string& name, double measured, double limit);
Criterion flag(const std::string& name, bool ok);

struct ExperimentReport {
    std::string id;
    std::string description;
    std::vector<Criterion> criteria;
    double wall_seconds = 0.0;
    std::string config_hash;
    std::string version;

    bool pass() const;
};

struct ExperimentConfig {
    std::string id;          // E1..E7
    Config overrides;        // validated against the experiment schema
    std::string out_dir;     // empty: no CSV side outputs
    int threads = 1;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Writes report.txt and report.csv (criterion, measured, target, tol, pass)
/// into out_dir. Throws on an empty criterion list.
void emit_report(const ExperimentReport& report, const std::string& out_dir);

struct CatalogEntry {
    std::string id;
    std::string description;
};

const std::vector<CatalogEntry>& list_experiments();

}  // namespace frontlab
