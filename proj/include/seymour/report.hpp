#pragma once

#include <string>
#include <vector>

#include "seymour/analytics.hpp"
#include "seymour/digraph.hpp"
#include "seymour/experiments.hpp"

namespace seymour {

// Shortest round-trip decimal rendering (std::to_chars); locale-independent.
// NaN renders as "nan" (CSV writers map it to an empty cell instead).
std::string format_double(double v);

// Fixed experiment schema: "n,p,trials,mean_s,var_s,frac_all_seymour,
// frac_deviating,seed".  Tournament rows carry p = 0.5 (the per-pair
// orientation probability); an unset frac_deviating is an empty cell.
extern const char* const kTrialCsvHeader;

std::string trial_csv(const ExperimentConfig& cfg, const TrialStats& st);
std::string deviation_csv(const ExperimentConfig& cfg, const std::vector<DeviationRow>& rows);
std::string evolve_csv(const EvolutionTrace& trace);

std::string trial_json(const ExperimentConfig& cfg, const TrialStats& st);
std::string deviation_json(const ExperimentConfig& cfg, const std::vector<DeviationRow>& rows);
std::string evolve_json(const EvolutionTrace& trace);

std::string bounds_json(const BoundsReport& r);
std::string window_json(const DigraphWindow& w);
std::string digraph_lower_json(const DigraphLowerBound& b);

// Window plus (optionally) the expectation lower bound at one p, as a single
// document; `lower` may be null.  The CSV variants are flat field,value rows.
std::string digraph_bounds_json(const DigraphWindow& w, const DigraphLowerBound* lower);
std::string bounds_csv(const BoundsReport& r);
std::string digraph_bounds_csv(const DigraphWindow& w, const DigraphLowerBound* lower);

std::string exact_summary_text(const ExactSummary& s, const std::string& model);
std::string exact_summary_json(const ExactSummary& s, const std::string& model);

std::string profiles_text(const Digraph& g);
std::string profiles_json(const Digraph& g);

}  // namespace seymour
