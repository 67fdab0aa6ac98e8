#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "sdquant/dominance.hpp"
#include "sdquant/envelope.hpp"
#include "sdquant/market.hpp"

namespace sdquant::io {

/// All emitters print numbers with 17 significant digits so every double
/// round-trips exactly and repeated runs are byte-identical.
std::string format_number(double x);

std::string to_json(const StepQuantile& q);
std::string to_json(const PiecewiseLinearFn& p);
std::string to_json(const DominanceReport& r);
std::string to_json(const Market& m);
std::string to_json(const RandomizedPayoff& payoff);
std::string to_json(const EnvelopeSolution& sol);

StepQuantile parse_step_quantile(const std::string& text);
PiecewiseLinearFn parse_piecewise_linear(const std::string& text);
Market parse_market(const std::string& text);
RandomizedPayoff parse_randomized_payoff(const std::string& text);
EnvelopeSolution parse_envelope_solution(const std::string& text);

/// CSV samples: one value per line with an optional weight column
/// (comma or whitespace separated); blank lines and '#' comments skipped.
StepQuantile quantile_from_csv(std::istream& in);

StepQuantile load_step_quantile(const std::filesystem::path& file);
Market load_market(const std::filesystem::path& file);
std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, const std::string& text);

} // namespace sdquant::io
