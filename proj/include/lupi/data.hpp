#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lupi/clr.hpp"
#include "lupi/types.hpp"

namespace lupi {

// Long-format choice table: one integer choice per (participant, round).
struct LabDataset {
  int num_actions = 99;
  std::map<int, std::map<int, int>> choices;  // participant -> round -> choice
  std::map<int, int> winners;                 // round -> winning number

  int num_participants() const { return static_cast<int>(choices.size()); }
  int max_round() const;
};

// Parses `participant,round,choice` rows (header required). Throws ParseError
// with the offending line number on malformed rows and out-of-range choices.
LabDataset load_lab_dataset(const std::string& path, int num_actions = 99);

// Parses `round,winning_number` rows into ds.winners; an empty second field
// marks a round without a winner and is skipped.
void load_winners(LabDataset& ds, const std::string& path);

// Inverse of load_lab_dataset: same header, rows sorted by participant then
// round, LF endings.
void save_lab_dataset(const LabDataset& ds, const std::string& path);

// Seven-round block w: rounds 7(w-1)+1 .. 7w.
struct WeekWindow {
  int week = 1;

  int first_round() const { return 7 * (week - 1) + 1; }
  int last_round() const { return 7 * week; }
};

// One trace per participant covering the window's rounds, in round order.
// A missing (participant, round) cell is an error naming the gap.
std::vector<AgentTrace> weekly_traces(const LabDataset& ds,
                                      const WeekWindow& window);

// Whole-session traces (every round the dataset contains, per participant).
std::vector<AgentTrace> full_traces(const LabDataset& ds);

// Entry a-1 = occurrences of action a across all traces.
Vector pooled_counts(const std::vector<AgentTrace>& traces);

// Generative oracle: builds the hierarchy from the average of true_betas at
// the given lambda, then each agent draws a level from its own beta and an
// action from that level's strategy, every round. Deterministic per seed.
std::vector<AgentTrace> synthesize_traces(
    const std::vector<LevelDistribution>& true_betas, double lambda,
    const GameSpec& spec, int rounds_per_agent, std::uint64_t seed);

}  // namespace lupi
