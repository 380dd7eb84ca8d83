/*
 * Tiebreaking strategy selection for preference construction.
 *
 * Every strategy sorts an agent's candidate actions ascending by a
 * lexicographic key that starts with the goal distance and ends with a
 * fresh random draw; the middle terms are what distinguish them:
 *
 *   original   <dist, eps>
 *   vacancy    <dist, occupied, eps>
 *   hindrance  <dist, hindrance, eps>
 *   regret     <dist, regret, eps>
 *   hr         <dist, hindrance, regret, eps>
 *   rh         <dist, regret, hindrance, eps>
 *   mc         k samples of original, keep the cost-minimizing one
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapf {

enum class Strategy { Original, Vacancy, MC, Hindrance, Regret, HR, RH };

struct StrategyConfig {
  Strategy kind = Strategy::Original;
  int m = 3;       // regret learning iterations
  double w = 0.9;  // regret averaging weight
  int k = 10;      // monte-carlo samples

  bool uses_regret() const
  {
    return kind == Strategy::Regret || kind == Strategy::HR || kind == Strategy::RH;
  }
};

inline Strategy parse_strategy(std::string_view name)
{
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "original") return Strategy::Original;
  if (s == "vacancy") return Strategy::Vacancy;
  if (s == "mc") return Strategy::MC;
  if (s == "hindrance") return Strategy::Hindrance;
  if (s == "regret") return Strategy::Regret;
  if (s == "hr") return Strategy::HR;
  if (s == "rh") return Strategy::RH;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

inline const char* strategy_name(Strategy s)
{
  switch (s) {
    case Strategy::Original: return "original";
    case Strategy::Vacancy: return "vacancy";
    case Strategy::MC: return "mc";
    case Strategy::Hindrance: return "hindrance";
    case Strategy::Regret: return "regret";
    case Strategy::HR: return "hr";
    case Strategy::RH: return "rh";
  }
  return "?";
}

}  // namespace mapf
