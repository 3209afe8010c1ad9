#pragma once

// Known n = 3 values used as frozen expectations. Grids list Bob's words
// down the side (all eight) and Alice's words across (those starting with H);
// "*" marks the diagonal.

#include <array>
#include <string>
#include <vector>

namespace penney::reference {

inline const std::array<const char*, 4> alice_cols{"HHH", "HHT", "HTH", "HTT"};
inline const std::array<const char*, 8> bob_rows{"HHH", "HHT", "HTH", "HTT",
                                                 "THH", "THT", "TTH", "TTT"};

using Grid = std::array<std::array<const char*, 4>, 8>;

/// Classic game, Bob's win probability.
inline const Grid classic_bob_win{{
    {"*", "1/2", "2/5", "2/5"},
    {"1/2", "*", "2/3", "2/3"},
    {"3/5", "1/3", "*", "1/2"},
    {"3/5", "1/3", "1/2", "*"},
    {"7/8", "3/4", "1/2", "1/2"},
    {"7/12", "3/8", "1/2", "1/2"},
    {"7/10", "1/2", "5/8", "1/4"},
    {"1/2", "3/10", "5/12", "1/8"},
}};

/// Head-start game, Bob's win probability.
inline const Grid head_start_bob_win{{
    {"*", "7/16", "7/20", "7/20"},
    {"7/16", "*", "7/12", "7/12"},
    {"21/40", "7/24", "*", "7/16"},
    {"21/40", "7/24", "7/16", "*"},
    {"49/64", "21/32", "7/16", "7/16"},
    {"49/96", "21/64", "7/16", "7/16"},
    {"49/80", "7/16", "35/64", "7/32"},
    {"7/16", "21/80", "35/96", "7/64"},
}};

/// Post-a-Bobalyptic game, "bob, alice, tie".
inline const Grid post_a_bobalyptic_triples{{
    {"*", "1/4, 1/2, 1/4", "2/5, 3/5, 0", "2/5, 3/5, 0"},
    {"1/2, 1/2, 0", "*", "1/3, 1/3, 1/3", "1/3, 1/3, 1/3"},
    {"3/5, 2/5, 0", "1/3, 2/3, 0", "*", "1/2, 1/2, 0"},
    {"3/5, 2/5, 0", "1/3, 2/3, 0", "1/2, 1/2, 0", "*"},
    {"7/16, 1/8, 7/16", "3/8, 1/4, 3/8", "1/2, 1/2, 0", "1/2, 1/2, 0"},
    {"7/12, 5/12, 0", "3/8, 5/8, 0", "1/4, 1/2, 1/4", "1/4, 1/2, 1/4"},
    {"7/10, 3/10, 0", "1/2, 1/2, 0", "5/8, 3/8, 0", "1/4, 3/4, 0"},
    {"1/2, 1/2, 0", "3/10, 7/10, 0", "5/12, 7/12, 0", "1/8, 7/8, 0"},
}};

/// Post-a-Bobalyptic game, Bob's odds "a to b".
inline const Grid post_a_bobalyptic_odds{{
    {"*", "1 to 2", "2 to 3", "2 to 3"},
    {"1 to 1", "*", "1 to 1", "1 to 1"},
    {"3 to 2", "1 to 2", "*", "1 to 1"},
    {"3 to 2", "1 to 2", "1 to 1", "*"},
    {"7 to 2", "3 to 2", "1 to 1", "1 to 1"},
    {"7 to 5", "3 to 5", "1 to 2", "1 to 2"},
    {"7 to 3", "1 to 1", "5 to 3", "1 to 3"},
    {"1 to 1", "3 to 7", "5 to 7", "1 to 7"},
}};

/// Second-occurrence game, Bob's win probability.
inline const Grid second_occurrence_bob_win{{
    {"*", "1/2", "56/125", "56/125"},
    {"1/2", "*", "16/27", "16/27"},
    {"69/125", "11/27", "*", "1/2"},
    {"69/125", "11/27", "1/2", "*"},
    {"11/16", "3/4", "1/2", "1/2"},
    {"59/108", "7/16", "1/2", "1/2"},
    {"151/250", "1/2", "9/16", "1/4"},
    {"1/2", "99/250", "49/108", "5/16"},
}};

/// Blended game, Bob's win probability.
inline const Grid blended_bob_win{{
    {"*", "1/2", "1/4", "2/5"},
    {"1/2", "*", "1/2", "2/3"},
    {"3/4", "1/2", "*", "1/2"},
    {"3/5", "1/3", "1/2", "*"},
    {"7/8", "3/4", "1/4", "1/2"},
    {"7/12", "3/8", "1/2", "3/4"},
    {"7/10", "1/2", "5/8", "1/4"},
    {"1/2", "3/10", "5/12", "1/8"},
}};

/// No-flippancy game output (diagonal included: both players with the same
/// word).
inline const Grid no_flippancy_output{{
    {"HHH", "HHT", "HHTH", "HHTHTHT..."},
    {"HHH", "HHT", "HHT", "HHT"},
    {"HTH", "HTH", "HTH", "HTT"},
    {"HTHTHT...", "HTHTHT...", "HTH", "HTT"},
    {"HTHH", "HTHH", "HTH", "HTT"},
    {"HTHT", "HTHT", "HTH", "HTT"},
    {"HTHTHT...", "HTHTHT...", "HTH", "HTT"},
    {"HTHTHT...", "HTHTHT...", "HTH", "HTT"},
}};

/// No-flippancy game, winner and number of turns.
inline const Grid no_flippancy_result{{
    {"Tie, 3", "Alice, 3", "Alice, 4", "Tie, infinite"},
    {"Alice, 3", "Tie, 3", "Bob, 3", "Bob, 3"},
    {"Bob, 3", "Bob, 3", "Tie, 3", "Alice, 3"},
    {"Tie, infinite", "Tie, infinite", "Alice, 3", "Tie, 3"},
    {"Bob, 4", "Bob, 4", "Alice, 3", "Alice, 3"},
    {"Bob, 4", "Bob, 4", "Alice, 3", "Alice, 3"},
    {"Tie, infinite", "Tie, infinite", "Alice, 3", "Alice, 3"},
    {"Tie, infinite", "Tie, infinite", "Alice, 3", "Alice, 3"},
}};

struct BestChoice {
  const char* alice;
  std::vector<std::string> best;
  const char* odds;
};

inline const std::vector<BestChoice> classic_best{
    {"HHH", {"THH"}, "7 to 1"}, {"HHT", {"THH"}, "3 to 1"},
    {"HTH", {"HHT"}, "2 to 1"}, {"HTT", {"HHT"}, "2 to 1"}};
inline const std::vector<BestChoice> head_start_best{
    {"HHH", {"THH"}, "49 to 15"}, {"HHT", {"THH"}, "21 to 11"},
    {"HTH", {"HHT"}, "7 to 5"}, {"HTT", {"HHT"}, "7 to 5"}};
inline const std::vector<BestChoice> post_a_bobalyptic_best{
    {"HHH", {"THH"}, "7 to 2"}, {"HHT", {"THH"}, "3 to 2"},
    {"HTH", {"TTH"}, "5 to 3"}, {"HTT", {"HHT", "HTH", "THH"}, "1 to 1"}};
inline const std::vector<BestChoice> second_occurrence_best{
    {"HHH", {"THH"}, "11 to 5"}, {"HHT", {"THH"}, "3 to 1"},
    {"HTH", {"HHT"}, "16 to 11"}, {"HTT", {"HHT"}, "16 to 11"}};
inline const std::vector<BestChoice> blended_best{
    {"HHH", {"THH"}, "7 to 1"}, {"HHT", {"THH"}, "3 to 1"},
    {"HTH", {"TTH"}, "5 to 3"}, {"HTT", {"THT"}, "3 to 1"}};

struct Anomaly {
  const char* winner;
  const char* alice;
  const char* bob;
  unsigned alice_wait;
  unsigned bob_wait;
};

/// Head-start game, n = 3.
inline const std::vector<Anomaly> head_start_anomalies_n3{
    {"Alice", "HTH", "THH", 10, 9}, {"Bob", "HHT", "THH", 8, 9},
    {"Alice", "HTH", "HTT", 10, 9}, {"Bob", "HTT", "HHT", 8, 9},
    {"Alice", "HHH", "HHT", 14, 9}};

/// Post-a-Bobalyptic game, n = 4.
inline const std::vector<Anomaly> post_a_bobalyptic_anomalies_n4{
    {"Alice", "HTTH", "TTHH", 18, 16}, {"Alice", "HTHT", "THTT", 20, 18},
    {"Alice", "HTHH", "THHH", 18, 16}, {"Bob", "HHTT", "HTHH", 16, 18},
    {"Alice", "HTHH", "HHTT", 18, 16}};

/// Two-coin game by autocorrelation class: rows Bob's class, columns
/// Alice's class; "bob, alice, tie".
inline const std::array<const char*, 3> class_labels{"111", "101", "100"};
inline const std::array<std::array<const char*, 3>, 3> two_coin_classes{{
    {"435/913, 435/913, 43/913", "3289/8691, 1643/2897, 473/8691",
     "23327/73057, 45409/73057, 4321/73057"},
    {"1643/2897, 3289/8691, 473/8691", "487/1045, 487/1045, 71/1045",
     "22431/55265, 28673/55265, 4161/55265"},
    {"45409/73057, 23327/73057, 4321/73057", "28673/55265, 22431/55265, 4161/55265",
     "377/825, 377/825, 71/825"},
}};

/// The same, rounded for display.
inline const std::array<std::array<const char*, 3>, 3> two_coin_classes_approx{{
    {".48, .48, .047", ".38, .57, .055", ".32, .62, .059"},
    {".57, .38, .054", ".47, .47, .068", ".41, .52, .075"},
    {".62, .32, .059", ".52, .41, .075", ".46, .46, .086"},
}};

struct SequenceRow {
  std::vector<std::string> words;
  const char* cln;
  std::vector<unsigned> terms;
};

/// First nine first-timer counts, grouped by autocorrelation.
inline const std::vector<SequenceRow> first_timer_rows{
    {{"H", "T"}, "1", {1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {{"HH", "TT"}, "11", {0, 1, 1, 2, 3, 5, 8, 13, 21}},
    {{"HT", "TH"}, "10", {0, 1, 2, 3, 4, 5, 6, 7, 8}},
    {{"HHH", "TTT"}, "111", {0, 0, 1, 1, 2, 4, 7, 13, 24}},
    {{"HHT", "HTT", "THH", "TTH"}, "100", {0, 0, 1, 2, 4, 7, 12, 20, 33}},
    {{"HTH", "THT"}, "101", {0, 0, 1, 2, 3, 5, 9, 16, 28}},
    {{"HHHH", "TTTT"}, "1111", {0, 0, 0, 1, 1, 2, 4, 8, 15}},
    {{"HHHT", "HHTT", "HTTT", "TTTH", "TTHH", "THHH"}, "1000", {0, 0, 0, 1, 2, 4, 8, 15, 28}},
};

}  // namespace penney::reference
