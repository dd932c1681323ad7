#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core/error.hpp"

namespace coverlens {

// Token valences plus the negation/booster rule tables. Valences live in
// [-4, 4]; the negation set and booster map are fixed rule vocabulary and do
// not come from the lexicon file.
struct SentimentLexicon {
    std::unordered_map<std::string, double> valence;
    std::unordered_set<std::string> negations;
    std::unordered_map<std::string, double> boosters;

    static const SentimentLexicon& builtin();

    // One `token<TAB>valence` per line; blank lines and `#` comments allowed.
    static SentimentLexicon load(const std::string& path);
};

std::vector<std::string> tokenize_comment(const std::string& text);

// Bounded compound of the raw valence sum s: s / sqrt(s^2 + 15).
double compound_of_sum(double raw_sum);

// Maps a compound in [-1, 1] onto the 0-100 scale.
double compound_to_score(double compound);

// 0-100 sentiment of one comment. Unknown tokens contribute nothing; a
// negation within the 3 preceding tokens multiplies the valence by -0.74
// (once per negation token); a booster immediately before a sentiment token
// adds its boost along the valence's sign.
double score_comment(const std::string& text, const SentimentLexicon& lexicon);

// Arithmetic mean; errors on an empty list.
double aggregate_scores(std::span<const double> scores);

}  // namespace coverlens
