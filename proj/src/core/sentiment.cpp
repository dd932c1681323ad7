#include "core/sentiment.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace coverlens {

namespace detail {
const char* builtin_lexicon_text();
}

namespace {

constexpr double kNegationScalar = -0.74;
constexpr double kCompoundNorm = 15.0;
constexpr int kNegationWindow = 3;

std::unordered_set<std::string> default_negations() {
    return {"not",      "no",       "never",    "neither",  "nor",      "cannot",
            "can't",    "cant",     "don't",    "dont",     "won't",    "wont",
            "isn't",    "isnt",     "wasn't",   "wasnt",    "aren't",   "arent",
            "weren't",  "werent",   "doesn't",  "doesnt",   "didn't",   "didnt",
            "couldn't", "couldnt",  "shouldn't","shouldnt", "wouldn't", "wouldnt",
            "hasn't",   "hasnt",    "haven't",  "havent",   "hadn't",   "hadnt",
            "ain't",    "aint",     "without",  "rarely",   "seldom",   "nothing",
            "nobody",   "none",     "nowhere"};
}

std::unordered_map<std::string, double> default_boosters() {
    return {{"very", 0.293},       {"really", 0.293},   {"extremely", 0.293},
            {"absolutely", 0.293}, {"incredibly", 0.293},{"so", 0.293},
            {"totally", 0.293},    {"super", 0.293},    {"utterly", 0.293},
            {"completely", 0.293}, {"truly", 0.293},    {"insanely", 0.293},
            {"quite", 0.18},       {"pretty", 0.18},
            {"slightly", -0.293},  {"somewhat", -0.293},{"barely", -0.293},
            {"hardly", -0.293},    {"kinda", -0.293},   {"marginally", -0.293}};
}

bool is_token_char(unsigned char c) {
    // Apostrophes stay inside tokens so contractions survive; bytes >= 0x80
    // keep multi-byte UTF-8 sequences intact.
    return std::isalnum(c) || c == '\'' || c >= 0x80;
}

std::string trim_apostrophes(const std::string& token) {
    std::size_t begin = 0, end = token.size();
    while (begin < end && token[begin] == '\'') ++begin;
    while (end > begin && token[end - 1] == '\'') --end;
    return token.substr(begin, end - begin);
}

SentimentLexicon parse_lexicon(std::istream& in, const std::string& origin) {
    SentimentLexicon lex;
    lex.negations = default_negations();
    lex.boosters = default_boosters();

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            raise(Status::format, origin + ": line " + std::to_string(line_no) +
                                      " is not token<TAB>valence");
        std::string token = line.substr(0, tab);
        for (char& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        double value = 0.0;
        try {
            value = std::stod(line.substr(tab + 1));
        } catch (const std::exception&) {
            raise(Status::format, origin + ": line " + std::to_string(line_no) +
                                      " has a non-numeric valence");
        }
        if (!std::isfinite(value) || value < -4.0 || value > 4.0)
            raise(Status::format, origin + ": line " + std::to_string(line_no) +
                                      " valence outside [-4, 4]");
        lex.valence[token] = value;
    }
    if (lex.valence.empty()) raise(Status::empty, origin + ": lexicon has no entries");
    return lex;
}

}  // namespace

const SentimentLexicon& SentimentLexicon::builtin() {
    static const SentimentLexicon lex = [] {
        std::istringstream in(detail::builtin_lexicon_text());
        return parse_lexicon(in, "builtin lexicon");
    }();
    return lex;
}

SentimentLexicon SentimentLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Status::io, "cannot open lexicon file: " + path);
    return parse_lexicon(in, path);
}

std::vector<std::string> tokenize_comment(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (is_token_char(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            std::string token = trim_apostrophes(current);
            if (!token.empty()) tokens.push_back(std::move(token));
            current.clear();
        }
    }
    if (!current.empty()) {
        std::string token = trim_apostrophes(current);
        if (!token.empty()) tokens.push_back(std::move(token));
    }
    return tokens;
}

double compound_of_sum(double raw_sum) {
    return raw_sum / std::sqrt(raw_sum * raw_sum + kCompoundNorm);
}

double compound_to_score(double compound) { return (compound + 1.0) * 50.0; }

double score_comment(const std::string& text, const SentimentLexicon& lexicon) {
    if (lexicon.valence.empty()) raise(Status::empty, "sentiment lexicon is empty");
    const std::vector<std::string> tokens = tokenize_comment(text);

    double sum = 0.0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto it = lexicon.valence.find(tokens[i]);
        if (it == lexicon.valence.end()) continue;
        double v = it->second;
        if (v == 0.0) continue;

        for (int back = 1; back <= kNegationWindow && back <= static_cast<int>(i); ++back) {
            if (lexicon.negations.count(tokens[i - static_cast<std::size_t>(back)]))
                v *= kNegationScalar;
        }
        if (i > 0) {
            const auto booster = lexicon.boosters.find(tokens[i - 1]);
            if (booster != lexicon.boosters.end())
                v += (v >= 0.0 ? booster->second : -booster->second);
        }
        sum += v;
    }
    return compound_to_score(compound_of_sum(sum));
}

double aggregate_scores(std::span<const double> scores) {
    if (scores.empty()) raise(Status::empty, "cannot aggregate an empty score list");
    double acc = 0.0;
    for (double s : scores) acc += s;
    return acc / static_cast<double>(scores.size());
}

}  // namespace coverlens
