#include "seir/porter_stemmer.hpp"

#include <algorithm>
#include <utility>

namespace seir {

namespace {

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

class Stemmer {
  public:
    explicit Stemmer(std::string_view word) : m_b(word) {}

    std::string run() &&
    {
        if (m_b.size() <= 1) {
            return std::move(m_b);
        }
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5a();
        step5b();
        return std::move(m_b);
    }

  private:
    bool consonant(std::size_t i) const
    {
        switch (m_b[i]) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
            return false;
        case 'y':
            return i == 0 || !consonant(i - 1);
        default:
            return true;
        }
    }

    /// m in [C](VC)^m[V] over the prefix b[0, len).
    int measure(std::size_t len) const
    {
        int m = 0;
        std::size_t i = 0;
        while (i < len && consonant(i)) {
            ++i;
        }
        while (i < len) {
            while (i < len && !consonant(i)) {
                ++i;
            }
            if (i >= len) {
                break;
            }
            while (i < len && consonant(i)) {
                ++i;
            }
            ++m;
        }
        return m;
    }

    bool has_vowel(std::size_t len) const
    {
        for (std::size_t i = 0; i < len; ++i) {
            if (!consonant(i)) {
                return true;
            }
        }
        return false;
    }

    bool double_consonant(std::size_t len) const
    {
        return len >= 2 && m_b[len - 1] == m_b[len - 2] && consonant(len - 1);
    }

    /// *o: prefix ends consonant-vowel-consonant, last not w, x or y.
    bool cvc(std::size_t len) const
    {
        if (len < 3 || !consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) {
            return false;
        }
        char c = m_b[len - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view suffix) const { return m_b.ends_with(suffix); }

    std::size_t stem_len(std::string_view suffix) const { return m_b.size() - suffix.size(); }

    void replace(std::string_view suffix, std::string_view replacement)
    {
        m_b.resize(stem_len(suffix));
        m_b.append(replacement);
    }

    /// First rule whose suffix matches decides; it fires only if the stem
    /// measure exceeds `min_measure`.
    void apply_first(std::initializer_list<Rule> rules, int min_measure)
    {
        for (const auto& rule : rules) {
            if (ends(rule.suffix)) {
                if (measure(stem_len(rule.suffix)) > min_measure) {
                    replace(rule.suffix, rule.replacement);
                }
                return;
            }
        }
    }

    void step1a()
    {
        if (ends("sses")) {
            replace("sses", "ss");
        } else if (ends("ies")) {
            replace("ies", "i");
        } else if (ends("ss")) {
            // unchanged
        } else if (ends("s")) {
            replace("s", "");
        }
    }

    void step1b()
    {
        if (ends("eed")) {
            if (measure(stem_len("eed")) > 0) {
                replace("eed", "ee");
            }
            return;
        }
        std::string_view removed;
        if (ends("ed") && has_vowel(stem_len("ed"))) {
            removed = "ed";
        } else if (ends("ing") && has_vowel(stem_len("ing"))) {
            removed = "ing";
        } else {
            return;
        }
        replace(removed, "");
        if (ends("at")) {
            replace("at", "ate");
        } else if (ends("bl")) {
            replace("bl", "ble");
        } else if (ends("iz")) {
            replace("iz", "ize");
        } else if (double_consonant(m_b.size())) {
            char last = m_b.back();
            if (last != 'l' && last != 's' && last != 'z') {
                m_b.pop_back();
            }
        } else if (measure(m_b.size()) == 1 && cvc(m_b.size())) {
            m_b.push_back('e');
        }
    }

    void step1c()
    {
        if (ends("y") && has_vowel(m_b.size() - 1)) {
            m_b.back() = 'i';
        }
    }

    void step2()
    {
        apply_first(
            {
                {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
                {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
                {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
                {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
            },
            0);
    }

    void step3()
    {
        apply_first(
            {
                {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
                {"ical", "ic"},  {"ful", ""},   {"ness", ""},
            },
            0);
    }

    void step4()
    {
        static constexpr std::string_view suffixes[] = {
            "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
            "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
        };
        for (auto suffix : suffixes) {
            if (!ends(suffix)) {
                continue;
            }
            std::size_t len = stem_len(suffix);
            if (suffix == "ion" && (len == 0 || (m_b[len - 1] != 's' && m_b[len - 1] != 't'))) {
                continue;
            }
            if (measure(len) > 1) {
                m_b.resize(len);
            }
            return;
        }
    }

    void step5a()
    {
        if (!ends("e")) {
            return;
        }
        std::size_t len = m_b.size() - 1;
        int m = measure(len);
        if (m > 1 || (m == 1 && !cvc(len))) {
            m_b.pop_back();
        }
    }

    void step5b()
    {
        if (measure(m_b.size()) > 1 && double_consonant(m_b.size()) && m_b.back() == 'l') {
            m_b.pop_back();
        }
    }

    std::string m_b;
};

}  // namespace

std::string porter_stem(std::string_view word)
{
    bool lower_alpha = std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; });
    if (!lower_alpha) {
        return std::string(word);
    }
    return Stemmer(word).run();
}

}  // namespace seir
