#include "seir/pipeline.hpp"

#include "seir/error.hpp"

#include <gtest/gtest.h>

#include <random>

using seir::DocumentKind;
using Tokens = std::vector<std::string>;

namespace {

TEST(Tokenize, SplitsOnNonAlphanumerics)
{
    EXPECT_EQ(seir::tokenize("image gallery app"), (Tokens{"image", "gallery", "app"}));
    EXPECT_EQ(seir::tokenize("ffmpeg-based!"), (Tokens{"ffmpeg", "based"}));
    EXPECT_EQ(seir::tokenize(""), Tokens{});
    EXPECT_EQ(seir::tokenize("copyFile()"), (Tokens{"copyFile"}));
    EXPECT_EQ(seir::tokenize("caf\xc3\xa9 bar"), (Tokens{"caf", "bar"}));
}

TEST(SplitCamel, Boundaries)
{
    EXPECT_EQ(seir::split_camel("TerminalFactory", true), (Tokens{"TerminalFactory", "Terminal", "Factory"}));
    EXPECT_EQ(seir::split_camel("TerminalFactory", false), (Tokens{"Terminal", "Factory"}));
    EXPECT_EQ(seir::split_camel("video", true), (Tokens{"video"}));
    EXPECT_EQ(seir::split_camel("XMLParser"), (Tokens{"XML", "Parser"}));
    EXPECT_EQ(seir::split_camel("E4Application", true), (Tokens{"E4Application", "E4", "Application"}));
    EXPECT_EQ(seir::split_camel("MP3"), (Tokens{"MP3"}));
    EXPECT_EQ(seir::split_camel("getHTTPResponseCode"), (Tokens{"get", "HTTP", "Response", "Code"}));
}

TEST(Normalize, StripsDigitsAndLowercases)
{
    EXPECT_EQ(seir::normalize({"E4Application"}), (Tokens{"eapplication"}));
    EXPECT_EQ(seir::normalize({"MP3"}), (Tokens{"mp"}));
    EXPECT_EQ(seir::normalize({"Video"}), (Tokens{"video"}));
    EXPECT_EQ(seir::normalize({"2024", "x"}), (Tokens{"x"}));
}

TEST(Stopwords, EnglishAndJava)
{
    auto cfg = seir::PipelineConfig::defaults();
    EXPECT_EQ(seir::remove_stopwords({"the", "void", "player"}, cfg), (Tokens{"player"}));
    EXPECT_EQ(seir::remove_stopwords({}, cfg), Tokens{});
    EXPECT_EQ(seir::remove_stopwords({"public", "static"}, cfg), Tokens{});
    for (const char* kw : {"while", "class", "import", "null", "true", "synchronized", "goto"}) {
        EXPECT_TRUE(cfg.is_stopword(kw)) << kw;
    }
    // Domain words must survive.
    for (const char* w : {"system", "name", "call", "find", "file", "record"}) {
        EXPECT_FALSE(cfg.is_stopword(w)) << w;
    }
}

TEST(Preprocess, DocumentedExamples)
{
    auto cfg = seir::PipelineConfig::defaults();
    EXPECT_EQ(seir::preprocess("Android photo viewer", DocumentKind::description, cfg),
              (Tokens{"android", "photo", "viewer"}));
    EXPECT_EQ(seir::preprocess("", DocumentKind::description, cfg), Tokens{});
    EXPECT_EQ(seir::preprocess("copyFile()", DocumentKind::method_class, cfg), (Tokens{"copyfil", "copi", "file"}));
    EXPECT_EQ(seir::preprocess("Android video recorder", DocumentKind::description, cfg),
              (Tokens{"android", "video", "record"}));
    EXPECT_EQ(seir::preprocess("TerminalFactory", DocumentKind::method_class, cfg),
              (Tokens{"terminalfactori", "termin", "factori"}));
    EXPECT_EQ(seir::preprocess("TerminalFactory", DocumentKind::readme, cfg), (Tokens{"termin", "factori"}));
}

TEST(Preprocess, BugReportKeepsCompound)
{
    auto cfg = seir::PipelineConfig::defaults();
    auto t = seir::preprocess("crash in E4Application", DocumentKind::bug_report, cfg);
    EXPECT_NE(std::find(t.begin(), t.end(), "eapplic"), t.end());
    EXPECT_NE(std::find(t.begin(), t.end(), "applic"), t.end());
}

TEST(Preprocess, CompoundOnlyForCodeKinds)
{
    auto cfg = seir::PipelineConfig::defaults();
    for (auto kind : {DocumentKind::method_class, DocumentKind::import_package, DocumentKind::api,
                      DocumentKind::source_file, DocumentKind::bug_report}) {
        EXPECT_TRUE(seir::uses_code_branch(kind));
    }
    for (auto kind : {DocumentKind::description, DocumentKind::readme, DocumentKind::api_description}) {
        EXPECT_FALSE(seir::uses_code_branch(kind));
    }
}

TEST(Preprocess, NoEmptyTokensOnRandomInput)
{
    auto cfg = seir::PipelineConfig::defaults();
    std::mt19937_64 rng(7);
    const std::string alphabet = "aAbBzZ09_ -.()\t\n\xc3\xa9xyzXYZ";
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        auto len = rng() % 60;
        for (std::size_t i = 0; i < len; ++i) {
            text.push_back(alphabet[rng() % alphabet.size()]);
        }
        for (auto kind : {DocumentKind::description, DocumentKind::source_file}) {
            for (const auto& t : seir::preprocess(text, kind, cfg)) {
                EXPECT_FALSE(t.empty());
                EXPECT_FALSE(cfg.is_stopword(t)) << t;
                for (char c : t) {
                    EXPECT_TRUE(c >= 'a' && c <= 'z') << t;
                }
            }
        }
    }
}

TEST(PipelineConfig, FingerprintTracksSettings)
{
    auto a = seir::PipelineConfig::defaults();
    auto b = seir::PipelineConfig::defaults();
    EXPECT_EQ(a.fingerprint(), b.fingerprint());
    b.keep_compound_for_code = false;
    EXPECT_NE(a.fingerprint(), b.fingerprint());
    auto c = seir::PipelineConfig::defaults();
    c.english_stopwords.insert("gallery");
    EXPECT_NE(a.fingerprint(), c.fingerprint());
}

TEST(PipelineConfig, WordListParsing)
{
    EXPECT_EQ(seir::parse_word_list("a\n# comment\n\n  b  \r\nc"), (std::set<std::string>{"a", "b", "c"}));
}

TEST(PipelineConfig, MissingDirectoryIsConfigError)
{
    EXPECT_THROW(seir::PipelineConfig::from_directory("/nonexistent/stopwords"), seir::ConfigError);
}

}  // namespace
