#include <doctest.h>

#include <sstream>
#include <string>

#include "streamtag/corpus.hpp"

using namespace streamtag;

TEST_SUITE("corpus") {

TEST_CASE("direct field mapping") {
    std::string err;
    auto post = parse_corpus_line(R"({"id":"1","timestamp":0,"text":"hi"})", err);
    REQUIRE(post);
    CHECK(post->id == "1");
    CHECK(post->timestamp == 0);
    CHECK(post->text == "hi");
    CHECK(err.empty());
}

TEST_CASE("unknown fields ignored") {
    std::string err;
    auto post = parse_corpus_line(
        R"({"id":"1","timestamp":5,"text":"x","lang":"en","retweets":3})", err);
    REQUIRE(post);
    CHECK(post->timestamp == 5);
}

TEST_CASE("missing timestamp") {
    std::string err;
    CHECK_FALSE(parse_corpus_line(R"({"id":"2","text":"x"})", err));
    CHECK(err.find("timestamp") != std::string::npos);
}

TEST_CASE("malformed lines") {
    std::string err;
    CHECK_FALSE(parse_corpus_line(std::string(10000, 'a'), err));
    CHECK(err == "malformed JSON");
    CHECK_FALSE(parse_corpus_line("", err));
    CHECK_FALSE(parse_corpus_line("# comment line", err));
    CHECK_FALSE(parse_corpus_line("[1,2,3]", err));
    CHECK_FALSE(parse_corpus_line(R"({"id":7,"timestamp":0,"text":"x"})", err));
}

TEST_CASE("contract violations") {
    std::string err;
    CHECK_FALSE(parse_corpus_line(R"({"id":"","timestamp":0,"text":"x"})", err));
    CHECK(err.find("id") != std::string::npos);
    CHECK_FALSE(parse_corpus_line(R"({"id":"1","timestamp":-5,"text":"x"})", err));
    CHECK(err.find("negative") != std::string::npos);

    const std::string big(600, 'x');
    CHECK_FALSE(parse_corpus_line(
        R"({"id":"1","timestamp":0,"text":")" + big + R"("})", err));
    CHECK(err.find("560") != std::string::npos);
    // configurable limit
    CHECK(parse_corpus_line(
        R"({"id":"1","timestamp":0,"text":")" + big + R"("})", err, 1024));
}

TEST_CASE("reader skips and counts bad lines") {
    std::istringstream in(
        "{\"id\":\"1\",\"timestamp\":0,\"text\":\"a\"}\n"
        "garbage\n"
        "\n"
        "{\"id\":\"2\",\"timestamp\":1,\"text\":\"b\"}\r\n"
        "{\"id\":\"3\",\"text\":\"c\"}\n");
    CorpusReader reader(in);
    auto p1 = reader.next();
    REQUIRE(p1);
    CHECK(p1->id == "1");
    auto p2 = reader.next();
    REQUIRE(p2);
    CHECK(p2->id == "2");
    CHECK_FALSE(reader.next());
    CHECK(reader.parse_errors() == 2);  // blank lines are not errors
    CHECK(reader.last_error().find("line 5") != std::string::npos);
}

}  // TEST_SUITE
