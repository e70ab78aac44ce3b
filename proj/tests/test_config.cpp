#include <doctest.h>

#include "l1pde/config.hpp"
#include "l1pde/errors.hpp"
#include "l1pde/manifest.hpp"

using namespace l1pde;

TEST_CASE("config parsing: sections, comments, lists") {
    Config c = Config::parse(
        "# a recipe\n"
        "problem = heat1d\n"
        "gamma = 0.5\n"
        "[grid]\n"
        "n = 512   # points\n"
        "xmin = -8\n"
        "xmax = 8\n"
        "[output]\n"
        "times = 0 0.5 1.0\n"
        "quiet = true\n");
    CHECK(c.get_string("problem") == "heat1d");
    CHECK(c.get_double("gamma") == 0.5);
    CHECK(c.get_long("grid.n") == 512);
    CHECK(c.get_double("grid.xmin") == -8.0);
    CHECK(c.get_bool("output.quiet", false));
    CHECK(c.get_list("output.times") == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(c.get_double("missing", 7.0) == 7.0);
    CHECK(!c.has("nothing"));
}

TEST_CASE("config errors carry location context") {
    CHECK_THROWS_AS(Config::parse("novalue\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse("[broken\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse("a = 1\na = 2\n"), ConfigError);
    Config c = Config::parse("x = abc\nn = 1.5\n");
    CHECK_THROWS_AS(c.get_double("x"), ConfigError);
    CHECK_THROWS_AS(c.get_long("n"), ConfigError);
    CHECK_THROWS_AS(c.get_string("gone"), ConfigError);
}

TEST_CASE("config echo is canonical") {
    Config a = Config::parse("b = 2\na = 1\n[s]\nk = v\n");
    Config b = Config::parse("a = 1\n[s]\nk = v\n");
    CHECK(a.echo() != b.echo());
    CHECK(a.echo() == "a = 1\nb = 2\ns.k = v\n");
}

TEST_CASE("fnv1a64 file hashing is stable") {
    const char* path = "test_hash.bin";
    std::FILE* fp = std::fopen(path, "wb");
    REQUIRE(fp);
    std::fputs("hello sandpile", fp);
    std::fclose(fp);
    const std::string h1 = fnv1a64_file(path);
    const std::string h2 = fnv1a64_file(path);
    CHECK(h1 == h2);
    CHECK(h1.size() == 16);
    std::remove(path);
    CHECK_THROWS_AS(fnv1a64_file(path), IoError);
}
