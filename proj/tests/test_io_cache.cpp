#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padezeta/cache.hpp"
#include "padezeta/construction.hpp"
#include "padezeta/derivation.hpp"
#include "padezeta/errors.hpp"
#include "padezeta/io.hpp"

#include "helpers.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

using namespace padezeta;
using pztest::untwisted;

namespace fs = std::filesystem;

namespace {

LinearFormTable table_for(const ProblemParams& pp) {
    return s_table(derive(build_construction(pp)));
}

bool tables_equal(const LinearFormTable& x, const LinearFormTable& y) {
    return x.a == y.a && x.N == y.N && x.K == y.K && x.d0 == y.d0 && x.i0 == y.i0 &&
           x.delta == y.delta && x.s == y.s;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("padezeta_test_cache_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("decimal digit budget for a binary precision") {
    CHECK(decimal_digits_for(256) == 80);
    CHECK(decimal_digits_for(64) == 22);
    CHECK(decimal_digits_for(1) == 3);
}

TEST_CASE("integers and rationals render as decimal strings") {
    CHECK(json_of(BigInt(-5)) == "\"-5\"");
    CHECK(json_of(BigInt(0)) == "\"0\"");
    CHECK(json_of(make_rat(3, 4)) == R"({"num":"3","den":"4"})");
    CHECK(json_of(make_rat(-6, 8)) == R"({"num":"-3","den":"4"})");
    CHECK(json_of(Poly{BigRat(1), make_rat(1, 2)}) ==
          R"([{"num":"1","den":"1"},{"num":"1","den":"2"}])");
}

TEST_CASE("floats carry an explicit binary precision as a JSON number") {
    const std::string j = json_of(MpFloat::from_long(1, 64));
    CHECK(j.find("\"prec_bits\":64") != std::string::npos);   // number, not string
    CHECK(j.find("\"dec\":\"1.00000") != std::string::npos);  // fixed-point decimal
}

TEST_CASE("documents are canonical: stable order, two-space indent, final newline") {
    const std::string doc = canonical_document(R"({"b":1,"a":2})");
    CHECK(doc == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");  // insertion order kept
    CHECK_THROWS_AS(canonical_document("not json"), InvalidParams);

    const std::string j1 = json_of(table_for(untwisted(3, 1, 1, 2)));
    const std::string j2 = json_of(table_for(untwisted(3, 1, 1, 2)));
    CHECK(j1 == j2);
}

TEST_CASE("table JSON round trip and rejection of malformed tables") {
    const LinearFormTable tab = table_for(untwisted(3, 1, 1, 4));
    const LinearFormTable back = table_from_json(json_of(tab));
    CHECK(tables_equal(tab, back));

    CHECK_THROWS_AS(table_from_json("{"), CacheError);
    CHECK_THROWS_AS(table_from_json("{}"), CacheError);
    CHECK_THROWS_AS(table_from_json("[1,2]"), CacheError);
    // Row count disagrees with K.
    CHECK_THROWS_AS(table_from_json(
                        R"({"a":3,"N":1,"K":2,"d0":7,"i0":2,"delta":"1",)"
                        R"("s":[["1","2","3","4"]]})"),
                    CacheError);
    // Column count disagrees with a+N.
    CHECK_THROWS_AS(table_from_json(
                        R"({"a":3,"N":1,"K":1,"d0":7,"i0":2,"delta":"1",)"
                        R"("s":[["1","2","3"]]})"),
                    CacheError);
}

TEST_CASE("flat CSV rendering of one small table") {
    const LinearFormTable tab = table_for(untwisted(3, 1, 1, 1));
    CHECK(csv_of_table(tab) ==
          "k,i,s\n"
          "1,1,0\n1,2,14\n1,3,0\n1,4,0\n"
          "2,1,0\n2,2,7\n2,3,2\n2,4,5\n"
          "3,1,0\n3,2,-4\n3,3,0\n3,4,0\n");
}

TEST_CASE("machine-readable error envelope") {
    CHECK(error_json("invalid_params", "boom") ==
          R"({"error":{"code":"invalid_params","message":"boom"}})");
}

TEST_CASE("cache keys encode every parameter and hash the twist") {
    const std::string key = cache_key(untwisted(3, 1, 1, 4));
    const std::string prefix = "a3_r1_N1_n4_p1_zone_f";
    REQUIRE(key.size() == prefix.size() + 16);
    CHECK(key.substr(0, prefix.size()) == prefix);
    for (char ch : key.substr(prefix.size()))
        CHECK(((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f')));

    CHECK(cache_key(pztest::catalan_params(4)).find("_zhalf_") != std::string::npos);

    ProblemParams twisted = untwisted(5, 1, 2, 4);
    ProblemParams twisted2 = twisted;
    twisted2.f[1] = -CycScalar::one();
    const std::string k1 = cache_key(twisted);
    const std::string k2 = cache_key(twisted2);
    CHECK(k1 != k2);
    CHECK(k1.substr(0, k1.size() - 16) == k2.substr(0, k2.size() - 16));
}

TEST_CASE("cache directory resolution precedence") {
    unsetenv("PADEZETA_CACHE");
    CHECK(resolve_cache_dir("") == "");
    CHECK(resolve_cache_dir("/explicit/dir") == "/explicit/dir");
    setenv("PADEZETA_CACHE", "/from/env", 1);
    CHECK(resolve_cache_dir("") == "/from/env");
    CHECK(resolve_cache_dir("/explicit/dir") == "/explicit/dir");
    unsetenv("PADEZETA_CACHE");
}

TEST_CASE("cache store and load") {
    const TempDir tmp;
    const std::string dir = tmp.path.string();
    const ProblemParams pp = untwisted(3, 1, 1, 4);
    const LinearFormTable tab = table_for(pp);

    CHECK_THROWS_AS(cache_store_table("", pp, tab), CacheError);
    CHECK(!cache_load_table("", pp).has_value());
    CHECK(!cache_load_table(dir, pp).has_value());  // directory not created yet

    cache_store_table(dir, pp, tab);
    const auto loaded = cache_load_table(dir, pp);
    REQUIRE(loaded.has_value());
    CHECK(tables_equal(*loaded, tab));

    // A different instance misses cleanly.
    CHECK(!cache_load_table(dir, untwisted(3, 1, 1, 2)).has_value());

    // Writes never leave temporary files behind.
    for (const auto& ent : fs::directory_iterator(tmp.path))
        CHECK(ent.path().string().find(".tmp") == std::string::npos);

    // Garbage under a valid key is an error, not a silent miss.
    const ProblemParams pp2 = untwisted(3, 1, 1, 2);
    {
        std::ofstream out(tmp.path / (cache_key(pp2) + ".json"));
        out << "definitely not json";
    }
    CHECK_THROWS_AS(cache_load_table(dir, pp2), CacheError);

    // A well-formed table that doesn't match the requested instance is
    // rejected rather than returned.
    const ProblemParams pp6 = untwisted(3, 1, 1, 6);
    {
        std::ofstream out(tmp.path / (cache_key(pp6) + ".json"));
        out << canonical_document(json_of(tab));
    }
    CHECK_THROWS_AS(cache_load_table(dir, pp6), CacheError);
}
