#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "jdlat/io.hpp"

using namespace jdlat;
namespace io = jdlat::io;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
    int count = 0;
    for (size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

} // namespace

TEST_CASE("lattice JSON round trip with chains") {
    auto B = corpus::boolean(3);
    std::vector<Chain> chains = {corpus::b3_c1(), corpus::b3_c2(), corpus::b3_c3()};
    auto j = io::lattice_to_json(B, chains);
    auto L = io::lattice_from_json(j);
    CHECK(L.size() == 8);
    CHECK(L.cover_pairs() == B.cover_pairs());
    auto back = io::chains_from_json(j);
    REQUIRE(back.size() == 3);
    CHECK(back[0] == chains[0]);
    CHECK(back[2] == chains[2]);
    CHECK(io::chains_from_json(io::lattice_to_json(B)).empty());
}

TEST_CASE("perm vector JSON round trip") {
    PermVector v(3, 3, {Permutation({2, 1, 3}), Permutation({3, 2, 1})});
    auto j = io::perm_vector_to_json(v);
    CHECK(j["perms"][0] == io::json::array({2, 1, 3}));
    CHECK(io::perm_vector_from_json(j) == v);
}

TEST_CASE("set system JSON round trip") {
    SetSystem s({"a", "b"}, {{}, {"a"}, {"a", "b"}});
    auto j = io::set_system_to_json(s);
    auto back = io::set_system_from_json(j);
    CHECK(back.ground == s.ground);
    CHECK(back.family == s.family);
}

TEST_CASE("jd report serialization") {
    auto r = is_join_distributive(corpus::boolean(3));
    auto j = io::jd_report_to_json(r);
    CHECK(j["join_distributive"] == true);
    CHECK(j["verdicts"].size() == 7);
    CHECK(j["verdicts"]["a"] == true);
    CHECK_FALSE(j.contains("witness"));

    auto neg = io::jd_report_to_json(is_join_distributive(corpus::m3()));
    CHECK(neg["join_distributive"] == false);
    CHECK(neg.contains("witness"));
}

TEST_CASE("detect_kind") {
    CHECK(io::detect_kind({{"n", 3}, {"k", 2}, {"perms", io::json::array()}}) ==
          io::FileKind::PermVector);
    CHECK(io::detect_kind({{"size", 1}, {"covers", io::json::array()}}) ==
          io::FileKind::Lattice);
    CHECK(io::detect_kind({{"ground", io::json::array()}, {"family", io::json::array()}}) ==
          io::FileKind::SetSystem);
    CHECK_THROWS_AS(io::detect_kind(io::json::array()), io::ParseError);
    CHECK_THROWS_AS(io::detect_kind(io::json::object()), io::ParseError);
}

TEST_CASE("parse errors") {
    std::istringstream bad("{not json");
    CHECK_THROWS_AS(io::parse(bad), io::ParseError);
    CHECK_THROWS_AS(io::parse_file("/nonexistent/path.json"), io::ParseError);
    CHECK_THROWS_AS(io::lattice_from_json(io::json{{"size", 2}}), io::ParseError);
    CHECK_THROWS_AS(io::perm_vector_from_json(io::json{{"n", 3}}), io::ParseError);
    CHECK_THROWS_AS(io::lattice_from_json(
                        io::json{{"size", 2}, {"covers", io::json::array({io::json::array({0})})}}),
                    io::ParseError);
}

TEST_CASE("dump is canonical and deterministic") {
    io::json a = {{"b", 1}, {"a", 2}};
    io::json b = {{"a", 2}, {"b", 1}};
    CHECK(io::dump(a) == io::dump(b));
    CHECK(io::dump(a).back() == '\n');
    auto j = io::lattice_to_json(corpus::boolean(3));
    CHECK(io::dump(j) == io::dump(io::lattice_to_json(corpus::boolean(3))));
}

TEST_CASE("dot export node and edge counts") {
    auto two_chain = io::export_dot(corpus::chain(1));
    CHECK(count_occurrences(two_chain, "label=") == 2);
    CHECK(count_occurrences(two_chain, "->") == 1);

    auto b3 = io::export_dot(corpus::boolean(3));
    CHECK(count_occurrences(b3, "label=") == 8);
    CHECK(count_occurrences(b3, "->") == 12);

    auto res = eta(corpus::transposition_n3());
    auto five = io::export_dot(res.cl.lattice, res.cl.chains);
    CHECK(count_occurrences(five, "label=") == 5);
    CHECK(count_occurrences(five, "->") == 5);
    CHECK(five.find("(0,1)") != std::string::npos);
    CHECK(io::export_dot(res.cl.lattice, res.cl.chains) == five); // deterministic
}
