#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "vic/manifest.hpp"

TEST_CASE("sha256 matches the published test vectors") {
    CHECK(vic::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(vic::sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(vic::sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // Spans several blocks and exercises the padding boundary.
    CHECK(vic::sha256_hex(std::string(1000000, 'a')) ==
          "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
    std::string exactly_64(64, 'x');
    vic::Sha256 split;
    split.update(exactly_64.data(), 10);
    split.update(exactly_64.data() + 10, 54);
    CHECK(split.hex() == vic::sha256_hex(exactly_64));
}

TEST_CASE("run manifests serialize their fields") {
    vic::RunManifest m;
    m.command = "exact";
    m.add_input("graph", "3 3\n0 1\n1 2\n0 2\n");
    m.seed = 7;
    m.summary = "chi_vi = 5";
    m.wall_seconds = 0.25;
    auto j = m.to_json();
    CHECK(j.at("command") == "exact");
    CHECK(j.at("inputs").size() == 1);
    CHECK(j.at("inputs").at("graph").get<std::string>().size() == 64);
    CHECK(j.at("seed") == 7);
    CHECK(j.at("version") == std::string(vic::kVicVersion));
    CHECK(j.at("summary") == "chi_vi = 5");
    CHECK(j.contains("toolchain"));
    CHECK(j.contains("wall_seconds"));

    vic::RunManifest plain;
    plain.command = "verify";
    CHECK_FALSE(plain.to_json().contains("seed"));
}
