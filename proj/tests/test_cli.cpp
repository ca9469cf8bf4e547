// Exercises the installed command-line surface end to end.

#define DOCTEST_CONFIG_IMPLEMENT
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

std::string g_cli;

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("delta by cycle structure") {
  auto r = run("delta --n 8 --cycle-structure "
               "\"(0,0,0,0,0,0,0,1)|(0,0,0,0,0,0,0,1)|(8,0,0,0,0,0,0,0)\"");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["delta"] == "40320");
  CHECK(j["method"] == "reduced_backtracking");
  CHECK(j["n"] == 8);
}

TEST_CASE("delta by explicit permutations") {
  auto r = run("delta --n 2 --alpha \"(1 2)\" --beta \"(1 2)\" --gamma \"1 2\"");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["delta"] == "2");
}

TEST_CASE("delta output is byte-stable across jobs") {
  std::string flags = "delta --n 5 --alpha \"(1 2 3 4 5)\" --beta \"(1 2 3 4 5)\" --gamma \"(1 2 3 4 5)\"";
  auto r1 = run(flags + " --jobs 1");
  auto r2 = run(flags + " --jobs 4");
  REQUIRE(r1.status == 0);
  REQUIRE(r2.status == 0);
  json a = json::parse(r1.out), b = json::parse(r2.out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  a.erase("nodes");
  b.erase("nodes");
  CHECK(a == b);
}

TEST_CASE("groebner method") {
  std::string flags = "delta --n 4 --alpha \"(1 2 3 4)\" --beta \"(1 2 3 4)\"";
  auto r = run(flags + " --method groebner");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["delta"] == "24");
  CHECK(j["method"] == "groebner");
  CHECK(json::parse(run(flags).out)["delta"] == "24");
}

TEST_CASE("brute method and its guard") {
  auto r = run("delta --n 3 --method brute");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["delta"] == "12");
  CHECK(run("delta --n 6 --method brute").status == 3);
}

TEST_CASE("parse errors exit 2") {
  CHECK(run("delta --n 3 --alpha \"(1 9)\"").status == 2);
  CHECK(run("delta --n 3 --alpha \"bogus(\"").status == 2);
  CHECK(run("delta").status == 2);  // --n missing
}

TEST_CASE("timeout exits 4") {
  auto r = run("delta --n 8 --cycle-structure "
               "\"(0,4,0,0,0,0,0,0)|(0,4,0,0,0,0,0,0)|(8,0,0,0,0,0,0,0)\" --limit-seconds 0.2");
  CHECK(r.status == 4);
}

TEST_CASE("prefix file and coefficient") {
  std::string path = "cli_prefix_tmp.txt";
  {
    std::ofstream f(path);
    f << "2\n1 0\n0 0\n";
  }
  auto r = run("delta --n 2 --alpha \"(1 2)\" --beta \"(1 2)\" --prefix " + path + " --coeff 2");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["delta"] == "2");

  std::string jpath = "cli_prefix_tmp.json";
  {
    std::ofstream f(jpath);
    f << R"({"n": 2, "cells": [[1, null], [null, null]]})";
  }
  auto r2 = run("delta --n 2 --alpha \"(1 2)\" --beta \"(1 2)\" --prefix " + jpath);
  REQUIRE(r2.status == 0);
  CHECK(json::parse(r2.out)["delta"] == "1");
  std::remove(path.c_str());
  std::remove(jpath.c_str());
}

TEST_CASE("enumerate") {
  auto r = run("enumerate --n 2 --alpha \"(1 2)\" --beta \"(1 2)\"");
  REQUIRE(r.status == 0);
  CHECK(r.out == "2\n1 2\n2 1\n\n2\n2 1\n1 2\n");

  CHECK(run("enumerate --n 2 --limit 0").out.empty());
  CHECK(run("enumerate --n 3 --gamma \"(1 2 3)\"").out.empty());

  auto r1 = run("enumerate --n 4 --limit 1");
  CHECK(r1.status == 0);
  CHECK(r1.out.substr(0, 2) == "4\n");
}

TEST_CASE("verify-table skips over budget and never mismatches") {
  auto r = run("verify-table --only n=8 --max-seconds-per-entry 0.5");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find("MATCH") != std::string::npos);
  CHECK(r.out.find("SKIPPED") != std::string::npos);
}

TEST_CASE("dump-ideal") {
  auto r = run("dump-ideal --n 2 --alpha \"(1 2)\" --beta \"(1 2)\"");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("x_1_1_1") != std::string::npos);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  if (argc > 1 && argv[1][0] != '-') {
    g_cli = argv[1];
    ctx.applyCommandLine(argc - 1, argv + 1);
  } else {
    g_cli = "./tools/autocount";
    ctx.applyCommandLine(argc, argv);
  }
  return ctx.run();
}
