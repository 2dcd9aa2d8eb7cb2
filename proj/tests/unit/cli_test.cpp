#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dualgamal/cli.hpp"
#include "dualgamal/serialize.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dualgamal_cli_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dualgamal::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

TEST_F(Cli, KeygenExamples) {
  auto r = run({"keygen", "--scheme", "elgamal", "--n", "17", "--g", "3", "--seed",
                "1", "--out-prefix", path("k")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("k.pub.json")));
  EXPECT_TRUE(fs::exists(path("k.sec.json")));

  r = run({"keygen", "--scheme", "ceg", "--n", "23", "--g", "5", "--d", "3,5",
           "--seed", "7", "--out-prefix", path("c")});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string pub = dualgamal::read_file(path("c.pub.json"));
  EXPECT_NE(pub.find("\"d\": [\n    \"3\",\n    \"5\"\n  ]"), std::string::npos);
  EXPECT_EQ(pub.find("\"k\""), std::string::npos);

  r = run({"keygen", "--scheme", "ceg", "--d", "2,4", "--out-prefix", path("bad")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotCoprime"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST_F(Cli, EncryptDecryptEval) {
  ASSERT_EQ(run({"keygen", "--scheme", "elgamal", "--seed", "4", "--out-prefix",
                 path("k")}).code, 0);
  ASSERT_EQ(run({"encrypt", "--pub", path("k.pub.json"), "--message", "10",
                 "--seed", "2", "--out", path("c10.json")}).code, 0);
  auto r = run({"decrypt", "--sec", path("k.sec.json"), "--in", path("c10.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10\n");

  run({"encrypt", "--pub", path("k.pub.json"), "--message", "3", "--out", path("c3.json")});
  run({"encrypt", "--pub", path("k.pub.json"), "--message", "5", "--seed", "9",
       "--out", path("c5.json")});
  r = run({"eval", "--op", "mul", "--pub", path("k.pub.json"), "--in", path("c3.json"),
           path("c5.json"), "--out", path("p.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"decrypt", "--sec", path("k.sec.json"), "--in", path("p.json")}).out,
            "15\n");

  // An additive fold over a multiplicative key is a scheme mismatch.
  r = run({"eval", "--op", "add", "--pub", path("k.pub.json"), "--in", path("c3.json"),
           path("c5.json"), "--out", path("q.json")});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, AdditivePipeline) {
  ASSERT_EQ(run({"keygen", "--scheme", "ceg", "--d", "3,5", "--seed", "4",
                 "--out-prefix", path("k")}).code, 0);
  run({"encrypt", "--pub", path("k.pub.json"), "--message", "2", "--seed", "1",
       "--out", path("c2.json")});
  run({"encrypt", "--pub", path("k.pub.json"), "--message", "4", "--seed", "2",
       "--out", path("c4.json")});
  auto r = run({"eval", "--op", "add", "--pub", path("k.pub.json"), "--in",
                path("c2.json"), path("c4.json"), "--out", path("s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"decrypt", "--sec", path("k.sec.json"), "--in", path("s.json")}).out,
            "6\n");

  // Mixing an additive ciphertext into a multiplicative key.
  run({"keygen", "--scheme", "elgamal", "--out-prefix", path("m")});
  r = run({"decrypt", "--sec", path("m.sec.json"), "--in", path("s.json")});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, DlogNotFoundExitsThree) {
  ASSERT_EQ(run({"keygen", "--scheme", "ceg", "--d", "3,5", "--seed", "4",
                 "--out-prefix", path("k")}).code, 0);
  // Declared depth 5 needs a scan past ord(g) = 22.
  std::ofstream(path("deep.json"))
      << R"({"scheme":"ceg","pairs":[{"c1":"1","c2":"1"},{"c1":"1","c2":"1"}],"add_count":5})";
  auto r = run({"decrypt", "--sec", path("k.sec.json"), "--in", path("deep.json")});
  EXPECT_EQ(r.code, 3) << r.err;
}

TEST_F(Cli, MalformedFileExitsTwo) {
  ASSERT_EQ(run({"keygen", "--scheme", "elgamal", "--out-prefix", path("k")}).code, 0);
  std::ofstream(path("junk.json")) << "{";
  EXPECT_EQ(run({"decrypt", "--sec", path("k.sec.json"), "--in", path("junk.json")}).code, 2);
  EXPECT_EQ(run({"decrypt", "--sec", path("missing.json"), "--in", path("junk.json")}).code, 2);
  // A public key cannot decrypt.
  run({"encrypt", "--pub", path("k.pub.json"), "--message", "3", "--out", path("c.json")});
  EXPECT_EQ(run({"decrypt", "--sec", path("k.pub.json"), "--in", path("c.json")}).code, 2);
}

TEST_F(Cli, Bench) {
  auto r = run({"bench", "--layout", "both", "--bits", "8", "--t", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("reduction(%)"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  bool saw_multipliers = false, saw_encrypt = false;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string name;
    double regular = 0, dual = 0, reduction = 0;
    fields >> name >> regular >> dual >> reduction;
    if (name == "multipliers") {
      saw_multipliers = true;
      EXPECT_DOUBLE_EQ(reduction, 50.0);
    }
    if (name == "encrypt_total") {
      saw_encrypt = true;
      EXPECT_GE(dual, regular);
    }
    if (name == "decrypt_total") EXPECT_EQ(dual, regular);
  }
  EXPECT_TRUE(saw_multipliers && saw_encrypt);

  EXPECT_EQ(run({"bench", "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"bench", "--layout", "neither"}).code, 2);
  const auto single = run({"bench", "--layout", "dual"});
  EXPECT_EQ(single.code, 0);
  EXPECT_EQ(single.out.find("reduction"), std::string::npos);
}

TEST_F(Cli, Demo) {
  const std::string log = path("t.log");
  auto r = run({"demo", "--mode", "mul", "--inputs", "3,5", "--adversary", "honest",
                "--transcript", log});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result: 15"), std::string::npos);
  EXPECT_NE(r.out.find("transcript: " + log), std::string::npos);
  EXPECT_TRUE(fs::exists(log));

  r = run({"demo", "--mode", "add", "--inputs", "2,4", "--adversary", "honest",
           "--transcript", log});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result: 6"), std::string::npos);

  r = run({"demo", "--adversary", "tamperer", "--transcript", log});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("VERIFICATION MISMATCH"), std::string::npos);

  EXPECT_EQ(run({"demo", "--adversary", "spy"}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"keygen"}).code, 2);
  EXPECT_EQ(run({"encrypt", "--pub", path("none.json"), "--message", "x"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
