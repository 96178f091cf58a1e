#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "tpp/config.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"tpp-cli"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = tpp::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "tpp_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("simulate") {
    const auto cfg = write("short.cfg", "t_end = 1\ndx = 0.5\ndt = 0.01\ntau1 = 0.05\ntau2 = 0.05\n");
    const auto prof = scratch() / "profile.csv";
    const auto series = scratch() / "series.csv";
    const Outcome o = invoke({"simulate", "--config", cfg.string(), "--profile-out", prof.string(), "--series-out",
                              series.string()});
    CHECK(o.code == tpp::cli::kExitOk);
    CHECK(o.out.find("ni=101\n") != std::string::npos);
    CHECK(o.out.find("verdict=Stable\n") != std::string::npos);
    CHECK(tpp::read_text_file(prof).rfind("x,s1,s2\n", 0) == 0);
    CHECK(tpp::read_text_file(series).rfind("t,s1_probe,s2_probe,P1,P2\n", 0) == 0);
}

TEST_CASE("exit codes") {
    const auto good = write("good.cfg", "t_end = 1\ndx = 0.5\ndt = 0.01\n");
    CHECK(invoke({"simulate", "--config", "/nonexistent/run.cfg"}).code == tpp::cli::kExitIo);
    CHECK(invoke({"simulate", "--config", write("bad.cfg", "dx = -1\n").string()}).code == tpp::cli::kExitValidation);
    CHECK(invoke({"simulate", "--config", write("unk.cfg", "zz = 1\n").string()}).code == tpp::cli::kExitValidation);
    CHECK(invoke({"simulate"}).code == tpp::cli::kExitValidation);
    CHECK(invoke({"frobnicate"}).code == tpp::cli::kExitValidation);
    CHECK(invoke({"simulate", "--config", good.string(), "--profile-out", "/nonexistent/dir/p.csv"}).code ==
          tpp::cli::kExitIo);
    CHECK(invoke({"bounds", "--case", "sideways", "--dx", "0.1"}).code == tpp::cli::kExitValidation);
}

TEST_CASE("bounds") {
    const Outcome d = invoke({"bounds", "--case", "diffusive", "--dx", "0.1"});
    CHECK(d.code == 0);
    CHECK(d.out.find("case,species,dt_max_or_unbounded,sigma,dt_over_tau\n") == 0);
    CHECK(d.out.find("diffusive,prey,0.00501253133") != std::string::npos);

    const Outcome t = invoke({"bounds", "--case", "telegraph", "--dx", "0.1", "--d1", "1", "--d2", "1", "--tau1",
                              "0.05", "--tau2", "0.05", "--dt", "0.002"});
    CHECK(t.code == 0);
    CHECK(t.out.find("telegraph,prey,0.0025,0.2,0.04\n") != std::string::npos);
}

TEST_CASE("sweep and converge write their schemas") {
    const auto cfg = write("sweep.cfg", "t_end = 0.5\ndx = 0.5\ndt = 0.004\n");
    const auto out = scratch() / "sweep.csv";
    const Outcome s = invoke({"sweep", "--config", cfg.string(), "--d-min", "1", "--d-max", "60", "--d-steps", "2",
                              "--tau-min", "0.01", "--tau-max", "0.05", "--tau-steps", "2", "--out", out.string()});
    CHECK(s.code == 0);
    const std::string text = tpp::read_text_file(out);
    CHECK(text.rfind("D,tau,verdict,first_failure_time,min_density,max_abs_density\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);

    const auto levels = write("levels.csv", "dx,dt\n1.0,0.001\n0.5,0.001\n");
    const auto conv = scratch() / "conv.csv";
    const Outcome c = invoke({"converge", "--config", cfg.string(), "--levels", levels.string(), "--out", conv.string()});
    CHECK(c.code == 0);
    const std::string ctext = tpp::read_text_file(conv);
    CHECK(ctext.rfind("dx,dt,P1_final,P2_final,runtime_s\n1,0.001,", 0) == 0);
}

TEST_CASE("check-consistency") {
    const Outcome o = invoke({"check-consistency", "--levels", "4"});
    CHECK(o.code == 0);
    CHECK(o.out.rfind("dx,dt,residual\n", 0) == 0);
    CHECK(o.err.find("observed temporal order: ") != std::string::npos);
    CHECK(invoke({"check-consistency", "--levels", "2"}).code == tpp::cli::kExitValidation);
}
