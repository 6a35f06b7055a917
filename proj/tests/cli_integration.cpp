// Drives the installed CLI binary end to end: artifact round trips,
// determinism, verdict text and the exit-code contract.
// argv: <unconv-binary> <docs/examples dir> <scratch dir>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "unconv/io.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

struct Runner {
  std::string tool;
  fs::path work;
  int code = -1;

  std::string run(const std::string& args) {
    const fs::path capture = work / "capture.txt";
    const std::string cmd = tool + " " + args + " > " + capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: cli_integration <unconv> <docs-dir> <work-dir>\n";
    return 2;
  }
  Runner r{argv[1], fs::path(argv[3])};
  const std::string docs = argv[2];
  fs::create_directories(r.work);

  const std::string case4 = docs + "/case4.cfg";
  const fs::path s1 = r.work / "sample1.txt";
  const fs::path s2 = r.work / "sample2.txt";

  // Enumeration artifact: depth 1 of the self-reproducing table is {0, 1}.
  r.run("enumerate --config " + case4 + " --depth 1 --out " + s1.string());
  expect(r.code == 0, "enumerate exits 0");
  unconv::LimitSetSample sample = unconv::sample_from_text(slurp(s1));
  expect(sample.points.size() == 2, "depth-1 sample has two points");
  expect(sample.points[0].is_zero(), "sample contains 0");
  expect(sample.points[1] == unconv::PadicInt::one(3, 12), "sample contains 1");

  // Determinism: identical invocations produce byte-identical artifacts.
  r.run("enumerate --config " + case4 + " --depth 1 --out " + s2.string());
  expect(slurp(s1) == slurp(s2), "repeated enumeration is byte-identical");

  // Round trip: re-serializing the parsed artifact reproduces the file.
  expect(unconv::sample_to_text(sample) == slurp(s1), "sample file round-trips");

  std::string out = r.run("member --config " + case4 + " 0,1,2,0");
  expect(r.code == 0 && out.find("in Lambda (at precision 4)") != std::string::npos,
         "member verdict for 3/4");
  out = r.run("member --config " + case4 + " 2,0,0,0");
  expect(r.code == 0 && out.find("not in Lambda (at precision 4)") != std::string::npos,
         "member verdict for 2");

  out = r.run("fixedpoint --config " + case4 + " 1,2");
  expect(r.code == 0 && out.find("0,1,2,0,2,0,2,0,2,0,2,0") != std::string::npos &&
             out.find("agreement: mod 3^12") != std::string::npos,
         "fixedpoint agreement across routes");

  out = r.run("ftilde --config " + case4 + " --alpha 2 --n 1 --beta 1:1 --m 6");
  expect(r.code == 0 && out.find("guaranteed 3^7") != std::string::npos,
         "ftilde agreement at the guaranteed modulus");

  const fs::path monna = r.work / "monna.txt";
  r.run("export --config " + case4 + " --depth 1 --format monna --out " + monna.string());
  std::string monna_text = slurp(monna);
  expect(r.code == 0 && monna_text.find("format=monna") != std::string::npos &&
             monna_text.find("0.33333333") != std::string::npos,
         "monna export");

  const fs::path dm = r.work / "dist.txt";
  r.run("distmatrix --config " + case4 + " --depth 2 --out " + dm.string());
  expect(r.code == 0 && slurp(dm).find("count=4") != std::string::npos, "distance matrix");

  out = r.run("verify --config " + docs + "/case2.cfg --depth 4");
  expect(r.code == 0 && out.find("verification passed") != std::string::npos,
         "verify exits 0 on a sound configuration");

  // Exit-code contract.
  const fs::path broken = r.work / "broken.cfg";
  {
    std::ofstream bad(broken);
    bad << "p = 3\nprecision = 8\nmaps.N = 1\nmaps.1.a = 1\nmaps.1.b = 0\n"
           "family.M = 1\nfamily.L = 1\nfamily.entry.1.1 = perm:(1)\n";
  }
  out = r.run("verify --config " + broken.string());
  expect(r.code == 2 && out.find("contraction certificate") != std::string::npos,
         "isometry config exits 2");

  r.run("enumerate --config " + case4 + " --depth 6 --budget 10");
  expect(r.code == 3, "budget overflow exits 3");

  r.run("no-such-command");
  expect(r.code == 2, "unknown subcommand exits 2");

  r.run("enumerate");
  expect(r.code == 2, "missing --config exits 2");

  if (g_failures == 0) std::cout << "cli integration: all checks passed\n";
  return g_failures == 0 ? 0 : 1;
}
