#include <hkl/hkl.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#ifndef HKL_DATA_DIR
#define HKL_DATA_DIR "./data"
#endif

int main(int argc, char** argv) {
  const char* data_dir = argc > 1 ? argv[1] : HKL_DATA_DIR;
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;

  hkl_context* ctx = nullptr;
  if (hkl_context_new(data_dir, seed, &ctx) != HKL_OK) {
    std::printf("FAIL context: %s\n", hkl_last_error());
    return 1;
  }
  char* out = nullptr;
  int failures = 0;
  hkl_status s = hkl_verify(ctx, HKL_FORMAT_TSV, &out, &failures);
  hkl_context_free(ctx);
  if (s != HKL_OK) {
    std::printf("FAIL verify: %s\n", hkl_last_error());
    return 1;
  }

  std::istringstream in(out);
  hkl_string_free(out);
  std::string line;
  std::getline(in, line);  // header
  int lines = 0, failed = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 + 1);
    std::string name = line.substr(0, t1);
    std::string verdict = line.substr(t1 + 1, t2 - t1 - 1);
    std::string detail = t2 == std::string::npos ? "" : line.substr(t2 + 1);
    std::printf("%s %s%s%s\n", verdict.c_str(), name.c_str(), detail.empty() ? "" : " | ", detail.c_str());
    ++lines;
    if (verdict != "PASS") ++failed;
  }
  if (lines != 12) {
    std::printf("FAIL expected 12 criteria, got %d\n", lines);
    return 1;
  }
  std::printf("%d/12 passed\n", 12 - failed);
  return failed == 0 && failures == 0 ? 0 : 1;
}
