#pragma once

// Command implementations behind the avlrank CLI. Each returns the process
// exit code: 0 success, 1 property or validation failure, 2 usage error.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "avlrank/expensive.hpp"

namespace avlrank::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct GenOptions {
  int rank = 0;
  EType etype = EType::L;
  BPolicy policy = BPolicy::MinimalAVL;
  std::string out_path;  // empty: stdout
};

struct PairsOptions {
  std::string in_path;
  std::size_t count = 1;
  std::string csv_path;  // empty: stdout
  bool verify = false;
};

struct BenchOptions {
  int max_rank = 16;
  std::string csv_path;  // empty: stdout
};

enum class DumpFormat { Text, Dot };

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_pairs(const PairsOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);
int cmd_build_seq(const std::string& in_path, std::ostream& out, std::ostream& err);
int cmd_validate(const std::string& in_path, std::ostream& out, std::ostream& err);
int cmd_dump(const std::string& in_path, DumpFormat format, std::ostream& out,
             std::ostream& err);

/// One shallow-leaf pair per row, 1-based index.
std::string pairs_csv(const std::vector<PairReport>& reports);

/// One row of the build-then-pairs experiment at a single rank.
struct BenchRow {
  int rank = 0;
  std::uint64_t nodes = 0;
  std::uint64_t build_insertions = 0;
  std::uint64_t build_rotations = 0;
  std::uint64_t total_pair_rotations = 0;
  std::uint64_t total_pair_promotions = 0;
  std::uint64_t rotations_per_delete = 0;
  double wall_time = 0.0;  // seconds

  /// total_pair_rotations / (n log2 n); 0 for n = 1.
  double rotation_ratio() const;
};

class BenchFailure : public Error {
 public:
  using Error::Error;
};

/// Builds the rank-k member (minimal B, type L) from its promotion-only
/// plan, then runs n delete/reinsert pairs on it. Throws BenchFailure when
/// the build rotates, the tree differs from the target, or the pair
/// rotations differ from n * k / 2.
BenchRow bench_rank(int rank);

/// Rows for every even rank 0..max_rank. Throws OddRank or BenchFailure.
std::vector<BenchRow> run_bench(int max_rank);

/// Header plus one row per entry; wall_time is the trailing column.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace avlrank::harness
