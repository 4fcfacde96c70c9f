#include "avlrank/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "avlrank/builder.hpp"

namespace avlrank::harness {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

}  // namespace

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.rank < 0 || opt.rank % 2 != 0) {
    err << "rank must be even\n";
    return kExitUsage;
  }
  try {
    Tree t = gen_expensive(opt.rank, opt.etype, opt.policy);
    ValidationReport report = validate(t);
    if (!report.ok()) {
      err << "generated tree is invalid: " << report.to_string() << "\n";
      return kExitFailure;
    }
    if (opt.out_path.empty()) {
      out << serialize(t) << "\n";
    } else {
      emit(opt.out_path, serialize(t), out);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

std::string pairs_csv(const std::vector<PairReport>& reports) {
  std::ostringstream os;
  os << "pair_index,del_singles,del_doubles,del_demotions,ins_promotions,rank_after_delete,"
        "etype_after,is_member\n";
  std::size_t i = 0;
  for (const auto& r : reports) {
    os << ++i << ',' << r.delete_counters.single_rotations << ','
       << r.delete_counters.double_rotations << ',' << r.delete_counters.demotions << ','
       << r.insert_counters.promotions << ',' << r.rank_after_delete << ','
       << (r.etype_after ? to_string(*r.etype_after) : "-") << ','
       << (r.still_member ? "true" : "false") << '\n';
  }
  return os.str();
}

int cmd_pairs(const PairsOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    Tree t = deserialize(read_file(opt.in_path));
    if (!classify_expensive(t).member) {
      err << "not in E\n";
      return kExitFailure;
    }
    std::vector<PairReport> reports = run_pairs(t, opt.count);
    emit(opt.csv_path, pairs_csv(reports), out);
    if (opt.verify) {
      int bad = 0;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        for (const auto& d : reports[i].deviations()) {
          err << "pair " << i + 1 << ": " << d << "\n";
          ++bad;
        }
      }
      if (bad > 0) return kExitFailure;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

double BenchRow::rotation_ratio() const {
  if (nodes < 2) return 0.0;
  const double n = static_cast<double>(nodes);
  return static_cast<double>(total_pair_rotations) / (n * std::log2(n));
}

BenchRow bench_rank(int rank) {
  const auto t0 = std::chrono::steady_clock::now();
  BenchRow row;
  row.rank = rank;

  const Tree target = gen_expensive(rank, EType::L, BPolicy::MinimalAVL);
  const InsertionPlan plan = insertion_sequence(target);
  BuildResult built = build_from_plan(plan);
  row.nodes = target.size();
  row.build_insertions = plan.sequence.size();
  row.build_rotations = built.total.rotations_total();
  if (row.build_rotations != 0 || built.total.demotions != 0) {
    throw BenchFailure("rank " + std::to_string(rank) + ": build did " +
                       std::to_string(row.build_rotations) + " rotations");
  }
  if (!structural_equal(built.tree, target)) {
    throw BenchFailure("rank " + std::to_string(rank) + ": build missed the target tree");
  }

  Tree& t = built.tree;
  for (std::uint64_t i = 0; i < row.nodes; ++i) {
    PairReport r = delete_reinsert_pair(t);
    if (!r.as_expected()) {
      throw BenchFailure("rank " + std::to_string(rank) + " pair " + std::to_string(i + 1) +
                         ": " + r.deviations().front());
    }
    row.total_pair_rotations +=
        r.delete_counters.rotations_total() + r.insert_counters.rotations_total();
    row.total_pair_promotions += r.insert_counters.promotions;
  }
  row.rotations_per_delete = static_cast<std::uint64_t>(rank / 2);
  if (row.total_pair_rotations != row.nodes * row.rotations_per_delete) {
    throw BenchFailure("rank " + std::to_string(rank) + ": " +
                       std::to_string(row.total_pair_rotations) + " pair rotations, expected " +
                       std::to_string(row.nodes * row.rotations_per_delete));
  }
  row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<BenchRow> run_bench(int max_rank) {
  if (max_rank < 0 || max_rank % 2 != 0) {
    throw OddRank("max rank must be even, got " + std::to_string(max_rank));
  }
  std::vector<BenchRow> rows;
  for (int k = 0; k <= max_rank; k += 2) rows.push_back(bench_rank(k));
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "rank,nodes,build_insertions,build_rotations,total_pair_rotations,"
        "total_pair_promotions,rotations_per_delete,wall_time\n";
  for (const auto& r : rows) {
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.6f", r.wall_time);
    os << r.rank << ',' << r.nodes << ',' << r.build_insertions << ',' << r.build_rotations
       << ',' << r.total_pair_rotations << ',' << r.total_pair_promotions << ','
       << r.rotations_per_delete << ',' << wall << '\n';
  }
  return os.str();
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.max_rank < 0 || opt.max_rank % 2 != 0) {
    err << "max rank must be even\n";
    return kExitUsage;
  }
  try {
    emit(opt.csv_path, bench_csv(run_bench(opt.max_rank)), out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_build_seq(const std::string& in_path, std::ostream& out, std::ostream& err) {
  try {
    const Tree target = deserialize(read_file(in_path));
    const InsertionPlan plan = insertion_sequence(target);
    for (std::size_t i = 0; i < plan.level_count(); ++i) {
      bool first = true;
      for (Key k : plan.level(i)) {
        out << (first ? "" : " ") << k;
        first = false;
      }
      out << "\n";
    }
    const PromotionBuildReport report = verify_promotion_only(target);
    if (!report.ok()) {
      err << "replay failed: " << report.total.rotations_total() << " rotations, "
          << report.total.demotions << " demotions"
          << (report.structurally_equal ? "" : ", final tree differs") << "\n";
      return kExitFailure;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_validate(const std::string& in_path, std::ostream& out, std::ostream& err) {
  try {
    const ValidationReport report = validate(parse_tree(read_file(in_path)));
    if (report.ok()) {
      out << "valid\n";
      return kExitOk;
    }
    for (const auto& v : report.violations) {
      out << to_string(v.kind) << " at key " << v.key << ": " << v.detail << "\n";
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
  }
  return kExitFailure;
}

int cmd_dump(const std::string& in_path, DumpFormat format, std::ostream& out,
             std::ostream& err) {
  try {
    const Tree t = parse_tree(read_file(in_path));
    if (format == DumpFormat::Dot) {
      out << to_dot(t);
    } else {
      out << serialize(t) << "\n";
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace avlrank::harness
