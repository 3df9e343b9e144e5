#include "collagram/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "collagram/compressors.hpp"
#include "collagram/errors.hpp"
#include "collagram/grammar.hpp"
#include "collagram/ints.hpp"
#include "collagram/occurrence.hpp"
#include "collagram/oracle.hpp"
#include "collagram/paths.hpp"
#include "collagram/pipeline.hpp"
#include "collagram/report.hpp"

namespace collagram::cli {

namespace {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint64_t default_budget() {
  if (const char* env = std::getenv("COLLAGRAM_MAX_BYTES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && end != nullptr && *end == '\0') return v;
  }
  return oracle::kDefaultMaxBytes;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) throw FileError("cannot open " + path);
  outf << data;
  if (!outf) throw FileError("cannot write " + path);
}

uint32_t parse_var_id(const std::string& text, uint32_t n) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'X' || digits[0] == 'x'))
    digits.erase(0, 1);
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("--var expects a variable id like X9, got '" +
                          text + "'");
  unsigned long long v = 0;
  try {
    v = std::stoull(digits);
  } catch (const std::exception&) {
    throw ValidationError("--var value out of range: '" + text + "'");
  }
  if (v == 0 || v > n)
    throw ValidationError("variable X" + digits + " is not in the system");
  return static_cast<uint32_t>(v);
}

void print_report(std::ostream& o, const FrequencyReport& report) {
  for (const auto& [gram, count] : report)
    o << escape_bytes(gram) << '\t' << to_string(count) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact q-gram frequencies from collage-compressed text"};
  app.name("collagram");
  app.require_subcommand(1);

  uint64_t q = 0;
  std::string in_path, out_path, algo, var_text;
  uint64_t max_bytes = default_budget();
  bool show_occ = false;

  CLI::App* c_qgrams =
      app.add_subcommand("qgrams", "count q-gram frequencies");
  c_qgrams->add_option("-q", q, "q-gram length (>= 2)")->required();
  c_qgrams->add_option("-i", in_path, "input .cs file")->required();
  c_qgrams->add_option("-o", out_path, "output TSV file (default: stdout)");

  CLI::App* c_expand =
      app.add_subcommand("expand", "decompress a .cs file to stdout");
  c_expand->add_option("-i", in_path, "input .cs file")->required();
  c_expand->add_option("--max-bytes", max_bytes, "expansion budget in bytes");

  CLI::App* c_stats =
      app.add_subcommand("stats", "summarize a collage system");
  c_stats->add_option("-i", in_path, "input .cs file")->required();
  c_stats->add_flag("--occ", show_occ, "include the occurrence-class table");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "compare the pipeline against brute-force counting");
  c_verify->add_option("-q", q, "q-gram length (>= 2)")->required();
  c_verify->add_option("-i", in_path, "input .cs file")->required();
  c_verify->add_option("--max-bytes", max_bytes, "expansion budget in bytes");

  CLI::App* c_compress =
      app.add_subcommand("compress", "encode text or lift repeats");
  c_compress->add_option("--algo", algo, "lz78 (text -> .cs) or rle (.cs -> .cs)")
      ->required()
      ->check(CLI::IsMember({"lz78", "rle"}));
  c_compress->add_option("-i", in_path, "input file")->required();
  c_compress->add_option("-o", out_path, "output .cs file")->required();

  CLI::App* c_paths =
      app.add_subcommand("paths", "print a truncation rule's path steps");
  c_paths->add_option("-i", in_path, "input .cs file")->required();
  c_paths->add_option("--var", var_text, "truncation variable, e.g. X9")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_qgrams->parsed()) {
      const CollageSystem cs = parse_cs(read_file(in_path));
      const FrequencyReport report = qgram_frequencies(cs, q);
      if (out_path.empty()) {
        print_report(out, report);
      } else {
        std::ostringstream ss;
        print_report(ss, report);
        write_file(out_path, ss.str());
      }
    } else if (c_expand->parsed()) {
      const CollageSystem cs = parse_cs(read_file(in_path));
      out << oracle::expand(cs, max_bytes);
    } else if (c_stats->parsed()) {
      const CollageSystem cs = parse_cs(read_file(in_path));
      out << "n\t" << cs.size() << '\n'
          << "height\t" << cs.height(cs.root()) << '\n'
          << "length\t" << cs.text_length() << '\n'
          << "class\t" << to_string(classify(cs)) << '\n';
      if (show_occ) {
        AnchorSets anchors = compute_anchors(cs);
        const std::vector<OccCounts> occ =
            compute_occurrence_classes(cs, anchors);
        out << "var\tav\tcomplete\tpre\tsuf\tboth\tdead\n";
        for (uint32_t i = 1; i <= cs.size(); ++i)
          out << 'X' << i << '\t' << to_string(occ[i].av) << '\t'
              << to_string(occ[i].complete) << '\t' << to_string(occ[i].pre)
              << '\t' << to_string(occ[i].suf) << '\t'
              << to_string(occ[i].both) << '\t' << to_string(occ[i].dead)
              << '\n';
      }
    } else if (c_verify->parsed()) {
      const CollageSystem cs = parse_cs(read_file(in_path));
      const FrequencyReport got = qgram_frequencies(cs, q);
      const FrequencyReport want =
          oracle::count_qgrams(oracle::expand(cs, max_bytes), q);
      if (got == want) {
        out << "ok: " << want.size() << " distinct q-grams match\n";
      } else {
        err << "mismatch: pipeline reports " << got.size()
            << " distinct q-grams, brute force reports " << want.size()
            << '\n';
        for (const auto& [gram, count] : want) {
          auto it = got.find(gram);
          if (it == got.end())
            err << "missing\t" << escape_bytes(gram) << '\t'
                << to_string(count) << '\n';
          else if (it->second != count)
            err << "wrong\t" << escape_bytes(gram) << '\t'
                << to_string(it->second) << " != " << to_string(count)
                << '\n';
        }
        for (const auto& [gram, count] : got)
          if (want.find(gram) == want.end())
            err << "extra\t" << escape_bytes(gram) << '\t' << to_string(count)
                << '\n';
        return kExitMismatch;
      }
    } else if (c_compress->parsed()) {
      if (algo == "lz78") {
        const CollageSystem cs = lz78_encode(read_file(in_path));
        write_file(out_path, serialize_cs(cs));
      } else {
        const CollageSystem cs = parse_cs(read_file(in_path));
        write_file(out_path, serialize_cs(rle_lift(cs)));
      }
    } else if (c_paths->parsed()) {
      const CollageSystem cs = parse_cs(read_file(in_path));
      const uint32_t var = parse_var_id(var_text, cs.size());
      const RuleKind kind = cs.rule(var).kind;
      const std::vector<PathStep> path = kind == RuleKind::PrefTrunc
                                             ? tr_pre_path(cs, var)
                                             : tr_suf_path(cs, var);
      for (const PathStep& st : path)
        out << 'X' << st.var << '\t' << st.tr_pre << '\t' << st.tr_suf
            << '\n';
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const EmptyInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace collagram::cli
