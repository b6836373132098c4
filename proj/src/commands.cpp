#include "henson/commands.hpp"

#include <fstream>
#include <sstream>

#include "henson/folkman.hpp"
#include "henson/graph6.hpp"
#include "henson/presentation.hpp"
#include "henson/roster_config.hpp"
#include "henson/trace.hpp"
#include "henson/verify.hpp"

namespace henson::cli {

namespace {

bool write_file(const std::string& path, const std::string& content,
                std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "cannot write " << path << "\n";
    return false;
  }
  out << content;
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int cmd_present(int n, int m, const std::string& format, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  if (n < 3) {
    err << "present: n must be >= 3\n";
    return kExitUsage;
  }
  if (m < 0) {
    err << "present: m must be >= 0\n";
    return kExitUsage;
  }
  if (format != "graph6" && format != "adjlist") {
    err << "present: format must be graph6 or adjlist\n";
    return kExitUsage;
  }
  Presentation p(n);
  FiniteGraph g = p.restriction(m);
  std::string payload;
  if (format == "graph6") {
    if (m >= 63) {
      err << "present: graph6 output supports fewer than 63 vertices\n";
      return kExitUsage;
    }
    payload = encode_graph6(g) + "\n";
  } else {
    std::ostringstream lines;
    for (int v = 0; v < m; ++v) {
      lines << v << ":";
      for (int u : g.neighbors(v)) lines << ' ' << u;
      lines << '\n';
    }
    payload = lines.str();
  }
  if (!out_path.empty()) {
    if (!write_file(out_path, payload, err)) return kExitUsage;
  } else {
    out << payload;
  }
  return kExitOk;
}

int cmd_folkman(int n, int k, int max_vertices, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  if (n < 3 || k < 1 || max_vertices < 1) {
    err << "folkman: need n >= 3, k >= 1, max-vertices >= 1\n";
    return kExitUsage;
  }
  FolkmanCertificate cert;
  try {
    cert = folkman_witness(n, k, max_vertices);
  } catch (const SearchExhausted& e) {
    err << "folkman: " << e.what() << "\n";
    return kExitExhausted;
  }
  const std::string line = encode_graph6(cert.graph) + "\n";
  if (!out_path.empty()) {
    if (!write_file(out_path, line, err)) return kExitUsage;
  } else {
    out << line;
  }
  out << "witness: n=" << cert.n << " k=" << cert.k
      << " vertices=" << cert.graph.vertex_count()
      << " edges=" << cert.graph.edge_count()
      << " clique_number=" << clique_number(cert.graph)
      << " partition_nodes=" << cert.partitions_checked << "\n";
  return kExitOk;
}

int cmd_color(const std::string& config_path, const std::string& out_prefix,
              std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = load_run_config(config_path);
  } catch (const std::exception& e) {
    err << "color: " << e.what() << "\n";
    return kExitUsage;
  }
  RunResult result;
  try {
    result = run_construction(config);
  } catch (const SearchExhausted& e) {
    err << "color: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const std::exception& e) {
    err << "color: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string trace_path = out_prefix + ".trace.jsonl";
  const std::string coloring_path = out_prefix + ".coloring.txt";
  if (!write_file(trace_path, trace_to_jsonl(result.trace), err)) return kExitUsage;
  if (!write_file(coloring_path, coloring_to_text(result.coloring, config.n), err))
    return kExitUsage;
  out << "colored " << result.coloring.size() << " vertices over "
      << config.stages << " stages (" << result.trace.events.size()
      << " trace events)\n";
  out << "trace: " << trace_path << "\n";
  out << "coloring: " << coloring_path << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& config_path, const std::string& trace_path,
               const std::string& coloring_path, std::ostream& out,
               std::ostream& err) {
  RunConfig config;
  Trace trace;
  std::optional<std::vector<Color>> coloring;
  try {
    config = load_run_config(config_path);
    trace = trace_from_jsonl(read_file(trace_path));
    if (!coloring_path.empty())
      coloring = coloring_from_text(read_file(coloring_path));
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return kExitUsage;
  }
  VerifyReport report = verify_trace(trace, coloring, config);
  for (const CheckResult& check : report.checks) {
    out << check.name << ": " << (check.passed ? "pass" : "FAIL");
    if (!check.passed) out << " - " << check.detail;
    out << "\n";
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace henson::cli
