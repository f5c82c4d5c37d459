/// End-to-end tests of the command-line driver: golden transcripts, exit
/// codes, strategy files, configuration, and output determinism.
/// Usage: p2sim_cli_tests <path-to-cli> <golden-dir>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) return;
  ++g_failures;
  std::cerr << "FAIL: " << what << '\n';
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) {
    std::cerr << "FAIL: cannot spawn: " << command << '\n';
    ++g_failures;
    return result;
  }
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "FAIL: cannot read " << path << '\n';
    ++g_failures;
    return {};
  }
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

/// Finds the stats row with the given label and returns "<count> <rate>".
std::string stat_fields(const std::string& output, const std::string& label) {
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string name, count, rate;
    if (fields >> name >> count >> rate && name == label) return count + ' ' + rate;
  }
  return "<missing row>";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: p2sim_cli_tests <cli-path> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];
  const std::string tmp = "cli_tests_tmp";

  // Golden transcripts, text and structured, byte for byte.
  {
    const CommandResult honest =
        run_command(cli + " run --scenario honest --L 1 --seed 7 --message 0");
    expect(honest.exit_code == 0, "honest run exits 0");
    expect(honest.output == read_file(golden + "/honest_L1_seed7.txt"),
           "honest text output matches the golden file");

    const CommandResult honest_structured = run_command(
        cli + " run --scenario honest --L 1 --seed 7 --message 0 --output structured");
    expect(honest_structured.output == read_file(golden + "/honest_L1_seed7.jsonl"),
           "honest structured output matches the golden file");

    const CommandResult attack =
        run_command(cli + " run --scenario attack-b --L 1 --seed 7 --message 0");
    expect(attack.exit_code == 0, "attack-b run exits 0");
    expect(attack.output == read_file(golden + "/attack_b_L1_seed7.txt"),
           "attack-b text output matches the golden file");

    const CommandResult attack_structured = run_command(
        cli +
        " run --scenario attack-b --L 1 --seed 7 --message 0 --output structured");
    expect(attack_structured.output == read_file(golden + "/attack_b_L1_seed7.jsonl"),
           "attack-b structured output matches the golden file");
  }

  // Identical invocations produce identical bytes.
  {
    const std::string command = cli + " run --scenario attack-c --L 8 --seed 3";
    const CommandResult first = run_command(command);
    const CommandResult second = run_command(command);
    expect(first.exit_code == 0, "attack-c run exits 0");
    expect(first.output == second.output, "repeated runs are byte-identical");
  }

  // Class consistency across both message bits.
  {
    const CommandResult both =
        run_command(cli + " run --scenario attack-b --L 4 --seed 11 --message both");
    expect(both.exit_code == 0, "attack-b with --message both exits 0");
    expect(contains(both.output, "\n\n"), "both-message output has two blocks");
    expect(contains(both.output, "B: accept m=1"), "flipped accept for m=0");
    expect(contains(both.output, "B: accept m=0"), "flipped accept for m=1");
  }

  // Config errors exit 2.
  {
    expect(run_command(cli + " run --L 0").exit_code == 2, "L=0 is a config error");
    expect(run_command(cli + " run --scenario nonsense").exit_code == 2,
           "unknown scenario is a config error");
    expect(run_command(cli + " run --policy threshold:7/4").exit_code == 2,
           "out-of-range threshold is a config error");
    expect(run_command(cli + " nonsense-subcommand").exit_code == 2,
           "unknown subcommand is a config error");
    expect(run_command(cli + " run --scenario custom").exit_code == 2,
           "custom without a strategy file is a config error");
  }

  // Threshold policies parse and run.
  {
    const CommandResult thresh = run_command(
        cli + " run --scenario honest --L 8 --seed 2 --policy threshold:1/4");
    expect(thresh.exit_code == 0, "threshold policy honest run exits 0");
  }

  // Strategy files: round-trip through the CLI, parse errors carry line info.
  {
    write_file(tmp + "_mitm.strategy",
               "# full interposition plan\n"
               "intercept 1 keydist -> swap-keys\n"
               "intercept 2 partialshare -> restore-partials\n"
               "intercept 3 partialshare -> swap-partials\n"
               "intercept 4 sign -> flip-message\n"
               "intercept 5 forward -> flip-forward\n");
    const CommandResult custom = run_command(
        cli + " run --scenario custom --strategy-file " + tmp +
        "_mitm.strategy --L 1 --seed 7");
    expect(custom.exit_code == 0, "custom mitm strategy runs to completion");
    expect(contains(custom.output, "B: accept m=1"),
           "custom mitm strategy flips the victim");

    write_file(tmp + "_bad.strategy",
               "intercept 1 keydist -> swap-keys\n"
               "intercept 2 partialshare -> flip-message\n");
    const CommandResult bad = run_command(
        cli + " run --scenario custom --strategy-file " + tmp +
        "_bad.strategy --L 1");
    expect(bad.exit_code == 2, "incompatible strategy file is an input error");
    expect(contains(bad.output, "line 2"), "parse error names the offending line");

    write_file(tmp + "_stall.strategy", "intercept 1 keydist -> swap-keys\n");
    const CommandResult stall = run_command(
        cli + " run --scenario custom --strategy-file " + tmp +
        "_stall.strategy --L 1");
    expect(stall.exit_code == 2, "a stalled scenario is an input error");
    expect(contains(stall.output, "never delivered"),
           "the stall error explains the missing action");
  }

  // Search exit codes: 0 with the known strategy, 1 without it, 3 on empty.
  {
    const CommandResult found = run_command(cli + " search --goal transfer --L 1");
    expect(found.exit_code == 0, "default search finds the known attack");
    expect(contains(found.output, "universal violations: 2"),
           "default search reports two universal strategies");
    expect(contains(found.output, "intercept 2 partialshare -> restore-partials"),
           "search output lists the known attack plan");

    const CommandResult empty =
        run_command(cli + " search --L 1 --alphabet forward,flip");
    expect(empty.exit_code == 3, "flip-only search is empty");
    expect(contains(empty.output, "universal violations: 0"),
           "flip-only search reports zero violations");
    expect(contains(empty.output, "strategies searched: 4"),
           "the flip token expands to both flip actions");

    const CommandResult missing = run_command(
        cli + " search --L 1 --alphabet forward,swap-keys,swap-partials,flip");
    expect(missing.exit_code == 1,
           "a nonempty result without the known attack exits 1");

    expect(run_command(cli + " search --goal forgery --L 1").exit_code == 0,
           "forgery search finds the known attack");
    expect(run_command(cli + " search --L 5").exit_code == 2,
           "search length above the exhaustive bound is a config error");
    expect(run_command(cli + " search --L 1 --alphabet sidechannel").exit_code == 2,
           "unknown alphabet token is a config error");
  }

  // Stats: exact rates for the canned strategies.
  {
    const CommandResult mitm = run_command(
        cli + " stats --strategy mitm --L 8 --trials 500 --seed 21");
    expect(mitm.exit_code == 0, "mitm stats exit 0");
    expect(stat_fields(mitm.output, "victim_accept_flipped") == "500 1.00000000",
           "mitm flips the victim on every trial");
    expect(stat_fields(mitm.output, "counterpart_accept_signed") == "500 1.00000000",
           "mitm leaves the counterpart accepting the signed bit");

    const CommandResult proxy = run_command(
        cli + " stats --strategy proxy --L 8 --trials 400 --seed 22");
    expect(stat_fields(proxy.output, "victim_accept_signed") == "400 1.00000000",
           "the transparent proxy preserves honest acceptance");

    const CommandResult naive = run_command(
        cli + " stats --strategy naive-flip --L 2 --trials 1000 --seed 23");
    expect(stat_fields(naive.output, "victim_accept_signed") == "0 0.00000000",
           "the naive flip never delivers the signed bit to the victim");
    expect(stat_fields(naive.output, "counterpart_undecided") == "840 0.84000000",
           "the counterpart stays undecided whenever the victim rejects");

    expect(run_command(cli + " stats --strategy unknown").exit_code == 2,
           "unknown canned strategy is a config error");
  }

  // Config file: same fields as flags, flags win.
  {
    write_file(tmp + ".ini",
               "[run]\nscenario=attack-b\nL=1\nseed=7\nmessage=0\n");
    const CommandResult from_config =
        run_command(cli + " --config " + tmp + ".ini run");
    expect(from_config.output == read_file(golden + "/attack_b_L1_seed7.txt"),
           "config file drives the run like flags do");
    const CommandResult overridden = run_command(
        cli + " --config " + tmp + ".ini run --scenario honest");
    expect(from_config.exit_code == 0 && overridden.exit_code == 0,
           "config-driven runs exit 0");
    expect(overridden.output == read_file(golden + "/honest_L1_seed7.txt"),
           "command-line flags override the config file");
  }

  std::remove((tmp + "_mitm.strategy").c_str());
  std::remove((tmp + "_bad.strategy").c_str());
  std::remove((tmp + "_stall.strategy").c_str());
  std::remove((tmp + ".ini").c_str());

  if (g_failures == 0) {
    std::cout << "all cli tests passed\n";
    return 0;
  }
  std::cerr << g_failures << " cli test(s) failed\n";
  return 1;
}
