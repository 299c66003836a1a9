#pragma once

// Command-line front end.  The JSON report is authoritative; the text
// report is rendered from it.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dedekind/criterion.hpp"

namespace dedekind::cli {

enum class Command { Check, Eisenstein, Radical, Transform, Ramify };
enum class Output { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

struct RunConfig {
    Command command = Command::Check;
    ValuationDescriptor field;
    std::optional<Poly> poly;
    std::optional<long> n;
    std::optional<FieldElement> a;
    IrreducibilityMode mode = IrreducibilityMode::Assert;
    Output output = Output::Text;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_config for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string_view command_name(Command c);

/// Arguments without the program name.  Throws UsageError.
RunConfig parse_config(const std::vector<std::string>& args);
/// Arguments that parse back to the same config.
std::vector<std::string> canonical_args(const RunConfig& config);

/// Throws dedekind::Error on precondition failures.
nlohmann::ordered_json build_report(const RunConfig& config);
std::string render_text(const nlohmann::ordered_json& report);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dedekind::cli
