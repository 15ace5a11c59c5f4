/* run_task.hpp
 *
 * Batch runner: parse a JSON config, dispatch exactly one task, and
 * emit CSV tables, a summary JSON (every number tagged with the
 * operation that produced it), and a manifest JSON (schema "1").
 */
#ifndef SDSFORM_RUN_TASK_HPP
#define SDSFORM_RUN_TASK_HPP

#include <optional>
#include <string>
#include <vector>

namespace sdsform {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct RunResult {
  std::string out_dir;
  std::vector<std::string> files; /* basenames written into out_dir */
};

/* Output directory precedence: out_override (--out) > SDSFORM_OUT env
 * > config output.directory > "./out".  Seed precedence: seed_override
 * (--seed) > config seed > 12345.  Throws ConfigError on bad input and
 * NumericalError (or a subclass) on computation failure. */
RunResult run_config(const std::string& config_path,
                     const std::string& out_override = "",
                     std::optional<long> seed_override = std::nullopt);

}  // namespace sdsform

#endif
