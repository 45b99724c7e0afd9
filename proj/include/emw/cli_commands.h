#pragma once

#include <string>
#include <vector>

namespace emw {

// Exit-code contract: 0 success, 2 validation error, 3 check failure, 4 I/O.
enum ExitCode { kOk = 0, kValidation = 2, kCheckFailure = 3, kIo = 4 };

int cmd_mother(double r_max, double t_min, double t_max, int nr, int nt,
               const std::string& out_path);

// tier: "fast" | "full". tamper injects a deliberate perturbation into the
// projector identity check (negative control; must fail by name).
int cmd_verify(const std::string& tier, double tol_override, bool tamper,
               const std::string& out_path);

int cmd_synthesize(const std::string& phi_path, const std::string& probes_path,
                   const std::string& out_path);

int cmd_analyze(const std::string& f_path, const std::string& grid_path,
                const std::string& out_path);

// Exactly one of boost_json (nonempty) or scale (nonzero) must be given.
int cmd_transform(const std::string& grid_path, const std::string& boost_json,
                  double scale, const std::string& out_path);

}  // namespace emw
