#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "alg3/scalar.hpp"

namespace alg3 {

/// Command implementations behind the command-line tool. Each returns the
/// process exit code: 0 success/true, 1 mathematical negative, 2 usage or
/// parse error. Output goes to `out`, diagnostics to `err`.
namespace cli {

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_classify(const std::string& path, bool with_witness, bool with_trace, std::ostream& out,
                 std::ostream& err);

int cmd_iso(const std::string& path_a, const std::string& path_b, std::optional<int> oracle_prime,
            std::ostream& out, std::ostream& err);

int cmd_catalog_list(FieldMode mode, std::optional<int> dim, std::ostream& out, std::ostream& err);

int cmd_catalog_show(const std::string& label_name, FieldMode mode,
                     const std::optional<std::string>& k_text, std::ostream& out,
                     std::ostream& err);

int cmd_catalog_export(const std::string& out_path, FieldMode mode, std::optional<int> dim,
                       std::ostream& out, std::ostream& err);

int cmd_scramble(const std::string& label_or_path, uint64_t seed,
                 const std::optional<std::string>& k_text, FieldMode mode, std::ostream& out,
                 std::ostream& err);

int cmd_selftest(bool full, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace alg3
