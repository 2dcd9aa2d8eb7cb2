#ifndef DUALGAMAL_CLI_HPP_
#define DUALGAMAL_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dualgamal::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kDlogNotFound = 3;
inline constexpr int kVerificationMismatch = 4;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dualgamal::cli

#endif  // DUALGAMAL_CLI_HPP_
