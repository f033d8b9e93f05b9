#ifndef OPLX_CLI_HPP
#define OPLX_CLI_HPP

namespace oplx::cli {

// Exit codes: 0 success, 2 usage error, 3 validity failure, 4 runtime error.
int run(int argc, const char* const* argv);

} // namespace oplx::cli

#endif
