// Command-line front end. Exit codes: 0 ok, 1 parse/validation error, 2 check failure,
// 3 internal invariant breach.
#pragma once

namespace affa {

int run_cli(int argc, char** argv);

}  // namespace affa
