#ifndef AFFCHAR_CLI_HPP
#define AFFCHAR_CLI_HPP

#include <iosfwd>

namespace affchar {

/* Dispatches the command line tool.  Returns the process exit status:
 * 0 success / identity holds, 1 identity fails, 2 usage error,
 * 3 violated construction invariant. */
int run_cli(int argc, const char *const *argv, std::ostream &out,
	    std::ostream &err);

} /* namespace affchar */

#endif
