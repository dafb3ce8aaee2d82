#include "cli.hpp"

namespace charvar {
int cli_main(int, char**) { return 0; }
}
