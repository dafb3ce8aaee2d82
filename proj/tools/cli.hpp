#pragma once

namespace charvar {
int cli_main(int argc, char** argv);
}
