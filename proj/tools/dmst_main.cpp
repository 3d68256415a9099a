#include <string>
#include <vector>

#include "dmst/cli.hpp"

int main(int argc, char** argv) {
    return dmst::runCli(std::vector<std::string>(argv + 1, argv + argc));
}
