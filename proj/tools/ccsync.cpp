#include <iostream>
#include <string>
#include <vector>

#include "ccsync/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const ccsync::RunConfig config = ccsync::parse_config(args);
        return ccsync::run(config);
    } catch (const ccsync::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
