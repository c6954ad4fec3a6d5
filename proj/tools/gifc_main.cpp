#include <iostream>

#include "gifc/cli_app.hpp"

int main(int argc, char** argv) {
    return gifc::run_cli(argc, argv, std::cout, std::cerr);
}
