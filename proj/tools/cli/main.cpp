#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) { return mrey::cli::run(argc, argv, std::cout, std::cerr); }
