#include "stmop/cli.hpp"

int main(int argc, char** argv)
{
    return stmop::cli::run(argc, argv);
}
