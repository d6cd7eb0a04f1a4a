// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <iostream>

#include "padic_cartan/cli.hpp"

int main(int argc, char** argv)
{
    return pcartan::run_cli(argc, argv, std::cout, std::cerr);
}
