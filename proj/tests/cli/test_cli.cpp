// SPDX-License-Identifier: Apache-2.0
#include "cli_harness.hpp"
#include "doctest.h"

TEST_CASE("cli contract") {
  for (const auto& outcome : nmrsim::testing::cli_contract_checks()) {
    INFO(outcome.name << ": " << outcome.detail);
    CHECK(outcome.ok);
  }
}
