#pragma once

#include <gtest/gtest.h>

#include "augcube/error.hpp"

#define EXPECT_ERROR_KIND(statement, expected)                                  \
  do {                                                                          \
    try {                                                                       \
      statement;                                                                \
      ADD_FAILURE() << #statement " did not throw";                             \
    } catch (const ::augcube::Error& e) {                                       \
      EXPECT_EQ(::augcube::to_string(e.kind()), ::augcube::to_string(expected)) \
          << e.what();                                                          \
    }                                                                           \
  } while (false)
