#pragma once

#include "symfun/io.hpp"
#include "symfun/ratfun.hpp"
#include "symfun/symfun.hpp"

namespace testing_helpers {

inline symfun::RatFun R(const char* s) { return symfun::RatFun::parse(s); }
inline symfun::Partition P(const char* s) { return symfun::Partition::parse(s); }
inline symfun::SymFun<symfun::RatFun> F(const char* s) { return symfun::parse_symfun_expr(s); }

}  // namespace testing_helpers
