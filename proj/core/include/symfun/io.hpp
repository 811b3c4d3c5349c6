#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symfun/symfun.hpp"

namespace symfun {

/// Generator letter used in text forms: m, p, s, P, Q, M.
std::string generator_letter(Basis b);

/// "m[2] + ((1+q-t-q*t)/(1-q*t))*m[1,1]"; the empty partition prints its
/// coefficient alone and zero prints "0".
std::string render_plain(const SymFun<RatFun>& f);
std::string render_latex(const SymFun<RatFun>& f);
std::string ratfun_latex(const RatFun& r);

/// {"basis":..,"degree_bound":..,"terms":[{"partition":[..],"coeff":".."}]}
std::string symfun_to_json(const SymFun<RatFun>& f);
SymFun<RatFun> symfun_from_json(std::string_view text);
std::string symfun_list_to_json(const std::vector<SymFun<RatFun>>& fs);
std::vector<SymFun<RatFun>> symfun_list_from_json(std::string_view text);

/// Parses operand expressions such as "(1-q)*p[1]*p[1] + 2*M[2,1]".
/// Sums of generators of one basis stay in that basis; anything that mixes
/// bases or multiplies generators is returned in the p basis.
/// Throws ParseError.
SymFun<RatFun> parse_symfun_expr(std::string_view text);

}  // namespace symfun
