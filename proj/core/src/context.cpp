#include "symfun/context.hpp"

namespace symfun {

const Context<RatFun>& symbolic() {
  static const Context<RatFun> ctx;
  return ctx;
}

MemoTable& symbolic_memo() { return symbolic().memo(); }

}  // namespace symfun
