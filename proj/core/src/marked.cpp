#include "relmark/marked.hpp"

namespace relmark {

MarkedPolynomial<Rational> mark_on(const MonomialIdeal& J, const QPoly& p) {
  std::optional<std::pair<Term, Rational>> head;
  for (const auto& [t, c] : p) {
    if (!J.contains(t)) continue;
    if (head) throw PreconditionError("polynomial has more than one term in the target ideal");
    head.emplace(t, c);
  }
  if (!head) throw PreconditionError("polynomial has no term in the target ideal");
  const QPoly scaled = p.scaled(1 / head->second);
  return {head->first, scaled.without(head->first)};
}

InterleavedResult interleaved_reduce(const MarkedSet<Rational>& F, const MarkedSet<Rational>& H, const QPoly& p,
                                     InterleaveOrder order, std::size_t max_rounds) {
  const MarkedSet<Rational>& first = order == InterleaveOrder::FThenH ? F : H;
  const MarkedSet<Rational>& second = order == InterleaveOrder::FThenH ? H : F;
  InterleavedResult r;
  r.history.push_back(p);
  QPoly cur = p;
  for (r.rounds = 1; r.rounds <= max_rounds; ++r.rounds) {
    QPoly next = reduce(second, reduce(first, cur));
    if (next == cur) {
      r.kind = InterleavedResult::Kind::FixedPoint;
      r.value = std::move(next);
      return r;
    }
    for (std::size_t i = 0; i < r.history.size(); ++i) {
      auto factor = proportional(r.history[i], next);
      if (!factor) continue;
      r.kind = InterleavedResult::Kind::LoopDetected;
      r.repeats = i;
      r.factor = *factor;
      r.exact_repeat = *factor == 1;
      r.value = std::move(next);
      return r;
    }
    r.history.push_back(next);
    cur = std::move(next);
  }
  r.rounds = max_rounds;
  r.kind = InterleavedResult::Kind::RoundsExceeded;
  r.value = std::move(cur);
  return r;
}

}  // namespace relmark
