#include "arr/jump_loci.hpp"

#include <map>

#include "arr/errors.hpp"
#include "arr/formulas.hpp"
#include "arr/holonomy.hpp"

namespace arr {

namespace {

void require_q_decomposable(const Arrangement& a, const EngineOptions& options) {
  if (!is_decomposable(a, options).rational)
    throw HypothesisError("arrangement is not decomposable over Q; jump loci are not determined by local components");
}

template <class Component>
std::vector<Component> local_components(const L2Lattice& l2, std::int64_t s) {
  std::vector<Component> out;
  for (const auto& f : l2.flats)
    if (f.mobius > s) out.push_back(Component{f.members, static_cast<std::int64_t>(f.members.size()) - 1});
  return out;
}

}  // namespace

std::vector<LinearComponent> resonance_components(const Arrangement& a, std::int64_t s, const EngineOptions& options) {
  if (s < 1) throw DomainError("resonance depth must be >= 1");
  require_q_decomposable(a, options);
  return local_components<LinearComponent>(compute_l2(a), s);
}

CharacteristicComponents characteristic_components(const Arrangement& a, std::int64_t s, Separation separated,
                                                    const EngineOptions& options) {
  if (s < 1) throw DomainError("characteristic variety depth must be >= 1");
  require_q_decomposable(a, options);
  if (separated != Separation::asserted)
    throw RefusalError("characteristic components need the caller to assert that the Alexander invariant is separated");
  CharacteristicComponents result;
  result.components = local_components<TorusComponent>(compute_l2(a), s);
  result.hypotheses = {true, Separation::asserted};
  return result;
}

std::int64_t chen_ranks_from_resonance(const Arrangement& a, std::int64_t k, const EngineOptions& options) {
  if (k < 2) throw DomainError("chen_ranks_from_resonance needs k >= 2");
  std::map<std::int64_t, std::int64_t> h;
  for (const auto& c : resonance_components(a, 1, options)) ++h[c.dimension];
  std::int64_t total = 0;
  for (const auto& [r, count] : h) total += count * free_chen(r, k);
  return total;
}

}  // namespace arr
