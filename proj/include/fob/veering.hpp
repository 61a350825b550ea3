#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fob/openbook.hpp"

namespace fob {

enum class VeeringKind { RightVeering, LeftVeering, Inconclusive };
enum class RightProof { IdentityMonodromy, ExhaustiveWithinStructure };

struct VeeringVerdict {
  VeeringKind kind = VeeringKind::Inconclusive;
  std::optional<RightProof> proof;
  std::optional<NormalArc> witness;        // left-veering arc, page coordinates
  std::string witness_component;           // component name + corner letters
  std::string endpoint_certificates;       // per-endpoint leftness record
  int bound = 0;
  int arcs_examined = 0;
};

ArcOrder arc_verdict(const Triple& t, const NormalArc& gamma);

VeeringVerdict classify(const Triple& t, int bound);

constexpr int kDefaultVeeringBound = 24;

}  // namespace fob
