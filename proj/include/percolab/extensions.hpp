#pragma once

#include <deque>
#include <optional>
#include <string>

#include "percolab/alpha.hpp"
#include "percolab/certificates.hpp"
#include "percolab/witness.hpp"

namespace percolab {

/// Ordered extension pattern: embed F minus the edges inside the anchor,
/// mapping the i-th anchor vertex onto the i-th host anchor vertex.
struct ExtensionSpec {
  Graph pattern;            // F
  std::vector<int> anchor;  // ordered vertex list of S inside F
};

/// First (canonical) order-respecting embedding of the spec over the host
/// anchor, or nullopt. Image vertices outside the anchor are pairwise
/// distinct and distinct from the anchor.
std::optional<Embedding> find_extension(const ExtensionSpec& spec,
                                        std::span<const int> host_anchor, const Graph& host);

/// A certificate prepared for fold runs: the witness structure of the
/// certificate's target over its activating graph, with per-red-edge cores
/// and modified cores at the chosen alpha.
class FoldPlan {
 public:
  /// Throws when (target, modified core of target + target) fails to be
  /// alpha-sparse, i.e. alpha is not above the certificate bound.
  FoldPlan(const Graph& H, const RhoCertificate& cert, const Rational& alpha);

  const Graph& pattern() const { return H_; }
  const Rational& alpha() const { return alpha_; }
  Edge target() const { return target_; }
  /// Slack between alpha and the certificate bound, reported to callers.
  Rational bound() const { return bound_; }
  int red_count() const { return (int)reds_.size(); }

  struct RedEdge {
    Edge edge;                    // in certificate-graph ids
    std::vector<int> core_verts;  // anchor, ascending certificate ids
    ExtensionSpec spec;           // core + modified core, compacted
    // children: per red edge of the completing copy, its index in reds_ and
    // the positions of (edge endpoints, core vertices) inside spec.pattern
    struct Child {
      int red_index;
      int pair_pos_u, pair_pos_v;
      std::vector<int> anchor_pos;
    };
    std::vector<Child> children;
  };
  const RedEdge& red(int i) const { return reds_[i]; }
  int root_index() const { return root_; }

 private:
  Graph H_;
  Rational alpha_;
  Edge target_;
  Rational bound_;
  std::vector<RedEdge> reds_;
  int root_ = -1;
};

struct FoldReport {
  Edge g;
  bool success = false;
  bool verified = false;  // success and g in the closure of A_g
  long long copies_processed = 0;
  SubgraphRef embedded;   // A_g
  std::optional<std::string> failure_point;
};

/// Recursive fold embedding: bases the target's modified core at g, then
/// processes every unprocessed copy of a red edge with the matching
/// (core, modified core) extension until none remain. The same red edge may
/// appear at several host locations; each copy is processed separately.
FoldReport fold_activate(const FoldPlan& plan, Edge g, const Graph& host,
                         long long max_copies = 200000);

}  // namespace percolab
