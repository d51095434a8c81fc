// Copyright 2026 The crsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Valid inequalities for the connected-subgraph polytope.
//
// Binary cut for a pair (H, c), right-hand side 1:
//   sum_{H' ⊇ H} sum_{c' != c} x_{H',c'} + sum_{H' ∩ H != ∅} x_{H',c} <= 1.
//
// Generalized cut for (H, C') with right-hand side |C'|, over H' meeting H and
// with delta(H') = |C'| - |H \ H'|:
//   coefficient max(delta, 1) on x_{H',c} for c in C',
//   coefficient max(delta, 0) on x_{H',c} for c outside C'.
// It is valid when |C'| <= |H| or |H| = 1, and for |C'| = 1 it coincides
// with the binary cut.

#ifndef CRSOLVE_CUTS_H_
#define CRSOLVE_CUTS_H_

#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "crsolve/common.h"
#include "crsolve/formulation.h"

namespace crsolve {

enum class CutKind { kVertexRow, kColorRow, kClass5, kClass6 };

struct CutProvenance {
  CutKind kind = CutKind::kClass5;
  int set_index = -1;         // kClass5, kClass6
  Vertex vertex = -1;         // kVertexRow
  std::vector<Color> colors;  // sorted; {c} for kClass5 and kColorRow

  std::string ToString(const Model& model) const;
  auto Key() const { return std::tie(kind, set_index, vertex, colors); }
  friend bool operator<(const CutProvenance& a, const CutProvenance& b) {
    return a.Key() < b.Key();
  }
  friend bool operator==(const CutProvenance& a, const CutProvenance& b) {
    return a.Key() == b.Key();
  }
};

struct Cut {
  LinearConstraint row;
  CutProvenance provenance;
};

Cut VertexRowCut(const Model& model, Vertex v);
Cut ColorRowCut(const Model& model, Color c);
Cut BuildClass5(const Model& model, int set_index, Color c);
// Throws Error unless 1 <= |colors| <= k, the colors are distinct and in
// range, and |colors| <= |H| or |H| = 1.
Cut BuildClass6(const Model& model, int set_index, std::vector<Color> colors);

double EvaluateLhs(const LinearConstraint& row, const Point& x);
double Violation(const Cut& cut, const Point& x);

struct SeparationOptions {
  // A cut is reported only if its violation exceeds this.
  double tolerance = 1e-4;
  int max_cuts = 100;
  // Class-6 candidates default to |H| >= 2 and 2 <= |C'| <= |H| - 1; when
  // set, |C'| ranges up to |H|.
  bool class6_full_validity_regime = false;
};

struct SeparatedCut {
  Cut cut;
  double violation = 0.0;
};

// Evaluates every (H, c) and returns the violated binary cuts, most violated
// first (ties by provenance), at most options.max_cuts of them.
std::vector<SeparatedCut> SeparateClass5(const Model& model, const Point& x,
                                         const SeparationOptions& options = {});

// Exact separation of generalized cuts with |C'| >= 2: for every H and size
// s the best color set is the s colors with the largest in-minus-out sums.
std::vector<SeparatedCut> SeparateClass6(const Model& model, const Point& x,
                                         const SeparationOptions& options = {});

// Cuts keyed by provenance; re-adding a known cut is a no-op.
class CutPool {
 public:
  // Returns true if the cut was new.
  bool Add(Cut cut);
  bool Contains(const CutProvenance& provenance) const;
  std::size_t size() const { return cuts_.size(); }
  const std::vector<Cut>& cuts() const { return cuts_; }

 private:
  std::map<CutProvenance, std::size_t> index_;
  std::vector<Cut> cuts_;
};

// Debug text of cuts with provenance comments.
std::string DumpCuts(const Model& model, std::span<const Cut> cuts);

}  // namespace crsolve

#endif  // CRSOLVE_CUTS_H_
