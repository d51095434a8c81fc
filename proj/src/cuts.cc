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

#include "crsolve/cuts.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crsolve {

std::string CutProvenance::ToString(const Model& model) const {
  std::ostringstream out;
  switch (kind) {
    case CutKind::kVertexRow:
      out << "vertex row v" << vertex + 1;
      break;
    case CutKind::kColorRow:
      out << "color row c" << colors.front();
      break;
    case CutKind::kClass5:
      out << "class5 H=" << model.set(set_index).ToString()
          << " c=" << colors.front();
      break;
    case CutKind::kClass6: {
      out << "class6 H=" << model.set(set_index).ToString() << " C'={";
      for (std::size_t i = 0; i < colors.size(); ++i) {
        out << (i ? "," : "") << colors[i];
      }
      out << "}";
      break;
    }
  }
  return out.str();
}

Cut VertexRowCut(const Model& model, Vertex v) {
  Cut cut;
  cut.row = model.vertex_row(v);
  cut.provenance.kind = CutKind::kVertexRow;
  cut.provenance.vertex = v;
  return cut;
}

Cut ColorRowCut(const Model& model, Color c) {
  Cut cut;
  cut.row = model.color_row(c);
  cut.provenance.kind = CutKind::kColorRow;
  cut.provenance.colors = {c};
  return cut;
}

Cut BuildClass5(const Model& model, int set_index, Color c) {
  if (set_index < 0 || set_index >= model.set_count()) {
    throw Error("set index out of range");
  }
  if (c < 1 || c > model.color_count()) throw Error("color out of range");
  const ConnectedSet& h = model.set(set_index);
  Cut cut;
  cut.row.rhs = 1;
  cut.provenance.kind = CutKind::kClass5;
  cut.provenance.set_index = set_index;
  cut.provenance.colors = {c};
  for (int s = 0; s < model.set_count(); ++s) {
    const ConnectedSet& other = model.set(s);
    const bool meets = Intersects(other, h);
    const bool covers = Contains(other, h);
    for (Color d = 1; d <= model.color_count(); ++d) {
      if ((d == c && meets) || (d != c && covers)) {
        cut.row.terms.emplace_back(model.FlatIndex({s, d}), 1);
      }
    }
  }
  return cut;
}

Cut BuildClass6(const Model& model, int set_index, std::vector<Color> colors) {
  if (set_index < 0 || set_index >= model.set_count()) {
    throw Error("set index out of range");
  }
  std::sort(colors.begin(), colors.end());
  if (colors.empty() || static_cast<int>(colors.size()) > model.color_count()) {
    throw Error("color set size must lie in 1..k");
  }
  if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
    throw Error("color set has repeated colors");
  }
  if (colors.front() < 1 || colors.back() > model.color_count()) {
    throw Error("color set has a color outside 1..k");
  }
  const ConnectedSet& h = model.set(set_index);
  const int s = static_cast<int>(colors.size());
  if (s > h.size && h.size != 1) {
    throw Error("generalized cut needs |C'| <= |H| or |H| = 1 to be valid; got |C'| = " +
                std::to_string(s) + ", |H| = " + std::to_string(h.size));
  }
  std::vector<bool> in_set(model.color_count() + 1, false);
  for (Color c : colors) in_set[c] = true;

  Cut cut;
  cut.row.rhs = s;
  cut.provenance.kind = CutKind::kClass6;
  cut.provenance.set_index = set_index;
  cut.provenance.colors = std::move(colors);
  for (int o = 0; o < model.set_count(); ++o) {
    const ConnectedSet& other = model.set(o);
    if (!Intersects(other, h)) continue;
    const int delta = s - DifferenceSize(h, other);
    for (Color d = 1; d <= model.color_count(); ++d) {
      const int coef = in_set[d] ? std::max(delta, 1) : std::max(delta, 0);
      if (coef != 0) cut.row.terms.emplace_back(model.FlatIndex({o, d}), coef);
    }
  }
  return cut;
}

double EvaluateLhs(const LinearConstraint& row, const Point& x) {
  double lhs = 0.0;
  for (const auto& [flat, coef] : row.terms) {
    lhs += static_cast<double>(coef) * x.values[flat];
  }
  return lhs;
}

double Violation(const Cut& cut, const Point& x) {
  return EvaluateLhs(cut.row, x) - static_cast<double>(cut.row.rhs);
}

namespace {

struct Entry {
  int set_index;
  Color color;
  double value;
};

std::vector<Entry> Nonzeros(const Model& model, const Point& x) {
  std::vector<Entry> out;
  for (int flat = 0; flat < model.var_count(); ++flat) {
    if (x.values[flat] > 1e-12) {
      const VarId var = model.Var(flat);
      out.push_back({var.set_index, var.color, x.values[flat]});
    }
  }
  return out;
}

struct Candidate {
  double violation;
  int set_index;
  std::vector<Color> colors;
};

// Builds candidates in order of decreasing estimated violation and keeps
// those whose exactly evaluated violation exceeds the tolerance.
template <typename Build>
std::vector<SeparatedCut> Finalize(std::vector<Candidate> candidates,
                                   const Point& x,
                                   const SeparationOptions& options,
                                   Build build) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.violation != b.violation) return a.violation > b.violation;
              if (a.set_index != b.set_index) return a.set_index < b.set_index;
              return a.colors < b.colors;
            });
  std::vector<SeparatedCut> out;
  for (Candidate& c : candidates) {
    if (static_cast<int>(out.size()) >= options.max_cuts) break;
    Cut cut = build(c);
    const double violation = Violation(cut, x);
    if (violation > options.tolerance) out.push_back({std::move(cut), violation});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SeparatedCut& a, const SeparatedCut& b) {
                     return a.violation > b.violation;
                   });
  return out;
}

}  // namespace

std::vector<SeparatedCut> SeparateClass5(const Model& model, const Point& x,
                                         const SeparationOptions& options) {
  const int k = model.color_count();
  const std::vector<Entry> nonzeros = Nonzeros(model, x);
  std::vector<Candidate> candidates;
  std::vector<double> covering(k + 1);
  std::vector<double> meeting(k + 1);
  for (int s = 0; s < model.set_count(); ++s) {
    const ConnectedSet& h = model.set(s);
    double covering_total = 0.0;
    std::fill(covering.begin(), covering.end(), 0.0);
    std::fill(meeting.begin(), meeting.end(), 0.0);
    for (const Entry& e : nonzeros) {
      const ConnectedSet& other = model.set(e.set_index);
      if (!Intersects(other, h)) continue;
      meeting[e.color] += e.value;
      if (Contains(other, h)) {
        covering_total += e.value;
        covering[e.color] += e.value;
      }
    }
    for (Color c = 1; c <= k; ++c) {
      const double lhs = covering_total - covering[c] + meeting[c];
      if (lhs - 1.0 > options.tolerance) {
        candidates.push_back({lhs - 1.0, s, {c}});
      }
    }
  }
  return Finalize(std::move(candidates), x, options, [&](const Candidate& c) {
    return BuildClass5(model, c.set_index, c.colors.front());
  });
}

std::vector<SeparatedCut> SeparateClass6(const Model& model, const Point& x,
                                         const SeparationOptions& options) {
  const int k = model.color_count();
  const std::vector<Entry> nonzeros = Nonzeros(model, x);
  std::vector<Candidate> candidates;
  std::vector<double> in_sum(k + 1);
  std::vector<double> out_sum(k + 1);
  std::vector<Color> order(k);
  std::vector<std::pair<int, const Entry*>> meeting;
  for (int s = 0; s < model.set_count(); ++s) {
    const ConnectedSet& h = model.set(s);
    if (h.size < 2) continue;
    const int max_size = std::min(
        k, options.class6_full_validity_regime ? h.size : h.size - 1);
    if (max_size < 2) continue;
    meeting.clear();
    for (const Entry& e : nonzeros) {
      const ConnectedSet& other = model.set(e.set_index);
      if (Intersects(other, h)) {
        meeting.emplace_back(DifferenceSize(h, other), &e);
      }
    }
    if (meeting.empty()) continue;
    for (int size = 2; size <= max_size; ++size) {
      std::fill(in_sum.begin(), in_sum.end(), 0.0);
      std::fill(out_sum.begin(), out_sum.end(), 0.0);
      for (const auto& [missing, e] : meeting) {
        const int delta = size - missing;
        in_sum[e->color] += std::max(delta, 1) * e->value;
        out_sum[e->color] += std::max(delta, 0) * e->value;
      }
      std::iota(order.begin(), order.end(), Color{1});
      std::stable_sort(order.begin(), order.end(), [&](Color a, Color b) {
        return in_sum[a] - out_sum[a] > in_sum[b] - out_sum[b];
      });
      double lhs = 0.0;
      for (int i = 0; i < k; ++i) {
        lhs += i < size ? in_sum[order[i]] : out_sum[order[i]];
      }
      if (lhs - size > options.tolerance) {
        std::vector<Color> chosen(order.begin(), order.begin() + size);
        std::sort(chosen.begin(), chosen.end());
        candidates.push_back({lhs - size, s, std::move(chosen)});
      }
    }
  }
  return Finalize(std::move(candidates), x, options, [&](const Candidate& c) {
    return BuildClass6(model, c.set_index, c.colors);
  });
}

bool CutPool::Add(Cut cut) {
  auto [it, inserted] = index_.try_emplace(cut.provenance, cuts_.size());
  if (inserted) cuts_.push_back(std::move(cut));
  return inserted;
}

bool CutPool::Contains(const CutProvenance& provenance) const {
  return index_.contains(provenance);
}

std::string DumpCuts(const Model& model, std::span<const Cut> cuts) {
  std::vector<LinearConstraint> rows;
  std::vector<std::string> comments;
  for (const Cut& cut : cuts) {
    rows.push_back(cut.row);
    comments.push_back(cut.provenance.ToString(model));
  }
  return DumpLp(model, rows, comments);
}

}  // namespace crsolve
