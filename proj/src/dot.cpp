#include "pclab/dot.hpp"

#include <sstream>

namespace pclab {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render(const FiniteSpace& x, PointSet x0, const PointRelation* r, bool specialization) {
  std::ostringstream out;
  out << "digraph pclab {\n  node [shape=circle];\n";
  for (int p = 0; p < x.size(); ++p)
    out << "  n" << p << " [label=" << quoted(x.name(p)) << (has_bit(x0, p) ? ", shape=doublecircle" : "") << "];\n";
  if (specialization)
    for (int p = 0; p < x.size(); ++p)
      for (int q = 0; q < x.size(); ++q)
        if (p != q && has_bit(x.point_closure(q), p)) out << "  n" << p << " -> n" << q << ";\n";
  if (r)
    for (int p = 0; p < x.size(); ++p)
      for_each_bit((*r)[p], [&](int q) { out << "  n" << p << " -> n" << q << " [style=dashed];\n"; });
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const FiniteSpace& x) { return render(x, 0, nullptr, true); }

std::string to_dot(const TopologicalPair& p) { return render(p.space, p.subset, nullptr, true); }

std::string to_dot(const TwoPrecontactSpace& s) {
  PointRelation inside(s.r.size(), 0);
  for_each_bit(s.x0(), [&](int x) { inside[x] = s.r[x] & s.x0(); });
  return render(s.space(), s.x0(), &inside, true);
}

std::string to_dot(const AdjacencySpace& a) {
  std::vector<PointSet> singletons;
  for (int i = 0; i < a.size(); ++i) singletons.push_back(bit<PointSet>(i));
  return render(FiniteSpace(a.cells, std::move(singletons)), 0, &a.r, false);
}

}  // namespace pclab
